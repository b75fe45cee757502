#pragma once

#include "automaton.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace fsc {

// Automaton + configuration recognising the shuffle of two series over
// disjoint alphabets.  The result alphabet lists A's letters first, then
// B's (shifted up by A.alphabetSize()).
struct GadgetResult {
    MixedAutomaton automaton;
    Configuration config;
};

namespace detail {

inline bool allMode(const MixedAutomaton& A, ProductMode m) {
    return std::all_of(A.modes.begin(), A.modes.end(),
                       [m](ProductMode x) { return x == m; });
}
inline bool anyMode(const MixedAutomaton& A, ProductMode m) {
    return std::any_of(A.modes.begin(), A.modes.end(),
                       [m](ProductMode x) { return x == m; });
}

// Over disjoint alphabets, shuffle and infiltration agree (letters never
// synchronise), so extending both automata with zero transitions on the
// other's letters and multiplying embedded configurations in the disjoint
// union recognises the shuffle.
inline GadgetResult interleavingGadget(const MixedAutomaton& A, const Configuration& alphaA,
                                       const MixedAutomaton& B, const Configuration& betaB) {
    std::vector<ProductMode> modes = A.modes;
    modes.insert(modes.end(), B.modes.begin(), B.modes.end());

    auto extend = [&modes](const MixedAutomaton& M, bool lettersFirst) {
        MixedAutomaton E;
        E.modes = modes;
        E.k = M.k;
        E.output = M.output;
        std::vector<Polynomial> zeroRow(M.k, Polynomial(M.k));
        for (std::size_t a = 0; a < modes.size(); ++a) {
            bool own = lettersFirst ? a < M.alphabetSize() : a >= modes.size() - M.alphabetSize();
            std::size_t local = lettersFirst ? a : a - (modes.size() - M.alphabetSize());
            E.delta.push_back(own ? M.delta[local] : zeroRow);
        }
        return E;
    };

    UnionEmbeddings emb;
    MixedAutomaton U = disjointUnion(extend(A, true), extend(B, false), emb);
    GadgetResult res;
    res.config = emb.embedA(detail::normalizeConfig(A, alphaA)) *
                 emb.embedB(detail::normalizeConfig(B, betaB));
    res.automaton = std::move(U);
    return res;
}

// One Hadamard automaton normalized for the product-grid construction: a
// tracker nonterminal recognising the configuration of interest is adjoined,
// generators are rescaled so every output lies in {0,1}, and a unit
// nonterminal (recognising the all-ones series) absorbs the constant terms
// of all transition polynomials.
struct NormalizedHadamard {
    std::size_t k = 0;
    std::vector<std::vector<Polynomial>> delta;  // [letter][i], arity k
    std::vector<Rational> output;                // each 0 or 1
    std::size_t tracker = 0;                     // index of the tracked configuration
    Rational trackerScale = Rational(1);         // [[tracker]] = [[alpha]] / trackerScale
};

inline NormalizedHadamard normalizeHadamard(const MixedAutomaton& A, const Configuration& alpha) {
    const std::size_t k0 = A.k;
    const std::size_t k = k0 + 2;          // + tracker + unit
    const std::size_t tracker = k0, unit = k0 + 1;

    std::vector<std::vector<Polynomial>> delta(A.alphabetSize());
    std::vector<Rational> out = A.output;
    out.push_back(coefficient(A, alpha, Word{}));  // tracker output = [[alpha]](eps)
    for (Symbol a = 0; a < A.alphabetSize(); ++a) {
        delta[a] = A.delta[a];
        delta[a].push_back(step(A, alpha, a));     // tracker follows alpha
    }

    // rescale generators with output outside {0,1}
    std::vector<Rational> scales(k0 + 1, Rational(1));
    for (std::size_t i = 0; i <= k0; ++i)
        if (!out[i].isZero() && !out[i].isOne())
            scales[i] = out[i];
    std::vector<Polynomial> scaledVars;
    scaledVars.reserve(k0 + 1);
    for (std::size_t i = 0; i <= k0; ++i)
        scaledVars.push_back(Polynomial::variable(i, k0 + 1).scale(scales[i]));
    for (auto& row : delta)
        for (std::size_t i = 0; i <= k0; ++i)
            row[i] = row[i].withArity(k0 + 1).substitute(scaledVars)
                         .scale(Rational(1) / scales[i]);

    NormalizedHadamard N;
    N.k = k;
    N.tracker = tracker;
    N.trackerScale = scales[tracker];
    N.output.reserve(k);
    for (std::size_t i = 0; i <= k0; ++i)
        N.output.push_back(out[i].isZero() ? Rational(0) : Rational(1));
    N.output.push_back(Rational(1));  // unit

    // absorb constant terms into the unit, whose own transition is itself
    const Polynomial unitVar = Polynomial::variable(unit, k);
    N.delta.resize(A.alphabetSize());
    for (Symbol a = 0; a < A.alphabetSize(); ++a) {
        N.delta[a].reserve(k);
        for (std::size_t i = 0; i <= k0; ++i) {
            Polynomial p = delta[a][i].withArity(k);
            Rational c = p.constantTerm();
            if (!c.isZero())
                p = p - Polynomial::constant(c, k) + unitVar.scale(c);
            N.delta[a].push_back(std::move(p));
        }
        N.delta[a].push_back(unitVar);
    }
    return N;
}

// A transition polynomial (over one side's normalized generators) rewritten
// over the grid cells W(i,j).  Because the grid is read pointwise, a
// monomial f_{s_1} * ... * f_{s_d} shuffled against a partner generator g
// must pick up the value of g exactly once; so exactly one factor of each
// monomial is routed through the active cell for its generator, and every
// remaining factor goes through that generator's cell in the partner's unit
// row/column (the all-ones series, which contributes a neutral 1).  Routing
// all factors through the active cell would raise the partner's value to
// the monomial degree, which is wrong whenever that value is outside {0,1}.
// A constant term stands for a multiple of the all-ones series of its own
// side, so it is routed through the own unit's active cell.
inline Polynomial routeThroughGrid(const Polynomial& p, std::size_t kW, std::size_t ownUnit,
                                   const std::vector<std::size_t>& activeCell,
                                   const std::vector<std::size_t>& unitCell) {
    Polynomial out(kW);
    for (const auto& [mon, c] : p.terms()) {
        std::size_t s0 = ownUnit;
        for (std::size_t s = 0; s < mon.width(); ++s)
            if (mon.exponent(s) > 0) {
                s0 = s;
                break;
            }
        Polynomial term = Polynomial::variable(activeCell[s0], kW).scale(c);
        for (std::size_t s = 0; s < mon.width(); ++s) {
            std::uint32_t e = mon.exponent(s);
            if (s == s0)
                --e;
            if (e > 0)
                term = term * Polynomial::variable(unitCell[s], kW).pow(e);
        }
        out = out + term;
    }
    return out;
}

// Product-grid construction: nonterminal W(i,j) recognises f_i shuffled with
// g_j, where f_i, g_j run over the normalized generators.  Reading one of
// A's letters rewrites the i coordinate through A's transition polynomial
// with one factor per monomial routed through column j and the rest through
// the unit column, and symmetrically for B (see routeThroughGrid).
inline GadgetResult hadamardGadget(const MixedAutomaton& A, const Configuration& alphaA,
                                   const MixedAutomaton& B, const Configuration& betaB) {
    const NormalizedHadamard NA = normalizeHadamard(A, alphaA);
    const NormalizedHadamard NB = normalizeHadamard(B, betaB);
    const std::size_t KB = NB.k;
    const std::size_t kW = NA.k * NB.k;
    auto idx = [KB](std::size_t i, std::size_t j) { return i * KB + j; };

    GadgetResult res;
    MixedAutomaton& W = res.automaton;
    W.modes.assign(A.alphabetSize() + B.alphabetSize(), ProductMode::hadamard);
    W.k = kW;
    W.output.resize(kW);
    for (std::size_t i = 0; i < NA.k; ++i)
        for (std::size_t j = 0; j < NB.k; ++j)
            W.output[idx(i, j)] = NA.output[i] * NB.output[j];

    W.delta.resize(W.alphabetSize());
    const std::size_t unitA = NA.k - 1, unitB = NB.k - 1;
    for (Symbol a = 0; a < A.alphabetSize(); ++a) {
        auto& row = W.delta[a];
        row.resize(kW, Polynomial(kW));
        std::vector<std::size_t> unitCell(NA.k);
        for (std::size_t i2 = 0; i2 < NA.k; ++i2)
            unitCell[i2] = idx(i2, unitB);
        for (std::size_t j = 0; j < NB.k; ++j) {
            std::vector<std::size_t> activeCell(NA.k);
            for (std::size_t i2 = 0; i2 < NA.k; ++i2)
                activeCell[i2] = idx(i2, j);
            for (std::size_t i = 0; i < NA.k; ++i)
                row[idx(i, j)] = routeThroughGrid(NA.delta[a][i], kW, unitA, activeCell, unitCell);
        }
    }
    for (Symbol b = 0; b < B.alphabetSize(); ++b) {
        auto& row = W.delta[A.alphabetSize() + b];
        row.resize(kW, Polynomial(kW));
        std::vector<std::size_t> unitCell(NB.k);
        for (std::size_t j2 = 0; j2 < NB.k; ++j2)
            unitCell[j2] = idx(unitA, j2);
        for (std::size_t i = 0; i < NA.k; ++i) {
            std::vector<std::size_t> activeCell(NB.k);
            for (std::size_t j2 = 0; j2 < NB.k; ++j2)
                activeCell[j2] = idx(i, j2);
            for (std::size_t j = 0; j < NB.k; ++j)
                row[idx(i, j)] = routeThroughGrid(NB.delta[b][j], kW, unitB, activeCell, unitCell);
        }
    }

    res.config = Polynomial::variable(idx(NA.tracker, NB.tracker), kW)
                     .scale(NA.trackerScale * NB.trackerScale);
    return res;
}

} // namespace detail

// Shuffle product of [[alphaA]] (over A's alphabet) and [[betaB]] (over B's)
// as a single automaton over the disjoint union of the alphabets.  Supported
// when both automata are pure Hadamard (product-grid construction) or when
// neither uses any Hadamard letter (zero-extension + disjoint union).
inline GadgetResult shuffleGadget(const MixedAutomaton& A, const Configuration& alphaA,
                                  const MixedAutomaton& B, const Configuration& betaB) {
    const bool hadA = detail::allMode(A, ProductMode::hadamard);
    const bool hadB = detail::allMode(B, ProductMode::hadamard);
    if (hadA && hadB)
        return detail::hadamardGadget(A, alphaA, B, betaB);
    if (!detail::anyMode(A, ProductMode::hadamard) && !detail::anyMode(B, ProductMode::hadamard))
        return detail::interleavingGadget(A, alphaA, B, betaB);
    throw std::invalid_argument(
        "shuffleGadget: mixing Hadamard letters with shuffle/infiltration letters is unsupported");
}

} // namespace fsc
