#pragma once

#include "polynomial.hpp"
#include "series.hpp"
#include "word.hpp"

#include <stdexcept>
#include <vector>

namespace fsc {

// A configuration is a polynomial over the automaton's nonterminals.
using Configuration = Polynomial;

// Automaton with polynomial transitions, one product mode per letter.
// Reading letter a transforms a configuration by the unique extension of
// X_i -> delta[a][i] determined by the letter's mode:
//   hadamard      -> algebra endomorphism (substitution)
//   shuffle       -> derivation (Leibniz rule)
//   infiltration  -> S-twisted derivation (S = id + Delta_a)
// Semantics of a configuration: [[alpha]](w) = output(Delta_w alpha), where
// the first letter of w is applied first.
struct MixedAutomaton {
    std::vector<ProductMode> modes;              // one per letter
    std::size_t k = 0;                           // nonterminal count
    std::vector<std::vector<Polynomial>> delta;  // delta[letter][i], arity k
    std::vector<Rational> output;                // size k

    std::size_t alphabetSize() const { return modes.size(); }

    void validate() const {
        if (delta.size() != modes.size())
            throw std::invalid_argument("MixedAutomaton: one transition row per letter required");
        if (output.size() != k)
            throw std::invalid_argument("MixedAutomaton: output size != nonterminal count");
        for (const auto& row : delta) {
            if (row.size() != k)
                throw std::invalid_argument("MixedAutomaton: transition row size != nonterminal count");
            for (const auto& p : row)
                if (p.minimumArity() > k)
                    throw std::invalid_argument("MixedAutomaton: transition uses unknown nonterminal");
        }
    }
};

namespace detail {

inline Configuration normalizeConfig(const MixedAutomaton& A, const Configuration& alpha) {
    if (alpha.minimumArity() > A.k)
        throw std::invalid_argument("configuration uses unknown nonterminal");
    return alpha.arity() == A.k ? alpha : alpha.withArity(A.k);
}

// Shift every variable index up by `offset`, producing a polynomial of the
// given arity.
inline Polynomial remapVariables(const Polynomial& p, std::size_t offset, std::size_t newArity) {
    Polynomial r(newArity);
    for (const auto& [m, c] : p.terms()) {
        std::vector<std::uint32_t> exps(offset + m.width(), 0);
        for (std::size_t i = 0; i < m.width(); ++i)
            exps[offset + i] = m.exponent(i);
        r.addTerm(Monomial(std::move(exps)), c);
    }
    return r;
}

} // namespace detail

inline Configuration step(const MixedAutomaton& A, const Configuration& alpha, Symbol a) {
    if (a >= A.alphabetSize())
        throw std::out_of_range("step: letter outside alphabet");
    Configuration c = detail::normalizeConfig(A, alpha);
    switch (A.modes[a]) {
    case ProductMode::hadamard:
        return applyEndomorphism(c, A.delta[a]);
    case ProductMode::shuffle:
        return applyDerivation(c, A.delta[a]);
    case ProductMode::infiltration:
        return applySigmaDerivation(c, A.delta[a]);
    }
    throw std::logic_error("step: unreachable");
}

inline Configuration run(const MixedAutomaton& A, Configuration alpha, const Word& w) {
    for (Symbol a : w)
        alpha = step(A, alpha, a);
    return detail::normalizeConfig(A, alpha);
}

inline Rational coefficient(const MixedAutomaton& A, const Configuration& alpha, const Word& w) {
    return run(A, alpha, w).evaluate(A.output);
}

// All coefficients up to length L, computed along the word trie so each
// configuration is derived once.
inline TruncatedSeries truncate(const MixedAutomaton& A, const Configuration& alpha, unsigned L) {
    TruncatedSeries r(A.alphabetSize(), L);
    std::vector<std::pair<Word, Configuration>> frontier{
        {Word{}, detail::normalizeConfig(A, alpha)}};
    r.setCoefficient(Word{}, frontier.front().second.evaluate(A.output));
    for (unsigned len = 1; len <= L; ++len) {
        std::vector<std::pair<Word, Configuration>> next;
        next.reserve(frontier.size() * A.alphabetSize());
        for (const auto& [w, cfg] : frontier)
            for (Symbol a = 0; a < A.alphabetSize(); ++a) {
                Word w2 = w;
                w2.push_back(a);
                Configuration c2 = step(A, cfg, a);
                r.setCoefficient(w2, c2.evaluate(A.output));
                next.emplace_back(std::move(w2), std::move(c2));
            }
        frontier = std::move(next);
    }
    return r;
}

// Side-by-side automaton over the same alphabet and modes.  A's nonterminals
// keep their indices; B's are shifted up by A.k.
struct UnionEmbeddings {
    std::size_t kA = 0, kB = 0;

    Polynomial embedA(const Polynomial& p) const {
        if (p.minimumArity() > kA)
            throw std::invalid_argument("embedA: polynomial uses unknown nonterminal");
        return p.withArity(kA + kB);
    }
    Polynomial embedB(const Polynomial& p) const {
        if (p.minimumArity() > kB)
            throw std::invalid_argument("embedB: polynomial uses unknown nonterminal");
        return detail::remapVariables(p, kA, kA + kB);
    }
};

inline MixedAutomaton disjointUnion(const MixedAutomaton& A, const MixedAutomaton& B,
                                    UnionEmbeddings& emb) {
    if (A.modes != B.modes)
        throw std::invalid_argument("disjointUnion: alphabets/modes differ");
    emb.kA = A.k;
    emb.kB = B.k;
    MixedAutomaton U;
    U.modes = A.modes;
    U.k = A.k + B.k;
    U.delta.resize(U.alphabetSize());
    for (std::size_t a = 0; a < U.alphabetSize(); ++a) {
        U.delta[a].reserve(U.k);
        for (const auto& p : A.delta[a])
            U.delta[a].push_back(emb.embedA(p));
        for (const auto& p : B.delta[a])
            U.delta[a].push_back(emb.embedB(p));
    }
    U.output = A.output;
    U.output.insert(U.output.end(), B.output.begin(), B.output.end());
    return U;
}

// Automaton tracking right derivatives by a fixed letter.  Nonterminals
// X_0..X_{k-1} behave exactly as in A; Y_i (index k+i) recognises the right
// derivative of [[X_i]] by the letter.  represent() maps a configuration
// alpha over A to a configuration over the new automaton recognising
// [[alpha]] d_a, using the letter's product-rule counterpart:
//   hadamard      alpha(Y)                       (endomorphism)
//   shuffle       sum_i  d alpha/dX_i * Y_i      (derivation)
//   infiltration  alpha(X + Y) - alpha(X)        (S-twisted derivation)
struct RightDerivativeAutomaton {
    MixedAutomaton automaton;  // 2k nonterminals
    Symbol letter = 0;
    std::size_t k = 0;

    Polynomial represent(const Polynomial& alpha) const {
        if (alpha.minimumArity() > k)
            throw std::invalid_argument("represent: configuration uses unknown nonterminal");
        std::vector<Polynomial> ys;
        ys.reserve(k);
        for (std::size_t i = 0; i < k; ++i)
            ys.push_back(Polynomial::variable(k + i, 2 * k));
        const Polynomial a = alpha.arity() == k ? alpha : alpha.withArity(k);
        switch (automaton.modes[letter]) {
        case ProductMode::hadamard:
            return applyEndomorphism(a, ys);
        case ProductMode::shuffle:
            return applyDerivation(a, ys);
        case ProductMode::infiltration:
            return applySigmaDerivation(a, ys);
        }
        throw std::logic_error("represent: unreachable");
    }
};

inline RightDerivativeAutomaton rightDerivativeAutomaton(const MixedAutomaton& A, Symbol a) {
    if (a >= A.alphabetSize())
        throw std::out_of_range("rightDerivativeAutomaton: letter outside alphabet");
    RightDerivativeAutomaton R;
    R.letter = a;
    R.k = A.k;
    R.automaton.modes = A.modes;
    R.automaton.k = 2 * A.k;
    // outputs first: Y_i(eps) = [[X_i]](a) = output(Delta_a X_i)
    R.automaton.output = A.output;
    for (std::size_t i = 0; i < A.k; ++i)
        R.automaton.output.push_back(A.delta[a][i].evaluate(A.output));
    R.automaton.delta.resize(A.alphabetSize());
    for (Symbol b = 0; b < A.alphabetSize(); ++b) {
        R.automaton.delta[b].reserve(2 * A.k);
        for (const auto& p : A.delta[b])
            R.automaton.delta[b].push_back(p.withArity(2 * A.k));
        for (const auto& p : A.delta[b])
            R.automaton.delta[b].push_back(R.represent(p));
    }
    return R;
}

} // namespace fsc
