#pragma once

#include "decide.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fsc {

// Multivariate difference system: unknowns f_1..f_k over d coordinates,
// shift_j(f_i) = shifts[j][i](f_1,...,f_k), initial values init[i] = f_i(0).
struct PolyrecSystem {
    std::size_t dims = 0;
    std::size_t unknowns = 0;
    std::vector<std::vector<Polynomial>> shifts;  // [coordinate][unknown], arity = unknowns
    std::vector<Rational> init;

    void validate() const {
        if (shifts.size() != dims)
            throw std::invalid_argument("system: expected one shift row per coordinate");
        for (const auto& row : shifts) {
            if (row.size() != unknowns)
                throw std::invalid_argument("system: expected one shift per unknown");
            for (const Polynomial& p : row)
                if (p.minimumArity() > unknowns)
                    throw std::invalid_argument("system: shift polynomial uses unknown index out of range");
        }
        if (init.size() != unknowns)
            throw std::invalid_argument("system: expected one initial value per unknown");
    }
};

// Differential system of the same shape: d/dx_j f_i = shifts[j][i](f), f(0) = init.
struct CDASystem {
    std::size_t dims = 0;
    std::size_t unknowns = 0;
    std::vector<std::vector<Polynomial>> shifts;
    std::vector<Rational> init;

    void validate() const {
        PolyrecSystem p{dims, unknowns, shifts, init};
        p.validate();
    }
};

namespace detail {

inline MixedAutomaton companion(std::size_t dims, std::size_t unknowns,
                                const std::vector<std::vector<Polynomial>>& shifts,
                                const std::vector<Rational>& init, ProductMode mode) {
    MixedAutomaton A;
    A.modes.assign(dims, mode);
    A.k = unknowns;
    A.delta.reserve(dims);
    for (const auto& row : shifts) {
        std::vector<Polynomial> r;
        r.reserve(unknowns);
        for (const Polynomial& p : row)
            r.push_back(p.withArity(unknowns));
        A.delta.push_back(std::move(r));
    }
    A.output = init;
    A.validate();
    return A;
}

} // namespace detail

inline MixedAutomaton companionHadamard(const PolyrecSystem& S) {
    S.validate();
    return detail::companion(S.dims, S.unknowns, S.shifts, S.init, ProductMode::hadamard);
}

inline MixedAutomaton companionShuffle(const CDASystem& S) {
    S.validate();
    return detail::companion(S.dims, S.unknowns, S.shifts, S.init, ProductMode::shuffle);
}

// Verdict over a whole system: all unknowns must denote commutative series.
// A failing witness names the unknown and a pair of coordinate paths
// (words over the coordinate letters) reaching different values.
struct SystemVerdict {
    bool holds = false;
    std::size_t stabilizationIndex = 0;
    std::optional<std::size_t> failingUnknown;
    std::optional<DecisionWitness> witness;
};

namespace detail {

inline SystemVerdict allUnknownsCommutative(const MixedAutomaton& A, std::size_t unknowns) {
    SystemVerdict v;
    v.holds = true;
    for (std::size_t i = 0; i < unknowns; ++i) {
        Verdict sub = commutativity(A, Polynomial::variable(i, unknowns));
        v.stabilizationIndex = std::max(v.stabilizationIndex, sub.stabilizationIndex);
        if (!sub.holds) {
            v.holds = false;
            v.stabilizationIndex = sub.stabilizationIndex;
            v.failingUnknown = i;
            v.witness = sub.witness;
            return v;
        }
    }
    return v;
}

} // namespace detail

// The system extends to a (total, single-valued) solution iff every unknown's
// series under the companion automaton is commutative.
inline SystemVerdict polyrecConsistent(const PolyrecSystem& S) {
    return detail::allUnknownsCommutative(companionHadamard(S), S.unknowns);
}

inline SystemVerdict cdaSolvable(const CDASystem& S) {
    return detail::allUnknownsCommutative(companionShuffle(S), S.unknowns);
}

namespace detail {

inline Word canonicalWord(const std::vector<unsigned long long>& point) {
    Word w;
    for (std::size_t j = 0; j < point.size(); ++j)
        for (unsigned long long r = 0; r < point[j]; ++r)
            w.push_back(static_cast<Symbol>(j));
    return w;
}

inline Rational valueAlongCanonicalPath(const MixedAutomaton& A, std::size_t unknowns,
                                        const std::vector<unsigned long long>& point,
                                        std::size_t unknown) {
    if (point.size() != A.alphabetSize())
        throw std::invalid_argument("evaluate: point dimension does not match the system");
    if (unknown >= unknowns)
        throw std::invalid_argument("evaluate: unknown index out of range");
    return coefficient(A, Polynomial::variable(unknown, unknowns), canonicalWord(point));
}

} // namespace detail

// Value of f_unknown at the lattice point, read along the canonical path
// a_1^{n_1}...a_d^{n_d}.  On an inconsistent system the value depends on the
// path, so the call is rejected unless the caller explicitly accepts the
// canonical-path reading.
inline Rational evaluatePoint(const PolyrecSystem& S, const std::vector<unsigned long long>& point,
                              std::size_t unknown, bool allowInconsistent = false) {
    if (!allowInconsistent && !polyrecConsistent(S).holds)
        throw std::runtime_error(
            "evaluatePoint: system is inconsistent, so the value is path-dependent; "
            "pass allowInconsistent to evaluate along the canonical path anyway");
    return detail::valueAlongCanonicalPath(companionHadamard(S), S.unknowns, point, unknown);
}

// Taylor coefficient of f_unknown in the divided-power sense: the returned
// value t(n) satisfies f = sum_n t(n) * x^n / n!  (multiply by n! for the
// ordinary power-series coefficient).
inline Rational taylorCoefficient(const CDASystem& S, const std::vector<unsigned long long>& point,
                                  std::size_t unknown, bool allowInconsistent = false) {
    if (!allowInconsistent && !cdaSolvable(S).holds)
        throw std::runtime_error(
            "taylorCoefficient: system is unsolvable, so the value is path-dependent; "
            "pass allowInconsistent to evaluate along the canonical path anyway");
    return detail::valueAlongCanonicalPath(companionShuffle(S), S.unknowns, point, unknown);
}

// Fixes coordinate `coord` to the value m: drops that coordinate's shifts and
// re-bases the initial values at m * e_coord.  Requires a consistent system
// (values must be path-independent).  A one-dimensional input yields a
// zero-dimensional record holding just the constants.
inline PolyrecSystem section(const PolyrecSystem& S, std::size_t coord, unsigned long long m) {
    S.validate();
    if (coord >= S.dims)
        throw std::invalid_argument("section: coordinate out of range");
    if (!polyrecConsistent(S).holds)
        throw std::runtime_error("section: system is inconsistent; sections are undefined");

    std::vector<unsigned long long> point(S.dims, 0);
    point[coord] = m;
    PolyrecSystem R;
    R.dims = S.dims - 1;
    R.unknowns = S.unknowns;
    for (std::size_t j = 0; j < S.dims; ++j)
        if (j != coord)
            R.shifts.push_back(S.shifts[j]);
    R.init.reserve(S.unknowns);
    for (std::size_t i = 0; i < S.unknowns; ++i)
        R.init.push_back(evaluatePoint(S, point, i, /*allowInconsistent=*/true));
    return R;
}

// Identifies coordinates j < h: the merged coordinate advances both at once,
// so its shift is the composition "apply shift j, then shift h".  Other
// coordinates and the initial values are unchanged.
inline PolyrecSystem diagonal(const PolyrecSystem& S, std::size_t j, std::size_t h) {
    S.validate();
    if (j == h)
        throw std::invalid_argument("diagonal: the two coordinates must be distinct");
    if (j > h)
        throw std::invalid_argument("diagonal: coordinates must be given in increasing order");
    if (h >= S.dims)
        throw std::invalid_argument("diagonal: coordinate out of range");

    PolyrecSystem R;
    R.dims = S.dims - 1;
    R.unknowns = S.unknowns;
    R.init = S.init;
    for (std::size_t c = 0; c < S.dims; ++c) {
        if (c == h)
            continue;
        if (c == j) {
            std::vector<Polynomial> merged;
            merged.reserve(S.unknowns);
            std::vector<Polynomial> firstStep;
            firstStep.reserve(S.unknowns);
            for (const Polynomial& p : S.shifts[j])
                firstStep.push_back(p.withArity(S.unknowns));
            for (const Polynomial& p : S.shifts[h])
                merged.push_back(p.withArity(S.unknowns).substitute(firstStep));
            R.shifts.push_back(std::move(merged));
        } else {
            R.shifts.push_back(S.shifts[c]);
        }
    }
    return R;
}

} // namespace fsc
