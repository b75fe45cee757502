#pragma once

#include "automaton.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace fsc {

// Register-machine view of a pure-Hadamard automaton: a vector of rational
// registers q is rewritten by the update polynomials as letters are read
// left to right, and the output polynomial is evaluated at the final state.
// Its semantics is the word-reversal of the Hadamard automaton's: running
// the updates along w equals the Hadamard coefficient at reverse(w).
struct PolynomialAutomaton {
    std::size_t alphabetSize = 0;
    std::size_t k = 0;                             // register count
    std::vector<std::vector<Polynomial>> updates;  // updates[letter][i], arity k
    std::vector<Rational> initial;                 // q_I
    Polynomial outputPoly;                         // arity k

    void validate() const {
        if (updates.size() != alphabetSize)
            throw std::invalid_argument("PolynomialAutomaton: one update row per letter required");
        for (const auto& row : updates) {
            if (row.size() != k)
                throw std::invalid_argument("PolynomialAutomaton: update row size != register count");
            for (const auto& p : row)
                if (p.minimumArity() > k)
                    throw std::invalid_argument("PolynomialAutomaton: update uses unknown register");
        }
        if (initial.size() != k)
            throw std::invalid_argument("PolynomialAutomaton: initial state size != register count");
        if (outputPoly.minimumArity() > k)
            throw std::invalid_argument("PolynomialAutomaton: output uses unknown register");
    }
};

inline Rational runPolynomialAutomaton(const PolynomialAutomaton& P, const Word& w) {
    std::vector<Rational> q = P.initial;
    for (Symbol a : w) {
        if (a >= P.alphabetSize)
            throw std::out_of_range("runPolynomialAutomaton: letter outside alphabet");
        std::vector<Rational> next;
        next.reserve(P.k);
        for (const auto& p : P.updates[a])
            next.push_back(p.arity() == P.k ? p.evaluate(q) : p.withArity(P.k).evaluate(q));
        q = std::move(next);
    }
    const Polynomial& out =
        P.outputPoly.arity() == P.k ? P.outputPoly : P.outputPoly.withArity(P.k);
    return out.evaluate(q);
}

// Hadamard automaton -> register machine: the output vector becomes the
// initial state, transitions become updates, and the configuration becomes
// the output polynomial.  runPolynomialAutomaton(result, w) equals
// coefficient(A, alpha, reverse(w)).
inline PolynomialAutomaton toPolynomialAutomaton(const MixedAutomaton& A,
                                                 const Configuration& alpha) {
    for (ProductMode m : A.modes)
        if (m != ProductMode::hadamard)
            throw std::invalid_argument("toPolynomialAutomaton: automaton must be pure Hadamard");
    PolynomialAutomaton P;
    P.alphabetSize = A.alphabetSize();
    P.k = A.k;
    P.updates = A.delta;
    P.initial = A.output;
    P.outputPoly = detail::normalizeConfig(A, alpha);
    return P;
}

inline PolynomialAutomaton toPolynomialAutomaton(const MixedAutomaton& A) {
    if (A.k == 0)
        throw std::invalid_argument("toPolynomialAutomaton: no nonterminals");
    return toPolynomialAutomaton(A, Polynomial::variable(0, A.k));
}

// Register machine -> Hadamard automaton (the inverse of the above):
// updates become transitions, the initial state becomes the output vector,
// and the returned configuration is the machine's output polynomial.
inline std::pair<MixedAutomaton, Configuration>
fromPolynomialAutomaton(const PolynomialAutomaton& P) {
    MixedAutomaton A;
    A.modes.assign(P.alphabetSize, ProductMode::hadamard);
    A.k = P.k;
    A.delta = P.updates;
    A.output = P.initial;
    Configuration alpha =
        P.outputPoly.arity() == P.k ? P.outputPoly : P.outputPoly.withArity(P.k);
    return {std::move(A), std::move(alpha)};
}

} // namespace fsc
