#pragma once

#include "automaton.hpp"
#include "groebner.hpp"

#include <deque>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fsc {

// Counterexample to a decision query.  For zeroness, left == right == the
// word whose coefficient (leftValue) is nonzero and rightValue == 0.  For
// equality, left == right and the values are the two series' coefficients.
// For commutativity, left and right are Parikh-equivalent words with
// different coefficients.
struct DecisionWitness {
    Word left;
    Word right;
    Rational leftValue;
    Rational rightValue;
};

struct Verdict {
    bool holds = false;
    std::size_t stabilizationIndex = 0;
    std::optional<DecisionWitness> witness;
};

// Ascending ideal chain J_0 ⊆ J_1 ⊆ ... with J_0 = <alpha> and
// J_{n+1} = J_n + <step(g, a) : g in basis(J_n), a in the alphabet>.
// Because each letter acts by an endomorphism, a derivation, or a
// sigma-derivation, the step of an ideal is generated (mod the ideal) by the
// steps of any generating set, so advancing on Groebner-basis elements
// reaches the same chain as advancing on all word derivatives.
struct ChainState {
    const MixedAutomaton* automaton = nullptr;
    GroebnerBasis currentBasis;
    std::size_t level = 0;
    std::vector<Polynomial> frontier;  // generators newly added at this level
};

inline ChainState initialChain(const MixedAutomaton& A, const Configuration& alpha) {
    ChainState st;
    st.automaton = &A;
    st.currentBasis = buchberger({detail::normalizeConfig(A, alpha)});
    st.level = 0;
    st.frontier = st.currentBasis.generators;
    return st;
}

// Advances one level; returns false when every derivative of the current
// basis already reduces to zero (the chain has stabilized).
inline bool advanceChain(ChainState& st) {
    const MixedAutomaton& A = *st.automaton;
    std::vector<Polynomial> added;
    for (const Polynomial& g : st.currentBasis.generators)
        for (Symbol a = 0; a < A.alphabetSize(); ++a) {
            Polynomial d = step(A, g, a);
            if (!normalForm(d, st.currentBasis).isZero())
                added.push_back(std::move(d));
        }
    if (added.empty())
        return false;
    std::vector<Polynomial> gens = st.currentBasis.generators;
    gens.insert(gens.end(), added.begin(), added.end());
    st.currentBasis = buchberger(gens, st.currentBasis.order);
    st.frontier = std::move(added);
    ++st.level;
    return true;
}

// Decides whether [[alpha]] is the zero series.  Phase 1 stabilizes the
// derivative ideal chain at level N (termination by the ascending chain
// condition); phase 2 checks the coefficients of all words of length <= N,
// which is sufficient once the chain is stable.  A false answer carries the
// shortlex-least word with nonzero coefficient.
inline Verdict zeroness(const MixedAutomaton& A, const Configuration& alpha) {
    A.validate();
    const Configuration a0 = detail::normalizeConfig(A, alpha);

    ChainState st = initialChain(A, a0);
    while (advanceChain(st)) {
    }
    const std::size_t N = st.level;

    Verdict v;
    v.stabilizationIndex = N;
    v.holds = true;

    // breadth-first trie over words of length <= N; each configuration is
    // derived once and words appear in shortlex order
    std::deque<std::pair<Word, Configuration>> queue;
    queue.emplace_back(Word{}, a0);
    while (!queue.empty()) {
        auto [w, cfg] = std::move(queue.front());
        queue.pop_front();
        Rational value = cfg.evaluate(A.output);
        if (!value.isZero()) {
            v.holds = false;
            v.witness = DecisionWitness{w, w, std::move(value), Rational(0)};
            return v;
        }
        if (w.size() < N)
            for (Symbol a = 0; a < A.alphabetSize(); ++a) {
                Word next = w;
                next.push_back(a);
                queue.emplace_back(std::move(next), step(A, cfg, a));
            }
    }
    return v;
}

// [[alpha]] over A equals [[beta]] over B iff their difference inside the
// disjoint union is zero.  Requires identical letter modes.
inline Verdict equality(const MixedAutomaton& A, const Configuration& alpha,
                        const MixedAutomaton& B, const Configuration& beta) {
    if (A.modes != B.modes)
        throw std::invalid_argument("equality: automata must share alphabet and letter modes");
    UnionEmbeddings emb;
    MixedAutomaton U = disjointUnion(A, B, emb);
    Configuration diff = emb.embedA(detail::normalizeConfig(A, alpha)) -
                         emb.embedB(detail::normalizeConfig(B, beta));
    Verdict v = zeroness(U, diff);
    if (!v.holds && v.witness) {
        const Word& w = v.witness->left;
        v.witness = DecisionWitness{w, w, coefficient(A, alpha, w), coefficient(B, beta, w)};
    }
    return v;
}

// [[alpha]] is commutative iff it passes all swap checks
// (coefficients agree on abw vs baw, one zeroness query per unordered letter
// pair) and all rotate checks (coefficients agree on aw vs wa, one zeroness
// query per letter over the right-derivative extension).  A failing check's
// witness is expanded into the concrete Parikh-equivalent word pair.
inline Verdict commutativity(const MixedAutomaton& A, const Configuration& alpha) {
    A.validate();
    const Configuration a0 = detail::normalizeConfig(A, alpha);
    std::size_t maxN = 0;

    for (Symbol a = 0; a < A.alphabetSize(); ++a)
        for (Symbol b = a + 1; b < A.alphabetSize(); ++b) {
            Configuration diff = run(A, a0, Word{a, b}) - run(A, a0, Word{b, a});
            Verdict sub = zeroness(A, diff);
            if (!sub.holds) {
                const Word& w = sub.witness->left;
                Word u{a, b}, v{b, a};
                u.insert(u.end(), w.begin(), w.end());
                v.insert(v.end(), w.begin(), w.end());
                sub.witness =
                    DecisionWitness{u, v, coefficient(A, a0, u), coefficient(A, a0, v)};
                return sub;
            }
            maxN = std::max(maxN, sub.stabilizationIndex);
        }

    for (Symbol a = 0; a < A.alphabetSize(); ++a) {
        RightDerivativeAutomaton rd = rightDerivativeAutomaton(A, a);
        Configuration diff =
            run(A, a0, Word{a}).withArity(rd.automaton.k) - rd.represent(a0);
        Verdict sub = zeroness(rd.automaton, diff);
        if (!sub.holds) {
            const Word& w = sub.witness->left;
            Word u{a}, v = w;
            u.insert(u.end(), w.begin(), w.end());
            v.push_back(a);
            sub.witness = DecisionWitness{u, v, coefficient(A, a0, u), coefficient(A, a0, v)};
            return sub;
        }
        maxN = std::max(maxN, sub.stabilizationIndex);
    }

    Verdict v;
    v.holds = true;
    v.stabilizationIndex = maxN;
    return v;
}

} // namespace fsc
