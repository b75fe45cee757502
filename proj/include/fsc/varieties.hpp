#pragma once

#include "automaton.hpp"
#include "groebner.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fsc {

// The commutativity constraints of a configuration with the output left as a
// parameter: polynomials run(alpha,u) - run(alpha,rep) over all words
// |u| <= depth, where rep is the canonical (ascending-sorted) word of u's
// Parikh class.  An output vector F yields a commutative series up to that
// depth iff every stored polynomial vanishes at F.  The automaton's own
// output values are irrelevant here and never read.
struct CommutativityIdeal {
    MixedAutomaton automaton;
    Configuration initial;
    std::size_t depth = 0;
    std::vector<Polynomial> polys;  // nonzero differences, deduplicated
    GroebnerBasis gb;
};

enum class Tri { yes, no, unknown };

namespace detail {

struct LevelEntry {
    std::vector<std::size_t> parikhVector;
    Configuration config;
};

inline std::vector<LevelEntry> advanceLevel(const MixedAutomaton& A,
                                            const std::vector<LevelEntry>& level) {
    std::vector<LevelEntry> next;
    next.reserve(level.size() * A.alphabetSize());
    for (const LevelEntry& e : level)
        for (Symbol a = 0; a < A.alphabetSize(); ++a) {
            LevelEntry child{e.parikhVector, step(A, e.config, a)};
            ++child.parikhVector[a];
            next.push_back(std::move(child));
        }
    return next;
}

// Entries arrive in lexicographic word order, so the first word of each
// Parikh class is the ascending-sorted canonical representative.
inline void collectDifferences(const std::vector<LevelEntry>& level,
                               std::vector<Polynomial>& polys,
                               std::set<std::string>& seen) {
    std::map<std::vector<std::size_t>, std::size_t> representative;
    for (std::size_t i = 0; i < level.size(); ++i) {
        auto [it, inserted] = representative.emplace(level[i].parikhVector, i);
        if (inserted)
            continue;
        Polynomial diff = level[i].config - level[it->second].config;
        if (!diff.isZero() && seen.insert(diff.toString()).second)
            polys.push_back(std::move(diff));
    }
}

} // namespace detail

inline CommutativityIdeal commutativityPolynomials(const MixedAutomaton& A,
                                                   const Configuration& alpha, std::size_t n) {
    CommutativityIdeal I;
    I.automaton = A;
    I.initial = detail::normalizeConfig(A, alpha);
    I.depth = n;
    std::vector<detail::LevelEntry> level{
        {std::vector<std::size_t>(A.alphabetSize(), 0), I.initial}};
    std::set<std::string> seen;
    detail::collectDifferences(level, I.polys, seen);
    for (std::size_t len = 1; len <= n; ++len) {
        level = detail::advanceLevel(A, level);
        detail::collectDifferences(level, I.polys, seen);
    }
    I.gb = buchberger(I.polys);
    return I;
}

// Outcome of searching for a depth where the constraint ideal stops growing:
// the least N <= maxDepth with ideal(P_N) = ideal(P_{N+1}) = ideal(P_{N+2}),
// certified by two consecutive stable steps.  basisSizes traces the Groebner
// basis size at each computed depth.  When the budget runs out the deepest
// ideal computed is returned with stabilized == false — never a guess.
struct StabilizationResult {
    bool stabilized = false;
    std::size_t index = 0;
    CommutativityIdeal ideal;
    std::vector<std::size_t> basisSizes;
};

inline StabilizationResult stabilize(const MixedAutomaton& A, const Configuration& alpha,
                                     std::size_t maxDepth) {
    if (maxDepth < 2)
        throw std::invalid_argument("stabilize: maxDepth must be at least 2");

    StabilizationResult R;
    const Configuration a0 = detail::normalizeConfig(A, alpha);
    std::vector<detail::LevelEntry> level{
        {std::vector<std::size_t>(A.alphabetSize(), 0), a0}};
    std::set<std::string> seen;
    std::vector<Polynomial> polys;
    std::vector<std::vector<Polynomial>> polysAt;  // snapshot per depth
    std::vector<GroebnerBasis> gbAt;

    for (std::size_t d = 0; d <= maxDepth + 2; ++d) {
        if (d > 0)
            level = detail::advanceLevel(A, level);
        const std::size_t before = polys.size();
        detail::collectDifferences(level, polys, seen);
        polysAt.push_back(polys);
        GroebnerBasis gb =
            (d > 0 && polys.size() == before) ? gbAt.back() : buchberger(polys);
        gbAt.push_back(std::move(gb));
        R.basisSizes.push_back(gbAt.back().generators.size());

        if (d >= 2 && idealEquality(gbAt[d - 2], gbAt[d - 1]) &&
            idealEquality(gbAt[d - 1], gbAt[d])) {
            R.stabilized = true;
            R.index = d - 2;
            R.ideal = CommutativityIdeal{A, a0, R.index, std::move(polysAt[d - 2]),
                                         std::move(gbAt[d - 2])};
            return R;
        }
    }
    R.index = maxDepth + 2;
    R.ideal = CommutativityIdeal{A, a0, maxDepth + 2, std::move(polysAt.back()),
                                 std::move(gbAt.back())};
    return R;
}

// Is there any complex output vector making the series commutative?  The
// constraint variety is nonempty iff the stabilized ideal is proper.
inline Tri existsCommutativeOutput(const MixedAutomaton& A, const Configuration& alpha,
                                   std::size_t maxDepth) {
    StabilizationResult r = stabilize(A, alpha, maxDepth);
    if (!r.stabilized)
        return Tri::unknown;
    return containsOne(r.ideal.gb) ? Tri::no : Tri::yes;
}

// Does every output vector make the series commutative?  Yes iff no nonzero
// constraint ever appears; any nonzero constraint polynomial has a
// non-vanishing point, so it alone settles the answer negatively.
inline Tri allOutputsCommutative(const MixedAutomaton& A, const Configuration& alpha,
                                 std::size_t maxDepth) {
    StabilizationResult r = stabilize(A, alpha, maxDepth);
    if (!r.ideal.gb.isZeroIdeal())
        return Tri::no;
    return r.stabilized ? Tri::yes : Tri::unknown;
}

// Does the concrete output vector F yield a commutative series?  Decided by
// evaluating the stabilized constraints at F; unknown when stabilization
// exceeded the depth budget.
inline Tri outputMembership(const MixedAutomaton& A, const Configuration& alpha,
                            const std::vector<Rational>& F, std::size_t maxDepth) {
    if (F.size() != A.k)
        throw std::invalid_argument("outputMembership: output vector size must match nonterminal count");
    StabilizationResult r = stabilize(A, alpha, maxDepth);
    if (!r.stabilized)
        return Tri::unknown;
    for (const Polynomial& p : r.ideal.polys)
        if (!p.withArity(A.k).evaluate(F).isZero())
            return Tri::no;
    return Tri::yes;
}

} // namespace fsc
