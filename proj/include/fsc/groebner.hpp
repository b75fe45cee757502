#pragma once

#include "polynomial.hpp"

#include <deque>
#include <utility>
#include <vector>

namespace fsc {

// Reduced Groebner basis: generators are monic, no term of any generator is
// divisible by the leading monomial of another, and they are sorted by
// ascending leading monomial.  A reduced basis in this form is unique for
// the ideal and order, so structural comparison decides ideal equality for
// bases computed under the same order.
struct GroebnerBasis {
    MonomialOrder order = MonomialOrder::grevlex;
    std::vector<Polynomial> generators;

    bool isZeroIdeal() const { return generators.empty(); }
};

// Remainder of multivariate division of p by the list `basis` (taken in
// order) under `order`.  Every term of the result is irreducible.  When
// `basis` is a Groebner basis the result is the canonical normal form.
inline Polynomial normalForm(const Polynomial& p, const std::vector<Polynomial>& basis,
                             MonomialOrder order) {
    Polynomial work = p;
    Polynomial remainder(p.arity());
    while (!work.isZero()) {
        const Monomial lm = work.leadingMonomial(order);
        const Rational lc = work.leadingCoefficient(order);
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.isZero())
                continue;
            const Monomial& glm = g.leadingMonomial(order);
            if (glm.divides(lm)) {
                Polynomial factor(std::max(work.arity(), g.arity()));
                factor.addTerm(lm.dividedBy(glm), lc / g.leadingCoefficient(order));
                work = work - factor * g;
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            Polynomial term(work.arity());
            term.addTerm(lm, lc);
            remainder = remainder + term;
            work = work - term;
        }
    }
    return remainder;
}

inline Polynomial normalForm(const Polynomial& p, const GroebnerBasis& gb) {
    return normalForm(p, gb.generators, gb.order);
}

namespace detail {

inline Polynomial sPolynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order) {
    const Monomial &mf = f.leadingMonomial(order), &mg = g.leadingMonomial(order);
    const Monomial l = mf.lcm(mg);
    Polynomial a(f.arity()), b(g.arity());
    a.addTerm(l.dividedBy(mf), Rational(1) / f.leadingCoefficient(order));
    b.addTerm(l.dividedBy(mg), Rational(1) / g.leadingCoefficient(order));
    return a * f - b * g;
}

} // namespace detail

// Buchberger's algorithm with the coprime-leading-term skip, followed by
// full inter-reduction and monic normalization.
inline GroebnerBasis buchberger(const std::vector<Polynomial>& gens,
                                MonomialOrder order = MonomialOrder::grevlex) {
    std::vector<Polynomial> G;
    for (const auto& g : gens)
        if (!g.isZero())
            G.push_back(g);

    std::deque<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        const Monomial &mi = G[i].leadingMonomial(order), &mj = G[j].leadingMonomial(order);
        if (mi.times(mj) == mi.lcm(mj))
            continue; // coprime leading terms: S-polynomial reduces to zero
        Polynomial h = normalForm(detail::sPolynomial(G[i], G[j], order), G, order);
        if (!h.isZero()) {
            G.push_back(h);
            for (std::size_t t = 0; t + 1 < G.size(); ++t)
                pairs.emplace_back(G.size() - 1, t);
        }
    }

    // Inter-reduce to the unique reduced basis.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < G.size(); ++i) {
            std::vector<Polynomial> rest;
            rest.reserve(G.size() - 1);
            for (std::size_t j = 0; j < G.size(); ++j)
                if (j != i)
                    rest.push_back(G[j]);
            Polynomial h = normalForm(G[i], rest, order);
            if (h != G[i]) {
                changed = true;
                if (h.isZero())
                    G.erase(G.begin() + static_cast<std::ptrdiff_t>(i));
                else
                    G[i] = h;
                break;
            }
        }
    }

    for (auto& g : G)
        g = g.scale(Rational(1) / g.leadingCoefficient(order));
    std::sort(G.begin(), G.end(), [order](const Polynomial& a, const Polynomial& b) {
        return compareMonomials(a.leadingMonomial(order), b.leadingMonomial(order), order) < 0;
    });

    GroebnerBasis gb;
    gb.order = order;
    gb.generators = std::move(G);
    return gb;
}

inline bool idealMembership(const Polynomial& p, const GroebnerBasis& gb) {
    return normalForm(p, gb).isZero();
}

inline bool idealEquality(const GroebnerBasis& a, const GroebnerBasis& b) {
    if (a.order == b.order)
        return a.generators == b.generators; // reduced bases are canonical
    for (const auto& g : a.generators)
        if (!idealMembership(g, b))
            return false;
    for (const auto& g : b.generators)
        if (!idealMembership(g, a))
            return false;
    return true;
}

inline bool containsOne(const GroebnerBasis& gb) {
    return idealMembership(Polynomial::constant(1, 0), gb);
}

} // namespace fsc
