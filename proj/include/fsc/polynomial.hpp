#pragma once

#include "monomial.hpp"
#include "rational.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace fsc {

// Multivariate polynomial over Rational with a declared arity (number of
// variables X0..X{arity-1}).  Terms are kept in a map ordered by grevlex so
// iteration is deterministic; zero coefficients are never stored.
// Binary ring operations pad the result to the larger arity.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialLess>;

    explicit Polynomial(std::size_t arity = 0) : arity_(arity) {}

    static Polynomial constant(const Rational& c, std::size_t arity) {
        Polynomial p(arity);
        p.addTerm(Monomial::one(), c);
        return p;
    }
    static Polynomial variable(std::size_t i, std::size_t arity) {
        if (i >= arity)
            throw std::invalid_argument("Polynomial::variable: index out of range");
        Polynomial p(arity);
        p.addTerm(Monomial::variable(i), Rational(1));
        return p;
    }

    std::size_t arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    bool isConstant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.isOne());
    }
    Rational constantTerm() const {
        auto it = terms_.find(Monomial::one());
        return it == terms_.end() ? Rational(0) : it->second;
    }
    // Total degree; 0 for the zero polynomial.
    std::uint64_t totalDegree() const {
        std::uint64_t d = 0;
        for (const auto& [m, c] : terms_)
            d = std::max(d, m.totalDegree());
        return d;
    }

    // Smallest arity able to hold every term.
    std::size_t minimumArity() const {
        std::size_t w = 0;
        for (const auto& [m, c] : terms_)
            w = std::max(w, m.width());
        return w;
    }

    Polynomial withArity(std::size_t newArity) const {
        if (newArity < minimumArity())
            throw std::invalid_argument("Polynomial::withArity: arity below used variables");
        Polynomial p = *this;
        p.arity_ = newArity;
        return p;
    }

    void addTerm(const Monomial& m, const Rational& c) {
        if (m.width() > arity_)
            throw std::invalid_argument("Polynomial::addTerm: monomial exceeds arity");
        if (c.isZero())
            return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.isZero())
                terms_.erase(it);
        }
    }

    Polynomial operator-() const {
        Polynomial p(arity_);
        for (const auto& [m, c] : terms_)
            p.terms_.emplace(m, -c);
        return p;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        Polynomial p(std::max(a.arity_, b.arity_));
        p.terms_ = a.terms_;
        for (const auto& [m, c] : b.terms_) {
            auto [it, inserted] = p.terms_.emplace(m, c);
            if (!inserted) {
                it->second += c;
                if (it->second.isZero())
                    p.terms_.erase(it);
            }
        }
        return p;
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial p(std::max(a.arity_, b.arity_));
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                p.addTerm(ma.times(mb), ca * cb);
        return p;
    }

    Polynomial scale(const Rational& s) const {
        Polynomial p(arity_);
        if (s.isZero())
            return p;
        for (const auto& [m, c] : terms_)
            p.terms_.emplace(m, c * s);
        return p;
    }

    Polynomial pow(unsigned e) const {
        Polynomial acc = Polynomial::constant(1, arity_);
        Polynomial base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return acc;
    }

    Rational evaluate(const std::vector<Rational>& point) const {
        if (point.size() != arity_)
            throw std::invalid_argument("Polynomial::evaluate: point size != arity");
        Rational acc(0);
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < m.width(); ++i)
                if (m.exponent(i))
                    t *= point[i].pow(m.exponent(i));
            acc += t;
        }
        return acc;
    }

    // Simultaneous substitution X_i := images[i].  All images are padded to a
    // common arity, which becomes the result arity.
    Polynomial substitute(const std::vector<Polynomial>& images) const {
        if (images.size() != arity_)
            throw std::invalid_argument("Polynomial::substitute: images size != arity");
        std::size_t m = 0;
        for (const auto& q : images)
            m = std::max(m, std::max(q.arity(), q.minimumArity()));
        // cache of images[i]^e
        std::vector<std::vector<Polynomial>> powers(images.size());
        auto powerOf = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
            auto& row = powers[i];
            if (row.empty())
                row.push_back(Polynomial::constant(1, m));
            while (row.size() <= e)
                row.push_back(row.back() * images[i]);
            return row[e];
        };
        Polynomial acc(m);
        for (const auto& [mon, c] : terms_) {
            Polynomial t = Polynomial::constant(c, m);
            for (std::size_t i = 0; i < mon.width(); ++i)
                if (mon.exponent(i))
                    t = t * powerOf(i, mon.exponent(i));
            acc = acc + t;
        }
        return acc;
    }

    // Formal partial derivative with respect to X_i.
    Polynomial formalPartial(std::size_t i) const {
        if (i >= arity_)
            throw std::invalid_argument("Polynomial::formalPartial: index out of range");
        Polynomial p(arity_);
        for (const auto& [m, c] : terms_) {
            std::uint32_t e = m.exponent(i);
            if (e == 0)
                continue;
            std::vector<std::uint32_t> exps(std::max(m.width(), i + 1), 0);
            for (std::size_t j = 0; j < exps.size(); ++j)
                exps[j] = m.exponent(j);
            exps[i] = e - 1;
            p.addTerm(Monomial(std::move(exps)), c * Rational(static_cast<long long>(e)));
        }
        return p;
    }

    const Monomial& leadingMonomial(MonomialOrder order) const {
        if (terms_.empty())
            throw std::domain_error("Polynomial::leadingMonomial: zero polynomial");
        if (order == MonomialOrder::grevlex)
            return terms_.rbegin()->first;
        const Monomial* best = nullptr;
        for (const auto& [m, c] : terms_)
            if (!best || compareMonomials(m, *best, order) > 0)
                best = &m;
        return *best;
    }
    const Rational& leadingCoefficient(MonomialOrder order) const {
        return terms_.at(leadingMonomial(order));
    }

    // Equality compares term maps; the declared arity is bookkeeping and two
    // zero polynomials of different arity are equal.
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Terms printed in grevlex-descending order.  With no names supplied,
    // variables print as X1..Xk (1-based, matching the DSL's habit).
    std::string toString(const std::vector<std::string>& names = {}) const {
        if (terms_.empty())
            return "0";
        auto varName = [&](std::size_t i) {
            if (i < names.size())
                return names[i];
            return "X" + std::to_string(i + 1);
        };
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            Rational a = c;
            if (first) {
                if (a.sign() < 0) { os << "-"; a = -a; }
            } else {
                os << (a.sign() < 0 ? " - " : " + ");
                if (a.sign() < 0) a = -a;
            }
            first = false;
            bool needCoeff = !a.isOne() || m.isOne();
            if (needCoeff)
                os << a.toString();
            bool firstFactor = !needCoeff;
            for (std::size_t i = 0; i < m.width(); ++i) {
                if (m.exponent(i) == 0)
                    continue;
                if (!firstFactor)
                    os << "*";
                firstFactor = false;
                os << varName(i);
                if (m.exponent(i) > 1)
                    os << "^" << m.exponent(i);
            }
        }
        return os.str();
    }

private:
    std::size_t arity_;
    TermMap terms_;
};

// The unique algebra endomorphism of Q[X0..Xk-1] sending X_i to images[i].
inline Polynomial applyEndomorphism(const Polynomial& p, const std::vector<Polynomial>& images) {
    return p.substitute(images);
}

// The unique derivation D with D(X_i) = images[i]:
// D(pq) = D(p) q + p D(q), D(const) = 0.
inline Polynomial applyDerivation(const Polynomial& p, const std::vector<Polynomial>& images) {
    if (images.size() != p.arity())
        throw std::invalid_argument("applyDerivation: images size != arity");
    std::size_t m = p.arity();
    for (const auto& q : images)
        m = std::max(m, std::max(q.arity(), q.minimumArity()));
    Polynomial acc(m);
    for (std::size_t i = 0; i < p.arity(); ++i) {
        Polynomial d = p.formalPartial(i);
        if (!d.isZero() && !images[i].isZero())
            acc = acc + d * images[i];
    }
    return acc;
}

// The unique S-twisted derivation D with D(X_i) = images[i], where
// S = id + D is an endomorphism: D(pq) = D(p) q + p D(q) + D(p) D(q).
// Concretely D(p) = p(X + images) - p.
inline Polynomial applySigmaDerivation(const Polynomial& p, const std::vector<Polynomial>& images) {
    if (images.size() != p.arity())
        throw std::invalid_argument("applySigmaDerivation: images size != arity");
    std::size_t m = p.arity();
    for (const auto& q : images)
        m = std::max(m, std::max(q.arity(), q.minimumArity()));
    std::vector<Polynomial> shifted;
    shifted.reserve(images.size());
    for (std::size_t i = 0; i < images.size(); ++i)
        shifted.push_back(Polynomial::variable(i, m) + images[i]);
    return p.substitute(shifted) - p;
}

using PolynomialMap = std::function<Polynomial(const Polynomial&)>;

inline PolynomialMap extendEndo(std::vector<Polynomial> images) {
    return [images = std::move(images)](const Polynomial& p) {
        return applyEndomorphism(p, images);
    };
}
inline PolynomialMap extendDerivation(std::vector<Polynomial> images) {
    return [images = std::move(images)](const Polynomial& p) {
        return applyDerivation(p, images);
    };
}
inline PolynomialMap extendSigmaDerivation(std::vector<Polynomial> images) {
    return [images = std::move(images)](const Polynomial& p) {
        return applySigmaDerivation(p, images);
    };
}

} // namespace fsc
