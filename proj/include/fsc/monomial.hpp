#pragma once

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace fsc {

// Power product of variables X0, X1, ... with nonnegative exponents.
// Stored densely with trailing zero exponents stripped, so X0^2 over three
// variables compares equal to X0^2 over one variable.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) { strip(); }
    Monomial(std::initializer_list<std::uint32_t> exps)
        : e_(exps) { strip(); }

    static Monomial one() { return Monomial(); }
    static Monomial variable(std::size_t i) {
        std::vector<std::uint32_t> e(i + 1, 0);
        e[i] = 1;
        return Monomial(std::move(e));
    }

    std::uint32_t exponent(std::size_t i) const {
        return i < e_.size() ? e_[i] : 0;
    }
    // Number of stored exponent slots; variables at or past width() have
    // exponent zero.
    std::size_t width() const { return e_.size(); }
    bool isOne() const { return e_.empty(); }

    std::uint64_t totalDegree() const {
        return std::accumulate(e_.begin(), e_.end(), std::uint64_t{0});
    }

    Monomial times(const Monomial& o) const {
        std::vector<std::uint32_t> e(std::max(e_.size(), o.e_.size()), 0);
        for (std::size_t i = 0; i < e.size(); ++i)
            e[i] = exponent(i) + o.exponent(i);
        return Monomial(std::move(e));
    }

    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.exponent(i))
                return false;
        return true;
    }

    // Quotient this / o; caller must ensure o.divides(*this).
    Monomial dividedBy(const Monomial& o) const {
        if (!o.divides(*this))
            throw std::domain_error("Monomial: not divisible");
        std::vector<std::uint32_t> e(e_.size(), 0);
        for (std::size_t i = 0; i < e_.size(); ++i)
            e[i] = e_[i] - o.exponent(i);
        return Monomial(std::move(e));
    }

    Monomial lcm(const Monomial& o) const {
        std::vector<std::uint32_t> e(std::max(e_.size(), o.e_.size()), 0);
        for (std::size_t i = 0; i < e.size(); ++i)
            e[i] = std::max(exponent(i), o.exponent(i));
        return Monomial(std::move(e));
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

private:
    void strip() {
        while (!e_.empty() && e_.back() == 0)
            e_.pop_back();
    }
    std::vector<std::uint32_t> e_;
};

enum class MonomialOrder { grevlex, lex };

// Three-way comparison under the given order: negative if a < b, zero if
// equal, positive if a > b.  grevlex: total degree first, ties broken by the
// rightmost differing exponent, smaller exponent wins.  lex: X0 is the most
// significant variable.
inline int compareMonomials(const Monomial& a, const Monomial& b, MonomialOrder order) {
    if (order == MonomialOrder::grevlex) {
        if (a.totalDegree() != b.totalDegree())
            return a.totalDegree() < b.totalDegree() ? -1 : 1;
        std::size_t w = std::max(a.width(), b.width());
        for (std::size_t i = w; i-- > 0;) {
            std::uint32_t ea = a.exponent(i), eb = b.exponent(i);
            if (ea != eb)
                return ea < eb ? 1 : -1;
        }
        return 0;
    }
    std::size_t w = std::max(a.width(), b.width());
    for (std::size_t i = 0; i < w; ++i) {
        std::uint32_t ea = a.exponent(i), eb = b.exponent(i);
        if (ea != eb)
            return ea < eb ? -1 : 1;
    }
    return 0;
}

// Fixed comparator used for the polynomial term map (grevlex ascending).
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return compareMonomials(a, b, MonomialOrder::grevlex) < 0;
    }
};

} // namespace fsc
