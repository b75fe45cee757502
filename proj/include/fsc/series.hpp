#pragma once

#include "rational.hpp"
#include "word.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace fsc {

enum class ProductMode { hadamard, shuffle, infiltration };

// Reference ("oracle") view of a formal series: all coefficients on words up
// to a length bound, exactly.  Slow and obviously correct; the decision
// procedures are validated against it.
class TruncatedSeries {
public:
    TruncatedSeries(std::size_t alphabetSize, unsigned maxLen)
        : alphabetSize_(alphabetSize), maxLen_(maxLen) {}

    std::size_t alphabetSize() const { return alphabetSize_; }
    unsigned maxLen() const { return maxLen_; }

    Rational coefficient(const Word& w) const {
        checkWord(w);
        auto it = coeffs_.find(w);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    void setCoefficient(const Word& w, const Rational& c) {
        checkWord(w);
        if (c.isZero())
            coeffs_.erase(w);
        else
            coeffs_[w] = c;
    }

    // Nonzero coefficients in shortlex order.
    const std::map<Word, Rational, ShortlexLess>& entries() const { return coeffs_; }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.alphabetSize_ == b.alphabetSize_ && a.maxLen_ == b.maxLen_ &&
               a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) {
        return !(a == b);
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (a.alphabetSize_ != b.alphabetSize_)
            throw std::invalid_argument("TruncatedSeries: alphabet mismatch");
        TruncatedSeries r(a.alphabetSize_, std::min(a.maxLen_, b.maxLen_));
        for (const auto& [w, c] : a.coeffs_)
            if (w.size() <= r.maxLen_)
                r.setCoefficient(w, c);
        for (const auto& [w, c] : b.coeffs_)
            if (w.size() <= r.maxLen_)
                r.setCoefficient(w, r.coefficient(w) + c);
        return r;
    }

    TruncatedSeries scale(const Rational& s) const {
        TruncatedSeries r(alphabetSize_, maxLen_);
        if (!s.isZero())
            for (const auto& [w, c] : coeffs_)
                r.coeffs_.emplace(w, c * s);
        return r;
    }

private:
    void checkWord(const Word& w) const {
        if (w.size() > maxLen_)
            throw std::out_of_range("TruncatedSeries: word longer than maxLen");
        for (Symbol a : w)
            if (a >= alphabetSize_)
                throw std::out_of_range("TruncatedSeries: letter outside alphabet");
    }

    std::size_t alphabetSize_;
    unsigned maxLen_;
    std::map<Word, Rational, ShortlexLess> coeffs_;
};

// (d_a f)(w) = f(a w).  Result window shrinks by one; taking a derivative of
// a zero-length window is an error.
inline TruncatedSeries leftDerivative(const TruncatedSeries& f, Symbol a) {
    if (f.maxLen() == 0)
        throw std::invalid_argument("leftDerivative: window exhausted (maxLen = 0)");
    TruncatedSeries r(f.alphabetSize(), f.maxLen() - 1);
    for (const auto& [w, c] : f.entries())
        if (!w.empty() && w.front() == a)
            r.setCoefficient(Word(w.begin() + 1, w.end()), c);
    return r;
}

// (f d_a)(w) = f(w a).
inline TruncatedSeries rightDerivative(const TruncatedSeries& f, Symbol a) {
    if (f.maxLen() == 0)
        throw std::invalid_argument("rightDerivative: window exhausted (maxLen = 0)");
    TruncatedSeries r(f.alphabetSize(), f.maxLen() - 1);
    for (const auto& [w, c] : f.entries())
        if (!w.empty() && w.back() == a)
            r.setCoefficient(Word(w.begin(), w.end() - 1), c);
    return r;
}

// Mixed product with one mode per letter, computed by the coinductive
// derivative rules with memoization on the pair of derivative words:
//   (f || g)(eps)      = f(eps) g(eps)
//   d_a(f || g)        = d_a f || d_a g                        (hadamard a)
//   d_a(f || g)        = d_a f || g + f || d_a g               (shuffle a)
//   d_a(f || g)        = d_a f || g + f || d_a g + d_a f || d_a g   (infiltration)
// The result window is the smaller of the two inputs'.
inline TruncatedSeries product(const TruncatedSeries& f, const TruncatedSeries& g,
                               const std::vector<ProductMode>& modes) {
    if (f.alphabetSize() != g.alphabetSize())
        throw std::invalid_argument("product: alphabet mismatch");
    if (modes.size() != f.alphabetSize())
        throw std::invalid_argument("product: one mode per letter required");
    const unsigned L = std::min(f.maxLen(), g.maxLen());
    TruncatedSeries r(f.alphabetSize(), L);

    // coefficient of w in (d_u f || d_v g), where d_u is the iterated left
    // derivative along u (first letter of u taken first)
    std::map<std::tuple<Word, Word, Word>, Rational> memo;
    auto coeff = [&](auto&& self, const Word& u, const Word& v, const Word& w) -> Rational {
        if (w.empty()) {
            Word fu = u, gv = v;
            return f.coefficient(fu) * g.coefficient(gv);
        }
        auto key = std::make_tuple(u, v, w);
        auto it = memo.find(key);
        if (it != memo.end())
            return it->second;
        Symbol a = w.front();
        Word rest(w.begin() + 1, w.end());
        Word ua = u, va = v;
        ua.push_back(a);
        va.push_back(a);
        Rational acc(0);
        switch (modes[a]) {
        case ProductMode::hadamard:
            acc = self(self, ua, va, rest);
            break;
        case ProductMode::shuffle:
            acc = self(self, ua, v, rest) + self(self, u, va, rest);
            break;
        case ProductMode::infiltration:
            acc = self(self, ua, v, rest) + self(self, u, va, rest) + self(self, ua, va, rest);
            break;
        }
        memo.emplace(std::move(key), acc);
        return acc;
    };

    // enumerate all words of length <= L in shortlex order
    std::vector<Word> level{Word{}};
    for (unsigned len = 0; len <= L; ++len) {
        for (const Word& w : level)
            r.setCoefficient(w, coeff(coeff, Word{}, Word{}, w));
        if (len == L)
            break;
        std::vector<Word> next;
        next.reserve(level.size() * f.alphabetSize());
        for (const Word& w : level)
            for (Symbol a = 0; a < f.alphabetSize(); ++a) {
                Word w2 = w;
                w2.push_back(a);
                next.push_back(std::move(w2));
            }
        level = std::move(next);
    }
    return r;
}

struct CommutativityWitness {
    Word u, v;        // same Parikh image, u shortlex-before v
    Rational fu, fv;  // differing coefficients
};

struct CommutativityReport {
    bool commutative = true;
    std::optional<CommutativityWitness> witness;
};

// Check that coefficients depend only on the Parikh image, over all words of
// length <= L.  The witness pairs the shortlex-least word of the offending
// Parikh class with the first word disagreeing with it.
inline CommutativityReport commutativeUpTo(const TruncatedSeries& f, unsigned L) {
    if (L > f.maxLen())
        throw std::invalid_argument("commutativeUpTo: L exceeds the series window");
    std::map<std::vector<std::uint32_t>, std::pair<Word, Rational>> reps;
    std::vector<Word> level{Word{}};
    for (unsigned len = 0; len <= L; ++len) {
        for (const Word& w : level) {
            auto key = parikh(w, f.alphabetSize());
            Rational c = f.coefficient(w);
            auto [it, inserted] = reps.emplace(key, std::make_pair(w, c));
            if (!inserted && it->second.second != c)
                return {false, CommutativityWitness{it->second.first, w, it->second.second, c}};
        }
        if (len == L)
            break;
        std::vector<Word> next;
        for (const Word& w : level)
            for (Symbol a = 0; a < f.alphabetSize(); ++a) {
                Word w2 = w;
                w2.push_back(a);
                next.push_back(std::move(w2));
            }
        level = std::move(next);
    }
    return {true, std::nullopt};
}

inline CommutativityReport commutativeUpTo(const TruncatedSeries& f) {
    return commutativeUpTo(f, f.maxLen());
}

} // namespace fsc
