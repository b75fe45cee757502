#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace fsc {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number. Always canonical: gcd(num, den) = 1, den > 0.
// Thin wrapper over boost::multiprecision::cpp_rational, which maintains
// the canonical form; this type adds parsing, printing and the arity of
// interface the rest of the library wants.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long long n) : v_(static_cast<std::int64_t>(n)) {}
    Rational(BigInt n) : v_(std::move(n)) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0)
            throw std::domain_error("Rational: zero denominator");
        v_ = boost::multiprecision::cpp_rational(num);
        v_ /= boost::multiprecision::cpp_rational(den);
    }

    // Accepts "123", "-7", "3/4", "-3/4", "+5".
    static Rational fromString(const std::string& s) {
        auto stripPlus = [](std::string t) {
            if (!t.empty() && t.front() == '+')
                t.erase(t.begin());
            return t;
        };
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos)
                return Rational(BigInt(stripPlus(s)));
            return Rational(BigInt(stripPlus(s.substr(0, slash))),
                            BigInt(stripPlus(s.substr(slash + 1))));
        } catch (const std::runtime_error&) {
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        }
    }

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool isZero() const { return v_.is_zero(); }
    bool isOne() const { return v_ == 1; }
    bool isInteger() const { return denominator() == 1; }
    int sign() const { return v_.sign(); }

    Rational operator-() const { return Rational(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.isZero())
            throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    // Nonnegative integer exponent only; 0^0 = 1.
    Rational pow(unsigned long long e) const {
        Rational base = *this, acc = 1;
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    std::string toString() const {
        std::string s = numerator().str();
        if (!isInteger())
            s += "/" + denominator().str();
        return s;
    }

private:
    explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
    boost::multiprecision::cpp_rational v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.toString();
}

} // namespace fsc
