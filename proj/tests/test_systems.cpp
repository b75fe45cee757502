// Polyrec difference systems and CDA differential systems: companion
// automata, consistency/solvability, point evaluation, Taylor coefficients,
// sections, and diagonals.

#include "helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace fsc;
using tb::P;
using tb::P1;

namespace {

PolyrecSystem squares(const Rational& c) {
    PolyrecSystem S;
    S.dims = 2;
    S.unknowns = 1;
    S.shifts = {{P1("A^2").withArity(1)}, {P1("1 - A^2")}};
    S.init = {c};
    S.validate();
    return S;
}

PolyrecSystem powersSystem(const Rational& c) {
    PolyrecSystem S;
    S.dims = 2;
    S.unknowns = 1;
    S.shifts = {{P1("A^3")}, {P1("A^5")}};
    S.init = {c};
    S.validate();
    return S;
}

PolyrecSystem affine(const Rational& c) {
    PolyrecSystem S;
    S.dims = 2;
    S.unknowns = 1;
    S.shifts = {{P1("A^2")}, {P1("A + 1")}};
    S.init = {c};
    S.validate();
    return S;
}

// d1 f = 0, d2 f = g; d1 g = 1, d2 g = 1 — unsolvable for every init.
CDASystem unsolvable(const Rational& f0, const Rational& g0) {
    std::vector<std::string> v{"f", "g"};
    CDASystem S;
    S.dims = 2;
    S.unknowns = 2;
    S.shifts = {{P("0", v), P("1", v)}, {P("g", v), P("1", v)}};
    S.init = {f0, g0};
    S.validate();
    return S;
}

// d1 f = f + g, d2 f = 0; d1 g = 0, d2 g = g — solvable iff g(0) = 0.
CDASystem sensitivity(const Rational& f0, const Rational& g0) {
    std::vector<std::string> v{"f", "g"};
    CDASystem S;
    S.dims = 2;
    S.unknowns = 2;
    S.shifts = {{P("f + g", v), P("0", v)}, {P("0", v), P("g", v)}};
    S.init = {f0, g0};
    S.validate();
    return S;
}

// d1 f = f (1 + x2), d2 f = f x1 with x1, x2 the adjoined coordinate
// unknowns (d_j x_i = [i = j], x(0) = 0): the binomial CDA.
CDASystem binomialCda() {
    std::vector<std::string> v{"f", "x1", "x2"};
    CDASystem S;
    S.dims = 2;
    S.unknowns = 3;
    S.shifts = {{P("f*(1 + x2)", v), P("1", v), P("0", v)},
                {P("f*x1", v), P("0", v), P("1", v)}};
    S.init = {1, 0, 0};
    S.validate();
    return S;
}

Rational binom(unsigned n, unsigned k) {
    Rational r = 1;
    for (unsigned i = 0; i < k; ++i)
        r = r * Rational(static_cast<long long>(n - i)) / Rational(static_cast<long long>(i + 1));
    return r;
}

Rational factorialOf(unsigned k) {
    Rational r = 1;
    for (unsigned i = 2; i <= k; ++i)
        r *= Rational(static_cast<long long>(i));
    return r;
}

} // namespace

TEST_CASE("companion automata mirror the system") {
    MixedAutomaton H = companionHadamard(squares(-1));
    H.validate();
    MixedAutomaton I = tb::intro(-1);
    CHECK(H.modes == I.modes);
    CHECK(H.delta == I.delta);
    CHECK(H.output == I.output);

    MixedAutomaton B = companionShuffle(binomialCda());
    B.validate();
    MixedAutomaton Bref = tb::binomial();
    CHECK(B.modes == Bref.modes);
    CHECK(B.delta == Bref.delta);
    CHECK(B.output == Bref.output);

    // zero system: all-zero transitions
    PolyrecSystem Z;
    Z.dims = 1;
    Z.unknowns = 2;
    Z.shifts = {{Polynomial(2), Polynomial(2)}};
    Z.init = {3, 4};
    MixedAutomaton ZA = companionHadamard(Z);
    CHECK(ZA.delta[0][0].isZero());
    CHECK(ZA.delta[0][1].isZero());
}

TEST_CASE("polyrec consistency of the squares system") {
    for (int c : {-1, 0, 1}) {
        SystemVerdict v = polyrecConsistent(squares(c));
        CHECK(v.holds);
        CHECK_FALSE(v.witness.has_value());
    }
    SystemVerdict bad = polyrecConsistent(squares(2));
    CHECK_FALSE(bad.holds);
    REQUIRE(bad.failingUnknown.has_value());
    CHECK(*bad.failingUnknown == 0);
    REQUIRE(bad.witness.has_value());
    CHECK(bad.witness->left == Word{0, 1});
    CHECK(bad.witness->right == Word{1, 0});
    CHECK(bad.witness->leftValue == Rational(9));
    CHECK(bad.witness->rightValue == Rational(-15));

    CHECK_FALSE(polyrecConsistent(squares(Rational(1) / Rational(2))).holds);
}

TEST_CASE("polyrec consistency of the commuting-powers system") {
    for (Rational c : {Rational(2), Rational(-3), Rational(7) / Rational(2)}) {
        PolyrecSystem S = powersSystem(c);
        CHECK(polyrecConsistent(S).holds);
        // f(n1, n2) = c^(3^n1 * 5^n2) on the grid n <= (2, 2)
        for (unsigned long long n1 = 0; n1 <= 2; ++n1)
            for (unsigned long long n2 = 0; n2 <= 2; ++n2) {
                unsigned long long e = 1;
                for (unsigned long long i = 0; i < n1; ++i)
                    e *= 3;
                for (unsigned long long i = 0; i < n2; ++i)
                    e *= 5;
                CHECK(evaluatePoint(S, {n1, n2}, 0) == c.pow(e));
            }
    }
}

TEST_CASE("polyrec inconsistency of the affine system") {
    for (Rational c : {Rational(0), Rational(1), Rational(-1), Rational(1) / Rational(2)}) {
        SystemVerdict v = polyrecConsistent(affine(c));
        CHECK_FALSE(v.holds);
        REQUIRE(v.witness.has_value());
        MixedAutomaton A = companionHadamard(affine(c));
        CHECK(coefficient(A, Polynomial::variable(0, 1), v.witness->left) ==
              v.witness->leftValue);
        CHECK(coefficient(A, Polynomial::variable(0, 1), v.witness->right) ==
              v.witness->rightValue);
        CHECK(v.witness->leftValue != v.witness->rightValue);
        CHECK(parikh(v.witness->left, 2) == parikh(v.witness->right, 2));
    }
    // the forced init 0: two lattice paths to (1,2) give 4 vs 2, and two
    // paths to (2,2) give 4 vs 2 as well
    SystemVerdict v0 = polyrecConsistent(affine(0));
    CHECK(v0.witness->left == Word{0, 1, 1});
    CHECK(v0.witness->right == Word{1, 0, 1});
    CHECK(v0.witness->leftValue == Rational(4));
    CHECK(v0.witness->rightValue == Rational(2));
    MixedAutomaton A0 = companionHadamard(affine(0));
    CHECK(coefficient(A0, Polynomial::variable(0, 1), {0, 1, 1, 0}) == Rational(4));
    CHECK(coefficient(A0, Polynomial::variable(0, 1), {1, 0, 1, 0}) == Rational(2));
}

TEST_CASE("evaluatePoint follows the canonical path and guards inconsistency") {
    PolyrecSystem S = powersSystem(2);
    CHECK(evaluatePoint(S, {0, 0}, 0) == Rational(2));
    CHECK(evaluatePoint(S, {1, 1}, 0) == Rational(32768));  // 2^15

    CHECK_THROWS_AS(evaluatePoint(S, {1}, 0), std::invalid_argument);
    CHECK_THROWS_AS(evaluatePoint(S, {1, 1}, 3), std::invalid_argument);

    PolyrecSystem bad = affine(0);
    CHECK_THROWS_AS(evaluatePoint(bad, {1, 2}, 0), std::runtime_error);
    CHECK(evaluatePoint(bad, {1, 2}, 0, /*allowInconsistent=*/true) == Rational(4));
}

TEST_CASE("CDA: the unsolvable system is unsolvable for every sampled init") {
    std::vector<std::pair<Rational, Rational>> inits{
        {0, 0}, {1, 0}, {0, 1}, {-2, 5}, {Rational(1) / Rational(2), -3}};
    for (const auto& [f0, g0] : inits) {
        SystemVerdict v = cdaSolvable(unsolvable(f0, g0));
        CHECK_FALSE(v.holds);
        REQUIRE(v.failingUnknown.has_value());
        CHECK(*v.failingUnknown == 0);
        REQUIRE(v.witness.has_value());
        CHECK(v.witness->left == Word{0, 1});
        CHECK(v.witness->right == Word{1, 0});
        CHECK(v.witness->leftValue == Rational(0));
        CHECK(v.witness->rightValue == Rational(1));
    }
}

TEST_CASE("CDA: the sensitivity system is solvable exactly when g(0) = 0") {
    for (Rational f0 : {Rational(0), Rational(1), Rational(-5)})
        CHECK(cdaSolvable(sensitivity(f0, 0)).holds);

    SystemVerdict v1 = cdaSolvable(sensitivity(0, 1));
    CHECK_FALSE(v1.holds);
    REQUIRE(v1.witness.has_value());
    CHECK(*v1.failingUnknown == 0);
    CHECK(v1.witness->leftValue == Rational(1));
    CHECK(v1.witness->rightValue == Rational(0));

    SystemVerdict v2 = cdaSolvable(sensitivity(2, 3));
    CHECK_FALSE(v2.holds);
    CHECK(v2.witness->leftValue == Rational(3));
    CHECK(v2.witness->rightValue == Rational(0));
}

TEST_CASE("CDA: binomial system Taylor grid") {
    CDASystem S = binomialCda();
    CHECK(cdaSolvable(S).holds);
    for (unsigned n = 0; n <= 4; ++n)
        for (unsigned k = 0; k <= 4; ++k)
            CHECK(taylorCoefficient(S, {n, k}, 0) == binom(n, k) * factorialOf(k));
    // unsolvable systems refuse silent evaluation
    CDASystem U = unsolvable(0, 0);
    CHECK_THROWS_AS(taylorCoefficient(U, {1, 1}, 0), std::runtime_error);
    CHECK(taylorCoefficient(U, {1, 1}, 0, /*allowInconsistent=*/true) == Rational(0));
}

TEST_CASE("CDA: Taylor coefficients respect the defining equations") {
    // t(n + e_j) of f equals the divided-power product evaluation of the
    // right-hand side p_j(f, x1, x2) at n, computed by binomial convolution
    CDASystem S = binomialCda();
    auto taylor = [&](std::size_t unknown, unsigned long long n1, unsigned long long n2) {
        return taylorCoefficient(S, {n1, n2}, unknown);
    };
    // divided-power product of two coefficient grids at (n1, n2)
    auto convolve = [&](auto g, auto h, unsigned long long n1, unsigned long long n2) {
        Rational acc = 0;
        for (unsigned long long m1 = 0; m1 <= n1; ++m1)
            for (unsigned long long m2 = 0; m2 <= n2; ++m2)
                acc += binom(static_cast<unsigned>(n1), static_cast<unsigned>(m1)) *
                       binom(static_cast<unsigned>(n2), static_cast<unsigned>(m2)) *
                       g(m1, m2) * h(n1 - m1, n2 - m2);
        return acc;
    };
    auto f = [&](unsigned long long a, unsigned long long b) { return taylor(0, a, b); };
    auto x1 = [&](unsigned long long a, unsigned long long b) { return taylor(1, a, b); };
    auto x2 = [&](unsigned long long a, unsigned long long b) { return taylor(2, a, b); };
    for (unsigned long long n1 = 0; n1 <= 3; ++n1)
        for (unsigned long long n2 = 0; n2 <= 3; ++n2) {
            // d1 f = f + f*x2
            CHECK(f(n1 + 1, n2) == f(n1, n2) + convolve(f, x2, n1, n2));
            // d2 f = f*x1
            CHECK(f(n1, n2 + 1) == convolve(f, x1, n1, n2));
            // d1 x1 = 1, d2 x1 = 0; d1 x2 = 0, d2 x2 = 1
            CHECK(x1(n1 + 1, n2) == Rational(n1 == 0 && n2 == 0 ? 1 : 0));
            CHECK(x2(n1, n2 + 1) == Rational(n1 == 0 && n2 == 0 ? 1 : 0));
        }
}

TEST_CASE("sections fix one coordinate") {
    // coord 2 (index 1) at m = 0 keeps the init; at m = 1 it advances once
    PolyrecSystem S = squares(-1);
    PolyrecSystem s0 = section(S, 1, 0);
    CHECK(s0.dims == 1);
    CHECK(s0.shifts == std::vector<std::vector<Polynomial>>{{P1("A^2")}});
    CHECK(s0.init == std::vector<Rational>{-1});

    PolyrecSystem s1 = section(S, 1, 1);
    CHECK(s1.init == std::vector<Rational>{0});  // 1 - (-1)^2

    // slice f(1, n) of the c = 0 system alternates 0, 1, 0, 1, 0
    PolyrecSystem t = section(squares(0), 0, 1);
    CHECK(t.dims == 1);
    CHECK(t.shifts == std::vector<std::vector<Polynomial>>{{P1("1 - A^2")}});
    std::vector<Rational> got;
    for (unsigned long long n = 0; n <= 4; ++n)
        got.push_back(evaluatePoint(t, {n}, 0));
    CHECK(got == std::vector<Rational>{0, 1, 0, 1, 0});

    CHECK_THROWS_AS(section(S, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(section(affine(0), 0, 1), std::runtime_error);

    // one-dimensional systems degenerate to a constants record
    PolyrecSystem uni = section(S, 1, 0);
    PolyrecSystem zero = section(uni, 0, 3);
    CHECK(zero.dims == 0);
    CHECK(zero.shifts.empty());
    // f(3) starting from -1 under repeated squaring: -1, 1, 1, 1
    CHECK(zero.init == std::vector<Rational>{1});
    CHECK(evaluatePoint(zero, {}, 0) == Rational(1));
}

TEST_CASE("diagonals merge two coordinates") {
    // the worked three-coordinate example
    PolyrecSystem S;
    S.dims = 3;
    S.unknowns = 1;
    S.shifts = {{P1("1 - A^2")}, {P1("A^3")}, {P1("1 + 2*A")}};
    S.init = {0};
    S.validate();
    PolyrecSystem D = diagonal(S, 0, 1);
    CHECK(D.dims == 2);
    CHECK(D.shifts[0][0] == P1("(1 - A^2)^3"));
    CHECK(D.shifts[1][0] == P1("1 + 2*A"));
    CHECK(D.init == S.init);

    // identity shift leaves the other one unchanged
    PolyrecSystem I;
    I.dims = 2;
    I.unknowns = 1;
    I.shifts = {{P1("A")}, {P1("A^2 + 1")}};
    I.init = {5};
    CHECK(diagonal(I, 0, 1).shifts[0][0] == P1("A^2 + 1"));

    // merged coordinate of {f^3, f^5} is f^15, matching the 2D evaluation
    PolyrecSystem pw = powersSystem(2);
    PolyrecSystem dpw = diagonal(pw, 0, 1);
    CHECK(dpw.dims == 1);
    CHECK(dpw.shifts[0][0] == P1("A^15"));
    CHECK(evaluatePoint(dpw, {1}, 0) == Rational(32768));
    CHECK(evaluatePoint(dpw, {1}, 0) == evaluatePoint(pw, {1, 1}, 0));

    CHECK_THROWS_AS(diagonal(S, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(diagonal(S, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(diagonal(S, 1, 3), std::invalid_argument);
}

TEST_CASE("diagonal values agree with the two-coordinate evaluation") {
    std::vector<PolyrecSystem> consistent{powersSystem(3), squares(0), squares(-1), squares(1)};
    for (const PolyrecSystem& S : consistent) {
        PolyrecSystem D = diagonal(S, 0, 1);
        for (unsigned long long n = 0; n <= 3; ++n)
            CHECK(evaluatePoint(D, {n}, 0) == evaluatePoint(S, {n, n}, 0));
    }
}

TEST_CASE("consistency is sound: all lattice paths agree on small points") {
    for (const Rational& c : {Rational(-1), Rational(0), Rational(1)}) {
        PolyrecSystem S = squares(c);
        REQUIRE(polyrecConsistent(S).holds);
        MixedAutomaton A = companionHadamard(S);
        // every word of length <= 5 is a lattice path; Parikh-equal words
        // must carry equal values
        TruncatedSeries t = truncate(A, Polynomial::variable(0, 1), 5);
        CHECK(commutativeUpTo(t).commutative);
    }
    // powers: all rational inits
    PolyrecSystem S = powersSystem(Rational(-7) / Rational(3));
    REQUIRE(polyrecConsistent(S).holds);
    CHECK(commutativeUpTo(truncate(companionHadamard(S), Polynomial::variable(0, 1), 5))
              .commutative);
}

TEST_CASE("permanence: unused unknowns do not change verdicts or values") {
    auto extend = [](const PolyrecSystem& S) {
        PolyrecSystem R = S;
        R.unknowns = S.unknowns + 1;
        for (std::size_t j = 0; j < R.dims; ++j) {
            std::vector<Polynomial> row;
            for (const Polynomial& p : S.shifts[j])
                row.push_back(p.withArity(R.unknowns));
            row.push_back(Polynomial::variable(S.unknowns, R.unknowns));  // u -> u
            R.shifts[j] = row;
        }
        R.init.push_back(Rational(9));
        R.validate();
        return R;
    };
    for (const Rational& c : {Rational(0), Rational(2)}) {
        PolyrecSystem S = squares(c);
        PolyrecSystem R = extend(S);
        CHECK(polyrecConsistent(S).holds == polyrecConsistent(R).holds);
        for (unsigned long long n1 = 0; n1 <= 2; ++n1)
            for (unsigned long long n2 = 0; n2 <= 2; ++n2)
                CHECK(evaluatePoint(S, {n1, n2}, 0, true) ==
                      evaluatePoint(R, {n1, n2}, 0, true));
        // the adjoined unknown is constant
        CHECK(evaluatePoint(R, {2, 1}, 1, true) == Rational(9));
    }
}

TEST_CASE("system validation") {
    PolyrecSystem S = squares(1);
    S.shifts.pop_back();
    CHECK_THROWS_AS(S.validate(), std::invalid_argument);
    S = squares(1);
    S.init.clear();
    CHECK_THROWS_AS(S.validate(), std::invalid_argument);
    S = squares(1);
    S.shifts[0][0] = P("X1*X2", {});
    CHECK_THROWS_AS(S.validate(), std::invalid_argument);
}
