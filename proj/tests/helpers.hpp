#pragma once

// Shared builders for the test suites: the worked example automata, small
// series constructors, and deterministic random generators for the property
// suites.

#include <fsc/fsc.hpp>

#include <random>
#include <string>
#include <vector>

namespace tb {

using fsc::Configuration;
using fsc::MixedAutomaton;
using fsc::Polynomial;
using fsc::ProductMode;
using fsc::Rational;
using fsc::TruncatedSeries;
using fsc::Word;

// Parse a polynomial over the given variable names.  With no names, the
// default variables X1..Xn are inferred from the highest index in the text.
inline Polynomial P(const std::string& text, std::vector<std::string> names) {
    if (names.empty()) {
        std::size_t maxIndex = 0;
        for (std::size_t i = 0; i + 1 < text.size(); ++i)
            if (text[i] == 'X' && std::isdigit(static_cast<unsigned char>(text[i + 1])))
                maxIndex = std::max(maxIndex, static_cast<std::size_t>(
                                                  std::stoul(text.substr(i + 1))));
        for (std::size_t i = 1; i <= maxIndex; ++i)
            names.push_back("X" + std::to_string(i));
    }
    return fsc::parsePolynomial(text, names);
}
inline Polynomial P1(const std::string& text) { return P(text, {"A"}); }

// Hadamard automaton over {a1, a2} with one nonterminal A:
//   delta_a1 A = A^2,  delta_a2 A = 1 - A^2,  output A = c.
inline MixedAutomaton intro(const Rational& c) {
    MixedAutomaton A;
    A.modes = {ProductMode::hadamard, ProductMode::hadamard};
    A.k = 1;
    A.delta = {{P1("A^2")}, {P1("1 - A^2")}};
    A.output = {c};
    A.validate();
    return A;
}

// Hadamard automaton over {a1, a2} with commuting updates A^3 and A^5.
inline MixedAutomaton powers(const Rational& c) {
    MixedAutomaton A;
    A.modes = {ProductMode::hadamard, ProductMode::hadamard};
    A.k = 1;
    A.delta = {{P1("A^3")}, {P1("A^5")}};
    A.output = {c};
    A.validate();
    return A;
}

// Shuffle automaton for the binomial series: coefficient at a word with
// n occurrences of a1 and k of a2 is C(n,k) * k!.
inline MixedAutomaton binomial() {
    std::vector<std::string> v{"X1", "X2", "X3"};
    MixedAutomaton A;
    A.modes = {ProductMode::shuffle, ProductMode::shuffle};
    A.k = 3;
    A.delta = {{P("X1*(1 + X3)", v), P("1", v), P("0", v)},
               {P("X1*X2", v), P("0", v), P("1", v)}};
    A.output = {1, 0, 0};
    A.validate();
    return A;
}

// Two independent linear presentations of the Fibonacci sequence over a
// unary alphabet; fib1's first nonterminal equals fib2's first nonterminal
// (0, 1, 1, 2, 3, 5, ...).
inline MixedAutomaton fib1() {
    std::vector<std::string> v{"F", "G"};
    MixedAutomaton A;
    A.modes = {ProductMode::hadamard};
    A.k = 2;
    A.delta = {{P("G", v), P("F + G", v)}};
    A.output = {0, 1};
    A.validate();
    return A;
}
inline MixedAutomaton fib2() {
    std::vector<std::string> v{"Q", "P"};
    MixedAutomaton A;
    A.modes = {ProductMode::hadamard};
    A.k = 2;
    A.delta = {{P("P", v), P("P + Q", v)}};
    A.output = {0, 1};
    A.validate();
    return A;
}

// Unary shuffle automaton recognising n -> n! (delta f = f^2, output 1).
inline MixedAutomaton factorial() {
    MixedAutomaton A;
    A.modes = {ProductMode::shuffle};
    A.k = 1;
    A.delta = {{P("f^2", {"f"})}};
    A.output = {1};
    A.validate();
    return A;
}

// Uniform-mode automaton over {a, b} whose nonterminal 0 recognises the
// single word "ab" and nonterminal 3 the single word "a".  The transitions
// are linear with zero constant terms, so the recognised series do not
// depend on the mode; the configuration X0*X3 then recognises the
// mode-product of "ab" and "a".
inline MixedAutomaton words(ProductMode mode) {
    // nonterminals: S, B, E (for "ab") and T, U (for "a")
    std::vector<std::string> v{"S", "B", "E", "T", "U"};
    MixedAutomaton A;
    A.modes = {mode, mode};
    A.k = 5;
    A.delta = {{P("B", v), P("0", v), P("0", v), P("U", v), P("0", v)},
               {P("0", v), P("E", v), P("0", v), P("0", v), P("0", v)}};
    A.output = {0, 0, 1, 0, 1};
    A.validate();
    return A;
}

// Pure Hadamard automaton over its own 2-letter alphabet recognising the
// single word "ab" (first letter, then second).
inline MixedAutomaton abHadamard() {
    std::vector<std::string> v{"S", "B", "E"};
    MixedAutomaton A;
    A.modes = {ProductMode::hadamard, ProductMode::hadamard};
    A.k = 3;
    A.delta = {{P("B", v), P("0", v), P("0", v)},
               {P("0", v), P("E", v), P("0", v)}};
    A.output = {0, 0, 1};
    A.validate();
    return A;
}

// One-nonterminal automaton recognising 1*eps (all transitions 0, output 1).
// This is the shuffle/infiltration product identity under any uniform mode.
inline MixedAutomaton unit(std::size_t alphabetSize, ProductMode mode) {
    MixedAutomaton A;
    A.modes.assign(alphabetSize, mode);
    A.k = 1;
    A.delta.assign(alphabetSize, {Polynomial(1)});
    A.output = {1};
    A.validate();
    return A;
}

// --- truncated-series constructors -----------------------------------------

inline TruncatedSeries singleWord(std::size_t alphabetSize, unsigned L, const Word& w,
                                  const Rational& c = 1) {
    TruncatedSeries f(alphabetSize, L);
    f.setCoefficient(w, c);
    return f;
}

// All-ones series (Hadamard identity).
inline TruncatedSeries ones(std::size_t alphabetSize, unsigned L) {
    TruncatedSeries f(alphabetSize, L);
    std::vector<Word> level{Word{}};
    for (unsigned len = 0;; ++len) {
        for (const Word& w : level)
            f.setCoefficient(w, 1);
        if (len == L)
            break;
        std::vector<Word> next;
        for (const Word& w : level)
            for (fsc::Symbol a = 0; a < alphabetSize; ++a) {
                Word w2 = w;
                w2.push_back(a);
                next.push_back(std::move(w2));
            }
        level = std::move(next);
    }
    return f;
}

// 1*eps (shuffle/infiltration identity).
inline TruncatedSeries epsSeries(std::size_t alphabetSize, unsigned L) {
    return singleWord(alphabetSize, L, {});
}

// Re-index a truncation onto a larger alphabet, shifting letters by offset.
inline TruncatedSeries embedSeries(const TruncatedSeries& f, std::size_t offset,
                                   std::size_t unionAlphabet) {
    TruncatedSeries r(unionAlphabet, f.maxLen());
    for (const auto& [w, c] : f.entries()) {
        Word v = w;
        for (fsc::Symbol& a : v)
            a = static_cast<fsc::Symbol>(a + offset);
        r.setCoefficient(v, c);
    }
    return r;
}

// --- deterministic randomness for the property suites ----------------------

struct Rng {
    std::mt19937 gen;
    explicit Rng(std::uint32_t seed) : gen(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }

    // Small rationals biased toward 0 and 1 (denominator usually 1).
    Rational rational() {
        int num = uniform(-3, 3);
        int den = uniform(0, 4) == 0 ? uniform(2, 3) : 1;
        return Rational(num) / Rational(den);
    }

    Polynomial polynomial(std::size_t arity, int maxDegree, int maxTerms = 3) {
        Polynomial p(arity);
        int terms = uniform(0, maxTerms);
        for (int t = 0; t < terms; ++t) {
            std::vector<std::uint32_t> exps(arity, 0);
            int budget = uniform(0, maxDegree);
            for (int b = 0; b < budget && arity > 0; ++b)
                exps[static_cast<std::size_t>(uniform(0, static_cast<int>(arity) - 1))]++;
            p.addTerm(fsc::Monomial(exps), rational());
        }
        return p;
    }

    ProductMode mode() {
        switch (uniform(0, 2)) {
        case 0: return ProductMode::hadamard;
        case 1: return ProductMode::shuffle;
        default: return ProductMode::infiltration;
        }
    }

    MixedAutomaton automaton(std::size_t maxK = 3, std::size_t maxAlphabet = 3,
                             int maxDegree = 2, ProductMode* uniformMode = nullptr) {
        MixedAutomaton A;
        A.k = static_cast<std::size_t>(uniform(1, static_cast<int>(maxK)));
        std::size_t letters = static_cast<std::size_t>(uniform(1, static_cast<int>(maxAlphabet)));
        for (std::size_t a = 0; a < letters; ++a)
            A.modes.push_back(uniformMode ? *uniformMode : mode());
        A.delta.resize(letters);
        for (auto& row : A.delta)
            for (std::size_t i = 0; i < A.k; ++i)
                row.push_back(polynomial(A.k, maxDegree));
        for (std::size_t i = 0; i < A.k; ++i)
            A.output.push_back(rational());
        A.validate();
        return A;
    }

    Word word(std::size_t alphabetSize, int maxLen) {
        Word w;
        int len = uniform(0, maxLen);
        for (int i = 0; i < len; ++i)
            w.push_back(static_cast<fsc::Symbol>(uniform(0, static_cast<int>(alphabetSize) - 1)));
        return w;
    }
};

} // namespace tb
