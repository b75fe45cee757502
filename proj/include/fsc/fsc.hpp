#pragma once

// Exact-arithmetic calculus of formal power series in noncommuting
// variables, presented by polynomial automata with per-letter product modes
// (Hadamard / shuffle / infiltration), with decision procedures for
// zeroness, equality, and commutativity, and their applications to
// multivariate difference and differential systems.

#include "rational.hpp"
#include "monomial.hpp"
#include "polynomial.hpp"
#include "groebner.hpp"
#include "word.hpp"
#include "series.hpp"
#include "automaton.hpp"
#include "gadget.hpp"
#include "poly_automaton.hpp"
#include "decide.hpp"
#include "systems.hpp"
#include "varieties.hpp"
#include "parse.hpp"
#include "printer.hpp"
