#pragma once

#include "tautcalc/generators.hpp"
#include "tautcalc/taut_class.hpp"

namespace tautcalc {

/// Boundary divisor type of edge e: contract every other edge and read off the result.
DivisorGen edge_type(const StableGraph& graph, int e);

/// x * D through local rules: psi_i raises a leg exponent; a boundary divisor
/// contributes every one-edge degeneration of type D (weight 1/2 per ordered
/// degeneration, kappa split over the new vertices) plus the excess term
/// -psi_h - psi_h' on each existing edge of type D. omega and lambda are first
/// rewritten as linear combinations of the others.
TautClass mult_divisor(const TautClass& x, const DivisorGen& d);

/// x * kappa_1: kappa_1 added at each vertex in turn.
TautClass mult_kappa1(const TautClass& x);

/// x * d for a degree-one class d, reading each term of d as psi_i, kappa_1 or a
/// boundary divisor and applying the local rules.
TautClass mult_degree_one(const TautClass& x, const TautClass& d);

/// Intersection product through generic (A, B)-structures. Whenever a factor has
/// degree one the result is checked against mult_degree_one, and a disagreement
/// throws std::logic_error.
TautClass mult(const TautClass& a, const TautClass& b);

/// Integral of a * b, computed without building the product class.
Rational integrate_product(const TautClass& a, const TautClass& b);

}  // namespace tautcalc
