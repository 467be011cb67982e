#pragma once

#include <string>
#include <vector>

#include "tautcalc/taut_class.hpp"

namespace tautcalc {

/// Degree of the class against the fundamental class (top-degree terms only).
Rational integrate(const TautClass& x);

/// Integral of a * b; throws std::invalid_argument unless the degrees add up to dim.
Rational pair(const TautClass& a, const TautClass& b);

/// Decorated strata of the given degree, one per isomorphism class. They span the
/// degree-d part of the tautological ring.
std::vector<DecoratedStratum> spanning_set(MarkedSpace space, int degree);

/// Integrals of x against each test stratum, computed on `jobs` threads.
std::vector<Rational> pairing_vector(const TautClass& x, const std::vector<DecoratedStratum>& tests, int jobs = 1);

struct Witness {
  std::size_t index = 0;  // position in the spanning set
  std::string stratum;
  Rational value;  // integral of (a - b) against the stratum
};

struct PairingReport {
  bool equal = false;
  std::size_t spanning_size = 0;
  std::vector<Witness> witnesses;  // nonzero pairings, at most `max_witnesses`
};

/// Numerical equality of two classes of the same degree: a - b pairs to zero with
/// every decorated stratum of complementary degree.
PairingReport num_equal(const TautClass& a, const TautClass& b, int jobs = 1, std::size_t max_witnesses = 5);

/// Same test given a precomputed pairing vector of a - b.
PairingReport report_from_vector(const std::vector<Rational>& values, const std::vector<DecoratedStratum>& tests,
                                 std::size_t max_witnesses = 5);

}  // namespace tautcalc
