#pragma once

// Randomised engine properties, shared by the unit suite and the acceptance runner.
// Each returns how many cases were checked and describes the first failure.

#include <algorithm>
#include <set>
#include <string>

#include "random_classes.hpp"
#include "tautcalc/expand.hpp"
#include "tautcalc/pairing.hpp"
#include "tautcalc/product.hpp"
#include "tautcalc/pullback.hpp"

namespace props {

struct Outcome {
  int checked = 0;
  int failed = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first_failure = what;
  }
  bool ok() const { return failed == 0; }
};

inline std::string where(tautcalc::MarkedSpace s) {
  return "(" + std::to_string(s.g) + "," + std::to_string(s.n) + ")";
}

inline Outcome commutativity(int cases, std::uint64_t seed) {
  sample::ClassSampler r(seed);
  Outcome out;
  for (int i = 0; i < cases; ++i) {
    const auto s = r.space();
    const auto [a, b] = r.degrees(s);
    const auto x = r.combination(s, a), y = r.combination(s, b);
    out.record(tautcalc::mult(x, y) == tautcalc::mult(y, x), "xy != yx on " + where(s) + ": " + x.to_string() + " / " + y.to_string());
  }
  return out;
}

inline Outcome associativity(int cases, std::uint64_t seed) {
  sample::ClassSampler r(seed);
  Outcome out;
  for (int i = 0; i < cases; ++i) {
    const auto s = r.space();
    const auto [a, b] = r.degrees(s);
    const int c = r.uniform(std::min(1, s.dim() - a - b), s.dim() - a - b);
    const auto x = r.combination(s, a), y = r.combination(s, b), z = r.combination(s, c);
    using tautcalc::mult;
    out.record(mult(mult(x, y), z) == mult(x, mult(y, z)), "(xy)z != x(yz) on " + where(s));
  }
  return out;
}

inline std::vector<tautcalc::DivisorGen> all_divisors(tautcalc::MarkedSpace s) {
  using tautcalc::DivisorGen;
  std::vector<DivisorGen> out;
  for (int i = 1; i <= s.n; ++i) out.push_back(DivisorGen::psi(i));
  if (s.g >= 1) {
    out.push_back(DivisorGen::delta_irr());
    for (int i = 1; i <= s.n; ++i) out.push_back(DivisorGen::omega(i));
    out.push_back(DivisorGen::lambda());
  }
  std::set<DivisorGen> seps;
  for (int h = 0; h <= s.g; ++h)
    for (tautcalc::MarkingSet J = 0; J <= tautcalc::all_markings(s.n); ++J) try {
        seps.insert(DivisorGen::delta_sep(s, h, J));
      } catch (const std::invalid_argument&) {
      }
  out.insert(out.end(), seps.begin(), seps.end());
  return out;
}

/// The general product against a divisor class agrees with the local divisor rules,
/// for every divisor generator and a sample of strata.
inline Outcome divisor_agreement(int strata_per_space, std::uint64_t seed) {
  sample::ClassSampler r(seed);
  Outcome out;
  for (const auto s : sample::small_spaces()) {
    const auto divisors = all_divisors(s);
    for (int i = 0; i < strata_per_space; ++i) {
      const auto x = tautcalc::TautClass::of(r.stratum(s, r.uniform(0, s.dim() - 1)));
      for (const auto& d : divisors) {
        const auto general = tautcalc::mult(tautcalc::divisor_class(s, d), x);
        const auto local = tautcalc::mult_divisor(x, d);
        out.record(general == local, d.name() + " on " + where(s) + " against " + x.to_string());
      }
    }
  }
  return out;
}

inline Outcome pairing_symmetry(int cases, std::uint64_t seed) {
  sample::ClassSampler r(seed);
  Outcome out;
  for (int i = 0; i < cases; ++i) {
    const auto s = r.space();
    const int a = r.uniform(0, s.dim());
    const auto x = r.combination(s, a), y = r.combination(s, s.dim() - a);
    out.record(tautcalc::pair(x, y) == tautcalc::pair(y, x), "pair asymmetric on " + where(s));
  }
  return out;
}

/// Integrals do not see marking names.
inline Outcome relabel_equivariance(int cases, std::uint64_t seed) {
  sample::ClassSampler r(seed);
  Outcome out;
  for (int i = 0; i < cases; ++i) {
    const auto s = r.space();
    if (s.n < 2) {
      --i;
      continue;
    }
    const auto p = r.permutation(s.n);
    const auto top = r.combination(s, s.dim(), 3);
    out.record(tautcalc::integrate(tautcalc::relabel(top, p)) == tautcalc::integrate(top), "integral moved on " + where(s));
    const int a = r.uniform(0, s.dim());
    const auto x = r.combination(s, a), y = r.combination(s, s.dim() - a);
    out.record(tautcalc::pair(tautcalc::relabel(x, p), tautcalc::relabel(y, p)) == tautcalc::pair(x, y),
               "pairing moved on " + where(s));
  }
  return out;
}

}  // namespace props
