#pragma once

#include <array>
#include <string>

#include "tautcalc/generators.hpp"
#include "tautcalc/loci.hpp"
#include "tautcalc/rational.hpp"

namespace tautcalc::family {

/// Divisor class on Y x F, where Y is the plane blown up at the nine base points of
/// a cubic pencil and F is an elliptic curve: h H + sum e_i E_i + f (fiber class).
/// E_1 plays the role of the distinguished exceptional class E_0.
struct LatticeClass {
  long h = 0;
  std::array<long, 9> e{};
  long f = 0;

  static LatticeClass hyperplane();
  static LatticeClass exceptional(int i);  // i in 1..9
  static LatticeClass exceptional_sum();
  static LatticeClass fiber();

  LatticeClass& operator+=(const LatticeClass& o);
  LatticeClass& operator-=(const LatticeClass& o);
  friend LatticeClass operator+(LatticeClass a, const LatticeClass& b) { return a += b; }
  friend LatticeClass operator-(LatticeClass a, const LatticeClass& b) { return a -= b; }
  friend LatticeClass operator*(long k, LatticeClass a);
  bool operator==(const LatticeClass&) const = default;

  std::string to_string() const;
};

/// Intersection number on Y of the surface parts: H^2 = 1, E_i^2 = -1, others 0.
long surface_product(const LatticeClass& a, const LatticeClass& b);

/// a.b.c on Y x F: each fiber coefficient times the surface product of the other two.
long triple_product(const LatticeClass& a, const LatticeClass& b, const LatticeClass& c);

/// Restriction of a named divisor on Mbar_{2,3} to the family. Accepted names:
/// psi1, delta_irr, lambda, d0:{2,3}, d1:{1}, d1:0. Throws std::invalid_argument otherwise.
LatticeClass restrict_divisor(const std::string& name);

/// Restriction of any divisor generator of Mbar_{2,3}; those not meeting the family give 0.
LatticeClass restrict_generator(const DivisorGen& d);

/// Restricts a degree-three divisor polynomial on Mbar_{2,3} and integrates it over the family.
Rational restricted_degree(const GeneratorExpr& expr);

struct FamilyNumbers {
  Rational product;         // rho_3^* Hyp_{2,1} . pi_3^* Hyp_{2,2}
  Rational product_printed; // same, from the printed restricted polynomials
  Rational with_delta;      // pi_3^* Hyp_{2,2} . d0:{2,3}
  Rational with_delta_printed;
  long xi_degree = 0;       // twelve nodal fibers times three torsion points
};

/// Intersection numbers of the family; the printed variants use the restricted
/// polynomials exactly as written out for the family.
FamilyNumbers family_numbers(const loci::Transcription& t = {});

struct Multiplicities {
  long alpha = 0, beta = 0, gamma = 0, delta = 0;
  bool operator==(const Multiplicities&) const = default;
};

/// Solves 4a + b = 5, 5b = 5, 4c + d = 5 and product = with_delta * b + xi_degree * c.
/// The multiplicities must be positive integers; otherwise std::domain_error reports
/// the residuals of the equations at the rounded solution.
Multiplicities solve_multiplicities(const Rational& product, const Rational& with_delta, long xi_degree);

}  // namespace tautcalc::family
