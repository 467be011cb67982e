#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tautcalc/rational.hpp"
#include "tautcalc/stable_graph.hpp"

namespace tautcalc {

/// Degree-one generators: psi_i, omega_i, lambda, delta_irr and delta_{h:J}.
struct DivisorGen {
  enum class Kind { Psi, Omega, Lambda, DeltaIrr, DeltaSep };

  Kind kind = Kind::Lambda;
  int index = 0;      // marking for Psi / Omega
  int h = 0;          // DeltaSep: genus of the side carrying J
  MarkingSet J = 0;   // DeltaSep markings

  static DivisorGen psi(int i) { return {Kind::Psi, i, 0, 0}; }
  static DivisorGen omega(int i) { return {Kind::Omega, i, 0, 0}; }
  static DivisorGen lambda() { return {Kind::Lambda, 0, 0, 0}; }
  static DivisorGen delta_irr() { return {Kind::DeltaIrr, 0, 0, 0}; }
  /// delta_{h:J}, validated on `space` and normalised under (h, J) ~ (g - h, J^c):
  /// the representative with smaller h, then smaller J.
  static DivisorGen delta_sep(MarkedSpace space, int h, MarkingSet J);

  bool is_boundary() const { return kind == Kind::DeltaIrr || kind == Kind::DeltaSep; }
  /// Throws std::invalid_argument if the symbol does not exist on `space`.
  void validate(MarkedSpace space) const;
  std::string name() const;

  auto operator<=>(const DivisorGen&) const = default;
};

/// Atoms of generator expressions: divisors plus the codimension-two classes
/// gamma_{1:J} (elliptic vertex with markings J meeting a genus g-2 vertex twice)
/// and, on Mbar_{2,2}, delta_{2,psi} (psi on the genus-two side of delta_{0:{1,2}}).
struct Symbol {
  enum class Kind { Divisor, Gamma, Delta2Psi };

  Kind kind = Kind::Divisor;
  DivisorGen divisor;
  MarkingSet J = 0;  // Gamma

  static Symbol of(DivisorGen d) { return {Kind::Divisor, d, 0}; }
  static Symbol gamma(MarkingSet J) { return {Kind::Gamma, {}, J}; }
  static Symbol delta2psi() { return {Kind::Delta2Psi, {}, 0}; }

  int degree() const { return kind == Kind::Divisor ? 1 : 2; }
  void validate(MarkedSpace space) const;
  std::string name() const;

  auto operator<=>(const Symbol&) const = default;
};

/// Symbolic expression in generators with exact coefficients. Evaluation keeps
/// the tree shape (products are expanded factor by factor, left to right).
class GeneratorExpr {
 public:
  enum class Op { Constant, Atom, Sum, Product };

  GeneratorExpr() : GeneratorExpr(Rational(0)) {}
  explicit GeneratorExpr(Rational c);
  explicit GeneratorExpr(Symbol s);
  GeneratorExpr(DivisorGen d) : GeneratorExpr(Symbol::of(d)) {}  // NOLINT: implicit on purpose

  static GeneratorExpr sum(std::vector<std::pair<Rational, GeneratorExpr>> terms);
  static GeneratorExpr product(std::vector<GeneratorExpr> factors);

  Op op() const { return op_; }
  const Rational& constant() const { return value_; }
  const Symbol& atom() const { return atom_; }
  const std::vector<GeneratorExpr>& children() const { return children_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  /// Homogeneous degree; throws std::domain_error for inhomogeneous sums.
  int degree() const;
  bool divisors_only() const;
  void validate(MarkedSpace space) const;
  std::string to_string() const;

  friend GeneratorExpr operator+(const GeneratorExpr& a, const GeneratorExpr& b);
  friend GeneratorExpr operator-(const GeneratorExpr& a, const GeneratorExpr& b);
  friend GeneratorExpr operator-(const GeneratorExpr& a);
  friend GeneratorExpr operator*(const GeneratorExpr& a, const GeneratorExpr& b);
  friend GeneratorExpr operator*(const Rational& c, const GeneratorExpr& a);

 private:
  Op op_ = Op::Constant;
  Rational value_;
  Symbol atom_;
  std::vector<GeneratorExpr> children_;
  std::vector<Rational> coeffs_;  // Sum only, parallel to children_
};

/// delta_h: sum of all distinct classes delta_{h:J}.
GeneratorExpr delta_aggregate(MarkedSpace space, int h);
/// delta_{h:j}: sum of all distinct classes delta_{h:J} with |J| = j.
GeneratorExpr delta_aggregate(MarkedSpace space, int h, int j);

/// Pullback along the map forgetting marking `new_label` of Mbar_{g,n+1}.
/// Old markings >= new_label shift up by one. Substitution rules:
///   psi_i -> psi_i - delta_{0:{i,new}},  omega_i -> omega_i,  lambda -> lambda,
///   delta_irr -> delta_irr,  delta_{h:J} -> delta_{h:J} + delta_{h:J+new}.
/// Only divisor symbols are accepted (std::invalid_argument otherwise).
GeneratorExpr pullback_forget(const GeneratorExpr& expr, MarkedSpace from, int new_label);

/// omega_i as the iterated pullback of psi from the one-pointed space.
GeneratorExpr omega_expr(MarkedSpace space, int i);
/// lambda in boundary terms: 0 in genus 0, delta_irr/12 in genus 1,
/// delta_irr/10 + delta_1/5 in genus 2.
GeneratorExpr lambda_expr(MarkedSpace space);

}  // namespace tautcalc
