#include "tautcalc/generators.hpp"

#include <set>
#include <stdexcept>

namespace tautcalc {
namespace {

bool side_stable(int h, int legs) { return 2 * h - 2 + legs + 1 > 0; }

std::string set_name(MarkingSet J) {
  std::string s = "{";
  bool first = true;
  for (int i = 1; i <= 32; ++i)
    if (J & marking_bit(i)) {
      if (!first) s += ',';
      s += std::to_string(i);
      first = false;
    }
  return s + "}";
}

// Markings after inserting new_label: old i -> i or i + 1.
int shifted(int i, int new_label) { return i < new_label ? i : i + 1; }

MarkingSet shifted(MarkingSet J, int n, int new_label) {
  MarkingSet out = 0;
  for (int i = 1; i <= n; ++i)
    if (J & marking_bit(i)) out |= marking_bit(shifted(i, new_label));
  return out;
}

}  // namespace

DivisorGen DivisorGen::delta_sep(MarkedSpace space, int h, MarkingSet J) {
  DivisorGen d{Kind::DeltaSep, 0, h, J};
  d.validate(space);
  const int oh = space.g - h;
  const MarkingSet oJ = all_markings(space.n) & ~J;
  if (std::pair{oh, oJ} < std::pair{h, J}) {
    d.h = oh;
    d.J = oJ;
  }
  return d;
}

void DivisorGen::validate(MarkedSpace space) const {
  space.validate();
  switch (kind) {
    case Kind::Psi:
    case Kind::Omega:
      if (index < 1 || index > space.n)
        throw std::invalid_argument(name() + " refers to a marking outside 1.." + std::to_string(space.n));
      if (kind == Kind::Omega && space.g == 0)
        throw std::invalid_argument("omega classes need positive genus");
      return;
    case Kind::Lambda:
      if (space.g > 2) throw std::invalid_argument("lambda is only expressible here for genus <= 2");
      return;
    case Kind::DeltaIrr:
      if (space.g < 1) throw std::invalid_argument("delta_irr needs positive genus");
      return;
    case Kind::DeltaSep: {
      if (J & ~all_markings(space.n)) throw std::invalid_argument(name() + " uses markings outside the space");
      const int jn = popcount(J);
      if (h < 0 || h > space.g || !side_stable(h, jn) || !side_stable(space.g - h, space.n - jn))
        throw std::invalid_argument(name() + " is not a boundary divisor of Mbar_{" + std::to_string(space.g) +
                                    "," + std::to_string(space.n) + "}");
      return;
    }
  }
}

std::string DivisorGen::name() const {
  switch (kind) {
    case Kind::Psi: return "psi" + std::to_string(index);
    case Kind::Omega: return "om" + std::to_string(index);
    case Kind::Lambda: return "la";
    case Kind::DeltaIrr: return "dirr";
    case Kind::DeltaSep: return "d" + std::to_string(h) + ":" + set_name(J);
  }
  return "?";
}

void Symbol::validate(MarkedSpace space) const {
  switch (kind) {
    case Kind::Divisor:
      divisor.validate(space);
      return;
    case Kind::Gamma:
      if (space.g != 2) throw std::invalid_argument("gamma{1:J} is only supported in genus 2");
      if (J & ~all_markings(space.n)) throw std::invalid_argument(name() + " uses markings outside the space");
      if (popcount(J) == space.n) throw std::invalid_argument(name() + " has an unstable rational vertex");
      return;
    case Kind::Delta2Psi:
      space.validate();
      if (space.g != 2 || space.n != 2) throw std::invalid_argument("d2psi is only defined on Mbar_{2,2}");
      return;
  }
}

std::string Symbol::name() const {
  switch (kind) {
    case Kind::Divisor: return divisor.name();
    case Kind::Gamma: {
      auto s = set_name(J);
      return "gamma{1:" + s.substr(1, s.size() - 2) + "}";
    }
    case Kind::Delta2Psi: return "d2psi";
  }
  return "?";
}

GeneratorExpr::GeneratorExpr(Rational c) : op_(Op::Constant), value_(std::move(c)) {}

GeneratorExpr::GeneratorExpr(Symbol s) : op_(Op::Atom), atom_(s) {}

GeneratorExpr GeneratorExpr::sum(std::vector<std::pair<Rational, GeneratorExpr>> terms) {
  GeneratorExpr e;
  e.op_ = Op::Sum;
  for (auto& [c, t] : terms) {
    if (is_zero(c)) continue;
    e.coeffs_.push_back(c);
    e.children_.push_back(std::move(t));
  }
  return e;
}

GeneratorExpr GeneratorExpr::product(std::vector<GeneratorExpr> factors) {
  GeneratorExpr e;
  e.op_ = Op::Product;
  e.children_ = std::move(factors);
  return e;
}

int GeneratorExpr::degree() const {
  switch (op_) {
    case Op::Constant: return 0;
    case Op::Atom: return atom_.degree();
    case Op::Product: {
      int d = 0;
      for (const auto& c : children_) d += c.degree();
      return d;
    }
    case Op::Sum: {
      if (children_.empty()) return 0;
      const int d = children_.front().degree();
      for (const auto& c : children_)
        if (c.degree() != d) throw std::domain_error("expression is not homogeneous: " + to_string());
      return d;
    }
  }
  return 0;
}

bool GeneratorExpr::divisors_only() const {
  if (op_ == Op::Atom) return atom_.kind == Symbol::Kind::Divisor;
  for (const auto& c : children_)
    if (!c.divisors_only()) return false;
  return true;
}

void GeneratorExpr::validate(MarkedSpace space) const {
  if (op_ == Op::Atom) atom_.validate(space);
  for (const auto& c : children_) c.validate(space);
}

std::string GeneratorExpr::to_string() const {
  switch (op_) {
    case Op::Constant: return tautcalc::to_string(value_);
    case Op::Atom: return atom_.name();
    case Op::Product: {
      std::string s;
      for (std::size_t i = 0; i < children_.size(); ++i) {
        if (i) s += '*';
        const bool paren = children_[i].op_ == Op::Sum;
        s += paren ? "(" + children_[i].to_string() + ")" : children_[i].to_string();
      }
      return s.empty() ? "1" : s;
    }
    case Op::Sum: {
      std::string s;
      for (std::size_t i = 0; i < children_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (i) s += sgn(c) < 0 ? " - " : " + ";
        else if (sgn(c) < 0) s += "-";
        const Rational a = abs(c);
        if (a != 1) s += tautcalc::to_string(a) + "*";
        const bool paren = children_[i].op_ == Op::Sum || (a != 1 && children_[i].op_ == Op::Product);
        s += paren ? "(" + children_[i].to_string() + ")" : children_[i].to_string();
      }
      return s.empty() ? "0" : s;
    }
  }
  return "?";
}

GeneratorExpr operator+(const GeneratorExpr& a, const GeneratorExpr& b) {
  return GeneratorExpr::sum({{1, a}, {1, b}});
}

GeneratorExpr operator-(const GeneratorExpr& a, const GeneratorExpr& b) {
  return GeneratorExpr::sum({{1, a}, {-1, b}});
}

GeneratorExpr operator-(const GeneratorExpr& a) { return GeneratorExpr::sum({{-1, a}}); }

GeneratorExpr operator*(const GeneratorExpr& a, const GeneratorExpr& b) {
  return GeneratorExpr::product({a, b});
}

GeneratorExpr operator*(const Rational& c, const GeneratorExpr& a) { return GeneratorExpr::sum({{c, a}}); }

GeneratorExpr delta_aggregate(MarkedSpace space, int h) {
  space.validate();
  std::set<DivisorGen> seen;
  std::vector<std::pair<Rational, GeneratorExpr>> terms;
  for (MarkingSet J = 0; J <= all_markings(space.n); ++J) {
    const int jn = popcount(J);
    if (!side_stable(h, jn) || !side_stable(space.g - h, space.n - jn)) continue;
    auto d = DivisorGen::delta_sep(space, h, J);
    if (seen.insert(d).second) terms.push_back({1, GeneratorExpr(d)});
  }
  return GeneratorExpr::sum(std::move(terms));
}

GeneratorExpr delta_aggregate(MarkedSpace space, int h, int j) {
  space.validate();
  std::set<DivisorGen> seen;
  std::vector<std::pair<Rational, GeneratorExpr>> terms;
  for (MarkingSet J = 0; J <= all_markings(space.n); ++J) {
    if (popcount(J) != j) continue;
    if (!side_stable(h, j) || !side_stable(space.g - h, space.n - j)) continue;
    auto d = DivisorGen::delta_sep(space, h, J);
    if (seen.insert(d).second) terms.push_back({1, GeneratorExpr(d)});
  }
  return GeneratorExpr::sum(std::move(terms));
}

GeneratorExpr pullback_forget(const GeneratorExpr& expr, MarkedSpace from, int new_label) {
  from.validate();
  if (new_label < 1 || new_label > from.n + 1) throw std::invalid_argument("new marking label out of range");
  const MarkedSpace to{from.g, from.n + 1};
  switch (expr.op()) {
    case GeneratorExpr::Op::Constant: return expr;
    case GeneratorExpr::Op::Sum: {
      std::vector<std::pair<Rational, GeneratorExpr>> terms;
      for (std::size_t i = 0; i < expr.children().size(); ++i)
        terms.push_back({expr.coefficients()[i], pullback_forget(expr.children()[i], from, new_label)});
      return GeneratorExpr::sum(std::move(terms));
    }
    case GeneratorExpr::Op::Product: {
      std::vector<GeneratorExpr> factors;
      for (const auto& c : expr.children()) factors.push_back(pullback_forget(c, from, new_label));
      return GeneratorExpr::product(std::move(factors));
    }
    case GeneratorExpr::Op::Atom: break;
  }
  const Symbol& s = expr.atom();
  if (s.kind != Symbol::Kind::Divisor)
    throw std::invalid_argument("pullback_forget accepts divisor generators only, got " + s.name());
  const DivisorGen& d = s.divisor;
  d.validate(from);
  switch (d.kind) {
    case DivisorGen::Kind::Psi: {
      const int i = shifted(d.index, new_label);
      return GeneratorExpr(DivisorGen::psi(i)) -
             GeneratorExpr(DivisorGen::delta_sep(to, 0, marking_bit(i) | marking_bit(new_label)));
    }
    case DivisorGen::Kind::Omega: return GeneratorExpr(DivisorGen::omega(shifted(d.index, new_label)));
    case DivisorGen::Kind::Lambda: return GeneratorExpr(DivisorGen::lambda());
    case DivisorGen::Kind::DeltaIrr: return GeneratorExpr(DivisorGen::delta_irr());
    case DivisorGen::Kind::DeltaSep: {
      const MarkingSet J = shifted(d.J, from.n, new_label);
      const auto a = DivisorGen::delta_sep(to, d.h, J);
      const auto b = DivisorGen::delta_sep(to, d.h, J | marking_bit(new_label));
      // When both sides are identical (g = 2h, no markings) the two lifts coincide.
      if (a == b) return GeneratorExpr(a);
      return GeneratorExpr(a) + GeneratorExpr(b);
    }
  }
  return expr;
}

GeneratorExpr omega_expr(MarkedSpace space, int i) {
  DivisorGen::omega(i).validate(space);
  std::vector<int> labels{i};
  GeneratorExpr e(DivisorGen::psi(1));
  for (int j = 1; j <= space.n; ++j) {
    if (j == i) continue;
    int position = 1;
    for (int l : labels) position += (l < j);
    e = pullback_forget(e, {space.g, static_cast<int>(labels.size())}, position);
    labels.insert(labels.begin() + (position - 1), j);
  }
  return e;
}

GeneratorExpr lambda_expr(MarkedSpace space) {
  DivisorGen::lambda().validate(space);
  if (space.g == 0) return GeneratorExpr(Rational(0));
  if (space.g == 1) return Rational(1, 12) * GeneratorExpr(DivisorGen::delta_irr());
  return Rational(1, 10) * GeneratorExpr(DivisorGen::delta_irr()) + Rational(1, 5) * delta_aggregate(space, 1);
}

}  // namespace tautcalc
