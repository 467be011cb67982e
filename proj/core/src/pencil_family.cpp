#include "tautcalc/pencil_family.hpp"

#include <array>
#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace tautcalc::family {
namespace {

constexpr MarkedSpace k23{2, 3};
constexpr int kBasis = 11;  // H, E_1..E_9, fiber
constexpr int kFiber = 10;

using Vec = std::array<Rational, kBasis>;

Vec to_vec(const LatticeClass& c) {
  Vec v;
  v[0] = c.h;
  for (int i = 0; i < 9; ++i) v[1 + i] = c.e[i];
  v[kFiber] = c.f;
  return v;
}

LatticeClass to_lattice(const Vec& v) {
  for (const Rational& x : v)
    if (x.get_den() != 1) throw std::domain_error("restriction has a non-integral coefficient");
  LatticeClass c;
  c.h = v[0].get_num().get_si();
  for (int i = 0; i < 9; ++i) c.e[i] = v[1 + i].get_num().get_si();
  c.f = v[kFiber].get_num().get_si();
  return c;
}

LatticeClass basis(int i) {
  if (i == 0) return LatticeClass::hyperplane();
  if (i == kFiber) return LatticeClass::fiber();
  return LatticeClass::exceptional(i);
}

// Polynomials in the eleven basis classes, keyed by sorted index lists; degree <= 3.
using Poly = std::map<std::vector<int>, Rational>;

void add_to(Poly& p, const std::vector<int>& key, const Rational& c) {
  Rational& slot = p[key];
  slot += c;
  if (is_zero(slot)) p.erase(key);
}

Poly linear(const Vec& v) {
  Poly p;
  for (int i = 0; i < kBasis; ++i)
    if (!is_zero(v[i])) p[{i}] = v[i];
  return p;
}

Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      if (ka.size() + kb.size() > 3) continue;
      std::vector<int> k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      std::sort(k.begin(), k.end());
      add_to(out, k, ca * cb);
    }
  return out;
}

Vec restrict_vec(const DivisorGen& d);

Poly evaluate(const GeneratorExpr& e) {
  switch (e.op()) {
    case GeneratorExpr::Op::Constant: {
      Poly p;
      if (!is_zero(e.constant())) p[{}] = e.constant();
      return p;
    }
    case GeneratorExpr::Op::Atom:
      if (e.atom().kind != Symbol::Kind::Divisor)
        throw std::invalid_argument("only divisor symbols restrict to the family");
      return linear(restrict_vec(e.atom().divisor));
    case GeneratorExpr::Op::Sum: {
      Poly out;
      for (std::size_t i = 0; i < e.children().size(); ++i)
        for (const auto& [k, c] : evaluate(e.children()[i])) add_to(out, k, e.coefficients()[i] * c);
      return out;
    }
    case GeneratorExpr::Op::Product: {
      Poly out{{{}, Rational(1)}};
      for (const GeneratorExpr& f : e.children()) out = multiply(out, evaluate(f));
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

Vec linear_part(const Poly& p) {
  Vec v;
  for (const auto& [k, c] : p) {
    if (k.size() != 1) throw std::domain_error("expected a linear expression");
    v[k[0]] += c;
  }
  return v;
}

Vec restrict_vec(const DivisorGen& d) {
  d.validate(k23);
  switch (d.kind) {
    case DivisorGen::Kind::Psi: return to_vec(d.index == 1 ? LatticeClass::fiber() : LatticeClass{});
    case DivisorGen::Kind::Omega: return linear_part(evaluate(omega_expr(k23, d.index)));
    case DivisorGen::Kind::Lambda: return to_vec(restrict_divisor("lambda"));
    case DivisorGen::Kind::DeltaIrr: return to_vec(restrict_divisor("delta_irr"));
    case DivisorGen::Kind::DeltaSep: {
      const DivisorGen n = DivisorGen::delta_sep(k23, d.h, d.J);
      if (n.h == 0 && n.J == (marking_bit(2) | marking_bit(3))) return to_vec(restrict_divisor("d0:{2,3}"));
      if (n.h == 1 && n.J == marking_bit(1)) return to_vec(restrict_divisor("d1:{1}"));
      if (n.h == 1 && n.J == 0) return to_vec(restrict_divisor("d1:0"));
      return Vec{};
    }
  }
  throw std::logic_error("unreachable");
}

Rational integrate(const Poly& p) {
  Rational total;
  for (const auto& [k, c] : p)
    if (k.size() == 3) total += c * triple_product(basis(k[0]), basis(k[1]), basis(k[2]));
  return total;
}

}  // namespace

LatticeClass LatticeClass::hyperplane() { return {1, {}, 0}; }

LatticeClass LatticeClass::exceptional(int i) {
  if (i < 1 || i > 9) throw std::invalid_argument("exceptional index outside 1..9");
  LatticeClass c;
  c.e[i - 1] = 1;
  return c;
}

LatticeClass LatticeClass::exceptional_sum() {
  LatticeClass c;
  c.e.fill(1);
  return c;
}

LatticeClass LatticeClass::fiber() { return {0, {}, 1}; }

LatticeClass& LatticeClass::operator+=(const LatticeClass& o) {
  h += o.h;
  for (int i = 0; i < 9; ++i) e[i] += o.e[i];
  f += o.f;
  return *this;
}

LatticeClass& LatticeClass::operator-=(const LatticeClass& o) { return *this += (-1) * o; }

LatticeClass operator*(long k, LatticeClass a) {
  a.h *= k;
  for (long& x : a.e) x *= k;
  a.f *= k;
  return a;
}

std::string LatticeClass::to_string() const {
  std::ostringstream out;
  out << h << "H";
  for (int i = 0; i < 9; ++i)
    if (e[i] != 0) out << (e[i] < 0 ? " - " : " + ") << std::labs(e[i]) << "E" << i + 1;
  if (f != 0) out << (f < 0 ? " - " : " + ") << std::labs(f) << "F";
  return out.str();
}

long surface_product(const LatticeClass& a, const LatticeClass& b) {
  long s = a.h * b.h;
  for (int i = 0; i < 9; ++i) s -= a.e[i] * b.e[i];
  return s;
}

long triple_product(const LatticeClass& a, const LatticeClass& b, const LatticeClass& c) {
  return a.f * surface_product(b, c) + b.f * surface_product(a, c) + c.f * surface_product(a, b);
}

LatticeClass restrict_divisor(const std::string& name) {
  const LatticeClass H = LatticeClass::hyperplane();
  const LatticeClass S = LatticeClass::exceptional_sum();
  const LatticeClass E0 = LatticeClass::exceptional(1);
  const LatticeClass F = LatticeClass::fiber();
  if (name == "psi1") return F;
  if (name == "delta_irr") return 36 * H - 12 * S;
  if (name == "lambda") return 3 * H - S;
  if (name == "d0:{2,3}") return S - 3 * H - E0;
  if (name == "d1:{1}") return S - 3 * H - E0 - F;
  if (name == "d1:0") return E0 + F;
  throw std::invalid_argument("no restriction known for '" + name + "'");
}

LatticeClass restrict_generator(const DivisorGen& d) { return to_lattice(restrict_vec(d)); }

Rational restricted_degree(const GeneratorExpr& expr) {
  const int deg = expr.degree();
  if (deg != 3) throw std::invalid_argument("the family is three-dimensional; got degree " + std::to_string(deg));
  return integrate(evaluate(expr));
}

FamilyNumbers family_numbers(const loci::Transcription& t) {
  using G = GeneratorExpr;
  constexpr MarkedSpace k21{2, 1}, k22{2, 2};
  const G pulled22 = pullback_forget(loci::hyp22_divisor_expr(t), k22, 3);
  const G pulled21 = pullback_forget(pullback_forget(loci::hyp21_expr(t), k21, 1), k22, 2);
  const G d023 = DivisorGen::delta_sep(k23, 0, marking_bit(2) | marking_bit(3));
  const G d11 = DivisorGen::delta_sep(k23, 1, marking_bit(1));
  const G d10 = DivisorGen::delta_sep(k23, 1, 0);
  const G dirr = DivisorGen::delta_irr();
  const G psi1 = DivisorGen::psi(1);

  // The family-restricted polynomials as written out; omega_3 restricts to -d0:{2,3}.
  const G printed21 = -(t.w1_alt_omega * d023 + t.w1_alt_irr * dirr + t.w1_alt_delta1 * (d11 + d10));
  const G printed22 = -t.w2_psi1psi2 * (psi1 * d023) - t.w2_psi_squares * (d023 * d023) -
                      (psi1 - d023) * (t.w2_delta11 * d11 + t.w2_delta10 * d10 + t.w2_irr * dirr);

  FamilyNumbers out;
  out.product = restricted_degree(pulled21 * pulled22);
  out.product_printed = restricted_degree(printed21 * printed22);
  out.with_delta = restricted_degree(pulled22 * d023);
  out.with_delta_printed = restricted_degree(printed22 * d023);
  out.xi_degree = 12 * 3;
  return out;
}

Multiplicities solve_multiplicities(const Rational& product, const Rational& with_delta, long xi_degree) {
  if (xi_degree == 0) throw std::domain_error("the family does not meet Xi_1; gamma is undetermined");
  const Rational beta = Rational(5) / 5;
  const Rational alpha = (5 - beta) / 4;
  const Rational gamma = (product - with_delta * beta) / xi_degree;
  const Rational delta = 5 - 4 * gamma;

  std::array<Rational, 4> sol{alpha, beta, gamma, delta};
  bool ok = true;
  for (const Rational& x : sol) ok = ok && x.get_den() == 1 && sgn(x) > 0;
  if (ok) {
    return {sol[0].get_num().get_si(), sol[1].get_num().get_si(), sol[2].get_num().get_si(),
            sol[3].get_num().get_si()};
  }

  // Report how far the nearest integer point misses each equation.
  std::array<Rational, 4> r;
  for (int i = 0; i < 4; ++i) {
    const Rational shifted = sol[i] + Rational(1, 2);
    mpz_class floor;
    mpz_fdiv_q(floor.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
    r[i] = Rational(floor);
  }
  std::ostringstream msg;
  msg << "multiplicity system has no positive integral solution (exact: alpha=" << to_string(alpha)
      << " beta=" << to_string(beta) << " gamma=" << to_string(gamma) << " delta=" << to_string(delta)
      << "); residuals at the rounded point:"
      << " 4a+b-5=" << to_string(4 * r[0] + r[1] - 5) << " 5b-5=" << to_string(5 * r[1] - 5)
      << " 4c+d-5=" << to_string(4 * r[2] + r[3] - 5)
      << " product-(with_delta*b+xi*c)=" << to_string(product - (with_delta * r[1] + xi_degree * r[2]));
  throw std::domain_error(msg.str());
}

}  // namespace tautcalc::family
