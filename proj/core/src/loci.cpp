#include "tautcalc/loci.hpp"

#include <stdexcept>

#include "tautcalc/expand.hpp"
#include "tautcalc/product.hpp"

namespace tautcalc::loci {
namespace {

using G = GeneratorExpr;

constexpr MarkedSpace k21{2, 1};
constexpr MarkedSpace k22{2, 2};
constexpr MarkedSpace k23{2, 3};

G psi(int i) { return DivisorGen::psi(i); }
G om(int i) { return DivisorGen::omega(i); }
G la() { return DivisorGen::lambda(); }
G dirr() { return DivisorGen::delta_irr(); }
G d(MarkedSpace s, int h, MarkingSet J) { return DivisorGen::delta_sep(s, h, J); }
G gamma(MarkingSet J) { return G(Symbol::gamma(J)); }

constexpr MarkingSet set(std::initializer_list<int> xs) {
  MarkingSet m = 0;
  for (int x : xs) m |= marking_bit(x);
  return m;
}

}  // namespace

GeneratorExpr weierstrass_divisor(MarkedSpace space, int i, const Rational& omega_coeff) {
  return omega_coeff * om(i) - la() - delta_aggregate(space, 1);
}

GeneratorExpr hyp21_expr(const Transcription& t) { return weierstrass_divisor(k21, 1, t.w1_omega); }

GeneratorExpr hyp21_boundary_expr(const Transcription& t) {
  return t.w1_alt_omega * om(1) - t.w1_alt_irr * dirr() - t.w1_alt_delta1 * delta_aggregate(k21, 1);
}

GeneratorExpr hyp22_divisor_expr(const Transcription& t) {
  const G tail = t.w2_delta11 * delta_aggregate(k22, 1, 1) + t.w2_delta10 * delta_aggregate(k22, 1, 0) +
                 t.w2_irr * dirr();
  return t.w2_psi1psi2 * (psi(1) * psi(2)) - t.w2_psi_squares * (psi(1) * psi(1) + psi(2) * psi(2)) -
         (psi(1) + psi(2)) * tail;
}

TautClass hyp21(const Transcription& t) { return expand(hyp21_expr(t), k21); }
TautClass hyp21_boundary_form(const Transcription& t) { return expand(hyp21_boundary_expr(t), k21); }
TautClass hyp22_divisor_form(const Transcription& t) { return expand(hyp22_divisor_expr(t), k22); }

StableGraph stratum22_graph(Stratum22 s) {
  switch (s) {
    case Stratum22::D11: return StableGraph({0, 1, 1}, {0, 0}, {{0, 1}, {0, 2}});
    case Stratum22::D01: return StableGraph({0, 1}, {0, 0}, {{0, 0}, {0, 1}});
    case Stratum22::D01_1: return StableGraph({1, 0}, {0, 1}, {{0, 1}, {1, 1}});
    case Stratum22::D01_2: return StableGraph({1, 0}, {1, 0}, {{0, 1}, {1, 1}});
    case Stratum22::D01_12: return StableGraph({1, 0}, {0, 0}, {{0, 1}, {1, 1}});
    case Stratum22::Gamma0: return StableGraph({1, 0}, {1, 1}, {{0, 1}, {0, 1}});
    case Stratum22::D00: return StableGraph({0}, {0, 0}, {{0, 0}, {0, 0}});
  }
  throw std::invalid_argument("unknown stratum");
}

TautClass stratum22(Stratum22 s) {
  const StableGraph g = stratum22_graph(s);
  return TautClass::of(DecoratedStratum(g), Rational(1, canonicalize(g).automorphisms));
}

TautClass delta_2w(const Transcription& t) {
  return expand(d(k22, 0, set({1, 2})) * weierstrass_divisor(k22, 1, t.p_omega), k22);
}

TautClass delta_2psi(bool genus_zero_side) {
  DecoratedStratum s(StableGraph({2, 0}, {1, 1}, {{0, 1}}));
  s.psi[genus_zero_side ? 3 : 2] = 1;
  return TautClass::of(s);
}

TautClass hyp22_strata_form(const Transcription& t) {
  TautClass out(k22);
  out.add(delta_2w(t), t.s_d2w);
  out.add(stratum22(Stratum22::D11), t.s_d11);
  out.add(stratum22(Stratum22::D01), t.s_d01);
  out.add(stratum22(Stratum22::D01_1), t.s_d01_1);
  out.add(stratum22(Stratum22::D01_2), t.s_d01_2);
  out.add(stratum22(Stratum22::D01_12), t.s_d01_12);
  out.add(stratum22(Stratum22::Gamma0), t.s_gamma);
  out.add(stratum22(Stratum22::D00), t.s_d00);
  return out;
}

TautClass hyp22_pullback_form(const Transcription& t) {
  const G w = weierstrass_divisor(k21, 1, t.p_omega);
  const G e = pullback_forget(w, k21, 1) * pullback_forget(w, k21, 2) -
              d(k22, 0, set({1, 2})) * weierstrass_divisor(k22, 1, t.p_omega) - gamma(0);
  return expand(e, k22);
}

TautClass hyp22_plain_form(const Transcription& t) {
  const G e = weierstrass_divisor(k22, 2, t.p_omega) * weierstrass_divisor(k22, 1, t.p_omega) -
              d(k22, 0, set({1, 2})) * weierstrass_divisor(k22, 1, t.p_omega) - gamma(0);
  return expand(e, k22);
}

TautClass gamma_class(MarkedSpace space, MarkingSet J) { return expand(gamma(J), space); }

TautClass xi_class(int i, const Transcription& t) {
  if (i != 1 && i != 2) throw std::invalid_argument("xi_class is defined for i = 1, 2");
  return expand(gamma(set({i})) * (t.xi_psi * psi(i) - d(k23, 1, set({i}))), k23);
}

TautClass theta_class(int i) {
  if (i != 1 && i != 2) throw std::invalid_argument("theta_class is defined for i = 1, 2");
  return expand(gamma(0) * (psi(i) - d(k23, 0, set({i, 3}))), k23);
}

TautClass hyp23(const Transcription& t) {
  const G w1 = weierstrass_divisor(k23, 1, t.t_omega);
  const G w2 = weierstrass_divisor(k23, 2, t.t_omega);
  const G w3 = weierstrass_divisor(k23, 3, t.t_omega);
  const G first = w1 * w2 - (d(k23, 0, set({1, 2})) + delta_aggregate(k23, 0, 3)) * w1 - gamma(0) - gamma(set({3}));
  const G second = w3 - d(k23, 0, set({1, 3})) - d(k23, 0, set({2, 3}));
  const G e = first * second - gamma(set({1})) * (t.t_xi_psi * psi(1) - d(k23, 1, set({1}))) -
              gamma(set({2})) * (t.t_xi_psi * psi(2) - d(k23, 1, set({2}))) -
              gamma(0) * (psi(1) - d(k23, 0, set({1, 3})));
  return expand(e, k23);
}

TautClass hyp23_via_prop51(const Transcription& t) {
  const G pulled22 = pullback_forget(hyp22_divisor_expr(t), k22, 3);
  const G pulled21 = pullback_forget(pullback_forget(hyp21_expr(t), k21, 1), k22, 2);
  TautClass out = expand(pulled22 * (pulled21 - d(k23, 0, set({1, 3})) - d(k23, 0, set({2, 3}))), k23);
  out -= xi_class(1, t);
  out -= xi_class(2, t);
  out -= theta_class(1);
  return out;
}

}  // namespace tautcalc::loci
