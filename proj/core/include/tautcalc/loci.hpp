#pragma once

#include "tautcalc/generators.hpp"
#include "tautcalc/taut_class.hpp"

namespace tautcalc::loci {

/// Every numeric coefficient of the Weierstrass-locus formulas, one field per printed
/// occurrence. Checks take a copy so single coefficients can be perturbed.
struct Transcription {
  // One marked Weierstrass point: 3 om - la - d1, and 3 om - 1/10 dirr - 6/5 d1.
  Rational w1_omega = 3;
  Rational w1_alt_omega = 3;
  Rational w1_alt_irr{1, 10};
  Rational w1_alt_delta1{6, 5};

  // Two points, divisor polynomial.
  Rational w2_psi1psi2 = 6;
  Rational w2_psi_squares{3, 2};
  Rational w2_delta11{21, 10};
  Rational w2_delta10{3, 5};
  Rational w2_irr{1, 20};

  // Two points, decorated strata.
  Rational s_d2w = 5;
  Rational s_d11 = 9;
  Rational s_d01{5, 8};
  Rational s_d01_1{-1, 8};
  Rational s_d01_2{-1, 8};
  Rational s_d01_12{-1, 8};
  Rational s_gamma = 2;
  Rational s_d00{1, 24};

  // Two points, product form (also the rational-tail class d2w).
  Rational p_omega = 3;

  // Three points, closed formula.
  Rational t_omega = 3;
  Rational t_xi_psi = 2;

  // Three points, correction classes Xi_i.
  Rational xi_psi = 2;
};

/// 3 om_i - la - d1 on (2, n) with the given omega coefficient.
GeneratorExpr weierstrass_divisor(MarkedSpace space, int i, const Rational& omega_coeff);

GeneratorExpr hyp21_expr(const Transcription& t = {});
GeneratorExpr hyp21_boundary_expr(const Transcription& t = {});
GeneratorExpr hyp22_divisor_expr(const Transcription& t = {});

TautClass hyp21(const Transcription& t = {});
TautClass hyp21_boundary_form(const Transcription& t = {});

TautClass hyp22_divisor_form(const Transcription& t = {});
TautClass hyp22_strata_form(const Transcription& t = {});
/// Product of pulled-back one-point classes minus corrections.
TautClass hyp22_pullback_form(const Transcription& t = {});
/// Same, written with omega classes on the two-pointed space directly.
TautClass hyp22_plain_form(const Transcription& t = {});

/// Named boundary strata of Mbar_{2,2} entering the strata form, as locus classes.
enum class Stratum22 { D11, D01, D01_1, D01_2, D01_12, Gamma0, D00 };
StableGraph stratum22_graph(Stratum22 s);
TautClass stratum22(Stratum22 s);

/// Rational tail with both points attached at a Weierstrass point.
TautClass delta_2w(const Transcription& t = {});
/// psi on the genus-two branch of d0:{1,2}; `genus_zero_side` moves it to the other branch.
TautClass delta_2psi(bool genus_zero_side = false);

/// gamma_{1:J} on (2, n).
TautClass gamma_class(MarkedSpace space, MarkingSet J);
/// (2 psi_i - d1:{i}) * gamma_{1:{i}} on (2,3).
TautClass xi_class(int i, const Transcription& t = {});
/// gamma_{1:} * (psi_i - d0:{i,3}) on (2,3), i in {1, 2}.
TautClass theta_class(int i = 1);

TautClass hyp23(const Transcription& t = {});
TautClass hyp23_via_prop51(const Transcription& t = {});

}  // namespace tautcalc::loci
