#include <doctest.h>

#include "tautcalc/verification.hpp"

using namespace tautcalc;

// Every transcribed coefficient matters: raising any single one by 1 must make
// at least one check fail.
TEST_SUITE("mutation") {

TEST_CASE("each transcription coefficient is load-bearing" * doctest::timeout(900)) {
  using T = loci::Transcription;
  const std::pair<Rational T::*, const char*> fields[] = {
      {&T::w1_omega, "w1_omega"},         {&T::w1_alt_omega, "w1_alt_omega"},
      {&T::w1_alt_irr, "w1_alt_irr"},     {&T::w1_alt_delta1, "w1_alt_delta1"},
      {&T::w2_psi1psi2, "w2_psi1psi2"},   {&T::w2_psi_squares, "w2_psi_squares"},
      {&T::w2_delta11, "w2_delta11"},     {&T::w2_delta10, "w2_delta10"},
      {&T::w2_irr, "w2_irr"},             {&T::s_d2w, "s_d2w"},
      {&T::s_d11, "s_d11"},               {&T::s_d01, "s_d01"},
      {&T::s_d01_1, "s_d01_1"},           {&T::s_d01_2, "s_d01_2"},
      {&T::s_d01_12, "s_d01_12"},         {&T::s_gamma, "s_gamma"},
      {&T::s_d00, "s_d00"},               {&T::p_omega, "p_omega"},
      {&T::t_omega, "t_omega"},           {&T::t_xi_psi, "t_xi_psi"},
      {&T::xi_psi, "xi_psi"},
  };
  // cheapest first; the first failure settles a coefficient
  const char* order[] = {"sign-cert", "testfamily", "eq1-forms", "eq2-eq3", "eq2-eq4",
                         "lemma41",   "delta2psi",  "xi-theta-sym", "thm2-prop51"};

  Verifier baseline;
  for (const char* name : order) REQUIRE(baseline.run(name).pass);

  for (const auto& [field, label] : fields) {
    CAPTURE(label);
    CheckOptions o;
    o.transcription.*field += 1;
    Verifier v(o);
    std::string caught;
    for (const char* name : order) {
      const VerificationReport r = v.run(name);
      if (!r.pass) {
        CHECK_FALSE(r.witnesses.empty());
        caught = name;
        break;
      }
    }
    CHECK_MESSAGE(!caught.empty(), "no check noticed +1 on ", label);
  }
}

}  // TEST_SUITE
