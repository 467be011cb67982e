#include <doctest.h>

#include "tautcalc/canonical.hpp"
#include "tautcalc/expand.hpp"
#include "tautcalc/loci.hpp"
#include "tautcalc/pairing.hpp"
#include "tautcalc/product.hpp"
#include "tautcalc/pullback.hpp"
#include "tautcalc/verification.hpp"

using namespace tautcalc;
using loci::Stratum22;

namespace {

constexpr MarkedSpace k21{2, 1}, k22{2, 2}, k23{2, 3};

// Coefficient of a locus in a class: stored coefficient times the automorphism order.
Rational locus_coefficient(const TautClass& x, const StableGraph& g) {
  const CanonicalStratum cs = canonicalize(DecoratedStratum(g));
  const auto it = x.terms().find(cs.code);
  return it == x.terms().end() ? Rational(0) : it->second.coeff * cs.automorphisms;
}

}  // namespace

TEST_SUITE("loci") {

TEST_CASE("one marked Weierstrass point") {
  const TautClass a = loci::hyp21(), b = loci::hyp21_boundary_form();
  CHECK(a.degree() == 1);
  CHECK(num_equal(a, b).equal);
  // pairings against every complementary stratum agree exactly between the two forms
  const auto tests = spanning_set(k21, 3);
  CHECK(pairing_vector(a, tests) == pairing_vector(b, tests));
}

TEST_CASE("two marked Weierstrass points, degrees and forms") {
  const TautClass div = loci::hyp22_divisor_form();
  CHECK(div.degree() == 2);
  CHECK(loci::hyp22_strata_form().degree() == 2);
  CHECK(num_equal(div, loci::hyp22_strata_form()).equal);
  CHECK(num_equal(div, loci::hyp22_pullback_form()).equal);
  CHECK(num_equal(div, loci::hyp22_plain_form()).equal);
}

TEST_CASE("automorphism orders of the named strata") {
  CHECK(canonicalize(loci::stratum22_graph(Stratum22::D00)).automorphisms == 8);
  CHECK(canonicalize(loci::stratum22_graph(Stratum22::Gamma0)).automorphisms == 2);
  CHECK(canonicalize(loci::stratum22_graph(Stratum22::D11)).automorphisms == 2);
  CHECK(canonicalize(loci::stratum22_graph(Stratum22::D01)).automorphisms == 2);
  CHECK(canonicalize(loci::stratum22_graph(Stratum22::D01_1)).automorphisms == 2);
  for (auto s : {Stratum22::D11, Stratum22::D01, Stratum22::D01_1, Stratum22::D01_2, Stratum22::D01_12,
                 Stratum22::Gamma0, Stratum22::D00})
    CHECK(loci::stratum22(s).degree() == 2);
}

TEST_CASE("strata-form coefficients read back from the built class") {
  const TautClass x = loci::hyp22_strata_form();
  CHECK(locus_coefficient(x, loci::stratum22_graph(Stratum22::D00)) == Rational(1, 24));
  CHECK(locus_coefficient(x, loci::stratum22_graph(Stratum22::D01_1)) == Rational(-1, 8));
  CHECK(locus_coefficient(x, loci::stratum22_graph(Stratum22::D01_2)) == Rational(-1, 8));
  CHECK(locus_coefficient(x, loci::stratum22_graph(Stratum22::D01_12)) == Rational(-1, 8));
  CHECK(locus_coefficient(x, loci::stratum22_graph(Stratum22::D11)) == 9);
  CHECK(locus_coefficient(x, loci::stratum22_graph(Stratum22::Gamma0)) == 2);
}

TEST_CASE("delta_2w is the rational tail times a pulled-back Weierstrass divisor") {
  const TautClass w = pullback_forget(loci::hyp21(), 2);
  const TautClass tail = expand(GeneratorExpr(DivisorGen::delta_sep(k22, 0, marking_bit(1) | marking_bit(2))), k22);
  CHECK(num_equal(loci::delta_2w(), mult(tail, w)).equal);
}

TEST_CASE("codimension-two and three building blocks") {
  CHECK(loci::delta_2psi().degree() == 2);
  CHECK(loci::delta_2psi(true).empty());  // psi on a trivalent rational vertex dies
  CHECK(loci::gamma_class(k23, 0).degree() == 2);
  CHECK(loci::xi_class(1).degree() == 3);
  CHECK(loci::xi_class(2).degree() == 3);
  CHECK(loci::theta_class().degree() == 3);
  CHECK(num_equal(loci::theta_class(1), loci::theta_class(2)).equal);
  CHECK(num_equal(relabel(loci::xi_class(1), {2, 1, 3}), loci::xi_class(2)).equal);
  CHECK_THROWS_AS(loci::xi_class(3), std::invalid_argument);
}

TEST_CASE("three-point class has codimension three") {
  CHECK(loci::hyp23().degree() == 3);
}

TEST_CASE("verifier registry") {
  CHECK(Verifier::check_names().size() == 11);
  CHECK(Verifier::known("eq2-eq3"));
  CHECK_FALSE(Verifier::known("nosuch"));
  Verifier v;
  CHECK_THROWS_AS(v.run("nosuch"), std::invalid_argument);
  const auto r = v.run("eq2-eq3");
  CHECK(r.pass);
  CHECK(r.name == "eq2-eq3");
  CHECK(r.spanning_size == 161);
}

TEST_CASE("cheap checks pass") {
  Verifier v;
  for (const char* name : {"eq1-forms", "eq2-eq4", "lemma41", "delta2psi", "sign-cert", "testfamily"}) {
    CAPTURE(name);
    const auto r = v.run(name);
    CHECK(r.pass);
    CHECK(r.witnesses.empty());
  }
}

TEST_CASE("deliberate defects fail with witnesses") {
  for (const auto& [m, name] : {std::pair{Mutation::Lemma41DropGamma, "lemma41"},
                                std::pair{Mutation::Delta2PsiGenusZeroSide, "delta2psi"},
                                std::pair{Mutation::FamilyPerturb27, "testfamily"}}) {
    CAPTURE(name);
    CheckOptions o;
    o.mutations.insert(m);
    Verifier v(o);
    const auto r = v.run(name);
    CHECK_FALSE(r.pass);
    CHECK_FALSE(r.witnesses.empty());
  }
}

}  // TEST_SUITE
