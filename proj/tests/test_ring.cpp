#include <doctest.h>

#include "tautcalc/expand.hpp"
#include "tautcalc/expr_parser.hpp"
#include "tautcalc/pairing.hpp"
#include "tautcalc/product.hpp"
#include "tautcalc/pullback.hpp"

using namespace tautcalc;

namespace {

constexpr MarkedSpace k11{1, 1}, k12{1, 2}, k20{2, 0}, k21{2, 1}, k22{2, 2}, k23{2, 3};

TautClass ex(const char* text, MarkedSpace s) { return expand(parse_expr(text, s), s); }

}  // namespace

TEST_SUITE("tautring") {

TEST_CASE("psi expands to one decorated smooth stratum") {
  const TautClass x = ex("psi1", k21);
  REQUIRE(x.size() == 1);
  const auto& t = x.terms().begin()->second;
  CHECK(t.coeff == 1);
  CHECK(t.stratum.graph.num_edges() == 0);
  CHECK(t.stratum.psi == std::vector<int>{1});
}

TEST_CASE("delta_irr on Mbar_{1,1} has degree one half") {
  const TautClass d = mult_divisor(TautClass::fundamental(k11), DivisorGen::delta_irr());
  CHECK(integrate(d) == Rational(1, 2));
  CHECK(integrate(ex("dirr", k11)) == Rational(1, 2));
  CHECK(integrate(ex("la", k11)) == Rational(1, 24));
}

TEST_CASE("kappa integrals") {
  CHECK(vertex_integral(1, {0}, {1}) == Rational(1, 24));
  CHECK(vertex_integral(0, {0, 0, 0, 0}, {1}) == 1);
  CHECK(vertex_integral(2, {}, {3}) == Rational(1, 1152));
  // kappa_0 is the dilaton shadow: multiplication by 2g - 2 + n
  CHECK(vertex_integral(2, {4}, {0}) == 3 * vertex_integral(2, {4}, {}));
  CHECK(vertex_integral(1, {0, 1}, {0}) == 2 * vertex_integral(1, {0, 1}, {}));
  CHECK(vertex_integral(2, {1}, {0, 2}) == 3 * vertex_integral(2, {1}, {2}));
}

TEST_CASE("integrals of classes below top degree vanish") {
  CHECK(integrate(TautClass::fundamental(k21)) == 0);
  CHECK(integrate(ex("psi1^3", k21)) == 0);
  CHECK(integrate(ex("psi1^4", k21)) == Rational(1, 1152));
}

TEST_CASE("lambda cubed on Mbar_2") {
  const TautClass la = ex("la", k20);
  CHECK(integrate(ex("la^3", k20)) == Rational(1, 2880));
  CHECK(integrate(mult(la, mult(la, la))) == Rational(1, 2880));
  CHECK(pair(la, ex("la^2", k20)) == Rational(1, 2880));
}

TEST_CASE("product with the fundamental class is the identity") {
  const TautClass x = ex("psi1*d0:{1,2} - 3*dirr*la", k22);
  CHECK(mult(x, TautClass::fundamental(k22)) == x);
  CHECK(mult(TautClass::fundamental(k22), x) == x);
}

TEST_CASE("psi multiplications commute") {
  const TautClass g = ex("gamma{1:}", k23);
  CHECK(mult_divisor(mult_divisor(g, DivisorGen::psi(1)), DivisorGen::psi(2)) ==
        mult_divisor(mult_divisor(g, DivisorGen::psi(2)), DivisorGen::psi(1)));
}

TEST_CASE("theta through the general product") {
  const TautClass theta = mult(ex("gamma{1:}", k23), ex("psi1 - d0:{1,3}", k23));
  CHECK(theta.degree() == 3);
  CHECK(num_equal(theta, ex("gamma{1:}*(psi2 - d0:{2,3})", k23)).equal);
}

TEST_CASE("grading and overflow") {
  const TautClass a = ex("psi1*psi2", k22), b = ex("dirr*d1", k22);
  const TautClass p = mult(a, b);
  for (const auto& [code, t] : p.terms()) CHECK(t.stratum.degree() == 4);
  CHECK(mult(ex("psi1^3", k22), ex("dirr^3", k22)).empty());
}

TEST_CASE("pairing") {
  CHECK(pair(ex("psi1", k12), ex("psi1", k12)) == Rational(1, 24));
  CHECK(pair(TautClass::fundamental(k21), ex("psi1^4", k21)) == Rational(1, 1152));
  CHECK_THROWS_AS(pair(ex("psi1", k22), ex("psi1", k22)), std::invalid_argument);
  CHECK_THROWS_AS(pair(ex("psi1", k21), ex("psi1", k22)), std::invalid_argument);
  CHECK_THROWS_AS(mult(ex("psi1", k21), ex("psi1", k22)), std::invalid_argument);
}

TEST_CASE("numerical equality") {
  const TautClass x = ex("3*om1 - la - d1", k21);
  CHECK(num_equal(x, x).equal);
  const PairingReport r = num_equal(ex("psi1", k12), ex("psi2", k12));
  CHECK(r.equal);
  CHECK(r.spanning_size == spanning_set(k12, 1).size());
  const PairingReport bad = num_equal(ex("psi1", k21), ex("dirr", k21));
  CHECK_FALSE(bad.equal);
  REQUIRE_FALSE(bad.witnesses.empty());
  CHECK(bad.witnesses[0].value != 0);
  CHECK_THROWS_AS(num_equal(ex("psi1", k22), ex("psi1^2", k22)), std::invalid_argument);
}

TEST_CASE("spanning set sizes on Mbar_{2,2}") {
  const std::vector<std::size_t> expected{1, 7, 38, 161, 463, 796};
  for (int d = 0; d <= 5; ++d) CHECK(spanning_set(k22, d).size() == expected[d]);
}

TEST_CASE("relabel") {
  const TautClass x = ex("psi1*d0:{1,2} + 2*gamma{1:3}", k23);
  CHECK(relabel(x, {1, 2, 3}) == x);
  CHECK(relabel(ex("d0:{1,2}", k23), {1, 3, 2}) == ex("d0:{1,3}", k23));
  CHECK(relabel(relabel(x, {2, 3, 1}), {3, 1, 2}) == x);
}

TEST_CASE("class pullback along forgetful maps") {
  CHECK(pullback_forget(ex("psi1", k21), 2) == ex("psi1 - d0:{1,2}", k22));
  CHECK(pullback_forget(ex("dirr", k21), 2) == ex("dirr", k22));
  CHECK(pullback_forget(ex("d1", k22), 3) == ex("d1", k23));
  // kappa_1 pulls back to kappa_1 - psi_new
  const TautClass kappa = TautClass::of(DecoratedStratum(StableGraph::smooth(k21), {0}, {{1}}));
  const TautClass pulled = pullback_forget(kappa, 2);
  const TautClass expected =
      TautClass::of(DecoratedStratum(StableGraph::smooth(k22), {0, 0}, {{1}})) - ex("psi2", k22);
  CHECK(pulled == expected);
}

TEST_CASE("pullback is compatible with generator pullback") {
  const char* texts[] = {"psi1^2", "3*om1 - la - d1", "psi1*dirr", "d1^2"};
  for (const char* t : texts) {
    const GeneratorExpr e = parse_expr(t, k21);
    for (int label = 1; label <= 2; ++label)
      CHECK(num_equal(pullback_forget(expand(e, k21), label), expand(pullback_forget(e, k21, label), k22)).equal);
  }
}

TEST_CASE("classes never store zero coefficients") {
  TautClass x = ex("psi1 + dirr", k21);
  x -= ex("psi1", k21);
  CHECK(x == ex("dirr", k21));
  x -= ex("dirr", k21);
  CHECK(x.empty());
}

TEST_CASE("decorations are compared up to graph symmetry") {
  const StableGraph loop({1}, {0}, {{0, 0}});
  DecoratedStratum a(loop), b(loop);
  a.psi[1] = 1;
  b.psi[2] = 1;
  CHECK(canonicalize(a).code == canonicalize(b).code);
  CHECK(canonicalize(a).automorphisms == 1);
  CHECK(canonicalize(DecoratedStratum(loop)).automorphisms == 2);
}

}  // TEST_SUITE
