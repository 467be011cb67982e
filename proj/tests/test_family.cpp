#include <doctest.h>

#include <random>

#include "tautcalc/pencil_family.hpp"

using namespace tautcalc;
using namespace tautcalc::family;

TEST_SUITE("testfamily") {

TEST_CASE("restriction table") {
  const LatticeClass H = LatticeClass::hyperplane(), S = LatticeClass::exceptional_sum(),
                     E0 = LatticeClass::exceptional(1), F = LatticeClass::fiber();
  CHECK(restrict_divisor("psi1") == F);
  const LatticeClass dirr = restrict_divisor("delta_irr");
  CHECK(dirr.h == 36);
  for (long e : dirr.e) CHECK(e == -12);
  CHECK(dirr.f == 0);
  CHECK(restrict_divisor("d0:{2,3}") == S - 3 * H - E0);
  CHECK(restrict_divisor("d1:{1}") == S - 3 * H - E0 - F);
  CHECK(restrict_divisor("d1:0") == E0 + F);
  CHECK(12 * restrict_divisor("lambda") == dirr);
  CHECK_THROWS_AS(restrict_divisor("d0:{1,2}x"), std::invalid_argument);
}

TEST_CASE("generators that miss the family restrict to zero") {
  const MarkedSpace k23{2, 3};
  CHECK(restrict_generator(DivisorGen::delta_sep(k23, 0, marking_bit(1) | marking_bit(2))) == LatticeClass{});
  CHECK(restrict_generator(DivisorGen::delta_sep(k23, 0, 7)) == LatticeClass{});
  CHECK(restrict_generator(DivisorGen::delta_sep(k23, 1, marking_bit(2))) == LatticeClass{});
  CHECK(restrict_generator(DivisorGen::psi(2)) == LatticeClass{});
  CHECK(restrict_generator(DivisorGen::psi(1)) == LatticeClass::fiber());
  // the boundary expression of lambda restricts to the table entry
  CHECK(restrict_generator(DivisorGen::lambda()) == restrict_divisor("lambda"));
  CHECK(restrict_generator(DivisorGen::omega(1)) == LatticeClass::fiber());
  CHECK(restrict_generator(DivisorGen::omega(3)) == -1 * restrict_divisor("d0:{2,3}"));
}

TEST_CASE("triple products") {
  const LatticeClass H = LatticeClass::hyperplane(), F = LatticeClass::fiber(), E = LatticeClass::exceptional(4);
  CHECK(triple_product(H, H, F) == 1);
  CHECK(triple_product(E, F, E) == -1);
  CHECK(triple_product(H, E, F) == 0);
  CHECK(triple_product(F, F, H) == 0);
}

TEST_CASE("surface-only triples vanish and the form is symmetric") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> coef(-5, 5);
  auto draw = [&](bool with_fiber) {
    LatticeClass c;
    c.h = coef(rng);
    for (long& e : c.e) e = coef(rng);
    c.f = with_fiber ? coef(rng) : 0;
    return c;
  };
  for (int i = 0; i < 200; ++i) {
    const LatticeClass a = draw(false), b = draw(false), c = draw(false);
    CHECK(triple_product(a, b, c) == 0);
    const LatticeClass x = draw(true), y = draw(true), z = draw(true);
    CHECK(triple_product(x, y, z) == triple_product(z, x, y));
    CHECK(triple_product(x, y, z) == triple_product(y, x, z));
  }
}

TEST_CASE("family intersection numbers") {
  const FamilyNumbers f = family_numbers();
  CHECK(f.product == 27);
  CHECK(f.product_printed == 27);
  CHECK(f.with_delta == -9);
  CHECK(f.with_delta_printed == -9);
  CHECK(f.xi_degree == 36);
}

TEST_CASE("multiplicity solve") {
  const Multiplicities m = solve_multiplicities(27, -9, 36);
  CHECK(m == Multiplicities{1, 1, 1, 1});
  CHECK(m.beta == 1);
  CHECK_THROWS_AS(solve_multiplicities(28, -9, 36), std::domain_error);
  try {
    solve_multiplicities(28, -9, 36);
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("residuals") != std::string::npos);
  }
  CHECK_THROWS_AS(solve_multiplicities(27, -9, 0), std::domain_error);
}

TEST_CASE("restricted degree needs degree three") {
  CHECK_THROWS_AS(restricted_degree(GeneratorExpr(DivisorGen::psi(1))), std::invalid_argument);
}

}  // TEST_SUITE
