#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <functional>
#include <fstream>

#include "tautcalc/witten.hpp"

using namespace tautcalc;

namespace {

// Every exponent vector (sorted) of length n with the dimension-matching sum.
void for_each_key(int g, int n, const std::function<void(std::vector<int>)>& f) {
  const int total = 3 * g - 3 + n;
  if (total < 0) return;
  std::vector<int> d(n);
  auto rec = [&](auto&& self, int i, int left, int cap) -> void {
    if (i == n) {
      if (left == 0) f(d);
      return;
    }
    for (int x = std::min(left, cap); x >= 0; --x) {
      d[i] = x;
      self(self, i + 1, left - x, x);
    }
  };
  rec(rec, 0, total, total);
}

}  // namespace

TEST_SUITE("witten") {

TEST_CASE("base values") {
  CHECK(tau(0, {0, 0, 0}) == 1);
  CHECK(tau(1, {1}) == Rational(1, 24));
  CHECK(tau(2, {4}) == Rational(1, 1152));
}

TEST_CASE("known genus-two and genus-three values") {
  CHECK(tau(2, {2, 3}) == Rational(29, 5760));
  CHECK(tau(2, {3, 2}) == Rational(29, 5760));
  CHECK(tau(3, {7}) == Rational(1, 82944));
  CHECK(tau(0, {1, 0, 0, 0}) == 1);
  CHECK(tau(1, {0, 2}) == Rational(1, 24));
  CHECK(tau(1, {1, 1}) == Rational(1, 24));
}

TEST_CASE("genus-one cross-check through string and dilaton") {
  // <tau_0 tau_2>_1 reduces by string to <tau_1>_1; <tau_1 tau_1>_1 by dilaton to 1 * <tau_1>_1
  CHECK(tau(1, {0, 2}) == tau(1, {1}));
  CHECK(tau(1, {1, 1}) == (2 * 1 - 2 + 1) * tau(1, {1}));
}

TEST_CASE("genus-two value along independent reductions") {
  // <tau_4>_2 from string on <tau_0 tau_5>_2, from dilaton on <tau_1 tau_4>_2, and
  // from two string steps on <tau_0 tau_0 tau_6>_2.
  CHECK(tau(2, {0, 5}) == tau(2, {4}));
  CHECK(tau(2, {1, 4}) == (2 * 2 - 2 + 1) * tau(2, {4}));
  CHECK(tau(2, {0, 0, 6}) == tau(2, {0, 5}));
  CHECK(tau(2, {0, 2, 4}) == tau(2, {1, 4}) + tau(2, {2, 3}));
}

TEST_CASE("dimension gate") {
  CHECK(tau(2, {3}) == 0);
  CHECK(tau(0, {1, 0, 0}) == 0);
  CHECK(tau(1, {0}) == 0);
  CHECK(tau(2, {4}) != 0);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(tau(0, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(tau(1, {}), std::invalid_argument);
  CHECK_THROWS_AS(tau(1, {-1, 2}), std::invalid_argument);
}

TEST_CASE("order independence") {
  CHECK(tau(2, {1, 2, 3}) == tau(2, {3, 1, 2}));
  CHECK(TauKey(1, {2, 0, 1}) == TauKey(1, {0, 1, 2}));
}

TEST_CASE("every key with g <= 2, n <= 4 is path independent") {
  // tau() recomputes each value along a second recursion path and throws on disagreement.
  for (int g = 0; g <= 2; ++g)
    for (int n = 1; n <= 4; ++n) {
      if (2 * g - 2 + n <= 0) continue;
      for_each_key(g, n, [&](std::vector<int> d) { CHECK_NOTHROW(tau(g, d)); });
    }
}

TEST_CASE("string and dilaton hold on every cached key") {
  for (int g = 0; g <= 2; ++g)
    for (int n = 1; n <= 5; ++n)
      if (2 * g - 2 + n > 0) for_each_key(g, n, [&](std::vector<int> d) { (void)tau(g, d); });

  const auto entries = witten::cached_entries();
  REQUIRE(entries.size() > 50);
  for (const auto& [key, value] : entries) {
    CAPTURE(key.to_string());
    const int g = key.g;
    const auto& d = key.exponents;
    const int n = static_cast<int>(d.size());
    if (2 * g - 2 + (n - 1) <= 0) continue;
    const auto zero = std::find(d.begin(), d.end(), 0);
    if (zero != d.end()) {
      std::vector<int> rest(d.begin(), d.end());
      rest.erase(rest.begin() + (zero - d.begin()));
      Rational sum;
      for (std::size_t i = 0; i < rest.size(); ++i)
        if (rest[i] > 0) {
          auto e = rest;
          --e[i];
          sum += tau(g, e);
        }
      CHECK(value == sum);
    }
    const auto one = std::find(d.begin(), d.end(), 1);
    if (one != d.end()) {
      std::vector<int> rest(d.begin(), d.end());
      rest.erase(rest.begin() + (one - d.begin()));
      CHECK(value == (2 * g - 2 + n - 1) * tau(g, rest));
    }
  }
}

TEST_CASE("cache file round trip") {
  (void)tau(2, {4});
  const auto path = std::filesystem::temp_directory_path() / "tautcalc_tau_cache_test.txt";
  witten::save_cache(path);
  const auto before = witten::cached_entries();
  {
    std::ifstream in(path);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line.find(';') != std::string::npos);
    CHECK(line.find('=') != std::string::npos);
  }
  witten::clear_cache();
  CHECK(witten::cached_entries().empty());
  witten::load_cache(path);
  CHECK(witten::cached_entries() == before);
  CHECK(tau(2, {4}) == Rational(1, 1152));
  std::filesystem::remove(path);
  CHECK_NOTHROW(witten::load_cache(path));  // missing file is fine
}

TEST_CASE("key text form") {
  const TauKey k(2, {3, 0, 1});
  CHECK(k.to_string() == "2;0,1,3");
  CHECK(TauKey::parse("2;0,1,3") == k);
}

}  // TEST_SUITE
