#include "tautcalc/pairing.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "tautcalc/atlas.hpp"
#include "tautcalc/product.hpp"

namespace tautcalc {

Rational integrate(const TautClass& x) {
  Rational total = 0;
  for (const auto& [code, t] : x.terms())
    if (t.stratum.degree() == x.space().dim()) total += t.coeff * integrate(t.stratum);
  return total;
}

Rational pair(const TautClass& a, const TautClass& b) {
  if (a.space() != b.space()) throw std::invalid_argument("classes live on different spaces");
  const int dim = a.space().dim();
  const int da = a.degree(-1), db = b.degree(-1);
  if (da < 0 || db < 0) return 0;
  if (da + db != dim)
    throw std::invalid_argument("degrees " + std::to_string(da) + " and " + std::to_string(db) +
                                " do not add up to the dimension " + std::to_string(dim));
  return integrate_product(a, b);
}

std::vector<DecoratedStratum> spanning_set(MarkedSpace space, int degree) {
  space.validate();
  if (degree < 0 || degree > space.dim()) return {};
  return StrataAtlas::of(space).spanning_strata(degree);
}

std::vector<Rational> pairing_vector(const TautClass& x, const std::vector<DecoratedStratum>& tests, int jobs) {
  std::vector<Rational> out(tests.size());
  if (tests.empty()) return out;
  if (x.empty()) return out;
  const int dx = x.degree();
  for (const auto& s : tests)
    if (dx + s.degree() != x.space().dim())
      throw std::invalid_argument("test stratum is not of complementary degree");
  StrataAtlas::of(x.space());  // build before the workers start
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(tests.size())));
  auto work = [&](int k) {
    for (std::size_t i = k; i < tests.size(); i += jobs) out[i] = integrate_product(x, TautClass::of(tests[i]));
  };
  if (jobs == 1) {
    work(0);
    return out;
  }
  std::vector<std::thread> threads;
  for (int k = 0; k < jobs; ++k) threads.emplace_back(work, k);
  for (auto& t : threads) t.join();
  return out;
}

PairingReport report_from_vector(const std::vector<Rational>& values, const std::vector<DecoratedStratum>& tests,
                                 std::size_t max_witnesses) {
  PairingReport r;
  r.spanning_size = tests.size();
  r.equal = true;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (is_zero(values[i])) continue;
    r.equal = false;
    if (r.witnesses.size() < max_witnesses) r.witnesses.push_back({i, describe(tests[i]), values[i]});
  }
  return r;
}

PairingReport num_equal(const TautClass& a, const TautClass& b, int jobs, std::size_t max_witnesses) {
  if (a.space() != b.space()) throw std::invalid_argument("classes live on different spaces");
  const TautClass diff = a - b;
  const int d = std::max(a.degree(-1), b.degree(-1));
  if (d < 0) return {true, 0, {}};
  if (a.degree(d) != d || b.degree(d) != d) throw std::invalid_argument("classes have different degrees");
  const auto tests = spanning_set(a.space(), a.space().dim() - d);
  return report_from_vector(pairing_vector(diff, tests, jobs), tests, max_witnesses);
}

}  // namespace tautcalc
