#include "tautcalc/witten.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace tautcalc {

TauKey::TauKey(int genus, std::vector<int> d) : g(genus), exponents(std::move(d)) {
  std::sort(exponents.begin(), exponents.end());
}

std::string TauKey::to_string() const {
  std::string s = std::to_string(g) + ";";
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(exponents[i]);
  }
  return s;
}

TauKey TauKey::parse(const std::string& text) {
  const auto semi = text.find(';');
  if (semi == std::string::npos) throw std::invalid_argument("malformed tau key '" + text + "'");
  TauKey k;
  k.g = std::stoi(text.substr(0, semi));
  std::stringstream rest(text.substr(semi + 1));
  std::string item;
  while (std::getline(rest, item, ','))
    if (!item.empty()) k.exponents.push_back(std::stoi(item));
  std::sort(k.exponents.begin(), k.exponents.end());
  return k;
}

namespace {

std::mutex cache_mutex;
std::map<TauKey, Rational>& cache() {
  static std::map<TauKey, Rational> table;
  return table;
}

bool stable(int g, int n) { return g >= 0 && 2 * g - 2 + n > 0; }

// (2m - 1)!! with (-1)!! = 1.
mpz_class odd_factorial(int two_m_minus_1) {
  mpz_class r = 1;
  for (int x = two_m_minus_1; x > 1; x -= 2) r *= x;
  return r;
}

Rational lookup_or_compute(const TauKey& key);

Rational tau_sorted(int g, std::vector<int> d) {
  if (!stable(g, static_cast<int>(d.size()))) return 0;  // internal: unstable pieces vanish
  for (int x : d)
    if (x < 0) return 0;
  return lookup_or_compute(TauKey(g, std::move(d)));
}

Rational string_route(const TauKey& k) {
  auto d = k.exponents;
  d.erase(std::find(d.begin(), d.end(), 0));
  Rational sum = 0;
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (d[j] == 0) continue;
    auto e = d;
    e[j] -= 1;
    sum += tau_sorted(k.g, std::move(e));
  }
  return sum;
}

Rational dilaton_route(const TauKey& k) {
  auto d = k.exponents;
  d.erase(std::find(d.begin(), d.end(), 1));
  const Rational factor(2 * k.g - 2 + static_cast<int>(d.size()));
  return factor * tau_sorted(k.g, std::move(d));
}

// DVV recursion applied to the insertion at index i (exponent k + 1 >= 1).
Rational dvv_route(const TauKey& key, std::size_t i) {
  const int g = key.g;
  const int k = key.exponents[i] - 1;
  std::vector<int> rest = key.exponents;
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
  const int m = static_cast<int>(rest.size());

  Rational total = 0;
  for (int j = 0; j < m; ++j) {
    auto e = rest;
    e[j] += k;
    Rational coeff(odd_factorial(2 * k + 2 * rest[j] + 1), odd_factorial(2 * rest[j] - 1));
    coeff.canonicalize();
    total += coeff * tau_sorted(g, std::move(e));
  }

  Rational quadratic = 0;
  for (int r = 0; r <= k - 1; ++r) {
    const int s = k - 1 - r;
    const Rational w(odd_factorial(2 * r + 1) * odd_factorial(2 * s + 1));
    if (g >= 1) {
      auto e = rest;
      e.push_back(r);
      e.push_back(s);
      quadratic += w * tau_sorted(g - 1, std::move(e));
    }
    for (int g1 = 0; g1 <= g; ++g1) {
      for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> left{r}, right{s};
        for (int j = 0; j < m; ++j) (mask >> j & 1 ? left : right).push_back(rest[j]);
        if (!stable(g1, static_cast<int>(left.size())) ||
            !stable(g - g1, static_cast<int>(right.size())))
          continue;
        const Rational a = tau_sorted(g1, std::move(left));
        if (is_zero(a)) continue;
        quadratic += w * a * tau_sorted(g - g1, std::move(right));
      }
    }
  }
  total += quadratic / 2;
  return total / Rational(odd_factorial(2 * k + 3));
}

Rational compute(const TauKey& key) {
  const int g = key.g;
  const auto& d = key.exponents;
  const int n = static_cast<int>(d.size());
  if (std::accumulate(d.begin(), d.end(), 0) != 3 * g - 3 + n) return 0;
  if (g == 0 && n == 3) return 1;
  if (g == 1 && n == 1) return Rational(1, 24);

  const bool has0 = std::find(d.begin(), d.end(), 0) != d.end();
  const bool has1 = std::find(d.begin(), d.end(), 1) != d.end();
  const std::size_t top = d.size() - 1;  // largest exponent (sorted)

  enum class Route { String, Dilaton, Dvv } route;
  Rational value;
  if (has0 && stable(g, n - 1)) {
    route = Route::String;
    value = string_route(key);
  } else if (has1 && stable(g, n - 1)) {
    route = Route::Dilaton;
    value = dilaton_route(key);
  } else {
    route = Route::Dvv;
    value = dvv_route(key, top);
  }

  if (n >= 2) {
    std::optional<Rational> alt;
    if (route != Route::Dvv && d[top] >= 2) {
      alt = dvv_route(key, top);
    } else if (route == Route::String && has1) {
      alt = dilaton_route(key);
    } else if (route == Route::Dvv) {
      for (std::size_t i = top; i-- > 0;)
        if (d[i] >= 1 && d[i] != d[top]) {
          alt = dvv_route(key, i);
          break;
        }
    }
    if (alt && *alt != value)
      throw std::logic_error("tau recursion paths disagree at " + key.to_string() + ": " +
                             tautcalc::to_string(value) + " vs " + tautcalc::to_string(*alt));
  }
  return value;
}

Rational lookup_or_compute(const TauKey& key) {
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache().find(key); it != cache().end()) return it->second;
  }
  Rational value = compute(key);
  std::lock_guard lock(cache_mutex);
  cache().emplace(key, value);
  return value;
}

}  // namespace

Rational tau(int g, std::vector<int> exponents) {
  if (!stable(g, static_cast<int>(exponents.size())))
    throw std::invalid_argument("ambient space unstable");
  for (int x : exponents)
    if (x < 0) throw std::invalid_argument("negative psi exponent");
  return lookup_or_compute(TauKey(g, std::move(exponents)));
}

namespace witten {

std::vector<std::pair<TauKey, Rational>> cached_entries() {
  std::lock_guard lock(cache_mutex);
  return {cache().begin(), cache().end()};
}

void load_cache(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return;
  std::string line;
  std::map<TauKey, Rational> loaded;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("malformed tau cache line '" + line + "'");
    loaded.emplace(TauKey::parse(line.substr(0, eq)), parse_rational(line.substr(eq + 1)));
  }
  std::lock_guard lock(cache_mutex);
  for (auto& [k, v] : loaded) cache().insert_or_assign(k, v);
}

void save_cache(const std::filesystem::path& path) {
  const auto entries = cached_entries();
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write tau cache " + path.string());
  for (const auto& [k, v] : entries) out << k.to_string() << '=' << tautcalc::to_string(v) << '\n';
}

void clear_cache() {
  std::lock_guard lock(cache_mutex);
  cache().clear();
}

}  // namespace witten
}  // namespace tautcalc
