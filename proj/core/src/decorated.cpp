#include "tautcalc/decorated.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "tautcalc/witten.hpp"

namespace tautcalc {

DecoratedStratum::DecoratedStratum(StableGraph g)
    : graph(std::move(g)), psi(graph.num_half_edges(), 0), kappa(graph.num_vertices()) {}

DecoratedStratum::DecoratedStratum(StableGraph g, std::vector<int> psi_exponents,
                                   std::vector<std::vector<int>> kappas)
    : graph(std::move(g)), psi(std::move(psi_exponents)), kappa(std::move(kappas)) {
  if (static_cast<int>(psi.size()) != graph.num_half_edges())
    throw std::invalid_argument("psi decoration does not match the half-edges");
  if (static_cast<int>(kappa.size()) != graph.num_vertices())
    throw std::invalid_argument("kappa decoration does not match the vertices");
  for (int p : psi)
    if (p < 0) throw std::invalid_argument("negative psi exponent");
  for (auto& k : kappa) {
    for (int x : k)
      if (x < 1) throw std::invalid_argument("kappa indices must be positive");
    std::sort(k.begin(), k.end());
  }
}

int DecoratedStratum::degree() const {
  int d = graph.num_edges();
  for (int p : psi) d += p;
  for (const auto& k : kappa) d += std::accumulate(k.begin(), k.end(), 0);
  return d;
}

int DecoratedStratum::vertex_degree(int v) const {
  int d = std::accumulate(kappa[v].begin(), kappa[v].end(), 0);
  for (int h = 0; h < graph.num_half_edges(); ++h)
    if (graph.vertex_of(h) == v) d += psi[h];
  return d;
}

bool DecoratedStratum::vanishes_by_dimension() const {
  std::vector<int> load(graph.num_vertices(), 0);
  for (int h = 0; h < graph.num_half_edges(); ++h) load[graph.vertex_of(h)] += psi[h];
  for (int v = 0; v < graph.num_vertices(); ++v) {
    load[v] += std::accumulate(kappa[v].begin(), kappa[v].end(), 0);
    if (load[v] > graph.vertex_dim(v)) return true;
  }
  return false;
}

Coloring DecoratedStratum::coloring() const { return {psi, kappa}; }

std::vector<int> DecoratedStratum::psi_legs() const {
  return {psi.begin(), psi.begin() + graph.num_legs()};
}

std::vector<std::array<int, 2>> DecoratedStratum::psi_half_edges() const {
  std::vector<std::array<int, 2>> out;
  for (int e = 0; e < graph.num_edges(); ++e) {
    const auto [a, b] = graph.edge_half_edges(e);
    out.push_back({psi[a], psi[b]});
  }
  return out;
}

CanonicalStratum canonicalize(const DecoratedStratum& s) {
  const Coloring c = s.coloring();
  Labeling l = canonical_labeling(s.graph, &c);
  return {DecoratedStratum(std::move(l.graph), std::move(l.coloring.half_edge), std::move(l.coloring.vertex)),
          std::move(l.code), l.automorphisms};
}

namespace {

using VertexKey = std::tuple<int, std::vector<int>, std::vector<int>>;
std::mutex vertex_mutex;
std::map<VertexKey, Rational>& vertex_cache() {
  static std::map<VertexKey, Rational> table;
  return table;
}

Rational vertex_integral_sorted(int g, std::vector<int> psi, std::vector<int> kappa) {
  const int n = static_cast<int>(psi.size());
  const int deg = std::accumulate(psi.begin(), psi.end(), 0) + std::accumulate(kappa.begin(), kappa.end(), 0);
  if (deg != 3 * g - 3 + n) return 0;
  if (kappa.empty()) return tau(g, std::move(psi));

  VertexKey key{g, psi, kappa};
  {
    std::lock_guard lock(vertex_mutex);
    if (auto it = vertex_cache().find(key); it != vertex_cache().end()) return it->second;
  }
  // Peel the last kappa_a: integrate over one more point carrying psi^{a+1},
  // with kappa_b -> kappa_b - psi_new^b on the others.
  const int a = kappa.back();
  std::vector<int> rest(kappa.begin(), kappa.end() - 1);
  const int m = static_cast<int>(rest.size());
  Rational total = 0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    int exponent = a + 1;
    std::vector<int> kept;
    for (int j = 0; j < m; ++j) {
      if (mask >> j & 1)
        exponent += rest[j];
      else
        kept.push_back(rest[j]);
    }
    auto p = psi;
    p.push_back(exponent);
    std::sort(p.begin(), p.end());
    const Rational v = vertex_integral_sorted(g, std::move(p), std::move(kept));
    if (std::popcount(mask) % 2)
      total -= v;
    else
      total += v;
  }
  std::lock_guard lock(vertex_mutex);
  vertex_cache().emplace(std::move(key), total);
  return total;
}

}  // namespace

Rational vertex_integral(int g, std::vector<int> psi, std::vector<int> kappa) {
  if (2 * g - 2 + static_cast<int>(psi.size()) <= 0) throw std::invalid_argument("ambient space unstable");
  std::sort(psi.begin(), psi.end());
  std::sort(kappa.begin(), kappa.end());
  return vertex_integral_sorted(g, std::move(psi), std::move(kappa));
}

Rational integrate_decorations(const StableGraph& graph, const std::vector<int>& psi,
                               const std::vector<std::vector<int>>& kappa) {
  const int nv = graph.num_vertices();
  std::vector<std::vector<int>> at(nv);
  for (int h = 0; h < graph.num_half_edges(); ++h) at[graph.vertex_of(h)].push_back(psi[h]);
  // Cheap dimension gate before touching the caches.
  for (int v = 0; v < nv; ++v) {
    int d = std::accumulate(at[v].begin(), at[v].end(), 0) +
            std::accumulate(kappa[v].begin(), kappa[v].end(), 0);
    if (d != graph.vertex_dim(v)) return 0;
  }
  Rational result = 1;
  for (int v = 0; v < nv && !is_zero(result); ++v)
    result *= vertex_integral(graph.genus(v), std::move(at[v]), kappa[v]);
  return result;
}

Rational integrate(const DecoratedStratum& s) {
  if (s.degree() != s.space().dim()) return 0;
  return integrate_decorations(s.graph, s.psi, s.kappa);
}

std::string describe(const DecoratedStratum& s) {
  std::string out = "[";
  for (int v = 0; v < s.graph.num_vertices(); ++v) {
    if (v) out += ' ';
    out += "v" + std::to_string(v) + ":g" + std::to_string(s.graph.genus(v));
    for (int k : s.kappa[v]) out += ",k" + std::to_string(k);
  }
  out += " | legs";
  for (int i = 0; i < s.graph.num_legs(); ++i) {
    out += ' ' + std::to_string(i + 1) + "@v" + std::to_string(s.graph.leg_vertices()[i]);
    if (s.psi[i]) out += "^" + std::to_string(s.psi[i]);
  }
  out += " | edges";
  for (int e = 0; e < s.graph.num_edges(); ++e) {
    const auto [a, b] = s.graph.edge_half_edges(e);
    out += " v" + std::to_string(s.graph.edges()[e][0]);
    if (s.psi[a]) out += "^" + std::to_string(s.psi[a]);
    out += "-v" + std::to_string(s.graph.edges()[e][1]);
    if (s.psi[b]) out += "^" + std::to_string(s.psi[b]);
  }
  return out + "]";
}

}  // namespace tautcalc
