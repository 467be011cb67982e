#include "tautcalc/pullback.hpp"

#include <algorithm>
#include <stdexcept>

namespace tautcalc {

TautClass pullback_forget(const TautClass& x, int new_label) {
  const MarkedSpace from = x.space();
  if (new_label < 1 || new_label > from.n + 1) throw std::invalid_argument("new marking label out of range");
  const MarkedSpace to{from.g, from.n + 1};
  const int n = from.n;
  const int leg_new = new_label - 1;  // half-edge index of the new leg
  // Old half-edge index -> new half-edge index.
  auto shift = [&](int h) { return h < leg_new ? h : h + 1; };

  TautClass out(to);
  for (const auto& [code, t] : x.terms()) {
    const DecoratedStratum& s = t.stratum;
    const StableGraph& g = s.graph;
    const int nh = g.num_half_edges();

    std::vector<int> base_legs(n + 1);
    for (int i = 0; i < n; ++i) base_legs[shift(i)] = g.leg_vertices()[i];
    std::vector<int> base_psi(nh + 1, 0);
    for (int h = 0; h < nh; ++h) base_psi[shift(h)] = s.psi[h];

    for (int v = 0; v < g.num_vertices(); ++v) {
      auto legs = base_legs;
      legs[leg_new] = v;
      const StableGraph gv(g.genera(), legs, g.edges());

      // Main term: kappa_a -> kappa_a - psi_new^a at v.
      const auto& kv = s.kappa[v];
      const int m = static_cast<int>(kv.size());
      for (int mask = 0; mask < (1 << m); ++mask) {
        auto psi = base_psi;
        auto kappa = s.kappa;
        kappa[v].clear();
        int sign = 1;
        for (int j = 0; j < m; ++j) {
          if (mask >> j & 1) {
            psi[leg_new] += kv[j];
            sign = -sign;
          } else {
            kappa[v].push_back(kv[j]);
          }
        }
        out.add(DecoratedStratum(gv, std::move(psi), std::move(kappa)), sign * t.coeff);
      }

      // Bubble terms for half-edges at v with positive psi exponent.
      for (int h = 0; h < nh; ++h) {
        if (g.vertex_of(h) != v || s.psi[h] == 0) continue;
        const int b = g.num_vertices();
        auto genera = g.genera();
        genera.push_back(0);
        auto blegs = base_legs;
        blegs[leg_new] = b;
        auto edges = g.edges();
        if (g.is_leg(h))
          blegs[shift(h)] = b;
        else
          edges[g.edge_of(h)][(h - n) % 2] = b;
        edges.push_back({v, b});
        auto psi = base_psi;
        psi[shift(h)] = 0;
        psi.push_back(s.psi[h] - 1);  // node branch at v
        psi.push_back(0);
        auto kappa = s.kappa;
        kappa.emplace_back();
        out.add(DecoratedStratum(StableGraph(std::move(genera), std::move(blegs), std::move(edges)), std::move(psi),
                                 std::move(kappa)),
                -t.coeff);
      }
    }
  }
  return out;
}

TautClass relabel(const TautClass& x, const std::vector<int>& perm) {
  const int n = x.space().n;
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permutation has the wrong length");
  std::vector<int> check = perm;
  std::sort(check.begin(), check.end());
  for (int i = 0; i < n; ++i)
    if (check[i] != i + 1) throw std::invalid_argument("not a permutation of the markings");

  TautClass out(x.space());
  for (const auto& [code, t] : x.terms()) {
    const DecoratedStratum& s = t.stratum;
    std::vector<int> legs(n);
    auto psi = s.psi;
    for (int i = 0; i < n; ++i) {
      legs[perm[i] - 1] = s.graph.leg_vertices()[i];
      psi[perm[i] - 1] = s.psi[i];
    }
    out.add(DecoratedStratum(StableGraph(s.graph.genera(), std::move(legs), s.graph.edges()), std::move(psi),
                             s.kappa),
            t.coeff);
  }
  return out;
}

}  // namespace tautcalc
