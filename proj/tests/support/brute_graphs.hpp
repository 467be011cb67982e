#pragma once

// Independent oracle for stable-graph enumeration and automorphism counts: build
// every labelled multigraph by brute force and identify isomorphic ones by trying
// all vertex permutations. Shares no code with the library beyond StableGraph.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "tautcalc/stable_graph.hpp"

namespace brute {

struct RawGraph {
  std::vector<int> genus;
  std::vector<int> leg;                 // vertex of marking i + 1
  std::vector<std::vector<int>> mult;   // symmetric; mult[v][v] = number of loops at v

  int vertices() const { return static_cast<int>(genus.size()); }

  RawGraph permuted(const std::vector<int>& p) const {
    RawGraph out{std::vector<int>(genus.size()), leg, std::vector<std::vector<int>>(genus.size(), std::vector<int>(genus.size()))};
    for (int v = 0; v < vertices(); ++v) out.genus[p[v]] = genus[v];
    for (int& l : out.leg) l = p[l];
    for (int u = 0; u < vertices(); ++u)
      for (int v = 0; v < vertices(); ++v) out.mult[p[u]][p[v]] = mult[u][v];
    return out;
  }

  auto key() const { return std::tie(genus, leg, mult); }
  bool operator<(const RawGraph& o) const { return key() < o.key(); }
  bool operator==(const RawGraph& o) const { return key() == o.key(); }
};

inline RawGraph from_stable(const tautcalc::StableGraph& g) {
  const int V = g.num_vertices();
  RawGraph r{g.genera(), g.leg_vertices(), std::vector<std::vector<int>>(V, std::vector<int>(V))};
  for (const auto& e : g.edges()) {
    if (e[0] == e[1])
      ++r.mult[e[0]][e[0]];
    else {
      ++r.mult[e[0]][e[1]];
      ++r.mult[e[1]][e[0]];
    }
  }
  return r;
}

inline RawGraph minimal_relabelling(const RawGraph& r) {
  std::vector<int> p(r.vertices());
  std::iota(p.begin(), p.end(), 0);
  RawGraph best = r;
  do {
    RawGraph c = r.permuted(p);
    if (c < best) best = std::move(c);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

inline long factorial(int k) { return k <= 1 ? 1 : k * factorial(k - 1); }

/// Half-edge automorphisms fixing the legs: for every vertex permutation preserving
/// the structure, parallel edges may be permuted and loops permuted and flipped.
inline long automorphisms(const RawGraph& r) {
  long local = 1;
  for (int u = 0; u < r.vertices(); ++u) {
    local *= factorial(r.mult[u][u]) * (1L << r.mult[u][u]);
    for (int v = u + 1; v < r.vertices(); ++v) local *= factorial(r.mult[u][v]);
  }
  std::vector<int> p(r.vertices());
  std::iota(p.begin(), p.end(), 0);
  long symmetries = 0;
  do {
    if (r.permuted(p) == r) ++symmetries;
  } while (std::next_permutation(p.begin(), p.end()));
  return symmetries * local;
}

inline bool valid(const RawGraph& r) {
  const int V = r.vertices();
  for (int v = 0; v < V; ++v) {
    int valence = 0;
    for (int l : r.leg) valence += (l == v);
    for (int u = 0; u < V; ++u) valence += (u == v ? 2 : 1) * r.mult[v][u];
    if (2 * r.genus[v] - 2 + valence <= 0) return false;
  }
  std::vector<int> seen{0};
  std::vector<bool> mark(V, false);
  mark[0] = true;
  for (std::size_t i = 0; i < seen.size(); ++i)
    for (int u = 0; u < V; ++u)
      if (!mark[u] && r.mult[seen[i]][u] > 0) {
        mark[u] = true;
        seen.push_back(u);
      }
  return static_cast<int>(seen.size()) == V;
}

/// All isomorphism classes, as minimal relabellings.
inline std::set<RawGraph> enumerate(tautcalc::MarkedSpace space, int edges) {
  std::set<RawGraph> out;
  const int max_vertices = std::max(1, 2 * space.g - 2 + space.n);
  for (int V = 1; V <= max_vertices; ++V) {
    const int b1 = edges - V + 1;
    if (b1 < 0 || b1 > space.g) continue;
    const int genus_left = space.g - b1;

    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < V; ++u)
      for (int v = u; v < V; ++v) slots.push_back({u, v});

    std::vector<std::vector<int>> genera;
    std::vector<int> gv(V);
    auto fill_genus = [&](auto&& self, int i, int left) -> void {
      if (i == V - 1) {
        gv[i] = left;
        genera.push_back(gv);
        return;
      }
      for (int x = 0; x <= left; ++x) {
        gv[i] = x;
        self(self, i + 1, left - x);
      }
    };
    fill_genus(fill_genus, 0, genus_left);

    std::vector<std::vector<std::vector<int>>> matrices;
    std::vector<std::vector<int>> m(V, std::vector<int>(V));
    auto fill_edges = [&](auto&& self, std::size_t s, int left) -> void {
      if (s == slots.size()) {
        if (left == 0) matrices.push_back(m);
        return;
      }
      const auto [u, v] = slots[s];
      for (int x = 0; x <= left; ++x) {
        m[u][v] = m[v][u] = x;
        self(self, s + 1, left - x);
      }
      m[u][v] = m[v][u] = 0;
    };
    fill_edges(fill_edges, 0, edges);

    std::vector<int> leg(space.n, 0);
    const long leg_choices = [&] {
      long c = 1;
      for (int i = 0; i < space.n; ++i) c *= V;
      return c;
    }();
    for (const auto& gen : genera)
      for (const auto& mat : matrices)
        for (long code = 0; code < leg_choices; ++code) {
          long c = code;
          for (int i = 0; i < space.n; ++i, c /= V) leg[i] = static_cast<int>(c % V);
          RawGraph r{gen, leg, mat};
          if (valid(r)) out.insert(minimal_relabelling(r));
        }
  }
  return out;
}

}  // namespace brute
