#include "tautcalc/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace tautcalc {
namespace {

struct EdgeTuple {
  int pa, ca, pb, cb;
  auto operator<=>(const EdgeTuple&) const = default;
};

int color_of(const Coloring* c, int h) { return c ? c->half_edge[h] : 0; }

const std::vector<int>& vertex_color(const Coloring* c, int v) {
  static const std::vector<int> empty;
  return c ? c->vertex[v] : empty;
}

std::vector<int> compress(const std::vector<std::vector<int>>& keys) {
  std::map<std::vector<int>, int> ranks;
  for (const auto& k : keys) ranks.emplace(k, 0);
  int r = 0;
  for (auto& [k, v] : ranks) v = r++;
  std::vector<int> out(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) out[i] = ranks[keys[i]];
  return out;
}

// Vertex ranks after iterated neighbourhood refinement. Automorphisms preserve them.
std::vector<int> refined_ranks(const StableGraph& g, const Coloring* col) {
  const int nv = g.num_vertices();
  const int n = g.num_legs();
  std::vector<std::vector<int>> keys(nv);
  std::vector<std::vector<std::pair<int, int>>> legs(nv), loops(nv);
  std::vector<std::vector<int>> nonloop(nv);
  for (int i = 0; i < n; ++i) legs[g.leg_vertices()[i]].push_back({i, color_of(col, i)});
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto [a, b] = g.edges()[e];
    const int ca = color_of(col, n + 2 * e), cb = color_of(col, n + 2 * e + 1);
    if (a == b) {
      loops[a].push_back({std::min(ca, cb), std::max(ca, cb)});
    } else {
      nonloop[a].push_back(ca);
      nonloop[b].push_back(cb);
    }
  }
  for (int v = 0; v < nv; ++v) {
    auto& k = keys[v];
    k.push_back(g.genus(v));
    const auto& vc = vertex_color(col, v);
    k.push_back(static_cast<int>(vc.size()));
    k.insert(k.end(), vc.begin(), vc.end());
    k.push_back(static_cast<int>(legs[v].size()));
    for (auto [i, c] : legs[v]) k.insert(k.end(), {i, c});
    std::sort(loops[v].begin(), loops[v].end());
    k.push_back(static_cast<int>(loops[v].size()));
    for (auto [x, y] : loops[v]) k.insert(k.end(), {x, y});
    std::sort(nonloop[v].begin(), nonloop[v].end());
    k.push_back(static_cast<int>(nonloop[v].size()));
    k.insert(k.end(), nonloop[v].begin(), nonloop[v].end());
  }
  auto rank = compress(keys);
  int classes = rank.empty() ? 0 : *std::max_element(rank.begin(), rank.end()) + 1;
  while (true) {
    std::vector<std::vector<std::array<int, 3>>> nbr(nv);
    for (int e = 0; e < g.num_edges(); ++e) {
      const auto [a, b] = g.edges()[e];
      if (a == b) continue;
      const int ca = color_of(col, n + 2 * e), cb = color_of(col, n + 2 * e + 1);
      nbr[a].push_back({rank[b], ca, cb});
      nbr[b].push_back({rank[a], cb, ca});
    }
    std::vector<std::vector<int>> next(nv);
    for (int v = 0; v < nv; ++v) {
      std::sort(nbr[v].begin(), nbr[v].end());
      next[v].push_back(rank[v]);
      for (const auto& t : nbr[v]) next[v].insert(next[v].end(), t.begin(), t.end());
    }
    auto refined = compress(next);
    const int refined_classes = *std::max_element(refined.begin(), refined.end()) + 1;
    rank = std::move(refined);
    if (refined_classes == classes) break;
    classes = refined_classes;
  }
  return rank;
}

struct Candidate {
  std::vector<int> pos;                 // vertex -> position
  std::vector<std::pair<EdgeTuple, int>> edges;  // sorted (tuple, original edge)
  std::vector<bool> flipped;            // per original edge
  std::string code;
};

Candidate encode(const StableGraph& g, const Coloring* col, const std::vector<int>& order) {
  const int nv = g.num_vertices();
  const int n = g.num_legs();
  Candidate c;
  c.pos.resize(nv);
  for (int p = 0; p < nv; ++p) c.pos[order[p]] = p;
  c.flipped.assign(g.num_edges(), false);
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto [a, b] = g.edges()[e];
    EdgeTuple t{c.pos[a], color_of(col, n + 2 * e), c.pos[b], color_of(col, n + 2 * e + 1)};
    if (std::pair{t.pb, t.cb} < std::pair{t.pa, t.ca}) {
      t = {t.pb, t.cb, t.pa, t.ca};
      c.flipped[e] = true;
    }
    c.edges.push_back({t, e});
  }
  std::sort(c.edges.begin(), c.edges.end());

  auto& s = c.code;
  auto put = [&s](int x) {
    if (x < 0 || x > 250) throw std::out_of_range("graph too large for canonical encoding");
    s.push_back(static_cast<char>(x));
  };
  put(nv);
  put(g.num_edges());
  put(n);
  for (int p = 0; p < nv; ++p) {
    const int v = order[p];
    put(g.genus(v));
    const auto& vc = vertex_color(col, v);
    put(static_cast<int>(vc.size()));
    for (int x : vc) put(x);
  }
  for (int i = 0; i < n; ++i) {
    put(c.pos[g.leg_vertices()[i]]);
    put(color_of(col, i));
  }
  for (const auto& [t, e] : c.edges) {
    put(t.pa);
    put(t.ca);
    put(t.pb);
    put(t.cb);
  }
  return c;
}

// All minimal-code candidates over cell-respecting vertex orderings.
std::vector<Candidate> minimal_candidates(const StableGraph& g, const Coloring* col) {
  const int nv = g.num_vertices();
  const auto rank = refined_ranks(g, col);
  std::vector<int> base(nv);
  std::iota(base.begin(), base.end(), 0);
  std::stable_sort(base.begin(), base.end(), [&](int a, int b) { return rank[a] < rank[b]; });
  std::vector<std::pair<int, int>> cells;  // [begin, end)
  for (int i = 0; i < nv;) {
    int j = i;
    while (j < nv && rank[base[j]] == rank[base[i]]) ++j;
    if (j - i > 1) cells.push_back({i, j});
    i = j;
  }

  std::vector<Candidate> best;
  std::vector<int> order = base;
  while (true) {
    Candidate c = encode(g, col, order);
    if (best.empty() || c.code < best.front().code) {
      best.clear();
      best.push_back(std::move(c));
    } else if (c.code == best.front().code) {
      best.push_back(std::move(c));
    }
    // Odometer over the permutations of each cell.
    std::size_t k = 0;
    for (; k < cells.size(); ++k) {
      auto first = order.begin() + cells[k].first, last = order.begin() + cells[k].second;
      if (std::next_permutation(first, last)) break;  // wrapped cells are back to sorted order
    }
    if (k == cells.size()) break;
  }
  return best;
}

// Groups of identical edge tuples in a sorted candidate: [begin, end) slot ranges.
std::vector<std::pair<int, int>> tie_groups(const Candidate& c) {
  std::vector<std::pair<int, int>> groups;
  const int m = static_cast<int>(c.edges.size());
  for (int i = 0; i < m;) {
    int j = i;
    while (j < m && c.edges[j].first == c.edges[i].first) ++j;
    groups.push_back({i, j});
    i = j;
  }
  return groups;
}

long factorial(int k) {
  long f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

long kernel_order(const Candidate& c) {
  long order = 1;
  for (auto [b, e] : tie_groups(c)) {
    const auto& t = c.edges[b].first;
    order *= factorial(e - b);
    if (t.pa == t.pb && t.ca == t.cb) order <<= (e - b);
  }
  return order;
}

}  // namespace

Labeling canonical_labeling(const StableGraph& graph, const Coloring* coloring) {
  if (coloring && (static_cast<int>(coloring->half_edge.size()) != graph.num_half_edges() ||
                   static_cast<int>(coloring->vertex.size()) != graph.num_vertices()))
    throw std::invalid_argument("coloring does not match graph");
  const auto best = minimal_candidates(graph, coloring);
  const Candidate& c = best.front();
  const int nv = graph.num_vertices();
  const int n = graph.num_legs();

  Labeling out;
  out.code = c.code;
  out.vertex_map = c.pos;
  out.automorphisms = static_cast<long>(best.size()) * kernel_order(c);

  std::vector<int> genera(nv);
  for (int v = 0; v < nv; ++v) genera[c.pos[v]] = graph.genus(v);
  std::vector<int> legs(n);
  for (int i = 0; i < n; ++i) legs[i] = c.pos[graph.leg_vertices()[i]];
  std::vector<std::array<int, 2>> edges;
  out.half_edge_map.assign(graph.num_half_edges(), -1);
  for (int i = 0; i < n; ++i) out.half_edge_map[i] = i;
  for (std::size_t k = 0; k < c.edges.size(); ++k) {
    const auto& [t, e] = c.edges[k];
    edges.push_back({t.pa, t.pb});
    const int h0 = n + 2 * e, h1 = h0 + 1;
    const int k0 = n + 2 * static_cast<int>(k);
    out.half_edge_map[h0] = c.flipped[e] ? k0 + 1 : k0;
    out.half_edge_map[h1] = c.flipped[e] ? k0 : k0 + 1;
  }
  out.graph = StableGraph(std::move(genera), std::move(legs), std::move(edges));
  if (coloring) {
    out.coloring.half_edge.assign(graph.num_half_edges(), 0);
    for (int h = 0; h < graph.num_half_edges(); ++h)
      out.coloring.half_edge[out.half_edge_map[h]] = coloring->half_edge[h];
    out.coloring.vertex.assign(nv, {});
    for (int v = 0; v < nv; ++v) out.coloring.vertex[c.pos[v]] = coloring->vertex[v];
  } else {
    out.coloring.half_edge.assign(graph.num_half_edges(), 0);
    out.coloring.vertex.assign(nv, {});
  }
  return out;
}

CanonicalForm canonicalize(const StableGraph& graph) {
  graph.validate();
  const Labeling l = canonical_labeling(graph);
  return {l.code, l.automorphisms};
}

std::vector<Automorphism> automorphisms(const StableGraph& graph, const Coloring* coloring) {
  const auto best = minimal_candidates(graph, coloring);
  const int n = graph.num_legs();
  const int nv = graph.num_vertices();
  const int nh = graph.num_half_edges();

  // Half-edge map original -> canonical for a candidate.
  auto to_canonical = [&](const Candidate& c) {
    std::vector<int> m(nh);
    for (int i = 0; i < n; ++i) m[i] = i;
    for (std::size_t k = 0; k < c.edges.size(); ++k) {
      const int e = c.edges[k].second;
      const int k0 = n + 2 * static_cast<int>(k);
      m[n + 2 * e] = c.flipped[e] ? k0 + 1 : k0;
      m[n + 2 * e + 1] = c.flipped[e] ? k0 : k0 + 1;
    }
    return m;
  };

  // Kernel: permutations of canonical half-edges fixing every vertex.
  std::vector<std::vector<int>> kernel;
  {
    const auto groups = tie_groups(best.front());
    std::vector<int> identity(nh);
    std::iota(identity.begin(), identity.end(), 0);
    kernel.push_back(identity);
    for (auto [b, e] : groups) {
      const auto& t = best.front().edges[b].first;
      const bool flip = t.pa == t.pb && t.ca == t.cb;
      std::vector<int> slots(e - b);
      std::iota(slots.begin(), slots.end(), b);
      std::vector<std::vector<int>> next;
      for (const auto& k : kernel) {
        auto perm = slots;
        do {
          for (int flips = 0; flips < (flip ? (1 << (e - b)) : 1); ++flips) {
            auto m = k;
            for (int i = 0; i < e - b; ++i) {
              const int from = n + 2 * (b + i), to = n + 2 * perm[i];
              const bool f = flips >> i & 1;
              m[from] = f ? to + 1 : to;
              m[from + 1] = f ? to : to + 1;
            }
            next.push_back(std::move(m));
          }
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
      kernel = std::move(next);
    }
  }

  const auto can0 = to_canonical(best.front());
  std::vector<int> inv0(nh);
  for (int h = 0; h < nh; ++h) inv0[can0[h]] = h;
  std::vector<int> vinv0(nv);
  for (int v = 0; v < nv; ++v) vinv0[best.front().pos[v]] = v;

  std::vector<Automorphism> out;
  for (const auto& c : best) {
    const auto cank = to_canonical(c);
    for (const auto& k : kernel) {
      Automorphism a;
      a.vertex.resize(nv);
      for (int v = 0; v < nv; ++v) a.vertex[v] = vinv0[c.pos[v]];
      a.half_edge.resize(nh);
      for (int h = 0; h < nh; ++h) a.half_edge[h] = inv0[k[cank[h]]];
      out.push_back(std::move(a));
    }
  }
  return out;
}

}  // namespace tautcalc
