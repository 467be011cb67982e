#include "tautcalc/stable_graph.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace tautcalc {

void MarkedSpace::validate() const {
  if (!stable()) throw std::invalid_argument("ambient space unstable");
}

int popcount(MarkingSet s) { return std::popcount(s); }

StableGraph::StableGraph(std::vector<int> genera, std::vector<int> leg_vertex,
                         std::vector<std::array<int, 2>> edges)
    : genera_(std::move(genera)), leg_vertex_(std::move(leg_vertex)), edges_(std::move(edges)) {
  const int v = num_vertices();
  for (int x : leg_vertex_)
    if (x < 0 || x >= v) throw std::invalid_argument("leg attached to a nonexistent vertex");
  for (const auto& e : edges_)
    if (e[0] < 0 || e[0] >= v || e[1] < 0 || e[1] >= v)
      throw std::invalid_argument("edge attached to a nonexistent vertex");
}

StableGraph StableGraph::smooth(MarkedSpace space) {
  space.validate();
  return StableGraph({space.g}, std::vector<int>(space.n, 0), {});
}

int StableGraph::partner(int h) const {
  if (is_leg(h)) return -1;
  return ((h - num_legs()) % 2 == 0) ? h + 1 : h - 1;
}

int StableGraph::vertex_of(int h) const {
  if (is_leg(h)) return leg_vertex_[h];
  const int k = h - num_legs();
  return edges_[k / 2][k % 2];
}

std::vector<std::vector<int>> StableGraph::half_edges_by_vertex() const {
  std::vector<std::vector<int>> out(num_vertices());
  for (int h = 0; h < num_half_edges(); ++h) out[vertex_of(h)].push_back(h);
  return out;
}

int StableGraph::valence(int v) const {
  int val = 0;
  for (int x : leg_vertex_) val += (x == v);
  for (const auto& e : edges_) val += (e[0] == v) + (e[1] == v);
  return val;
}

int StableGraph::total_genus() const {
  return std::accumulate(genera_.begin(), genera_.end(), 0) + betti_number();
}

bool StableGraph::connected() const {
  const int v = num_vertices();
  if (v == 0) return false;
  std::vector<int> parent(v);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = v;
  for (const auto& e : edges_) {
    int a = find(e[0]), b = find(e[1]);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

std::optional<std::string> StableGraph::violation() const {
  if (num_vertices() == 0) return "graph has no vertices";
  for (int g : genera_)
    if (g < 0) return "negative vertex genus";
  if (!connected()) return "graph is not connected";
  for (int v = 0; v < num_vertices(); ++v)
    if (2 * genera_[v] - 2 + valence(v) <= 0)
      return "vertex " + std::to_string(v) + " is unstable (2g-2+valence <= 0)";
  return std::nullopt;
}

void StableGraph::validate() const {
  if (auto why = violation()) throw std::invalid_argument("invalid stable graph: " + *why);
}

void StableGraph::validate(MarkedSpace ambient) const {
  validate();
  if (num_legs() != ambient.n)
    throw std::invalid_argument("invalid stable graph: legs do not carry markings 1..n exactly once");
  if (total_genus() != ambient.g)
    throw std::invalid_argument("invalid stable graph: vertex genera plus first Betti number differ from g");
}

bool StableGraph::is_separating(int e) const {
  if (is_loop(e)) return false;
  const int v = num_vertices();
  std::vector<int> parent(v);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int f = 0; f < num_edges(); ++f)
    if (f != e) parent[find(edges_[f][0])] = find(edges_[f][1]);
  return find(edges_[e][0]) != find(edges_[e][1]);
}

std::pair<int, MarkingSet> StableGraph::side_of(int e) const {
  // Contract everything except e; the result has two vertices.
  const Contraction c = contract_edges(*this, std::uint64_t{1} << e);
  const int side = c.vertex_map[edges_[e][0]];
  MarkingSet legs = 0;
  for (int i = 0; i < num_legs(); ++i)
    if (c.graph.leg_vertices()[i] == side) legs |= marking_bit(i + 1);
  return {c.graph.genus(side), legs};
}

Contraction contract_edges(const StableGraph& graph, std::uint64_t keep_mask) {
  const int nv = graph.num_vertices();
  std::vector<int> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int e = 0; e < graph.num_edges(); ++e)
    if (!(keep_mask >> e & 1)) parent[find(graph.edges()[e][0])] = find(graph.edges()[e][1]);

  std::vector<int> root_index(nv, -1);
  Contraction out;
  out.vertex_map.resize(nv);
  std::vector<int> genus_sum, vertex_count, contracted_edges;
  for (int v = 0; v < nv; ++v) {
    const int r = find(v);
    if (root_index[r] < 0) {
      root_index[r] = static_cast<int>(genus_sum.size());
      genus_sum.push_back(0);
      vertex_count.push_back(0);
      contracted_edges.push_back(0);
    }
    out.vertex_map[v] = root_index[r];
    genus_sum[root_index[r]] += graph.genus(v);
    vertex_count[root_index[r]] += 1;
  }
  for (int e = 0; e < graph.num_edges(); ++e)
    if (!(keep_mask >> e & 1)) contracted_edges[out.vertex_map[graph.edges()[e][0]]] += 1;

  std::vector<int> genera(genus_sum.size());
  for (std::size_t c = 0; c < genera.size(); ++c)
    genera[c] = genus_sum[c] + contracted_edges[c] - vertex_count[c] + 1;

  std::vector<int> legs(graph.num_legs());
  for (int i = 0; i < graph.num_legs(); ++i) legs[i] = out.vertex_map[graph.leg_vertices()[i]];

  std::vector<std::array<int, 2>> edges;
  out.half_edge_map.assign(graph.num_half_edges(), -1);
  for (int i = 0; i < graph.num_legs(); ++i) out.half_edge_map[i] = i;
  const int n = graph.num_legs();
  for (int e = 0; e < graph.num_edges(); ++e) {
    if (!(keep_mask >> e & 1)) continue;
    const int k = static_cast<int>(edges.size());
    edges.push_back({out.vertex_map[graph.edges()[e][0]], out.vertex_map[graph.edges()[e][1]]});
    out.half_edge_map[n + 2 * e] = n + 2 * k;
    out.half_edge_map[n + 2 * e + 1] = n + 2 * k + 1;
  }
  out.graph = StableGraph(std::move(genera), std::move(legs), std::move(edges));
  return out;
}

std::vector<LocalDegeneration> local_degenerations(const StableGraph& graph, int v) {
  std::vector<LocalDegeneration> out;
  const int gv = graph.genus(v);
  const int nv = graph.num_vertices();

  if (gv > 0) {
    auto genera = graph.genera();
    genera[v] -= 1;
    auto edges = graph.edges();
    edges.push_back({v, v});
    out.push_back({StableGraph(std::move(genera), graph.leg_vertices(), std::move(edges)), v, true, {}});
  }

  const auto at_v = graph.half_edges_by_vertex()[v];
  const int m = static_cast<int>(at_v.size());
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    const int moved_count = std::popcount(mask);
    for (int gw = 0; gw <= gv; ++gw) {
      const int gk = gv - gw;
      if (2 * gk - 2 + (m - moved_count) + 1 <= 0) continue;
      if (2 * gw - 2 + moved_count + 1 <= 0) continue;
      auto genera = graph.genera();
      genera[v] = gk;
      genera.push_back(gw);
      auto legs = graph.leg_vertices();
      auto edges = graph.edges();
      std::vector<int> moved;
      const int n = graph.num_legs();
      for (int j = 0; j < m; ++j) {
        if (!(mask >> j & 1)) continue;
        const int h = at_v[j];
        moved.push_back(h);
        if (h < n)
          legs[h] = nv;
        else
          edges[(h - n) / 2][(h - n) % 2] = nv;
      }
      edges.push_back({v, nv});
      out.push_back({StableGraph(std::move(genera), std::move(legs), std::move(edges)), v, false,
                     std::move(moved)});
    }
  }
  return out;
}

}  // namespace tautcalc
