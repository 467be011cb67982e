#include "tautcalc/atlas.hpp"

#include <set>
#include <stdexcept>

#include "tautcalc/enumerate.hpp"

namespace tautcalc {

StrataAtlas::StrataAtlas(MarkedSpace space) : space_(space) {
  space.validate();
  for (int k = 0; k <= space.dim(); ++k) {
    auto level = enumerate_graphs(space, k);
    if (level.empty()) break;
    for (auto& g : level) {
      index_.emplace(canonical_labeling(g).code, static_cast<int>(graphs_.size()));
      graphs_.push_back(std::move(g));
    }
  }
  auts_.reserve(graphs_.size());
  for (const auto& g : graphs_) auts_.push_back(tautcalc::automorphisms(g));

  specs_.resize(graphs_.size());
  for (int gi = 0; gi < static_cast<int>(graphs_.size()); ++gi) {
    const StableGraph& g = graphs_[gi];
    const std::uint64_t full = (std::uint64_t{1} << g.num_edges()) - 1;
    for (std::uint64_t keep = 0; keep <= full; ++keep) {
      const Contraction c = contract_edges(g, keep);
      const Labeling l = canonical_labeling(c.graph);
      Specialization s;
      s.graph = gi;
      s.keep = keep;
      s.half_edge.resize(g.num_half_edges());
      for (int h = 0; h < g.num_half_edges(); ++h)
        s.half_edge[h] = c.half_edge_map[h] < 0 ? -1 : l.half_edge_map[c.half_edge_map[h]];
      s.vertex.resize(g.num_vertices());
      for (int v = 0; v < g.num_vertices(); ++v) s.vertex[v] = l.vertex_map[c.vertex_map[v]];
      specs_[index_of(l.code)].push_back(std::move(s));
    }
  }
}

const StrataAtlas& StrataAtlas::of(MarkedSpace space) {
  static std::mutex m;
  static std::map<MarkedSpace, std::unique_ptr<StrataAtlas>> atlases;
  std::lock_guard lock(m);
  auto& slot = atlases[space];
  if (!slot) slot = std::make_unique<StrataAtlas>(space);
  return *slot;
}

int StrataAtlas::index_of(const std::string& code) const {
  auto it = index_.find(code);
  if (it == index_.end()) throw std::logic_error("graph missing from the atlas");
  return it->second;
}

const std::vector<StrataAtlas::Structure>& StrataAtlas::structures(int a, int b) const {
  std::lock_guard lock(mutex_);
  auto& slot = structures_[{a, b}];
  if (slot) return *slot;
  slot = std::make_unique<std::vector<Structure>>();
  std::map<int, std::vector<int>> by_graph;
  for (int j = 0; j < static_cast<int>(specs_[b].size()); ++j) by_graph[specs_[b][j].graph].push_back(j);
  for (int i = 0; i < static_cast<int>(specs_[a].size()); ++i) {
    const auto& sa = specs_[a][i];
    auto it = by_graph.find(sa.graph);
    if (it == by_graph.end()) continue;
    const int ne = graphs_[sa.graph].num_edges();
    const std::uint64_t full = (std::uint64_t{1} << ne) - 1;
    for (int j : it->second) {
      const auto& sb = specs_[b][j];
      if ((sa.keep | sb.keep) != full) continue;
      Structure st{sa.graph, i, j, {}};
      for (int e = 0; e < ne; ++e)
        if ((sa.keep & sb.keep) >> e & 1) st.excess.push_back(e);
      slot->push_back(std::move(st));
    }
  }
  return *slot;
}

StrataAtlas::Placed StrataAtlas::place(const DecoratedStratum& s) const {
  const Labeling l = canonical_labeling(s.graph);
  Placed p;
  p.graph = index_of(l.code);
  p.psi.assign(s.graph.num_half_edges(), 0);
  for (int h = 0; h < s.graph.num_half_edges(); ++h) p.psi[l.half_edge_map[h]] = s.psi[h];
  p.kappa.assign(s.graph.num_vertices(), {});
  for (int v = 0; v < s.graph.num_vertices(); ++v) p.kappa[l.vertex_map[v]] = s.kappa[v];
  return p;
}

namespace {

// Partitions of `total` into parts >= 1, non-increasing.
void partitions(int total, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.emplace_back(cur.rbegin(), cur.rend());
    return;
  }
  for (int p = std::min(total, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(total - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<DecoratedStratum> StrataAtlas::spanning_strata(int degree) const {
  std::map<std::string, DecoratedStratum> found;
  for (const auto& g : graphs_) {
    const int rest = degree - g.num_edges();
    if (rest < 0) continue;
    const int nv = g.num_vertices();
    const int nh = g.num_half_edges();
    // Slots: one psi exponent per half-edge, one kappa partition per vertex.
    std::vector<std::vector<std::vector<int>>> kappa_options(rest + 1);
    for (int d = 0; d <= rest; ++d) {
      std::vector<int> cur;
      partitions(d, d, cur, kappa_options[d]);
    }
    DecoratedStratum s(g);
    std::vector<int> load(nv, 0);
    auto place_psi = [&](auto&& self, int h, int left) -> void {
      if (h == nh) {
        auto place_kappa = [&](auto&& kself, int v, int kleft) -> void {
          if (v == nv) {
            if (kleft != 0) return;
            if (s.vanishes_by_dimension()) return;
            auto cs = canonicalize(s);
            found.try_emplace(std::move(cs.code), std::move(cs.stratum));
            return;
          }
          const int room = g.vertex_dim(v) - load[v];
          for (int d = 0; d <= std::min(kleft, room); ++d)
            for (const auto& part : kappa_options[d]) {
              s.kappa[v] = part;
              kself(kself, v + 1, kleft - d);
            }
          s.kappa[v].clear();
        };
        place_kappa(place_kappa, 0, left);
        return;
      }
      const int v = g.vertex_of(h);
      const int room = g.vertex_dim(v) - load[v];
      for (int d = 0; d <= std::min(left, room); ++d) {
        s.psi[h] = d;
        load[v] += d;
        self(self, h + 1, left - d);
        load[v] -= d;
      }
      s.psi[h] = 0;
    };
    place_psi(place_psi, 0, rest);
  }
  std::vector<DecoratedStratum> out;
  out.reserve(found.size());
  for (auto& [code, s] : found) out.push_back(std::move(s));
  return out;
}

}  // namespace tautcalc
