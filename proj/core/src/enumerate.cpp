#include "tautcalc/enumerate.hpp"

#include <map>
#include <stdexcept>

#include "tautcalc/canonical.hpp"

namespace tautcalc {

std::vector<StableGraph> enumerate_graphs(MarkedSpace space, int num_edges) {
  space.validate();
  if (num_edges < 0) throw std::invalid_argument("negative edge count");
  std::map<std::string, StableGraph> level;
  const StableGraph smooth = StableGraph::smooth(space);
  level.emplace(canonical_labeling(smooth).code, smooth);
  for (int k = 0; k < num_edges && !level.empty(); ++k) {
    std::map<std::string, StableGraph> next;
    for (const auto& [code, g] : level)
      for (int v = 0; v < g.num_vertices(); ++v)
        for (auto& d : local_degenerations(g, v)) {
          Labeling l = canonical_labeling(d.graph);
          next.try_emplace(std::move(l.code), std::move(l.graph));
        }
    level = std::move(next);
  }
  std::vector<StableGraph> out;
  out.reserve(level.size());
  for (auto& [code, g] : level) out.push_back(std::move(g));
  return out;
}

std::vector<Degeneration> one_edge_degenerations(const StableGraph& graph) {
  graph.validate();
  const std::string target = canonical_labeling(graph).code;
  std::map<std::string, StableGraph> found;
  for (int v = 0; v < graph.num_vertices(); ++v)
    for (auto& d : local_degenerations(graph, v)) {
      Labeling l = canonical_labeling(d.graph);
      found.try_emplace(std::move(l.code), std::move(l.graph));
    }
  std::vector<Degeneration> out;
  for (auto& [code, g] : found) {
    int first = -1, count = 0;
    const std::uint64_t all = (std::uint64_t{1} << g.num_edges()) - 1;
    for (int e = 0; e < g.num_edges(); ++e) {
      const auto c = contract_edges(g, all & ~(std::uint64_t{1} << e));
      if (canonical_labeling(c.graph).code == target) {
        if (first < 0) first = e;
        ++count;
      }
    }
    out.push_back({std::move(g), first, count});
  }
  return out;
}

}  // namespace tautcalc
