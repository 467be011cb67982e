#pragma once

#include <vector>

#include "tautcalc/stable_graph.hpp"

namespace tautcalc {

/// One representative per isomorphism class of stable graphs of `space` with
/// exactly `num_edges` edges, each in canonical labelling, sorted by code.
/// Throws std::invalid_argument("ambient space unstable") for unstable spaces.
std::vector<StableGraph> enumerate_graphs(MarkedSpace space, int num_edges);

struct Degeneration {
  StableGraph graph;    // canonical representative
  int contracted_edge;  // an edge of `graph` whose contraction gives back the input
  int multiplicity;     // number of edges of `graph` whose contraction gives back the input
};

/// Isomorphism classes of stable graphs with one more edge that contract onto `graph`.
std::vector<Degeneration> one_edge_degenerations(const StableGraph& graph);

}  // namespace tautcalc
