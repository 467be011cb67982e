#pragma once

#include <string>
#include <vector>

#include "tautcalc/stable_graph.hpp"

namespace tautcalc {

/// Extra labels that isomorphisms must preserve: an integer per half-edge and a
/// sorted integer list per vertex (used for psi exponents and kappa indices).
struct Coloring {
  std::vector<int> half_edge;
  std::vector<std::vector<int>> vertex;
};

/// Canonical encoding of a (colored) stable graph together with its automorphism order.
struct CanonicalForm {
  std::string code;
  long automorphisms = 1;

  bool operator==(const CanonicalForm&) const = default;
};

/// Full canonical labelling: the relabelled graph plus the maps that take it there.
struct Labeling {
  StableGraph graph;
  Coloring coloring;                // coloring transported to the canonical graph
  std::string code;
  std::vector<int> vertex_map;      // original vertex -> canonical vertex
  std::vector<int> half_edge_map;   // original half-edge -> canonical half-edge
  long automorphisms = 1;
};

/// A half-edge automorphism; legs are always fixed.
struct Automorphism {
  std::vector<int> vertex;
  std::vector<int> half_edge;
};

/// Canonical labelling by invariant refinement followed by exhaustive search
/// within the refined cells. The graph must satisfy the stability invariants.
Labeling canonical_labeling(const StableGraph& graph, const Coloring* coloring = nullptr);

/// Validates, then returns the canonical encoding and the automorphism order
/// (half-edge swaps of loops and permutations of parallel edges included).
CanonicalForm canonicalize(const StableGraph& graph);

/// Every automorphism of the colored graph, as explicit permutations.
std::vector<Automorphism> automorphisms(const StableGraph& graph, const Coloring* coloring = nullptr);

}  // namespace tautcalc
