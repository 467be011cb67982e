#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "tautcalc/canonical.hpp"
#include "tautcalc/decorated.hpp"
#include "tautcalc/stable_graph.hpp"

namespace tautcalc {

/// Every stable graph of one space, with automorphisms and contraction data.
///
/// Graphs are stored in canonical labelling. For each graph A the atlas knows every
/// pair (G, S) where contracting the edges of G outside S gives a graph isomorphic
/// to A, together with one reference isomorphism; composing it with Aut(A) gives all
/// of them.
class StrataAtlas {
 public:
  /// Contraction of graph `graph` (keeping the edges in `keep`) onto a target graph.
  struct Specialization {
    int graph = 0;
    std::uint64_t keep = 0;
    std::vector<int> half_edge;  // graph half-edge -> target half-edge, -1 if contracted
    std::vector<int> vertex;     // graph vertex -> target vertex
  };

  /// A graph G with an A-structure and a B-structure whose kept edges cover G.
  struct Structure {
    int graph = 0;
    int a = 0;  // index into specializations(A)
    int b = 0;  // index into specializations(B)
    std::vector<int> excess;  // edges kept by both
  };

  explicit StrataAtlas(MarkedSpace space);

  /// Shared instance per space, built on first use.
  static const StrataAtlas& of(MarkedSpace space);

  MarkedSpace space() const { return space_; }
  const std::vector<StableGraph>& graphs() const { return graphs_; }
  /// Index of the graph with this undecorated canonical code; throws if absent.
  int index_of(const std::string& code) const;
  const std::vector<Automorphism>& automorphisms(int graph) const { return auts_[graph]; }
  long aut_order(int graph) const { return static_cast<long>(auts_[graph].size()); }
  const std::vector<Specialization>& specializations(int graph) const { return specs_[graph]; }

  /// Generic (A, B)-structures, computed once per pair.
  const std::vector<Structure>& structures(int a, int b) const;

  /// A decorated stratum moved onto the atlas labelling of its graph.
  struct Placed {
    int graph = 0;
    std::vector<int> psi;
    std::vector<std::vector<int>> kappa;
  };
  Placed place(const DecoratedStratum& s) const;

  /// All decorated strata (psi on half-edges, kappa on vertices) of the given degree,
  /// one per isomorphism class, dropping those that vanish for dimension reasons.
  std::vector<DecoratedStratum> spanning_strata(int degree) const;

 private:
  MarkedSpace space_;
  std::vector<StableGraph> graphs_;
  std::map<std::string, int> index_;
  std::vector<std::vector<Automorphism>> auts_;
  std::vector<std::vector<Specialization>> specs_;

  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, int>, std::unique_ptr<std::vector<Structure>>> structures_;
};

}  // namespace tautcalc
