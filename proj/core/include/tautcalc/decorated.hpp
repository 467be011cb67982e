#pragma once

#include <string>
#include <vector>

#include "tautcalc/canonical.hpp"
#include "tautcalc/rational.hpp"
#include "tautcalc/stable_graph.hpp"

namespace tautcalc {

/// A stable graph with psi exponents on half-edges (legs included) and a
/// multiset of kappa indices on each vertex. As a class it stands for the
/// pushforward of the decoration along the gluing map of the graph, with no
/// automorphism factor; the class of the locus itself is 1/|Aut| times that.
struct DecoratedStratum {
  StableGraph graph;
  std::vector<int> psi;                 // indexed by half-edge
  std::vector<std::vector<int>> kappa;  // per vertex, sorted, entries >= 1

  DecoratedStratum() = default;
  explicit DecoratedStratum(StableGraph g);
  DecoratedStratum(StableGraph g, std::vector<int> psi_exponents, std::vector<std::vector<int>> kappas);

  MarkedSpace space() const { return graph.space(); }
  int degree() const;
  int vertex_degree(int v) const;
  /// Some vertex carries more decoration than the dimension of its moduli space.
  bool vanishes_by_dimension() const;
  Coloring coloring() const;

  std::vector<int> psi_legs() const;
  std::vector<std::array<int, 2>> psi_half_edges() const;

  bool operator==(const DecoratedStratum&) const = default;
};

struct CanonicalStratum {
  DecoratedStratum stratum;
  std::string code;
  long automorphisms = 1;
};

/// Canonical relabelling respecting decorations; equal codes iff isomorphic decorated graphs.
CanonicalStratum canonicalize(const DecoratedStratum& s);

/// Integral over Mbar_{g,n} of prod psi^{d_i} prod kappa_{b_j}. Kappa classes are removed
/// one at a time by passing to one more marking carrying psi^{b+1}, with the
/// comparison kappa_c -> kappa_c - psi_new^c on the remaining ones.
Rational vertex_integral(int g, std::vector<int> psi, std::vector<int> kappa);

/// Integral of the decorated stratum class (zero unless top degree).
Rational integrate(const DecoratedStratum& s);

/// Integral over the gluing space of graph with explicit decorations.
Rational integrate_decorations(const StableGraph& graph, const std::vector<int>& psi,
                               const std::vector<std::vector<int>>& kappa);

std::string describe(const DecoratedStratum& s);

}  // namespace tautcalc
