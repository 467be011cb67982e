#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tautcalc {

/// The moduli space of stable genus-g curves with n ordered markings.
struct MarkedSpace {
  int g = 0;
  int n = 0;

  constexpr int dim() const { return 3 * g - 3 + n; }
  constexpr bool stable() const { return g >= 0 && n >= 0 && 2 * g - 2 + n > 0; }
  /// Throws std::invalid_argument("ambient space unstable") unless stable().
  void validate() const;

  auto operator<=>(const MarkedSpace&) const = default;
};

/// Bitmask over markings 1..n; marking i is bit (i - 1).
using MarkingSet = std::uint32_t;

constexpr MarkingSet marking_bit(int i) { return MarkingSet{1} << (i - 1); }
constexpr MarkingSet all_markings(int n) { return n == 0 ? 0 : (MarkingSet{1} << n) - 1; }
int popcount(MarkingSet s);

/// Dual graph of a stratum.
///
/// Half-edges are numbered uniformly: legs first (half-edge i is the leg carrying
/// marking i + 1), then edge e owns half-edges n + 2e and n + 2e + 1. Loops and
/// parallel edges are ordinary edges.
class StableGraph {
 public:
  StableGraph() = default;
  StableGraph(std::vector<int> genera, std::vector<int> leg_vertex,
              std::vector<std::array<int, 2>> edges);

  /// Single vertex of genus g carrying all n legs.
  static StableGraph smooth(MarkedSpace space);

  int num_vertices() const { return static_cast<int>(genera_.size()); }
  int num_legs() const { return static_cast<int>(leg_vertex_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_half_edges() const { return num_legs() + 2 * num_edges(); }

  int genus(int v) const { return genera_[v]; }
  const std::vector<int>& genera() const { return genera_; }
  const std::vector<int>& leg_vertices() const { return leg_vertex_; }
  const std::vector<std::array<int, 2>>& edges() const { return edges_; }

  bool is_leg(int h) const { return h < num_legs(); }
  int edge_of(int h) const { return (h - num_legs()) / 2; }
  std::array<int, 2> edge_half_edges(int e) const {
    return {num_legs() + 2 * e, num_legs() + 2 * e + 1};
  }
  /// Other end of the edge containing h, or -1 for a leg.
  int partner(int h) const;
  int vertex_of(int h) const;
  bool is_loop(int e) const { return edges_[e][0] == edges_[e][1]; }

  std::vector<std::vector<int>> half_edges_by_vertex() const;
  int valence(int v) const;
  /// Dimension of the vertex moduli space, 3 g_v - 3 + valence.
  int vertex_dim(int v) const { return 3 * genera_[v] - 3 + valence(v); }

  int betti_number() const { return num_edges() - num_vertices() + 1; }
  int total_genus() const;
  MarkedSpace space() const { return {total_genus(), num_legs()}; }

  bool connected() const;
  /// First violated invariant, if any.
  std::optional<std::string> violation() const;
  /// Throws std::invalid_argument naming the violated invariant.
  void validate() const;
  void validate(MarkedSpace ambient) const;

  /// True if removing edge e disconnects the graph.
  bool is_separating(int e) const;
  /// For a separating edge: genus and markings on the side of half-edge n + 2e.
  std::pair<int, MarkingSet> side_of(int e) const;

  bool operator==(const StableGraph&) const = default;

 private:
  std::vector<int> genera_;
  std::vector<int> leg_vertex_;
  std::vector<std::array<int, 2>> edges_;
};

/// Result of contracting a set of edges.
struct Contraction {
  StableGraph graph;
  std::vector<int> vertex_map;     // old vertex -> new vertex
  std::vector<int> half_edge_map;  // old half-edge -> new half-edge, -1 if contracted
};

/// Contracts every edge whose bit is not set in keep_mask; kept edges stay in order.
Contraction contract_edges(const StableGraph& graph, std::uint64_t keep_mask);

/// A one-edge degeneration at a single vertex. The original vertex keeps its
/// index, a split appends one vertex, and the new edge is appended last, so every
/// old half-edge keeps its number.
struct LocalDegeneration {
  StableGraph graph;
  int vertex = 0;
  bool loop = false;
  /// For a split: the half-edges (at vertex) that moved to the new vertex.
  std::vector<int> moved;
};

/// All ordered one-edge degenerations at vertex v: the genus-reducing loop (if
/// g_v > 0) and every ordered stable split. Each unordered split appears twice,
/// so summing with weight 1/2 per entry counts leg-labelled classes with
/// weight 1/|Aut|.
std::vector<LocalDegeneration> local_degenerations(const StableGraph& graph, int v);

}  // namespace tautcalc
