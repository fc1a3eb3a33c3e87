#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pgq/bigint.hpp"
#include "pgq/kernels.hpp"
#include "pgq/projspace.hpp"

namespace pgq {

/// Simple undirected graph: bit-matrix adjacency plus sorted neighbor lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(kernels::BitMatrix adjacency);
  static Graph from_edges(int vertices, std::span<const std::pair<int, int>> edges);

  int order() const noexcept { return adj_.size(); }
  bool adjacent(int u, int v) const noexcept { return adj_.test(u, v); }
  std::span<const int> neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  std::uint64_t edge_count() const noexcept { return edges_; }
  const kernels::BitMatrix& adjacency() const noexcept { return adj_; }

 private:
  kernels::BitMatrix adj_;
  std::vector<int> offsets_, data_;
  std::uint64_t edges_ = 0;
};

/// The line set of a projective space under the intersection relation.
/// The graph is loop-free; `related` restores the reflexive relation.
class GrassmannSpace {
 public:
  explicit GrassmannSpace(const ProjSpace& sp);

  const ProjSpace& space() const noexcept { return *space_; }
  const Graph& graph() const noexcept { return graph_; }

 private:
  const ProjSpace* space_;
  Graph graph_;
};

GrassmannSpace build_grassmann(const ProjSpace& sp);

/// a ~ b: a == b or the lines meet.
bool related(const GrassmannSpace& g, int a, int b);
/// Distinct lines without a common point.
bool skew(const GrassmannSpace& g, int a, int b);

/// Closed-form degree (q+1) * ((q^n - 1)/(q - 1) - 1).
std::int64_t grassmann_degree(int n, int q);

/// "GRAPH V E" followed by "u v" rows, u < v, sorted.
std::string export_graph(const Graph& g);
std::string export_graph(const GrassmannSpace& g);
/// Inverse of export_graph. Throws ParseError.
Graph parse_graph(std::string_view text);

struct AutomorphismReport {
  BigInt group_order;
  /// Vertex permutations; each verified to preserve adjacency.
  std::vector<std::vector<int>> generators;
  /// Base vertices of the first search path and the orbit length of each
  /// in the pointwise stabilizer of its predecessors. group_order is the
  /// product of the orbit lengths.
  std::vector<int> base;
  std::vector<int> orbit_lengths;
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
};

inline constexpr int kMaxAutomorphismVertices = 200;

/// Exact automorphism group order by individualization/refinement search.
/// Throws TooLarge above kMaxAutomorphismVertices vertices and
/// BudgetExceeded after `node_budget` search nodes.
AutomorphismReport automorphism_group(const Graph& g, std::uint64_t node_budget);
AutomorphismReport automorphism_group(const GrassmannSpace& g, std::uint64_t node_budget);

}  // namespace pgq
