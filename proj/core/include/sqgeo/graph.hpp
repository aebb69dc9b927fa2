#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "sqgeo/vertex_set.hpp"

namespace sqgeo {

/// Unordered vertex pair, normalized so that first < second.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

/// Finite simple undirected graph on the dense vertex range [0, n).
/// Immutable once built.
class Graph {
 public:
  Graph() = default;

  int order() const { return static_cast<int>(rows_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const { return rows_[u].contains(v); }
  const VertexSet& neighbors(Vertex v) const { return rows_[v]; }

  /// All edges, ascending.
  std::vector<Edge> edges() const;
  /// All non-adjacent pairs, ascending.
  std::vector<Edge> non_edges() const;

  bool operator==(const Graph&) const = default;

  friend Graph build_graph(int n, std::span<const Edge> edges);

 private:
  std::vector<VertexSet> rows_;
  std::size_t edge_count_ = 0;
};

/// Builds a graph; duplicate edges collapse. Throws InputError on an
/// out-of-range endpoint or a self-loop.
Graph build_graph(int n, std::span<const Edge> edges);
Graph build_graph(int n, std::initializer_list<Edge> edges);

/// Subset comparison of N(u) ∩ scope against N(v) ∩ scope.
enum class Nesting {
  LeftSubset,   // strictly contained
  RightSubset,  // strictly contains
  Equal,
  Crossing,
};

Nesting nesting(const Graph& g, Vertex u, Vertex v, const VertexSet& scope);

/// True when the comparison has N(u) ∩ scope ⊆ N(v) ∩ scope.
inline bool left_within(Nesting n) { return n == Nesting::LeftSubset || n == Nesting::Equal; }
inline bool right_within(Nesting n) { return n == Nesting::RightSubset || n == Nesting::Equal; }

const char* to_string(Nesting n);

}  // namespace sqgeo
