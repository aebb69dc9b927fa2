#pragma once

#include <vector>

#include "sqgeo/graph.hpp"

namespace sqgeo {

enum class Role { AOnly, Shared, BOnly, Y };

/// The clique structure (X_a, X_b, Y) of a B_{a,b}-graph, validated against
/// its graph. X = X_a ∪ X_b; the "a-side" is X_a \ X_b and the "b-side" is
/// X_b \ X_a.
struct BabPartition {
  VertexSet x_a;
  VertexSet x_b;
  VertexSet y;

  VertexSet x;       // X_a ∪ X_b
  VertexSet shared;  // X_a ∩ X_b
  VertexSet a_only;  // X_a \ X_b
  VertexSet b_only;  // X_b \ X_a

  /// a-side and b-side sorted by ascending N_Y under inclusion (ties by id).
  /// Empty unless the respective neighborhoods form a chain.
  std::vector<Vertex> a_seq;
  std::vector<Vertex> b_seq;
  bool a_nested = false;
  bool b_nested = false;

  Role role(Vertex v) const;

  /// Both halves of the binate split are present (Y nonempty). The X side is
  /// two overlapping cliques and therefore always a connected unit interval
  /// graph.
  bool binate() const { return !y.empty(); }

  /// Same graph with the roles of X_a and X_b exchanged.
  BabPartition swapped() const;
};

/// N_Y(v) = N(v) ∩ Y.
VertexSet y_neighbors(const Graph& g, const BabPartition& p, Vertex v);
/// N_X(v) = N(v) ∩ (X_a ∪ X_b).
VertexSet x_neighbors(const Graph& g, const BabPartition& p, Vertex v);

/// Validates the clique structure and computes the nesting sequences.
/// Throws InputError if the sets do not partition V(G) as required,
/// StructuralError naming a missing edge if a set is not a clique or
/// X_a ∩ X_b is empty, and ScopeError if an a-side vertex is adjacent to a
/// b-side vertex.
BabPartition validate_bab(const Graph& g, const VertexSet& x_a, const VertexSet& x_b,
                          const VertexSet& y);

}  // namespace sqgeo
