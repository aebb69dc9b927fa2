#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sqgeo/chord_graph.hpp"
#include "sqgeo/order.hpp"
#include "sqgeo/rational.hpp"

namespace sqgeo {

/// Non-edges {w, z} of G lying inside the closed span of some edge u ~ v,
/// i.e. u <= w, z <= v in the order. Endpoints count: the pair (1, 2) in
/// the order 0 1 2 3 of the 4-cycle 0-2-3-1-0 is covered by the edge 0 ~ 2.
class Completion {
 public:
  Completion() = default;
  Completion(int n, std::vector<Edge> non_edges);

  const std::vector<Edge>& non_edges() const { return non_edges_; }
  std::size_t size() const { return non_edges_.size(); }
  bool contains(Vertex u, Vertex v) const;
  bool contains(const Edge& e) const { return contains(e.u, e.v); }

  bool operator==(const Completion& o) const { return non_edges_ == o.non_edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> non_edges_;
  std::vector<VertexSet> rows_;
};

Completion completion(const Graph& g, const LinearOrder& order);

/// An edge of G whose closed span in `order` covers both ends of `pair`.
std::optional<Edge> covering_edge(const Graph& g, const LinearOrder& order, const Edge& pair);

/// G plus every pair covered by an edge span: the unit interval supergraph
/// induced by `order`.
Graph closure_graph(const Graph& g, const LinearOrder& order);

struct OrderPair {
  LinearOrder o1;
  LinearOrder o2;
  Completion c1;
  Completion c2;

  /// The completions are disjoint.
  bool valid() const;
};

OrderPair make_order_pair(const Graph& g, LinearOrder o1, LinearOrder o2);

struct OrderCheck {
  bool ok = true;
  std::optional<Edge> shared_non_edge;
  std::optional<Edge> witness1;  // covering edge in o1
  std::optional<Edge> witness2;  // covering edge in o2
};

/// The two orders certify G iff their completions are disjoint.
OrderCheck verify_orders(const Graph& g, const LinearOrder& o1, const LinearOrder& o2);

struct ChordSplit {
  RigidPair pair;
  bool chord1_in_c1 = false;  // chord1 = x1y2
  bool chord1_in_c2 = false;
  bool chord2_in_c1 = false;  // chord2 = x2y1
  bool chord2_in_c2 = false;

  /// Each completion holds exactly one of the two chords.
  bool one_each() const;
};

std::vector<ChordSplit> chord_distribution(const Graph& g, const BabPartition& p,
                                           const OrderPair& pair);

/// Positions p with p nondecreasing along `order` and u ~ v ⇔ |p_u − p_v| <= 1,
/// for a graph on which `order` passes the umbrella test. Positions are the
/// solution of the difference constraints
///   p_u <= p_v,  p_v − p_u <= 1 (adjacent),  p_v − p_u >= 1 + δ (not)
/// for u before v, solved symbolically in (integer, δ) and instantiated at
/// δ = 1/(2n). Throws StructuralError if the order fails the umbrella test.
std::vector<Rational> realize_unit_interval(const Graph& g_aug, const LinearOrder& order);

struct Point {
  Rational x;
  Rational y;

  bool operator==(const Point&) const = default;
};

struct Embedding {
  std::vector<Point> coords;  // indexed by vertex
};

/// x from the closure of G under o1, y from the closure under o2. Throws
/// InputError for an invalid pair and InternalError if the result does not
/// verify.
Embedding embed(const Graph& g, const OrderPair& pair);

struct EmbeddingCheck {
  bool ok = true;
  std::optional<Edge> violating;
};

/// u ~ v ⇔ max(|Δx|, |Δy|) <= 1 for every pair, compared exactly.
EmbeddingCheck verify_embedding(const Graph& g, const Embedding& e);

/// The vertex orders by x and by y coordinate (ties by id).
std::pair<LinearOrder, LinearOrder> coordinate_orders(const Embedding& e);

}  // namespace sqgeo
