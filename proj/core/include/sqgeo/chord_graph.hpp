#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sqgeo/graph.hpp"
#include "sqgeo/partition.hpp"

namespace sqgeo {

/// X–Y non-edge of G; a vertex of the chord graph.
struct ChordNode {
  Vertex x = 0;
  Vertex y = 0;

  auto operator<=>(const ChordNode&) const = default;
};

/// Two X–Y edges x1y1, x2y2 spanning an induced 4-cycle x1 y1 y2 x2.
/// Stored with (x1, y1) lexicographically below (x2, y2).
struct RigidPair {
  Vertex x1 = 0;
  Vertex y1 = 0;
  Vertex x2 = 0;
  Vertex y2 = 0;

  ChordNode chord1() const { return {x1, y2}; }
  ChordNode chord2() const { return {x2, y1}; }

  auto operator<=>(const RigidPair&) const = default;
};

/// Every induced 4-cycle x1 y1 y2 x2 with x's in X and y's in Y, ascending.
std::vector<RigidPair> enumerate_rigid_pairs(const Graph& g, const BabPartition& p);

/// The chord graph: nodes are the X–Y non-edges, and two nodes are adjacent
/// iff they are the two chords of one rigid pair.
class ChordGraph {
 public:
  using NodeId = int;

  struct Link {
    NodeId a = 0;  // a < b
    NodeId b = 0;
  };

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return links_.size(); }

  const ChordNode& node(NodeId id) const { return nodes_[id]; }
  const std::vector<ChordNode>& nodes() const { return nodes_; }
  std::span<const NodeId> neighbors(NodeId id) const {
    return {targets_.data() + offsets_[id], offsets_[id + 1] - offsets_[id]};
  }
  const std::vector<Link>& links() const { return links_; }
  bool isolated(NodeId id) const { return offsets_[id] == offsets_[id + 1]; }

  /// Node id for the non-edge (x, y), if it is one.
  std::optional<NodeId> find(Vertex x, Vertex y) const;
  bool adjacent(NodeId a, NodeId b) const;

  /// The rigid pair whose chords are the endpoints of `link`.
  RigidPair witness(const Link& link) const;

  friend ChordGraph build_chord_graph(const Graph& g, const BabPartition& p);

 private:
  int n_ = 0;
  std::vector<ChordNode> nodes_;
  std::vector<std::size_t> offsets_;  // row id spans targets_[offsets_[id], offsets_[id + 1])
  std::vector<NodeId> targets_;
  std::vector<Link> links_;
  std::vector<NodeId> index_;  // x * n + y -> node id or -1
};

/// For each adjacent pair u < v in X, links (u, y2) with (v, y1) for every
/// y1 ∈ N_Y(u) \ N_Y(v), y2 ∈ N_Y(v) \ N_Y(u). At most n^4 steps; the work
/// is proportional to the number of rigid pairs plus O(n^2) bitset rows.
ChordGraph build_chord_graph(const Graph& g, const BabPartition& p);

struct NonEdgeClasses {
  std::vector<ChordNode> isolated;      // class 1
  std::vector<ChordNode> non_isolated;  // class 2
  std::vector<Edge> ab_pairs;           // class 3: a-side × b-side
};

NonEdgeClasses classify_nonedges(const Graph& g, const BabPartition& p, const ChordGraph& cg);

/// 𝒜: a-vertices (chord nodes with x on the a-side) having a chord-graph
/// neighbor that is not an a-vertex; ℬ symmetrically.
struct AbVertexSets {
  std::vector<ChordGraph::NodeId> script_a;
  std::vector<ChordGraph::NodeId> script_b;
};

AbVertexSets compute_ab_sets(const ChordGraph& cg, const BabPartition& p);

/// Clause-by-clause evaluation of the standing assumption under which the
/// necessary and sufficient conditions are stated.
struct AssumptionReport {
  /// Connectivity is taken over non-isolated chord nodes only; isolated
  /// non-edges never count against it.
  bool chord_connected = false;
  bool degree_bounds_ok = false;   // 0 < |N_Y(v)| < |Y| on both sides
  bool b_non_dominated = false;    // every b has some u ∈ X with N_Y(b) ⊄ N_Y(u)
  bool has_core_edge = false;      // a chord edge with neither end an a-/b-vertex
  bool sides_balanced = false;     // X_a \ X_b and X_b \ X_a both empty or both not
  bool compliant = false;

  std::size_t chord_components = 0;  // among non-isolated nodes

  /// Names of the failing clauses, in declaration order.
  std::vector<std::string> failures() const;
};

AssumptionReport audit_assumption1(const Graph& g, const BabPartition& p, const ChordGraph& cg);

}  // namespace sqgeo
