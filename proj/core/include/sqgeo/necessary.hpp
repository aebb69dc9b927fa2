#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sqgeo/chord_graph.hpp"

namespace sqgeo {

enum class Color : unsigned char { None, Red, Blue };

inline Color opposite(Color c) {
  return c == Color::Red ? Color::Blue : c == Color::Blue ? Color::Red : Color::None;
}

/// Proper 2-coloring of the non-isolated chord nodes; isolated nodes keep
/// Color::None.
struct TwoColoring {
  std::vector<Color> color;  // indexed by chord node id

  Color operator[](ChordGraph::NodeId id) const { return color[id]; }
};

struct ColoringRefutation {
  enum class Kind {
    OddCycle,      // chord graph not bipartite
    ScriptASplit,  // 𝒜 meets both color classes
    ScriptBSplit,  // ℬ meets both color classes
    ScriptClash,   // an 𝒜 node and a ℬ node share a color
  };
  Kind kind = Kind::OddCycle;
  /// OddCycle: the cycle in traversal order. Otherwise the two conflicting
  /// nodes.
  std::vector<ChordGraph::NodeId> nodes;
};

const char* to_string(ColoringRefutation::Kind k);

/// BFS 2-coloring of the chord graph, canonicalized so 𝒜 is red (or ℬ blue
/// when 𝒜 is empty, or the first non-isolated node red when both are).
/// Odd-cycle refutations report a shortest odd cycle. Throws ScopeError when
/// the non-isolated part of the chord graph is disconnected.
std::variant<TwoColoring, ColoringRefutation> color_constrained(const ChordGraph& cg,
                                                                const AbVertexSets& ab);

/// R(X_a): y such that some non-isolated chord node (x, y) has x ∈ X_a.
struct RigidRegionSets {
  VertexSet r_xa;
  VertexSet r_xb;
};

RigidRegionSets rigid_region_sets(const ChordGraph& cg, const BabPartition& p);

/// A vertex v whose Y-neighborhood contains both y-ends of a forbidden rigid
/// pair.
struct RigidFreeViolation {
  Vertex vertex = 0;
  RigidPair pair;
};

struct RigidFreeReport {
  VertexSet r_xa;
  VertexSet r_xb;

  /// Cardinality test: every a-side vertex has |N_Y(a) ∩ R(X_b)| <= 1.
  bool side_a_ok = false;
  /// Every b-side vertex has |N_Y(b) ∩ R(X_a)| <= 1.
  bool side_b_ok = false;
  bool holds = false;

  /// Direct enumeration: no a-side vertex a has a rigid pair with x-ends
  /// {x1, x2} ⊆ X_a ∩ X_b or {x, b} (b on the b-side) and both y-ends in
  /// N_Y(a); symmetrically for the b-side.
  bool direct_a_ok = false;
  bool direct_b_ok = false;
  bool direct_holds = false;
  std::optional<RigidFreeViolation> direct_a_violation;
  std::optional<RigidFreeViolation> direct_b_violation;

  /// Direct test with the a-side clause quantified over all of X_a rather
  /// than X_a \ X_b.
  bool direct_a_all_ok = false;
};

RigidFreeReport check_rigid_free(const Graph& g, const BabPartition& p, const RigidRegionSets& r);

struct NecessaryVerdict {
  enum class Outcome { Pass, Fail, OutOfScope };
  Outcome outcome = Outcome::OutOfScope;

  AssumptionReport assumption;
  std::optional<TwoColoring> coloring;
  std::optional<ColoringRefutation> coloring_refutation;
  std::optional<RigidFreeReport> rigid_free;
  std::string reason;
};

const char* to_string(NecessaryVerdict::Outcome o);

/// Checks the coloring condition and the rigid-free condition. Instances
/// failing the standing assumption are OutOfScope.
NecessaryVerdict check_necessary(const Graph& g, const BabPartition& p);
NecessaryVerdict check_necessary(const Graph& g, const BabPartition& p, const ChordGraph& cg);

}  // namespace sqgeo
