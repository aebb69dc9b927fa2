#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sqgeo/necessary.hpp"
#include "sqgeo/order.hpp"

namespace sqgeo {

/// Strict part of a relation on a vertex subset; reflexive pairs implied.
class DerivedRelation {
 public:
  DerivedRelation() = default;
  DerivedRelation(int universe, VertexSet domain);

  void add(Vertex u, Vertex v);

  const VertexSet& domain() const { return domain_; }
  bool related(Vertex u, Vertex v) const { return out_[u].contains(v); }
  /// Out(v) = { u : v < u }.
  const VertexSet& out(Vertex v) const { return out_[v]; }
  /// All (u, v) with u < v, ascending.
  std::vector<std::pair<Vertex, Vertex>> pairs() const;
  std::size_t size() const;

 private:
  VertexSet domain_;
  std::vector<VertexSet> out_;
};

/// The relations <_X on X and <_Y on Y read off a coloring: for every rigid
/// pair {xy, x'y'} whose chord xy' is red and x'y blue, x <_X x' and
/// y <_Y y'.
struct DerivedRelations {
  DerivedRelation on_x;
  DerivedRelation on_y;
};

DerivedRelations derive_relations(const ChordGraph& cg, const TwoColoring& f,
                                  const BabPartition& p);

struct PartialOrderCheck {
  bool ok = true;
  std::optional<std::pair<Vertex, Vertex>> antisymmetry_violation;
  /// (p, q, r) with p < q, q < r but not p < r.
  std::optional<std::array<Vertex, 3>> transitivity_violation;
};

/// Antisymmetry plus transitivity via Out-sets: for all v and u ∈ Out(v),
/// Out(u) ⊆ Out(v).
PartialOrderCheck validate_partial_order(const DerivedRelation& rel);

/// Builds <_1: a-side chain, then X_a ∩ X_b, then N_Y(a_r) ∩ Y, then the
/// b-side chain, then the rest of Y. Pairs no rule relates are placed by a
/// smallest-id-first topological extension. Throws ConstructionError (with
/// the offending cycle) if the rules conflict.
LinearOrder build_order1(const Graph& g, const BabPartition& p, const DerivedRelation& rel_x,
                         const DerivedRelation& rel_y);

/// Builds <_2: all of X before all of Y, X by reversed <_X and ascending
/// N_Y, Y by reversed <_Y and descending N_X.
LinearOrder build_order2(const Graph& g, const BabPartition& p, const DerivedRelation& rel_x,
                         const DerivedRelation& rel_y);

struct SufficiencyVerdict {
  bool coloring_ok = false;
  bool partial_orders_ok = false;
  bool nesting_ok = false;
  bool rigid_free_ok = false;
  /// The construction ran with X_a and X_b exchanged because only the
  /// b-side satisfied the rigid-free condition.
  bool swapped = false;  // orders, coloring and relations built on p.swapped()

  std::optional<TwoColoring> coloring;
  std::optional<DerivedRelations> relations;
  std::optional<std::pair<LinearOrder, LinearOrder>> orders;
  std::string reason;

  bool all() const { return coloring_ok && partial_orders_ok && nesting_ok && rigid_free_ok; }
};

/// Evaluates the sufficient conditions and, when they all hold, constructs
/// the two linear orders. Expects an instance satisfying the standing
/// assumption.
SufficiencyVerdict check_sufficient(const Graph& g, const BabPartition& p, const ChordGraph& cg,
                                    const AbVertexSets& ab);

}  // namespace sqgeo
