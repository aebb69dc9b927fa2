#include "sqgeo/sufficient.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

#include "sqgeo/error.hpp"

namespace sqgeo {
namespace {

// "u before v" constraints, kept as a dense adjacency so duplicates collapse.
class Constraints {
 public:
  explicit Constraints(int n) : n_(n), succ_(static_cast<std::size_t>(n), VertexSet(n)) {}

  void before(Vertex u, Vertex v) {
    if (u != v) succ_[u].insert(v);
  }

  // Smallest-id-first topological order; throws with a cycle on conflict.
  LinearOrder linearize(const char* which) const {
    std::vector<int> indeg(static_cast<std::size_t>(n_), 0);
    for (const auto& row : succ_) row.for_each([&](Vertex v) { ++indeg[v]; });
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
    for (Vertex v = 0; v < n_; ++v) {
      if (indeg[v] == 0) ready.push(v);
    }
    std::vector<Vertex> seq;
    seq.reserve(static_cast<std::size_t>(n_));
    while (!ready.empty()) {
      const Vertex v = ready.top();
      ready.pop();
      seq.push_back(v);
      succ_[v].for_each([&](Vertex w) {
        if (--indeg[w] == 0) ready.push(w);
      });
    }
    if (static_cast<int>(seq.size()) != n_) {
      throw ConstructionError(std::string(which) + " rules conflict on cycle " +
                              describe(cycle(indeg)));
    }
    return LinearOrder(std::move(seq));
  }

 private:
  // Every leftover vertex has a leftover predecessor; walk predecessors
  // until one repeats.
  std::vector<Vertex> cycle(const std::vector<int>& indeg) const {
    std::vector<Vertex> pred(static_cast<std::size_t>(n_), -1);
    for (Vertex u = 0; u < n_; ++u) {
      if (indeg[u] == 0) continue;
      succ_[u].for_each([&](Vertex w) {
        if (indeg[w] > 0 && pred[w] < 0) pred[w] = u;
      });
    }
    Vertex v = 0;
    while (indeg[v] == 0) ++v;
    std::vector<int> pos(static_cast<std::size_t>(n_), -1);
    std::vector<Vertex> walk;
    while (pos[v] < 0) {
      pos[v] = static_cast<int>(walk.size());
      walk.push_back(v);
      v = pred[v];
    }
    std::vector<Vertex> out(walk.begin() + pos[v], walk.end());
    std::reverse(out.begin(), out.end());
    return out;
  }

  static std::string describe(const std::vector<Vertex>& c) {
    std::string s;
    for (Vertex v : c) s += std::to_string(v) + " < ";
    return s + std::to_string(c.front());
  }

  int n_;
  std::vector<VertexSet> succ_;
};

// Pairs of `side` ordered by `rel` (forward or reversed), else by ascending
// Y-neighborhood, else by id.
void order_x_pairs(Constraints& c, const Graph& g, const BabPartition& p,
                   const DerivedRelation& rel, const std::vector<Vertex>& side, bool reverse) {
  for (std::size_t i = 0; i < side.size(); ++i) {
    for (std::size_t j = i + 1; j < side.size(); ++j) {
      const Vertex u = side[i];
      const Vertex v = side[j];
      if (rel.related(u, v)) {
        reverse ? c.before(v, u) : c.before(u, v);
        continue;
      }
      if (rel.related(v, u)) {
        reverse ? c.before(u, v) : c.before(v, u);
        continue;
      }
      switch (nesting(g, u, v, p.y)) {
        case Nesting::LeftSubset:
        case Nesting::Equal: c.before(u, v); break;
        case Nesting::RightSubset: c.before(v, u); break;
        case Nesting::Crossing: break;
      }
    }
  }
}

// Y pairs: `rel` (forward or reversed), else larger X-neighborhood first,
// else the crossing rule with the a-side difference leading (forward) or
// trailing (reversed).
void order_y_pairs(Constraints& c, const Graph& g, const BabPartition& p,
                   const DerivedRelation& rel, bool reverse) {
  const auto ys = p.y.members();
  for (std::size_t i = 0; i < ys.size(); ++i) {
    for (std::size_t j = i + 1; j < ys.size(); ++j) {
      const Vertex u = ys[i];
      const Vertex v = ys[j];
      if (rel.related(u, v)) {
        reverse ? c.before(v, u) : c.before(u, v);
        continue;
      }
      if (rel.related(v, u)) {
        reverse ? c.before(u, v) : c.before(v, u);
        continue;
      }
      switch (nesting(g, u, v, p.x)) {
        case Nesting::RightSubset:
        case Nesting::Equal: c.before(u, v); break;
        case Nesting::LeftSubset: c.before(v, u); break;
        case Nesting::Crossing: {
          const VertexSet nu = g.neighbors(u) & p.x;
          const VertexSet nv = g.neighbors(v) & p.x;
          const VertexSet du = nu - nv;
          const VertexSet dv = nv - nu;
          const bool u_leads = du.is_subset_of(p.a_only) && dv.is_subset_of(p.b_only);
          const bool v_leads = dv.is_subset_of(p.a_only) && du.is_subset_of(p.b_only);
          if (u_leads) reverse ? c.before(v, u) : c.before(u, v);
          if (v_leads) reverse ? c.before(u, v) : c.before(v, u);
          break;
        }
      }
    }
  }
}

void require_chains(const BabPartition& p) {
  if (!p.a_nested || !p.b_nested) {
    throw InputError("order construction needs nested a-side and b-side neighborhoods");
  }
}

}  // namespace

DerivedRelation::DerivedRelation(int universe, VertexSet domain)
    : domain_(std::move(domain)), out_(static_cast<std::size_t>(universe), VertexSet(universe)) {}

void DerivedRelation::add(Vertex u, Vertex v) {
  if (u != v) out_[u].insert(v);
}

std::vector<std::pair<Vertex, Vertex>> DerivedRelation::pairs() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (std::size_t u = 0; u < out_.size(); ++u) {
    out_[u].for_each([&](Vertex v) { out.emplace_back(static_cast<Vertex>(u), v); });
  }
  return out;
}

std::size_t DerivedRelation::size() const {
  std::size_t total = 0;
  for (const auto& row : out_) total += row.size();
  return total;
}

DerivedRelations derive_relations(const ChordGraph& cg, const TwoColoring& f,
                                  const BabPartition& p) {
  const int n = p.x.universe();
  DerivedRelations r{DerivedRelation(n, p.x), DerivedRelation(n, p.y)};
  for (const auto& link : cg.links()) {
    const RigidPair rp = cg.witness(link);
    const auto c1 = cg.find(rp.chord1().x, rp.chord1().y);
    if (f[*c1] == Color::Red) {
      r.on_x.add(rp.x1, rp.x2);
      r.on_y.add(rp.y1, rp.y2);
    } else {
      r.on_x.add(rp.x2, rp.x1);
      r.on_y.add(rp.y2, rp.y1);
    }
  }
  return r;
}

PartialOrderCheck validate_partial_order(const DerivedRelation& rel) {
  PartialOrderCheck check;
  rel.domain().for_each([&](Vertex u) {
    if (check.antisymmetry_violation) return;
    rel.out(u).for_each([&](Vertex v) {
      if (!check.antisymmetry_violation && rel.related(v, u)) {
        check.antisymmetry_violation = std::make_pair(std::min(u, v), std::max(u, v));
      }
    });
  });
  if (check.antisymmetry_violation) {
    check.ok = false;
    return check;
  }
  rel.domain().for_each([&](Vertex v) {
    if (check.transitivity_violation) return;
    rel.out(v).for_each([&](Vertex u) {
      if (check.transitivity_violation) return;
      const VertexSet missing = rel.out(u) - rel.out(v);
      if (!missing.empty()) {
        check.transitivity_violation = std::array<Vertex, 3>{v, u, missing.members().front()};
      }
    });
  });
  check.ok = !check.transitivity_violation;
  return check;
}

LinearOrder build_order1(const Graph& g, const BabPartition& p, const DerivedRelation& rel_x,
                         const DerivedRelation& rel_y) {
  require_chains(p);
  const int n = g.order();
  Constraints c(n);

  order_x_pairs(c, g, p, rel_x, p.shared.members(), false);

  for (std::size_t i = 0; i + 1 < p.a_seq.size(); ++i) c.before(p.a_seq[i], p.a_seq[i + 1]);
  for (std::size_t i = 0; i + 1 < p.b_seq.size(); ++i) c.before(p.b_seq[i], p.b_seq[i + 1]);
  p.shared.for_each([&](Vertex x) {
    if (!p.a_seq.empty()) c.before(p.a_seq.back(), x);
    if (!p.b_seq.empty()) c.before(x, p.b_seq.front());
  });

  order_y_pairs(c, g, p, rel_y, false);

  if (!p.b_seq.empty()) {
    const VertexSet head =
        p.a_seq.empty() ? VertexSet(n) : (g.neighbors(p.a_seq.back()) & p.y);
    p.y.for_each([&](Vertex y) {
      if (head.contains(y)) {
        c.before(y, p.b_seq.front());
      } else {
        c.before(p.b_seq.back(), y);
      }
    });
  }

  p.x_a.for_each([&](Vertex x) { p.y.for_each([&](Vertex y) { c.before(x, y); }); });
  return c.linearize("first-order");
}

LinearOrder build_order2(const Graph& g, const BabPartition& p, const DerivedRelation& rel_x,
                         const DerivedRelation& rel_y) {
  require_chains(p);
  Constraints c(g.order());

  order_x_pairs(c, g, p, rel_x, p.x.members(), true);

  p.a_only.for_each([&](Vertex a) {
    p.b_only.for_each([&](Vertex b) {
      if (nesting(g, a, b, p.y) == Nesting::Crossing) c.before(b, a);
    });
  });

  order_y_pairs(c, g, p, rel_y, true);

  p.x.for_each([&](Vertex x) { p.y.for_each([&](Vertex y) { c.before(x, y); }); });
  return c.linearize("second-order");
}

SufficiencyVerdict check_sufficient(const Graph& g, const BabPartition& p, const ChordGraph& cg,
                                    const AbVertexSets& ab) {
  SufficiencyVerdict v;
  auto coloring = color_constrained(cg, ab);
  if (auto* ref = std::get_if<ColoringRefutation>(&coloring)) {
    v.reason = to_string(ref->kind);
    return v;
  }
  v.coloring_ok = true;
  v.coloring = std::get<TwoColoring>(std::move(coloring));
  v.relations = derive_relations(cg, *v.coloring, p);

  const auto cx = validate_partial_order(v.relations->on_x);
  const auto cy = validate_partial_order(v.relations->on_y);
  v.partial_orders_ok = cx.ok && cy.ok;
  v.nesting_ok = p.a_nested && p.b_nested;
  const RigidFreeReport rf = check_rigid_free(g, p, rigid_region_sets(cg, p));
  v.rigid_free_ok = rf.direct_a_ok || rf.direct_b_ok;

  if (!v.partial_orders_ok) {
    v.reason = cx.ok ? "derived relation on Y is not a partial order"
                     : "derived relation on X is not a partial order";
  } else if (!v.nesting_ok) {
    v.reason = !p.a_nested ? "a-side neighborhoods are not nested"
                           : "b-side neighborhoods are not nested";
  } else if (!v.rigid_free_ok) {
    v.reason = "rigid-free condition fails on both sides";
  }
  if (!v.all()) return v;

  if (rf.direct_a_ok) {
    v.orders.emplace(build_order1(g, p, v.relations->on_x, v.relations->on_y),
                     build_order2(g, p, v.relations->on_x, v.relations->on_y));
    return v;
  }

  // Only the b-side qualifies: run the construction with the roles of X_a
  // and X_b exchanged.
  v.swapped = true;
  const BabPartition q = p.swapped();
  const auto recolored = color_constrained(cg, compute_ab_sets(cg, q));
  const auto* f = std::get_if<TwoColoring>(&recolored);
  if (f == nullptr) throw InternalError("coloring lost under the X_a/X_b exchange");
  v.coloring = *f;
  v.relations = derive_relations(cg, *f, q);
  v.orders.emplace(build_order1(g, q, v.relations->on_x, v.relations->on_y),
                   build_order2(g, q, v.relations->on_x, v.relations->on_y));
  return v;
}

}  // namespace sqgeo
