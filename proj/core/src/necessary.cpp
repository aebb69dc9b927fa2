#include "sqgeo/necessary.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "sqgeo/error.hpp"

namespace sqgeo {
namespace {

using NodeId = ChordGraph::NodeId;

// All-source search is quadratic in the chord graph; past this many
// non-isolated nodes the single-tree cycle is reported instead.
constexpr std::size_t kShortestCycleLimit = 4000;

struct Bfs {
  std::vector<int> dist;
  std::vector<NodeId> parent;
};

Bfs bfs_from(const ChordGraph& cg, NodeId s) {
  Bfs b{std::vector<int>(cg.node_count(), -1), std::vector<NodeId>(cg.node_count(), -1)};
  std::deque<NodeId> queue{s};
  b.dist[s] = 0;
  while (!queue.empty()) {
    const NodeId v = queue.front();
    queue.pop_front();
    for (NodeId w : cg.neighbors(v)) {
      if (b.dist[w] < 0) {
        b.dist[w] = b.dist[v] + 1;
        b.parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  return b;
}

// Cycle through the same-layer edge (u, v) of a BFS tree: u up to the lowest
// common ancestor, then back down to v.
std::vector<NodeId> tree_cycle(const Bfs& b, NodeId u, NodeId v) {
  std::vector<NodeId> up{u};
  std::vector<NodeId> down{v};
  while (up.back() != down.back()) {
    up.push_back(b.parent[up.back()]);
    down.push_back(b.parent[down.back()]);
  }
  down.pop_back();
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

std::vector<NodeId> odd_cycle(const ChordGraph& cg, const std::vector<NodeId>& sources) {
  std::vector<NodeId> best;
  std::size_t best_len = std::numeric_limits<std::size_t>::max();
  for (NodeId s : sources) {
    const Bfs b = bfs_from(cg, s);
    for (const auto& l : cg.links()) {
      if (b.dist[l.a] < 0 || b.dist[l.a] != b.dist[l.b]) continue;
      if (static_cast<std::size_t>(2 * b.dist[l.a] + 1) >= best_len) continue;
      auto cycle = tree_cycle(b, l.a, l.b);
      if (cycle.size() < best_len) {
        best_len = cycle.size();
        best = std::move(cycle);
      }
    }
    if (best_len == 3) break;
  }
  return best;
}

std::size_t count_in(const VertexSet& s, const VertexSet& nb) { return (s & nb).size(); }

// First (vertex, pair) with both x-ends in `allowed`, not both in `excluded`,
// and both y-ends in N_Y(vertex).
std::optional<RigidFreeViolation> find_violation(const Graph& g, const BabPartition& p,
                                                 const std::vector<RigidPair>& pairs,
                                                 const VertexSet& vertices,
                                                 const VertexSet& allowed,
                                                 const VertexSet& excluded) {
  std::optional<RigidFreeViolation> found;
  vertices.for_each([&](Vertex v) {
    if (found) return;
    const VertexSet nv = g.neighbors(v) & p.y;
    for (const auto& rp : pairs) {
      if (!allowed.contains(rp.x1) || !allowed.contains(rp.x2)) continue;
      if (excluded.contains(rp.x1) && excluded.contains(rp.x2)) continue;
      if (rp.x1 == v || rp.x2 == v) continue;
      if (nv.contains(rp.y1) && nv.contains(rp.y2)) {
        found = RigidFreeViolation{v, rp};
        return;
      }
    }
  });
  return found;
}

}  // namespace

const char* to_string(ColoringRefutation::Kind k) {
  switch (k) {
    case ColoringRefutation::Kind::OddCycle: return "odd cycle in chord graph";
    case ColoringRefutation::Kind::ScriptASplit: return "a-vertex set split across colors";
    case ColoringRefutation::Kind::ScriptBSplit: return "b-vertex set split across colors";
    case ColoringRefutation::Kind::ScriptClash: return "a-vertex and b-vertex share a color";
  }
  return "?";
}

std::variant<TwoColoring, ColoringRefutation> color_constrained(const ChordGraph& cg,
                                                                const AbVertexSets& ab) {
  TwoColoring f{std::vector<Color>(cg.node_count(), Color::None)};
  std::vector<NodeId> non_isolated;
  for (std::size_t id = 0; id < cg.node_count(); ++id) {
    if (!cg.isolated(static_cast<NodeId>(id))) non_isolated.push_back(static_cast<NodeId>(id));
  }
  if (non_isolated.empty()) return f;

  bool bipartite = true;
  std::deque<NodeId> queue{non_isolated.front()};
  f.color[non_isolated.front()] = Color::Red;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const NodeId v = queue.front();
    queue.pop_front();
    for (NodeId w : cg.neighbors(v)) {
      if (f.color[w] == Color::None) {
        f.color[w] = opposite(f.color[v]);
        ++reached;
        queue.push_back(w);
      } else if (f.color[w] == f.color[v]) {
        bipartite = false;
      }
    }
  }
  if (reached != non_isolated.size()) {
    throw ScopeError("chord graph has more than one non-trivial component");
  }

  if (!bipartite) {
    std::vector<NodeId> sources = non_isolated;
    if (sources.size() > kShortestCycleLimit) sources.resize(1);
    return ColoringRefutation{ColoringRefutation::Kind::OddCycle, odd_cycle(cg, sources)};
  }

  auto split = [&](const std::vector<NodeId>& s) -> std::optional<NodeId> {
    for (NodeId id : s) {
      if (f[id] != f[s.front()]) return id;
    }
    return std::nullopt;
  };
  if (auto other = split(ab.script_a)) {
    return ColoringRefutation{ColoringRefutation::Kind::ScriptASplit,
                              {ab.script_a.front(), *other}};
  }
  if (auto other = split(ab.script_b)) {
    return ColoringRefutation{ColoringRefutation::Kind::ScriptBSplit,
                              {ab.script_b.front(), *other}};
  }
  if (!ab.script_a.empty() && !ab.script_b.empty() &&
      f[ab.script_a.front()] == f[ab.script_b.front()]) {
    return ColoringRefutation{ColoringRefutation::Kind::ScriptClash,
                              {ab.script_a.front(), ab.script_b.front()}};
  }

  const bool flip = !ab.script_a.empty() ? f[ab.script_a.front()] == Color::Blue
                    : !ab.script_b.empty() ? f[ab.script_b.front()] == Color::Red
                                           : false;
  if (flip) {
    for (auto& c : f.color) c = opposite(c);
  }
  return f;
}

RigidRegionSets rigid_region_sets(const ChordGraph& cg, const BabPartition& p) {
  const int n = p.x.universe();
  RigidRegionSets r{VertexSet(n), VertexSet(n)};
  for (std::size_t id = 0; id < cg.node_count(); ++id) {
    const auto nid = static_cast<NodeId>(id);
    if (cg.isolated(nid)) continue;
    const ChordNode& c = cg.node(nid);
    if (p.x_a.contains(c.x)) r.r_xa.insert(c.y);
    if (p.x_b.contains(c.x)) r.r_xb.insert(c.y);
  }
  return r;
}

RigidFreeReport check_rigid_free(const Graph& g, const BabPartition& p,
                                 const RigidRegionSets& r) {
  RigidFreeReport rep;
  rep.r_xa = r.r_xa;
  rep.r_xb = r.r_xb;

  rep.side_a_ok = true;
  p.a_only.for_each([&](Vertex a) {
    if (count_in(r.r_xb, g.neighbors(a)) > 1) rep.side_a_ok = false;
  });
  rep.side_b_ok = true;
  p.b_only.for_each([&](Vertex b) {
    if (count_in(r.r_xa, g.neighbors(b)) > 1) rep.side_b_ok = false;
  });
  rep.holds = rep.side_a_ok || rep.side_b_ok;

  // Forbidden x-ends for an a-side vertex: two shared vertices, or a shared
  // vertex with a b-side vertex. Both lie in X_b and are not both b-side.
  const auto pairs = enumerate_rigid_pairs(g, p);
  rep.direct_a_violation = find_violation(g, p, pairs, p.a_only, p.x_b, p.b_only);
  rep.direct_b_violation = find_violation(g, p, pairs, p.b_only, p.x_a, p.a_only);
  rep.direct_a_ok = !rep.direct_a_violation;
  rep.direct_b_ok = !rep.direct_b_violation;
  rep.direct_holds = rep.direct_a_ok || rep.direct_b_ok;
  rep.direct_a_all_ok = !find_violation(g, p, pairs, p.x_a, p.x_b, p.b_only);
  return rep;
}

const char* to_string(NecessaryVerdict::Outcome o) {
  switch (o) {
    case NecessaryVerdict::Outcome::Pass: return "pass";
    case NecessaryVerdict::Outcome::Fail: return "fail";
    case NecessaryVerdict::Outcome::OutOfScope: return "out-of-scope";
  }
  return "?";
}

NecessaryVerdict check_necessary(const Graph& g, const BabPartition& p) {
  return check_necessary(g, p, build_chord_graph(g, p));
}

NecessaryVerdict check_necessary(const Graph& g, const BabPartition& p, const ChordGraph& cg) {
  NecessaryVerdict v;
  v.assumption = audit_assumption1(g, p, cg);
  if (!v.assumption.compliant) {
    v.outcome = NecessaryVerdict::Outcome::OutOfScope;
    v.reason = "standing assumption fails:";
    for (const auto& f : v.assumption.failures()) v.reason += " [" + f + "]";
    return v;
  }

  auto coloring = color_constrained(cg, compute_ab_sets(cg, p));
  if (auto* ref = std::get_if<ColoringRefutation>(&coloring)) {
    v.outcome = NecessaryVerdict::Outcome::Fail;
    v.reason = to_string(ref->kind);
    v.coloring_refutation = std::move(*ref);
    return v;
  }
  v.coloring = std::get<TwoColoring>(std::move(coloring));

  v.rigid_free = check_rigid_free(g, p, rigid_region_sets(cg, p));
  if (!v.rigid_free->direct_holds) {
    v.outcome = NecessaryVerdict::Outcome::Fail;
    v.reason = "rigid-free condition fails on both sides";
    return v;
  }
  v.outcome = NecessaryVerdict::Outcome::Pass;
  return v;
}

}  // namespace sqgeo
