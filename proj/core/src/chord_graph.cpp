#include "sqgeo/chord_graph.hpp"

#include <algorithm>
#include <deque>

namespace sqgeo {

std::vector<RigidPair> enumerate_rigid_pairs(const Graph& g, const BabPartition& p) {
  std::vector<RigidPair> out;
  const auto xs = p.x.members();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Vertex u = xs[i];
    const VertexSet nu = g.neighbors(u) & p.y;
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      const Vertex v = xs[j];
      if (!g.adjacent(u, v)) continue;
      const VertexSet nv = g.neighbors(v) & p.y;
      const VertexSet only_u = nu - nv;
      if (only_u.empty()) continue;
      const VertexSet only_v = nv - nu;
      only_u.for_each([&](Vertex y1) {
        only_v.for_each([&](Vertex y2) { out.push_back({u, y1, v, y2}); });
      });
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<ChordGraph::NodeId> ChordGraph::find(Vertex x, Vertex y) const {
  if (x < 0 || y < 0 || x >= n_ || y >= n_) return std::nullopt;
  const NodeId id = index_[static_cast<std::size_t>(x) * n_ + y];
  if (id < 0) return std::nullopt;
  return id;
}

bool ChordGraph::adjacent(NodeId a, NodeId b) const {
  const auto ra = neighbors(a);
  const auto rb = neighbors(b);
  const auto shorter = ra.size() <= rb.size() ? ra : rb;
  const NodeId other = ra.size() <= rb.size() ? b : a;
  return std::binary_search(shorter.begin(), shorter.end(), other);
}

RigidPair ChordGraph::witness(const Link& link) const {
  const ChordNode& p = nodes_[link.a];
  const ChordNode& q = nodes_[link.b];
  // Chords are (x1, y2) and (x2, y1) with x1 < x2.
  const ChordNode& lo = p.x < q.x ? p : q;
  const ChordNode& hi = p.x < q.x ? q : p;
  return {lo.x, hi.y, hi.x, lo.y};
}

ChordGraph build_chord_graph(const Graph& g, const BabPartition& p) {
  ChordGraph cg;
  const int n = g.order();
  cg.n_ = n;
  cg.index_.assign(static_cast<std::size_t>(n) * n, -1);

  const auto ys = p.y.members();
  p.x.for_each([&](Vertex x) {
    for (Vertex y : ys) {
      if (g.adjacent(x, y)) continue;
      cg.index_[static_cast<std::size_t>(x) * n + y] = static_cast<int>(cg.nodes_.size());
      cg.nodes_.push_back({x, y});
    }
  });

  // One link per rigid pair, produced directly from crossing Y-neighborhoods
  // of adjacent X vertices.
  const auto xs = p.x.members();
  std::vector<VertexSet> ny;
  ny.reserve(xs.size());
  for (Vertex x : xs) ny.push_back(g.neighbors(x) & p.y);
  // Two passes over adjacent X pairs with crossing neighborhoods: degrees
  // first (each chord of the pair's row gets one link per y on the other
  // side), then the rows. Pairs run in ascending (i, j), so a row receives its
  // smaller-x neighbors before its larger-x ones, each ascending, and comes
  // out sorted.
  auto for_crossing = [&](auto&& visit) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t j = i + 1; j < xs.size(); ++j) {
        if (!g.adjacent(xs[i], xs[j])) continue;
        const VertexSet only_u = ny[i] - ny[j];
        if (only_u.empty()) continue;
        const VertexSet only_v = ny[j] - ny[i];
        if (only_v.empty()) continue;
        visit(static_cast<std::size_t>(xs[i]) * n, static_cast<std::size_t>(xs[j]) * n, only_u,
              only_v);
      }
    }
  };

  const std::size_t count = cg.nodes_.size();
  cg.offsets_.assign(count + 1, 0);
  for_crossing([&](std::size_t row_u, std::size_t row_v, const VertexSet& only_u,
                   const VertexSet& only_v) {
    const std::size_t nu = only_u.size();
    const std::size_t nv = only_v.size();
    only_v.for_each([&](Vertex y2) { cg.offsets_[cg.index_[row_u + y2] + 1] += nu; });
    only_u.for_each([&](Vertex y1) { cg.offsets_[cg.index_[row_v + y1] + 1] += nv; });
  });
  for (std::size_t id = 0; id < count; ++id) cg.offsets_[id + 1] += cg.offsets_[id];

  cg.targets_.resize(cg.offsets_[count]);
  std::vector<std::size_t> fill(cg.offsets_.begin(), cg.offsets_.end() - 1);
  for_crossing([&](std::size_t row_u, std::size_t row_v, const VertexSet& only_u,
                   const VertexSet& only_v) {
    only_u.for_each([&](Vertex y1) {
      const int c2 = cg.index_[row_v + y1];
      only_v.for_each([&](Vertex y2) {
        const int c1 = cg.index_[row_u + y2];
        cg.targets_[fill[c1]++] = c2;
        cg.targets_[fill[c2]++] = c1;
      });
    });
  });

  cg.links_.reserve(cg.targets_.size() / 2);
  for (std::size_t id = 0; id < count; ++id) {
    const auto a = static_cast<ChordGraph::NodeId>(id);
    for (auto b : cg.neighbors(a)) {
      if (b > a) cg.links_.push_back({a, b});
    }
  }
  return cg;
}

NonEdgeClasses classify_nonedges(const Graph& g, const BabPartition& p, const ChordGraph& cg) {
  NonEdgeClasses out;
  for (std::size_t id = 0; id < cg.node_count(); ++id) {
    const auto nid = static_cast<ChordGraph::NodeId>(id);
    (cg.isolated(nid) ? out.isolated : out.non_isolated).push_back(cg.node(nid));
  }
  p.a_only.for_each([&](Vertex a) {
    p.b_only.for_each([&](Vertex b) {
      if (!g.adjacent(a, b)) out.ab_pairs.emplace_back(a, b);
    });
  });
  std::sort(out.ab_pairs.begin(), out.ab_pairs.end());
  return out;
}

AbVertexSets compute_ab_sets(const ChordGraph& cg, const BabPartition& p) {
  AbVertexSets out;
  for (std::size_t id = 0; id < cg.node_count(); ++id) {
    const auto nid = static_cast<ChordGraph::NodeId>(id);
    const Vertex x = cg.node(nid).x;
    const bool is_a = p.a_only.contains(x);
    const bool is_b = p.b_only.contains(x);
    if (!is_a && !is_b) continue;
    const VertexSet& side = is_a ? p.a_only : p.b_only;
    const auto& nb = cg.neighbors(nid);
    const bool mixed = std::any_of(nb.begin(), nb.end(), [&](ChordGraph::NodeId m) {
      return !side.contains(cg.node(m).x);
    });
    if (mixed) (is_a ? out.script_a : out.script_b).push_back(nid);
  }
  return out;
}

std::vector<std::string> AssumptionReport::failures() const {
  std::vector<std::string> out;
  if (!chord_connected) out.emplace_back("chord graph connected");
  if (!degree_bounds_ok) out.emplace_back("degree bounds");
  if (!b_non_dominated) out.emplace_back("b non-dominated");
  if (!has_core_edge) out.emplace_back("core chord edge");
  if (!sides_balanced) out.emplace_back("two-sided partition");
  return out;
}

AssumptionReport audit_assumption1(const Graph& g, const BabPartition& p, const ChordGraph& cg) {
  AssumptionReport r;

  std::vector<char> seen(cg.node_count(), 0);
  for (std::size_t start = 0; start < cg.node_count(); ++start) {
    const auto s = static_cast<ChordGraph::NodeId>(start);
    if (seen[start] || cg.isolated(s)) continue;
    ++r.chord_components;
    std::deque<ChordGraph::NodeId> queue{s};
    seen[start] = 1;
    while (!queue.empty()) {
      const auto v = queue.front();
      queue.pop_front();
      for (auto w : cg.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }
  r.chord_connected = r.chord_components <= 1;

  const std::size_t ny = p.y.size();
  r.degree_bounds_ok = true;
  (p.a_only | p.b_only).for_each([&](Vertex v) {
    const std::size_t d = (g.neighbors(v) & p.y).size();
    if (d == 0 || d >= ny) r.degree_bounds_ok = false;
  });

  r.b_non_dominated = true;
  const auto xs = p.x.members();
  p.b_only.for_each([&](Vertex b) {
    const VertexSet nb = g.neighbors(b) & p.y;
    const bool escapes = std::any_of(xs.begin(), xs.end(), [&](Vertex u) {
      return !nb.is_subset_of(g.neighbors(u) & p.y);
    });
    if (!escapes) r.b_non_dominated = false;
  });

  const VertexSet ab = p.a_only | p.b_only;
  r.has_core_edge = std::any_of(cg.links().begin(), cg.links().end(), [&](const auto& l) {
    return !ab.contains(cg.node(l.a).x) && !ab.contains(cg.node(l.b).x);
  });

  // The coloring argument picks an a and a b together; with exactly one side
  // empty the 𝒜/ℬ constraint is not necessary.
  r.sides_balanced = p.a_only.empty() == p.b_only.empty();

  r.compliant = r.chord_connected && r.degree_bounds_ok && r.b_non_dominated &&
                r.has_core_edge && r.sides_balanced;
  return r;
}

}  // namespace sqgeo
