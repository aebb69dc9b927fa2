#include "sqgeo/verify.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sqgeo/error.hpp"

namespace sqgeo {
namespace {

// reach[i]: largest rank joined by an edge to some vertex of rank <= i.
std::vector<int> reach_table(const Graph& g, const LinearOrder& o) {
  const int n = g.order();
  std::vector<int> reach(static_cast<std::size_t>(n), -1);
  for (const Edge& e : g.edges()) {
    const int lo = std::min(o.rank(e.u), o.rank(e.v));
    const int hi = std::max(o.rank(e.u), o.rank(e.v));
    reach[lo] = std::max(reach[lo], hi);
  }
  for (int i = 1; i < n; ++i) reach[i] = std::max(reach[i], reach[i - 1]);
  return reach;
}

Rational abs_diff(const Rational& a, const Rational& b) { return a < b ? b - a : a - b; }

// a + b·δ with δ a positive infinitesimal.
struct Weight {
  long long a = 0;
  long long b = 0;

  Weight operator+(const Weight& o) const { return {a + o.a, b + o.b}; }
  auto operator<=>(const Weight&) const = default;
};

}  // namespace

Completion::Completion(int n, std::vector<Edge> non_edges)
    : n_(n), non_edges_(std::move(non_edges)), rows_(static_cast<std::size_t>(n), VertexSet(n)) {
  std::sort(non_edges_.begin(), non_edges_.end());
  non_edges_.erase(std::unique(non_edges_.begin(), non_edges_.end()), non_edges_.end());
  for (const Edge& e : non_edges_) {
    rows_[e.u].insert(e.v);
    rows_[e.v].insert(e.u);
  }
}

bool Completion::contains(Vertex u, Vertex v) const {
  return u >= 0 && u < n_ && rows_[u].contains(v);
}

Completion completion(const Graph& g, const LinearOrder& order) {
  const int n = g.order();
  const auto reach = reach_table(g, order);
  std::vector<Edge> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j <= reach[i]; ++j) {
      const Vertex w = order.at(i);
      const Vertex z = order.at(j);
      if (!g.adjacent(w, z)) out.emplace_back(w, z);
    }
  }
  return Completion(n, std::move(out));
}

std::optional<Edge> covering_edge(const Graph& g, const LinearOrder& order, const Edge& pair) {
  const int lo = std::min(order.rank(pair.u), order.rank(pair.v));
  const int hi = std::max(order.rank(pair.u), order.rank(pair.v));
  for (const Edge& e : g.edges()) {
    if (e == pair) continue;
    const int elo = std::min(order.rank(e.u), order.rank(e.v));
    const int ehi = std::max(order.rank(e.u), order.rank(e.v));
    if (elo <= lo && hi <= ehi) return e;
  }
  return std::nullopt;
}

Graph closure_graph(const Graph& g, const LinearOrder& order) {
  auto edges = g.edges();
  const auto extra = completion(g, order).non_edges();
  edges.insert(edges.end(), extra.begin(), extra.end());
  return build_graph(g.order(), edges);
}

bool OrderPair::valid() const {
  return std::none_of(c1.non_edges().begin(), c1.non_edges().end(),
                      [&](const Edge& e) { return c2.contains(e); });
}

OrderPair make_order_pair(const Graph& g, LinearOrder o1, LinearOrder o2) {
  OrderPair p{std::move(o1), std::move(o2), {}, {}};
  p.c1 = completion(g, p.o1);
  p.c2 = completion(g, p.o2);
  return p;
}

OrderCheck verify_orders(const Graph& g, const LinearOrder& o1, const LinearOrder& o2) {
  const Completion c1 = completion(g, o1);
  const Completion c2 = completion(g, o2);
  OrderCheck check;
  for (const Edge& e : c1.non_edges()) {
    if (c2.contains(e)) {
      check.ok = false;
      check.shared_non_edge = e;
      check.witness1 = covering_edge(g, o1, e);
      check.witness2 = covering_edge(g, o2, e);
      break;
    }
  }
  return check;
}

bool ChordSplit::one_each() const {
  return chord1_in_c1 != chord2_in_c1 && chord1_in_c2 != chord2_in_c2 &&
         chord1_in_c1 != chord1_in_c2;
}

std::vector<ChordSplit> chord_distribution(const Graph& g, const BabPartition& p,
                                           const OrderPair& pair) {
  std::vector<ChordSplit> out;
  for (const RigidPair& rp : enumerate_rigid_pairs(g, p)) {
    const ChordNode c1 = rp.chord1();
    const ChordNode c2 = rp.chord2();
    out.push_back({rp, pair.c1.contains(c1.x, c1.y), pair.c2.contains(c1.x, c1.y),
                   pair.c1.contains(c2.x, c2.y), pair.c2.contains(c2.x, c2.y)});
  }
  return out;
}

std::vector<Rational> realize_unit_interval(const Graph& g_aug, const LinearOrder& order) {
  if (!is_unit_interval_order(g_aug, order)) {
    throw StructuralError("order is not a unit interval order of the graph");
  }
  const int n = g_aug.order();
  if (n == 0) return {};

  struct Arc {
    int from;
    int to;
    Weight w;
  };
  // Ranks as variables: q_i = position of order.at(i).
  std::vector<Arc> arcs;
  for (int i = 0; i + 1 < n; ++i) arcs.push_back({i + 1, i, {0, 0}});
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g_aug.adjacent(order.at(i), order.at(j))) {
        arcs.push_back({i, j, {1, 0}});
      } else {
        arcs.push_back({j, i, {-1, -1}});
      }
    }
  }
  std::vector<Weight> dist(static_cast<std::size_t>(n));
  bool changed = true;
  for (int round = 0; round <= n && changed; ++round) {
    changed = false;
    for (const Arc& a : arcs) {
      const Weight cand = dist[a.from] + a.w;
      if (cand < dist[a.to]) {
        dist[a.to] = cand;
        changed = true;
      }
    }
  }
  if (changed) throw InternalError("difference constraints infeasible for a unit interval order");

  const Rational delta(1, 2 * n);
  std::vector<Rational> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Rational q = Rational(dist[i].a - dist[0].a) + delta * (dist[i].b - dist[0].b);
    pos[order.at(i)] = q;
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g_aug.adjacent(u, v) != (abs_diff(pos[u], pos[v]) <= 1)) {
        throw InternalError("realized positions disagree with adjacency at " +
                            std::to_string(u) + "-" + std::to_string(v));
      }
    }
  }
  return pos;
}

Embedding embed(const Graph& g, const OrderPair& pair) {
  if (!pair.valid()) throw InputError("order pair has intersecting completions");
  const auto xs = realize_unit_interval(closure_graph(g, pair.o1), pair.o1);
  const auto ys = realize_unit_interval(closure_graph(g, pair.o2), pair.o2);
  Embedding e;
  e.coords.reserve(xs.size());
  for (std::size_t v = 0; v < xs.size(); ++v) e.coords.push_back({xs[v], ys[v]});
  const auto check = verify_embedding(g, e);
  if (!check.ok) {
    throw InternalError("embedding fails at " + std::to_string(check.violating->u) + "-" +
                        std::to_string(check.violating->v));
  }
  return e;
}

EmbeddingCheck verify_embedding(const Graph& g, const Embedding& e) {
  EmbeddingCheck check;
  const int n = g.order();
  if (static_cast<int>(e.coords.size()) != n) {
    throw InputError("embedding has " + std::to_string(e.coords.size()) + " points for " +
                     std::to_string(n) + " vertices");
  }
  for (Vertex u = 0; u < n && check.ok; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const bool close = abs_diff(e.coords[u].x, e.coords[v].x) <= 1 &&
                         abs_diff(e.coords[u].y, e.coords[v].y) <= 1;
      if (close != g.adjacent(u, v)) {
        check.ok = false;
        check.violating = Edge(u, v);
        break;
      }
    }
  }
  return check;
}

std::pair<LinearOrder, LinearOrder> coordinate_orders(const Embedding& e) {
  std::vector<Vertex> bx(e.coords.size());
  std::iota(bx.begin(), bx.end(), 0);
  std::vector<Vertex> by = bx;
  std::stable_sort(bx.begin(), bx.end(),
                   [&](Vertex u, Vertex v) { return e.coords[u].x < e.coords[v].x; });
  std::stable_sort(by.begin(), by.end(),
                   [&](Vertex u, Vertex v) { return e.coords[u].y < e.coords[v].y; });
  return {LinearOrder(std::move(bx)), LinearOrder(std::move(by))};
}

}  // namespace sqgeo
