#include "sqgeo/graph.hpp"

#include <string>

#include "sqgeo/error.hpp"

namespace sqgeo {

VertexSet::VertexSet(int universe, std::span<const Vertex> members)
    : bits_(static_cast<std::size_t>(universe)) {
  for (Vertex v : members) {
    if (v < 0 || v >= universe) {
      throw InputError("vertex " + std::to_string(v) + " outside [0, " + std::to_string(universe) +
                       ")");
    }
    bits_.set(static_cast<std::size_t>(v));
  }
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

Graph build_graph(int n, std::span<const Edge> edges) {
  if (n < 0) throw InputError("negative vertex count");
  Graph g;
  g.rows_.assign(static_cast<std::size_t>(n), VertexSet(n));
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n) {
      throw InputError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                       " has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    if (!g.rows_[e.u].contains(e.v)) {
      g.rows_[e.u].insert(e.v);
      g.rows_[e.v].insert(e.u);
      ++g.edge_count_;
    }
  }
  return g;
}

Graph build_graph(int n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    rows_[u].for_each([&](Vertex v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

std::vector<Edge> Graph::non_edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v = u + 1; v < order(); ++v) {
      if (!adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

Nesting nesting(const Graph& g, Vertex u, Vertex v, const VertexSet& scope) {
  const VertexSet nu = g.neighbors(u) & scope;
  const VertexSet nv = g.neighbors(v) & scope;
  const bool left = nu.is_subset_of(nv);
  const bool right = nv.is_subset_of(nu);
  if (left && right) return Nesting::Equal;
  if (left) return Nesting::LeftSubset;
  if (right) return Nesting::RightSubset;
  return Nesting::Crossing;
}

const char* to_string(Nesting n) {
  switch (n) {
    case Nesting::LeftSubset: return "left-subset";
    case Nesting::RightSubset: return "right-subset";
    case Nesting::Equal: return "equal";
    case Nesting::Crossing: return "crossing";
  }
  return "?";
}

}  // namespace sqgeo
