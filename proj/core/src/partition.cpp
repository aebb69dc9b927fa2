#include "sqgeo/partition.hpp"

#include <algorithm>
#include <string>

#include "sqgeo/error.hpp"

namespace sqgeo {
namespace {

void require_clique(const Graph& g, const VertexSet& s, const char* name) {
  const auto members = s.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!g.adjacent(members[i], members[j])) {
        throw StructuralError(std::string(name) + " is not a clique: missing edge " +
                              std::to_string(members[i]) + "-" + std::to_string(members[j]));
      }
    }
  }
}

// Sorts `side` by ascending |N_Y| and checks that consecutive neighborhoods
// are nested; returns false (and clears) if they are not a chain.
bool nesting_chain(const Graph& g, const VertexSet& y, const VertexSet& side,
                   std::vector<Vertex>& seq) {
  seq = side.members();
  std::vector<std::size_t> degree(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : seq) degree[v] = (g.neighbors(v) & y).size();
  std::stable_sort(seq.begin(), seq.end(),
                   [&](Vertex a, Vertex b) { return degree[a] < degree[b]; });
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (!(g.neighbors(seq[i]) & y).is_subset_of(g.neighbors(seq[i + 1]) & y)) {
      seq.clear();
      return false;
    }
  }
  return true;
}

}  // namespace

Role BabPartition::role(Vertex v) const {
  if (shared.contains(v)) return Role::Shared;
  if (a_only.contains(v)) return Role::AOnly;
  if (b_only.contains(v)) return Role::BOnly;
  return Role::Y;
}

BabPartition BabPartition::swapped() const {
  BabPartition s = *this;
  std::swap(s.x_a, s.x_b);
  std::swap(s.a_only, s.b_only);
  std::swap(s.a_seq, s.b_seq);
  std::swap(s.a_nested, s.b_nested);
  return s;
}

VertexSet y_neighbors(const Graph& g, const BabPartition& p, Vertex v) {
  return g.neighbors(v) & p.y;
}

VertexSet x_neighbors(const Graph& g, const BabPartition& p, Vertex v) {
  return g.neighbors(v) & p.x;
}

BabPartition validate_bab(const Graph& g, const VertexSet& x_a, const VertexSet& x_b,
                          const VertexSet& y) {
  const int n = g.order();
  if (x_a.universe() != n || x_b.universe() != n || y.universe() != n) {
    throw InputError("partition sets are not over the graph's vertex range");
  }
  BabPartition p;
  p.x_a = x_a;
  p.x_b = x_b;
  p.y = y;
  p.x = x_a | x_b;
  p.shared = x_a & x_b;
  p.a_only = x_a - x_b;
  p.b_only = x_b - x_a;

  if (p.x.intersects(y)) {
    throw InputError("vertex " + std::to_string((p.x & y).members().front()) +
                     " is in both X and Y");
  }
  const VertexSet all = p.x | y;
  if (all.size() != static_cast<std::size_t>(n)) {
    Vertex missing = 0;
    while (all.contains(missing)) ++missing;
    throw InputError("vertex " + std::to_string(missing) + " is in none of X_a, X_b, Y");
  }

  require_clique(g, x_a, "X_a");
  require_clique(g, x_b, "X_b");
  require_clique(g, y, "Y");
  if (p.shared.empty()) throw StructuralError("X_a and X_b do not intersect");

  p.a_only.for_each([&](Vertex a) {
    const VertexSet cross = g.neighbors(a) & p.b_only;
    if (!cross.empty()) {
      throw ScopeError("edge " + std::to_string(a) + "-" +
                       std::to_string(cross.members().front()) +
                       " joins X_a \\ X_b to X_b \\ X_a");
    }
  });

  p.a_nested = nesting_chain(g, y, p.a_only, p.a_seq);
  p.b_nested = nesting_chain(g, y, p.b_only, p.b_seq);
  return p;
}

}  // namespace sqgeo
