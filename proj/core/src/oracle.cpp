#include "sqgeo/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>

#include "sqgeo/error.hpp"

namespace sqgeo {
namespace {

using Mask = std::uint64_t;

struct Packer {
  int n;
  std::vector<int> bit;  // u * n + v -> bit index, for non-edges only
  std::vector<std::pair<Vertex, Vertex>> edges;

  explicit Packer(const Graph& g) : n(g.order()), bit(static_cast<std::size_t>(n) * n, -1) {
    int next = 0;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (g.adjacent(u, v)) {
          edges.emplace_back(u, v);
        } else {
          bit[u * n + v] = bit[v * n + u] = next++;
        }
      }
    }
  }

  Mask pack(const std::vector<Vertex>& seq, std::vector<int>& rank, std::vector<int>& reach) const {
    for (int i = 0; i < n; ++i) rank[seq[i]] = i;
    std::fill(reach.begin(), reach.end(), -1);
    for (const auto& [u, v] : edges) {
      const int lo = std::min(rank[u], rank[v]);
      reach[lo] = std::max(reach[lo], std::max(rank[u], rank[v]));
    }
    Mask m = 0;
    int span = -1;
    for (int i = 0; i < n; ++i) {
      span = std::max(span, reach[i]);
      for (int j = i + 1; j <= span; ++j) {
        const int b = bit[seq[i] * n + seq[j]];
        if (b >= 0) m |= Mask{1} << b;
      }
    }
    return m;
  }
};

}  // namespace

std::optional<std::pair<LinearOrder, LinearOrder>> brute_force_orders(const Graph& g, int bound) {
  const int n = g.order();
  if (bound > kMaxOracleBound) {
    throw ScopeError("oracle bound " + std::to_string(bound) + " exceeds " +
                     std::to_string(kMaxOracleBound));
  }
  if (n > bound) {
    throw ScopeError("graph has " + std::to_string(n) + " vertices; oracle bound is " +
                     std::to_string(bound));
  }
  if (n == 0) return std::make_pair(LinearOrder(), LinearOrder());

  const Packer packer(g);
  std::vector<Vertex> seq(static_cast<std::size_t>(n));
  std::iota(seq.begin(), seq.end(), 0);
  std::vector<int> rank(static_cast<std::size_t>(n));
  std::vector<int> reach(static_cast<std::size_t>(n));

  // Distinct completions, each with the first order producing it.
  std::vector<Mask> masks;
  std::vector<std::vector<Vertex>> firsts;
  do {
    if (seq.front() > seq.back()) continue;
    const Mask m = packer.pack(seq, rank, reach);
    if (std::find(masks.begin(), masks.end(), m) == masks.end()) {
      masks.push_back(m);
      firsts.push_back(seq);
    }
  } while (std::next_permutation(seq.begin(), seq.end()));

  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (std::size_t j = 0; j < masks.size(); ++j) {
      if ((masks[i] & masks[j]) == 0) {
        return std::make_pair(LinearOrder(firsts[i]), LinearOrder(firsts[j]));
      }
    }
  }
  return std::nullopt;
}

}  // namespace sqgeo
