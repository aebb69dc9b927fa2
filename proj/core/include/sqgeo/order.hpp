#pragma once

#include <span>
#include <vector>

#include "sqgeo/graph.hpp"

namespace sqgeo {

/// Total order on V(G), stored both as a sequence and as a rank table.
class LinearOrder {
 public:
  LinearOrder() = default;
  /// Throws InputError unless `sequence` is a permutation of [0, size).
  explicit LinearOrder(std::vector<Vertex> sequence);

  static LinearOrder identity(int n);

  int size() const { return static_cast<int>(sequence_.size()); }
  const std::vector<Vertex>& sequence() const { return sequence_; }
  int rank(Vertex v) const { return rank_[v]; }
  Vertex at(int position) const { return sequence_[position]; }
  bool before(Vertex u, Vertex v) const { return rank_[u] < rank_[v]; }

  LinearOrder reversed() const;

  bool operator==(const LinearOrder& o) const { return sequence_ == o.sequence_; }

 private:
  std::vector<Vertex> sequence_;
  std::vector<int> rank_;
};

/// Umbrella test: for all u < z < v with u ~ v, both u ~ z and z ~ v.
/// A graph is a unit interval graph iff some order passes.
bool is_unit_interval_order(const Graph& g, const LinearOrder& order);

}  // namespace sqgeo
