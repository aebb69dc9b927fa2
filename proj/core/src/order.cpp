#include "sqgeo/order.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sqgeo/error.hpp"

namespace sqgeo {

LinearOrder::LinearOrder(std::vector<Vertex> sequence)
    : sequence_(std::move(sequence)), rank_(sequence_.size(), -1) {
  const int n = size();
  for (int i = 0; i < n; ++i) {
    const Vertex v = sequence_[i];
    if (v < 0 || v >= n) {
      throw InputError("order entry " + std::to_string(v) + " outside [0, " + std::to_string(n) +
                       ")");
    }
    if (rank_[v] != -1) throw InputError("vertex " + std::to_string(v) + " repeated in order");
    rank_[v] = i;
  }
}

LinearOrder LinearOrder::identity(int n) {
  std::vector<Vertex> seq(static_cast<std::size_t>(n));
  std::iota(seq.begin(), seq.end(), 0);
  return LinearOrder(std::move(seq));
}

LinearOrder LinearOrder::reversed() const {
  std::vector<Vertex> seq(sequence_.rbegin(), sequence_.rend());
  return LinearOrder(std::move(seq));
}

bool is_unit_interval_order(const Graph& g, const LinearOrder& order) {
  const int n = g.order();
  for (int i = 0; i < n; ++i) {
    const Vertex u = order.at(i);
    for (int j = i + 2; j < n; ++j) {
      const Vertex v = order.at(j);
      if (!g.adjacent(u, v)) continue;
      for (int k = i + 1; k < j; ++k) {
        const Vertex z = order.at(k);
        if (!g.adjacent(u, z) || !g.adjacent(z, v)) return false;
      }
    }
  }
  return true;
}

}  // namespace sqgeo
