#pragma once

#include <optional>
#include <utility>

#include "sqgeo/order.hpp"

namespace sqgeo {

inline constexpr int kDefaultOracleBound = 6;
/// Completions are packed into 64-bit masks, one bit per vertex pair.
inline constexpr int kMaxOracleBound = 11;

/// Exhaustive search over order pairs for one with disjoint completions.
/// Orders and their reversals share a completion, so only orders with
/// first vertex < last vertex are visited. The result is the
/// lexicographically first such pair. Throws ScopeError if
/// g.order() > bound or bound > kMaxOracleBound.
std::optional<std::pair<LinearOrder, LinearOrder>> brute_force_orders(
    const Graph& g, int bound = kDefaultOracleBound);

}  // namespace sqgeo
