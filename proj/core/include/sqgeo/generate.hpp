#pragma once

#include <cstdint>

#include "sqgeo/instance.hpp"

namespace sqgeo {

enum class GenerateFilter { None, Assumption1, Sufficient };

struct GenerateParams {
  int a_only = 1;  // |X_a \ X_b|
  int shared = 1;  // |X_a ∩ X_b|, at least 1
  int b_only = 1;  // |X_b \ X_a|
  int y = 1;       // |Y|
  double density = 0.5;
  std::uint64_t seed = 0;
  GenerateFilter filter = GenerateFilter::None;
  int max_attempts = 10000;
};

/// Random B_{a,b}-graph: vertices numbered a-side, shared, b-side, Y; the
/// three cliques are complete, there are no a–b edges, and each X–Y pair
/// is an edge with probability `density`. Deterministic per seed on every
/// platform. With a filter, draws are repeated until the instance passes
/// (GenerationError after max_attempts).
Instance generate_bab(const GenerateParams& params);

}  // namespace sqgeo
