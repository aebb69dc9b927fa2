#include "sqgeo/generate.hpp"

#include <random>
#include <string>
#include <vector>

#include "sqgeo/error.hpp"
#include "sqgeo/sufficient.hpp"

namespace sqgeo {
namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// std::bernoulli_distribution is implementation-defined; this is not.
bool coin(std::mt19937_64& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

Instance draw(const GenerateParams& prm, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int a0 = 0;
  const int s0 = a0 + prm.a_only;
  const int b0 = s0 + prm.shared;
  const int y0 = b0 + prm.b_only;
  const int n = y0 + prm.y;

  std::vector<Vertex> x_a, x_b, y;
  for (int v = a0; v < b0; ++v) x_a.push_back(v);
  for (int v = s0; v < y0; ++v) x_b.push_back(v);
  for (int v = y0; v < n; ++v) y.push_back(v);

  std::vector<Edge> edges;
  auto clique = [&](const std::vector<Vertex>& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) edges.emplace_back(s[i], s[j]);
    }
  };
  clique(x_a);
  clique(x_b);
  clique(y);
  for (int x = a0; x < y0; ++x) {
    for (int w = y0; w < n; ++w) {
      if (coin(rng, prm.density)) edges.emplace_back(x, w);
    }
  }
  return make_instance(n, edges, x_a, x_b, y);
}

bool passes(const Instance& inst, GenerateFilter filter) {
  if (filter == GenerateFilter::None) return true;
  const Graph& g = inst.graph;
  const BabPartition& p = inst.partition;
  const ChordGraph cg = build_chord_graph(g, p);
  const NecessaryVerdict nec = check_necessary(g, p, cg);
  if (filter == GenerateFilter::Assumption1) {
    return nec.outcome != NecessaryVerdict::Outcome::OutOfScope;
  }
  if (nec.outcome != NecessaryVerdict::Outcome::Pass) return false;
  try {
    return check_sufficient(g, p, cg, compute_ab_sets(cg, p)).all();
  } catch (const ConstructionError&) {
    // The conditions held and the construction still failed; keep it so
    // the failure surfaces downstream.
    return true;
  }
}

}  // namespace

Instance generate_bab(const GenerateParams& prm) {
  if (prm.a_only < 0 || prm.b_only < 0 || prm.y < 0 || prm.shared < 1) {
    throw InputError("generator sizes must be non-negative with at least one shared vertex");
  }
  if (!(prm.density >= 0.0 && prm.density <= 1.0)) {
    throw InputError("density must lie in [0, 1]");
  }
  if (prm.max_attempts < 1) throw InputError("max_attempts must be positive");

  std::uint64_t state = prm.seed;
  for (int attempt = 0; attempt < prm.max_attempts; ++attempt) {
    Instance inst = draw(prm, splitmix64(state));
    if (passes(inst, prm.filter)) return inst;
  }
  throw GenerationError("no instance passed the filter in " + std::to_string(prm.max_attempts) +
                        " attempts");
}

}  // namespace sqgeo
