#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "sqgeo/error.hpp"

namespace sqgeo::testing {

std::vector<RigidPair> rigid_pairs_by_subsets(const Graph& g, const BabPartition& p) {
  const int n = g.order();
  std::set<RigidPair> found;
  for (int q0 = 0; q0 < n; ++q0) {
    for (int q1 = q0 + 1; q1 < n; ++q1) {
      for (int q2 = q1 + 1; q2 < n; ++q2) {
        for (int q3 = q2 + 1; q3 < n; ++q3) {
          std::array<Vertex, 4> s{q0, q1, q2, q3};
          do {
            const auto [x1, y1, y2, x2] = s;
            if (!p.x.contains(x1) || !p.x.contains(x2) || !p.y.contains(y1) ||
                !p.y.contains(y2) || x1 > x2) {
              continue;
            }
            if (g.adjacent(x1, y1) && g.adjacent(y1, y2) && g.adjacent(y2, x2) &&
                g.adjacent(x2, x1) && !g.adjacent(x1, y2) && !g.adjacent(x2, y1)) {
              found.insert({x1, y1, x2, y2});
            }
          } while (std::next_permutation(s.begin(), s.end()));
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

namespace {

std::vector<std::vector<int>> class_permutations(const std::vector<std::vector<int>>& classes,
                                                 int n) {
  std::vector<std::vector<int>> out{std::vector<int>(static_cast<std::size_t>(n))};
  std::iota(out[0].begin(), out[0].end(), 0);
  for (const auto& cls : classes) {
    std::vector<std::vector<int>> next;
    for (const auto& base : out) {
      std::vector<int> image = cls;
      do {
        auto perm = base;
        for (std::size_t i = 0; i < cls.size(); ++i) perm[cls[i]] = image[i];
        next.push_back(std::move(perm));
      } while (std::next_permutation(image.begin(), image.end()));
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<Instance> small_instances(int max_n) {
  std::vector<Instance> out;
  for (int n = 2; n <= max_n; ++n) {
    for (int ny = 1; ny < n; ++ny) {
      const int nx = n - ny;
      for (int ns = 1; ns <= nx; ++ns) {
        for (int na = 0; na + ns <= nx; ++na) {
          const int nb = nx - ns - na;
          std::vector<std::vector<int>> classes(4);
          for (int v = 0; v < n; ++v) {
            const int cls = v < na ? 0 : v < na + ns ? 1 : v < nx ? 2 : 3;
            classes[cls].push_back(v);
          }
          const auto perms = class_permutations(classes, n);
          const int bits = nx * ny;
          auto bit = [&](int x, int y) { return x * ny + (y - nx); };
          for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
            bool canonical = true;
            for (const auto& pi : perms) {
              std::uint32_t image = 0;
              for (int x = 0; x < nx; ++x) {
                for (int y = nx; y < n; ++y) {
                  if (mask >> bit(x, y) & 1u) image |= 1u << bit(pi[x], pi[y]);
                }
              }
              if (image < mask) {
                canonical = false;
                break;
              }
            }
            if (!canonical) continue;

            std::vector<Edge> edges;
            std::vector<Vertex> x_a, x_b, y;
            for (int v = 0; v < na + ns; ++v) x_a.push_back(v);
            for (int v = na; v < nx; ++v) x_b.push_back(v);
            for (int v = nx; v < n; ++v) y.push_back(v);
            auto clique = [&](const std::vector<Vertex>& s) {
              for (std::size_t i = 0; i < s.size(); ++i) {
                for (std::size_t j = i + 1; j < s.size(); ++j) edges.emplace_back(s[i], s[j]);
              }
            };
            clique(x_a);
            clique(x_b);
            clique(y);
            for (int x = 0; x < nx; ++x) {
              for (int w = nx; w < n; ++w) {
                if (mask >> bit(x, w) & 1u) edges.emplace_back(x, w);
              }
            }
            out.push_back(make_instance(n, edges, x_a, x_b, y));
          }
        }
      }
    }
  }
  return out;
}

std::vector<Instance> random_instances(int n, int count, std::uint64_t seed,
                                       GenerateFilter filter) {
  static constexpr std::array<double, 5> kDensities{0.25, 0.4, 0.5, 0.6, 0.75};
  std::mt19937_64 rng(seed);
  std::vector<Instance> out;
  while (static_cast<int>(out.size()) < count) {
    GenerateParams prm;
    prm.y = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
    const int nx = n - prm.y;
    prm.shared = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(nx));
    prm.a_only = static_cast<int>(rng() % static_cast<std::uint64_t>(nx - prm.shared + 1));
    prm.b_only = nx - prm.shared - prm.a_only;
    prm.density = kDensities[rng() % kDensities.size()];
    prm.seed = rng();
    prm.filter = filter;
    prm.max_attempts = 200;
    try {
      out.push_back(generate_bab(prm));
    } catch (const GenerationError&) {
    }
  }
  return out;
}

namespace {

using Rows = std::vector<std::uint32_t>;

bool has_hole(const Rows& adj, int n) {
  // Maximum cardinality search; chordal iff the reverse visit order is a
  // perfect elimination order.
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  std::vector<int> order;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (pos[v] < 0 && (best < 0 || weight[v] > weight[best])) best = v;
    }
    pos[best] = step;
    order.push_back(best);
    for (int w = 0; w < n; ++w) {
      if (pos[w] < 0 && (adj[best] >> w & 1u)) ++weight[w];
    }
  }
  for (int v : order) {
    // earlier-visited neighbours of v must form a clique
    std::uint32_t earlier = 0;
    for (int w = 0; w < n; ++w) {
      if ((adj[v] >> w & 1u) && pos[w] < pos[v]) earlier |= 1u << w;
    }
    int last = -1;
    for (int w = 0; w < n; ++w) {
      if ((earlier >> w & 1u) && (last < 0 || pos[w] > pos[last])) last = w;
    }
    if (last >= 0 && ((earlier & ~(1u << last)) & ~adj[last]) != 0) return true;
  }
  return false;
}

bool has_claw(const Rows& adj, int n) {
  for (int c = 0; c < n; ++c) {
    for (int a = 0; a < n; ++a) {
      if (!(adj[c] >> a & 1u)) continue;
      for (int b = a + 1; b < n; ++b) {
        if (!(adj[c] >> b & 1u) || (adj[a] >> b & 1u)) continue;
        for (int d = b + 1; d < n; ++d) {
          if ((adj[c] >> d & 1u) && !(adj[a] >> d & 1u) && !(adj[b] >> d & 1u)) return true;
        }
      }
    }
  }
  return false;
}

// Net (triangle with three pendants) or tent (triangle with a common
// neighbour for each side), given no claw and no hole.
bool has_net_or_tent(const Rows& adj, int n) {
  if (n < 6) return false;
  std::vector<int> pick(6);
  std::function<bool(int, int)> rec = [&](int from, int k) -> bool {
    if (k == 6) {
      std::uint32_t mask = 0;
      for (int v : pick) mask |= 1u << v;
      std::vector<int> hi, lo;
      int edges = 0;
      for (int v : pick) {
        const int d = std::popcount(adj[v] & mask);
        edges += d;
        (d >= 3 ? hi : lo).push_back(v);
      }
      edges /= 2;
      if (hi.size() != 3) return false;
      std::uint32_t hmask = 0, lmask = 0;
      for (int v : hi) hmask |= 1u << v;
      for (int v : lo) lmask |= 1u << v;
      for (int v : hi) {
        if (std::popcount(adj[v] & hmask) != 2) return false;
      }
      for (int v : lo) {
        if (adj[v] & lmask) return false;
      }
      if (edges == 6) {
        for (int v : hi) {
          if (std::popcount(adj[v] & lmask) != 1) return false;
        }
        return true;
      }
      if (edges == 9) {
        for (int v : lo) {
          if (std::popcount(adj[v] & hmask) != 2) return false;
        }
        for (int v : hi) {
          if (std::popcount(adj[v] & lmask) != 2) return false;
        }
        return true;
      }
      return false;
    }
    for (int v = from; v < n; ++v) {
      pick[k] = v;
      if (rec(v + 1, k + 1)) return true;
    }
    return false;
  };
  return rec(0, 0);
}

bool unit_interval(const Rows& adj, int n) {
  return !has_claw(adj, n) && !has_hole(adj, n) && !has_net_or_tent(adj, n);
}

}  // namespace

bool square_by_supergraphs(const Graph& g) {
  const int n = g.order();
  if (n > 32) throw InputError("square_by_supergraphs: too many vertices");
  Rows adj(static_cast<std::size_t>(n), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  const std::vector<Edge> missing = g.non_edges();
  const int k = static_cast<int>(missing.size());
  if (k > 20) throw InputError("square_by_supergraphs: too many non-edges");
  const std::uint32_t full = (1u << k) - 1;
  // ok[m]: G plus the non-edges in m is unit interval; then spread to
  // supersets' view: any[m] = some ok subset of m.
  std::vector<char> ok(static_cast<std::size_t>(full) + 1, 0);
  for (std::uint32_t m = 0; m <= full; ++m) {
    Rows a = adj;
    for (int i = 0; i < k; ++i) {
      if (m >> i & 1u) {
        a[missing[i].u] |= 1u << missing[i].v;
        a[missing[i].v] |= 1u << missing[i].u;
      }
    }
    ok[m] = unit_interval(a, n);
  }
  std::vector<char> any = ok;
  for (int i = 0; i < k; ++i) {
    for (std::uint32_t m = 0; m <= full; ++m) {
      if (m >> i & 1u) any[m] = any[m] || any[m ^ (1u << i)];
    }
  }
  for (std::uint32_t m = 0; m <= full; ++m) {
    if (ok[m] && any[full ^ m]) return true;
  }
  return false;
}

std::vector<std::string> completion_property_violations(const Graph& g, const BabPartition& p,
                                                        const LinearOrder& o,
                                                        const Completion& c) {
  const int n = g.order();
  std::vector<std::string> out;
  auto r = [&](Vertex v) { return o.rank(v); };
  auto report = [&](const char* which, Vertex a, Vertex b) {
    out.push_back(std::string(which) + " at " + std::to_string(a) + "," + std::to_string(b));
  };
  auto min_rank = [&](const VertexSet& s) {
    int m = n;
    s.for_each([&](Vertex v) { m = std::min(m, r(v)); });
    return m;
  };
  auto max_rank = [&](const VertexSet& s) {
    int m = -1;
    s.for_each([&](Vertex v) { m = std::max(m, r(v)); });
    return m;
  };

  for (Vertex z = 0; z < n; ++z) {
    const int lo = min_rank(g.neighbors(z));
    const int hi = max_rank(g.neighbors(z));
    for (Vertex w = 0; w < n; ++w) {
      if (w == z || g.adjacent(w, z) || c.contains(w, z)) continue;
      if (lo < r(w) && r(w) < hi) report("(1)", z, w);
      const int wlo = min_rank(g.neighbors(w));
      const int whi = max_rank(g.neighbors(w));
      if ((lo < r(w) && wlo < r(z)) || (hi > r(w) && whi > r(z))) report("(4)", z, w);
      bool u_side = false;
      bool v_side = false;
      for (const Edge& e : g.edges()) {
        for (const auto& [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
          if (r(a) < r(w) && r(z) < r(b)) u_side = true;
          if (r(a) < r(z) && r(w) < r(b)) v_side = true;
        }
      }
      if (u_side && v_side) report("(5)", z, w);
    }
  }

  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      (g.neighbors(v) - g.neighbors(u)).for_each([&](Vertex w) {
        if (w == u || c.contains(w, u)) return;
        if (r(u) < r(v) && !(r(u) < r(w))) report("(2)", u, w);
        if (r(v) < r(u) && !(r(w) < r(u))) report("(2)", u, w);
      });
    }
  }

  const int ylo = min_rank(p.y);
  const int yhi = max_rank(p.y);
  p.x.for_each([&](Vertex x) {
    if (!(ylo < r(x) && r(x) < yhi)) return;
    (p.y - g.neighbors(x)).for_each([&](Vertex y) {
      if (!c.contains(x, y)) report("(3)", x, y);
    });
  });
  const int slo = min_rank(p.shared);
  const int shi = max_rank(p.shared);
  p.y.for_each([&](Vertex y) {
    if (!(slo < r(y) && r(y) < shi)) return;
    (p.shared - g.neighbors(y)).for_each([&](Vertex x) {
      if (!c.contains(x, y)) report("(3)", x, y);
    });
  });
  return out;
}

}  // namespace sqgeo::testing
