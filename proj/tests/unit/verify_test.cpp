#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sqgeo/error.hpp"
#include "sqgeo/necessary.hpp"
#include "sqgeo/oracle.hpp"
#include "sqgeo/sufficient.hpp"
#include "sqgeo/verify.hpp"

using namespace sqgeo;
using namespace sqgeo::testing;

namespace {

const LinearOrder kG8Order1({kA, kX1, kX2, kY1, kB, kY2, kY3, kY4});
const LinearOrder kG8Order2({kB, kX2, kA, kX1, kY3, kY4, kY2, kY1});

std::optional<std::pair<LinearOrder, LinearOrder>> constructed(const Instance& inst) {
  const ChordGraph cg = build_chord_graph(inst.graph, inst.partition);
  auto v = check_sufficient(inst.graph, inst.partition, cg, compute_ab_sets(cg, inst.partition));
  return v.orders;
}

}  // namespace

TEST(Completion, FourCycle) {
  const Graph& g = c4().graph;
  EXPECT_EQ(completion(g, LinearOrder({0, 1, 2, 3})).non_edges(), std::vector<Edge>{Edge(1, 2)});
  EXPECT_EQ(completion(g, LinearOrder({1, 0, 3, 2})).non_edges(), std::vector<Edge>{Edge(0, 3)});
}

TEST(Completion, G8) {
  const Graph& g = g8().graph;
  EXPECT_EQ(completion(g, kG8Order1).non_edges(),
            (std::vector<Edge>{{kX2, kY1}, {kB, kY1}, {kB, kY2}}));
  EXPECT_EQ(completion(g, kG8Order2).non_edges(),
            (std::vector<Edge>{{kA, kB}, {kA, kY2}, {kA, kY3}, {kA, kY4}, {kX1, kY3}, {kX1, kY4}}));
}

TEST(Completion, CoveringEdge) {
  const Graph& g = c4().graph;
  const LinearOrder o({0, 1, 2, 3});
  // 1 and 2 both lie inside the span of edge 0-2.
  const auto w = covering_edge(g, o, Edge(1, 2));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, Edge(0, 2));
  EXPECT_FALSE(covering_edge(g, o, Edge(0, 3)).has_value());
}

TEST(Completion, ClosureIsUnitInterval) {
  for (const Instance& inst : random_instances(9, 40, 11)) {
    std::vector<Vertex> seq(static_cast<std::size_t>(inst.graph.order()));
    std::iota(seq.begin(), seq.end(), 0);
    const LinearOrder o(seq);
    const Graph h = closure_graph(inst.graph, o);
    EXPECT_TRUE(is_unit_interval_order(h, o));
    EXPECT_EQ(h.edge_count(), inst.graph.edge_count() + completion(inst.graph, o).size());
  }
}

TEST(VerifyOrders, Examples) {
  EXPECT_TRUE(verify_orders(c4().graph, LinearOrder({0, 1, 2, 3}), LinearOrder({1, 0, 3, 2})).ok);
  EXPECT_TRUE(verify_orders(g8().graph, kG8Order1, kG8Order2).ok);
  const auto bad = verify_orders(c4().graph, LinearOrder({0, 1, 2, 3}), LinearOrder({0, 1, 2, 3}));
  EXPECT_FALSE(bad.ok);
  EXPECT_EQ(bad.shared_non_edge, Edge(1, 2));
  EXPECT_TRUE(bad.witness1.has_value() && bad.witness2.has_value());
}

TEST(ChordDistribution, G8OneChordPerCompletion) {
  const Instance inst = g8();
  const auto splits =
      chord_distribution(inst.graph, inst.partition, make_order_pair(inst.graph, kG8Order1, kG8Order2));
  EXPECT_EQ(splits.size(), 9u);
  for (const auto& s : splits) EXPECT_TRUE(s.one_each());
}

TEST(Realize, PathAndFailure) {
  const Graph path = build_graph(3, {{0, 1}, {1, 2}});
  const auto xs = realize_unit_interval(path, LinearOrder({0, 1, 2}));
  ASSERT_EQ(xs.size(), 3u);
  EXPECT_EQ(xs[0], 0);
  EXPECT_LE(xs[1] - xs[0], 1);
  EXPECT_GT(xs[2] - xs[0], 1);
  EXPECT_THROW(realize_unit_interval(path, LinearOrder({0, 2, 1})), StructuralError);
}

TEST(Realize, CliqueFitsOneUnit) {
  const Graph k4 = build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const auto xs = realize_unit_interval(k4, LinearOrder({2, 0, 3, 1}));
  for (Vertex u = 0; u < 4; ++u) {
    for (Vertex v = 0; v < 4; ++v) EXPECT_LE(xs[u] > xs[v] ? xs[u] - xs[v] : xs[v] - xs[u], 1);
  }
  EXPECT_EQ(xs[2], 0);
}

TEST(Realize, FourCycleClosure) {
  const Graph& g = c4().graph;
  const LinearOrder o({0, 1, 2, 3});
  const Graph h = closure_graph(g, o);
  EXPECT_TRUE(h.adjacent(1, 2));
  const auto xs = realize_unit_interval(h, o);
  for (Vertex u = 0; u < 4; ++u) {
    for (Vertex v = u + 1; v < 4; ++v) {
      const Rational d = xs[u] > xs[v] ? xs[u] - xs[v] : xs[v] - xs[u];
      EXPECT_EQ(d <= 1, h.adjacent(u, v));
    }
  }
}

TEST(Embed, FourCycleSeparatesChordsOnOneAxisEach) {
  const Graph& g = c4().graph;
  const Embedding e =
      embed(g, make_order_pair(g, LinearOrder({0, 1, 2, 3}), LinearOrder({1, 0, 3, 2})));
  auto far = [&](Vertex u, Vertex v, bool x_axis) {
    const Rational a = x_axis ? e.coords[u].x : e.coords[u].y;
    const Rational b = x_axis ? e.coords[v].x : e.coords[v].y;
    return (a > b ? a - b : b - a) > 1;
  };
  // (1,2) lies in the first completion, so only y separates it; (0,3) the reverse.
  EXPECT_FALSE(far(1, 2, true));
  EXPECT_TRUE(far(1, 2, false));
  EXPECT_TRUE(far(0, 3, true));
  EXPECT_FALSE(far(0, 3, false));
}

TEST(Embed, G8Exact) {
  const Instance inst = g8();
  const Embedding e = embed(inst.graph, make_order_pair(inst.graph, kG8Order1, kG8Order2));
  EXPECT_TRUE(verify_embedding(inst.graph, e).ok);
  const auto [o1, o2] = coordinate_orders(e);
  EXPECT_TRUE(verify_orders(inst.graph, o1, o2).ok);
}

TEST(Embed, RejectsIntersectingCompletions) {
  const Graph& g = c4().graph;
  EXPECT_THROW(embed(g, make_order_pair(g, LinearOrder({0, 1, 2, 3}), LinearOrder({0, 1, 2, 3}))),
               InputError);
}

TEST(VerifyEmbedding, DistanceExactlyOneIsAdjacent) {
  const Graph edge = build_graph(2, {{0, 1}});
  const Graph none = build_graph(2, std::initializer_list<Edge>{});
  const Embedding touching{{{Rational(0), Rational(0)}, {Rational(1), Rational(-1)}}};
  EXPECT_TRUE(verify_embedding(edge, touching).ok);
  EXPECT_FALSE(verify_embedding(none, touching).ok);
  const Embedding apart{{{Rational(0), Rational(0)}, {Rational(1) + Rational(1, 1000000), Rational(0)}}};
  EXPECT_FALSE(verify_embedding(edge, apart).ok);
  EXPECT_TRUE(verify_embedding(none, apart).ok);
  EXPECT_THROW(verify_embedding(edge, Embedding{{{Rational(0), Rational(0)}}}), InputError);
}

TEST(VerifyProperty, ConstructedOrdersEmbed) {
  for (int n : {6, 8, 10, 12}) {
    for (const Instance& inst : random_instances(n, 40, 400 + n, GenerateFilter::Sufficient)) {
      const auto orders = constructed(inst);
      ASSERT_TRUE(orders.has_value());
      const OrderPair pair = make_order_pair(inst.graph, orders->first, orders->second);
      ASSERT_TRUE(pair.valid());
      for (const auto& s : chord_distribution(inst.graph, inst.partition, pair)) {
        EXPECT_TRUE(s.one_each());
      }
      const Embedding e = embed(inst.graph, pair);
      EXPECT_TRUE(verify_embedding(inst.graph, e).ok);
      const auto [o1, o2] = coordinate_orders(e);
      EXPECT_TRUE(verify_orders(inst.graph, o1, o2).ok);
    }
  }
}

TEST(VerifyProperty, CompletionPropertiesHoldForAnyOrder) {
  std::mt19937_64 rng(5);
  for (const Instance& inst : random_instances(8, 60, 17)) {
    std::vector<Vertex> seq(static_cast<std::size_t>(inst.graph.order()));
    std::iota(seq.begin(), seq.end(), 0);
    std::shuffle(seq.begin(), seq.end(), rng);
    const LinearOrder o(seq);
    EXPECT_TRUE(
        completion_property_violations(inst.graph, inst.partition, o, completion(inst.graph, o))
            .empty());
  }
}

TEST(VerifyProperty, SupergraphOracleMatchesOrderSearch) {
  for (const Instance& inst : small_instances(5)) {
    EXPECT_EQ(square_by_supergraphs(inst.graph), brute_force_orders(inst.graph, 5).has_value());
  }
  for (const Instance& inst : random_instances(7, 150, 23)) {
    EXPECT_EQ(square_by_supergraphs(inst.graph), brute_force_orders(inst.graph, 7).has_value());
  }
}
