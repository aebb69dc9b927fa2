#include "sqgeo/recognize.hpp"

#include <string>

#include "sqgeo/error.hpp"
#include "sqgeo/sufficient.hpp"

namespace sqgeo {
namespace {

std::string node_text(const ChordNode& c) {
  return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
}

std::string violation_text(const char* side, const RigidFreeViolation& v) {
  const RigidPair& rp = v.pair;
  return std::string(side) + " vertex " + std::to_string(v.vertex) + " sees rigid pair " +
         std::to_string(rp.x1) + "~" + std::to_string(rp.y1) + " " + std::to_string(rp.x2) +
         "~" + std::to_string(rp.y2);
}

Certificate undecided(std::string condition, std::vector<std::string> witness) {
  Certificate c;
  c.verdict = Verdict::Undecided;
  c.source = "theory";
  c.condition = std::move(condition);
  c.witness = std::move(witness);
  return c;
}

Certificate decide_by_oracle(const Graph& g, const RecognizeOptions& options) {
  const auto found = brute_force_orders(g, options.oracle_bound);
  if (found) return certify_orders(g, found->first, found->second, "oracle");
  Certificate c;
  c.verdict = Verdict::No;
  c.source = "oracle";
  c.condition = "exhaustive-search";
  c.witness.push_back("no order pair on " + std::to_string(g.order()) +
                      " vertices has disjoint completions");
  return c;
}

}  // namespace

Certificate certify_orders(const Graph& g, const LinearOrder& o1, const LinearOrder& o2,
                           std::string source) {
  const OrderPair pair = make_order_pair(g, o1, o2);
  Certificate c;
  c.verdict = Verdict::Yes;
  c.source = std::move(source);
  c.order1 = pair.o1;
  c.order2 = pair.o2;
  c.completion1 = pair.c1.non_edges();
  c.completion2 = pair.c2.non_edges();
  c.embedding = embed(g, pair);
  return c;
}

Certificate recognize(const Graph& g, const BabPartition& p, const RecognizeOptions& options) {
  const bool oracle = options.allow_oracle && g.order() <= options.oracle_bound;
  const ChordGraph cg = build_chord_graph(g, p);

  const NecessaryVerdict nec = check_necessary(g, p, cg);
  if (nec.outcome == NecessaryVerdict::Outcome::OutOfScope) {
    if (oracle) return decide_by_oracle(g, options);
    return undecided("standing-assumption", nec.assumption.failures());
  }
  if (nec.outcome == NecessaryVerdict::Outcome::Fail) {
    Certificate c;
    c.verdict = Verdict::No;
    c.source = "theory";
    if (nec.coloring_refutation) {
      c.condition = "chord-coloring";
      std::string nodes = to_string(nec.coloring_refutation->kind);
      nodes += ":";
      for (auto id : nec.coloring_refutation->nodes) nodes += " " + node_text(cg.node(id));
      c.witness.push_back(nodes);
    } else {
      c.condition = "rigid-free";
      const RigidFreeReport& rf = *nec.rigid_free;
      if (rf.direct_a_violation) c.witness.push_back(violation_text("a-side", *rf.direct_a_violation));
      if (rf.direct_b_violation) c.witness.push_back(violation_text("b-side", *rf.direct_b_violation));
    }
    return c;
  }

  SufficiencyVerdict suf;
  try {
    suf = check_sufficient(g, p, cg, compute_ab_sets(cg, p));
  } catch (const ConstructionError& e) {
    if (oracle) return decide_by_oracle(g, options);
    return undecided("construction-conflict", {e.what()});
  }
  if (!suf.all()) {
    if (oracle) return decide_by_oracle(g, options);
    return undecided("sufficient-conditions", {suf.reason});
  }

  const auto& [o1, o2] = *suf.orders;
  const OrderCheck check = verify_orders(g, o1, o2);
  if (!check.ok) {
    const Edge& e = *check.shared_non_edge;
    throw InternalError("constructed orders share completion pair " + std::to_string(e.u) +
                        "-" + std::to_string(e.v));
  }
  return certify_orders(g, o1, o2, "theory");
}

}  // namespace sqgeo
