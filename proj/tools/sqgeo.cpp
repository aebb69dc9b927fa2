#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>

#include "sqgeo/certificate.hpp"
#include "sqgeo/chord_graph.hpp"
#include "sqgeo/error.hpp"
#include "sqgeo/generate.hpp"
#include "sqgeo/instance.hpp"
#include "sqgeo/necessary.hpp"
#include "sqgeo/oracle.hpp"
#include "sqgeo/recognize.hpp"
#include "sqgeo/verify.hpp"

namespace {

using namespace sqgeo;
using nlohmann::ordered_json;

enum Exit { kYes = 0, kNo = 1, kOther = 2 };

enum class Format { Text, Structured };

std::string slurp(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Instance load(const std::string& path) {
  try {
    return parse_instance(slurp(path));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::Yes: return kYes;
    case Verdict::No: return kNo;
    case Verdict::Undecided: return kOther;
  }
  return kOther;
}

std::string members(const VertexSet& s) {
  std::string out;
  s.for_each([&](Vertex v) { out += (out.empty() ? "" : " ") + std::to_string(v); });
  return out;
}

std::string node_text(const ChordNode& c) {
  return std::to_string(c.x) + "-" + std::to_string(c.y);
}

void print_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_validate(const std::string& path, Format fmt) {
  const Instance inst = load(path);
  const BabPartition& p = inst.partition;
  if (fmt == Format::Structured) {
    print_json({{"valid", true},
                {"vertices", inst.graph.order()},
                {"edges", inst.graph.edge_count()},
                {"a_only", p.a_only.members()},
                {"shared", p.shared.members()},
                {"b_only", p.b_only.members()},
                {"y", p.y.members()},
                {"a_nested", p.a_nested},
                {"b_nested", p.b_nested}});
    return kYes;
  }
  std::cout << "valid: " << inst.graph.order() << " vertices, " << inst.graph.edge_count()
            << " edges\n"
            << "a-side: " << members(p.a_only) << "\n"
            << "shared: " << members(p.shared) << "\n"
            << "b-side: " << members(p.b_only) << "\n"
            << "y: " << members(p.y) << "\n"
            << "a-side nested: " << (p.a_nested ? "yes" : "no") << "\n"
            << "b-side nested: " << (p.b_nested ? "yes" : "no") << "\n";
  return kYes;
}

int cmd_chord_graph(const std::string& path, Format fmt) {
  const Instance inst = load(path);
  const ChordGraph cg = build_chord_graph(inst.graph, inst.partition);
  const NonEdgeClasses cls = classify_nonedges(inst.graph, inst.partition, cg);
  const AbVertexSets ab = compute_ab_sets(cg, inst.partition);
  const AssumptionReport audit = audit_assumption1(inst.graph, inst.partition, cg);

  if (fmt == Format::Structured) {
    auto nodes = ordered_json::array();
    for (const ChordNode& c : cg.nodes()) nodes.push_back({c.x, c.y});
    auto links = ordered_json::array();
    for (const auto& l : cg.links()) {
      const RigidPair rp = cg.witness(l);
      links.push_back({{"chords", {l.a, l.b}}, {"rigid_pair", {rp.x1, rp.y1, rp.x2, rp.y2}}});
    }
    auto ab_pairs = ordered_json::array();
    for (const Edge& e : cls.ab_pairs) ab_pairs.push_back({e.u, e.v});
    print_json({{"nodes", nodes},
                {"links", links},
                {"isolated", cls.isolated.size()},
                {"ab_non_edges", ab_pairs},
                {"script_a", ab.script_a},
                {"script_b", ab.script_b},
                {"assumption", {{"compliant", audit.compliant},
                                {"components", audit.chord_components},
                                {"failures", audit.failures()}}}});
    return kYes;
  }
  std::cout << "nodes " << cg.node_count() << "\n";
  for (std::size_t i = 0; i < cg.node_count(); ++i) {
    std::cout << "  " << i << " " << node_text(cg.node(static_cast<int>(i)))
              << (cg.isolated(static_cast<int>(i)) ? " isolated" : "") << "\n";
  }
  std::cout << "links " << cg.edge_count() << "\n";
  for (const auto& l : cg.links()) {
    const RigidPair rp = cg.witness(l);
    std::cout << "  " << l.a << " " << l.b << "  rigid pair " << rp.x1 << "~" << rp.y1 << " "
              << rp.x2 << "~" << rp.y2 << "\n";
  }
  std::cout << "a-b non-edges " << cls.ab_pairs.size() << "\n";
  auto ids = [](const std::vector<ChordGraph::NodeId>& v) {
    std::string s;
    for (auto id : v) s += " " + std::to_string(id);
    return s;
  };
  std::cout << "script-a" << ids(ab.script_a) << "\n"
            << "script-b" << ids(ab.script_b) << "\n"
            << "assumption " << (audit.compliant ? "compliant" : "not compliant") << "\n";
  for (const auto& f : audit.failures()) std::cout << "  fails: " << f << "\n";
  return kYes;
}

int cmd_necessary(const std::string& path, Format fmt) {
  const Instance inst = load(path);
  const NecessaryVerdict v = check_necessary(inst.graph, inst.partition);
  const int code = v.outcome == NecessaryVerdict::Outcome::Pass   ? kYes
                   : v.outcome == NecessaryVerdict::Outcome::Fail ? kNo
                                                                  : kOther;
  if (fmt == Format::Structured) {
    ordered_json j{{"outcome", to_string(v.outcome)}, {"reason", v.reason}};
    if (v.rigid_free) {
      const RigidFreeReport& r = *v.rigid_free;
      j["rigid_free"] = {{"r_xa", r.r_xa.members()},    {"r_xb", r.r_xb.members()},
                         {"side_a_ok", r.side_a_ok},     {"side_b_ok", r.side_b_ok},
                         {"direct_a_ok", r.direct_a_ok}, {"direct_b_ok", r.direct_b_ok}};
    }
    if (v.coloring_refutation) {
      j["refutation"] = {{"kind", to_string(v.coloring_refutation->kind)},
                         {"nodes", v.coloring_refutation->nodes}};
    }
    print_json(j);
    return code;
  }
  std::cout << to_string(v.outcome);
  if (!v.reason.empty()) std::cout << ": " << v.reason;
  std::cout << "\n";
  if (v.rigid_free) {
    const RigidFreeReport& r = *v.rigid_free;
    std::cout << "R(X_a): " << members(r.r_xa) << "\nR(X_b): " << members(r.r_xb) << "\n"
              << "cardinality test a/b: " << r.side_a_ok << "/" << r.side_b_ok << "\n"
              << "rigid-free a/b: " << r.direct_a_ok << "/" << r.direct_b_ok << "\n";
  }
  return code;
}

void print_certificate(const Certificate& c, Format fmt) {
  std::cout << (fmt == Format::Structured ? certificate_to_json(c) : emit_certificate(c));
}

int cmd_recognize(const std::string& path, const RecognizeOptions& opts, Format fmt) {
  const Instance inst = load(path);
  const Certificate c = recognize(inst.graph, inst.partition, opts);
  print_certificate(c, fmt);
  return exit_for(c.verdict);
}

int cmd_embed(const std::string& path, const RecognizeOptions& opts, Format fmt) {
  const Instance inst = load(path);
  const Certificate c = recognize(inst.graph, inst.partition, opts);
  if (c.verdict != Verdict::Yes) {
    std::cerr << "no embedding: " << to_string(c.verdict);
    if (!c.condition.empty()) std::cerr << " (" << c.condition << ")";
    std::cerr << "\n";
    return exit_for(c.verdict);
  }
  const auto& pts = c.embedding->coords;
  if (fmt == Format::Structured) {
    auto arr = ordered_json::array();
    for (const Point& p : pts) arr.push_back({to_fraction_string(p.x), to_fraction_string(p.y)});
    print_json({{"source", c.source}, {"coordinates", arr}});
    return kYes;
  }
  for (std::size_t v = 0; v < pts.size(); ++v) {
    std::cout << v << " " << to_fraction_string(pts[v].x) << " " << to_fraction_string(pts[v].y)
              << "\n";
  }
  return kYes;
}

int cmd_verify(const std::string& inst_path, const std::string& cert_path, Format fmt) {
  const Instance inst = load(inst_path);
  Certificate c;
  try {
    c = parse_certificate(slurp(cert_path));
  } catch (const ParseError& e) {
    throw InputError(cert_path + ": " + e.what());
  }
  const CertificateCheck check = reverify_certificate(inst.graph, c);
  if (fmt == Format::Structured) {
    print_json({{"verdict", to_string(c.verdict)}, {"ok", check.ok}, {"message", check.message}});
  } else {
    std::cout << (check.ok ? "certificate ok" : "certificate rejected");
    if (!check.message.empty()) std::cout << ": " << check.message;
    std::cout << "\n";
  }
  if (!check.ok) return kNo;
  return c.verdict == Verdict::Undecided ? kOther : kYes;
}

int cmd_oracle(const std::string& path, int bound, Format fmt) {
  const Instance inst = load(path);
  const auto found = brute_force_orders(inst.graph, bound);
  if (found) {
    print_certificate(certify_orders(inst.graph, found->first, found->second, "oracle"), fmt);
    return kYes;
  }
  Certificate c;
  c.verdict = Verdict::No;
  c.source = "oracle";
  c.condition = "exhaustive-search";
  print_certificate(c, fmt);
  return kNo;
}

int cmd_gen(const GenerateParams& params, const std::string& out) {
  const std::string text = emit_instance(generate_bab(params));
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw InputError("cannot write " + out);
    f << text;
  }
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Recognize square geometric B_{a,b} graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  Format fmt = Format::Text;
  const std::map<std::string, Format> formats{{"text", Format::Text},
                                              {"structured", Format::Structured}};
  app.add_option("--format", fmt, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->capture_default_str();

  RecognizeOptions ropts;
  std::string path;
  std::string cert_path;
  std::string out;
  GenerateParams gparams;

  auto instance_arg = [&](CLI::App* sub) {
    sub->add_option("instance", path, "Instance file ('-' for stdin)")->required();
  };
  auto oracle_flags = [&](CLI::App* sub, bool optional_oracle) {
    if (optional_oracle) {
      sub->add_flag("--oracle", ropts.allow_oracle,
                    "Let exhaustive search decide when the theory cannot");
    }
    sub->add_option("--oracle-bound", ropts.oracle_bound, "Largest vertex count for the search")
        ->check(CLI::Range(0, kMaxOracleBound))
        ->capture_default_str();
  };

  auto* validate = app.add_subcommand("validate", "Parse an instance and check its partition");
  instance_arg(validate);
  auto* chord = app.add_subcommand("chord-graph", "Print the chord graph and assumption audit");
  instance_arg(chord);
  auto* necessary = app.add_subcommand("necessary", "Check the necessary conditions");
  instance_arg(necessary);
  auto* recognize_cmd = app.add_subcommand("recognize", "Decide and emit a certificate");
  instance_arg(recognize_cmd);
  oracle_flags(recognize_cmd, true);
  auto* embed_cmd = app.add_subcommand("embed", "Emit exact coordinates for a YES instance");
  instance_arg(embed_cmd);
  oracle_flags(embed_cmd, true);
  auto* verify = app.add_subcommand("verify", "Re-verify a certificate against its instance");
  instance_arg(verify);
  verify->add_option("certificate", cert_path, "Certificate file")->required();
  auto* oracle = app.add_subcommand("oracle", "Exhaustive search over order pairs");
  instance_arg(oracle);
  oracle_flags(oracle, false);

  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--a-only", gparams.a_only, "|X_a \\ X_b|")->capture_default_str();
  gen->add_option("--shared", gparams.shared, "|X_a ∩ X_b|")->capture_default_str();
  gen->add_option("--b-only", gparams.b_only, "|X_b \\ X_a|")->capture_default_str();
  gen->add_option("--y", gparams.y, "|Y|")->capture_default_str();
  gen->add_option("--density", gparams.density, "X-Y edge probability")->capture_default_str();
  gen->add_option("--seed", gparams.seed, "Random seed")->capture_default_str();
  const std::map<std::string, GenerateFilter> filters{{"none", GenerateFilter::None},
                                                      {"assumption1", GenerateFilter::Assumption1},
                                                      {"sufficient", GenerateFilter::Sufficient}};
  gen->add_option("--filter", gparams.filter, "Keep only instances passing this check")
      ->transform(CLI::CheckedTransformer(filters, CLI::ignore_case));
  gen->add_option("--max-attempts", gparams.max_attempts, "Rejection sampling cap")
      ->capture_default_str();
  gen->add_option("-o,--output", out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kOther;
  }

  try {
    if (*validate) return cmd_validate(path, fmt);
    if (*chord) return cmd_chord_graph(path, fmt);
    if (*necessary) return cmd_necessary(path, fmt);
    if (*recognize_cmd) return cmd_recognize(path, ropts, fmt);
    if (*embed_cmd) return cmd_embed(path, ropts, fmt);
    if (*verify) return cmd_verify(path, cert_path, fmt);
    if (*oracle) return cmd_oracle(path, ropts.oracle_bound, fmt);
    if (*gen) return cmd_gen(gparams, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kOther;
}
