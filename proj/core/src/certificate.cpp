#include "sqgeo/certificate.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <string>

#include "sqgeo/error.hpp"

namespace sqgeo {
namespace {

std::string join_order(const LinearOrder& o) {
  std::string s;
  for (Vertex v : o.sequence()) s += " " + std::to_string(v);
  return s;
}

void append_edges(std::string& out, const char* key, const std::vector<Edge>& edges) {
  out += std::string(key) + " " + std::to_string(edges.size()) + "\n";
  for (const Edge& e : edges) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
}

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t read = 0;
  std::size_t line = 0;  // line of the last non-blank line returned

  bool next(std::string_view& out) {
    while (pos < text.size()) {
      const std::size_t end = std::min(text.find('\n', pos), text.size());
      out = text.substr(pos, end - pos);
      if (!out.empty() && out.back() == '\r') out.remove_suffix(1);
      pos = end + 1;
      ++read;
      if (!out.empty()) {
        line = read;
        return true;
      }
    }
    return false;
  }

  std::string_view require(const char* what) {
    std::string_view s;
    if (!next(s)) throw ParseError(line, std::string("unexpected end of input, expecting ") + what);
    return s;
  }
};

std::pair<std::string_view, std::string_view> split_key(std::string_view s) {
  const auto sp = s.find(' ');
  if (sp == std::string_view::npos) return {s, {}};
  return {s.substr(0, sp), s.substr(sp + 1)};
}

int parse_int(const Cursor& c, std::string_view t) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || v < 0) {
    throw ParseError(c.line, "expected a non-negative integer, got '" + std::string(t) + "'");
  }
  return v;
}

std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && s[i] == ' ') ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

LinearOrder parse_order(const Cursor& c, std::string_view rest) {
  std::vector<Vertex> seq;
  for (auto w : words(rest)) seq.push_back(parse_int(c, w));
  try {
    return LinearOrder(std::move(seq));
  } catch (const InputError& e) {
    throw ParseError(c.line, e.what());
  }
}

std::vector<Edge> parse_edges(Cursor& c, std::string_view rest) {
  const int k = parse_int(c, rest);
  std::vector<Edge> out;
  for (int i = 0; i < k; ++i) {
    const auto w = words(c.require("a vertex pair"));
    if (w.size() != 2) throw ParseError(c.line, "expected two vertices");
    out.emplace_back(parse_int(c, w[0]), parse_int(c, w[1]));
  }
  return out;
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "YES";
    case Verdict::No: return "NO";
    case Verdict::Undecided: return "UNDECIDED";
  }
  return "?";
}

bool Certificate::operator==(const Certificate& o) const {
  const bool same_embedding =
      embedding.has_value() == o.embedding.has_value() &&
      (!embedding || embedding->coords == o.embedding->coords);
  return verdict == o.verdict && source == o.source && condition == o.condition &&
         witness == o.witness && order1 == o.order1 && order2 == o.order2 &&
         completion1 == o.completion1 && completion2 == o.completion2 && same_embedding;
}

std::string emit_certificate(const Certificate& c) {
  std::string out = "sqgeo-certificate 1\n";
  out += std::string("verdict ") + to_string(c.verdict) + "\n";
  out += "source " + c.source + "\n";
  if (!c.condition.empty()) out += "condition " + c.condition + "\n";
  for (const auto& w : c.witness) out += "witness " + w + "\n";
  if (c.order1) out += "order1" + join_order(*c.order1) + "\n";
  if (c.order2) out += "order2" + join_order(*c.order2) + "\n";
  if (c.order1 || c.order2) {
    append_edges(out, "completion1", c.completion1);
    append_edges(out, "completion2", c.completion2);
  }
  if (c.embedding) {
    out += "coordinates " + std::to_string(c.embedding->coords.size()) + "\n";
    for (std::size_t v = 0; v < c.embedding->coords.size(); ++v) {
      const Point& p = c.embedding->coords[v];
      out += std::to_string(v) + " " + to_fraction_string(p.x) + " " + to_fraction_string(p.y) + "\n";
    }
  }
  out += "end\n";
  return out;
}

Certificate parse_certificate(std::string_view text) {
  Cursor cur{text};
  if (cur.require("header") != "sqgeo-certificate 1") {
    throw ParseError(cur.line, "expected header 'sqgeo-certificate 1'");
  }
  Certificate c;
  bool have_verdict = false;
  for (;;) {
    const auto [key, rest] = split_key(cur.require("'end'"));
    if (key == "end") break;
    if (key == "verdict") {
      if (rest == "YES") c.verdict = Verdict::Yes;
      else if (rest == "NO") c.verdict = Verdict::No;
      else if (rest == "UNDECIDED") c.verdict = Verdict::Undecided;
      else throw ParseError(cur.line, "unknown verdict '" + std::string(rest) + "'");
      have_verdict = true;
    } else if (key == "source") {
      c.source = rest;
    } else if (key == "condition") {
      c.condition = rest;
    } else if (key == "witness") {
      c.witness.emplace_back(rest);
    } else if (key == "order1") {
      c.order1 = parse_order(cur, rest);
    } else if (key == "order2") {
      c.order2 = parse_order(cur, rest);
    } else if (key == "completion1") {
      c.completion1 = parse_edges(cur, rest);
    } else if (key == "completion2") {
      c.completion2 = parse_edges(cur, rest);
    } else if (key == "coordinates") {
      const int k = parse_int(cur, rest);
      Embedding e;
      e.coords.resize(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) {
        const auto w = words(cur.require("a coordinate line"));
        if (w.size() != 3) throw ParseError(cur.line, "expected '<vertex> <x> <y>'");
        const int v = parse_int(cur, w[0]);
        if (v != i) throw ParseError(cur.line, "coordinates out of vertex order");
        try {
          e.coords[v] = {parse_fraction(w[1]), parse_fraction(w[2])};
        } catch (const InputError& err) {
          throw ParseError(cur.line, err.what());
        }
      }
      c.embedding = std::move(e);
    } else {
      throw ParseError(cur.line, "unknown key '" + std::string(key) + "'");
    }
  }
  if (!have_verdict) throw ParseError(cur.line, "certificate has no verdict");
  std::string_view extra;
  if (cur.next(extra)) throw ParseError(cur.line, "content after 'end'");
  return c;
}

std::string certificate_to_json(const Certificate& c) {
  nlohmann::ordered_json j;
  j["verdict"] = to_string(c.verdict);
  j["source"] = c.source;
  if (!c.condition.empty()) j["condition"] = c.condition;
  j["witness"] = c.witness;
  auto edges = [](const std::vector<Edge>& es) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const Edge& e : es) a.push_back({e.u, e.v});
    return a;
  };
  if (c.order1) j["order1"] = c.order1->sequence();
  if (c.order2) j["order2"] = c.order2->sequence();
  if (c.order1 || c.order2) {
    j["completion1"] = edges(c.completion1);
    j["completion2"] = edges(c.completion2);
  }
  if (c.embedding) {
    nlohmann::ordered_json pts = nlohmann::ordered_json::array();
    for (const Point& p : c.embedding->coords) {
      pts.push_back({to_fraction_string(p.x), to_fraction_string(p.y)});
    }
    j["coordinates"] = pts;
  }
  return j.dump(2) + "\n";
}

CertificateCheck reverify_certificate(const Graph& g, const Certificate& c) {
  if (c.verdict != Verdict::Yes) return {};
  if (!c.order1 || !c.order2 || !c.embedding) {
    return {false, "YES certificate lacks orders or coordinates"};
  }
  const int n = g.order();
  if (c.order1->size() != n || c.order2->size() != n ||
      static_cast<int>(c.embedding->coords.size()) != n) {
    return {false, "certificate size does not match the graph"};
  }
  const Completion c1 = completion(g, *c.order1);
  const Completion c2 = completion(g, *c.order2);
  if (Completion(n, c.completion1) != c1) return {false, "completion1 does not match order1"};
  if (Completion(n, c.completion2) != c2) return {false, "completion2 does not match order2"};
  for (const Edge& e : c1.non_edges()) {
    if (c2.contains(e)) {
      return {false, "completions share " + std::to_string(e.u) + "-" + std::to_string(e.v)};
    }
  }
  const auto check = verify_embedding(g, *c.embedding);
  if (!check.ok) {
    return {false, "coordinates misplace " + std::to_string(check.violating->u) + "-" +
                       std::to_string(check.violating->v)};
  }
  return {};
}

}  // namespace sqgeo
