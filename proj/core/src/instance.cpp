#include "sqgeo/instance.hpp"

#include <charconv>
#include <limits>
#include <string>
#include <vector>

#include "sqgeo/error.hpp"

namespace sqgeo {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

class Reader {
 public:
  explicit Reader(std::string_view text) {
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t end = std::min(text.find('\n', start), text.size());
      ++number;
      const auto tokens = split_ws(text.substr(start, end - start));
      if (!tokens.empty()) last_ = number;
      if (!tokens.empty() && tokens.front().front() != '#') lines_.push_back({number, tokens});
      if (end == text.size()) break;
      start = end + 1;
    }
  }

  const Line& next(const char* expecting) {
    if (pos_ >= lines_.size()) {
      throw ParseError(last_, std::string("unexpected end of input, expecting ") + expecting);
    }
    return lines_[pos_++];
  }

  bool done() const { return pos_ >= lines_.size(); }
  const Line& peek() const { return lines_[pos_]; }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  std::size_t last_ = 0;
};

int to_int(const Line& line, std::string_view token) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value < 0) {
    throw ParseError(line.number, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

const Line& keyed(Reader& r, std::string_view key, std::size_t min_args, std::size_t max_args) {
  const Line& line = r.next(std::string(key).c_str());
  if (line.tokens.front() != key) {
    throw ParseError(line.number, "expected '" + std::string(key) + "', got '" +
                                      std::string(line.tokens.front()) + "'");
  }
  const std::size_t args = line.tokens.size() - 1;
  if (args < min_args || args > max_args) {
    throw ParseError(line.number, "wrong number of values after '" + std::string(key) + "'");
  }
  return line;
}

std::vector<Vertex> id_list(const Line& line, int n) {
  std::vector<Vertex> out;
  for (std::size_t i = 1; i < line.tokens.size(); ++i) {
    const int v = to_int(line, line.tokens[i]);
    if (v >= n) throw ParseError(line.number, "vertex " + std::to_string(v) + " out of range");
    out.push_back(v);
  }
  return out;
}

constexpr std::size_t kAny = std::numeric_limits<std::size_t>::max();

void append_set(std::string& out, const char* key, const VertexSet& s) {
  out += key;
  s.for_each([&](Vertex v) { out += " " + std::to_string(v); });
  out += "\n";
}

}  // namespace

Instance make_instance(int n, std::span<const Edge> edges, std::span<const Vertex> x_a,
                       std::span<const Vertex> x_b, std::span<const Vertex> y) {
  Instance inst;
  inst.graph = build_graph(n, edges);
  inst.partition =
      validate_bab(inst.graph, VertexSet(n, x_a), VertexSet(n, x_b), VertexSet(n, y));
  return inst;
}

Instance parse_instance(std::string_view text) {
  Reader r(text);
  const Line& head = r.next("header");
  if (head.tokens.size() != 2 || head.tokens[0] != "sqgeo-instance" || head.tokens[1] != "1") {
    throw ParseError(head.number, "expected header 'sqgeo-instance 1'");
  }
  const Line& vl = keyed(r, "vertices", 1, 1);
  const int n = to_int(vl, vl.tokens[1]);
  const auto x_a = id_list(keyed(r, "xa", 0, kAny), n);
  const auto x_b = id_list(keyed(r, "xb", 0, kAny), n);
  const auto y = id_list(keyed(r, "y", 0, kAny), n);
  const Line& el = keyed(r, "edges", 1, 1);
  const int m = to_int(el, el.tokens[1]);

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const Line& line = r.next("an edge line");
    if (line.tokens.size() != 2) throw ParseError(line.number, "edge line needs two vertices");
    const int u = to_int(line, line.tokens[0]);
    const int v = to_int(line, line.tokens[1]);
    if (u >= n || v >= n) throw ParseError(line.number, "edge endpoint out of range");
    if (u == v) throw ParseError(line.number, "self-loop");
    edges.emplace_back(u, v);
  }
  if (!r.done()) throw ParseError(r.peek().number, "trailing content after the edge list");
  return make_instance(n, edges, x_a, x_b, y);
}

std::string emit_instance(const Instance& inst) {
  const auto edges = inst.graph.edges();
  std::string out = "sqgeo-instance 1\nvertices " + std::to_string(inst.graph.order()) + "\n";
  append_set(out, "xa", inst.partition.x_a);
  append_set(out, "xb", inst.partition.x_b);
  append_set(out, "y", inst.partition.y);
  out += "edges " + std::to_string(edges.size()) + "\n";
  for (const Edge& e : edges) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

}  // namespace sqgeo
