#include "fixtures.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace sqgeo::testing {

Instance c4() {
  const std::vector<Edge> edges{{0, 1}, {2, 3}, {0, 2}, {1, 3}};
  const std::vector<Vertex> x{0, 1};
  const std::vector<Vertex> y{2, 3};
  return make_instance(4, edges, x, x, y);
}

Instance g8_with(std::initializer_list<Edge> extra) {
  std::vector<Edge> edges{
      {kA, kX1},  {kA, kX2},  {kX1, kX2}, {kX1, kB},  {kX2, kB},
      {kY1, kY2}, {kY1, kY3}, {kY1, kY4}, {kY2, kY3}, {kY2, kY4}, {kY3, kY4},
      {kA, kY1},  {kX1, kY1}, {kX1, kY2}, {kX2, kY2}, {kX2, kY3}, {kX2, kY4},
      {kB, kY3},  {kB, kY4},
  };
  edges.insert(edges.end(), extra.begin(), extra.end());
  const std::vector<Vertex> x_a{kA, kX1, kX2};
  const std::vector<Vertex> x_b{kX1, kX2, kB};
  const std::vector<Vertex> y{kY1, kY2, kY3, kY4};
  return make_instance(8, edges, x_a, x_b, y);
}

Instance g8() { return g8_with({}); }

Instance complete_split() {
  const std::vector<Edge> edges{{0, 1}, {2, 3}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
  const std::vector<Vertex> x{0, 1};
  const std::vector<Vertex> y{2, 3};
  return make_instance(4, edges, x, x, y);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace sqgeo::testing
