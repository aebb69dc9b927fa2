#pragma once

#include <string>

#include "sqgeo/instance.hpp"

namespace sqgeo::testing {

// Vertex ids of the eight-vertex reference graph.
enum G8Vertex : Vertex { kA = 0, kX1 = 1, kX2 = 2, kB = 3, kY1 = 4, kY2 = 5, kY3 = 6, kY4 = 7 };

// 4-cycle 0-2-3-1-0 with X_a = X_b = {0, 1}, Y = {2, 3}.
Instance c4();

// X_a = {a, x1, x2}, X_b = {x1, x2, b}, Y = {y1..y4};
// N_Y(a) = {y1}, N_Y(x1) = {y1, y2}, N_Y(x2) = {y2, y3, y4}, N_Y(b) = {y3, y4}.
Instance g8();

// g8() with extra X–Y edges.
Instance g8_with(std::initializer_list<Edge> extra);

// X = {0, 1} one clique joined to every vertex of Y = {2, 3}.
Instance complete_split();

std::string read_file(const std::string& path);

}  // namespace sqgeo::testing
