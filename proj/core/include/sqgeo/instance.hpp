#pragma once

#include <string>
#include <string_view>

#include "sqgeo/partition.hpp"

namespace sqgeo {

/// A graph together with its validated clique structure.
struct Instance {
  Graph graph;
  BabPartition partition;
};

Instance make_instance(int n, std::span<const Edge> edges, std::span<const Vertex> x_a,
                       std::span<const Vertex> x_b, std::span<const Vertex> y);

/// Line-oriented instance text:
///
///   sqgeo-instance 1
///   vertices <n>
///   xa <ids...>
///   xb <ids...>
///   y <ids...>
///   edges <m>
///   <u> <v>          (m lines)
///
/// Blank lines and lines starting with '#' are skipped. Throws ParseError
/// (with a 1-based line number) on malformed text, and the validate_bab
/// errors if the sets are not a valid clique structure.
Instance parse_instance(std::string_view text);

/// Canonical text: sorted sets, edges ascending with u < v.
std::string emit_instance(const Instance& inst);

}  // namespace sqgeo
