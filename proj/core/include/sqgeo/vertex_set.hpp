#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace sqgeo {

using Vertex = int;

/// Subset of the vertex range [0, n) of a fixed graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe) : bits_(static_cast<std::size_t>(universe)) {}
  VertexSet(int universe, std::span<const Vertex> members);
  VertexSet(int universe, std::initializer_list<Vertex> members)
      : VertexSet(universe, std::span<const Vertex>(members.begin(), members.size())) {}
  explicit VertexSet(boost::dynamic_bitset<> bits) : bits_(std::move(bits)) {}

  int universe() const { return static_cast<int>(bits_.size()); }
  bool contains(Vertex v) const {
    return v >= 0 && v < universe() && bits_.test(static_cast<std::size_t>(v));
  }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  void insert(Vertex v) { bits_.set(static_cast<std::size_t>(v)); }
  void erase(Vertex v) { bits_.reset(static_cast<std::size_t>(v)); }

  /// Members in ascending order.
  std::vector<Vertex> members() const;

  bool is_subset_of(const VertexSet& other) const { return bits_.is_subset_of(other.bits_); }
  bool intersects(const VertexSet& other) const { return bits_.intersects(other.bits_); }

  VertexSet operator&(const VertexSet& o) const { return VertexSet(bits_ & o.bits_); }
  VertexSet operator|(const VertexSet& o) const { return VertexSet(bits_ | o.bits_); }
  VertexSet operator-(const VertexSet& o) const { return VertexSet(bits_ - o.bits_); }
  VertexSet& operator&=(const VertexSet& o) { bits_ &= o.bits_; return *this; }
  VertexSet& operator|=(const VertexSet& o) { bits_ |= o.bits_; return *this; }

  bool operator==(const VertexSet& o) const { return bits_ == o.bits_; }

  const boost::dynamic_bitset<>& bits() const { return bits_; }

  template <typename F>
  void for_each(F&& f) const {
    for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos; i = bits_.find_next(i)) {
      f(static_cast<Vertex>(i));
    }
  }

 private:
  boost::dynamic_bitset<> bits_;
};

}  // namespace sqgeo
