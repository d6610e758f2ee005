#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "planar5/embedded_graph.hpp"

namespace planar5 {

/// Vertex colors in 1..5, 0 for uncolored, with per-class counts.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(std::size_t n) : color_(n, 0) { sizes_[0] = n; }

  std::size_t vertex_count() const { return color_.size(); }
  int operator[](Vertex v) const { return color_[static_cast<std::size_t>(v)]; }
  bool colored(Vertex v) const { return color_[static_cast<std::size_t>(v)] != 0; }

  void set(Vertex v, int c) {
    auto& slot = color_[static_cast<std::size_t>(v)];
    --sizes_[slot];
    slot = static_cast<std::uint8_t>(c);
    ++sizes_[slot];
  }
  void clear(Vertex v) { set(v, 0); }

  /// Number of vertices with color c (c = 0 counts uncolored ids).
  std::size_t class_size(int c) const { return sizes_[static_cast<std::size_t>(c)]; }
  std::size_t colored_count() const { return color_.size() - sizes_[0]; }

  const std::vector<std::uint8_t>& colors() const { return color_; }
  bool operator==(const Coloring& o) const { return color_ == o.color_; }

 private:
  std::vector<std::uint8_t> color_;
  std::array<std::size_t, 6> sizes_{};
};

}  // namespace planar5
