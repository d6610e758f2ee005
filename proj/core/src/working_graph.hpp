#pragma once

// Mutable graph for the reducer's descent. Each level begins with a mark;
// mutations journal the first-touched state of every vertex, and rollback()
// restores the graph as it was at a mark.

#include <cstdint>
#include <span>
#include <vector>

#include "planar5/embedded_graph.hpp"
#include "rotation_table.hpp"

namespace planar5::detail {

class WorkingGraph {
 public:
  explicit WorkingGraph(const EmbeddedGraph& g);

  GraphView view() const { return table_.view(); }
  std::size_t live_count() const { return live_; }

  /// Starts a new level and returns its mark.
  std::size_t begin_level();
  void rollback(std::size_t mark);

  /// Triangulates every face of length >= 4.
  void triangulate_all(std::vector<Edge>* added = nullptr);
  /// Deletes the vertices and triangulates the faces left around them.
  void remove_and_fill(std::span<const Vertex> removed);

  /// Vertices journaled since the mark, in first-touch order.
  std::vector<Vertex> touched_since(std::size_t mark) const;

 private:
  struct Saved {
    Vertex v;
    std::vector<Vertex> rotation;
    std::uint8_t alive;
  };
  void save(Vertex v);

  RotationTable table_;
  std::vector<Saved> journal_;
  std::vector<std::uint64_t> saved_in_;
  std::uint64_t epoch_ = 1;
  std::size_t live_ = 0;
};

}  // namespace planar5::detail
