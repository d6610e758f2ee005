#pragma once

// Mutable rotation storage shared by triangulate() and the reducer's working
// graph. Every mutation of a vertex's rotation or liveness is announced
// through `before_change` first so callers can journal the old state.

#include <functional>
#include <span>
#include <vector>

#include "planar5/embedded_graph.hpp"

namespace planar5::detail {

class RotationTable {
 public:
  std::vector<std::vector<Vertex>> rot;
  std::vector<std::uint8_t> alive;
  std::function<void(Vertex)> before_change;

  GraphView view() const { return GraphView(rot, alive); }

  /// Removes v and every edge at v; neighbor rotations keep their order.
  void remove_vertex(Vertex v);

  /// Face to the left of the dart u->v.
  std::vector<Vertex> trace_face(Vertex u, Vertex v) const;

  /// Splits the given face walk into triangles. Appends inserted edges to
  /// `added` when non-null.
  void triangulate_walk(std::vector<Vertex> walk, std::vector<Edge>* added);

  /// Triangulates every face of length >= 4 that touches a seed vertex.
  void triangulate_around(std::span<const Vertex> seeds, std::vector<Edge>* added);

  /// Triangulates every face of length >= 4.
  void triangulate_all(std::vector<Edge>* added);

 private:
  void touch(Vertex v) {
    if (before_change) before_change(v);
  }
};

}  // namespace planar5::detail
