#pragma once

// Simple planar graphs given by rotation systems.
//
// A rotation lists the neighbors of a vertex in counterclockwise order. The
// face to the left of the dart u->v continues with v->w where w is the
// neighbor immediately preceding u in the rotation of v.
//
// Vertex ids are stable: deleting vertices tombstones their ids instead of
// renumbering, so colorings and occurrences always refer to input ids.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace planar5 {

using Vertex = std::int32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  /// Normalized so that u < v.
  static Edge of(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  auto operator<=>(const Edge&) const = default;
};

/// Cyclic vertex sequence w0 w1 ... w(k-1) bounding one face; the darts are
/// w(i) -> w(i+1), indices mod k.
struct FaceWalk {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.size(); }
};

/// Non-owning read view over a rotation table. All graph algorithms in the
/// library take a view so they run unchanged on immutable graphs and on the
/// reducer's working copy.
class GraphView {
 public:
  GraphView() = default;
  GraphView(std::span<const std::vector<Vertex>> rotations, std::span<const std::uint8_t> alive)
      : rot_(rotations), alive_(alive) {}

  std::size_t vertex_count() const { return rot_.size(); }
  bool alive(Vertex v) const { return alive_[static_cast<std::size_t>(v)] != 0; }
  std::span<const Vertex> rotation(Vertex v) const { return rot_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(rot_[static_cast<std::size_t>(v)].size()); }

  /// Index of u in rotation(v), or -1.
  int position(Vertex v, Vertex u) const;
  bool adjacent(Vertex u, Vertex v) const;
  /// Neighbor of v at rotation index i, taken cyclically (i may be negative).
  Vertex at(Vertex v, int i) const;

  std::size_t live_vertex_count() const;
  std::size_t edge_count() const;

 private:
  std::span<const std::vector<Vertex>> rot_;
  std::span<const std::uint8_t> alive_;
};

/// All face walks of the embedding, each directed edge covered exactly once.
/// Faces are emitted in order of their lowest (vertex, rotation index) dart.
std::vector<FaceWalk> trace_faces(const GraphView& g);

/// Connected components of the live vertices, each sorted ascending.
std::vector<std::vector<Vertex>> connected_components(const GraphView& g);

class EmbeddedGraph {
 public:
  EmbeddedGraph() = default;

  /// Validates simplicity, symmetry, and (per component) n - m + F = 2.
  /// Throws Error with LoopEdge, DuplicateNeighbor, AsymmetricAdjacency,
  /// VertexOutOfRange, or NotPlanarEmbedding.
  static EmbeddedGraph build(std::vector<std::vector<Vertex>> rotations);

  /// As build(), with explicit tombstones for ids that are not part of the graph.
  static EmbeddedGraph build(std::vector<std::vector<Vertex>> rotations,
                             std::vector<std::uint8_t> alive);

  std::size_t vertex_count() const { return rot_.size(); }
  std::size_t live_vertex_count() const { return live_; }
  std::size_t edge_count() const { return edges_; }

  bool alive(Vertex v) const { return alive_[static_cast<std::size_t>(v)] != 0; }
  std::span<const Vertex> rotation(Vertex v) const { return rot_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(rot_[static_cast<std::size_t>(v)].size()); }
  bool adjacent(Vertex u, Vertex v) const { return view().adjacent(u, v); }

  GraphView view() const { return GraphView(rot_, alive_); }
  const std::vector<std::vector<Vertex>>& rotations() const { return rot_; }
  const std::vector<std::uint8_t>& alive_flags() const { return alive_; }

  /// Sorted list of undirected edges.
  std::vector<Edge> edges() const;

  bool operator==(const EmbeddedGraph& other) const {
    return rot_ == other.rot_ && alive_ == other.alive_;
  }

 private:
  std::vector<std::vector<Vertex>> rot_;
  std::vector<std::uint8_t> alive_;
  std::size_t live_ = 0;
  std::size_t edges_ = 0;
};

/// An embedded graph whose every face is a triangle.
class Triangulation {
 public:
  /// Wraps an already triangulated graph; throws InvalidArgument otherwise.
  static Triangulation from(EmbeddedGraph graph);

  const EmbeddedGraph& graph() const { return graph_; }
  GraphView view() const { return graph_.view(); }
  const std::vector<FaceWalk>& faces() const { return faces_; }
  /// Edges inserted by triangulate(); empty when wrapping via from().
  const std::vector<Edge>& added_edges() const { return added_; }

  int degree(Vertex v) const { return graph_.degree(v); }
  std::span<const Vertex> link_cycle(Vertex v) const { return graph_.rotation(v); }

 private:
  friend Triangulation triangulate(const EmbeddedGraph& g);
  Triangulation(EmbeddedGraph g, std::vector<FaceWalk> faces, std::vector<Edge> added)
      : graph_(std::move(g)), faces_(std::move(faces)), added_(std::move(added)) {}

  EmbeddedGraph graph_;
  std::vector<FaceWalk> faces_;
  std::vector<Edge> added_;
};

/// Inserts chords into every face of length >= 4. Each step picks the first
/// face position i (in walk order) whose vertices w(i), w(i+2) are distinct
/// and non-adjacent and joins them. Requires a connected graph with at least
/// three vertices; throws NotConnected or UntriangulatableFace.
Triangulation triangulate(const EmbeddedGraph& g);

/// Deletes the given vertices; surviving rotations keep their order.
EmbeddedGraph remove_vertices(const EmbeddedGraph& g, std::span<const Vertex> removed);

}  // namespace planar5
