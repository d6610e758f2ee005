#include "planar5/embedded_graph.hpp"

#include <algorithm>
#include <string>

#include "planar5/error.hpp"
#include "rotation_table.hpp"

namespace planar5 {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

std::string vstr(Vertex v) { return std::to_string(v); }

}  // namespace

int GraphView::position(Vertex v, Vertex u) const {
  const auto r = rotation(v);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] == u) return static_cast<int>(i);
  }
  return -1;
}

bool GraphView::adjacent(Vertex u, Vertex v) const {
  // Scan the shorter rotation.
  if (degree(u) > degree(v)) std::swap(u, v);
  const auto r = rotation(u);
  return std::find(r.begin(), r.end(), v) != r.end();
}

Vertex GraphView::at(Vertex v, int i) const {
  const int d = degree(v);
  return rotation(v)[static_cast<std::size_t>(((i % d) + d) % d)];
}

std::size_t GraphView::live_vertex_count() const {
  std::size_t n = 0;
  for (std::size_t v = 0; v < vertex_count(); ++v) n += alive_[v] ? 1 : 0;
  return n;
}

std::size_t GraphView::edge_count() const {
  std::size_t total = 0;
  for (const auto& r : rot_) total += r.size();
  return total / 2;
}

std::vector<FaceWalk> trace_faces(const GraphView& g) {
  std::vector<FaceWalk> faces;
  std::vector<std::vector<std::uint8_t>> seen(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) seen[v].assign(g.rotation(static_cast<Vertex>(v)).size(), 0);

  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    const Vertex start = static_cast<Vertex>(s);
    for (int i = 0; i < g.degree(start); ++i) {
      if (seen[s][static_cast<std::size_t>(i)]) continue;
      FaceWalk face;
      Vertex a = start;
      int ai = i;
      while (!seen[idx(a)][static_cast<std::size_t>(ai)]) {
        seen[idx(a)][static_cast<std::size_t>(ai)] = 1;
        face.vertices.push_back(a);
        const Vertex b = g.rotation(a)[static_cast<std::size_t>(ai)];
        const int d = g.degree(b);
        const int next = (g.position(b, a) - 1 + d) % d;
        a = b;
        ai = next;
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

std::vector<std::vector<Vertex>> connected_components(const GraphView& g) {
  std::vector<std::vector<Vertex>> comps;
  std::vector<std::uint8_t> seen(g.vertex_count(), 0);
  std::vector<Vertex> stack;
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (seen[s] || !g.alive(static_cast<Vertex>(s))) continue;
    std::vector<Vertex> comp;
    seen[s] = 1;
    stack.push_back(static_cast<Vertex>(s));
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex u : g.rotation(v)) {
        if (!seen[idx(u)]) {
          seen[idx(u)] = 1;
          stack.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

EmbeddedGraph EmbeddedGraph::build(std::vector<std::vector<Vertex>> rotations) {
  std::vector<std::uint8_t> alive(rotations.size(), 1);
  return build(std::move(rotations), std::move(alive));
}

EmbeddedGraph EmbeddedGraph::build(std::vector<std::vector<Vertex>> rotations,
                                   std::vector<std::uint8_t> alive) {
  const std::size_t n = rotations.size();
  if (alive.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "alive flags do not match vertex count");
  }

  std::vector<std::vector<Vertex>> sorted(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (Vertex u : rotations[v]) {
      if (u < 0 || idx(u) >= n) {
        throw Error(ErrorCode::VertexOutOfRange,
                    "vertex " + vstr(static_cast<Vertex>(v)) + " lists " + vstr(u));
      }
      if (idx(u) == v) throw Error(ErrorCode::LoopEdge, "vertex " + vstr(u) + " lists itself");
      if (!alive[idx(u)] || !alive[v]) {
        throw Error(ErrorCode::InvalidArgument,
                    "edge " + vstr(static_cast<Vertex>(v)) + "-" + vstr(u) + " touches a deleted vertex");
      }
    }
    sorted[v] = rotations[v];
    std::sort(sorted[v].begin(), sorted[v].end());
    const auto dup = std::adjacent_find(sorted[v].begin(), sorted[v].end());
    if (dup != sorted[v].end()) {
      throw Error(ErrorCode::DuplicateNeighbor,
                  "vertex " + vstr(static_cast<Vertex>(v)) + " lists " + vstr(*dup) + " twice");
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    for (Vertex u : rotations[v]) {
      if (!std::binary_search(sorted[idx(u)].begin(), sorted[idx(u)].end(), static_cast<Vertex>(v))) {
        throw Error(ErrorCode::AsymmetricAdjacency,
                    vstr(u) + " is a neighbor of " + vstr(static_cast<Vertex>(v)) + " but not vice versa");
      }
    }
  }

  EmbeddedGraph g;
  g.rot_ = std::move(rotations);
  g.alive_ = std::move(alive);
  const GraphView view = g.view();
  g.live_ = view.live_vertex_count();
  g.edges_ = view.edge_count();

  // Component-wise Euler check. An isolated vertex bounds one face.
  const auto faces = trace_faces(view);
  std::vector<int> comp_of(n, -1);
  const auto comps = connected_components(view);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (Vertex v : comps[c]) comp_of[idx(v)] = static_cast<int>(c);
  }
  std::vector<long long> face_count(comps.size(), 0);
  for (const auto& f : faces) face_count[static_cast<std::size_t>(comp_of[idx(f.vertices.front())])]++;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    long long degree_sum = 0;
    for (Vertex v : comps[c]) degree_sum += g.degree(v);
    const long long nc = static_cast<long long>(comps[c].size());
    const long long mc = degree_sum / 2;
    const long long fc = mc == 0 ? 1 : face_count[c];
    if (nc - mc + fc != 2) {
      throw Error(ErrorCode::NotPlanarEmbedding,
                  "component containing " + vstr(comps[c].front()) + ": n - m + F = " +
                      std::to_string(nc) + " - " + std::to_string(mc) + " + " + std::to_string(fc) +
                      " != 2");
    }
  }
  return g;
}

std::vector<Edge> EmbeddedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (std::size_t v = 0; v < rot_.size(); ++v) {
    for (Vertex u : rot_[v]) {
      if (static_cast<Vertex>(v) < u) out.push_back(Edge{static_cast<Vertex>(v), u});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Triangulation Triangulation::from(EmbeddedGraph graph) {
  auto faces = trace_faces(graph.view());
  for (const auto& f : faces) {
    if (f.length() != 3) {
      throw Error(ErrorCode::InvalidArgument,
                  "face through " + vstr(f.vertices.front()) + " has length " + std::to_string(f.length()));
    }
  }
  return Triangulation(std::move(graph), std::move(faces), {});
}

Triangulation triangulate(const EmbeddedGraph& g) {
  const auto comps = connected_components(g.view());
  if (comps.size() != 1 || comps.front().size() < 3) {
    throw Error(ErrorCode::NotConnected,
                "triangulate needs a connected graph with at least 3 vertices (" +
                    std::to_string(comps.size()) + " components)");
  }
  detail::RotationTable table{g.rotations(), g.alive_flags(), {}};
  std::vector<Edge> added;
  table.triangulate_all(&added);
  std::sort(added.begin(), added.end());
  auto out = EmbeddedGraph::build(std::move(table.rot), std::move(table.alive));
  auto faces = trace_faces(out.view());
  return Triangulation(std::move(out), std::move(faces), std::move(added));
}

EmbeddedGraph remove_vertices(const EmbeddedGraph& g, std::span<const Vertex> removed) {
  detail::RotationTable table{g.rotations(), g.alive_flags(), {}};
  for (Vertex v : removed) {
    if (table.alive[idx(v)]) table.remove_vertex(v);
  }
  return EmbeddedGraph::build(std::move(table.rot), std::move(table.alive));
}

}  // namespace planar5
