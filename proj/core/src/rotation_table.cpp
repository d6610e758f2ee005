#include "rotation_table.hpp"

#include <algorithm>
#include <string>

#include "planar5/error.hpp"

namespace planar5::detail {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

}  // namespace

void RotationTable::remove_vertex(Vertex v) {
  touch(v);
  for (Vertex u : rot[idx(v)]) {
    touch(u);
    auto& r = rot[idx(u)];
    r.erase(std::find(r.begin(), r.end(), v));
  }
  rot[idx(v)].clear();
  alive[idx(v)] = 0;
}

std::vector<Vertex> RotationTable::trace_face(Vertex u, Vertex v) const {
  const GraphView g = view();
  std::vector<Vertex> walk;
  Vertex a = u;
  Vertex b = v;
  do {
    walk.push_back(a);
    const Vertex next = g.at(b, g.position(b, a) - 1);
    a = b;
    b = next;
  } while (!(a == u && b == v));
  return walk;
}

void RotationTable::triangulate_walk(std::vector<Vertex> walk, std::vector<Edge>* added) {
  const GraphView g = view();
  while (walk.size() > 3) {
    const std::size_t len = walk.size();
    bool inserted = false;
    for (std::size_t i = 0; i < len; ++i) {
      const Vertex a = walk[i];
      const Vertex b = walk[(i + 1) % len];
      const Vertex c = walk[(i + 2) % len];
      if (a == c || g.adjacent(a, c)) continue;

      // In a's rotation b is immediately followed by the previous walk vertex;
      // the chord goes between them. In c's rotation it goes right before b.
      touch(a);
      touch(c);
      auto& ra = rot[idx(a)];
      ra.insert(ra.begin() + (g.position(a, b) + 1), c);
      auto& rc = rot[idx(c)];
      rc.insert(rc.begin() + g.position(c, b), a);
      if (added) added->push_back(Edge::of(a, c));

      walk.erase(walk.begin() + static_cast<std::ptrdiff_t>((i + 1) % len));
      inserted = true;
      break;
    }
    if (!inserted) {
      std::string msg = "no simple diagonal in face of length " + std::to_string(len) + ":";
      for (Vertex w : walk) msg += " " + std::to_string(w);
      throw Error(ErrorCode::UntriangulatableFace, msg);
    }
  }
}

void RotationTable::triangulate_around(std::span<const Vertex> seeds, std::vector<Edge>* added) {
  for (Vertex s : seeds) {
    if (!alive[idx(s)]) continue;
    bool again = true;
    while (again) {
      again = false;
      for (std::size_t i = 0; i < rot[idx(s)].size(); ++i) {
        auto walk = trace_face(s, rot[idx(s)][i]);
        if (walk.size() > 3) {
          triangulate_walk(std::move(walk), added);
          again = true;
          break;
        }
      }
    }
  }
}

void RotationTable::triangulate_all(std::vector<Edge>* added) {
  // Chords stay inside their face, so faces traced up front remain valid.
  for (auto& face : trace_faces(view())) {
    if (face.length() > 3) triangulate_walk(std::move(face.vertices), added);
  }
}

}  // namespace planar5::detail
