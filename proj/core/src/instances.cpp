#include "planar5/instances.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "planar5/error.hpp"

namespace planar5 {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

std::vector<std::vector<Vertex>> k4_rotations() {
  return embedding_from_faces(4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}}).rotations();
}

// Triangulation under construction; rotations are edited in place.
class Grower {
 public:
  explicit Grower(std::uint64_t seed) : rng_(seed), rot_(k4_rotations()) {
    faces_ = {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}};
  }

  void split_random_face() {
    const auto f = rng_.below(faces_.size());
    const auto [a, b, c] = faces_[f];
    const auto x = static_cast<Vertex>(rot_.size());
    rot_.push_back({a, b, c});
    // Around each corner p the walk successor q precedes the walk
    // predecessor r; x goes between them.
    insert_between(b, c, a, x);
    insert_between(c, a, b, x);
    insert_between(a, b, c, x);
    faces_[f] = {a, b, x};
    faces_.push_back({b, c, x});
    faces_.push_back({c, a, x});
  }

  int vertex_count() const { return static_cast<int>(rot_.size()); }
  int degree(Vertex v) const { return static_cast<int>(rot_[idx(v)].size()); }

  /// Flips u-v if the result stays simple with every degree >= 3.
  bool flip(Vertex u, Vertex v) {
    const Vertex w = pred(v, u);
    const Vertex z = pred(u, v);
    if (w == z || degree(u) <= 3 || degree(v) <= 3 || adjacent(w, z)) return false;
    erase(u, v);
    erase(v, u);
    insert_between(w, u, v, z);
    insert_between(z, v, u, w);
    last_flip_ = {u, v, w, z};
    return true;
  }

  bool flip_random() {
    const auto u = static_cast<Vertex>(rng_.below(rot_.size()));
    const auto& r = rot_[idx(u)];
    return flip(u, r[rng_.below(r.size())]);
  }

  /// Flips link edges of low-degree vertices; false when the budget ran out.
  bool shape(long budget, int& done) {
    std::set<Vertex> low;
    for (Vertex v = 0; v < vertex_count(); ++v) {
      if (degree(v) < 5) low.insert(v);
    }
    auto refresh = [&](Vertex v) {
      if (degree(v) < 5) {
        low.insert(v);
      } else {
        low.erase(v);
      }
    };
    std::vector<Vertex> pool;
    for (long attempt = 0; attempt < budget && !low.empty(); ++attempt) {
      pool.assign(low.begin(), low.end());
      const Vertex v = pool[rng_.below(pool.size())];
      // Link edge a-b of v whose ends have the largest smaller degree.
      const int d = degree(v);
      int best = -1;
      int best_score = -1;
      const int start = static_cast<int>(rng_.below(static_cast<std::uint64_t>(d)));
      for (int k = 0; k < d; ++k) {
        const int i = (start + k) % d;
        const Vertex a = rot_[idx(v)][static_cast<std::size_t>(i)];
        const Vertex b = rot_[idx(v)][static_cast<std::size_t>((i + 1) % d)];
        const int score = std::min(degree(a), degree(b));
        if (score > best_score) {
          best_score = score;
          best = i;
        }
      }
      const Vertex a = rot_[idx(v)][static_cast<std::size_t>(best)];
      const Vertex b = rot_[idx(v)][static_cast<std::size_t>((best + 1) % d)];
      bool flipped = false;
      if (best_score > 5 || rng_.below(4) == 0) flipped = flip(a, b);
      if (!flipped) {
        // Perturb elsewhere to escape local dead ends.
        flipped = flip_random();
      }
      if (flipped) {
        ++done;
        // Degrees changed only within distance one of the touched vertices.
        for (Vertex x : last_flip_) refresh(x);
      }
    }
    return low.empty();
  }

  int min_degree() const {
    int m = degree(0);
    for (Vertex v = 1; v < vertex_count(); ++v) m = std::min(m, degree(v));
    return m;
  }

  std::vector<std::vector<Vertex>> take() { return std::move(rot_); }

 private:
  Vertex pred(Vertex at, Vertex of) const {
    const auto& r = rot_[idx(at)];
    const auto i = static_cast<std::size_t>(std::find(r.begin(), r.end(), of) - r.begin());
    return r[(i + r.size() - 1) % r.size()];
  }
  bool adjacent(Vertex a, Vertex b) const {
    const auto& r = rot_[idx(a)];
    return std::find(r.begin(), r.end(), b) != r.end();
  }
  void erase(Vertex at, Vertex x) {
    auto& r = rot_[idx(at)];
    r.erase(std::find(r.begin(), r.end(), x));
  }
  // In p's rotation, q is immediately followed by r; put x between them.
  void insert_between(Vertex p, Vertex q, Vertex r, Vertex x) {
    auto& rot = rot_[idx(p)];
    const auto i = static_cast<std::size_t>(std::find(rot.begin(), rot.end(), q) - rot.begin());
    if (rot[(i + 1) % rot.size()] != r) throw Error(ErrorCode::InvalidArgument, "generator: corner not found");
    rot.insert(rot.begin() + static_cast<std::ptrdiff_t>(i + 1), x);
  }

  SplitMix64 rng_;
  std::vector<std::vector<Vertex>> rot_;
  std::vector<std::array<Vertex, 3>> faces_;
  std::array<Vertex, 4> last_flip_{};
};

}  // namespace

EmbeddedGraph embedding_from_faces(int n, const std::vector<std::vector<Vertex>>& faces) {
  std::vector<std::map<Vertex, Vertex>> succ(static_cast<std::size_t>(n));
  for (const auto& f : faces) {
    const std::size_t k = f.size();
    for (std::size_t i = 0; i < k; ++i) {
      const Vertex a = f[i], b = f[(i + 1) % k], c = f[(i + 2) % k];
      auto [it, fresh] = succ[idx(b)].emplace(c, a);
      if (!fresh && it->second != a) throw Error(ErrorCode::NotPlanarEmbedding, "inconsistent face orientation");
    }
  }
  std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    const auto& s = succ[idx(v)];
    if (s.empty()) continue;
    Vertex x = s.begin()->first;
    for (std::size_t k = 0; k < s.size(); ++k) {
      rot[idx(v)].push_back(x);
      const auto it = s.find(x);
      if (it == s.end()) throw Error(ErrorCode::NotPlanarEmbedding, "open rotation at vertex " + std::to_string(v));
      x = it->second;
    }
    if (x != s.begin()->first) throw Error(ErrorCode::NotPlanarEmbedding, "split rotation at vertex " + std::to_string(v));
  }
  return EmbeddedGraph::build(std::move(rot));
}

std::vector<std::string> named_graphs() { return {"k4", "octahedron", "cube", "icosahedron", "c4"}; }

EmbeddedGraph named(std::string_view name) {
  if (name == "k4") return EmbeddedGraph::build(k4_rotations());
  if (name == "octahedron") {
    std::vector<std::vector<Vertex>> faces;
    for (Vertex i = 1; i <= 4; ++i) {
      const Vertex j = i % 4 + 1;
      faces.push_back({0, i, j});
      faces.push_back({j, i, 5});
    }
    return embedding_from_faces(6, faces);
  }
  if (name == "icosahedron") {
    std::vector<std::vector<Vertex>> faces;
    for (Vertex i = 1; i <= 5; ++i) {
      const Vertex j = i % 5 + 1;  // next on the upper ring
      const Vertex lo = 5 + i;
      const Vertex lo_next = 5 + j;
      faces.push_back({0, i, j});
      faces.push_back({j, i, lo});
      faces.push_back({j, lo, lo_next});
      faces.push_back({lo_next, lo, 11});
    }
    return embedding_from_faces(12, faces);
  }
  if (name == "cube") {
    return embedding_from_faces(8, {{0, 3, 2, 1}, {4, 5, 6, 7}, {0, 1, 5, 4}, {1, 2, 6, 5}, {2, 3, 7, 6}, {3, 0, 4, 7}});
  }
  if (name == "c4") return embedding_from_faces(4, {{0, 1, 2, 3}, {3, 2, 1, 0}});
  throw Error(ErrorCode::UnknownName, "unknown graph name '" + std::string(name) + "'");
}

EmbeddedGraph generate(const GenSpec& spec, GenReport* report) {
  if (spec.n < 4) throw Error(ErrorCode::InvalidArgument, "generate needs n >= 4");
  Grower g(spec.seed);
  while (g.vertex_count() < spec.n) g.split_random_face();
  GenReport rep;
  for (int i = 0; i < spec.flips; ++i) rep.flips_done += g.flip_random() ? 1 : 0;
  if (spec.min_degree_5) {
    rep.shaping_exhausted = !g.shape(static_cast<long>(spec.shaping_budget) * spec.n, rep.shaping_flips);
  }
  rep.min_degree = g.min_degree();
  if (report) *report = rep;
  return EmbeddedGraph::build(g.take());
}

}  // namespace planar5
