#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace oracle {

namespace {

int pred_around(const Rotations& rot, int v, int u) {
  const auto& r = rot[static_cast<std::size_t>(v)];
  const auto it = std::find(r.begin(), r.end(), u);
  const auto i = static_cast<std::size_t>(it - r.begin());
  return r[(i + r.size() - 1) % r.size()];
}

}  // namespace

std::vector<int> face_lengths(const Rotations& rot) {
  std::set<std::pair<int, int>> seen;
  std::vector<int> out;
  for (int u = 0; u < static_cast<int>(rot.size()); ++u) {
    for (int v : rot[static_cast<std::size_t>(u)]) {
      if (seen.count({u, v})) continue;
      int len = 0;
      int a = u, b = v;
      while (!seen.count({a, b})) {
        seen.insert({a, b});
        ++len;
        const int w = pred_around(rot, b, a);
        a = b;
        b = w;
      }
      out.push_back(len);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int count_faces(const Rotations& rot) { return static_cast<int>(face_lengths(rot).size()); }

int edge_count(const Rotations& rot) {
  std::size_t d = 0;
  for (const auto& r : rot) d += r.size();
  return static_cast<int>(d / 2);
}

std::optional<std::vector<int>> k_coloring(const Rotations& rot, int k) {
  const int n = static_cast<int>(rot.size());
  std::vector<int> col(static_cast<std::size_t>(n), 0);
  std::function<bool(int)> go = [&](int v) {
    if (v == n) return true;
    for (int c = 1; c <= k; ++c) {
      bool ok = true;
      for (int u : rot[static_cast<std::size_t>(v)]) ok = ok && col[static_cast<std::size_t>(u)] != c;
      if (!ok) continue;
      col[static_cast<std::size_t>(v)] = c;
      if (go(v + 1)) return true;
    }
    col[static_cast<std::size_t>(v)] = 0;
    return false;
  };
  if (!go(0)) return std::nullopt;
  return col;
}

std::vector<int> two_color_component(const Rotations& rot, const std::vector<int>& color, int start, int a, int b) {
  std::set<int> seen{start};
  std::vector<int> stack{start};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u : rot[static_cast<std::size_t>(v)]) {
      const int c = color[static_cast<std::size_t>(u)];
      if ((c == a || c == b) && seen.insert(u).second) stack.push_back(u);
    }
  }
  return {seen.begin(), seen.end()};
}

bool peel_order_exists(const std::vector<std::vector<int>>& adj, const std::vector<int>& caps,
                       const std::vector<bool>& deleted, const std::vector<int>& lowering) {
  const int n = static_cast<int>(adj.size());
  std::uint32_t start = 0;
  for (int v = 0; v < n; ++v) {
    if (deleted[static_cast<std::size_t>(v)]) start |= 1u << v;
  }
  const std::uint32_t full = (1u << n) - 1;
  std::vector<bool> dead(std::size_t{1} << n, false);
  std::function<bool(std::uint32_t)> go = [&](std::uint32_t gone) {
    if (gone == full) return true;
    if (dead[gone]) return false;
    for (int v = 0; v < n; ++v) {
      if (gone >> v & 1) continue;
      int eff = caps[static_cast<std::size_t>(v)] - lowering[static_cast<std::size_t>(v)];
      for (int u : adj[static_cast<std::size_t>(v)]) eff -= (gone >> u) & 1;
      if (eff <= 4 && go(gone | 1u << v)) return true;
    }
    dead[gone] = true;
    return false;
  };
  return go(start);
}

std::vector<int> low_link_positions(const planar5::GraphView& g, planar5::Vertex v) {
  std::vector<int> out;
  const auto r = g.rotation(v);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (g.degree(r[i]) <= 5) out.push_back(static_cast<int>(i));
  }
  return out;
}

Rotations rotations_of(const planar5::EmbeddedGraph& g) {
  Rotations out;
  for (const auto& r : g.rotations()) out.emplace_back(r.begin(), r.end());
  return out;
}

void split_face(std::vector<std::vector<planar5::Vertex>>& faces, std::size_t i, planar5::Vertex x) {
  const auto f = faces[i];
  faces[i] = {f[0], f[1], x};
  faces.push_back({f[1], f[2], x});
  faces.push_back({f[2], f[0], x});
}

}  // namespace oracle
