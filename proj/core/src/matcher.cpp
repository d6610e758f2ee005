#include "planar5/matcher.hpp"

#include <algorithm>
#include <deque>

namespace planar5 {

namespace {

// Per-entry data for the template walk, computed once.
struct Compiled {
  const ConfigurationSpec* spec = nullptr;
  std::vector<int> order;       // BFS order from vertex 0
  std::vector<int> parent;      // BFS parent, -1 for vertex 0
  std::vector<int> start_item;  // item aligned first: edge to parent, or first edge for vertex 0
  std::vector<int> h_degree;
};

Compiled compile(const ConfigurationSpec& spec) {
  Compiled c;
  c.spec = &spec;
  const int n = spec.size();
  c.parent.assign(static_cast<std::size_t>(n), -1);
  c.start_item.assign(static_cast<std::size_t>(n), -1);
  c.h_degree.resize(static_cast<std::size_t>(n));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  c.order.push_back(0);
  seen[0] = true;
  for (std::size_t head = 0; head < c.order.size(); ++head) {
    const int t = c.order[head];
    for (const auto& it : spec.vertices[static_cast<std::size_t>(t)].rotation) {
      if (!it.is_edge() || seen[static_cast<std::size_t>(it.value)]) continue;
      seen[static_cast<std::size_t>(it.value)] = true;
      c.parent[static_cast<std::size_t>(it.value)] = t;
      c.order.push_back(it.value);
    }
  }
  for (int t = 0; t < n; ++t) {
    const auto& rot = spec.vertices[static_cast<std::size_t>(t)].rotation;
    c.h_degree[static_cast<std::size_t>(t)] = spec.vertices[static_cast<std::size_t>(t)].h_degree();
    const int target = c.parent[static_cast<std::size_t>(t)];
    for (std::size_t j = 0; j < rot.size(); ++j) {
      if (rot[j].is_edge() && (target < 0 || rot[j].value == target)) {
        c.start_item[static_cast<std::size_t>(t)] = static_cast<int>(j);
        break;
      }
    }
  }
  return c;
}

// Calls fn(reductions) for every way to remove `slack` halfedges from the
// runs of `rot`; stops early when fn returns true.
template <typename Fn>
bool for_each_reduction(const std::vector<RotationItem>& rot, int slack, Fn&& fn) {
  std::vector<int> run_items;
  for (std::size_t j = 0; j < rot.size(); ++j) {
    if (!rot[j].is_edge()) run_items.push_back(static_cast<int>(j));
  }
  std::vector<int> reduce(rot.size(), 0);
  auto rec = [&](auto&& self, std::size_t r, int left) -> bool {
    if (r == run_items.size()) return left == 0 && fn(reduce);
    const int item = run_items[r];
    const int most = std::min(left, rot[static_cast<std::size_t>(item)].value);
    for (int s = 0; s <= most; ++s) {
      reduce[static_cast<std::size_t>(item)] = s;
      if (self(self, r + 1, left - s)) return true;
    }
    reduce[static_cast<std::size_t>(item)] = 0;
    return false;
  };
  return rec(rec, 0, slack);
}

class Walker {
 public:
  Walker(const GraphView& g, const Compiled& c) : g_(g), c_(c), map_(c.order.size(), -1) {}

  bool run(Vertex anchor, int offset) {
    map_[0] = anchor;
    offset_ = offset;
    return extend(0);
  }
  const std::vector<Vertex>& map() const { return map_; }

 private:
  bool used(Vertex x) const { return std::find(map_.begin(), map_.end(), x) != map_.end(); }

  bool extend(std::size_t k) {
    if (k == c_.order.size()) return true;
    const int t = c_.order[k];
    const auto& tv = c_.spec->vertices[static_cast<std::size_t>(t)];
    const Vertex gv = map_[static_cast<std::size_t>(t)];
    const int deg = g_.degree(gv);
    if (deg > tv.cap || deg < c_.h_degree[static_cast<std::size_t>(t)]) return false;
    const int j0 = c_.start_item[static_cast<std::size_t>(t)];
    const int parent = c_.parent[static_cast<std::size_t>(t)];
    const int pos0 = parent < 0 ? offset_ : g_.position(gv, map_[static_cast<std::size_t>(parent)]);
    if (pos0 < 0) return false;

    return for_each_reduction(tv.rotation, tv.cap - deg, [&](const std::vector<int>& reduce) {
      const std::size_t trail = assigned_.size();
      if (walk(tv, gv, j0, pos0, reduce) && extend(k + 1)) return true;
      while (assigned_.size() > trail) {
        map_[static_cast<std::size_t>(assigned_.back())] = -1;
        assigned_.pop_back();
      }
      return false;
    });
  }

  bool walk(const TemplateVertex& tv, Vertex gv, int j0, int pos0, const std::vector<int>& reduce) {
    const auto& rot = tv.rotation;
    const int items = static_cast<int>(rot.size());
    int cursor = pos0;
    for (int step = 0; step < items; ++step) {
      const int j = (j0 + step) % items;
      const auto& it = rot[static_cast<std::size_t>(j)];
      if (!it.is_edge()) {
        cursor += it.value - reduce[static_cast<std::size_t>(j)];
        continue;
      }
      const Vertex x = g_.at(gv, cursor++);
      auto& slot = map_[static_cast<std::size_t>(it.value)];
      if (slot >= 0) {
        if (slot != x) return false;
        continue;
      }
      if (used(x) || g_.degree(x) > c_.spec->vertices[static_cast<std::size_t>(it.value)].cap) return false;
      slot = x;
      assigned_.push_back(it.value);
    }
    return true;
  }

  const GraphView& g_;
  const Compiled& c_;
  std::vector<Vertex> map_;
  std::vector<int> assigned_;
  int offset_ = 0;
};

Occurrence make_occurrence(const GraphView& g, const ConfigurationSpec& spec, std::string entry_id, Vertex anchor,
                           int offset, std::vector<Vertex> map) {
  Occurrence occ;
  occ.spec = spec;
  occ.entry_id = std::move(entry_id);
  occ.anchor = anchor;
  occ.offset = offset;
  occ.map = std::move(map);
  if (spec.scheme == Scheme::VirtualHub || spec.scheme == Scheme::NinePattern) {
    for (Vertex u : g.rotation(anchor)) {
      if (std::find(occ.map.begin(), occ.map.end(), u) == occ.map.end()) occ.separators.push_back(u);
    }
  }
  return occ;
}

std::optional<Occurrence> match_compiled(const GraphView& g, const Compiled& c, Vertex anchor, int offset,
                                         const std::string& entry_id) {
  const auto& spec = *c.spec;
  if (!g.alive(anchor)) return std::nullopt;
  const int deg = g.degree(anchor);
  if (spec.scheme == Scheme::PlainZero) {
    if (deg > spec.vertices[0].cap) return std::nullopt;
    return make_occurrence(g, spec, entry_id, anchor, 0, {anchor});
  }
  if (deg > spec.vertices[0].cap || deg < c.h_degree[0] || offset < 0 || offset >= deg) return std::nullopt;
  Walker w(g, c);
  if (!w.run(anchor, offset)) return std::nullopt;
  return make_occurrence(g, spec, entry_id, anchor, offset, w.map());
}

struct CompiledCatalog {
  std::vector<Compiled> entries;
  CompiledCatalog() {
    for (const auto& e : builtin_catalog()) entries.push_back(compile(e));
  }
};

const CompiledCatalog& compiled_catalog() {
  static const CompiledCatalog c;
  return c;
}

bool family_on(const MatchOptions& o, Family f) { return (o.families >> static_cast<int>(f)) & 1u; }

// Scans the given anchors (ascending) family by family.
std::optional<Occurrence> scan(const GraphView& g, const std::vector<Vertex>& anchors, const MatchOptions& options) {
  const auto& entries = compiled_catalog().entries;
  std::size_t i = 0;
  while (i < entries.size()) {
    const Family fam = entries[i].spec->family;
    std::size_t end = i;
    while (end < entries.size() && entries[end].spec->family == fam) ++end;
    if (family_on(options, fam)) {
      for (Vertex v : anchors) {
        if (!g.alive(v)) continue;
        const int deg = g.degree(v);
        if (fam == Family::F7) {
          if (auto occ = match_hub(g, v)) return occ;
          continue;
        }
        for (std::size_t e = i; e < end; ++e) {
          const auto& c = entries[e];
          if (deg > c.spec->vertices[0].cap || deg < c.h_degree[0]) continue;
          const int offsets = c.spec->scheme == Scheme::PlainZero ? 1 : deg;
          for (int off = 0; off < offsets; ++off) {
            if (auto occ = match_compiled(g, c, v, off, c.spec->id)) return occ;
          }
        }
      }
    }
    i = end;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Occurrence> find_low_degree(const GraphView& g) {
  const auto& first = compiled_catalog().entries.front();
  for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) {
    if (g.alive(v) && g.degree(v) <= 4) return match_compiled(g, first, v, 0, first.spec->id);
  }
  return std::nullopt;
}

std::optional<Occurrence> find_reducible(const GraphView& g, const MatchOptions& options) {
  if (family_on(options, Family::F1)) {
    if (auto occ = find_low_degree(g)) return occ;
  }
  std::vector<Vertex> anchors;
  bool low = false;
  for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) {
    if (!g.alive(v)) continue;
    anchors.push_back(v);
    low = low || g.degree(v) < 5;
  }
  if (auto occ = scan(g, anchors, options)) return occ;
  if (low || anchors.empty()) return std::nullopt;

  std::vector<std::vector<Vertex>> rot(g.vertex_count());
  std::vector<std::uint8_t> alive(g.vertex_count());
  for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) {
    alive[static_cast<std::size_t>(v)] = g.alive(v) ? 1 : 0;
    auto r = g.rotation(v);
    rot[static_cast<std::size_t>(v)].assign(r.begin(), r.end());
  }
  throw CompletenessBreach("no catalog configuration in a graph of minimum degree 5 with " +
                               std::to_string(anchors.size()) + " vertices",
                           EmbeddedGraph::build(std::move(rot), std::move(alive)));
}

std::optional<Occurrence> match_at(const GraphView& g, const ConfigurationSpec& entry, Vertex anchor, int offset) {
  if (entry.parametric()) return std::nullopt;
  const Compiled c = compile(entry);
  return match_compiled(g, c, anchor, offset, entry.id);
}

std::optional<Occurrence> match_hub(const GraphView& g, Vertex hub) {
  if (!g.alive(hub)) return std::nullopt;
  const int d = g.degree(hub);
  if (d < 8) return std::nullopt;
  std::vector<int> leaves;
  for (int p = 0; p < d && static_cast<int>(leaves.size()) < d - 3; ++p) {
    if (g.degree(g.at(hub, p)) <= 5) leaves.push_back(p);
  }
  if (static_cast<int>(leaves.size()) < d - 3) return std::nullopt;
  const ConfigurationSpec spec = hub_configuration(d, leaves, Family::F7);
  const Compiled c = compile(spec);
  return match_compiled(g, c, hub, leaves.front(), "F7");
}

std::optional<Occurrence> find_near(const GraphView& g, Vertex v, int radius) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<Vertex> queue{v};
  dist[static_cast<std::size_t>(v)] = 0;
  std::vector<Vertex> anchors;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    anchors.push_back(x);
    if (dist[static_cast<std::size_t>(x)] == radius) continue;
    for (Vertex u : g.rotation(x)) {
      if (dist[static_cast<std::size_t>(u)] >= 0) continue;
      dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(x)] + 1;
      queue.push_back(u);
    }
  }
  std::sort(anchors.begin(), anchors.end());
  return scan(g, anchors, MatchOptions{});
}

bool verify_occurrence(const GraphView& g, const Occurrence& occ) {
  const auto& spec = occ.spec;
  if (static_cast<int>(occ.map.size()) != spec.size()) return false;
  for (std::size_t i = 0; i < occ.map.size(); ++i) {
    const Vertex x = occ.map[i];
    if (x < 0 || x >= static_cast<Vertex>(g.vertex_count()) || !g.alive(x)) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (occ.map[j] == x) return false;
    }
  }
  for (int t = 0; t < spec.size(); ++t) {
    const auto& tv = spec.vertices[static_cast<std::size_t>(t)];
    const Vertex gv = occ.map[static_cast<std::size_t>(t)];
    const int deg = g.degree(gv);
    if (deg > tv.cap || deg < tv.h_degree()) return false;
    const auto first = std::find_if(tv.rotation.begin(), tv.rotation.end(),
                                    [](const RotationItem& it) { return it.is_edge(); });
    if (first == tv.rotation.end()) continue;
    const int j0 = static_cast<int>(first - tv.rotation.begin());
    const int pos0 = g.position(gv, occ.map[static_cast<std::size_t>(first->value)]);
    if (pos0 < 0) return false;
    const int items = static_cast<int>(tv.rotation.size());
    const bool realized = for_each_reduction(tv.rotation, tv.cap - deg, [&](const std::vector<int>& reduce) {
      int cursor = pos0;
      for (int step = 0; step < items; ++step) {
        const int j = (j0 + step) % items;
        const auto& it = tv.rotation[static_cast<std::size_t>(j)];
        if (!it.is_edge()) {
          cursor += it.value - reduce[static_cast<std::size_t>(j)];
        } else if (g.at(gv, cursor++) != occ.map[static_cast<std::size_t>(it.value)]) {
          return false;
        }
      }
      return true;
    });
    if (!realized) return false;
  }
  return true;
}

}  // namespace planar5
