#include "planar5/reducer.hpp"

#include <algorithm>
#include <set>

#include "planar5/error.hpp"
#include "working_graph.hpp"

namespace planar5 {

namespace {

bool contains(const std::vector<Vertex>& vs, Vertex v) { return std::find(vs.begin(), vs.end(), v) != vs.end(); }

bool has_fifth_neighbor(const GraphView& g, const Coloring& col, Vertex v) {
  for (Vertex u : g.rotation(v)) {
    if (col[u] == 5) return true;
  }
  return false;
}

// Greedy peel of H with `removed` already gone. Effective degree counts
// neighbors that are neither removed nor colored 5.
std::optional<std::vector<Vertex>> peel_h(const GraphView& g, const Coloring& col, const std::vector<Vertex>& h,
                                          std::optional<Vertex> removed) {
  std::vector<int> eff(h.size(), 0);
  std::vector<bool> gone(h.size(), false);
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (removed && h[i] == *removed) {
      gone[i] = true;
      continue;
    }
    for (Vertex u : g.rotation(h[i])) {
      if (col[u] != 5 && !(removed && u == *removed)) ++eff[i];
    }
  }
  std::vector<Vertex> order;
  for (;;) {
    std::size_t next = h.size();
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (!gone[i] && eff[i] <= 4) {
        next = i;
        break;
      }
    }
    if (next == h.size()) break;
    gone[next] = true;
    order.push_back(h[next]);
    for (std::size_t j = 0; j < h.size(); ++j) {
      if (!gone[j] && g.adjacent(h[j], h[next])) --eff[j];
    }
  }
  if (std::find(gone.begin(), gone.end(), false) != gone.end()) return std::nullopt;
  return order;
}

std::vector<Vertex> candidates(const Occurrence& occ) {
  const auto& spec = occ.spec;
  std::vector<Vertex> out;
  switch (spec.scheme) {
    case Scheme::PlainZero:
      break;
    case Scheme::TrialSequence:
      for (int t : spec.trial) out.push_back(occ.map[static_cast<std::size_t>(t)]);
      for (Vertex v : occ.map) {
        if (!contains(out, v)) out.push_back(v);
      }
      break;
    case Scheme::VirtualHub:
    case Scheme::NinePattern:
      out = occ.map;  // hub first, then leaves
      break;
  }
  return out;
}

// Peel certificate replay against the current graph: each vertex must have at
// most four neighbors that are neither colored 5 nor deleted before it.
bool replay_peel(const GraphView& g, const Coloring& before, const ReductionStep& step) {
  std::vector<Vertex> deleted;
  if (step.fifth) deleted.push_back(*step.fifth);
  for (Vertex v : step.peel) {
    int eff = 0;
    for (Vertex u : g.rotation(v)) {
      if (before[u] != 5 && !contains(deleted, u)) ++eff;
    }
    if (eff > 4) return false;
    deleted.push_back(v);
  }
  std::vector<Vertex> all = step.peel;
  if (step.fifth) all.push_back(*step.fifth);
  std::sort(all.begin(), all.end());
  std::vector<Vertex> h = step.vertices;
  std::sort(h.begin(), h.end());
  return all == h;
}

bool proper_on(const GraphView& g, const Coloring& col) {
  for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) {
    if (!g.alive(v) || !col.colored(v)) continue;
    for (Vertex u : g.rotation(v)) {
      if (u > v && col[u] == col[v]) return false;
    }
  }
  return true;
}

void color_trivially(const GraphView& g, Coloring& col) {
  for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) {
    if (!g.alive(v)) continue;
    unsigned used = 0;
    for (Vertex u : g.rotation(v)) used |= 1u << col[u];
    int c = 1;
    while (used >> c & 1) ++c;
    col.set(v, c);
  }
}

}  // namespace

FifthChoice select_fifth(const GraphView& g, const Coloring& col, const Occurrence& occ) {
  FifthChoice choice;
  for (Vertex v : occ.map) {
    if (has_fifth_neighbor(g, col, v)) choice.blocked.push_back(v);
  }
  for (Vertex c : candidates(occ)) {
    if (contains(choice.blocked, c)) continue;
    if (auto order = peel_h(g, col, occ.map, c)) {
      choice.fifth = c;
      choice.peel = std::move(*order);
      return choice;
    }
  }
  if (auto order = peel_h(g, col, occ.map, std::nullopt)) {
    choice.peel = std::move(*order);
    return choice;
  }
  throw Error(ErrorCode::SchemeExhausted, "no fifth-color choice peels " + occ.entry_id + " anchored at " +
                                              std::to_string(occ.anchor));
}

void reinsert(const GraphView& g, const std::vector<Vertex>& peel, Coloring& col, KempeEngine& kempe) {
  for (auto it = peel.rbegin(); it != peel.rend(); ++it) col.set(*it, kempe.free_color(g, col, *it));
}

ReductionStep reduce_once(const GraphView& g, Coloring& col, const Occurrence& occ, KempeEngine& kempe) {
  auto choice = select_fifth(g, col, occ);
  if (choice.fifth) col.set(*choice.fifth, 5);
  reinsert(g, choice.peel, col, kempe);
  ReductionStep step;
  step.entry_id = occ.entry_id;
  step.family = occ.family();
  step.vertices = occ.map;
  step.fifth = choice.fifth;
  step.blocked = std::move(choice.blocked);
  step.peel = std::move(choice.peel);
  return step;
}

ColorResult color_planar(const EmbeddedGraph& input, const ColorOptions& options) {
  ColorResult result;
  result.coloring = Coloring(input.vertex_count());
  auto& col = result.coloring;
  auto& stats = result.stats;

  if (input.live_vertex_count() <= 3) {
    color_trivially(input.view(), col);
    return result;
  }

  detail::WorkingGraph wg(input);
  wg.triangulate_all();

  std::set<Vertex> low;
  {
    const GraphView g = wg.view();
    for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) {
      if (g.alive(v) && g.degree(v) <= 4) low.insert(v);
    }
  }
  const bool f1_on = (options.match.families >> 1) & 1u;

  struct Level {
    Occurrence occ;
    std::size_t mark;
  };
  std::vector<Level> levels;
  while (wg.live_count() > 0) {
    const GraphView g = wg.view();
    std::optional<Occurrence> occ;
    if (f1_on && !low.empty()) {
      occ = match_at(g, builtin_catalog().front(), *low.begin(), 0);
      ++stats.low_degree_levels;
    } else {
      ++stats.scans;
      occ = find_reducible(g, options.match);
      if (!occ) throw Error(ErrorCode::CompletenessBreach, "no enabled catalog family matches");
    }
    ++stats.family_hits[static_cast<int>(occ->family())];
    const std::size_t mark = wg.begin_level();
    wg.remove_and_fill(occ->map);
    for (Vertex v : wg.touched_since(mark)) {
      if (g.alive(v) && g.degree(v) <= 4) {
        low.insert(v);
      } else {
        low.erase(v);
      }
    }
    levels.push_back({std::move(*occ), mark});
  }
  stats.levels = levels.size();

  KempeEngine kempe;
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    wg.rollback(it->mark);
    const GraphView g = wg.view();
    Coloring before;
    if (options.audit) before = col;

    auto step = reduce_once(g, col, it->occ, kempe);
    if (step.fifth) ++stats.fifth_assigned;

    if (options.audit) {
      ++stats.audited_steps;
      for (Vertex v = 0; v < static_cast<Vertex>(col.vertex_count()); ++v) {
        const bool was5 = before[v] == 5;
        const bool is5 = col[v] == 5;
        if (was5 != is5 && !(step.fifth && *step.fifth == v && is5)) {
          ++stats.class5_violations;
          break;
        }
      }
      if (!proper_on(g, col)) ++stats.improper_steps;
      if (!replay_peel(g, before, step)) ++stats.peel_replay_failures;
      if (6 * col.class_size(5) > col.colored_count()) ++stats.bound_breaches;
    }
    if (options.record_steps) result.steps.push_back(std::move(step));
  }
  stats.kempe = kempe.counters();
  return result;
}

ColoringReport check_coloring(const EmbeddedGraph& g, const Coloring& col) {
  ColoringReport r;
  r.n = g.live_vertex_count();
  for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) {
    if (!g.alive(v)) continue;
    const int c = static_cast<std::size_t>(v) < col.vertex_count() ? col[v] : 0;
    if (c == 0) {
      r.uncolored.push_back(v);
      continue;
    }
    if (c == 5) ++r.v5;
    for (Vertex u : g.rotation(v)) {
      if (u > v && static_cast<std::size_t>(u) < col.vertex_count() && col[u] == c) r.violations.push_back(Edge::of(v, u));
    }
  }
  return r;
}

}  // namespace planar5
