#include "planar5/kempe.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "planar5/error.hpp"

namespace planar5 {

ChainView KempeEngine::chain(const GraphView& g, const Coloring& col, Vertex start, int a, int b) {
  if (a < 1 || a > 4 || b < 1 || b > 4 || a == b) {
    throw Error(ErrorCode::BadColorPair,
                "Kempe chains use two distinct colors of 1..4, got {" + std::to_string(a) + "," + std::to_string(b) + "}");
  }
  if (col[start] != a && col[start] != b) {
    throw Error(ErrorCode::InvalidArgument, "chain start " + std::to_string(start) + " is not colored a or b");
  }
  if (stamp_.size() < g.vertex_count()) stamp_.resize(g.vertex_count(), 0);
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }

  ChainView out{a, b, start, {start}};
  stamp_[static_cast<std::size_t>(start)] = epoch_;
  for (std::size_t head = 0; head < out.members.size(); ++head) {
    for (Vertex u : g.rotation(out.members[head])) {
      auto& s = stamp_[static_cast<std::size_t>(u)];
      if (s == epoch_) continue;
      const int c = col[u];
      if (c != a && c != b) continue;
      s = epoch_;
      out.members.push_back(u);
    }
  }
  return out;
}

void KempeEngine::swap(Coloring& col, const ChainView& chain) {
  for (Vertex v : chain.members) col.set(v, col[v] == chain.a ? chain.b : chain.a);
  ++counters_.swaps;
}

bool KempeEngine::contains(const ChainView& chain, Vertex v) const {
  return std::find(chain.members.begin(), chain.members.end(), v) != chain.members.end();
}

int KempeEngine::free_color(const GraphView& g, Coloring& col, Vertex v) {
  ++counters_.free_color_calls;
  if (col.colored(v)) throw Error(ErrorCode::InvalidArgument, "free_color on colored vertex " + std::to_string(v));

  std::array<Vertex, 4> w{};
  int count = 0;
  unsigned used = 0;
  for (Vertex u : g.rotation(v)) {
    const int c = col[u];
    if (c == 0 || c == 5) continue;
    if (count == 4) {
      throw Error(ErrorCode::InvalidArgument,
                  "vertex " + std::to_string(v) + " has more than four neighbors colored 1..4");
    }
    w[static_cast<std::size_t>(count++)] = u;
    used |= 1u << c;
  }
  for (int c = 1; c <= 4; ++c) {
    if (!(used >> c & 1)) return c;
  }

  // Four neighbors with four distinct colors, in rotation order. The chains
  // of the two diagonal pairs cannot both connect without crossing.
  for (int k = 0; k < 2; ++k) {
    const Vertex from = w[static_cast<std::size_t>(k)];
    const Vertex to = w[static_cast<std::size_t>(k + 2)];
    const int freed = col[from];
    const ChainView c = chain(g, col, from, freed, col[to]);
    if (stamp_[static_cast<std::size_t>(to)] != epoch_) {
      swap(col, c);
      return freed;
    }
  }
  ++counters_.diagonal_contradictions;
  throw Error(ErrorCode::DiagonalContradiction,
              "both diagonal Kempe chains connect around vertex " + std::to_string(v));
}

ChainView kempe_chain(const GraphView& g, const Coloring& col, Vertex start, int a, int b) {
  KempeEngine e;
  return e.chain(g, col, start, a, b);
}

void kempe_swap(Coloring& col, const ChainView& chain) {
  KempeEngine e;
  e.swap(col, chain);
}

int free_color(const GraphView& g, Coloring& col, Vertex v) {
  KempeEngine e;
  return e.free_color(g, col, v);
}

}  // namespace planar5
