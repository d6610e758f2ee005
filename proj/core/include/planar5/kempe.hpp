#pragma once

// Two-color Kempe chains over colors 1..4.
//
// Chains live in the subgraph of currently colored vertices; uncolored
// vertices are absent and color 5 never takes part in a chain.

#include <cstdint>
#include <vector>

#include "planar5/coloring.hpp"
#include "planar5/embedded_graph.hpp"

namespace planar5 {

struct ChainView {
  int a = 0;
  int b = 0;
  Vertex anchor = -1;
  std::vector<Vertex> members;  ///< BFS order from the anchor
};

struct KempeCounters {
  std::uint64_t free_color_calls = 0;
  std::uint64_t swaps = 0;
  std::uint64_t diagonal_contradictions = 0;
};

/// Reusable scratch space so repeated chain searches do not reallocate.
class KempeEngine {
 public:
  /// Component of `start` in the {a,b}-colored subgraph. Throws BadColorPair
  /// when either color is outside 1..4 or a == b, InvalidArgument when start
  /// is not colored a or b.
  ChainView chain(const GraphView& g, const Coloring& col, Vertex start, int a, int b);

  /// Exchanges a and b on the chain members.
  void swap(Coloring& col, const ChainView& chain);

  /// A color of 1..4 unused by v's colored neighbors other than color 5,
  /// after at most one swap. v must be uncolored with at most four such
  /// neighbors. Throws DiagonalContradiction if neither diagonal swap frees a
  /// color, InvalidArgument if the precondition fails.
  int free_color(const GraphView& g, Coloring& col, Vertex v);

  bool contains(const ChainView& chain, Vertex v) const;
  const KempeCounters& counters() const { return counters_; }

 private:
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  KempeCounters counters_;
};

// Convenience wrappers that use a temporary engine.
ChainView kempe_chain(const GraphView& g, const Coloring& col, Vertex start, int a, int b);
void kempe_swap(Coloring& col, const ChainView& chain);
int free_color(const GraphView& g, Coloring& col, Vertex v);

}  // namespace planar5
