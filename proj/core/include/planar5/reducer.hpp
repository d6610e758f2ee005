#pragma once

// The coloring driver.
//
// Descent: repeatedly find an occurrence, delete its vertices, and
// re-triangulate the hole. Unwinding: restore each level's triangulation and
// color the deleted vertices, giving the fifth color to at most one of them
// and inserting the rest in reverse peel order with Kempe-chain recoloring.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "planar5/coloring.hpp"
#include "planar5/embedded_graph.hpp"
#include "planar5/kempe.hpp"
#include "planar5/matcher.hpp"

namespace planar5 {

struct ReductionStep {
  std::string entry_id;
  Family family = Family::F1;
  std::vector<Vertex> vertices;  ///< V(H) in template order
  std::optional<Vertex> fifth;
  std::vector<Vertex> blocked;   ///< H vertices with a fifth-colored neighbor
  std::vector<Vertex> peel;      ///< deletion order of V(H) minus the fifth vertex
};

struct RunStats {
  std::uint64_t levels = 0;
  std::uint64_t low_degree_levels = 0;  ///< levels resolved by F1
  std::uint64_t scans = 0;              ///< full catalog scans
  std::uint64_t fifth_assigned = 0;
  std::uint64_t family_hits[9] = {};    ///< indexed by family number
  KempeCounters kempe;
  // Audit counters; only maintained when ColorOptions::audit is set.
  std::uint64_t audited_steps = 0;
  std::uint64_t bound_breaches = 0;     ///< steps where 6 |V5| exceeded the colored count
  std::uint64_t class5_violations = 0;  ///< steps that changed color 5 other than on the fifth vertex
  std::uint64_t improper_steps = 0;     ///< steps ending with a monochromatic edge
  std::uint64_t peel_replay_failures = 0;
};

struct ColorOptions {
  /// Check per-step invariants (class-5 stability, properness, peel replay,
  /// bound). Costs O(n) per level.
  bool audit = false;
  bool record_steps = false;
  MatchOptions match;
};

struct ColorResult {
  Coloring coloring;  ///< indexed by input vertex id
  RunStats stats;
  std::vector<ReductionStep> steps;  ///< in unwinding order, when recorded
};

/// Proper 5-coloring of the input with 6 |V5| <= n. Throws on invalid input
/// and on internal tripwires (CompletenessBreach, SchemeExhausted,
/// DiagonalContradiction).
ColorResult color_planar(const EmbeddedGraph& g, const ColorOptions& options = {});

struct FifthChoice {
  std::optional<Vertex> fifth;
  std::vector<Vertex> blocked;
  std::vector<Vertex> peel;
};

/// Picks the fifth-colored vertex of an occurrence whose vertices are all
/// uncolored while everything else is colored. Candidates are tried in scheme
/// order, then no fifth vertex; the first whose peel succeeds wins. Throws
/// SchemeExhausted when none does.
FifthChoice select_fifth(const GraphView& g, const Coloring& col, const Occurrence& occ);

/// Colors the peel order in reverse, freeing a color at each vertex.
void reinsert(const GraphView& g, const std::vector<Vertex>& peel, Coloring& col, KempeEngine& kempe);

/// select_fifth followed by reinsert.
ReductionStep reduce_once(const GraphView& g, Coloring& col, const Occurrence& occ, KempeEngine& kempe);

struct ColoringReport {
  std::size_t n = 0;
  std::size_t v5 = 0;
  std::vector<Edge> violations;   ///< edges with equal colors at both ends
  std::vector<Vertex> uncolored;  ///< live vertices without a color
  bool proper() const { return violations.empty() && uncolored.empty(); }
  bool bound() const { return 6 * v5 <= n; }
};

ColoringReport check_coloring(const EmbeddedGraph& g, const Coloring& col);

}  // namespace planar5
