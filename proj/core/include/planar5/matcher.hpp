#pragma once

// Finds catalog configurations in a triangulation.
//
// Matching is a template walk: template vertex 0 goes to the anchor, its first
// H-edge to the anchor's neighbor at the given rotation offset, and every
// other vertex is reached through an already placed neighbor. Halfedge runs
// absorb the difference between a vertex's cap and its actual degree.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "planar5/catalog.hpp"
#include "planar5/embedded_graph.hpp"
#include "planar5/error.hpp"

namespace planar5 {

struct Occurrence {
  /// Concrete entry; for F7 this is the instantiated hub configuration.
  ConfigurationSpec spec;
  /// Id of the catalog entry that produced the match.
  std::string entry_id;
  Vertex anchor = -1;
  int offset = 0;
  /// Template vertex i -> graph vertex map[i].
  std::vector<Vertex> map;
  /// Hub schemes: the hub's link vertices outside H.
  std::vector<Vertex> separators;

  Family family() const { return spec.family; }
  int hub_degree() const { return spec.hub_degree; }
};

/// Thrown by find_reducible when a graph of minimum degree at least 5 has no
/// occurrence. Carries a copy of the offending graph.
class CompletenessBreach : public Error {
 public:
  CompletenessBreach(const std::string& message, EmbeddedGraph graph)
      : Error(ErrorCode::CompletenessBreach, message), graph_(std::move(graph)) {}
  const EmbeddedGraph& graph() const { return graph_; }

 private:
  EmbeddedGraph graph_;
};

struct MatchOptions {
  /// Bit f set = family Ff is scanned.
  std::uint32_t families = 0x1FE;
};

/// F1 at the lowest-id live vertex of degree at most 4.
std::optional<Occurrence> find_low_degree(const GraphView& g);

/// First occurrence in scan order: F1, then families F2, F3, F4, F7, F8, F5,
/// F6, each by ascending anchor id and rotation offset. Returns nullopt when
/// nothing matches and some live vertex has degree below 5; throws
/// CompletenessBreach when nothing matches otherwise.
std::optional<Occurrence> find_reducible(const GraphView& g, const MatchOptions& options = {});

/// Template walk of one entry at one anchor and offset. Parametric F7 entries
/// are not matched here; use match_hub.
std::optional<Occurrence> match_at(const GraphView& g, const ConfigurationSpec& entry, Vertex anchor, int offset);

/// F7 at a hub of degree d >= 8 with at least d-3 neighbors of degree <= 5.
/// The first d-3 such neighbors in rotation order become the leaves.
std::optional<Occurrence> match_hub(const GraphView& g, Vertex hub);

/// First occurrence of any family whose anchor lies within `radius` of v.
std::optional<Occurrence> find_near(const GraphView& g, Vertex v, int radius = 2);

/// Re-checks an occurrence against the raw graph: injective map, every H-edge
/// present, caps respected, and each rotation template realized.
bool verify_occurrence(const GraphView& g, const Occurrence& occ);

}  // namespace planar5
