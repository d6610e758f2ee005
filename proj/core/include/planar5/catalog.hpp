#pragma once

// Reducible configurations as data.
//
// Each entry is a small template graph H with a degree cap per vertex and a
// rotation template per vertex: the cyclic order of H-edges and runs of
// halfedges (edges leaving H). Caps are upper bounds; a graph vertex of lower
// degree is still accepted, which folds the dominance argument into the data
// model. Every entry carries its coloring scheme and is machine-checked by
// validate_entry().

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace planar5 {

enum class Family {
  F1 = 1,  ///< single vertex of degree at most four
  F2,      ///< five-wheel with rim caps {6,6,6,7,8}
  F3,      ///< degree-7 vertex with four fives and an eight
  F4,      ///< degree-7 vertex with a path of four fives plus one neighbor
  F5,      ///< cap-7 / cap-6 / cap-5 triangle with a second five
  F6,      ///< two adjacent fives with a cap-6 trial vertex
  F7,      ///< hub of degree d >= 8 with d-3 degree-5 leaves
  F8,      ///< degree-9 hub with leaf runs of length 3 and 2
};

std::string_view family_name(Family f);

enum class Scheme { PlainZero, TrialSequence, VirtualHub, NinePattern };

std::string_view scheme_name(Scheme s);

struct RotationItem {
  enum class Kind { Edge, Halfedges };
  Kind kind = Kind::Edge;
  int value = 0;  ///< target template vertex, or run length

  static RotationItem edge(int target) { return {Kind::Edge, target}; }
  static RotationItem halfedges(int count) { return {Kind::Halfedges, count}; }
  bool is_edge() const { return kind == Kind::Edge; }
  bool operator==(const RotationItem&) const = default;
};

struct TemplateVertex {
  std::string label;
  int cap = 0;
  /// Counterclockwise cyclic order around the vertex.
  std::vector<RotationItem> rotation;

  int h_degree() const;
  int halfedges() const;
};

struct ConfigurationSpec {
  std::string id;
  Family family = Family::F1;
  Scheme scheme = Scheme::PlainZero;
  /// Vertex 0 is the match anchor; for hub schemes it is the hub.
  std::vector<TemplateVertex> vertices;
  /// TrialSequence: fifth-color candidates in priority order.
  std::vector<int> trial;
  /// Hub schemes: hub degree (0 = parametric over d >= 8) and the hub link
  /// positions of the leaves; leaf i is template vertex i + 1.
  int hub_degree = 0;
  std::vector<int> leaf_positions;

  int size() const { return static_cast<int>(vertices.size()); }
  bool parametric() const { return scheme == Scheme::VirtualHub && hub_degree == 0; }
  std::vector<std::pair<int, int>> h_edges() const;
  std::vector<std::vector<int>> adjacency() const;
  std::vector<int> caps() const;
};

/// Throws Error(InvalidArgument) unless the spec is internally consistent:
/// symmetric H-edges, cap = H-degree + halfedges, connected H, and scheme
/// data in range.
void check_well_formed(const ConfigurationSpec& spec);

/// Every builtin entry, in the matcher's scan order (F1, F2, F3, F4, F7, F8,
/// F5, F6). F7 appears once as a parametric entry.
const std::vector<ConfigurationSpec>& builtin_catalog();

/// Concrete hub configuration: hub of degree d, cap-5 leaves at the given
/// link positions, every other link position a separator.
ConfigurationSpec hub_configuration(int d, std::vector<int> leaf_positions, Family family = Family::F7);

/// Mirror image: every rotation template reversed.
ConfigurationSpec mirrored(const ConfigurationSpec& spec, std::string id);

/// Copy with the cap of vertex v lowered by one (one halfedge removed).
/// Returns nullopt when v has no halfedge left to remove.
std::optional<ConfigurationSpec> with_lowered_cap(const ConfigurationSpec& spec, int v);

// ---------------------------------------------------------------------------
// Validation

struct PeelResult {
  bool ok = false;
  std::vector<int> order;  ///< deletion order (all vertices when ok)
  std::vector<int> stuck;  ///< vertices that never became eligible
};

/// Greedy peel of H. Effective degree of v is
///   cap(v) - (#H-neighbors already deleted) - lowering(v),
/// and the lowest-id vertex with effective degree <= 4 goes next. Vertices
/// flagged in `deleted` start deleted and are not part of the order.
PeelResult blocked_peel(const std::vector<std::vector<int>>& adjacency, const std::vector<int>& caps,
                        const std::vector<bool>& deleted, const std::vector<int>& lowering);

enum class ScenarioStatus { Pass, Fail, Unreachable };

std::string_view status_name(ScenarioStatus s);

struct ScenarioOutcome {
  std::string name;
  ScenarioStatus status = ScenarioStatus::Pass;
  std::optional<int> fifth;     ///< template vertex given the fifth color
  std::vector<int> blocked;     ///< template vertices lowered by blocking
  PeelResult peel;
  int components = 0;           ///< hub schemes: components of H - hub
  /// Parametric entries: vertex labels of the concrete template the peel
  /// indices refer to. Empty when they refer to the entry itself.
  std::vector<std::string> labels;
};

struct ValidationReport {
  std::string entry_id;
  std::vector<ScenarioOutcome> scenarios;

  bool passed() const;
  const ScenarioOutcome* first_failure() const;
};

/// Machine-checks the entry's reducibility claim over every scenario.
ValidationReport validate_entry(const ConfigurationSpec& spec);

/// validate_entry, throwing Error(ValidationFailure) naming the first failing
/// scenario and the vertices its peel left behind.
void certify(const ConfigurationSpec& spec);

}  // namespace planar5
