#pragma once

// Reference computations written independently of the library, used to
// derive expected values in tests.

#include <cstdint>
#include <optional>
#include <vector>

#include "planar5/embedded_graph.hpp"

namespace oracle {

using Rotations = std::vector<std::vector<int>>;

/// Face count by walking darts: after u->v comes v->w, w preceding u around v.
int count_faces(const Rotations& rot);

/// Face lengths, sorted.
std::vector<int> face_lengths(const Rotations& rot);

int edge_count(const Rotations& rot);

/// Some proper coloring with colors 1..k, by backtracking; nullopt if none.
std::optional<std::vector<int>> k_coloring(const Rotations& rot, int k);

/// {a,b}-component of start among vertices with color a or b (0 = absent).
std::vector<int> two_color_component(const Rotations& rot, const std::vector<int>& color, int start, int a, int b);

/// Whether some deletion order removes every non-deleted vertex while its
/// effective degree cap - lowering - deleted neighbors is at most 4.
bool peel_order_exists(const std::vector<std::vector<int>>& adj, const std::vector<int>& caps,
                       const std::vector<bool>& deleted, const std::vector<int>& lowering);

/// Degree-≤5 neighbor positions around v, in rotation order.
std::vector<int> low_link_positions(const planar5::GraphView& g, planar5::Vertex v);

Rotations rotations_of(const planar5::EmbeddedGraph& g);

/// Splits face (a,b,c) of a face list with a new vertex x.
void split_face(std::vector<std::vector<planar5::Vertex>>& faces, std::size_t i, planar5::Vertex x);

}  // namespace oracle
