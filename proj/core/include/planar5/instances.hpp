#pragma once

// Named test graphs, a seeded triangulation generator, and the pg/1 format.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "planar5/embedded_graph.hpp"

namespace planar5 {

/// Builds a rotation system from oriented face walks: for consecutive walk
/// vertices a, b, c the dart b->c follows a->b, so c precedes a around b.
/// Each rotation starts at its smallest neighbor.
EmbeddedGraph embedding_from_faces(int n, const std::vector<std::vector<Vertex>>& faces);

/// k4, octahedron, cube, icosahedron, or c4. Throws UnknownName.
///
/// Numbering: octahedron has poles 0 and 5 around the equator 1..4;
/// icosahedron has poles 0 and 11, upper ring 1..5 and lower ring 6..10 with
/// 5+i below the edge i, i+1; cube has top face 0..3 and bottom face 4..7
/// with 4+i below i.
EmbeddedGraph named(std::string_view name);
std::vector<std::string> named_graphs();

/// SplitMix64: the generator's only source of randomness.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  /// Value in [0, bound) by modular reduction.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

struct GenSpec {
  std::uint64_t seed = 1;
  int n = 4;
  int flips = 0;
  /// After the random flips, flip edges around vertices of degree below 5
  /// until none remain or the budget runs out.
  bool min_degree_5 = false;
  /// Shaping attempts per vertex.
  int shaping_budget = 200;
};

struct GenReport {
  int flips_done = 0;
  int shaping_flips = 0;
  bool shaping_exhausted = false;
  int min_degree = 0;
};

/// Grows K4 by random face splits to n vertices, then performs random legal
/// edge flips. Output is identical for identical specs.
EmbeddedGraph generate(const GenSpec& spec, GenReport* report = nullptr);

/// Parses pg/1. Throws ParseError (what() reads "ParseError: line <k>: ...") on
/// syntax errors and the build() errors on invalid embeddings.
EmbeddedGraph read_pg(std::string_view text);

/// Canonical pg/1 text. Throws InvalidArgument for graphs with deleted ids.
std::string write_pg(const EmbeddedGraph& g);

}  // namespace planar5
