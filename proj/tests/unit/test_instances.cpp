#include <gtest/gtest.h>

#include "../support/oracles.hpp"
#include "planar5/error.hpp"
#include "planar5/instances.hpp"

using namespace planar5;

namespace {

ErrorCode parse_code(const std::string& text) {
  try {
    read_pg(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted:\n" << text;
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Instances, SplitMixReferenceValues) {
  // Reference outputs of the SplitMix64 algorithm for seed 0.
  SplitMix64 r(0);
  EXPECT_EQ(r.next(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(r.next(), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(r.next(), 0x06C45D188009454FULL);
}

TEST(Instances, GeneratorIsDeterministic) {
  GenSpec spec;
  spec.seed = 17;
  spec.n = 300;
  spec.flips = 600;
  spec.min_degree_5 = true;
  EXPECT_EQ(generate(spec), generate(spec));
  auto other = spec;
  other.seed = 18;
  EXPECT_FALSE(generate(spec) == generate(other));
}

TEST(Instances, GeneratedGraphsAreTriangulations) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    GenSpec spec;
    spec.seed = seed;
    spec.n = 20 + 37 * static_cast<int>(seed);
    spec.flips = static_cast<int>(seed % 3) * spec.n;
    const auto g = generate(spec);
    EXPECT_EQ(g.vertex_count(), static_cast<std::size_t>(spec.n));
    EXPECT_EQ(g.edge_count(), static_cast<std::size_t>(3 * spec.n - 6));
    const auto lengths = oracle::face_lengths(oracle::rotations_of(g));
    EXPECT_EQ(lengths.size(), static_cast<std::size_t>(2 * spec.n - 4));
    for (int len : lengths) EXPECT_EQ(len, 3);
    for (Vertex v = 0; v < spec.n; ++v) EXPECT_GE(g.degree(v), 3);
  }
}

TEST(Instances, ShapingReachesMinimumDegreeFive) {
  int reached = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    GenSpec spec;
    spec.seed = seed;
    spec.n = 50 + 25 * static_cast<int>(seed);
    spec.flips = 2 * spec.n;
    spec.min_degree_5 = true;
    GenReport rep;
    const auto g = generate(spec, &rep);
    int min_deg = g.degree(0);
    for (Vertex v = 1; v < spec.n; ++v) min_deg = std::min(min_deg, g.degree(v));
    EXPECT_EQ(rep.min_degree, min_deg);
    EXPECT_EQ(rep.shaping_exhausted, min_deg < 5);
    reached += min_deg >= 5;
  }
  EXPECT_EQ(reached, 20);
}

TEST(Instances, ReadExampleFile) {
  const auto g = read_pg("# a comment\npg 4\n0: 1 2 3\n1: 0 3 2  # trailing\n\n2: 0 1 3\n3: 0 2 1\n");
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.edge_count(), 6u);
  EXPECT_EQ(oracle::count_faces(oracle::rotations_of(g)), 4);
}

TEST(Instances, WriteThenReadRoundTrips) {
  for (const auto& name : named_graphs()) {
    const auto g = named(name);
    const auto text = write_pg(g);
    EXPECT_EQ(text.rfind("pg " + std::to_string(g.vertex_count()) + "\n", 0), 0u) << name;
    EXPECT_EQ(read_pg(text), g) << name;
    EXPECT_EQ(write_pg(read_pg(text)), text) << name;
  }
}

TEST(Instances, ParseErrorsCarryLineNumbers) {
  try {
    read_pg("pg 3\n0: 1 2\n1: 0 x\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_EQ(std::string(e.what()).rfind("ParseError: line 3:", 0), 0u) << e.what();
  }
}

TEST(Instances, MalformedInputsAreRejected) {
  EXPECT_EQ(parse_code(""), ErrorCode::ParseError);
  EXPECT_EQ(parse_code("graph 3\n"), ErrorCode::ParseError);
  EXPECT_EQ(parse_code("pg 2\n0: 1\n"), ErrorCode::ParseError);             // vertex 1 missing
  EXPECT_EQ(parse_code("pg 2\n0: 1\n0: 1\n1: 0\n"), ErrorCode::ParseError); // listed twice
  EXPECT_EQ(parse_code("pg 2\n0 1\n1: 0\n"), ErrorCode::ParseError);        // no colon
  EXPECT_EQ(parse_code("pg 2\n0: 5\n1: 0\n"), ErrorCode::VertexOutOfRange);
  EXPECT_EQ(parse_code("pg 2\n0: 0\n1:\n"), ErrorCode::LoopEdge);
  EXPECT_EQ(parse_code("pg 2\n0: 1\n1:\n"), ErrorCode::AsymmetricAdjacency);
  EXPECT_EQ(parse_code("pg 5\n0: 1 2 3 4\n1: 0 2 3 4\n2: 0 1 3 4\n3: 0 1 2 4\n4: 0 1 2 3\n"),
            ErrorCode::NotPlanarEmbedding);
}

TEST(Instances, WriterRejectsDeletedIds) {
  const auto g = named("octahedron");
  const Vertex gone[] = {2};
  EXPECT_THROW(write_pg(remove_vertices(g, gone)), Error);
}

TEST(Instances, UnknownNameIsReported) {
  try {
    named("dodecahedron");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownName);
  }
}

TEST(Instances, GeneratorRejectsTinySizes) {
  GenSpec spec;
  spec.n = 3;
  EXPECT_THROW(generate(spec), Error);
  spec.n = 4;
  EXPECT_EQ(generate(spec).edge_count(), 6u);
}
