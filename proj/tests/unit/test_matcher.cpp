#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "../support/oracles.hpp"
#include "planar5/instances.hpp"
#include "planar5/matcher.hpp"

using namespace planar5;

namespace {

constexpr std::uint32_t bit(int f) { return 1u << f; }

// Hub 0 inside a k-cycle 1..k, every rim vertex also joined to pole k+1.
std::vector<std::vector<Vertex>> bipyramid_faces(int k) {
  std::vector<std::vector<Vertex>> faces;
  for (int i = 0; i < k; ++i) {
    const Vertex r = 1 + i, s = 1 + (i + 1) % k;
    faces.push_back({0, r, s});
    faces.push_back({s, r, k + 1});
  }
  return faces;
}

// Degree-9 hub whose rim degrees are 5,4,5,6,6,5,5,6,6 around the cycle:
// five low neighbors in runs of three and two, four separators of degree 6.
EmbeddedGraph nine_hub_witness() {
  auto faces = bipyramid_faces(9);
  Vertex next = 11;
  for (int p : {2, 3, 4, 6, 7, 8}) {
    // Outer face between rim positions p and p+1 sits at index 2p + 1.
    oracle::split_face(faces, static_cast<std::size_t>(2 * p + 1), next++);
  }
  return embedding_from_faces(next, faces);
}

std::set<Vertex> as_set(const std::vector<Vertex>& vs) { return {vs.begin(), vs.end()}; }

std::vector<EmbeddedGraph> shaped_corpus() {
  std::vector<EmbeddedGraph> out;
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    GenSpec spec;
    spec.seed = seed;
    spec.n = 60 + 40 * static_cast<int>(seed % 4);
    spec.flips = 2 * spec.n;
    spec.min_degree_5 = true;
    out.push_back(generate(spec));
  }
  return out;
}

}  // namespace

TEST(Matcher, OctahedronMatchesLowDegreeFirst) {
  const auto g = named("octahedron");
  const auto occ = find_reducible(g.view());
  ASSERT_TRUE(occ);
  EXPECT_EQ(occ->family(), Family::F1);
  EXPECT_EQ(occ->anchor, 0);
  EXPECT_EQ(occ->map, std::vector<Vertex>{0});
  EXPECT_TRUE(verify_occurrence(g.view(), *occ));
}

TEST(Matcher, IcosahedronMatchesFiveWheel) {
  const auto g = named("icosahedron");
  EXPECT_FALSE(find_low_degree(g.view()));
  const auto occ = find_reducible(g.view());
  ASSERT_TRUE(occ);
  EXPECT_EQ(occ->family(), Family::F2);
  EXPECT_EQ(occ->entry_id, "F2.sep");
  EXPECT_EQ(occ->anchor, 0);
  EXPECT_EQ(occ->offset, 0);
  ASSERT_EQ(occ->map.size(), 6u);
  EXPECT_EQ(occ->map[0], 0);
  // The rim is the hub's whole link.
  const auto link = g.rotation(0);
  EXPECT_EQ(as_set({occ->map.begin() + 1, occ->map.end()}), as_set({link.begin(), link.end()}));
  EXPECT_TRUE(verify_occurrence(g.view(), *occ));
}

TEST(Matcher, DisabledFamiliesOnMinDegreeFiveThrowBreach) {
  const auto g = named("icosahedron");
  try {
    find_reducible(g.view(), MatchOptions{bit(7)});
    FAIL() << "expected a completeness breach";
  } catch (const CompletenessBreach& e) {
    EXPECT_EQ(e.code(), ErrorCode::CompletenessBreach);
    EXPECT_EQ(e.graph(), g);
  }
}

TEST(Matcher, NoMatchWithLowDegreeReturnsEmpty) {
  const auto g = named("octahedron");
  EXPECT_FALSE(find_reducible(g.view(), MatchOptions{bit(8)}));
}

TEST(Matcher, TamperedOccurrenceFailsVerification) {
  const auto g = named("icosahedron");
  auto occ = *find_reducible(g.view());
  std::swap(occ.map[1], occ.map[3]);
  EXPECT_FALSE(verify_occurrence(g.view(), occ));
  occ = *find_reducible(g.view());
  occ.map[2] = occ.map[1];
  EXPECT_FALSE(verify_occurrence(g.view(), occ));
}

TEST(Matcher, EightHubHasFiveLeavesAndThreeSeparators) {
  const auto g = embedding_from_faces(10, bipyramid_faces(8));
  ASSERT_EQ(g.degree(0), 8);
  const auto occ = match_hub(g.view(), 0);
  ASSERT_TRUE(occ);
  EXPECT_EQ(occ->family(), Family::F7);
  EXPECT_EQ(occ->entry_id, "F7");
  EXPECT_EQ(occ->hub_degree(), 8);
  EXPECT_EQ(occ->map.size(), 6u);
  EXPECT_EQ(occ->separators.size(), 3u);
  // The first five link positions are the leaves.
  std::set<Vertex> expect;
  for (int p = 0; p < 5; ++p) expect.insert(g.view().at(0, p));
  EXPECT_EQ(as_set({occ->map.begin() + 1, occ->map.end()}), expect);
  EXPECT_TRUE(verify_occurrence(g.view(), *occ));
}

TEST(Matcher, HubRequiresEnoughLowNeighbors) {
  const auto g = nine_hub_witness();
  const auto low = oracle::low_link_positions(g.view(), 0);
  ASSERT_EQ(g.degree(0), 9);
  ASSERT_EQ(low.size(), 5u);
  EXPECT_FALSE(match_hub(g.view(), 0));
}

TEST(Matcher, NineHubPatternIsFound) {
  const auto g = nine_hub_witness();
  const std::vector<int> expect_deg = {5, 4, 5, 6, 6, 5, 5, 6, 6};
  for (int p = 0; p < 9; ++p) ASSERT_EQ(g.degree(1 + p), expect_deg[static_cast<std::size_t>(p)]) << p;
  const auto occ = find_reducible(g.view(), MatchOptions{bit(7) | bit(8)});
  ASSERT_TRUE(occ);
  EXPECT_EQ(occ->family(), Family::F8);
  EXPECT_EQ(occ->anchor, 0);
  EXPECT_EQ(as_set(occ->separators), (std::set<Vertex>{4, 5, 8, 9}));
  EXPECT_TRUE(verify_occurrence(g.view(), *occ));
}

TEST(Matcher, HubMatchAgreesWithLinkScan) {
  int hubs = 0;
  for (const auto& g : shaped_corpus()) {
    const auto v = g.view();
    for (Vertex x = 0; x < static_cast<Vertex>(g.vertex_count()); ++x) {
      const int d = g.degree(x);
      const auto low = oracle::low_link_positions(v, x);
      const bool expect = d >= 8 && static_cast<int>(low.size()) >= d - 3;
      const auto occ = match_hub(v, x);
      ASSERT_EQ(occ.has_value(), expect) << "vertex " << x;
      if (!occ) continue;
      ++hubs;
      std::set<Vertex> leaves;
      for (int i = 0; i < d - 3; ++i) leaves.insert(v.at(x, low[static_cast<std::size_t>(i)]));
      EXPECT_EQ(as_set({occ->map.begin() + 1, occ->map.end()}), leaves);
      EXPECT_TRUE(verify_occurrence(v, *occ));
    }
  }
  RecordProperty("hubs", hubs);
}

TEST(Matcher, EveryFamilyOccurrenceVerifies) {
  std::set<Family> found;
  for (const auto& g : shaped_corpus()) {
    for (int f = 2; f <= 8; ++f) {
      const auto occ = find_reducible(g.view(), MatchOptions{bit(f)});
      if (!occ) continue;
      found.insert(occ->family());
      EXPECT_EQ(static_cast<int>(occ->family()), f);
      EXPECT_TRUE(verify_occurrence(g.view(), *occ)) << occ->entry_id;
      for (std::size_t i = 0; i < occ->map.size(); ++i) {
        EXPECT_LE(g.degree(occ->map[i]), occ->spec.vertices[i].cap) << occ->entry_id;
      }
    }
  }
  EXPECT_TRUE(found.count(Family::F2));
}

TEST(Matcher, FindNearStaysWithinRadius) {
  for (const auto& g : shaped_corpus()) {
    const auto v = g.view();
    for (Vertex x = 0; x < static_cast<Vertex>(g.vertex_count()); x += 7) {
      const auto occ = find_near(v, x);
      if (!occ) continue;
      const bool near = occ->anchor == x || v.adjacent(occ->anchor, x) ||
                        std::any_of(v.rotation(x).begin(), v.rotation(x).end(),
                                    [&](Vertex y) { return v.adjacent(y, occ->anchor); });
      EXPECT_TRUE(near) << x;
      EXPECT_TRUE(verify_occurrence(v, *occ));
    }
  }
}

TEST(Matcher, ShapedGraphsAlwaysMatch) {
  for (const auto& g : shaped_corpus()) EXPECT_NO_THROW(EXPECT_TRUE(find_reducible(g.view())));
}
