#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "../support/oracles.hpp"
#include "planar5/catalog.hpp"
#include "planar5/error.hpp"

using namespace planar5;

namespace {

const ConfigurationSpec& entry(const std::string& id) {
  for (const auto& e : builtin_catalog()) {
    if (e.id == id) return e;
  }
  throw std::runtime_error("no entry " + id);
}

std::vector<bool> none_deleted(const ConfigurationSpec& s) { return std::vector<bool>(static_cast<std::size_t>(s.size()), false); }

}  // namespace

TEST(Catalog, EveryFamilyIsPresent) {
  std::set<Family> seen;
  for (const auto& e : builtin_catalog()) seen.insert(e.family);
  for (int f = 1; f <= 8; ++f) EXPECT_TRUE(seen.count(static_cast<Family>(f))) << f;
  EXPECT_EQ(builtin_catalog().front().id, "F1");
}

TEST(Catalog, ScanOrderIsFamilyMajor) {
  const std::vector<Family> order = {Family::F1, Family::F2, Family::F3, Family::F4,
                                     Family::F7, Family::F8, Family::F5, Family::F6};
  std::size_t k = 0;
  for (const auto& e : builtin_catalog()) {
    while (k < order.size() && order[k] != e.family) ++k;
    ASSERT_LT(k, order.size()) << e.id << " out of order";
  }
}

TEST(Catalog, EntriesAreWellFormed) {
  for (const auto& e : builtin_catalog()) {
    EXPECT_NO_THROW(check_well_formed(e)) << e.id;
    for (const auto& v : e.vertices) EXPECT_EQ(v.cap, v.h_degree() + v.halfedges()) << e.id << ' ' << v.label;
  }
}

TEST(Catalog, EveryEntryValidates) {
  for (const auto& e : builtin_catalog()) {
    const auto report = validate_entry(e);
    EXPECT_TRUE(report.passed()) << e.id << " fails " << report.first_failure()->name;
    EXPECT_FALSE(report.scenarios.empty()) << e.id;
    EXPECT_NO_THROW(certify(e)) << e.id;
  }
}

TEST(Catalog, TrialEntriesIncludeAllBlocked) {
  for (const auto& e : builtin_catalog()) {
    if (e.scheme != Scheme::TrialSequence) continue;
    const auto report = validate_entry(e);
    ASSERT_EQ(report.scenarios.size(), e.trial.size() + 1) << e.id;
    EXPECT_EQ(report.scenarios.back().name, "all-blocked") << e.id;
  }
}

TEST(Catalog, FiveWheelTraceHasFourFifthScenarios) {
  const auto& e = entry("F2.sep");
  const auto report = validate_entry(e);
  ASSERT_EQ(report.scenarios.size(), 5u);
  const std::vector<std::string> labels = {"v1", "v3", "v2", "v6"};  // cap 8, cap 7, cap 6, hub
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& s = report.scenarios[i];
    EXPECT_EQ(s.status, ScenarioStatus::Pass) << s.name;
    ASSERT_TRUE(s.fifth.has_value());
    EXPECT_EQ(e.vertices[static_cast<std::size_t>(*s.fifth)].label, labels[i]);
    EXPECT_EQ(s.blocked.size(), i);
  }
  EXPECT_EQ(e.vertices[1].cap, 8);
  EXPECT_EQ(e.vertices[3].cap, 7);
  EXPECT_EQ(e.vertices[0].cap, 5);
  // Blocking the hub needs a halfedge it does not have.
  EXPECT_EQ(report.scenarios[4].status, ScenarioStatus::Unreachable);
}

TEST(Catalog, GreedyPeelAgreesWithExhaustiveSearch) {
  // The greedy peel is order-independent: whenever any deletion order works,
  // the greedy one finds it.
  for (const auto& e : builtin_catalog()) {
    if (e.scheme != Scheme::TrialSequence) continue;
    for (const auto& s : validate_entry(e).scenarios) {
      if (s.status == ScenarioStatus::Unreachable) continue;
      std::vector<bool> deleted = none_deleted(e);
      if (s.fifth) deleted[static_cast<std::size_t>(*s.fifth)] = true;
      std::vector<int> lowering(static_cast<std::size_t>(e.size()), 0);
      for (int b : s.blocked) lowering[static_cast<std::size_t>(b)]++;
      const bool exists = oracle::peel_order_exists(e.adjacency(), e.caps(), deleted, lowering);
      EXPECT_EQ(s.status == ScenarioStatus::Pass, exists) << e.id << ' ' << s.name;
    }
  }
}

TEST(Catalog, GreedyPeelMatchesOracleOnRandomInputs) {
  // Small random graphs with random caps and lowerings.
  std::uint64_t state = 7;
  auto next = [&] {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 3 + static_cast<int>(next() % 6);
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (next() % 2) {
          adj[static_cast<std::size_t>(u)].push_back(v);
          adj[static_cast<std::size_t>(v)].push_back(u);
        }
      }
    }
    std::vector<int> caps(static_cast<std::size_t>(n)), lowering(static_cast<std::size_t>(n));
    std::vector<bool> deleted(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      const auto i = static_cast<std::size_t>(v);
      caps[i] = static_cast<int>(adj[i].size() + next() % 4);
      lowering[i] = static_cast<int>(next() % 2);
      deleted[i] = next() % 6 == 0;
    }
    const auto greedy = blocked_peel(adj, caps, deleted, lowering);
    EXPECT_EQ(greedy.ok, oracle::peel_order_exists(adj, caps, deleted, lowering)) << "trial " << trial;
  }
}

TEST(Catalog, LoweringACapKeepsEntriesValid) {
  for (const auto& e : builtin_catalog()) {
    if (e.parametric()) continue;
    for (int v = 0; v < e.size(); ++v) {
      const auto lower = with_lowered_cap(e, v);
      if (!lower) {
        EXPECT_EQ(e.vertices[static_cast<std::size_t>(v)].halfedges(), 0);
        continue;
      }
      EXPECT_EQ(lower->vertices[static_cast<std::size_t>(v)].cap, e.vertices[static_cast<std::size_t>(v)].cap - 1);
      EXPECT_TRUE(validate_entry(*lower).passed()) << e.id << " lowered at " << e.vertices[static_cast<std::size_t>(v)].label;
    }
  }
}

TEST(Catalog, MirrorReversesRotations) {
  const auto& e = entry("F3.23");
  const auto m = mirrored(e, "x");
  EXPECT_EQ(m.id, "x");
  for (std::size_t i = 0; i < e.vertices.size(); ++i) {
    auto r = e.vertices[i].rotation;
    std::reverse(r.begin(), r.end());
    // Equal up to rotation of the cyclic sequence.
    const auto& mr = m.vertices[i].rotation;
    bool found = false;
    for (std::size_t s = 0; s < r.size() && !found; ++s) {
      std::rotate(r.begin(), r.begin() + 1, r.end());
      found = r == mr;
    }
    EXPECT_TRUE(found) << e.vertices[i].label;
  }
  EXPECT_TRUE(validate_entry(m).passed());
}

TEST(Catalog, HubOfDegreeEightHasFiveLeaves) {
  const auto spec = hub_configuration(8, {0, 1, 2, 3, 4});
  EXPECT_EQ(spec.size(), 6);
  EXPECT_EQ(spec.leaf_positions.size(), 5u);
  EXPECT_EQ(spec.vertices[0].cap, 8);
  for (int i = 1; i < spec.size(); ++i) EXPECT_EQ(spec.vertices[static_cast<std::size_t>(i)].cap, 5);
  EXPECT_TRUE(validate_entry(spec).passed());
}

TEST(Catalog, ParametricHubCoversAllSeparatorSplits) {
  const auto& e = entry("F7");
  EXPECT_TRUE(e.parametric());
  const auto report = validate_entry(e);
  EXPECT_TRUE(report.passed());
  for (int d = 8; d <= 10; ++d) {
    std::set<int> components;
    int triples = 0;
    const std::string prefix = "d=" + std::to_string(d) + "/";
    std::set<std::string> seen;
    for (const auto& s : report.scenarios) {
      if (s.name.rfind(prefix, 0) != 0) continue;
      components.insert(s.components);
      seen.insert(s.name.substr(0, s.name.find("/S=")));
    }
    triples = static_cast<int>(seen.size());
    EXPECT_EQ(components, (std::set<int>{1, 2, 3})) << d;
    EXPECT_EQ(triples, d * (d - 1) * (d - 2) / 6) << d;
  }
}

TEST(Catalog, NineHubHasLeafRunsThreeAndTwo) {
  const auto& e = entry("F8");
  EXPECT_EQ(e.hub_degree, 9);
  EXPECT_EQ(e.leaf_positions, (std::vector<int>{0, 1, 2, 5, 6}));
  const auto report = validate_entry(e);
  EXPECT_TRUE(report.passed());
  // Four separators give sixteen fifth-colored subsets.
  std::set<std::string> subsets;
  for (const auto& s : report.scenarios) subsets.insert(s.name.substr(0, s.name.find('/')));
  EXPECT_EQ(subsets.size(), 16u);
}

TEST(Catalog, UnsoundEntryFailsCertification) {
  // Leaves raised to cap 7 never peel.
  auto spec = hub_configuration(8, {0, 1, 2, 3, 4});
  for (std::size_t i = 1; i < spec.vertices.size(); ++i) {
    spec.vertices[i].cap += 2;
    spec.vertices[i].rotation.push_back(RotationItem::halfedges(2));
  }
  try {
    certify(spec);
    FAIL() << "unsound entry certified";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ValidationFailure);
    EXPECT_NE(std::string(e.what()).find("stuck"), std::string::npos);
  }
}

TEST(Catalog, MalformedSpecIsRejected) {
  auto spec = entry("F2.sep");
  spec.vertices[1].cap += 1;
  EXPECT_THROW(check_well_formed(spec), Error);
}
