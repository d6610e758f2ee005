#include "planar5/catalog.hpp"

#include <algorithm>
#include <numeric>

#include "patch_builder.hpp"
#include "planar5/error.hpp"

namespace planar5 {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::F1: return "F1";
    case Family::F2: return "F2";
    case Family::F3: return "F3";
    case Family::F4: return "F4";
    case Family::F5: return "F5";
    case Family::F6: return "F6";
    case Family::F7: return "F7";
    case Family::F8: return "F8";
  }
  return "F?";
}

std::string_view scheme_name(Scheme s) {
  switch (s) {
    case Scheme::PlainZero: return "PlainZero";
    case Scheme::TrialSequence: return "TrialSequence";
    case Scheme::VirtualHub: return "VirtualHub";
    case Scheme::NinePattern: return "NinePattern";
  }
  return "?";
}

int TemplateVertex::h_degree() const {
  return static_cast<int>(std::count_if(rotation.begin(), rotation.end(),
                                        [](const RotationItem& it) { return it.is_edge(); }));
}

int TemplateVertex::halfedges() const {
  int total = 0;
  for (const auto& it : rotation) total += it.is_edge() ? 0 : it.value;
  return total;
}

std::vector<std::pair<int, int>> ConfigurationSpec::h_edges() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < size(); ++v) {
    for (const auto& it : vertices[static_cast<std::size_t>(v)].rotation) {
      if (it.is_edge() && v < it.value) out.emplace_back(v, it.value);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> ConfigurationSpec::adjacency() const {
  std::vector<std::vector<int>> adj(vertices.size());
  for (int v = 0; v < size(); ++v) {
    for (const auto& it : vertices[static_cast<std::size_t>(v)].rotation) {
      if (it.is_edge()) adj[static_cast<std::size_t>(v)].push_back(it.value);
    }
  }
  return adj;
}

std::vector<int> ConfigurationSpec::caps() const {
  std::vector<int> out;
  for (const auto& tv : vertices) out.push_back(tv.cap);
  return out;
}

void check_well_formed(const ConfigurationSpec& spec) {
  auto fail = [&](const std::string& msg) {
    throw Error(ErrorCode::InvalidArgument, "entry " + spec.id + ": " + msg);
  };
  const int n = spec.size();
  if (n == 0) fail("no vertices");
  const auto adj = spec.adjacency();
  for (int v = 0; v < n; ++v) {
    const auto& tv = spec.vertices[static_cast<std::size_t>(v)];
    if (tv.cap != tv.h_degree() + tv.halfedges()) fail("cap mismatch at " + tv.label);
    for (const auto& it : tv.rotation) {
      if (!it.is_edge() && it.value <= 0) fail("empty halfedge run at " + tv.label);
    }
    auto nb = adj[static_cast<std::size_t>(v)];
    for (int u : nb) {
      if (u < 0 || u >= n || u == v) fail("bad H-edge at " + tv.label);
      const auto& back = adj[static_cast<std::size_t>(u)];
      if (std::find(back.begin(), back.end(), v) == back.end()) fail("asymmetric H-edge at " + tv.label);
    }
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) fail("repeated H-edge at " + tv.label);
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++reached;
    for (int u : adj[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(u)]) {
        seen[static_cast<std::size_t>(u)] = true;
        stack.push_back(u);
      }
    }
  }
  if (reached != n) fail("H is disconnected");

  switch (spec.scheme) {
    case Scheme::PlainZero:
      if (n != 1) fail("PlainZero entries have one vertex");
      break;
    case Scheme::TrialSequence:
      if (n < 6) fail("trial sequences need at least six vertices");
      if (spec.trial.empty()) fail("empty trial sequence");
      for (int t : spec.trial) {
        if (t < 0 || t >= n) fail("trial vertex out of range");
      }
      break;
    case Scheme::VirtualHub:
    case Scheme::NinePattern: {
      const int d = spec.vertices[0].cap;
      if (static_cast<int>(spec.leaf_positions.size()) != n - 1) fail("leaf positions do not match leaves");
      for (int p : spec.leaf_positions) {
        if (p < 0 || p >= d) fail("leaf position out of range");
      }
      if (n < 6) fail("hub configurations need at least six vertices");
      break;
    }
  }
}

namespace {

using detail::PatchBuilder;

ConfigurationSpec make_entry(std::string id, Family family, const PatchBuilder& b, bool mirror,
                             const std::vector<std::string>& trial) {
  ConfigurationSpec spec;
  spec.id = std::move(id);
  spec.family = family;
  spec.scheme = Scheme::TrialSequence;
  spec.vertices = b.build(mirror);
  for (const auto& t : trial) spec.trial.push_back(b.id(t));
  check_well_formed(spec);
  return spec;
}

// Adds the entry and, unless it is reflection-symmetric, its mirror image.
void add_variant(std::vector<ConfigurationSpec>& out, const std::string& id, Family family,
                 const PatchBuilder& b, const std::vector<std::string>& trial, bool symmetric = false) {
  out.push_back(make_entry(id, family, b, false, trial));
  if (!symmetric) out.push_back(make_entry(id + "m", family, b, true, trial));
}

void add_five_wheels(std::vector<ConfigurationSpec>& out) {
  // Hub of cap 5 inside a 5-cycle with caps {6,6,6,7,8}.
  {
    PatchBuilder b;  // 8 and 7 separated by a 6
    b.vertex("v6", 5).vertex("v1", 8).vertex("v2", 6).vertex("v3", 7).vertex("v4", 6).vertex("v5", 6);
    b.wheel("v6", {"v1", "v2", "v3", "v4", "v5"});
    add_variant(out, "F2.sep", Family::F2, b, {"v1", "v3", "v2", "v6"});
  }
  {
    PatchBuilder b;  // 8 and 7 adjacent
    b.vertex("v6", 5).vertex("v1", 8).vertex("v2", 7).vertex("v3", 6).vertex("v4", 6).vertex("v5", 6);
    b.wheel("v6", {"v1", "v2", "v3", "v4", "v5"});
    add_variant(out, "F2.adj", Family::F2, b, {"v1", "v2", "v3", "v6"});
  }
}

void add_seven_four_fives_eight(std::vector<ConfigurationSpec>& out) {
  // v1 (cap 7) sees v2 (cap 8) flanked by v3, v4 and two more fives v5, v6
  // at link positions 2..5.
  struct Placement {
    int p5, p6;
    bool symmetric;
  };
  const Placement placements[] = {{2, 3, false}, {2, 4, false}, {2, 5, true}, {3, 4, true}};
  for (const auto& pl : placements) {
    std::vector<std::string> link = {"v2", "v3", "*", "*", "*", "*", "v4"};
    link[static_cast<std::size_t>(pl.p5)] = "v5";
    link[static_cast<std::size_t>(pl.p6)] = "v6";
    PatchBuilder b;
    b.vertex("v1", 7).vertex("v2", 8).vertex("v3", 5).vertex("v4", 5).vertex("v5", 5).vertex("v6", 5);
    b.wheel("v1", link);
    const std::string id = "F3." + std::to_string(pl.p5) + std::to_string(pl.p6);
    add_variant(out, id, Family::F3, b, {"v2", "v1", "v5"}, pl.symmetric);
  }
}

void add_seven_path_of_fives(std::vector<ConfigurationSpec>& out) {
  // v1 (cap 7) with the path v2 v3 v4 v5 of fives on its link; v6 is one of
  // the three neighbors of v2 off v1's link: next to v1 (cap 7), the middle
  // one (cap 6), or next to v3 (cap 7).
  struct Variant {
    const char* name;
    int cap;
    int slot;  // position in v2's wheel: 2, 3, or 4
  };
  const Variant variants[] = {{"near", 7, 2}, {"mid", 6, 3}, {"far", 7, 4}};
  for (const auto& var : variants) {
    std::vector<std::string> hub = {"v2", "v3", "v4", "v5", "*", "*", var.slot == 2 ? "v6" : "*"};
    std::vector<std::string> end = {"v3", "v1", "*", "*", "*"};
    end[static_cast<std::size_t>(var.slot)] = "v6";
    PatchBuilder b;
    b.vertex("v1", 7).vertex("v2", 5).vertex("v3", 5).vertex("v4", 5).vertex("v5", 5).vertex("v6", var.cap);
    b.wheel("v1", hub).wheel("v2", end);
    add_variant(out, std::string("F4.") + var.name, Family::F4, b, {"v6", "v1", "v2"});
  }
}

void add_two_thirds_with_five(std::vector<ConfigurationSpec>& out) {
  // z (cap 5) with link (outside, a, b, c, d); one of a..d has cap 7, the
  // rest cap 6. w (cap 5) sits on a's link two steps past z.
  const char* names[] = {"a", "b", "c", "d"};
  const char* partner[] = {"b", "a", "b", "c"};
  for (int seven = 0; seven < 4; ++seven) {
    PatchBuilder b;
    b.vertex("z", 5);
    for (int i = 0; i < 4; ++i) b.vertex(names[i], i == seven ? 7 : 6);
    b.vertex("w", 5);
    b.wheel("z", {"*", "a", "b", "c", "d"});
    std::vector<std::string> around_a = {"b", "z", "*", "w", "*", "*"};
    if (seven == 0) around_a.push_back("*");
    b.wheel("a", around_a);
    add_variant(out, std::string("F5.") + names[seven], Family::F5, b, {names[seven], partner[seven], "z"});
  }
}

void add_one_with_half(std::vector<ConfigurationSpec>& out) {
  // Adjacent fives v0, v8; v0's other neighbors a, b, v1 have cap 6, and one
  // more cap-6 neighbor t of v8 (next to b, or next to the outside vertex
  // shared with v0).
  {
    PatchBuilder b;
    b.vertex("v0", 5).vertex("v1", 6).vertex("a", 6).vertex("b", 6).vertex("v8", 5).vertex("t", 6);
    b.wheel("v0", {"*", "v1", "a", "b", "v8"});
    b.wheel("v8", {"*", "v0", "b", "t", "*"});
    add_variant(out, "F6.inner", Family::F6, b, {"b", "v0"});
  }
  {
    PatchBuilder b;
    b.vertex("v0", 5).vertex("v1", 6).vertex("a", 6).vertex("b", 6).vertex("v8", 5).vertex("t", 6);
    b.wheel("v0", {"*", "v1", "a", "b", "v8"});
    b.wheel("v8", {"*", "v0", "b", "*", "t"});
    add_variant(out, "F6.outer", Family::F6, b, {"t", "v0"});
  }
}

std::vector<ConfigurationSpec> make_catalog() {
  std::vector<ConfigurationSpec> out;

  ConfigurationSpec low;
  low.id = "F1";
  low.family = Family::F1;
  low.scheme = Scheme::PlainZero;
  low.vertices = {TemplateVertex{"v", 4, {RotationItem::halfedges(4)}}};
  check_well_formed(low);
  out.push_back(low);

  add_five_wheels(out);
  add_seven_four_fives_eight(out);
  add_seven_path_of_fives(out);

  // Parametric; the stored template is the d = 8 instance with consecutive leaves.
  auto hub = hub_configuration(8, {0, 1, 2, 3, 4}, Family::F7);
  hub.id = "F7";
  hub.hub_degree = 0;
  out.push_back(hub);

  auto nine = hub_configuration(9, {0, 1, 2, 5, 6}, Family::F8);
  nine.id = "F8";
  out.push_back(nine);

  add_two_thirds_with_five(out);
  add_one_with_half(out);
  return out;
}

}  // namespace

const std::vector<ConfigurationSpec>& builtin_catalog() {
  static const std::vector<ConfigurationSpec> catalog = make_catalog();
  return catalog;
}

ConfigurationSpec hub_configuration(int d, std::vector<int> leaf_positions, Family family) {
  std::sort(leaf_positions.begin(), leaf_positions.end());
  PatchBuilder b;
  b.vertex("hub", d);
  std::vector<std::string> link(static_cast<std::size_t>(d), "*");
  for (std::size_t i = 0; i < leaf_positions.size(); ++i) {
    const std::string label = "l" + std::to_string(leaf_positions[i]);
    b.vertex(label, 5);
    link[static_cast<std::size_t>(leaf_positions[i])] = label;
  }
  b.wheel("hub", link);

  ConfigurationSpec spec;
  spec.id = std::string(family_name(family)) + ".d" + std::to_string(d);
  spec.family = family;
  spec.scheme = family == Family::F8 ? Scheme::NinePattern : Scheme::VirtualHub;
  spec.vertices = b.build();
  spec.hub_degree = d;
  spec.leaf_positions = std::move(leaf_positions);
  check_well_formed(spec);
  return spec;
}

ConfigurationSpec mirrored(const ConfigurationSpec& spec, std::string id) {
  ConfigurationSpec out = spec;
  out.id = std::move(id);
  for (auto& tv : out.vertices) std::reverse(tv.rotation.begin(), tv.rotation.end());
  if (spec.hub_degree > 0) {
    // Leaf i keeps its template id; its link position is reflected.
    for (auto& p : out.leaf_positions) p = (spec.hub_degree - p) % spec.hub_degree;
  }
  return out;
}

std::optional<ConfigurationSpec> with_lowered_cap(const ConfigurationSpec& spec, int v) {
  ConfigurationSpec out = spec;
  auto& tv = out.vertices[static_cast<std::size_t>(v)];
  const auto run = std::find_if(tv.rotation.begin(), tv.rotation.end(),
                                [](const RotationItem& it) { return !it.is_edge(); });
  if (run == tv.rotation.end()) return std::nullopt;
  if (--run->value == 0) tv.rotation.erase(run);
  tv.cap--;
  return out;
}

}  // namespace planar5
