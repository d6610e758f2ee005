#include "patch_builder.hpp"

#include <algorithm>

#include "planar5/error.hpp"

namespace planar5::detail {

namespace {

constexpr int kOutside = -1;
constexpr int kUnknown = -2;

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorCode::InvalidArgument, "patch: " + msg); }

// Converts a cyclic label sequence into items, merging outside runs. The
// result starts at an edge item whenever one exists.
std::vector<RotationItem> items_from_cycle(std::vector<int> cycle) {
  const auto first_edge = std::find_if(cycle.begin(), cycle.end(), [](int x) { return x >= 0; });
  if (first_edge != cycle.end()) std::rotate(cycle.begin(), first_edge, cycle.end());
  std::vector<RotationItem> items;
  for (int x : cycle) {
    if (x >= 0) {
      items.push_back(RotationItem::edge(x));
    } else if (!items.empty() && !items.back().is_edge()) {
      items.back().value++;
    } else {
      items.push_back(RotationItem::halfedges(1));
    }
  }
  return items;
}

}  // namespace

PatchBuilder& PatchBuilder::vertex(const std::string& label, int cap) {
  if (std::find(labels_.begin(), labels_.end(), label) != labels_.end()) fail("duplicate label " + label);
  labels_.push_back(label);
  caps_.push_back(cap);
  return *this;
}

int PatchBuilder::id(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) fail("unknown label " + label);
  return static_cast<int>(it - labels_.begin());
}

PatchBuilder& PatchBuilder::wheel(const std::string& center, std::vector<std::string> link) {
  Wheel w{id(center), {}};
  for (const auto& l : link) w.link.push_back(l == "*" ? kOutside : id(l));
  for (const auto& other : wheels_) {
    if (other.center == w.center) fail("second wheel at " + center);
  }
  wheels_.push_back(std::move(w));
  return *this;
}

std::vector<TemplateVertex> PatchBuilder::build(bool mirror) const {
  auto wheels = wheels_;
  if (mirror) {
    for (auto& w : wheels) std::reverse(w.link.begin(), w.link.end());
  }
  const int n = static_cast<int>(labels_.size());

  // Fragments (next, center, prev) per member vertex.
  struct Fragment {
    int next, center, prev;
  };
  std::vector<std::vector<Fragment>> fragments(static_cast<std::size_t>(n));
  for (const auto& w : wheels) {
    const int len = static_cast<int>(w.link.size());
    for (int p = 0; p < len; ++p) {
      const int x = w.link[static_cast<std::size_t>(p)];
      if (x < 0) continue;
      fragments[static_cast<std::size_t>(x)].push_back(
          {w.link[static_cast<std::size_t>((p + 1) % len)], w.center,
           w.link[static_cast<std::size_t>((p + len - 1) % len)]});
    }
  }

  std::vector<TemplateVertex> out(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    auto& tv = out[static_cast<std::size_t>(x)];
    tv.label = labels_[static_cast<std::size_t>(x)];
    tv.cap = caps_[static_cast<std::size_t>(x)];
    const auto& frags = fragments[static_cast<std::size_t>(x)];

    const auto own = std::find_if(wheels.begin(), wheels.end(), [x](const Wheel& w) { return w.center == x; });
    if (own != wheels.end()) {
      const int len = static_cast<int>(own->link.size());
      if (len != tv.cap) fail("wheel at " + tv.label + " has length " + std::to_string(len) + " but cap " + std::to_string(tv.cap));
      for (const auto& f : frags) {
        const auto it = std::find(own->link.begin(), own->link.end(), f.center);
        if (it == own->link.end()) fail(tv.label + " misses wheel neighbor " + labels_[static_cast<std::size_t>(f.center)]);
        const int q = static_cast<int>(it - own->link.begin());
        if (own->link[static_cast<std::size_t>((q + len - 1) % len)] != f.next ||
            own->link[static_cast<std::size_t>((q + 1) % len)] != f.prev) {
          fail("wheel at " + tv.label + " disagrees with wheel at " + labels_[static_cast<std::size_t>(f.center)]);
        }
      }
      tv.rotation = items_from_cycle(own->link);
      continue;
    }

    if (frags.empty()) fail(tv.label + " is not attached to any wheel");
    std::vector<int> succ(static_cast<std::size_t>(n), kUnknown);
    std::vector<int> pred(static_cast<std::size_t>(n), kUnknown);
    std::vector<bool> member(static_cast<std::size_t>(n), false);
    auto link = [&](int a, int b) {
      // a immediately followed by b; either may be outside.
      if (a >= 0) {
        auto& s = succ[static_cast<std::size_t>(a)];
        if (s != kUnknown && s != b) fail("conflicting rotation order at " + tv.label);
        s = b;
        member[static_cast<std::size_t>(a)] = true;
      }
      if (b >= 0) {
        auto& p = pred[static_cast<std::size_t>(b)];
        if (p != kUnknown && p != a) fail("conflicting rotation order at " + tv.label);
        p = a;
        member[static_cast<std::size_t>(b)] = true;
      }
    };
    for (const auto& f : frags) {
      link(f.next, f.center);
      link(f.center, f.prev);
    }

    std::vector<int> starts;
    int members = 0;
    for (int v = 0; v < n; ++v) {
      if (!member[static_cast<std::size_t>(v)]) continue;
      ++members;
      if (pred[static_cast<std::size_t>(v)] < 0) starts.push_back(v);
    }
    std::vector<int> chain;
    if (starts.empty()) {
      // Closed cycle of H-neighbors.
      int v = static_cast<int>(std::find(member.begin(), member.end(), true) - member.begin());
      const int first = v;
      do {
        chain.push_back(v);
        v = succ[static_cast<std::size_t>(v)];
      } while (v != first && v >= 0);
    } else {
      if (starts.size() > 1) fail(tv.label + " has several H-neighbor chains; declare its wheel");
      for (int v = starts.front(); v >= 0; v = succ[static_cast<std::size_t>(v)]) chain.push_back(v);
    }
    if (static_cast<int>(chain.size()) != members) fail(tv.label + " has a broken H-neighbor chain");
    const int run = tv.cap - members;
    if (run < 0) fail(tv.label + " has more H-neighbors than its cap");
    if (starts.empty() && run > 0) fail(tv.label + " is enclosed by H but has halfedges");
    for (int v : chain) tv.rotation.push_back(RotationItem::edge(v));
    if (run > 0) tv.rotation.push_back(RotationItem::halfedges(run));
  }
  return out;
}

}  // namespace planar5::detail
