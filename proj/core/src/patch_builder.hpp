#pragma once

// Builds rotation templates from wheel declarations.
//
// A wheel lists the full counterclockwise link of one template vertex, using
// "*" for vertices outside H. Every other template vertex gets its rotation
// from the wheels it sits on: a vertex at link position p of center c sees
// (link[p+1], c, link[p-1]) consecutively in its own rotation. Fragments are
// merged into one chain of H-neighbors closed by a single halfedge run; a
// vertex whose H-neighbors do not form one chain must be given its own wheel.

#include <string>
#include <vector>

#include "planar5/catalog.hpp"

namespace planar5::detail {

class PatchBuilder {
 public:
  /// Declares a template vertex; declaration order fixes template ids.
  PatchBuilder& vertex(const std::string& label, int cap);
  PatchBuilder& wheel(const std::string& center, std::vector<std::string> link);

  /// Throws Error(InvalidArgument) on inconsistent declarations.
  std::vector<TemplateVertex> build(bool mirror = false) const;

  int id(const std::string& label) const;

 private:
  struct Wheel {
    int center;
    std::vector<int> link;  // -1 = outside
  };
  std::vector<std::string> labels_;
  std::vector<int> caps_;
  std::vector<Wheel> wheels_;
};

}  // namespace planar5::detail
