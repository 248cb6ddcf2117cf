#pragma once

#include <vector>

#include "vgit/git.hpp"

// The fan of GIT equivalence classes in character space. Chambers are the
// classes of maximal dimension (the dimension of the effective cone); walls
// are all remaining classes, including the origin class when it occurs.

namespace vgit {

struct GitClass {
  Cone cone;
  SupportFamily family;  // semistable family of any relint character
};

struct GitFan {
  ChargeMatrix charge;
  Cone effective;
  std::vector<GitClass> chambers;
  std::vector<GitClass> walls;

  const GitClass* class_of(const Character& theta) const;
  std::vector<const GitClass*> all_classes() const;
};

// Enumerates every cone C_V(theta) for theta in the effective cone: the
// effective cone is sliced by the facet (and, for degenerate weight cones,
// span) hyperplanes of all weight cones, one chamber is computed per
// full-dimensional region, and the lower-dimensional classes are collected
// from chamber faces. Throws SizeCapError past the enumeration cap.
GitFan git_fan(const ChargeMatrix& charge, int cap = kDefaultEnumerationCap);

}  // namespace vgit
