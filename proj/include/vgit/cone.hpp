#pragma once

#include <vector>

#include "vgit/errors.hpp"
#include "vgit/rational.hpp"

// Exact rational polyhedral cones through the origin, held in a canonical
// double description:
//
//   rays       extreme ray representatives, primitive integer, orthogonal to
//              the lineality space, sorted lexicographically;
//   lineality  rref basis of the largest linear subspace contained in the
//              cone (primitive rows, first nonzero coordinate positive);
//   facets     supporting halfspace normals of the facets, primitive integer,
//              lying in span(cone), sorted lexicographically;
//   equations  rref basis of span(cone)-perp.
//
// Two cones describe the same point set iff their canonical forms are
// structurally identical, so equality is a plain comparison. Every value is
// immutable after construction and safe to share across threads.

namespace vgit {

enum class Containment { Boundary, Relint };

class Cone {
 public:
  Index ambient_dim() const { return ambient_dim_; }
  const std::vector<RatVec>& rays() const { return rays_; }
  const std::vector<RatVec>& lineality() const { return lineality_; }
  const std::vector<RatVec>& facets() const { return facets_; }
  const std::vector<RatVec>& span_equations() const { return equations_; }

  // Halfspace description as a flat list: facets plus +/- pairs for the
  // span equations, sorted.
  std::vector<RatVec> inequalities() const;

  Index dim() const { return ambient_dim_ - static_cast<Index>(equations_.size()); }
  Index lineality_dim() const { return static_cast<Index>(lineality_.size()); }
  bool is_pointed() const { return lineality_.empty(); }
  bool is_origin() const { return rays_.empty() && lineality_.empty(); }
  bool is_full_space() const { return facets_.empty() && equations_.empty(); }
  bool is_linear_space() const { return rays_.empty(); }

  // A canonical relative-interior point: the sum of the rays (zero for a
  // linear space).
  RatVec relint_point() const;

  bool operator==(const Cone& other) const = default;

 private:
  friend Cone make_cone(const std::vector<RatVec>&, const std::vector<RatVec>&,
                        Index);
  friend Cone cone_from_inequalities(const std::vector<RatVec>&,
                                     const std::vector<RatVec>&, Index);
  Cone() = default;

  Index ambient_dim_ = 0;
  std::vector<RatVec> rays_;
  std::vector<RatVec> lineality_;
  std::vector<RatVec> facets_;
  std::vector<RatVec> equations_;
};

// Conic hull of the generators plus the span of the lineality generators.
// Both canonical descriptions are computed via incremental double
// description. Throws DimensionError on length mismatches.
Cone make_cone(const std::vector<RatVec>& generators,
               const std::vector<RatVec>& lineality_gens, Index ambient_dim);

// {x : f.x >= 0 for all f in ineqs, e.x = 0 for all e in equations}.
Cone cone_from_inequalities(const std::vector<RatVec>& ineqs,
                            const std::vector<RatVec>& equations,
                            Index ambient_dim);

// {f : f.c >= 0 for all c in C}.
Cone dual_cone(const Cone& C);

Cone intersect(const Cone& A, const Cone& B);

Cone conic_hull(const std::vector<Cone>& cones);

// Boundary mode: v in the closed cone. Relint mode: v in the relative
// interior (strict against every facet, tight on every equation).
bool contains(const Cone& C, const RatVec& v, Containment mode);

bool cones_equal(const Cone& A, const Cone& B);

bool is_subset(const Cone& A, const Cone& B);

// Deterministic serialization of the canonical form; two cones have equal
// keys iff they are equal as point sets.
std::string canonical_key(const Cone& C);

}  // namespace vgit
