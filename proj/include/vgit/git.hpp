#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "vgit/cone.hpp"
#include "vgit/errors.hpp"
#include "vgit/rational.hpp"

// GIT data of a rank-k torus acting linearly on affine n-space. The action
// is recorded by its charge matrix: column i is the character by which the
// torus scales coordinate i. Semistability is purely polyhedral here: a
// point with support S is theta-semistable iff theta lies in the cone
// spanned by the weights {w_i : i in S} (King's criterion specialized to
// tori), so semistable loci are encoded by up-closed families of coordinate
// supports.

namespace vgit {

using Character = IntVec;

inline constexpr int kDefaultEnumerationCap = 16;

struct ChargeMatrix {
  IntMat W;  // k x n, columns are the weights w_i

  explicit ChargeMatrix(IntMat m) : W(std::move(m)) {
    if (W.rows() < 1 || W.cols() < 1)
      throw DimensionError("ChargeMatrix: k and n must be at least 1");
    if (W.cols() > 31)
      throw DimensionError(
          "ChargeMatrix: at most 31 coordinates are supported (supports are "
          "32-bit patterns)");
  }

  Index torus_rank() const { return W.rows(); }
  Index coord_count() const { return W.cols(); }
  IntVec weight(Index i) const { return W.col(i); }

  bool operator==(const ChargeMatrix& o) const { return W == o.W; }
};

// Subset of {1,...,n} as a bit pattern (bit i-1 = coordinate i).
struct Support {
  std::uint32_t bits = 0;

  static Support full(Index n) {
    return Support{n >= 32 ? ~std::uint32_t(0)
                           : ((std::uint32_t(1) << n) - 1)};
  }
  bool contains(Index i) const { return (bits >> i) & 1; }  // 0-based
  Support with(Index i) const {
    return Support{bits | (std::uint32_t(1) << i)};
  }
  Support without(Index i) const {
    return Support{bits & ~(std::uint32_t(1) << i)};
  }
  int size() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }
  bool subset_of(Support o) const { return (bits & ~o.bits) == 0; }

  auto operator<=>(const Support&) const = default;

  // 1-based coordinate list, ascending.
  std::vector<int> indices() const {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
      if ((bits >> i) & 1) out.push_back(i + 1);
    return out;
  }
};

// Up-closed family of supports, stored by its minimal elements. The
// minimal supports form an antichain sorted by (size, bits).
struct SupportFamily {
  Index n = 0;
  std::vector<Support> minimal;

  bool contains(Support S) const {
    for (const Support& m : minimal)
      if (m.subset_of(S)) return true;
    return false;
  }

  // True iff the family encoded by `other` is a subset of this family,
  // i.e. every other-semistable support is semistable here.
  bool includes(const SupportFamily& other) const {
    for (const Support& m : other.minimal)
      if (!contains(m)) return false;
    return true;
  }

  bool empty() const { return minimal.empty(); }
  bool operator==(const SupportFamily&) const = default;
};

// theta in Cone(w_i : i in S), decided by an exact feasibility solve.
bool is_semistable_support(const ChargeMatrix& charge, Support S,
                           const Character& theta);

// Minimal antichain of theta-semistable supports. Enumerates subsets in
// size order with up-closure pruning. Throws SizeCapError when n exceeds
// the cap.
SupportFamily semistable_supports(const ChargeMatrix& charge,
                                  const Character& theta,
                                  int cap = kDefaultEnumerationCap);

Cone weight_cone(const ChargeMatrix& charge, Support S);

// Conic hull of all columns; the characters with nonempty semistable locus.
Cone effective_cone(const ChargeMatrix& charge);

bool is_effective(const ChargeMatrix& charge, const Character& theta);

// C_V(theta): intersection of the weight cones of the minimal
// theta-semistable supports. Throws NotEffectiveError.
Cone c_cone(const ChargeMatrix& charge, const Character& theta,
            int cap = kDefaultEnumerationCap);

// theta_prime in A(theta) = relint C_V(theta).
bool a_class_contains(const ChargeMatrix& charge, const Character& theta,
                      const Character& theta_prime,
                      int cap = kDefaultEnumerationCap);

// Equal semistable support families. The independent oracle against
// a_class_contains.
bool git_equivalent(const ChargeMatrix& charge, const Character& theta,
                    const Character& theta_prime,
                    int cap = kDefaultEnumerationCap);

// Invariant factors of the stabilizer of a generic point with support S:
// the nonzero invariant factors of the k x |S| weight submatrix, padded
// with one 0 per positive-dimensional stabilizer factor. S must be
// nonempty.
std::vector<Integer> generic_stabilizer(const ChargeMatrix& charge, Support S);

struct StackStratum {
  Support support;
  std::vector<Integer> stabilizer;  // invariant factors, 0 = Gm factor
  Index codim = 0;
};

struct StackCensus {
  std::vector<StackStratum> strata;  // sorted by codimension
  Index quotient_dim = 0;
};

// Stabilizer census of the quotient stack: the maximal semistable support
// plus every semistable support one coordinate smaller.
StackCensus stack_census(const ChargeMatrix& charge, const Character& theta,
                         int cap = kDefaultEnumerationCap);

// Charge matrix of the (k+1)-torus acting on affine n-space that lifts a
// rank-k action on projective (n-1)-space: the given weights with a row of
// ones appended. A linearization of O(d) twisted by chi corresponds to the
// lifted character (chi, d); ample means d > 0.
ChargeMatrix lift_projective(const IntMat& projective_weights);

}  // namespace vgit
