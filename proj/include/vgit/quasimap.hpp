#pragma once

#include <optional>
#include <vector>

#include "vgit/fan.hpp"
#include "vgit/git.hpp"

// Degree cones of one-parameter-subgroup quasimaps and the Kleiman-type
// duality verifier. A cocharacter lambda together with a semistable support
// S encodes the quasimap that flows a base point of support S along lambda;
// it exists iff every weight of S pairs nonnegatively with lambda, and its
// degree against a character kappa is the lattice pairing <kappa, lambda>
// (the Hilbert-Mumford weight of the limit point).

namespace vgit {

using Cocharacter = IntVec;

// <kappa, lambda>: simultaneously the Hilbert-Mumford weight and the degree
// of the associated quasimap against the line bundle of character kappa.
inline Integer hm_weight(const Character& kappa, const Cocharacter& lambda) {
  if (kappa.size() != lambda.size())
    throw DimensionError("hm_weight: character/cocharacter length mismatch");
  return dot(kappa, lambda);
}

// The flow of a point with support S along lambda extends over the origin.
bool limit_exists(const ChargeMatrix& charge, Support S,
                  const Cocharacter& lambda);

struct QuasimapDatum {
  Cocharacter lambda;
  Support support;
  Character theta;
};

// Throws InvalidDatumError unless lambda is a genuine 1-PS (nonzero), the
// support is theta-semistable, and the limit exists.
void validate_datum(const ChargeMatrix& charge, const QuasimapDatum& qm);

// Degree nonnegativity of a valid quasimap against its own linearization.
// Always true; exposed as a checked assertion.
bool positivity_check(const ChargeMatrix& charge, const Character& theta,
                      const QuasimapDatum& qm);

// Closed cone of degrees of 1-PS quasimaps: the conic hull, over the
// minimal theta-semistable supports S, of the cones
// {lambda : <w_i, lambda> >= 0 for all i in S}. Its dual is C_V(theta).
Cone ne_cone(const ChargeMatrix& charge, const Character& theta,
             int cap = kDefaultEnumerationCap);

// If kappa lies outside C_V(theta), a quasimap datum of negative
// kappa-degree, with its postconditions re-checked independently after the
// solve; otherwise nullopt (no witness exists).
std::optional<QuasimapDatum> witness_negative(
    const ChargeMatrix& charge, const Character& theta, const Character& kappa,
    int cap = kDefaultEnumerationCap);

// Same, for callers already holding the semistable family of theta.
std::optional<QuasimapDatum> witness_negative(const ChargeMatrix& charge,
                                              const Character& theta,
                                              const Character& kappa,
                                              const SupportFamily& family);

struct VerifyOptions {
  int cap = kDefaultEnumerationCap;
  std::uint64_t seed = 0;
  int random_supplement = 0;            // extra seeded test characters
  std::vector<Character> extra_chars;   // caller-chosen test characters
};

struct VerificationCheck {
  Character test_char;
  bool effective = false;
  bool equivalent = false;          // equal semistable families
  bool in_relint_dual_ne = false;   // relint membership in NE(theta)^dual
  bool equivalence_agrees = false;  // the two must coincide
  bool cv_routes_agree = false;     // family inclusion vs cone membership
  bool monotonicity_ok = false;     // C_V(theta) pairs >= 0 with NE gens
  std::optional<QuasimapDatum> witness;  // negative-degree certificate
  std::optional<Integer> witness_degree;
  std::optional<Cocharacter> boundary_generator;  // tight NE generator
  bool pass = false;
};

struct VerificationReport {
  Character theta;
  SupportFamily family;
  Cone c_theta;
  Cone ne;
  Cone dual_ne;
  bool duality_match = false;  // cones_equal(dual(NE), C_V)
  std::vector<VerificationCheck> checks;
  bool pass() const;
};

// Machine check of the duality between GIT equivalence and quasimap
// degrees at theta: dual(NE(theta)) must equal C_V(theta), and over a
// deterministic set of test characters (fan rays, relint samples, sums of
// rays of adjacent chambers, points outside the effective cone, plus an
// optional seeded random supplement) GIT equivalence with theta must agree
// exactly with relint membership in dual(NE(theta)). Failing sides carry
// machine-checkable certificates.
VerificationReport verify_kleiman(const ChargeMatrix& charge,
                                  const Character& theta,
                                  const VerifyOptions& options = {});

// Same, reusing a precomputed fan of the charge matrix.
VerificationReport verify_kleiman(const ChargeMatrix& charge,
                                  const Character& theta, const GitFan& fan,
                                  const VerifyOptions& options = {});

}  // namespace vgit
