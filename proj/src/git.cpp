#include "vgit/git.hpp"

#include <algorithm>
#include <numeric>

#include "vgit/feasible.hpp"
#include "vgit/smith.hpp"

namespace vgit {

namespace {

void check_character(const ChargeMatrix& charge, const Character& theta,
                     const char* what) {
  if (theta.size() != charge.torus_rank())
    throw DimensionError(std::string(what) + ": character length " +
                         std::to_string(theta.size()) + " != torus rank " +
                         std::to_string(charge.torus_rank()));
}

void check_cap(const ChargeMatrix& charge, int cap, const char* what) {
  if (charge.coord_count() > cap)
    throw SizeCapError(std::string(what) + ": n = " +
                       std::to_string(charge.coord_count()) +
                       " exceeds enumeration cap " + std::to_string(cap));
}

RatMat weight_submatrix(const ChargeMatrix& charge, Support S) {
  RatMat A(charge.torus_rank(), S.size());
  Index c = 0;
  for (Index i = 0; i < charge.coord_count(); ++i) {
    if (!S.contains(i)) continue;
    for (Index r = 0; r < charge.torus_rank(); ++r)
      A(r, c) = Rational(charge.W(r, i));
    ++c;
  }
  return A;
}

void require_effective(const ChargeMatrix& charge, const Character& theta,
                       const char* what) {
  if (!is_effective(charge, theta))
    throw NotEffectiveError(std::string(what) + ": character " +
                            to_string(theta) +
                            " lies outside the effective cone");
}

}  // namespace

bool is_semistable_support(const ChargeMatrix& charge, Support S,
                           const Character& theta) {
  check_character(charge, theta, "is_semistable_support");
  if (S.empty()) return is_zero(theta);
  return nonneg_solution(weight_submatrix(charge, S), rat_vec(theta))
      .has_value();
}

SupportFamily semistable_supports(const ChargeMatrix& charge,
                                  const Character& theta, int cap) {
  check_character(charge, theta, "semistable_supports");
  check_cap(charge, cap, "semistable_supports");
  const Index n = charge.coord_count();
  SupportFamily fam;
  fam.n = n;
  if (is_zero(theta)) {
    fam.minimal.push_back(Support{0});  // sigma = 1 never vanishes
    return fam;
  }
  // Subsets in size order (Gosper's hack per size), pruning supersets of
  // minimal supports already found.
  for (Index size = 1; size <= n; ++size) {
    std::uint32_t m = (std::uint32_t(1) << size) - 1;
    std::uint32_t limit = std::uint32_t(1) << n;
    while (m < limit) {
      Support S{m};
      if (!fam.contains(S) && is_semistable_support(charge, S, theta))
        fam.minimal.push_back(S);
      std::uint32_t low = m & (~m + 1);
      std::uint32_t ripple = m + low;
      m = ripple | (((m ^ ripple) >> 2) / low);
    }
  }
  return fam;
}

Cone weight_cone(const ChargeMatrix& charge, Support S) {
  std::vector<RatVec> gens;
  for (Index i = 0; i < charge.coord_count(); ++i)
    if (S.contains(i)) gens.push_back(rat_vec(charge.weight(i)));
  return make_cone(gens, {}, charge.torus_rank());
}

Cone effective_cone(const ChargeMatrix& charge) {
  return weight_cone(charge, Support::full(charge.coord_count()));
}

bool is_effective(const ChargeMatrix& charge, const Character& theta) {
  check_character(charge, theta, "is_effective");
  return is_semistable_support(charge, Support::full(charge.coord_count()),
                               theta) ||
         is_zero(theta);
}

Cone c_cone(const ChargeMatrix& charge, const Character& theta, int cap) {
  check_character(charge, theta, "c_cone");
  require_effective(charge, theta, "c_cone");
  SupportFamily fam = semistable_supports(charge, theta, cap);
  // Intersection over the minimal supports only; supersets give larger
  // cones and are redundant.
  std::vector<RatVec> ineqs, eqs;
  for (const Support& S : fam.minimal) {
    Cone K = weight_cone(charge, S);
    ineqs.insert(ineqs.end(), K.facets().begin(), K.facets().end());
    eqs.insert(eqs.end(), K.span_equations().begin(),
               K.span_equations().end());
  }
  return cone_from_inequalities(ineqs, eqs, charge.torus_rank());
}

bool a_class_contains(const ChargeMatrix& charge, const Character& theta,
                      const Character& theta_prime, int cap) {
  check_character(charge, theta_prime, "a_class_contains");
  return contains(c_cone(charge, theta, cap), rat_vec(theta_prime),
                  Containment::Relint);
}

bool git_equivalent(const ChargeMatrix& charge, const Character& theta,
                    const Character& theta_prime, int cap) {
  require_effective(charge, theta, "git_equivalent");
  require_effective(charge, theta_prime, "git_equivalent");
  return semistable_supports(charge, theta, cap) ==
         semistable_supports(charge, theta_prime, cap);
}

std::vector<Integer> generic_stabilizer(const ChargeMatrix& charge,
                                        Support S) {
  if (S.empty()) throw Error("generic_stabilizer: empty support");
  IntMat M(charge.torus_rank(), S.size());
  Index c = 0;
  for (Index i = 0; i < charge.coord_count(); ++i)
    if (S.contains(i)) M.col(c++) = charge.W.col(i);
  std::vector<Integer> factors = invariant_factors(M);
  factors.resize(charge.torus_rank(), Integer(0));
  return factors;
}

StackCensus stack_census(const ChargeMatrix& charge, const Character& theta,
                         int cap) {
  (void)cap;  // the census never enumerates subsets
  check_character(charge, theta, "stack_census");
  require_effective(charge, theta, "stack_census");
  const Index n = charge.coord_count();
  const Index k = charge.torus_rank();

  StackCensus census;
  Support full = Support::full(n);
  census.strata.push_back(
      StackStratum{full, generic_stabilizer(charge, full), 0});
  for (Index i = 0; i < n; ++i) {
    Support S = full.without(i);
    if (!is_semistable_support(charge, S, theta)) continue;
    std::vector<Integer> stab =
        S.empty() ? std::vector<Integer>(k, Integer(0))
                  : generic_stabilizer(charge, S);
    census.strata.push_back(StackStratum{S, std::move(stab), 1});
  }
  std::sort(census.strata.begin(), census.strata.end(),
            [](const StackStratum& a, const StackStratum& b) {
              return a.codim != b.codim ? a.codim < b.codim
                                        : a.support < b.support;
            });
  Index rank = static_cast<Index>(invariant_factors(charge.W).size());
  census.quotient_dim = n - rank;
  return census;
}

ChargeMatrix lift_projective(const IntMat& projective_weights) {
  if (projective_weights.rows() < 1 || projective_weights.cols() < 1)
    throw DimensionError("lift_projective: k and n must be at least 1");
  IntMat lifted(projective_weights.rows() + 1, projective_weights.cols());
  lifted.topRows(projective_weights.rows()) = projective_weights;
  for (Index j = 0; j < lifted.cols(); ++j)
    lifted(projective_weights.rows(), j) = 1;
  return ChargeMatrix(lifted);
}

}  // namespace vgit
