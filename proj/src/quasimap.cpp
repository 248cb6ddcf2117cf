#include "vgit/quasimap.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "vgit/feasible.hpp"

namespace vgit {

namespace {

void require_effective(const ChargeMatrix& charge, const Character& theta,
                       const char* what) {
  if (!is_effective(charge, theta))
    throw NotEffectiveError(std::string(what) + ": character " +
                            to_string(theta) +
                            " lies outside the effective cone");
}

}  // namespace

bool limit_exists(const ChargeMatrix& charge, Support S,
                  const Cocharacter& lambda) {
  if (lambda.size() != charge.torus_rank())
    throw DimensionError("limit_exists: cocharacter length mismatch");
  for (Index i = 0; i < charge.coord_count(); ++i) {
    if (!S.contains(i)) continue;
    if (sgn(dot(charge.weight(i), lambda)) < 0) return false;
  }
  return true;
}

void validate_datum(const ChargeMatrix& charge, const QuasimapDatum& qm) {
  if (qm.lambda.size() != charge.torus_rank())
    throw InvalidDatumError("quasimap datum: cocharacter length mismatch");
  if (is_zero(qm.lambda))
    throw InvalidDatumError("quasimap datum: the zero cocharacter is not a "
                            "one-parameter subgroup");
  if (!is_semistable_support(charge, qm.support, qm.theta))
    throw InvalidDatumError("quasimap datum: support is not semistable for "
                            "its linearization");
  if (!limit_exists(charge, qm.support, qm.lambda))
    throw InvalidDatumError("quasimap datum: the flow does not extend over "
                            "the origin");
}

bool positivity_check(const ChargeMatrix& charge, const Character& theta,
                      const QuasimapDatum& qm) {
  validate_datum(charge, qm);
  if (!is_semistable_support(charge, qm.support, theta))
    throw InvalidDatumError("positivity_check: support is not semistable "
                            "for the given linearization");
  return sgn(hm_weight(theta, qm.lambda)) >= 0;
}

Cone ne_cone(const ChargeMatrix& charge, const Character& theta, int cap) {
  require_effective(charge, theta, "ne_cone");
  const Index k = charge.torus_rank();
  SupportFamily fam = semistable_supports(charge, theta, cap);
  std::vector<Cone> pieces;
  for (const Support& S : fam.minimal) {
    std::vector<RatVec> rows;
    for (Index i = 0; i < charge.coord_count(); ++i)
      if (S.contains(i)) rows.push_back(rat_vec(charge.weight(i)));
    pieces.push_back(cone_from_inequalities(rows, {}, k));
  }
  return conic_hull(pieces);
}

std::optional<QuasimapDatum> witness_negative(const ChargeMatrix& charge,
                                              const Character& theta,
                                              const Character& kappa,
                                              int cap) {
  require_effective(charge, theta, "witness_negative");
  return witness_negative(charge, theta, kappa,
                          semistable_supports(charge, theta, cap));
}

std::optional<QuasimapDatum> witness_negative(const ChargeMatrix& charge,
                                              const Character& theta,
                                              const Character& kappa,
                                              const SupportFamily& fam) {
  if (fam.empty())
    throw NotEffectiveError("witness_negative: character " + to_string(theta) +
                            " lies outside the effective cone");
  if (kappa.size() != charge.torus_rank())
    throw DimensionError("witness_negative: character length mismatch");
  const Index k = charge.torus_rank();

  for (const Support& S : fam.minimal) {
    if (is_semistable_support(charge, S, kappa)) continue;
    // kappa misses this weight cone, so a separating 1-PS exists:
    // <w_i, lambda> >= 0 on S and <kappa, lambda> <= -1.
    std::vector<Index> idx;
    for (Index i = 0; i < charge.coord_count(); ++i)
      if (S.contains(i)) idx.push_back(i);
    RatMat G(idx.size() + 1, k);
    RatVec h = RatVec::Zero(static_cast<Index>(idx.size()) + 1);
    for (size_t r = 0; r < idx.size(); ++r)
      for (Index j = 0; j < k; ++j)
        G(static_cast<Index>(r), j) = Rational(charge.W(j, idx[r]));
    for (Index j = 0; j < k; ++j)
      G(static_cast<Index>(idx.size()), j) = Rational(-kappa[j]);
    h[static_cast<Index>(idx.size())] = 1;
    std::optional<RatVec> sol = inequality_solution(G, h);
    if (!sol)
      throw std::logic_error("witness_negative: separator must exist");
    QuasimapDatum qm{int_vec(primitive(*sol)), S, theta};
    // Independent postcondition re-check.
    validate_datum(charge, qm);
    if (sgn(hm_weight(kappa, qm.lambda)) >= 0)
      throw std::logic_error("witness_negative: degree not negative");
    return qm;
  }
  return std::nullopt;  // kappa lies in C_V(theta)
}

bool VerificationReport::pass() const {
  if (!duality_match) return false;
  for (const VerificationCheck& c : checks)
    if (!c.pass) return false;
  return true;
}

VerificationReport verify_kleiman(const ChargeMatrix& charge,
                                  const Character& theta,
                                  const VerifyOptions& options) {
  return verify_kleiman(charge, theta, git_fan(charge, options.cap), options);
}

VerificationReport verify_kleiman(const ChargeMatrix& charge,
                                  const Character& theta, const GitFan& fan,
                                  const VerifyOptions& options) {
  require_effective(charge, theta, "verify_kleiman");
  const Index k = charge.torus_rank();

  Cone c_theta = c_cone(charge, theta, options.cap);
  Cone ne = ne_cone(charge, theta, options.cap);
  Cone dual_ne = dual_cone(ne);
  VerificationReport report{theta,
                            semistable_supports(charge, theta, options.cap),
                            std::move(c_theta),
                            std::move(ne),
                            std::move(dual_ne),
                            false,
                            {}};
  report.duality_match = cones_equal(report.dual_ne, report.c_theta);

  // Deterministic test characters.
  std::set<std::string> seen;
  std::vector<Character> test_chars;
  auto add_char = [&](const RatVec& v) {
    Character c = int_vec(v);
    std::string key = to_string(c);
    if (seen.insert(key).second) test_chars.push_back(std::move(c));
  };

  std::vector<const GitClass*> classes = fan.all_classes();
  for (const GitClass* cls : classes) {
    for (const RatVec& r : cls->cone.rays()) add_char(r);
    for (const RatVec& l : cls->cone.lineality()) {
      add_char(l);
      add_char(RatVec(-l));
    }
    add_char(cls->cone.relint_point());
  }
  // Sums of rays of chambers adjacent across a wall.
  for (const GitClass& wall : fan.walls) {
    std::vector<const GitClass*> incident;
    for (const GitClass& ch : fan.chambers)
      if (is_subset(wall.cone, ch.cone)) incident.push_back(&ch);
    for (size_t a = 0; a < incident.size(); ++a)
      for (size_t b = a + 1; b < incident.size(); ++b)
        for (const RatVec& ra : incident[a]->cone.rays())
          for (const RatVec& rb : incident[b]->cone.rays())
            add_char(RatVec(ra + rb));
  }
  // Points outside the effective cone.
  for (const RatVec& f : fan.effective.facets()) add_char(RatVec(-f));
  for (const RatVec& e : fan.effective.span_equations()) {
    add_char(e);
    add_char(RatVec(-e));
  }
  for (const Character& c : options.extra_chars) {
    if (c.size() != k)
      throw DimensionError("verify_kleiman: extra test character length");
    add_char(rat_vec(c));
  }
  // Optional seeded random supplement.
  if (options.random_supplement > 0) {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int i = 0; i < options.random_supplement; ++i) {
      RatVec v(k);
      for (Index j = 0; j < k; ++j) v[j] = entry(rng);
      add_char(v);
    }
  }
  std::sort(test_chars.begin(), test_chars.end(),
            [](const Character& a, const Character& b) {
              return lex_less(a, b);
            });

  for (const Character& kappa : test_chars) {
    VerificationCheck check;
    check.test_char = kappa;
    SupportFamily fam_kappa =
        semistable_supports(charge, kappa, options.cap);
    check.effective = !fam_kappa.empty();
    check.equivalent = (fam_kappa == report.family);
    check.in_relint_dual_ne =
        contains(report.dual_ne, rat_vec(kappa), Containment::Relint);
    check.equivalence_agrees = (check.equivalent == check.in_relint_dual_ne);

    // kappa in C_V(theta) two ways: every theta-semistable support stays
    // kappa-semistable, versus cone membership.
    bool cv_by_family = fam_kappa.includes(report.family);
    bool cv_by_cone =
        contains(report.c_theta, rat_vec(kappa), Containment::Boundary);
    check.cv_routes_agree = (cv_by_family == cv_by_cone);

    // Degree nonnegativity against every quasimap class when the
    // semistable locus only grows.
    check.monotonicity_ok = true;
    if (cv_by_family) {
      for (const RatVec& r : report.ne.rays())
        if (sgn(dot(rat_vec(kappa), r)) < 0) check.monotonicity_ok = false;
      for (const RatVec& l : report.ne.lineality())
        if (sgn(dot(rat_vec(kappa), l)) != 0) check.monotonicity_ok = false;
    }

    bool witness_ok = true;
    if (!cv_by_cone) {
      // Strictly outside: a negative-degree quasimap must exist.
      check.witness = witness_negative(charge, theta, kappa, report.family);
      if (check.witness) {
        check.witness_degree = hm_weight(kappa, check.witness->lambda);
        witness_ok = sgn(*check.witness_degree) < 0;
      } else {
        witness_ok = false;
      }
    } else if (!check.in_relint_dual_ne) {
      // Boundary: exhibit a quasimap class of degree exactly zero that is
      // not a lineality direction.
      for (const RatVec& r : report.ne.rays()) {
        if (sgn(dot(rat_vec(kappa), r)) != 0) continue;
        if (contains(report.ne, RatVec(-r), Containment::Boundary)) continue;
        check.boundary_generator = int_vec(r);
        break;
      }
      witness_ok = check.boundary_generator.has_value();
    }

    check.pass = check.equivalence_agrees && check.cv_routes_agree &&
                 check.monotonicity_ok && witness_ok;
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace vgit
