// Acceptance suite: end-to-end checks of the library against its
// mathematical contract. Every comparison is exact; there are no
// tolerances. Prints one line per criterion and exits nonzero if any
// fails.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "support/oracles.hpp"
#include "vgit/fan.hpp"
#include "vgit/quasimap.hpp"

using namespace vgit;
using namespace vgit::testing;

namespace {

int g_failures = 0;

void require(bool cond, const std::string& detail, std::string& first_fail) {
  if (!cond) {
    ++g_failures;
    if (first_fail.empty()) first_fail = detail;
  }
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int id, const std::string& name, bool pass, double secs,
            const std::string& detail) {
  std::printf("criterion %d: %s  %s (%.2fs)%s%s\n", id,
              pass ? "PASS" : "FAIL", name.c_str(), secs,
              detail.empty() ? "" : " - ", detail.c_str());
  std::fflush(stdout);
}

// Shared seeded corpus for criteria 3, 4, 5, 7.
struct CorpusEntry {
  ChargeMatrix charge;
  GitFan fan;
  std::vector<Character> reps;        // one relint sample per class
  std::vector<Character> test_chars;  // deterministic verification set
};

std::vector<CorpusEntry> build_corpus(int count) {
  std::vector<CorpusEntry> corpus;
  std::mt19937_64 rng(0x5eed5eedULL);
  while (static_cast<int>(corpus.size()) < count) {
    ChargeMatrix charge = random_charge(rng, 3, 8);
    GitFan fan = git_fan(charge);
    CorpusEntry entry{charge, fan, {}, {}};
    for (const GitClass* cls : entry.fan.all_classes())
      entry.reps.push_back(int_vec(cls->cone.relint_point()));
    // Deterministic test characters, as in the verifier: ray generators,
    // relint samples, sums across walls, and points outside the
    // effective cone.
    std::set<std::string> seen;
    auto add = [&](const RatVec& v) {
      Character c = int_vec(v);
      if (seen.insert(to_string(c)).second)
        entry.test_chars.push_back(std::move(c));
    };
    for (const GitClass* cls : entry.fan.all_classes()) {
      for (const RatVec& r : cls->cone.rays()) add(r);
      for (const RatVec& l : cls->cone.lineality()) {
        add(l);
        add(RatVec(-l));
      }
      add(cls->cone.relint_point());
    }
    for (const GitClass& wall : entry.fan.walls) {
      std::vector<const GitClass*> incident;
      for (const GitClass& ch : entry.fan.chambers)
        if (is_subset(wall.cone, ch.cone)) incident.push_back(&ch);
      for (size_t a = 0; a < incident.size(); ++a)
        for (size_t b = a + 1; b < incident.size(); ++b)
          for (const RatVec& ra : incident[a]->cone.rays())
            for (const RatVec& rb : incident[b]->cone.rays())
              add(RatVec(ra + rb));
    }
    for (const RatVec& f : entry.fan.effective.facets()) add(RatVec(-f));
    for (const RatVec& e : entry.fan.effective.span_equations()) {
      add(e);
      add(RatVec(-e));
    }
    corpus.push_back(std::move(entry));
  }
  return corpus;
}

bool criterion1_football() {
  auto t0 = Clock::now();
  std::string fail;
  ChargeMatrix charge(im({{2, 1, 0}, {0, 1, 1}}));
  Character plus = iv({4, 2}), minus = iv({2, 4});

  require(!git_equivalent(charge, plus, minus),
          "theta_plus and theta_minus must not be GIT equivalent", fail);

  GitFan fan = git_fan(charge);
  require(fan.chambers.size() == 2, "expected exactly 2 chambers", fail);
  Cone left = make_cone({rv({2, 0}), rv({1, 1})}, {}, 2);
  Cone right = make_cone({rv({1, 1}), rv({0, 1})}, {}, 2);
  bool found_left = false, found_right = false;
  for (const GitClass& c : fan.chambers) {
    if (cones_equal(c.cone, left)) found_left = true;
    if (cones_equal(c.cone, right)) found_right = true;
  }
  require(found_left && found_right, "chamber cones differ from Cone((2,0),(1,1)), Cone((1,1),(0,1))",
          fail);

  auto z2_strata = [](const StackCensus& census) {
    int count = 0;
    for (const StackStratum& s : census.strata) {
      Integer order = 1;
      for (const Integer& f : s.stabilizer) order *= f;
      if (order == 2) ++count;
    }
    return count;
  };
  StackCensus cp = stack_census(charge, plus);
  StackCensus cm = stack_census(charge, minus);
  require(cp.quotient_dim == 1 && cm.quotient_dim == 1,
          "both quotients must have dimension 1", fail);
  require(z2_strata(cp) == 2, "football must have two Z/2 strata", fail);
  require(z2_strata(cm) == 1, "teardrop must have exactly one Z/2 stratum",
          fail);

  double secs = seconds_since(t0);
  require(secs < 1.0, "runtime exceeded 1 s", fail);
  report(1, "rank-2 football/teardrop reproduction", fail.empty(), secs,
         fail);
  return fail.empty();
}

bool criterion2_scaling() {
  auto t0 = Clock::now();
  std::string fail;
  ChargeMatrix charge(im({{1}}));
  Character theta = iv({1});

  require(cones_equal(ne_cone(charge, theta), make_cone({rv({1})}, {}, 1)),
          "NE(theta) must be the nonnegative ray", fail);
  for (long m = -5; m <= 5; ++m)
    require(a_class_contains(charge, theta, iv({m})) == (m > 0),
            "A(theta) must contain exactly the positive characters", fail);
  require(verify_kleiman(charge, theta).pass(), "verify must pass", fail);

  double secs = seconds_since(t0);
  require(secs < 1.0, "runtime exceeded 1 s", fail);
  report(2, "Gm scaling on the affine line", fail.empty(), secs, fail);
  return fail.empty();
}

bool criterion3_duality(const std::vector<CorpusEntry>& corpus) {
  auto t0 = Clock::now();
  std::string fail;
  long rep_count = 0, char_checks = 0;
  for (const CorpusEntry& entry : corpus) {
    // Families of the test characters, shared across representatives.
    std::vector<SupportFamily> char_families;
    for (const Character& c : entry.test_chars)
      char_families.push_back(semistable_supports(entry.charge, c));
    for (const Character& theta : entry.reps) {
      ++rep_count;
      Cone cv = c_cone(entry.charge, theta);
      require(cones_equal(dual_cone(ne_cone(entry.charge, theta)), cv),
              "dual(NE(theta)) != C_V(theta) for " + to_string(theta), fail);
      SupportFamily fam = semistable_supports(entry.charge, theta);
      for (size_t i = 0; i < entry.test_chars.size(); ++i) {
        ++char_checks;
        bool equivalent = (char_families[i] == fam);
        bool in_class = contains(cv, rat_vec(entry.test_chars[i]),
                                 Containment::Relint);
        require(equivalent == in_class,
                "class membership and family equality disagree at " +
                    to_string(entry.test_chars[i]),
                fail);
      }
    }
  }
  double secs = seconds_since(t0);
  report(3, "degree-pairing duality over " + std::to_string(corpus.size()) +
                " random actions (" + std::to_string(rep_count) +
                " classes, " + std::to_string(char_checks) + " checks)",
         fail.empty(), secs, fail);
  return fail.empty();
}

bool criterion4_witnesses(const std::vector<CorpusEntry>& corpus) {
  auto t0 = Clock::now();
  std::string fail;
  long witness_count = 0, grid_checks = 0;
  for (const CorpusEntry& entry : corpus) {
    const Index k = entry.charge.torus_rank();
    for (const Character& theta : entry.reps) {
      Cone cv = c_cone(entry.charge, theta);
      SupportFamily fam = semistable_supports(entry.charge, theta);
      std::vector<long> coords(k, -4);
      while (true) {
        IntVec kappa(k);
        for (Index j = 0; j < k; ++j) kappa[j] = coords[j];
        ++grid_checks;
        bool inside = contains(cv, rat_vec(kappa), Containment::Boundary);
        auto w = witness_negative(entry.charge, theta, kappa, fam);
        require(w.has_value() == !inside,
                "witness existence must match kappa outside C_V(theta)",
                fail);
        if (grid_checks % 97 == 0) {
          // Spot-check the self-contained entry point as well.
          auto w2 = witness_negative(entry.charge, theta, kappa);
          require(w2.has_value() == w.has_value(),
                  "entry points disagree on witness existence", fail);
        }
        if (w) {
          ++witness_count;
          require(is_semistable_support(entry.charge, w->support, theta),
                  "witness support must be theta-semistable", fail);
          require(limit_exists(entry.charge, w->support, w->lambda),
                  "witness flow must extend over the origin", fail);
          require(sgn(hm_weight(kappa, w->lambda)) < 0,
                  "witness degree must be negative", fail);
        }
        Index j = 0;
        while (j < k && coords[j] == 4) coords[j++] = -4;
        if (j == k) break;
        ++coords[j];
      }
    }
  }
  double secs = seconds_since(t0);
  report(4, "witness soundness/completeness (" +
                std::to_string(grid_checks) + " grid pairs, " +
                std::to_string(witness_count) + " witnesses)",
         fail.empty(), secs, fail);
  return fail.empty();
}

bool criterion5_positivity(const std::vector<CorpusEntry>& corpus) {
  auto t0 = Clock::now();
  std::string fail;
  std::mt19937_64 rng(987654321);
  std::uniform_int_distribution<int> entry_dist(-3, 3);
  std::uniform_int_distribution<size_t> pick_entry(0, corpus.size() - 1);
  long generated = 0;
  while (generated < 10000) {
    const CorpusEntry& entry = corpus[pick_entry(rng)];
    std::uniform_int_distribution<size_t> pick_rep(0, entry.reps.size() - 1);
    const Character& theta = entry.reps[pick_rep(rng)];
    SupportFamily fam = semistable_supports(entry.charge, theta);
    std::uniform_int_distribution<size_t> pick_sup(0, fam.minimal.size() - 1);
    Support S = fam.minimal[pick_sup(rng)];
    IntVec lambda(entry.charge.torus_rank());
    for (Index i = 0; i < lambda.size(); ++i) lambda[i] = entry_dist(rng);
    if (is_zero(lambda) || !limit_exists(entry.charge, S, lambda)) continue;
    QuasimapDatum qm{lambda, S, theta};
    require(positivity_check(entry.charge, theta, qm),
            "valid quasimap datum with negative theta-degree at " +
                to_string(theta),
            fail);
    ++generated;
  }
  double secs = seconds_since(t0);
  report(5, "degree positivity on 10000 random quasimap data", fail.empty(),
         secs, fail);
  return fail.empty();
}

bool criterion6_cone_oracles() {
  auto t0 = Clock::now();
  std::string fail;
  std::mt19937_64 rng(0xc0ffee);

  for (int trial = 0; trial < 500; ++trial) {
    Index d = 1 + trial % 5;
    Cone C = random_cone(rng, d, static_cast<int>(d) + 3);
    require(cones_equal(dual_cone(dual_cone(C)), C),
            "biduality failed in dimension " + std::to_string(d), fail);
  }

  for (int trial = 0; trial < 12; ++trial) {
    Index d = 1 + trial % 3;
    Cone C = random_cone(rng, d, static_cast<int>(d) + 2);
    std::vector<RatVec> gens = generator_list(C);
    std::vector<long> coords(d, -5);
    while (true) {
      RatVec v(d);
      for (Index j = 0; j < d; ++j) v[j] = coords[j];
      require(contains(C, v, Containment::Boundary) ==
                  caratheodory_member(gens, v),
              "grid membership disagrees with brute force", fail);
      Index j = 0;
      while (j < d && coords[j] == 5) coords[j++] = -5;
      if (j == d) break;
      ++coords[j];
    }
  }

  for (int trial = 0; trial < 200; ++trial) {
    Index d = 1 + trial % 4;
    Cone A = random_cone(rng, d, 4);
    Cone B = random_cone(rng, d, 4);
    require(cones_equal(dual_cone(intersect(A, B)),
                        conic_hull({dual_cone(A), dual_cone(B)})),
            "dual of intersection != hull of duals", fail);
  }

  double secs = seconds_since(t0);
  report(6, "cone-engine oracle suite (500 bidualities, grid membership, "
            "200 intersection duals)",
         fail.empty(), secs, fail);
  return fail.empty();
}

bool criterion7_fan_axioms(const std::vector<CorpusEntry>& corpus) {
  auto t0 = Clock::now();
  std::string fail;
  for (const CorpusEntry& entry : corpus) {
    std::vector<const GitClass*> classes = entry.fan.all_classes();
    auto listed = [&](const Cone& C) {
      for (const GitClass* c : classes)
        if (cones_equal(c->cone, C)) return true;
      return false;
    };
    for (size_t a = 0; a < classes.size(); ++a) {
      for (size_t b = a + 1; b < classes.size(); ++b) {
        Cone I = intersect(classes[a]->cone, classes[b]->cone);
        RatVec p = I.relint_point();
        require(!(contains(classes[a]->cone, p, Containment::Relint) &&
                  contains(classes[b]->cone, p, Containment::Relint)),
                "two classes share relative interior", fail);
        require(listed(I), "intersection of classes is not a listed class",
                fail);
      }
    }
    // Dense rational ray sample of the effective cone must be covered.
    const Index k = entry.charge.torus_rank();
    std::vector<long> coords(k, -3);
    while (true) {
      RatVec v(k);
      for (Index j = 0; j < k; ++j) v[j] = coords[j];
      if (contains(entry.fan.effective, v, Containment::Boundary)) {
        bool covered = false;
        for (const GitClass* c : classes)
          if (contains(c->cone, v, Containment::Boundary)) covered = true;
        require(covered, "effective ray not covered by any class at " +
                             to_string(int_vec(v)),
                fail);
      }
      Index j = 0;
      while (j < k && coords[j] == 3) coords[j++] = -3;
      if (j == k) break;
      ++coords[j];
    }
  }
  double secs = seconds_since(t0);
  report(7, "fan axioms over the corpus", fail.empty(), secs, fail);
  return fail.empty();
}

bool criterion8_projective_lift() {
  auto t0 = Clock::now();
  std::string fail;
  std::mt19937_64 rng(0x11f7);
  std::uniform_int_distribution<int> kdist(1, 2), ndist(2, 5), entry(-2, 2);
  int verified_chambers = 0;
  for (int trial = 0; trial < 20; ++trial) {
    Index k = kdist(rng), n = ndist(rng);
    IntMat W(k, n);
    for (Index i = 0; i < k; ++i)
      for (Index j = 0; j < n; ++j) W(i, j) = entry(rng);
    ChargeMatrix lifted = lift_projective(W);
    GitFan fan = git_fan(lifted);
    for (const GitClass& ch : fan.chambers) {
      Character theta = int_vec(ch.cone.relint_point());
      require(sgn(theta[theta.size() - 1]) > 0,
              "lifted chamber sample must have positive degree", fail);
      VerificationReport rep = verify_kleiman(lifted, theta, fan);
      require(rep.pass(), "verification failed on a lifted chamber", fail);
      require(cones_equal(rep.dual_ne, ch.cone),
              "dual(NE) must reproduce the lifted chamber", fail);
      ++verified_chambers;
    }
  }
  double secs = seconds_since(t0);
  report(8, "projective lift: " + std::to_string(verified_chambers) +
                " ample chambers verified over 20 actions",
         fail.empty(), secs, fail);
  return fail.empty();
}

}  // namespace

int main() {
  std::printf("vgit acceptance suite (exact arithmetic, zero tolerances)\n");
  auto t0 = Clock::now();
  std::vector<CorpusEntry> corpus = build_corpus(100);
  std::printf("corpus: %zu seeded random charge matrices (%.2fs)\n",
              corpus.size(), seconds_since(t0));

  bool all = true;
  all &= criterion1_football();
  all &= criterion2_scaling();
  all &= criterion3_duality(corpus);
  all &= criterion4_witnesses(corpus);
  all &= criterion5_positivity(corpus);
  all &= criterion6_cone_oracles();
  all &= criterion7_fan_axioms(corpus);
  all &= criterion8_projective_lift();

  std::printf("%s (%d failing checks, %.2fs total)\n",
              all ? "ALL CRITERIA PASS" : "ACCEPTANCE FAILURE", g_failures,
              seconds_since(t0));
  return all ? 0 : 1;
}
