#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "vgit/cone.hpp"
#include "vgit/feasible.hpp"

using namespace vgit;
using namespace vgit::testing;

namespace {

Cone cone2(std::initializer_list<std::initializer_list<long>> gens) {
  std::vector<RatVec> g;
  for (const auto& v : gens) g.push_back(rv(v));
  return make_cone(g, {}, 2);
}

}  // namespace

TEST_CASE("make_cone: empty generator list is the origin cone") {
  Cone C = make_cone({}, {}, 2);
  CHECK(C.is_origin());
  CHECK(C.rays().empty());
  CHECK(C.lineality().empty());
  CHECK(C.dim() == 0);
  CHECK(C.inequalities().size() == 4);  // +/- both coordinate functionals
}

TEST_CASE("make_cone: canonical rays and facets of a 2d cone") {
  Cone C = cone2({{2, 0}, {1, 1}});
  REQUIRE(C.rays().size() == 2);
  CHECK(C.rays()[0] == rv({1, 0}));
  CHECK(C.rays()[1] == rv({1, 1}));
  REQUIRE(C.facets().size() == 2);
  CHECK(C.facets()[0] == rv({0, 1}));
  CHECK(C.facets()[1] == rv({1, -1}));
  CHECK(C.span_equations().empty());
  CHECK(C.dim() == 2);
}

TEST_CASE("make_cone: opposite rays collapse to a line") {
  Cone C = cone2({{1, 0}, {-1, 0}});
  CHECK(C.rays().empty());
  REQUIRE(C.lineality().size() == 1);
  CHECK(C.lineality()[0] == rv({1, 0}));
  auto ineqs = C.inequalities();
  REQUIRE(ineqs.size() == 2);
  CHECK(ineqs[0] == rv({0, -1}));
  CHECK(ineqs[1] == rv({0, 1}));
}

TEST_CASE("make_cone: dimension mismatch is rejected") {
  CHECK_THROWS_AS(make_cone({rv({1, 2, 3})}, {}, 2), DimensionError);
  CHECK_THROWS_AS(make_cone({rv({1, 0})}, {rv({1})}, 2), DimensionError);
}

TEST_CASE("dual_cone: the first quadrant is self-dual") {
  Cone Q = cone2({{1, 0}, {0, 1}});
  CHECK(cones_equal(dual_cone(Q), Q));
}

TEST_CASE("dual_cone: hand-computed dual") {
  Cone C = cone2({{2, 0}, {1, 1}});
  Cone D = dual_cone(C);
  CHECK(cones_equal(D, cone2({{0, 1}, {1, -1}})));
  // Grid check of the pairing: dual members pair >= 0 with cone members.
  for (long x = -5; x <= 5; ++x)
    for (long y = -5; y <= 5; ++y) {
      RatVec f = rv({x, y});
      bool in_dual = contains(D, f, Containment::Boundary);
      bool pairs_ok = sgn(dot(f, rv({2, 0}))) >= 0 &&
                      sgn(dot(f, rv({1, 1}))) >= 0;
      CHECK(in_dual == pairs_ok);
    }
}

TEST_CASE("dual_cone: dual of the origin is the full plane") {
  Cone D = dual_cone(make_cone({}, {}, 2));
  CHECK(D.is_full_space());
  CHECK(D.lineality_dim() == 2);
}

TEST_CASE("intersect: containment, idempotence, transverse rays") {
  Cone A = cone2({{2, 0}, {1, 1}});
  Cone B = cone2({{2, 0}, {0, 1}});
  CHECK(cones_equal(intersect(A, B), A));
  CHECK(cones_equal(intersect(A, A), A));
  Cone X = cone2({{1, 0}});
  Cone Y = cone2({{0, 1}});
  CHECK(intersect(X, Y).is_origin());
  CHECK_THROWS_AS(intersect(A, make_cone({}, {}, 3)), DimensionError);
}

TEST_CASE("conic_hull: absorption, identity, opposite rays") {
  Cone A = cone2({{0, 1}, {1, -1}});
  Cone B = cone2({{1, 0}, {0, 1}});
  CHECK(cones_equal(conic_hull({A, B}), A));  // (1,0) = (0,1) + (1,-1)
  CHECK(cones_equal(conic_hull({B}), B));
  Cone L = conic_hull({cone2({{1, 0}}), cone2({{-1, 0}})});
  CHECK(L.lineality_dim() == 1);
  CHECK(L.rays().empty());
  CHECK_THROWS_AS(conic_hull({}), Error);
}

TEST_CASE("contains: boundary and relative interior") {
  Cone C = cone2({{2, 0}, {1, 1}});
  CHECK(contains(C, rv({4, 2}), Containment::Relint));
  CHECK(contains(C, rv({4, 2}), Containment::Boundary));
  CHECK_FALSE(contains(C, rv({2, 0}), Containment::Relint));
  CHECK(contains(C, rv({2, 0}), Containment::Boundary));
  CHECK_FALSE(contains(C, rv({-1, 0}), Containment::Boundary));

  Cone R = cone2({{1, 1}});
  CHECK(contains(R, rv({3, 3}), Containment::Relint));
  CHECK_FALSE(contains(R, rv({0, 0}), Containment::Relint));
  CHECK(contains(R, rv({0, 0}), Containment::Boundary));
  CHECK_FALSE(contains(R, rv({1, 2}), Containment::Boundary));
}

TEST_CASE("cones_equal: scaling invariance and inequality") {
  CHECK(cones_equal(cone2({{2, 0}, {1, 1}}), cone2({{1, 0}, {1, 1}})));
  CHECK_FALSE(cones_equal(cone2({{2, 0}, {1, 1}}), cone2({{1, 1}, {0, 1}})));
}

TEST_CASE("biduality on random cones up to dimension 5") {
  std::mt19937_64 rng(20240814);
  for (int trial = 0; trial < 80; ++trial) {
    Index d = 1 + trial % 5;
    Cone C = random_cone(rng, d, static_cast<int>(d) + 3);
    CAPTURE(trial);
    CHECK(well_formed(C));
    CHECK(cones_equal(dual_cone(dual_cone(C)), C));
  }
}

TEST_CASE("duality reverses containment") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    Index d = 2 + trial % 3;
    Cone A = random_cone(rng, d, 3);
    Cone B = conic_hull({A, random_cone(rng, d, 2)});  // A subset of B
    REQUIRE(is_subset(A, B));
    CHECK(is_subset(dual_cone(B), dual_cone(A)));
  }
}

TEST_CASE("dual of intersection equals hull of duals") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    Index d = 2 + trial % 3;
    Cone A = random_cone(rng, d, 4);
    Cone B = random_cone(rng, d, 4);
    Cone lhs = dual_cone(intersect(A, B));
    Cone rhs = conic_hull({dual_cone(A), dual_cone(B)});
    CHECK(cones_equal(lhs, rhs));
  }
}

TEST_CASE("description consistency: inequality test matches feasibility") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    Index d = 1 + trial % 4;
    Cone C = random_cone(rng, d, static_cast<int>(d) + 2);
    std::vector<RatVec> gens = generator_list(C);
    RatMat A(d, static_cast<Index>(gens.size()));
    for (size_t j = 0; j < gens.size(); ++j)
      A.col(static_cast<Index>(j)) = gens[j];
    for (int pt = 0; pt < 25; ++pt) {
      RatVec v(d);
      for (Index j = 0; j < d; ++j)
        v[j] = Rational(entry(rng), 1 + pt % 3);
      bool by_ineqs = contains(C, v, Containment::Boundary);
      bool by_feasibility =
          gens.empty() ? is_zero(v) : nonneg_solution(A, v).has_value();
      CAPTURE(trial);
      CAPTURE(pt);
      CHECK(by_ineqs == by_feasibility);
    }
  }
}

TEST_CASE("grid oracle: membership matches Caratheodory search, dim <= 3") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 12; ++trial) {
    Index d = 1 + trial % 3;
    Cone C = random_cone(rng, d, static_cast<int>(d) + 2);
    std::vector<RatVec> gens = generator_list(C);
    long lim = d == 3 ? 3 : 5;
    std::vector<long> coords(d, -lim);
    while (true) {
      RatVec v(d);
      for (Index j = 0; j < d; ++j) v[j] = coords[j];
      CHECK(contains(C, v, Containment::Boundary) ==
            caratheodory_member(gens, v));
      Index j = 0;
      while (j < d && coords[j] == lim) coords[j++] = -lim;
      if (j == d) break;
      ++coords[j];
    }
  }
}

TEST_CASE("canonical form regenerates from either description") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    Index d = 1 + trial % 4;
    Cone C = random_cone(rng, d, static_cast<int>(d) + 3);
    Cone from_gens = make_cone(C.rays(), C.lineality(), d);
    Cone from_ineqs =
        cone_from_inequalities(C.facets(), C.span_equations(), d);
    CHECK(cones_equal(from_gens, C));
    CHECK(cones_equal(from_ineqs, C));
  }
}
