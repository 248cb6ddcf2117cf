#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "vgit/feasible.hpp"
#include "vgit/linalg.hpp"
#include "vgit/smith.hpp"

using namespace vgit;
using namespace vgit::testing;

TEST_CASE("rref_rows: canonical basis of a row space") {
  auto basis = rref_rows({rv({2, 4, 2}), rv({1, 2, 3})}, 3);
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == rv({1, 2, 0}));
  CHECK(basis[1] == rv({0, 0, 1}));
  // Any generating set of the same space gives the same basis.
  auto basis2 = rref_rows({rv({3, 6, 5}), rv({1, 2, 3}), rv({4, 8, 8})}, 3);
  CHECK(basis == basis2);
}

TEST_CASE("kernel_basis: annihilator of rows") {
  auto ker = kernel_basis({rv({1, 1, 0})}, 3);
  REQUIRE(ker.size() == 2);
  for (const RatVec& v : ker) CHECK(sgn(dot(v, rv({1, 1, 0}))) == 0);
  CHECK(kernel_basis({}, 2).size() == 2);
  CHECK(kernel_basis({rv({1, 0}), rv({0, 1})}, 2).empty());
}

TEST_CASE("project_onto_rowspan and span membership") {
  RatVec v = rv({3, 4});
  RatVec p = project_onto_rowspan(v, {rv({1, 0})});
  CHECK(p == rv({3, 0}));
  CHECK(in_rowspan(rv({2, 4, 6}), rref_rows({rv({1, 2, 3})}, 3)));
  CHECK_FALSE(in_rowspan(rv({1, 0, 0}), rref_rows({rv({1, 2, 3})}, 3)));
}

TEST_CASE("solve_linear: particular solutions and inconsistency") {
  RatMat A(2, 2);
  A << Rational(1), Rational(2), Rational(3), Rational(4);
  auto x = solve_linear(A, rv({5, 11}));
  REQUIRE(x.has_value());
  CHECK(A * *x == rv({5, 11}));
  RatMat B(2, 1);
  B << Rational(1), Rational(2);
  CHECK_FALSE(solve_linear(B, rv({1, 3})).has_value());
}

TEST_CASE("nonneg_solution: conic feasibility") {
  // (4,2) = 1*(2,0) + 2*(1,1)
  RatMat A(2, 2);
  A << Rational(2), Rational(1), Rational(0), Rational(1);
  auto x = nonneg_solution(A, rv({4, 2}));
  REQUIRE(x.has_value());
  CHECK(A * *x == rv({4, 2}));
  for (Index i = 0; i < x->size(); ++i) CHECK(sgn((*x)[i]) >= 0);
  // (4,2) against columns (1,1),(0,1) forces a negative coefficient.
  RatMat B(2, 2);
  B << Rational(1), Rational(0), Rational(1), Rational(1);
  CHECK_FALSE(nonneg_solution(B, rv({4, 2})).has_value());
}

TEST_CASE("nonneg_solution agrees with Caratheodory on random systems") {
  std::mt19937_64 rng(97);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> ncols(1, 6);
  for (int trial = 0; trial < 120; ++trial) {
    Index d = 1 + trial % 3;
    Index m = ncols(rng);
    RatMat A(d, m);
    std::vector<RatVec> cols;
    for (Index j = 0; j < m; ++j) {
      for (Index i = 0; i < d; ++i) A(i, j) = entry(rng);
      cols.push_back(A.col(j));
    }
    RatVec b(d);
    for (Index i = 0; i < d; ++i) b[i] = entry(rng);
    CHECK(nonneg_solution(A, b).has_value() == caratheodory_member(cols, b));
  }
}

TEST_CASE("inequality_solution: strict separation instances") {
  // lambda with <(2,0),l> >= 0, <(1,1),l> >= 0, <(2,4),l> <= -1 exists.
  RatMat G(3, 2);
  G << Rational(2), Rational(0), Rational(1), Rational(1), Rational(-2),
      Rational(-4);
  RatVec h = rv({0, 0, 1});
  auto l = inequality_solution(G, h);
  REQUIRE(l.has_value());
  for (Index i = 0; i < 3; ++i) CHECK(dot(RatVec(G.row(i)), *l) >= h[i]);
  // No lambda can separate (6,2) from the cone it lies in.
  RatMat G2(3, 2);
  G2 << Rational(2), Rational(0), Rational(1), Rational(1), Rational(-6),
      Rational(-2);
  CHECK_FALSE(inequality_solution(G2, h).has_value());
}

TEST_CASE("invariant_factors: hand-checked Smith forms") {
  CHECK(invariant_factors(im({{2, 1, 0}, {0, 1, 1}})) ==
        std::vector<Integer>{1, 1});
  CHECK(invariant_factors(im({{2, 0}, {0, 1}})) ==
        std::vector<Integer>{1, 2});
  CHECK(invariant_factors(im({{1, 0}, {1, 1}})) ==
        std::vector<Integer>{1, 1});
  CHECK(invariant_factors(im({{0}})).empty());
  CHECK(invariant_factors(im({{6, 4}, {4, 6}})) ==
        std::vector<Integer>{2, 10});  // det 20, gcd 2
}

TEST_CASE("invariant_factors: divisibility chain and minor gcds") {
  std::mt19937_64 rng(113);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int trial = 0; trial < 60; ++trial) {
    Index k = 1 + trial % 3;
    Index n = 1 + (trial / 3) % 4;
    IntMat M(k, n);
    for (Index i = 0; i < k; ++i)
      for (Index j = 0; j < n; ++j) M(i, j) = entry(rng);
    auto f = invariant_factors(M);
    for (size_t i = 0; i + 1 < f.size(); ++i) CHECK(f[i + 1] % f[i] == 0);
    // d1 equals the gcd of all entries.
    Integer g = 0;
    for (Index i = 0; i < k; ++i)
      for (Index j = 0; j < n; ++j) g = gcd(g, M(i, j));
    if (g != 0) {
      REQUIRE(!f.empty());
      CHECK(f[0] == g);
    } else {
      CHECK(f.empty());
    }
    // Product of the factors of a full 2x2 block equals |det| when k=n=2.
    if (k == 2 && n == 2) {
      Integer det = M(0, 0) * M(1, 1) - M(0, 1) * M(1, 0);
      if (det != 0) {
        REQUIRE(f.size() == 2);
        CHECK(f[0] * f[1] == abs(det));
      }
    }
  }
}
