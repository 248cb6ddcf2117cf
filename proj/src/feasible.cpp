#include "vgit/feasible.hpp"

#include <stdexcept>
#include <vector>

namespace vgit {

std::optional<RatVec> nonneg_solution(const RatMat& A, const RatVec& b) {
  const Index m = A.rows(), n = A.cols();
  if (b.size() != m) throw std::invalid_argument("nonneg_solution: size");

  // Tableau [A | I | b] with artificial basis, rows flipped so b >= 0.
  RatMat T(m, n + m + 1);
  T.setZero();
  for (Index i = 0; i < m; ++i) {
    int flip = sgn(b[i]) < 0 ? -1 : 1;
    for (Index j = 0; j < n; ++j) T(i, j) = flip * A(i, j);
    T(i, n + i) = 1;
    T(i, n + m) = flip * b[i];
  }
  std::vector<Index> basis(m);
  for (Index i = 0; i < m; ++i) basis[i] = n + i;

  auto is_artificial = [&](Index j) { return j >= n; };

  while (true) {
    // Reduced costs for the phase-1 objective (sum of artificials).
    Index enter = -1;
    for (Index j = 0; j < n + m && enter < 0; ++j) {
      Rational rc = is_artificial(j) ? 1 : 0;
      for (Index i = 0; i < m; ++i)
        if (is_artificial(basis[i])) rc -= T(i, j);
      if (sgn(rc) < 0) enter = j;  // Bland: first improving column
    }
    if (enter < 0) break;

    Index leave = -1;
    Rational best;
    for (Index i = 0; i < m; ++i) {
      if (sgn(T(i, enter)) <= 0) continue;
      Rational ratio = T(i, n + m) / T(i, enter);
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0)
      throw std::logic_error("nonneg_solution: unbounded phase-1");

    Rational piv = T(leave, enter);
    for (Index j = 0; j <= n + m; ++j) T(leave, j) /= piv;
    for (Index i = 0; i < m; ++i) {
      if (i == leave || sgn(T(i, enter)) == 0) continue;
      Rational f = T(i, enter);
      for (Index j = 0; j <= n + m; ++j) T(i, j) -= f * T(leave, j);
    }
    basis[leave] = enter;
  }

  Rational objective = 0;
  for (Index i = 0; i < m; ++i)
    if (is_artificial(basis[i])) objective += T(i, n + m);
  if (sgn(objective) != 0) return std::nullopt;

  RatVec x = RatVec::Zero(n);
  for (Index i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = T(i, n + m);
  return x;
}

std::optional<RatVec> inequality_solution(const RatMat& G, const RatVec& h) {
  const Index m = G.rows(), k = G.cols();
  if (h.size() != m) throw std::invalid_argument("inequality_solution: size");
  // y = u - v with u, v >= 0 and surplus s: G u - G v - s = h.
  RatMat A(m, 2 * k + m);
  A.setZero();
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < k; ++j) {
      A(i, j) = G(i, j);
      A(i, k + j) = -G(i, j);
    }
    A(i, 2 * k + i) = -1;
  }
  std::optional<RatVec> x = nonneg_solution(A, h);
  if (!x) return std::nullopt;
  RatVec y(k);
  for (Index j = 0; j < k; ++j) y[j] = (*x)[j] - (*x)[k + j];
  return y;
}

}  // namespace vgit
