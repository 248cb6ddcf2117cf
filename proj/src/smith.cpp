#include "vgit/smith.hpp"

namespace vgit {

namespace {

// Euclidean clearing of column t below the pivot; pivot ends as the gcd.
void clear_column(IntMat& M, Index t) {
  const Index m = M.rows(), n = M.cols();
  for (Index i = t + 1; i < m; ++i) {
    while (sgn(M(i, t)) != 0) {
      Integer q = M(i, t) / M(t, t);
      if (sgn(q) != 0)
        for (Index j = t; j < n; ++j) M(i, j) -= q * M(t, j);
      if (sgn(M(i, t)) != 0) M.row(i).swap(M.row(t));
    }
  }
}

void clear_row(IntMat& M, Index t) {
  const Index m = M.rows(), n = M.cols();
  for (Index j = t + 1; j < n; ++j) {
    while (sgn(M(t, j)) != 0) {
      Integer q = M(t, j) / M(t, t);
      if (sgn(q) != 0)
        for (Index i = t; i < m; ++i) M(i, j) -= q * M(i, t);
      if (sgn(M(t, j)) != 0) M.col(j).swap(M.col(t));
    }
  }
}

bool column_clean(const IntMat& M, Index t) {
  for (Index i = t + 1; i < M.rows(); ++i)
    if (sgn(M(i, t)) != 0) return false;
  return true;
}

}  // namespace

std::vector<Integer> invariant_factors(IntMat M) {
  const Index m = M.rows(), n = M.cols();
  std::vector<Integer> diag;
  for (Index t = 0; t < m && t < n; ++t) {
    // Pull the absolutely smallest nonzero entry of the trailing block to
    // the pivot position.
    Index pi = -1, pj = -1;
    Integer best = 0;
    for (Index i = t; i < m; ++i) {
      for (Index j = t; j < n; ++j) {
        if (sgn(M(i, j)) == 0) continue;
        Integer a = abs(M(i, j));
        if (pi < 0 || a < best) {
          pi = i;
          pj = j;
          best = a;
        }
      }
    }
    if (pi < 0) break;
    if (pi != t) M.row(t).swap(M.row(pi));
    if (pj != t) M.col(t).swap(M.col(pj));

    while (true) {
      clear_column(M, t);
      clear_row(M, t);
      if (!column_clean(M, t)) continue;
      // Pivot must divide every entry of the trailing block.
      Index bi = -1;
      for (Index i = t + 1; i < m && bi < 0; ++i)
        for (Index j = t + 1; j < n && bi < 0; ++j)
          if (sgn(M(i, j) % M(t, t)) != 0) bi = i;
      if (bi < 0) break;
      for (Index j = t; j < n; ++j) M(t, j) += M(bi, j);
    }
    diag.push_back(abs(M(t, t)));
  }
  return diag;
}

}  // namespace vgit
