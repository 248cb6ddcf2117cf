#include "vgit/linalg.hpp"

#include <stdexcept>

namespace vgit {

namespace {

// In-place reduced row echelon form over Q. Returns pivot columns.
std::vector<Index> rref_inplace(std::vector<RatVec>& rows, Index dim) {
  std::vector<Index> pivots;
  Index r = 0;
  for (Index c = 0; c < dim && r < static_cast<Index>(rows.size()); ++c) {
    Index p = -1;
    for (Index i = r; i < static_cast<Index>(rows.size()); ++i) {
      if (sgn(rows[i][c]) != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    std::swap(rows[r], rows[p]);
    Rational inv = rows[r][c];
    for (Index j = c; j < dim; ++j) rows[r][j] /= inv;
    for (Index i = 0; i < static_cast<Index>(rows.size()); ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      Rational f = rows[i][c];
      for (Index j = c; j < dim; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r, RatVec());
  return pivots;
}

}  // namespace

std::vector<RatVec> rref_rows(const std::vector<RatVec>& rows, Index dim) {
  std::vector<RatVec> work;
  work.reserve(rows.size());
  for (const RatVec& v : rows) {
    if (v.size() != dim) throw std::invalid_argument("rref_rows: bad row size");
    if (!is_zero(v)) work.push_back(v);
  }
  rref_inplace(work, dim);
  for (RatVec& v : work) v = primitive(v);  // leading entry was +1
  return work;
}

Index rank_of(const std::vector<RatVec>& rows, Index dim) {
  std::vector<RatVec> work = rows;
  return static_cast<Index>(rref_inplace(work, dim).size());
}

std::vector<RatVec> kernel_basis(const std::vector<RatVec>& rows, Index dim) {
  std::vector<RatVec> work;
  for (const RatVec& v : rows)
    if (!is_zero(v)) work.push_back(v);
  std::vector<Index> pivots = rref_inplace(work, dim);
  std::vector<bool> is_pivot(dim, false);
  for (Index c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (Index f = 0; f < dim; ++f) {
    if (is_pivot[f]) continue;
    RatVec x = RatVec::Zero(dim);
    x[f] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -work[i][f];
    basis.push_back(x);
  }
  return rref_rows(basis, dim);
}

RatVec project_onto_rowspan(const RatVec& v, const std::vector<RatVec>& rows) {
  const Index m = static_cast<Index>(rows.size());
  if (m == 0) return RatVec::Zero(v.size());
  RatMat gram(m, m);
  RatVec rhs(m);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) gram(i, j) = dot(rows[i], rows[j]);
    rhs[i] = dot(rows[i], v);
  }
  std::optional<RatVec> y = solve_linear(gram, rhs);
  if (!y) throw std::logic_error("project_onto_rowspan: dependent rows");
  RatVec p = RatVec::Zero(v.size());
  for (Index i = 0; i < m; ++i) p += (*y)[i] * rows[i];
  return p;
}

bool in_rowspan(const RatVec& v, const std::vector<RatVec>& rref_basis) {
  RatVec rem = v;
  for (const RatVec& row : rref_basis) {
    Index lead = -1;
    for (Index j = 0; j < row.size(); ++j) {
      if (sgn(row[j]) != 0) {
        lead = j;
        break;
      }
    }
    if (lead < 0) continue;
    if (sgn(rem[lead]) != 0) rem -= (rem[lead] / row[lead]) * row;
  }
  return is_zero(rem);
}

std::optional<RatVec> solve_linear(const RatMat& A, const RatVec& b) {
  const Index m = A.rows(), n = A.cols();
  RatMat T(m, n + 1);
  T.leftCols(n) = A;
  T.col(n) = b;
  Index r = 0;
  std::vector<Index> pivots;
  for (Index c = 0; c < n && r < m; ++c) {
    Index p = -1;
    for (Index i = r; i < m; ++i) {
      if (sgn(T(i, c)) != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    T.row(r).swap(T.row(p));
    Rational inv = T(r, c);
    for (Index j = c; j <= n; ++j) T(r, j) /= inv;
    for (Index i = 0; i < m; ++i) {
      if (i == r || sgn(T(i, c)) == 0) continue;
      Rational f = T(i, c);
      for (Index j = c; j <= n; ++j) T(i, j) -= f * T(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  for (Index i = r; i < m; ++i)
    if (sgn(T(i, n)) != 0) return std::nullopt;
  RatVec x = RatVec::Zero(n);
  for (Index i = 0; i < r; ++i) x[pivots[i]] = T(i, n);
  return x;
}

}  // namespace vgit
