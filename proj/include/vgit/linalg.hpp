#pragma once

#include <optional>
#include <vector>

#include "vgit/rational.hpp"

// Exact Gaussian elimination utilities. Every basis returned here is in
// reduced row echelon form scaled to primitive integer rows with positive
// leading coefficient, which makes it a canonical representative of its row
// space.

namespace vgit {

// Canonical basis of the row space of the given vectors.
std::vector<RatVec> rref_rows(const std::vector<RatVec>& rows, Index dim);

Index rank_of(const std::vector<RatVec>& rows, Index dim);

// Canonical basis of {x : r.x = 0 for all rows r}.
std::vector<RatVec> kernel_basis(const std::vector<RatVec>& rows, Index dim);

// Orthogonal projection of v onto the span of the rows (standard inner
// product). Rows must be linearly independent.
RatVec project_onto_rowspan(const RatVec& v, const std::vector<RatVec>& rows);

// Membership of v in the span of an rref basis.
bool in_rowspan(const RatVec& v, const std::vector<RatVec>& rref_basis);

// Any particular solution of A x = b, or nullopt if inconsistent.
std::optional<RatVec> solve_linear(const RatMat& A, const RatVec& b);

}  // namespace vgit
