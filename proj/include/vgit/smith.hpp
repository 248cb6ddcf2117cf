#pragma once

#include <vector>

#include "vgit/rational.hpp"

namespace vgit {

// Nonzero invariant factors d_1 | d_2 | ... | d_r of an integer matrix, all
// positive, in divisibility order. The rank of the matrix is r.
std::vector<Integer> invariant_factors(IntMat M);

}  // namespace vgit
