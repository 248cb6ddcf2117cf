#pragma once

#include <optional>

#include "vgit/rational.hpp"

// Exact linear feasibility over Q via phase-1 simplex with Bland's rule.
// Termination is guaranteed and there are no tolerances: a system is feasible
// iff the phase-1 optimum is exactly zero.

namespace vgit {

// Some x >= 0 with A x = b, or nullopt.
std::optional<RatVec> nonneg_solution(const RatMat& A, const RatVec& b);

// Some free y with G y >= h, or nullopt. The returned point is a vertex of
// the feasible region of the lifted standard-form program.
std::optional<RatVec> inequality_solution(const RatMat& G, const RatVec& h);

}  // namespace vgit
