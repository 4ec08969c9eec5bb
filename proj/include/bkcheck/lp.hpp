#pragma once

#include <optional>

#include "bkcheck/linalg.hpp"

namespace bkcheck {

/// Some z >= 0 with a z = b, or nothing when the system is infeasible.
/// Exact phase-one simplex with Bland's anti-cycling rule.
std::optional<RationalVector> find_nonnegative_solution(const RationalMatrix& a, const RationalVector& b);

/// Non-negative coefficients expressing target over the columns of generators, if any.
inline std::optional<RationalVector> cone_membership(const RationalMatrix& generators, const RationalVector& target) {
  return find_nonnegative_solution(generators, target);
}

}  // namespace bkcheck
