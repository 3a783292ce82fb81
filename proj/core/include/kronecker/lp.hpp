#pragma once

#include "kronecker/arith.hpp"

#include <optional>

namespace kronecker {

/// Exact phase-one simplex: finds lambda >= 0 with sum_i lambda_i * generators[i] = target,
/// or nullopt when the target is not in the cone spanned by the generators.
std::optional<RatVector> nonnegative_combination(const IntMatrix& generators,
                                                 const RatVector& target);

}  // namespace kronecker
