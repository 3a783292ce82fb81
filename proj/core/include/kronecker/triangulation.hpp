#pragma once

#include "kronecker/arith.hpp"

#include <vector>

namespace kronecker {

/// Pulling triangulation of the pointed cone spanned by `rays` (no lineality). Each simplex is
/// a list of indices into `rays` whose rays are linearly independent and span a full-dimensional
/// subcone; the simplices cover the cone and meet in common faces.
std::vector<std::vector<std::size_t>> pulling_triangulation(const IntMatrix& rays);

/// Coordinates of x in the lattice basis whose rows are `basis` (x must lie in its span).
RatVector lattice_coordinates(const IntMatrix& basis, const IntVector& x);

}  // namespace kronecker
