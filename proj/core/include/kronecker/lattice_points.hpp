#pragma once

#include "kronecker/cone.hpp"
#include "kronecker/errors.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace kronecker {

/// Linear functional x -> <weights, x> / denominator.
struct HeightFunction {
    IntVector weights;
    Integer denominator = 1;

    Rational operator()(const IntVector& x) const;
    Rational operator()(const RatVector& x) const;
};

using LatticePointVisitor = std::function<void(const std::vector<std::int64_t>&)>;

/// Streams the lattice points of height h (order unspecified); returns how many there were.
std::size_t for_each_lattice_point_at_height(const Cone& c, std::int64_t h, const HeightFunction& height,
                                             const LatticePointVisitor& visit,
                                             const EnumerationLimits& limits = {});

/// Lattice points x of the pointed cone c with height(x) == h, in lexicographic order.
///
/// The slice is parametrised by a reduced basis of its direction lattice; coordinates are fixed
/// one at a time and every node propagates interval bounds through the facet inequalities.
std::vector<IntVector> lattice_points_at_height(const Cone& c, std::int64_t h,
                                                const HeightFunction& height,
                                                const EnumerationLimits& limits = {});

/// Lattice points of a polytope given by its vertices (rational, any dimension).
std::vector<IntVector> polytope_lattice_points(const RatMatrix& vertices,
                                               const EnumerationLimits& limits = {});

}  // namespace kronecker
