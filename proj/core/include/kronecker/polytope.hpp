#pragma once

// Rational polytopes with their intrinsic lattice, height slices of cones and normal fans.

#include "kronecker/cone.hpp"
#include "kronecker/lattice_points.hpp"

#include <vector>

namespace kronecker {

struct AffineHull {
    RatVector point;  // a vertex of the polytope
    IntMatrix basis;  // rows: basis of (linear span of P - point) ∩ Z^d
};

struct Polytope {
    std::size_t ambient_dim = 0;
    RatMatrix vertices;  // extreme points, sorted
    AffineHull affine_hull;

    bool empty() const { return vertices.empty(); }
    std::size_t dimension() const { return affine_hull.basis.size(); }

    /// Coordinates of x (a point of the affine hull) in the intrinsic lattice basis.
    RatVector intrinsic(const RatVector& x) const;
    RatMatrix intrinsic_vertices() const;
};

/// Convex hull of a finite point set.
Polytope convex_hull(const RatMatrix& points);

/// {x in c : height(x) = h}.
Polytope slice_polytope(const Cone& c, const HeightFunction& height, std::int64_t h);

/// Facet inequalities <u, y> + b >= 0 of a full-dimensional polytope in Z^m given by rational
/// vertices, with (u, b) primitive. Equations, if the points are not full-dimensional, are
/// returned with b and the flag set.
struct AffineHalfspace {
    IntVector normal;
    Integer offset;
    bool equation = false;
};
std::vector<AffineHalfspace> polytope_facets(const RatMatrix& vertices);

struct FanRays {
    std::size_t dim = 0;
    IntMatrix rays;  // primitive, in the dual of the intrinsic lattice
    std::vector<std::vector<std::size_t>> maximal_cones;  // one per vertex
};

/// Inner normal fan of p, written in the polytope's intrinsic lattice. A point gives an empty fan.
FanRays normal_fan_rays(const Polytope& p);

/// Normalised volume (dim! times Euclidean volume) of a full-dimensional rational polytope in Q^m.
Rational normalized_volume(const RatMatrix& vertices);

}  // namespace kronecker
