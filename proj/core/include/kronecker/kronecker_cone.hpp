#pragma once

// The cone of exponent vectors of semi-standard linked pairs and its two Grassmannian views.

#include "kronecker/cone.hpp"
#include "kronecker/lattice_points.hpp"
#include "kronecker/quiver.hpp"

#include <vector>

namespace kronecker {

/// Nonnegativity, equal row sums on both sides, and the column-strictness inequalities
/// between consecutive rows of T+ and of T-.
Cone kronecker_halfspaces(const QuiverSpec& spec);

/// v -> (sum of entries) / lcm(r1, r2).
HeightFunction kronecker_height(const QuiverSpec& spec);

/// One of the two Grassmannians whose coordinates embed into those of the Kronecker space.
///
/// minus_side: Gr(r1, n*r2). The r2 x r1 matrices are stacked vertically and transposed, so
/// x^i_{jk} sits in row k, column (i-1)*r2 + j.
/// plus_side: Gr(r2, n*r1). The matrices are stacked horizontally, so x^i_{jk} sits in row j,
/// column (i-1)*r1 + k.
struct GrassmannianSpec {
    enum class Orientation { minus_side, plus_side };

    QuiverSpec ambient;
    Orientation orientation = Orientation::minus_side;

    int r() const { return orientation == Orientation::minus_side ? ambient.r1 : ambient.r2; }
    int N() const { return ambient.n * (orientation == Orientation::minus_side ? ambient.r2 : ambient.r1); }

    /// The Grassmannian as a Kronecker space (N arrows, dimension vector (1, r)).
    QuiverSpec as_quiver() const { return QuiverSpec(N(), 1, r()); }

    /// Flat ambient index of the entry in row `row` and column `col` (both 1-based).
    std::size_t ambient_index(int row, int col) const;

    /// perm[f] = flat index in as_quiver() coordinates of ambient coordinate f.
    std::vector<std::size_t> coordinate_map() const;
};

/// The cone of the Grassmannian's own Kronecker description, expressed in ambient coordinates.
Cone grassmannian_view(const GrassmannianSpec& g);

/// Relabels coordinates: the result's coordinate f is the input's coordinate perm[f].
Cone pull_back(const Cone& c, const std::vector<std::size_t>& perm);

/// Concatenates the half-space descriptions and completes both representations.
Cone intersect(const Cone& a, const Cone& b);

}  // namespace kronecker
