#pragma once

// Hilbert bases of pointed rational cones with a positive integral height function.

#include "kronecker/cone.hpp"
#include "kronecker/lattice_points.hpp"

#include <vector>

namespace kronecker {

struct HilbertOptions {
    int max_degree = 4;
    int certify_window = 2;
    EnumerationLimits limits;
};

struct HilbertBasis {
    std::vector<IntVector> generators;  // ordered by height, then lexicographically
    std::vector<std::int64_t> heights;  // parallel to generators
    /// Every height up to this one was scanned, so no generator of height <= it is missing.
    int certified_up_to = 0;
    /// No generator appeared above max_degree inside the certification window.
    bool window_clean = true;

    std::vector<std::size_t> count_by_height() const;  // index h holds the count at height h
};

/// Degree-slice algorithm: a lattice point of height h is a generator iff it is not the sum of
/// a generator of smaller height and a lattice point of the cone.
HilbertBasis hilbert_basis(const Cone& c, const HeightFunction& height, const HilbertOptions& options = {});

/// Exact Hilbert basis from a triangulation: lattice points of the fundamental parallelepipeds of
/// all simplicial subcones, reduced to the irreducible ones. Meant for small cones.
std::vector<IntVector> hilbert_basis_exact(const Cone& c, std::size_t max_candidates = 2'000'000);

/// True iff x (a nonzero lattice point of c) is not a sum of two nonzero lattice points of c,
/// decided by lattice-point enumeration of the slices below x. Used as a desk-scale check.
bool is_irreducible(const Cone& c, const HeightFunction& height, const IntVector& x,
                    const EnumerationLimits& limits = {});

}  // namespace kronecker
