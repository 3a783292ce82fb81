#pragma once

// Classification of the toric variety of a complete fan from its rays.

#include "kronecker/polytope.hpp"

#include <optional>
#include <vector>

namespace kronecker {

struct ClassGroup {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;  // invariant factors > 1
};

struct ToricReport {
    bool complete = false;
    // The remaining fields are absent when the fan is not complete.
    std::optional<bool> fano;
    std::optional<bool> gorenstein;
    std::optional<bool> terminal;
    std::optional<bool> reflexive;
    std::optional<Integer> fano_index;  // present only for Fano fans
    std::optional<ClassGroup> class_group;
    // Spanning polytope Q = conv(rays).
    std::optional<std::size_t> spanning_vertices;
    std::optional<std::size_t> spanning_lattice_points;
};

/// Every ridge of every maximal cone lies in exactly two maximal cones, and the origin is an
/// interior point of conv(rays).
bool fan_complete(const FanRays& f);

ToricReport classify_toric(const FanRays& f, const EnumerationLimits& limits = {});

/// Z^{rays} modulo the image of M under m -> (<m, r>)_r.
ClassGroup class_group(const IntMatrix& rays, std::size_t dim);

/// Largest m such that the class of (1, ..., 1) is divisible by m, or nullopt if that class is
/// torsion (every m works).
std::optional<Integer> anticanonical_divisibility(const IntMatrix& rays, std::size_t dim);

}  // namespace kronecker
