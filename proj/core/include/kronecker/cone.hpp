#pragma once

// Rational polyhedral cones with half-space and ray representations.

#include "kronecker/arith.hpp"

#include <optional>
#include <vector>

namespace kronecker {

struct Halfspace {
    enum class Kind { inequality, equation };

    IntVector normal;  // primitive
    Kind kind = Kind::inequality;

    static Halfspace inequality(IntVector normal);
    static Halfspace equation(IntVector normal);

    bool operator==(const Halfspace&) const = default;
};

class Cone {
public:
    Cone() = default;
    explicit Cone(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

    static Cone from_halfspaces(std::size_t ambient_dim, std::vector<Halfspace> hrep);
    static Cone from_rays(std::size_t ambient_dim, IntMatrix rays);

    std::size_t ambient_dim() const { return ambient_dim_; }

    bool has_hrep() const { return hrep_.has_value(); }
    bool has_vrep() const { return vrep_.has_value(); }
    const std::vector<Halfspace>& hrep() const;
    const IntMatrix& rays() const;
    const IntMatrix& lineality() const { return lineality_; }
    bool pointed() const { return lineality_.empty(); }

    /// Dimension of the linear span (requires vrep).
    std::size_t dimension() const;

    std::vector<Halfspace> equations() const;
    std::vector<Halfspace> inequalities() const;

    void set_hrep(std::vector<Halfspace> h) { hrep_ = std::move(h); }
    void set_vrep(IntMatrix rays, IntMatrix lineality);

private:
    std::size_t ambient_dim_ = 0;
    std::optional<std::vector<Halfspace>> hrep_;
    std::optional<IntMatrix> vrep_;
    IntMatrix lineality_;
};

struct DoubleDescriptionResult {
    IntMatrix rays;       // extreme rays, primitive, sorted
    IntMatrix lineality;  // basis of the lineality space
};

/// Extreme rays of {x : <a,x> >= 0 for inequalities, <a,x> = 0 for equations}.
DoubleDescriptionResult rays_from_halfspaces(std::size_t dim, const std::vector<Halfspace>& hrep);

/// Irredundant description of cone(generators): facets plus a basis of equations.
std::vector<Halfspace> halfspaces_from_rays(std::size_t dim, const IntMatrix& generators);

/// Completes whichever representation is missing, reduces the hrep to an irredundant one
/// (equations spanning lin(C)^perp, one inequality per facet) and certifies both. Lineality
/// is recorded, never fatal.
Cone double_description(const Cone& c);

/// Irredundant hrep computed from the rays of a cone whose vrep is known.
std::vector<Halfspace> irredundant_hrep(std::size_t dim, const IntMatrix& rays,
                                        const std::vector<Halfspace>& candidates);

struct Certificate {
    bool rays_satisfy_halfspaces = false;
    bool facets_supported = false;   // every inequality is tight on rays spanning dim-1
    bool round_trip = false;         // H -> V -> H gives the same facet/equation set
    bool ok() const { return rays_satisfy_halfspaces && facets_supported && round_trip; }
};
Certificate certify(const Cone& c);

/// Exact membership. Uses the hrep when present, otherwise exact LP feasibility on the rays.
bool contains(const Cone& c, const RatVector& point);
bool contains(const Cone& c, const IntVector& point);

/// Sets of ray indices tight on each inequality (used to identify facets).
std::vector<std::vector<std::size_t>> facet_ray_incidence(const Cone& c);

}  // namespace kronecker
