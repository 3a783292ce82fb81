#include "kronecker/polytope.hpp"

#include "kronecker/errors.hpp"
#include "kronecker/triangulation.hpp"

#include <algorithm>
#include <map>

namespace kronecker {

namespace {

IntVector homogenize(const RatVector& v) {
    RatVector h(v);
    h.push_back(1);
    return primitive_on_ray(h);
}

}  // namespace

RatVector Polytope::intrinsic(const RatVector& x) const {
    RatVector diff(x.size());
    for (std::size_t t = 0; t < x.size(); ++t) diff[t] = x[t] - affine_hull.point[t];
    Integer den = 1;
    for (const auto& q : diff) den = lcm(den, denominator(q));
    IntVector scaled(diff.size());
    for (std::size_t t = 0; t < diff.size(); ++t) scaled[t] = numerator(diff[t] * Rational(den));
    RatVector c = lattice_coordinates(affine_hull.basis, scaled);
    for (auto& q : c) q /= Rational(den);
    return c;
}

RatMatrix Polytope::intrinsic_vertices() const {
    RatMatrix out;
    for (const auto& v : vertices) out.push_back(intrinsic(v));
    return out;
}

Polytope convex_hull(const RatMatrix& points) {
    Polytope p;
    if (points.empty()) return p;
    const std::size_t d = points.front().size();
    p.ambient_dim = d;
    IntMatrix gens;
    for (const auto& x : points) gens.push_back(homogenize(x));
    Cone c = double_description(Cone::from_rays(d + 1, gens));
    for (const auto& r : c.rays()) {
        RatVector v(d);
        for (std::size_t t = 0; t < d; ++t) v[t] = Rational(r[t], r[d]);
        p.vertices.push_back(std::move(v));
    }
    std::sort(p.vertices.begin(), p.vertices.end());
    p.affine_hull.point = p.vertices.front();
    IntMatrix diffs;
    for (const auto& v : p.vertices) {
        RatVector diff(d);
        for (std::size_t t = 0; t < d; ++t) diff[t] = v[t] - p.affine_hull.point[t];
        IntVector prim = primitive_on_ray(diff);
        if (!is_zero(prim)) diffs.push_back(std::move(prim));
    }
    if (!diffs.empty()) p.affine_hull.basis = saturated_span_basis(diffs, d);
    return p;
}

Polytope slice_polytope(const Cone& c, const HeightFunction& height, std::int64_t h) {
    const Cone full = (c.has_vrep() && c.has_hrep()) ? c : double_description(c);
    if (!full.pointed()) throw PreconditionError("slice_polytope needs a pointed cone");
    RatMatrix pts;
    const Rational target = Rational(h) * Rational(height.denominator);
    for (const auto& r : full.rays()) {
        const Integer hr = dot(height.weights, r);
        if (hr <= 0) throw PreconditionError("height must be positive on every ray");
        RatVector v(r.size());
        for (std::size_t t = 0; t < r.size(); ++t) v[t] = Rational(r[t]) * target / Rational(hr);
        pts.push_back(std::move(v));
    }
    if (h == 0 && !pts.empty()) pts = {RatVector(full.ambient_dim(), Rational(0))};
    return convex_hull(pts);
}

std::vector<AffineHalfspace> polytope_facets(const RatMatrix& vertices) {
    if (vertices.empty()) return {};
    const std::size_t m = vertices.front().size();
    IntMatrix gens;
    for (const auto& v : vertices) gens.push_back(homogenize(v));
    std::vector<AffineHalfspace> out;
    for (const auto& hs : halfspaces_from_rays(m + 1, gens)) {
        AffineHalfspace a;
        a.normal.assign(hs.normal.begin(), hs.normal.begin() + static_cast<std::ptrdiff_t>(m));
        a.offset = hs.normal[m];
        a.equation = hs.kind == Halfspace::Kind::equation;
        out.push_back(std::move(a));
    }
    return out;
}

FanRays normal_fan_rays(const Polytope& p) {
    FanRays fan;
    fan.dim = p.dimension();
    if (p.empty() || fan.dim == 0) return fan;
    const RatMatrix verts = p.intrinsic_vertices();
    std::vector<AffineHalfspace> facets;
    for (auto& f : polytope_facets(verts)) {
        if (f.equation) throw std::logic_error("intrinsic polytope is not full-dimensional");
        facets.push_back(std::move(f));
    }
    std::map<IntVector, std::size_t> index;
    std::vector<std::size_t> facet_ray(facets.size());
    for (std::size_t f = 0; f < facets.size(); ++f) {
        IntVector u = make_primitive(facets[f].normal);
        auto [it, fresh] = index.emplace(u, fan.rays.size());
        if (fresh) fan.rays.push_back(u);
        facet_ray[f] = it->second;
    }
    for (const auto& v : verts) {
        std::vector<std::size_t> cone;
        for (std::size_t f = 0; f < facets.size(); ++f) {
            if (dot(facets[f].normal, v) + Rational(facets[f].offset) == 0) cone.push_back(facet_ray[f]);
        }
        std::sort(cone.begin(), cone.end());
        fan.maximal_cones.push_back(std::move(cone));
    }
    return fan;
}

Rational normalized_volume(const RatMatrix& vertices) {
    if (vertices.empty()) return 0;
    const std::size_t m = vertices.front().size();
    IntMatrix gens;
    for (const auto& v : vertices) gens.push_back(homogenize(v));
    if (rank(gens) != m + 1) throw PreconditionError("normalized_volume needs a full-dimensional polytope");
    Rational total = 0;
    for (const auto& simplex : pulling_triangulation(gens)) {
        RatMatrix rows;
        const RatVector& base = vertices[simplex.front()];
        for (std::size_t i = 1; i < simplex.size(); ++i) {
            RatVector row(m);
            for (std::size_t t = 0; t < m; ++t) row[t] = vertices[simplex[i]][t] - base[t];
            rows.push_back(std::move(row));
        }
        // |det| of the rational edge matrix
        Integer den = 1;
        for (const auto& r : rows) {
            for (const auto& q : r) den = lcm(den, denominator(q));
        }
        IntMatrix scaled;
        for (const auto& r : rows) {
            IntVector s(m);
            for (std::size_t t = 0; t < m; ++t) s[t] = numerator(r[t] * Rational(den));
            scaled.push_back(std::move(s));
        }
        Integer det = abs(determinant(scaled));
        Rational vol(det);
        for (std::size_t t = 0; t < m; ++t) vol /= Rational(den);
        total += vol;
    }
    return total;
}

}  // namespace kronecker
