#include "kronecker/toric.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace kronecker {

namespace {

RatMatrix as_points(const IntMatrix& rays) {
    RatMatrix out;
    for (const auto& r : rays) out.push_back(to_rational(r));
    return out;
}

bool origin_interior(const std::vector<AffineHalfspace>& facets) {
    for (const auto& f : facets) {
        if (f.equation || f.offset <= 0) return false;
    }
    return !facets.empty();
}

}  // namespace

bool fan_complete(const FanRays& f) {
    if (f.rays.empty() || f.dim == 0) return false;
    if (!origin_interior(polytope_facets(as_points(f.rays)))) return false;
    std::map<std::vector<std::size_t>, int> ridges;
    for (const auto& cone : f.maximal_cones) {
        IntMatrix gens;
        for (auto i : cone) gens.push_back(f.rays[i]);
        if (rank(gens) != f.dim) return false;
        for (const auto& hs : halfspaces_from_rays(f.dim, gens)) {
            if (hs.kind != Halfspace::Kind::inequality) continue;
            std::vector<std::size_t> tight;
            for (auto i : cone) {
                if (dot(hs.normal, f.rays[i]) == 0) tight.push_back(i);
            }
            ++ridges[tight];
        }
    }
    return std::all_of(ridges.begin(), ridges.end(), [](const auto& kv) { return kv.second == 2; });
}

ClassGroup class_group(const IntMatrix& rays, std::size_t dim) {
    ClassGroup g;
    const SmithForm snf = smith_normal_form(rays, rays.size(), dim);
    std::size_t r = 0;
    for (const auto& d : snf.diagonal) {
        if (d == 0) continue;
        ++r;
        if (d > 1) g.torsion.push_back(d);
    }
    g.free_rank = rays.size() - r;
    return g;
}

std::optional<Integer> anticanonical_divisibility(const IntMatrix& rays, std::size_t dim) {
    const std::size_t n = rays.size();
    const SmithForm snf = smith_normal_form(rays, n, dim);
    // In coordinates y = U * (1,...,1) the group is prod Z/d_i x Z^{free}.
    IntVector y(n, Integer(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) y[i] += snf.u[i][j];
    }
    Integer g = 0;
    std::vector<std::pair<Integer, Integer>> torsion;  // (d, component)
    for (std::size_t i = 0; i < n; ++i) {
        const Integer d = i < snf.diagonal.size() ? snf.diagonal[i] : Integer(0);
        if (d == 0) g = gcd(g, y[i]);
        else if (d > 1) torsion.emplace_back(d, ((y[i] % d) + d) % d);
    }
    if (g == 0) return std::nullopt;
    g = abs(g);
    // m must divide g; a torsion component x mod d is m-divisible iff gcd(m, d) | x.
    for (Integer m = g; m >= 1; --m) {
        if (g % m != 0) continue;
        bool ok = true;
        for (const auto& [d, x] : torsion) {
            if (x % gcd(m, d) != 0) {
                ok = false;
                break;
            }
        }
        if (ok) return m;
    }
    return Integer(1);
}

ToricReport classify_toric(const FanRays& f, const EnumerationLimits& limits) {
    ToricReport rep;
    rep.complete = fan_complete(f);
    if (!rep.complete) return rep;

    const RatMatrix pts = as_points(f.rays);
    const Polytope q = convex_hull(pts);
    const auto facets = polytope_facets(q.vertices);
    const bool interior = origin_interior(facets);
    std::set<RatVector> verts(q.vertices.begin(), q.vertices.end());
    const bool rays_are_vertices =
        std::all_of(pts.begin(), pts.end(), [&](const RatVector& r) { return verts.count(r) > 0; });
    rep.fano = interior && rays_are_vertices;

    bool reflexive = interior;
    for (const auto& fa : facets) {
        // polar vertex u / b must be integral
        for (const auto& u : fa.normal) {
            if (u % fa.offset != 0) reflexive = false;
        }
    }
    rep.reflexive = reflexive;
    rep.gorenstein = reflexive;

    const auto points = polytope_lattice_points(q.vertices, limits);
    rep.spanning_vertices = q.vertices.size();
    rep.spanning_lattice_points = points.size();
    bool only_vertices_and_origin = true;
    for (const auto& p : points) {
        if (is_zero(p)) continue;
        if (!verts.count(to_rational(p))) only_vertices_and_origin = false;
    }
    rep.terminal = *rep.fano && only_vertices_and_origin;

    rep.class_group = class_group(f.rays, f.dim);
    if (*rep.fano) rep.fano_index = anticanonical_divisibility(f.rays, f.dim);
    return rep;
}

}  // namespace kronecker
