#include "kronecker/hilbert.hpp"

#include "kronecker/errors.hpp"
#include "kronecker/triangulation.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace kronecker {

std::vector<std::size_t> HilbertBasis::count_by_height() const {
    std::vector<std::size_t> out;
    for (auto h : heights) {
        if (static_cast<std::size_t>(h) >= out.size()) out.resize(static_cast<std::size_t>(h) + 1, 0);
        ++out[static_cast<std::size_t>(h)];
    }
    return out;
}

namespace {

// Sparse int64 copy of the facet inequalities, used for fast membership of differences.
struct FacetTable {
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> rows;

    explicit FacetTable(const Cone& c) {
        for (const auto& hs : c.inequalities()) {
            std::vector<std::pair<std::size_t, std::int64_t>> row;
            for (std::size_t t = 0; t < hs.normal.size(); ++t) {
                if (hs.normal[t] != 0) row.emplace_back(t, hs.normal[t].convert_to<std::int64_t>());
            }
            rows.push_back(std::move(row));
        }
    }

    std::vector<std::int64_t> values(const std::vector<std::int64_t>& x) const {
        std::vector<std::int64_t> out(rows.size(), 0);
        for (std::size_t c = 0; c < rows.size(); ++c) {
            for (const auto& [t, a] : rows[c]) out[c] += a * x[t];
        }
        return out;
    }
};

bool dominates(const std::vector<std::int64_t>& p, const std::vector<std::int64_t>& g) {
    for (std::size_t c = 0; c < p.size(); ++c) {
        if (p[c] < g[c]) return false;
    }
    return true;
}

}  // namespace

HilbertBasis hilbert_basis(const Cone& c, const HeightFunction& height, const HilbertOptions& options) {
    if (options.max_degree < 1 || options.certify_window < 0) {
        throw PreconditionError("hilbert_basis needs max_degree >= 1 and certify_window >= 0");
    }
    const Cone full = (c.has_vrep() && c.has_hrep()) ? c : double_description(c);
    if (!full.pointed()) throw PreconditionError("hilbert_basis needs a pointed cone");
    for (const auto& r : full.rays()) {
        if (dot(height.weights, r) <= 0) throw PreconditionError("height must be positive on every ray");
    }
    const FacetTable facets(full);
    // Facet values of the generators found so far. Inside the cone the equations hold for
    // every difference of lattice points, so p - g lies in the cone iff all facet values of p
    // dominate those of g.
    std::vector<std::vector<std::int64_t>> gen_values;

    HilbertBasis out;
    const int last = options.max_degree + options.certify_window;
    for (int h = 1; h <= last; ++h) {
        const std::size_t before = gen_values.size();
        for_each_lattice_point_at_height(
            full, h, height,
            [&](const std::vector<std::int64_t>& p) {
                const auto pv = facets.values(p);
                for (std::size_t g = 0; g < before; ++g) {
                    if (dominates(pv, gen_values[g])) return;
                }
                Integer num = dot(height.weights, to_integer(p));
                if (num % height.denominator != 0) throw PreconditionError("lattice point of non-integral height");
                out.generators.push_back(to_integer(p));
                out.heights.push_back(h);
                gen_values.push_back(pv);
            },
            options.limits);
        if (h > options.max_degree && gen_values.size() > before) out.window_clean = false;
        out.certified_up_to = h;
    }
    // The stream order is an artefact of the search; report by height, then lexicographically.
    std::vector<std::size_t> idx(out.generators.size());
    for (std::size_t t = 0; t < idx.size(); ++t) idx[t] = t;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return std::tie(out.heights[a], out.generators[a]) < std::tie(out.heights[b], out.generators[b]);
    });
    HilbertBasis sorted;
    sorted.certified_up_to = out.certified_up_to;
    sorted.window_clean = out.window_clean;
    for (auto t : idx) {
        sorted.generators.push_back(std::move(out.generators[t]));
        sorted.heights.push_back(out.heights[t]);
    }
    return sorted;
}

std::vector<IntVector> hilbert_basis_exact(const Cone& c, std::size_t max_candidates) {
    const Cone full = (c.has_vrep() && c.has_hrep()) ? c : double_description(c);
    if (!full.pointed()) throw PreconditionError("hilbert_basis_exact needs a pointed cone");
    const IntMatrix& rays = full.rays();
    if (rays.empty()) return {};
    const std::size_t d = full.ambient_dim();
    const IntMatrix basis = saturated_span_basis(rays, d);
    const std::size_t k = basis.size();

    std::set<IntVector> candidates(rays.begin(), rays.end());
    for (const auto& simplex : pulling_triangulation(rays)) {
        IntMatrix r(k);  // simplex rays in lattice coordinates
        for (std::size_t i = 0; i < k; ++i) {
            for (const auto& q : lattice_coordinates(basis, rays[simplex[i]])) r[i].push_back(numerator(q));
        }
        // lambda = x R^{-1}; with U R V = D the group Z^k / Z^k R is parametrised by
        // y in prod [0, d_i), and lambda = sum_i (y_i / d_i) U_i.
        const SmithForm snf = smith_normal_form(r, k, k);
        std::vector<Integer> y(k, 0);
        while (true) {
            RatVector lambda(k, Rational(0));
            for (std::size_t i = 0; i < k; ++i) {
                if (y[i] == 0) continue;
                const Rational f(y[i], snf.diagonal[i]);
                for (std::size_t j = 0; j < k; ++j) lambda[j] += f * Rational(snf.u[i][j]);
            }
            bool nonzero = false;
            RatVector xr(d, Rational(0));
            for (std::size_t j = 0; j < k; ++j) {
                const Rational frac = lambda[j] - Rational(floor_div(lambda[j]));
                if (frac == 0) continue;
                nonzero = true;
                const IntVector& ray = rays[simplex[j]];
                for (std::size_t t = 0; t < d; ++t) xr[t] += frac * Rational(ray[t]);
            }
            if (nonzero) {
                IntVector x(d);
                for (std::size_t t = 0; t < d; ++t) {
                    if (denominator(xr[t]) != 1) throw std::logic_error("parallelepiped point is not integral");
                    x[t] = numerator(xr[t]);
                }
                candidates.insert(std::move(x));
                if (candidates.size() > max_candidates) {
                    throw ResourceLimitError("max_candidates", max_candidates, candidates.size());
                }
            }
            std::size_t pos = 0;
            while (pos < k) {
                if (++y[pos] < snf.diagonal[pos]) break;
                y[pos] = 0;
                ++pos;
            }
            if (pos == k) break;
        }
    }

    std::vector<IntVector> cand(candidates.begin(), candidates.end());
    std::vector<IntVector> out;
    for (std::size_t a = 0; a < cand.size(); ++a) {
        bool reducible = false;
        for (std::size_t b = 0; b < cand.size() && !reducible; ++b) {
            if (a == b) continue;
            IntVector diff(d);
            for (std::size_t t = 0; t < d; ++t) diff[t] = cand[a][t] - cand[b][t];
            if (!is_zero(diff) && contains(full, diff)) reducible = true;
        }
        if (!reducible) out.push_back(cand[a]);
    }
    return out;
}

bool is_irreducible(const Cone& c, const HeightFunction& height, const IntVector& x,
                    const EnumerationLimits& limits) {
    const Cone full = (c.has_vrep() && c.has_hrep()) ? c : double_description(c);
    const Rational hx = height(x);
    if (denominator(hx) != 1 || hx <= 0) throw PreconditionError("point must have positive integral height");
    const auto top = numerator(hx).convert_to<std::int64_t>();
    for (std::int64_t h = 1; h < top; ++h) {
        bool found = false;
        for_each_lattice_point_at_height(
            full, h, height,
            [&](const std::vector<std::int64_t>& p) {
                if (found) return;
                IntVector diff(x.size());
                for (std::size_t t = 0; t < x.size(); ++t) diff[t] = x[t] - p[t];
                if (contains(full, diff)) found = true;
            },
            limits);
        if (found) return false;
    }
    return true;
}

}  // namespace kronecker
