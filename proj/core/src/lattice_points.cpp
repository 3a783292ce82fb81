#include "kronecker/lattice_points.hpp"

#include "kronecker/triangulation.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace kronecker {

Rational HeightFunction::operator()(const IntVector& x) const {
    return Rational(dot(weights, x), denominator);
}

Rational HeightFunction::operator()(const RatVector& x) const {
    return dot(weights, x) / Rational(denominator);
}

namespace {

std::int64_t floor_div64(std::int64_t a, std::int64_t b) {  // b > 0
    std::int64_t q = a / b;
    if ((a % b != 0) && (a < 0)) --q;
    return q;
}

std::int64_t ceil_div64(std::int64_t a, std::int64_t b) {  // b > 0
    std::int64_t q = a / b;
    if ((a % b != 0) && (a > 0)) ++q;
    return q;
}

// Depth-first search over coordinates. Every node runs bound propagation on all constraints
// (activity bounds from the current variable boxes) with a trail for backtracking.
class BoxSearch {
public:
    BoxSearch(std::size_t dim, std::vector<std::int64_t> lo, std::vector<std::int64_t> hi,
              const EnumerationLimits& limits)
        : dim_(dim), lo_(std::move(lo)), hi_(std::move(hi)), cols_(dim), limits_(limits) {}

    void add_constraint(const std::vector<std::int64_t>& a, std::int64_t constant, bool equation) {
        Constraint c;
        c.constant = constant;
        c.equation = equation;
        const std::size_t idx = rows_.size();
        for (std::size_t t = 0; t < dim_; ++t) {
            if (a[t] == 0) continue;
            c.terms.emplace_back(t, a[t]);
            cols_[t].emplace_back(idx, a[t]);
        }
        rows_.push_back(std::move(c));
    }

    std::size_t run(const LatticePointVisitor& visit) {
        visit_ = &visit;
        current_.assign(dim_, 0);
        in_queue_.assign(rows_.size(), false);
        for (std::size_t c = 0; c < rows_.size(); ++c) enqueue(c);
        if (propagate()) descend(0);
        return found_;
    }

private:
    struct Constraint {
        std::vector<std::pair<std::size_t, std::int64_t>> terms;
        std::int64_t constant = 0;
        bool equation = false;
    };
    struct TrailEntry {
        std::size_t var;
        std::int64_t lo, hi;
    };

    void enqueue(std::size_t c) {
        if (!in_queue_[c]) {
            in_queue_[c] = true;
            queue_.push_back(c);
        }
    }

    bool set_bounds(std::size_t t, std::int64_t lo, std::int64_t hi) {
        if (lo <= lo_[t] && hi >= hi_[t]) return true;
        trail_.push_back({t, lo_[t], hi_[t]});
        lo_[t] = std::max(lo, lo_[t]);
        hi_[t] = std::min(hi, hi_[t]);
        if (lo_[t] > hi_[t]) return false;
        for (const auto& [c, a] : cols_[t]) enqueue(c);
        return true;
    }

    bool propagate() {
        bool ok = true;
        while (!queue_.empty()) {
            const std::size_t c = queue_.back();
            queue_.pop_back();
            in_queue_[c] = false;
            if (!ok) continue;
            const Constraint& row = rows_[c];
            std::int64_t mx = row.constant, mn = row.constant;
            for (const auto& [t, a] : row.terms) {
                mx += a > 0 ? a * hi_[t] : a * lo_[t];
                mn += a > 0 ? a * lo_[t] : a * hi_[t];
            }
            if (mx < 0 || (row.equation && mn > 0)) {
                ok = false;
                continue;
            }
            for (const auto& [t, a] : row.terms) {
                if (lo_[t] == hi_[t]) continue;
                const std::int64_t other_max = mx - (a > 0 ? a * hi_[t] : a * lo_[t]);
                std::int64_t low = lo_[t], high = hi_[t];
                // a*x + other_max >= 0
                if (a > 0) low = std::max(low, ceil_div64(-other_max, a));
                else high = std::min(high, floor_div64(other_max, -a));
                if (row.equation) {
                    const std::int64_t other_min = mn - (a > 0 ? a * lo_[t] : a * hi_[t]);
                    // a*x + other_min <= 0
                    if (a > 0) high = std::min(high, floor_div64(-other_min, a));
                    else low = std::max(low, ceil_div64(other_min, -a));
                }
                if (!set_bounds(t, low, high)) {
                    ok = false;
                    break;
                }
            }
        }
        return ok;
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            const TrailEntry& e = trail_.back();
            lo_[e.var] = e.lo;
            hi_[e.var] = e.hi;
            trail_.pop_back();
        }
    }

    void descend(std::size_t t) {
        if (++nodes_ > limits_.max_nodes) throw ResourceLimitError("max_nodes", limits_.max_nodes, found_);
        while (t < dim_ && lo_[t] == hi_[t]) {
            current_[t] = lo_[t];
            ++t;
        }
        if (t == dim_) {
            if (++found_ > limits_.max_points) throw ResourceLimitError("max_points", limits_.max_points, found_);
            (*visit_)(current_);
            return;
        }
        const std::int64_t low = lo_[t], high = hi_[t];
        for (std::int64_t x = low; x <= high; ++x) {
            const std::size_t mark = trail_.size();
            if (set_bounds(t, x, x) && propagate()) {
                current_[t] = x;
                descend(t + 1);
            }
            undo(mark);
        }
    }

    std::size_t dim_;
    std::vector<std::int64_t> lo_, hi_;
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> cols_;
    std::vector<Constraint> rows_;
    std::vector<std::int64_t> current_;
    std::vector<std::size_t> queue_;
    std::vector<bool> in_queue_;
    std::vector<TrailEntry> trail_;
    const LatticePointVisitor* visit_ = nullptr;
    std::size_t found_ = 0;
    std::size_t nodes_ = 0;
    EnumerationLimits limits_;
};

}  // namespace

namespace {

// x g + y h == gcd(g, h) >= 0
Integer extended_gcd(const Integer& g, const Integer& h, Integer& x, Integer& y) {
    Integer old_r = g, r = h, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        const Integer q = old_r / r;
        Integer tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    x = old_s;
    y = old_t;
    return old_r;
}

}  // namespace

std::size_t for_each_lattice_point_at_height(const Cone& c, std::int64_t h, const HeightFunction& height,
                                             const LatticePointVisitor& visit,
                                             const EnumerationLimits& limits) {
    const std::size_t dim = c.ambient_dim();
    if (h < 0) return 0;
    if (h == 0) {
        visit(std::vector<std::int64_t>(dim, 0));
        return 1;
    }
    const Cone full = (c.has_vrep() && c.has_hrep()) ? c : double_description(c);
    if (!full.pointed()) throw PreconditionError("lattice point enumeration needs a pointed cone");
    if (full.rays().empty()) return 0;

    // The slice is x0 + (integer span of `dirs`) intersected with the facet inequalities.
    IntMatrix eqs;
    for (const auto& hs : full.equations()) eqs.push_back(hs.normal);
    const IntMatrix lin = integer_kernel(eqs, dim);
    Integer g = 0;
    IntVector z(dim, Integer(0));
    for (const auto& b : lin) {
        Integer x, y;
        const Integer val = dot(height.weights, b);
        const Integer ng = extended_gcd(g, val, x, y);
        for (std::size_t t = 0; t < dim; ++t) z[t] = x * z[t] + y * b[t];
        g = ng;
    }
    const Integer target = Integer(h) * height.denominator;
    if (g == 0 || target % g != 0) return 0;
    IntVector x0(dim);
    for (std::size_t t = 0; t < dim; ++t) x0[t] = z[t] * (target / g);
    IntMatrix with_height = eqs;
    with_height.push_back(height.weights);
    const IntMatrix dirs = integer_kernel(with_height, dim);
    const std::size_t m = dirs.size();

    std::vector<std::int64_t> lo(m, 0), hi(m, 0);
    std::vector<Rational> mins(m), maxs(m);
    bool first = true;
    for (const auto& r : full.rays()) {
        const Integer hr = dot(height.weights, r);
        if (hr <= 0) throw PreconditionError("height must be positive on every ray");
        if (m == 0) continue;
        IntVector scaled(dim);
        for (std::size_t t = 0; t < dim; ++t) scaled[t] = r[t] * target - x0[t] * hr;
        const RatVector coords = lattice_coordinates(dirs, scaled);
        for (std::size_t i = 0; i < m; ++i) {
            const Rational q = coords[i] / Rational(hr);
            if (first || q < mins[i]) mins[i] = q;
            if (first || q > maxs[i]) maxs[i] = q;
        }
        first = false;
    }
    for (std::size_t i = 0; i < m; ++i) {
        lo[i] = ceil_div(mins[i]).convert_to<std::int64_t>();
        hi[i] = floor_div(maxs[i]).convert_to<std::int64_t>();
    }
    BoxSearch search(m, std::move(lo), std::move(hi), limits);
    for (const auto& hs : full.inequalities()) {
        std::vector<std::int64_t> a(m);
        for (std::size_t i = 0; i < m; ++i) a[i] = dot(hs.normal, dirs[i]).convert_to<std::int64_t>();
        search.add_constraint(a, dot(hs.normal, x0).convert_to<std::int64_t>(), false);
    }
    const std::vector<std::int64_t> base = to_int64(x0);
    std::vector<std::vector<std::int64_t>> dirs64;
    for (const auto& d : dirs) dirs64.push_back(to_int64(d));
    std::vector<std::int64_t> point(dim);
    return search.run([&](const std::vector<std::int64_t>& coeffs) {
        point = base;
        for (std::size_t i = 0; i < m; ++i) {
            if (coeffs[i] == 0) continue;
            for (std::size_t t = 0; t < dim; ++t) point[t] += coeffs[i] * dirs64[i][t];
        }
        visit(point);
    });
}

std::vector<IntVector> lattice_points_at_height(const Cone& c, std::int64_t h,
                                                const HeightFunction& height,
                                                const EnumerationLimits& limits) {
    std::vector<IntVector> out;
    for_each_lattice_point_at_height(
        c, h, height, [&](const std::vector<std::int64_t>& p) { out.push_back(to_integer(p)); }, limits);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IntVector> polytope_lattice_points(const RatMatrix& vertices, const EnumerationLimits& limits) {
    if (vertices.empty()) return {};
    const std::size_t dim = vertices.front().size();
    if (dim == 0) return {IntVector{}};
    // Half-space descriptions of the projections onto the first t coordinates.
    std::vector<std::vector<std::pair<std::vector<Rational>, bool>>> levels(dim);
    for (std::size_t t = 1; t <= dim; ++t) {
        IntMatrix gens;
        for (const auto& v : vertices) {
            RatVector hv(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(t));
            hv.push_back(1);
            gens.push_back(primitive_on_ray(hv));
        }
        for (const auto& hs : halfspaces_from_rays(t + 1, gens)) {
            std::vector<Rational> a(hs.normal.begin(), hs.normal.end());
            levels[t - 1].emplace_back(std::move(a), hs.kind == Halfspace::Kind::equation);
        }
    }
    std::vector<IntVector> out;
    IntVector cur(dim);
    std::size_t nodes = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t t) {
        if (++nodes > limits.max_nodes) throw ResourceLimitError("max_nodes", limits.max_nodes, out.size());
        if (t == dim) {
            out.push_back(cur);
            if (out.size() > limits.max_points) throw ResourceLimitError("max_points", limits.max_points, out.size());
            return;
        }
        std::optional<Integer> low, high;
        for (const auto& [a, eq] : levels[t]) {
            Rational rest = a[t + 1];  // homogenizing coordinate times 1
            for (std::size_t s = 0; s < t; ++s) rest += a[s] * Rational(cur[s]);
            const Rational& coef = a[t];
            if (coef == 0) {
                if (rest < 0 || (eq && rest != 0)) return;
                continue;
            }
            Rational bound = -rest / coef;  // coef * x + rest >= 0
            if (coef > 0) {
                Integer l = ceil_div(bound);
                if (!low || l > *low) low = l;
                if (eq) {
                    Integer u = floor_div(bound);
                    if (!high || u < *high) high = u;
                }
            } else {
                Integer u = floor_div(bound);
                if (!high || u < *high) high = u;
                if (eq) {
                    Integer l = ceil_div(bound);
                    if (!low || l > *low) low = l;
                }
            }
        }
        if (!low || !high) throw std::logic_error("unbounded projection in polytope_lattice_points");
        for (Integer x = *low; x <= *high; ++x) {
            cur[t] = x;
            rec(t + 1);
        }
        cur[t] = 0;
    };
    rec(0);
    return out;
}

}  // namespace kronecker
