#include "kronecker/kronecker_cone.hpp"

#include "kronecker/errors.hpp"

#include <algorithm>

namespace kronecker {

Cone kronecker_halfspaces(const QuiverSpec& spec) {
    const std::size_t dim = spec.ambient_dim();
    std::vector<Halfspace> h;
    for (std::size_t f = 0; f < dim; ++f) {
        IntVector a(dim);
        a[f] = 1;
        h.push_back(Halfspace::inequality(std::move(a)));
    }
    for (int j = 1; j < spec.r2; ++j) {
        IntVector a(dim);
        for (int i = 1; i <= spec.n; ++i) {
            for (int k = 1; k <= spec.r1; ++k) {
                a[spec.index(i, j, k)] += 1;
                a[spec.index(i, j + 1, k)] -= 1;
            }
        }
        h.push_back(Halfspace::equation(std::move(a)));
    }
    for (int k = 1; k < spec.r1; ++k) {
        IntVector a(dim);
        for (int i = 1; i <= spec.n; ++i) {
            for (int j = 1; j <= spec.r2; ++j) {
                a[spec.index(i, j, k)] += 1;
                a[spec.index(i, j, k + 1)] -= 1;
            }
        }
        h.push_back(Halfspace::equation(std::move(a)));
    }
    // Row j of T+ holds labels (s, l); the entry below a label L must exceed it, so the
    // number of labels < L in row j is at least the number of labels <= L in row j + 1.
    for (int j = 1; j < spec.r2; ++j) {
        for (int i = 1; i <= spec.n; ++i) {
            for (int k = 1; k <= spec.r1; ++k) {
                IntVector a(dim);
                for (int s = 1; s <= spec.n; ++s) {
                    for (int l = 1; l <= spec.r1; ++l) {
                        const Label lab{s, l}, ref{i, k};
                        if (lab < ref) a[spec.index(s, j, l)] += 1;
                        if (lab <= ref) a[spec.index(s, j + 1, l)] -= 1;
                    }
                }
                h.push_back(Halfspace::inequality(std::move(a)));
            }
        }
    }
    for (int k = 1; k < spec.r1; ++k) {
        for (int i = 1; i <= spec.n; ++i) {
            for (int j = 1; j <= spec.r2; ++j) {
                IntVector a(dim);
                for (int s = 1; s <= spec.n; ++s) {
                    for (int m = 1; m <= spec.r2; ++m) {
                        const Label lab{s, m}, ref{i, j};
                        if (lab < ref) a[spec.index(s, m, k)] += 1;
                        if (lab <= ref) a[spec.index(s, m, k + 1)] -= 1;
                    }
                }
                h.push_back(Halfspace::inequality(std::move(a)));
            }
        }
    }
    return Cone::from_halfspaces(dim, std::move(h));
}

HeightFunction kronecker_height(const QuiverSpec& spec) {
    return HeightFunction{IntVector(spec.ambient_dim(), Integer(1)), Integer(spec.lcm())};
}

std::size_t GrassmannianSpec::ambient_index(int row, int col) const {
    if (orientation == Orientation::minus_side) {
        const int i = (col - 1) / ambient.r2 + 1;
        const int j = (col - 1) % ambient.r2 + 1;
        return ambient.index(i, j, row);
    }
    const int i = (col - 1) / ambient.r1 + 1;
    const int k = (col - 1) % ambient.r1 + 1;
    return ambient.index(i, row, k);
}

std::vector<std::size_t> GrassmannianSpec::coordinate_map() const {
    const QuiverSpec q = as_quiver();
    std::vector<std::size_t> perm(ambient.ambient_dim());
    for (int row = 1; row <= r(); ++row) {
        for (int col = 1; col <= N(); ++col) perm[ambient_index(row, col)] = q.index(col, row, 1);
    }
    return perm;
}

Cone pull_back(const Cone& c, const std::vector<std::size_t>& perm) {
    if (perm.size() != c.ambient_dim()) throw ShapeError("coordinate map has wrong length");
    auto map = [&](const IntVector& v) {
        IntVector out(v.size());
        for (std::size_t f = 0; f < v.size(); ++f) out[f] = v[perm[f]];
        return out;
    };
    Cone out(c.ambient_dim());
    if (c.has_hrep()) {
        std::vector<Halfspace> h;
        for (const auto& hs : c.hrep()) h.push_back(Halfspace{map(hs.normal), hs.kind});
        out.set_hrep(std::move(h));
    }
    if (c.has_vrep()) {
        IntMatrix rays, lin;
        for (const auto& r : c.rays()) rays.push_back(map(r));
        for (const auto& l : c.lineality()) lin.push_back(map(l));
        std::sort(rays.begin(), rays.end());
        out.set_vrep(std::move(rays), std::move(lin));
    }
    return out;
}

Cone grassmannian_view(const GrassmannianSpec& g) {
    return pull_back(kronecker_halfspaces(g.as_quiver()), g.coordinate_map());
}

Cone intersect(const Cone& a, const Cone& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw ShapeError("cones live in different spaces");
    const Cone ha = a.has_hrep() ? a : double_description(a);
    const Cone hb = b.has_hrep() ? b : double_description(b);
    std::vector<Halfspace> h = ha.hrep();
    h.insert(h.end(), hb.hrep().begin(), hb.hrep().end());
    return double_description(Cone::from_halfspaces(a.ambient_dim(), std::move(h)));
}

}  // namespace kronecker
