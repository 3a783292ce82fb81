#include "kronecker/mirror.hpp"

#include "kronecker/errors.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace kronecker {

LaurentPolynomial LaurentPolynomial::constant(std::size_t dim, const Integer& c) {
    LaurentPolynomial p;
    p.dim = dim;
    if (c != 0) p.terms.emplace(std::vector<std::int64_t>(dim, 0), c);
    return p;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    if (dim != o.dim) throw ShapeError("Laurent polynomials in different numbers of variables");
    LaurentPolynomial out;
    out.dim = dim;
    for (const auto& [ea, ca] : terms) {
        for (const auto& [eb, cb] : o.terms) {
            std::vector<std::int64_t> e(dim);
            for (std::size_t t = 0; t < dim; ++t) e[t] = ea[t] + eb[t];
            out.terms[e] += ca * cb;
        }
    }
    for (auto it = out.terms.begin(); it != out.terms.end();) {
        it = it->second == 0 ? out.terms.erase(it) : std::next(it);
    }
    return out;
}

Integer LaurentPolynomial::constant_term() const {
    auto it = terms.find(std::vector<std::int64_t>(dim, 0));
    return it == terms.end() ? Integer(0) : it->second;
}

MirrorResult laurent_from_rays(const FanRays& f, const EnumerationLimits& limits) {
    const ToricReport rep = classify_toric(f, limits);
    if (!rep.complete) throw PreconditionError("laurent_from_rays needs a complete fan");
    MirrorResult out;
    if (!rep.terminal.value_or(false)) {
        out.unsupported = "spanning polytope is not terminal; coefficient choice is not determined";
        return out;
    }
    RatMatrix pts;
    for (const auto& r : f.rays) pts.push_back(to_rational(r));
    LaurentPolynomial p;
    p.dim = f.dim;
    for (const auto& v : convex_hull(pts).vertices) {
        std::vector<std::int64_t> e;
        for (const auto& q : v) e.push_back(numerator(q).convert_to<std::int64_t>());
        p.terms.emplace(std::move(e), Integer(1));
    }
    out.polynomial = std::move(p);
    return out;
}

namespace {

// Exponent vectors as strings of 16-bit coordinates; short enough to stay inline for small dims.
using Key = std::string;

Key encode(const std::vector<std::int64_t>& e) {
    Key k(e.size() * 2, '\0');
    for (std::size_t t = 0; t < e.size(); ++t) {
        if (e[t] < INT16_MIN || e[t] > INT16_MAX) throw ResourceLimitError("exponent_range", INT16_MAX, 0);
        const auto u = static_cast<std::uint16_t>(static_cast<std::int16_t>(e[t]));
        k[2 * t] = static_cast<char>(u & 0xff);
        k[2 * t + 1] = static_cast<char>(u >> 8);
    }
    return k;
}

std::int16_t coord(const Key& k, std::size_t t) {
    const auto u = static_cast<std::uint16_t>(static_cast<unsigned char>(k[2 * t]) |
                                              (static_cast<unsigned char>(k[2 * t + 1]) << 8));
    return static_cast<std::int16_t>(u);
}

Key shifted(const Key& k, const std::vector<std::int64_t>& e) {
    std::vector<std::int64_t> sum(e.size());
    for (std::size_t t = 0; t < e.size(); ++t) sum[t] = coord(k, t) + e[t];
    return encode(sum);
}

Key negated(const Key& k) {
    std::vector<std::int64_t> neg(k.size() / 2);
    for (std::size_t t = 0; t < neg.size(); ++t) neg[t] = -static_cast<std::int64_t>(coord(k, t));
    return encode(neg);
}

using Sparse = std::unordered_map<Key, Integer>;

Integer pairing(const Sparse& a, const Sparse& b) {
    Integer s = 0;
    for (const auto& [k, c] : a) {
        auto it = b.find(negated(k));
        if (it != b.end()) s += c * it->second;
    }
    return s;
}

}  // namespace

std::vector<Integer> classical_period(const LaurentPolynomial& f, std::size_t N, std::size_t max_terms) {
    std::vector<Integer> out;
    if (N == 0) return out;
    Sparse prev{{encode(std::vector<std::int64_t>(f.dim, 0)), Integer(1)}};  // f^0
    out.push_back(1);
    // c_{2k} pairs f^k with f^k, c_{2k+1} pairs f^{k+1} with f^k.
    for (std::size_t k = 0; out.size() < N; ++k) {
        Sparse next;
        for (const auto& [key, c] : prev) {
            for (const auto& [e, fc] : f.terms) next[shifted(key, e)] += c * fc;
        }
        for (auto it = next.begin(); it != next.end();) {
            it = it->second == 0 ? next.erase(it) : std::next(it);
        }
        if (next.size() > max_terms) throw ResourceLimitError("max_terms", max_terms, next.size());
        out.push_back(pairing(next, prev));           // c_{2k+1}
        if (out.size() < N) out.push_back(pairing(next, next));  // c_{2k+2}
        prev = std::move(next);
    }
    return out;
}

std::vector<Integer> classical_period_direct(const LaurentPolynomial& f, std::size_t N) {
    std::vector<Integer> out;
    LaurentPolynomial p = LaurentPolynomial::constant(f.dim, 1);
    for (std::size_t k = 0; k < N; ++k) {
        out.push_back(p.constant_term());
        if (k + 1 < N) p = p * f;
    }
    return out;
}

NewtonInvariants newton_invariants(const LaurentPolynomial& f, const EnumerationLimits& limits) {
    NewtonInvariants inv;
    if (f.terms.empty()) {
        inv.degenerate = true;
        return inv;
    }
    RatMatrix pts;
    for (const auto& [e, c] : f.terms) {
        RatVector v;
        for (auto x : e) v.emplace_back(x);
        pts.push_back(std::move(v));
    }
    const Polytope q = convex_hull(pts);
    inv.dim = q.dimension();
    inv.vertices = q.vertices.size();
    const auto lattice = polytope_lattice_points(q.vertices, limits);
    inv.lattice_points = lattice.size();
    inv.degenerate = inv.dim < f.dim;
    if (inv.degenerate) return inv;
    const auto facets = polytope_facets(q.vertices);
    bool interior = !facets.empty();
    bool reflexive = true;
    for (const auto& fa : facets) {
        if (fa.equation || fa.offset <= 0) {
            interior = false;
            continue;
        }
        for (const auto& u : fa.normal) {
            if (u % fa.offset != 0) reflexive = false;
        }
    }
    inv.reflexive = interior && reflexive;
    std::set<RatVector> verts(q.vertices.begin(), q.vertices.end());
    bool only = interior;
    for (const auto& p : lattice) {
        if (!is_zero(p) && !verts.count(to_rational(p))) only = false;
    }
    inv.terminal = only;
    inv.normalized_volume = normalized_volume(q.vertices);
    return inv;
}

LaurentPolynomial change_basis(const LaurentPolynomial& f, const IntMatrix& u) {
    if (u.size() != f.dim) throw ShapeError("basis change has the wrong size");
    LaurentPolynomial out;
    out.dim = f.dim;
    for (const auto& [e, c] : f.terms) {
        std::vector<std::int64_t> img(f.dim, 0);
        for (std::size_t i = 0; i < f.dim; ++i) {
            if (e[i] == 0) continue;
            for (std::size_t j = 0; j < f.dim; ++j) img[j] += e[i] * u[i][j].convert_to<std::int64_t>();
        }
        out.terms[img] += c;
    }
    return out;
}

}  // namespace kronecker
