#include "kronecker/triangulation.hpp"

#include "kronecker/cone.hpp"

#include <stdexcept>

namespace kronecker {

namespace {

void pull(const IntMatrix& rays, const std::vector<std::size_t>& face, std::size_t dim,
          std::vector<std::vector<std::size_t>>& out) {
    if (face.size() == dim) {
        out.push_back(face);
        return;
    }
    const std::size_t ambient = rays.front().size();
    IntMatrix sub;
    for (auto idx : face) sub.push_back(rays[idx]);
    const std::size_t apex = face.front();
    for (const auto& hs : halfspaces_from_rays(ambient, sub)) {
        if (hs.kind != Halfspace::Kind::inequality) continue;
        std::vector<std::size_t> tight;
        for (std::size_t t = 0; t < face.size(); ++t) {
            if (dot(hs.normal, sub[t]) == 0) tight.push_back(face[t]);
        }
        if (tight.empty() || tight.front() == apex) continue;
        std::vector<std::vector<std::size_t>> pieces;
        pull(rays, tight, dim - 1, pieces);
        for (auto& p : pieces) {
            p.insert(p.begin(), apex);
            out.push_back(std::move(p));
        }
    }
}

}  // namespace

std::vector<std::vector<std::size_t>> pulling_triangulation(const IntMatrix& rays) {
    if (rays.empty()) return {};
    std::vector<std::size_t> all(rays.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    const std::size_t dim = rank(rays);
    std::vector<std::vector<std::size_t>> out;
    if (dim == 1) {
        out.push_back({0});
        return out;
    }
    pull(rays, all, dim, out);
    return out;
}

RatVector lattice_coordinates(const IntMatrix& basis, const IntVector& x) {
    const std::size_t k = basis.size();
    RatMatrix a(x.size(), RatVector(k));
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < k; ++j) a[i][j] = basis[j][i];
    }
    auto sol = solve(a, to_rational(x));
    if (!sol) throw std::invalid_argument("vector is outside the span of the lattice basis");
    return *sol;
}

}  // namespace kronecker
