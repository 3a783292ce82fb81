#include "kronecker/hilbert.hpp"
#include "kronecker/kronecker_cone.hpp"
#include "kronecker/polytope.hpp"
#include "kronecker/toric.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace kronecker;

namespace {

IntMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
    IntMatrix m;
    for (const auto& r : rows) {
        IntVector v;
        for (long x : r) v.emplace_back(x);
        m.push_back(std::move(v));
    }
    return m;
}

RatMatrix rat(const IntMatrix& m) {
    RatMatrix out;
    for (const auto& r : m) out.push_back(to_rational(r));
    return out;
}

HeightFunction last_coordinate(std::size_t d) {
    HeightFunction h;
    h.weights.assign(d, 0);
    h.weights.back() = 1;
    return h;
}

std::size_t count(const std::vector<Halfspace>& h, Halfspace::Kind k) {
    return static_cast<std::size_t>(std::count_if(h.begin(), h.end(), [&](const Halfspace& x) { return x.kind == k; }));
}

bool included(const Cone& a, const Cone& b) {
    for (const auto& r : a.rays()) {
        if (!contains(b, r)) return false;
    }
    return true;
}

// Polar {y : <x, y> >= -1 on P} of a polytope with the origin in its interior: vertices u/b of
// the facets <u, y> + b >= 0.
RatMatrix polar(const RatMatrix& vertices) {
    RatMatrix out;
    for (const auto& f : polytope_facets(vertices)) {
        RatVector v;
        for (const auto& u : f.normal) v.push_back(Rational(u) / Rational(f.offset));
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Brute-force Hilbert basis of a cone in dim d with height the last coordinate: every lattice
// point up to height `top` that is not a sum of two nonzero ones.
std::set<IntVector> brute_hilbert(const Cone& c, std::int64_t top) {
    const HeightFunction h = last_coordinate(c.ambient_dim());
    std::vector<IntVector> pts;
    for (std::int64_t t = 1; t <= top; ++t) {
        for (auto& p : lattice_points_at_height(c, t, h)) pts.push_back(p);
    }
    std::set<IntVector> out;
    for (const auto& x : pts) {
        bool reducible = false;
        for (const auto& y : pts) {
            if (y == x || y.back() >= x.back()) continue;
            IntVector d(x.size());
            for (std::size_t t = 0; t < x.size(); ++t) d[t] = x[t] - y[t];
            if (contains(c, d)) reducible = true;
        }
        if (!reducible) out.insert(x);
    }
    return out;
}

Cone certified(const Cone& c) {
    const Cone full = double_description(c);
    EXPECT_TRUE(certify(full).ok());
    return full;
}

}  // namespace

TEST(KroneckerCone, HalfspaceFamilies) {
    const Cone c = kronecker_halfspaces(QuiverSpec(3, 2, 3));
    EXPECT_EQ(count(c.hrep(), Halfspace::Kind::equation), 3u);
    EXPECT_EQ(count(c.hrep(), Halfspace::Kind::inequality), 18u + 12u + 9u);
    const Cone trivial = kronecker_halfspaces(QuiverSpec(4, 1, 1));
    EXPECT_EQ(count(trivial.hrep(), Halfspace::Kind::equation), 0u);
    EXPECT_EQ(count(trivial.hrep(), Halfspace::Kind::inequality), 4u);
}

TEST(KroneckerCone, K323DimensionAndSlice) {
    const QuiverSpec s(3, 2, 3);
    const Cone c = certified(kronecker_halfspaces(s));
    EXPECT_TRUE(c.pointed());
    EXPECT_EQ(c.dimension(), 7u);
    EXPECT_EQ(c.dimension() - 1, static_cast<std::size_t>(s.n * s.r1 * s.r2 - s.r1 * s.r1 - s.r2 * s.r2 + 1));
    const auto pts = lattice_points_at_height(c, 1, kronecker_height(s));
    EXPECT_EQ(pts.size(), 20u);
    EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end()));
    const auto zero = lattice_points_at_height(c, 0, kronecker_height(s));
    ASSERT_EQ(zero.size(), 1u);
    EXPECT_TRUE(is_zero(zero[0]));
}

TEST(DoubleDescription, Quadrant) {
    const Cone c = double_description(Cone::from_halfspaces(
        2, {Halfspace::inequality(IntVector{1, 0}), Halfspace::inequality(IntVector{0, 1})}));
    EXPECT_EQ(c.rays(), mat({{0, 1}, {1, 0}}));
    EXPECT_TRUE(certify(c).ok());
}

TEST(DoubleDescription, InteriorRayAbsorbed) {
    const Cone c = double_description(Cone::from_rays(2, mat({{1, 0}, {1, 1}, {1, 2}})));
    EXPECT_EQ(c.rays(), mat({{1, 0}, {1, 2}}));
    EXPECT_EQ(c.inequalities().size(), 2u);
    EXPECT_TRUE(certify(c).ok());
}

TEST(DoubleDescription, LinealityIsRecorded) {
    const Cone c = double_description(Cone::from_halfspaces(2, {Halfspace::inequality(IntVector{1, 0})}));
    EXPECT_FALSE(c.pointed());
    EXPECT_EQ(c.lineality().size(), 1u);
}

TEST(DoubleDescription, RandomRoundTrips) {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int t = 0; t < 20; ++t) {
        IntMatrix gens;
        for (int g = 0; g < 6; ++g) gens.push_back(IntVector{d(rng), d(rng), d(rng), 1 + (g + t) % 3});
        const Cone v = certified(Cone::from_rays(4, gens));
        const Cone h = certified(Cone::from_halfspaces(4, v.hrep()));
        EXPECT_EQ(v.rays(), h.rays());
        for (const auto& g : gens) EXPECT_TRUE(contains(v, g));
    }
}

TEST(Membership, Basic) {
    const Cone c = double_description(Cone::from_rays(2, mat({{1, 0}, {1, 2}})));
    EXPECT_TRUE(contains(c, IntVector{0, 0}));
    EXPECT_TRUE(contains(c, RatVector{Rational(1, 2), Rational(1)}));
    EXPECT_FALSE(contains(c, RatVector{Rational(1, 2), Rational(3, 2)}));
    const Cone vonly = Cone::from_rays(2, mat({{1, 0}, {1, 2}}));
    EXPECT_TRUE(contains(vonly, RatVector{Rational(1, 2), Rational(1)}));
    EXPECT_FALSE(contains(vonly, RatVector{Rational(-1), Rational(0)}));
}

TEST(Hilbert, TwoDimensionalExample) {
    const Cone c = double_description(Cone::from_rays(2, mat({{0, 1}, {3, 1}})));
    const HilbertBasis hb = hilbert_basis(c, last_coordinate(2));
    EXPECT_EQ(hb.generators, mat({{0, 1}, {1, 1}, {2, 1}, {3, 1}}));
    EXPECT_TRUE(hb.window_clean);
    EXPECT_EQ(hb.certified_up_to, 6);
    auto exact = hilbert_basis_exact(c);
    std::sort(exact.begin(), exact.end());
    EXPECT_EQ(exact, hb.generators);
    const auto brute = brute_hilbert(c, 2);
    EXPECT_EQ(std::vector<IntVector>(brute.begin(), brute.end()), hb.generators);
}

TEST(Hilbert, ExactModeAgreesOnRandomCones) {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int t = 0; t < 12; ++t) {
        IntMatrix gens;
        for (int g = 0; g < 4; ++g) gens.push_back(IntVector{d(rng), d(rng), 1 + (g * 7 + t) % 3});
        const Cone c = double_description(Cone::from_rays(3, gens));
        HilbertOptions o;
        o.max_degree = 9;  // parallelepiped points sit below the sum of the ray heights
        o.certify_window = 1;
        const HilbertBasis hb = hilbert_basis(c, last_coordinate(3), o);
        auto exact = hilbert_basis_exact(c);
        std::sort(exact.begin(), exact.end(), [](const IntVector& a, const IntVector& b) {
            return std::tie(a.back(), a) < std::tie(b.back(), b);
        });
        EXPECT_EQ(exact, hb.generators) << "cone " << t;
        for (const auto& g : hb.generators) EXPECT_TRUE(is_irreducible(c, last_coordinate(3), g));
    }
}

TEST(Hilbert, K323GeneratorsAreIrreducible) {
    const QuiverSpec s(3, 2, 3);
    const Cone c = double_description(kronecker_halfspaces(s));
    const HilbertBasis hb = hilbert_basis(c, kronecker_height(s));
    EXPECT_EQ(hb.generators.size(), 20u);
    EXPECT_EQ(hb.count_by_height(), (std::vector<std::size_t>{0, 20}));
    EXPECT_TRUE(hb.window_clean);
    EXPECT_EQ(hb.certified_up_to, 6);
}

TEST(Hilbert, Preconditions) {
    const Cone line = double_description(Cone::from_halfspaces(2, {Halfspace::inequality(IntVector{1, 0})}));
    EXPECT_THROW(hilbert_basis(line, last_coordinate(2)), PreconditionError);
    const Cone c = double_description(Cone::from_rays(2, mat({{1, 0}, {1, 2}})));
    EXPECT_THROW(hilbert_basis(c, last_coordinate(2)), PreconditionError);  // height 0 on (1, 0)
}

TEST(Intersect, GrassmannianViewsGiveKroneckerCone) {
    std::vector<QuiverSpec> specs{QuiverSpec(3, 2, 3), QuiverSpec(4, 2, 3)};
    for (int n = 1; n <= 12; ++n) {
        for (int r1 = 1; n * r1 <= 12; ++r1) {
            for (int r2 = 1; n * r1 * r2 <= 12; ++r2) specs.emplace_back(n, r1, r2);
        }
    }
    for (const auto& s : specs) {
        const Cone direct = certified(kronecker_halfspaces(s));
        const Cone views = intersect(grassmannian_view({s, GrassmannianSpec::Orientation::minus_side}),
                                     grassmannian_view({s, GrassmannianSpec::Orientation::plus_side}));
        EXPECT_TRUE(certify(views).ok()) << s.name();
        EXPECT_TRUE(included(direct, views)) << s.name();
        EXPECT_TRUE(included(views, direct)) << s.name();
    }
}

TEST(Polytope, UnitSquare) {
    const Polytope p = convex_hull(rat(mat({{0, 0}, {1, 0}, {0, 1}, {1, 1}, {1, 0}})));
    EXPECT_EQ(p.vertices.size(), 4u);
    EXPECT_EQ(p.dimension(), 2u);
    EXPECT_EQ(polytope_lattice_points(p.vertices).size(), 4u);
    EXPECT_EQ(normalized_volume(p.vertices), 2);
    FanRays f = normal_fan_rays(p);
    std::sort(f.rays.begin(), f.rays.end());
    EXPECT_EQ(f.rays, mat({{-1, 0}, {0, -1}, {0, 1}, {1, 0}}));
    EXPECT_EQ(f.maximal_cones.size(), 4u);
    EXPECT_TRUE(fan_complete(f));
}

TEST(Polytope, PointHasEmptyFan) {
    const Polytope p = convex_hull(rat(mat({{2, 3}})));
    EXPECT_EQ(p.dimension(), 0u);
    EXPECT_TRUE(normal_fan_rays(p).rays.empty());
}

TEST(Polytope, IntrinsicCoordinatesOfTiltedSegment) {
    const Polytope p = convex_hull(rat(mat({{0, 0, 1}, {2, 2, 1}})));
    EXPECT_EQ(p.dimension(), 1u);
    const RatMatrix iv = p.intrinsic_vertices();
    ASSERT_EQ(iv.size(), 2u);
    EXPECT_EQ(abs(iv[0][0] - iv[1][0]), 2);  // the segment has lattice length 2
}

TEST(Toric, ProjectivePlane) {
    FanRays f;
    f.dim = 2;
    f.rays = mat({{1, 0}, {0, 1}, {-1, -1}});
    f.maximal_cones = {{0, 1}, {1, 2}, {0, 2}};
    const ToricReport t = classify_toric(f);
    EXPECT_TRUE(t.complete);
    EXPECT_TRUE(*t.fano);
    EXPECT_TRUE(*t.gorenstein);
    EXPECT_TRUE(*t.terminal);
    EXPECT_TRUE(*t.reflexive);
    EXPECT_EQ(*t.fano_index, 3);
    EXPECT_EQ(t.class_group->free_rank, 1u);
    EXPECT_TRUE(t.class_group->torsion.empty());
}

TEST(Toric, ProductOfLinesHasIndexTwo) {
    FanRays f;
    f.dim = 2;
    f.rays = mat({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    f.maximal_cones = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    const ToricReport t = classify_toric(f);
    EXPECT_EQ(*t.fano_index, 2);
    EXPECT_EQ(t.class_group->free_rank, 2u);
}

TEST(Toric, ClassGroupTorsion) {
    const ClassGroup g = class_group(mat({{2, -1}, {-1, 2}, {-1, -1}}), 2);
    EXPECT_EQ(g.free_rank, 1u);
    EXPECT_EQ(g.torsion, (std::vector<Integer>{3}));
}

TEST(Toric, IncompleteFan) {
    FanRays f;
    f.dim = 2;
    f.rays = mat({{1, 0}, {0, 1}});
    f.maximal_cones = {{0, 1}};
    EXPECT_FALSE(fan_complete(f));
    const ToricReport t = classify_toric(f);
    EXPECT_FALSE(t.complete);
    EXPECT_FALSE(t.fano.has_value());
    EXPECT_FALSE(t.fano_index.has_value());
}

TEST(Toric, K323GelfandCetlinFan) {
    const QuiverSpec s(3, 2, 3);
    const Cone c = double_description(kronecker_halfspaces(s));
    const Polytope p = slice_polytope(c, kronecker_height(s), 1);
    EXPECT_EQ(p.vertices.size(), 18u);
    EXPECT_EQ(p.dimension(), 6u);
    const FanRays f = normal_fan_rays(p);
    EXPECT_EQ(f.rays.size(), 13u);
    EXPECT_TRUE(fan_complete(f));
    const ToricReport t = classify_toric(f);
    EXPECT_TRUE(*t.fano);
    EXPECT_TRUE(*t.gorenstein);
    EXPECT_TRUE(*t.terminal);
    // Gorenstein here means Q = conv(rays) is reflexive, so its double polar is Q itself
    const Polytope q = convex_hull(rat(f.rays));
    EXPECT_EQ(polar(polar(q.vertices)), q.vertices);
    for (const auto& v : polar(q.vertices)) {
        for (const auto& x : v) EXPECT_EQ(denominator(x), 1);
    }
}
