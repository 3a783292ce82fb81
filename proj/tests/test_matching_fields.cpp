#include "support.hpp"

#include "kronecker/matching_field.hpp"

#include <gtest/gtest.h>

using namespace kronecker;
using Orientation = GrassmannianSpec::Orientation;

namespace {

const QuiverSpec k323(3, 2, 3);

bool identity_field(const MatchingField& mf) {
    for (const auto& [j, sigma] : mf.assignment) {
        for (std::size_t t = 0; t < sigma.size(); ++t) {
            if (sigma[t] != static_cast<int>(t) + 1) return false;
        }
    }
    return true;
}

bool same_cone(const Cone& a, const Cone& b) {
    for (const auto& r : a.rays()) {
        if (!contains(b, r)) return false;
    }
    for (const auto& r : b.rays()) {
        if (!contains(a, r)) return false;
    }
    return true;
}

}  // namespace

TEST(MatchingField, Subsets) {
    EXPECT_EQ(subsets(4, 2).size(), 6u);
    EXPECT_EQ(subsets(4, 2).front(), (Subset{1, 2}));
    EXPECT_EQ(subsets(3, 3), (std::vector<Subset>{{1, 2, 3}}));
}

TEST(MatchingField, BlockDiagonal) {
    const MatchingField mf = block_diagonal_mf(2, 2, 6);
    EXPECT_EQ(mf.assignment.size(), 15u);
    EXPECT_EQ(mf.assignment.at({1, 2}), (Permutation{1, 2}));
    EXPECT_EQ(mf.assignment.at({1, 3}), (Permutation{2, 1}));
    EXPECT_EQ(mf.assignment.at({2, 5}), (Permutation{2, 1}));
    EXPECT_EQ(mf.assignment.at({3, 4}), (Permutation{1, 2}));
    EXPECT_TRUE(identity_field(block_diagonal_mf(0, 3, 5)));
    EXPECT_THROW(block_diagonal_mf(7, 2, 6), PreconditionError);
}

TEST(MatchingField, InducedFieldsExhaustive) {
    for (const QuiverSpec& s : {QuiverSpec(3, 2, 3), QuiverSpec(4, 2, 3)}) {
        for (auto o : {Orientation::minus_side, Orientation::plus_side}) {
            const GrassmannianSpec g{s, o};
            const InducedField c0 = induced_matching_field(grading_c0(s), g);
            ASSERT_TRUE(c0.field.has_value()) << s.name();
            EXPECT_TRUE(c0.ties.empty());
            EXPECT_EQ(c0.field->assignment.size(), subsets(g.N(), g.r()).size());
            EXPECT_TRUE(identity_field(*c0.field)) << s.name();
            const InducedField c2 = induced_matching_field(grading_c2(s), g);
            ASSERT_TRUE(c2.field.has_value()) << s.name();
            EXPECT_EQ(*c2.field, block_diagonal_mf(2, g.r(), g.N())) << s.name();
        }
    }
}

TEST(MatchingField, ZeroGradingTies) {
    const Grading zero{k323, IntVector(k323.ambient_dim(), 0)};
    const InducedField f = induced_matching_field(zero, {k323, Orientation::minus_side});
    EXPECT_FALSE(f.field.has_value());
    EXPECT_FALSE(f.ties.empty());
    EXPECT_FALSE(matching_field_cone(k323, zero).has_value());
    const PipelineReport rep = sagbi_pipeline(k323, zero);
    EXPECT_FALSE(rep.ok());
    EXPECT_FALSE(rep.coherent_minus);
}

TEST(MatchingField, ChosenMonomialOfBlockField) {
    const GrassmannianSpec g{k323, Orientation::minus_side};
    const MatchingField mf = block_diagonal_mf(2, 2, 9);
    // J = {1, 3}: rows swapped, so row 2 meets column 1 and row 1 meets column 3.
    // Column 1 is x^1_{11}, column 3 is x^1_{31}; row 2 is k = 2.
    EXPECT_EQ(chosen_monomial(mf, g, {1, 3}), kt::ev(k323, {{1, 1, 2, 1}, {1, 3, 1, 1}}));
}

TEST(MatchingField, DegreeTwoPlueckerCount) {
    // two-column SSYT of height 2 with entries in [1, 4]: 20 by hook content
    EXPECT_EQ(count_two_column_ssyt(2, 4), 20u);
    EXPECT_EQ(count_two_column_ssyt(1, 5), 15u);
    for (auto o : {Orientation::minus_side, Orientation::plus_side}) {
        const GrassmannianSpec g{k323, o};
        EXPECT_EQ(count_degree_two_products(block_diagonal_mf(2, g.r(), g.N()), g), count_two_column_ssyt(g.r(), g.N()));
        EXPECT_EQ(count_degree_two_products(block_diagonal_mf(0, g.r(), g.N()), g), count_two_column_ssyt(g.r(), g.N()));
    }
}

TEST(MatchingField, GelfandCetlinConeFromC0) {
    for (const QuiverSpec& s : {QuiverSpec(3, 2, 3), QuiverSpec(2, 2, 2), QuiverSpec(3, 1, 3)}) {
        const auto c = matching_field_cone(s, grading_c0(s));
        ASSERT_TRUE(c.has_value());
        EXPECT_TRUE(same_cone(*c, double_description(kronecker_halfspaces(s)))) << s.name();
    }
}

TEST(MatchingField, K323GeneratorsLieInBothCones) {
    const auto plus = kt::data_tableaux("k323_mf_plus.txt");
    const GrassmannianSpec gm{k323, Orientation::minus_side};
    const GrassmannianSpec gp{k323, Orientation::plus_side};
    const Cone c1 = double_description(mf_cone(block_diagonal_mf(2, gm.r(), gm.N()), gm));
    const Cone c2 = double_description(mf_cone(block_diagonal_mf(2, gp.r(), gp.N()), gp));
    for (const auto& t : plus) {
        const IntVector v = to_integer(mon_plus(t, k323).values);
        EXPECT_TRUE(contains(c1, v));
        EXPECT_TRUE(contains(c2, v));
    }
    // some height-1 point of C_1 falls outside C_2
    const HeightFunction h = kronecker_height(k323);
    std::size_t outside = 0;
    for (const auto& p : lattice_points_at_height(c1, 1, h)) outside += !contains(c2, p);
    EXPECT_GT(outside, 0u);
}

TEST(MatchingField, CanonicalPairsMatchPrintedLists) {
    const auto plus = kt::data_tableaux("k323_mf_plus.txt");
    const auto minus = kt::data_tableaux("k323_mf_minus.txt");
    ASSERT_EQ(plus.size(), 20u);
    ASSERT_EQ(minus.size(), 20u);
    const GrassmannianSpec gm{k323, Orientation::minus_side};
    const GrassmannianSpec gp{k323, Orientation::plus_side};
    const ColumnCatalog cat_plus = column_catalog(block_diagonal_mf(2, gp.r(), gp.N()), gp);
    const ColumnCatalog cat_minus = column_catalog(block_diagonal_mf(2, gm.r(), gm.N()), gm);
    for (std::size_t t = 0; t < 20; ++t) {
        const ExponentVector v = mon_plus(plus[t], k323);
        EXPECT_EQ(mon_minus(minus[t], k323), v) << t;
        const auto p = canonical_linked_pair(v, cat_plus, cat_minus, k323);
        ASSERT_TRUE(p.has_value()) << t;
        EXPECT_EQ(p->plus, plus[t]) << t;
        EXPECT_EQ(p->minus, minus[t]) << t;
        EXPECT_EQ(canonical_tableau(v, cat_plus), plus[t]);
    }
}

TEST(MatchingField, CanonicalTableauAbsentOffTheMonoid) {
    const GrassmannianSpec gp{k323, Orientation::plus_side};
    const ColumnCatalog cat = column_catalog(block_diagonal_mf(2, gp.r(), gp.N()), gp);
    EXPECT_FALSE(canonical_tableau(kt::ev(k323, {{1, 1, 1, 1}}), cat).has_value());
}

TEST(MatchingField, PipelineOnK323) {
    const PipelineReport rep = sagbi_pipeline(k323, grading_c2(k323));
    EXPECT_TRUE(rep.ok());
    EXPECT_TRUE(rep.all_verified());
    EXPECT_TRUE(rep.degree_two_evidence_minus);
    EXPECT_TRUE(rep.degree_two_evidence_plus);
    ASSERT_EQ(rep.generators.size(), 20u);
    for (const auto& g : rep.generators) {
        EXPECT_TRUE(g.lm_verified);
        EXPECT_FALSE(g.fallback_used);
        ASSERT_TRUE(g.pair.has_value());
        EXPECT_EQ(mon_plus(g.pair->plus, k323), g.exponent);
    }
    EXPECT_EQ(rep.polytope->vertices.size(), 20u);
    EXPECT_EQ(rep.polytope_lattice_points, 20u);
    EXPECT_TRUE(rep.polytope_vertices_integral);
    EXPECT_EQ(rep.fan->rays.size(), 12u);
}
