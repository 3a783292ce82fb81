#include "support.hpp"

#include "kronecker/kronecker_cone.hpp"

#include <gtest/gtest.h>

using namespace kronecker;
using kt::ev;

namespace {

Tableau tab(const char* s) { return parse_tableau(s); }

}  // namespace

TEST(QuiverSpec, DerivedData) {
    const QuiverSpec s(3, 2, 3);
    EXPECT_TRUE(s.coprime());
    EXPECT_EQ(s.lcm(), 6);
    EXPECT_EQ(s.stability(), std::make_pair(-3, 2));
    EXPECT_EQ(s.ambient_dim(), 18u);
    EXPECT_EQ(s.index(1, 1, 1), 0u);
    EXPECT_EQ(s.index(3, 3, 2), 17u);
    const auto t = s.triple(s.index(2, 3, 1));
    EXPECT_EQ(t.i, 2);
    EXPECT_EQ(t.j, 3);
    EXPECT_EQ(t.k, 1);
    EXPECT_FALSE(QuiverSpec(2, 2, 4).coprime());
    EXPECT_THROW(QuiverSpec(0, 1, 1), PreconditionError);
    EXPECT_THROW(QuiverSpec(1, 0, 1), PreconditionError);
}

TEST(Label, LexOrder) {
    EXPECT_LT((Label{1, 3}), (Label{2, 1}));
    EXPECT_LT((Label{2, 1}), (Label{2, 2}));
    EXPECT_FALSE((Label{2, 2}) < (Label{2, 2}));
}

TEST(Semistandard, Examples) {
    EXPECT_TRUE(is_semistandard(tab("11")));
    EXPECT_TRUE(is_semistandard(tab("11 11 11 11 11 22 | 12 12 12 12 32 32 | 21 21 21 31 42 42")));
    EXPECT_FALSE(is_semistandard(tab("21 | 21")));
    EXPECT_FALSE(is_semistandard(tab("21 11")));  // row decreases
    EXPECT_TRUE(is_semistandard(Tableau()));
}

TEST(Tableau, RaggedRowsRejected) {
    EXPECT_THROW(Tableau(std::vector<std::vector<Label>>{{{1, 1}, {1, 1}}, {{1, 2}}}), ShapeError);
}

TEST(Monomials, FirstMatchingFieldPair) {
    const QuiverSpec s(3, 2, 3);
    const auto expected = ev(s, {{2, 1, 1, 2}, {2, 2, 2, 1}, {3, 2, 1, 1}, {3, 3, 2, 2}});
    EXPECT_EQ(mon_plus(tab("21 21 | 22 31 | 32 32"), s), expected);
    EXPECT_EQ(mon_minus(tab("21 21 32 | 22 33 33"), s), expected);
}

TEST(Monomials, EmptyAndOneCell) {
    const QuiverSpec s(1, 1, 2);
    EXPECT_TRUE(mon_plus(Tableau(), s).is_zero());
    EXPECT_EQ(mon_minus(tab("12"), s), ev(s, {{1, 2, 1, 1}}));
}

TEST(Monomials, LabelOutOfRange) {
    const QuiverSpec s(1, 2, 1);
    EXPECT_THROW(mon_plus(tab("13"), s), LabelError);        // k > r1
    EXPECT_THROW(mon_minus(tab("21 | 11"), s), LabelError);  // arrow > n
    EXPECT_THROW(mon_minus(tab("11"), s), ShapeError);       // minus side needs r1 rows
}

TEST(LinkedPair, BuildFirstPrintedPair) {
    const QuiverSpec s(3, 2, 3);
    const auto p = build_linked_pair(tab("21 21 | 22 31 | 32 32"), tab("21 21 32 | 22 33 33"), s);
    ASSERT_TRUE(p.has_value());
    EXPECT_EQ(p->atoms.size(), 6u);
    EXPECT_TRUE(p->semistandard());
    for (const auto& a : p->atoms) {
        // plus cell (j, .) holds (i, k), minus cell (k, .) holds (i, j)
        const Label& lp = p->plus.at(a.plus_row, a.plus_col);
        const Label& lm = p->minus.at(a.minus_row, a.minus_col);
        EXPECT_EQ(lp.first, a.arrow);
        EXPECT_EQ(lm.first, a.arrow);
        EXPECT_EQ(lp.second, static_cast<int>(a.minus_row) + 1);
        EXPECT_EQ(lm.second, static_cast<int>(a.plus_row) + 1);
    }
    EXPECT_EQ(degree(*p, s), 1);
}

TEST(LinkedPair, DifferentMonomialsGiveNothing) {
    const QuiverSpec s(3, 2, 3);
    EXPECT_FALSE(build_linked_pair(tab("21 21 | 22 31 | 32 32"), tab("21 21 32 | 22 33 31"), s).has_value());
}

TEST(LinkedPair, ShapeMismatch) {
    const QuiverSpec s(3, 2, 3);
    EXPECT_THROW(build_linked_pair(tab("21 21 | 22 31"), tab("21 21 32 | 22 33 33"), s), ShapeError);
}

TEST(PairFromExponent, PrintedPair) {
    const QuiverSpec s(3, 2, 3);
    const auto r = pair_from_exponent(ev(s, {{2, 1, 1, 2}, {2, 2, 2, 1}, {3, 2, 1, 1}, {3, 3, 2, 2}}), s);
    ASSERT_TRUE(r.has_value());
    EXPECT_TRUE(r->semistandard);
    EXPECT_EQ(r->pair.plus, tab("21 21 | 22 31 | 32 32"));
    EXPECT_EQ(r->pair.minus, tab("21 21 32 | 22 33 33"));
}

TEST(PairFromExponent, ZeroAndUnbalanced) {
    const QuiverSpec s(3, 2, 3);
    const auto z = pair_from_exponent(ExponentVector(s.ambient_dim()), s);
    ASSERT_TRUE(z.has_value());
    EXPECT_TRUE(z->semistandard);
    EXPECT_TRUE(z->pair.plus.empty());
    EXPECT_FALSE(pair_from_exponent(ev(s, {{1, 1, 1, 1}}), s).has_value());
}

TEST(PairFromExponent, NonSemistandardIsFlagged) {
    // x^1_{12} x^1_{21}: both tableaux put (1,2) above (1,1)
    const QuiverSpec s(1, 2, 2);
    const auto r = pair_from_exponent(ev(s, {{1, 1, 2, 1}, {1, 2, 1, 1}}), s);
    ASSERT_TRUE(r.has_value());
    EXPECT_FALSE(r->semistandard);
    EXPECT_EQ(mon_plus(r->pair.plus, s), mon_minus(r->pair.minus, s));
}

TEST(Enumerate, K323HeightOne) {
    const QuiverSpec s(3, 2, 3);
    const auto pairs = enumerate_pairs_at_height(s, 1);
    EXPECT_EQ(pairs.size(), 20u);
    EXPECT_EQ(enumerate_pairs_backtracking(s, 1), pairs);
}

TEST(Enumerate, PlueckerColumnsOfGr23) {
    // oracle: strictly increasing 2-columns over a 3-letter alphabet
    int brute = 0;
    for (int a = 1; a <= 3; ++a) {
        for (int b = a + 1; b <= 3; ++b) ++brute;
    }
    const auto pairs = enumerate_pairs_at_height(QuiverSpec(3, 1, 2), 1);
    EXPECT_EQ(pairs.size(), static_cast<std::size_t>(brute));
    EXPECT_EQ(pairs.size(), 3u);
}

TEST(Enumerate, HeightZero) {
    const auto pairs = enumerate_pairs_at_height(QuiverSpec(2, 2, 3), 0);
    ASSERT_EQ(pairs.size(), 1u);
    EXPECT_TRUE(pairs[0].plus.empty());
}

TEST(Enumerate, ResultsSortedByExponent) {
    const QuiverSpec s(2, 2, 3);
    const auto pairs = enumerate_pairs_at_height(s, 2);
    for (std::size_t t = 1; t < pairs.size(); ++t) EXPECT_LT(exponent(pairs[t - 1], s), exponent(pairs[t], s));
}

TEST(Enumerate, CapIsReported) {
    EnumerationLimits lim;
    lim.max_points = 5;
    try {
        enumerate_pairs_at_height(QuiverSpec(3, 2, 3), 1, lim);
        FAIL() << "cap not enforced";
    } catch (const ResourceLimitError& e) {
        EXPECT_EQ(e.cap_name(), "max_points");
        EXPECT_GE(e.partial(), 5u);
    }
}

TEST(Io, TableauTextRoundTrip) {
    const Tableau t = tab("11 11 22 | 12 32 32");
    EXPECT_EQ(parse_tableau(format_tableau(t)), t);
    EXPECT_EQ(tableau_from_json(to_json(t)), t);
    EXPECT_EQ(parse_tableau("1,10 2,3"), (Tableau({{{1, 10}, {2, 3}}})));
    EXPECT_THROW(parse_tableau("1x"), LabelError);
}
