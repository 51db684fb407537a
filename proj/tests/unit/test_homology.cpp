#include <gtest/gtest.h>

#include <random>

#include "halfcube/homology.hpp"
#include "oracles.hpp"

using namespace halfcube;

namespace {

using Dense = std::vector<std::vector<std::int64_t>>;

Dense multiply(const Dense& a, const Dense& b) {
    Dense out(a.size(), std::vector<std::int64_t>(b.empty() ? 0 : b[0].size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t l = 0; l < b.size(); ++l) {
            for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][l] * b[l][j];
        }
    }
    return out;
}

std::vector<BigInt> factors_of(const Dense& m) { return smith_normal_form(SparseIntMatrix::from_dense(m)).factors; }

// Cellular chain complex with degrees 0..top and no empty cell, so the
// default (reduced) mode reports ordinary homology.
ChainComplexData complex_from(const std::vector<int>& ranks, const std::vector<Dense>& maps) {
    ChainComplexData cc;
    cc.bottom = 0;
    cc.ranks = ranks;
    cc.boundaries.push_back(SparseIntMatrix(0, ranks[0]));
    for (std::size_t l = 1; l < ranks.size(); ++l) {
        cc.boundaries.push_back(maps[l - 1].empty() ? SparseIntMatrix(ranks[l - 1], ranks[l])
                                                     : SparseIntMatrix::from_dense(maps[l - 1]));
    }
    return cc;
}

}  // namespace

TEST(SmithNormalForm, KnownMatrices) {
    EXPECT_EQ(factors_of({{2, 4}, {6, 8}}), (std::vector<BigInt>{2, 4}));
    EXPECT_EQ(factors_of({{6, 0}, {0, 4}}), (std::vector<BigInt>{2, 12}));
    EXPECT_EQ(factors_of({{0, 0}, {0, 0}}), std::vector<BigInt>{});
    EXPECT_EQ(factors_of({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}), (std::vector<BigInt>{2, 6, 12}));
    EXPECT_EQ(smith_normal_form(SparseIntMatrix(0, 5)).rank(), 0);
}

TEST(SmithNormalForm, InvariantUnderUnimodularChanges) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int t = 0; t < 60; ++t) {
        const int r = 1 + rng() % 6, c = 1 + rng() % 6;
        Dense a(r, std::vector<std::int64_t>(c));
        for (auto& row : a) {
            for (auto& x : row) x = d(rng);
        }
        const auto base = factors_of(a);
        const auto moved = multiply(multiply(oracle::random_unimodular(r, rng), a), oracle::random_unimodular(c, rng));
        EXPECT_EQ(factors_of(moved), base);
        EXPECT_EQ(rational_rank(SparseIntMatrix::from_dense(a)), static_cast<int>(base.size()));
        for (std::size_t i = 1; i < base.size(); ++i) EXPECT_EQ(base[i] % base[i - 1], 0);
        if (r == c) {
            BigInt prod = 1;
            for (const auto& f : base) prod *= f;
            const BigInt det = determinant(a);
            EXPECT_EQ(base.size() == static_cast<std::size_t>(r) ? prod : BigInt(0), abs(det));
        }
    }
}

TEST(SmithNormalForm, SurvivesInt64Overflow) {
    const std::int64_t p = 3037000493;  // prime, p^2 > 2^63
    const std::int64_t q = 3037000453;
    const auto f = factors_of({{p, 0}, {0, q}});
    ASSERT_EQ(f.size(), 2u);
    EXPECT_EQ(f[0], 1);
    EXPECT_EQ(f[1], BigInt(p) * q);
}

TEST(Homology, TorsionOfTheProjectivePlane) {
    // Z <-0- Z <-2- Z
    const auto h = homology(complex_from({1, 1, 1}, {Dense{{0}}, Dense{{2}}}));
    EXPECT_EQ(h.at(0).rank, 1);
    EXPECT_EQ(h.at(1).rank, 0);
    EXPECT_EQ(h.at(1).torsion, std::vector<BigInt>{2});
    EXPECT_TRUE(h.at(2).is_zero());
    EXPECT_EQ(h.at(1).to_string(), "Z/2");
}

TEST(Homology, CircleAndNonComplex) {
    // Two vertices, two edges: a circle.
    const auto h = homology(complex_from({2, 2}, {Dense{{-1, -1}, {1, 1}}}));
    EXPECT_EQ(h.at(0).rank, 1);
    EXPECT_EQ(h.at(1).rank, 1);
    EXPECT_THROW(homology(complex_from({1, 1, 1}, {Dense{{1}}, Dense{{1}}})), NotAComplex);
}

TEST(Betti, SpotValuesAndMethods) {
    EXPECT_EQ(betti(4, 3, BettiMethod::recurrence), 7);
    EXPECT_EQ(betti(5, 3, BettiMethod::closed), 31);
    EXPECT_EQ(betti(5, 4, BettiMethod::alternating), 9);
    EXPECT_EQ(betti(0, 0, BettiMethod::closed), 1);  // uses C(-1,-1) = 1
    for (int n = 0; n <= 30; ++n) {
        for (int k = 0; k <= n; ++k) {
            const auto ref = oracle::betti_table(n, k);
            EXPECT_EQ(betti(n, k, BettiMethod::recurrence), ref);
            EXPECT_EQ(betti(n, k, BettiMethod::closed), ref) << n << "," << k;
            if (k >= 3) EXPECT_EQ(betti(n, k, BettiMethod::alternating), ref);
        }
    }
    EXPECT_THROW(betti(5, 2, BettiMethod::alternating), std::out_of_range);
    EXPECT_EQ(parse_betti_method("closed"), BettiMethod::closed);
    EXPECT_THROW(parse_betti_method("guess"), std::invalid_argument);
}

TEST(Concentration, SmallComplexes) {
    for (int n = 4; n <= 5; ++n) {
        for (int k = 3; k <= n; ++k) {
            const auto r = verify_concentration(n, k);
            EXPECT_TRUE(r.passed) << n << "," << k;
            EXPECT_EQ(r.groups.at(k - 1).rank, oracle::betti_table(n, k));
        }
    }
    EXPECT_THROW(verify_concentration(7, 3), BudgetExceeded);
}
