#include <gtest/gtest.h>

#include <random>

#include "halfcube/sparse_matrix.hpp"

using namespace halfcube;

namespace {

std::vector<std::vector<std::int64_t>> random_dense(int r, int c, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-3, 3);
    std::vector<std::vector<std::int64_t>> m(r, std::vector<std::int64_t>(c));
    for (auto& row : m) {
        for (auto& x : row) x = d(rng) * (d(rng) > 0);  // sparse-ish
    }
    return m;
}

}  // namespace

TEST(SparseIntMatrix, MatchesDenseArithmetic) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        const int a = 1 + rng() % 6, b = 1 + rng() % 6, c = 1 + rng() % 6;
        const auto x = random_dense(a, b, rng), y = random_dense(b, c, rng);
        std::vector<std::vector<std::int64_t>> prod(a, std::vector<std::int64_t>(c, 0));
        for (int i = 0; i < a; ++i) {
            for (int j = 0; j < c; ++j) {
                for (int l = 0; l < b; ++l) prod[i][j] += x[i][l] * y[l][j];
            }
        }
        const auto sx = SparseIntMatrix::from_dense(x), sy = SparseIntMatrix::from_dense(y);
        EXPECT_EQ((sx * sy).to_dense(), prod);
        EXPECT_EQ(sx.transpose().transpose(), sx);
        EXPECT_EQ(SparseIntMatrix::from_json(sx.to_json()), sx);
        for (int i = 0; i < a; ++i) {
            for (int j = 0; j < b; ++j) EXPECT_EQ(sx.at(i, j), x[i][j]);
        }
    }
}

TEST(SparseIntMatrix, NoStoredZeros) {
    SparseIntMatrix m(2, 2);
    m.add(0, 1, 3);
    m.add(0, 1, -3);
    EXPECT_TRUE(m.is_zero());
    EXPECT_EQ(m, SparseIntMatrix(2, 2));
    EXPECT_EQ(SparseIntMatrix::identity(3).nonzeros(), 3u);
    const auto s = SparseIntMatrix::from_dense({{1, 2, 3}, {4, 5, 6}}).submatrix({1}, {2, 0});
    EXPECT_EQ(s.to_dense(), (std::vector<std::vector<std::int64_t>>{{6, 4}}));
}
