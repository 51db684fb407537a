#include <gtest/gtest.h>

#include <climits>

#include "halfcube/exact.hpp"

using namespace halfcube;

TEST(Checked64, ThrowsInsteadOfWrapping) {
    const Checked64 big(INT64_MAX);
    EXPECT_THROW(big + Checked64(1), OverflowError);
    EXPECT_THROW(Checked64(INT64_MIN) - Checked64(1), OverflowError);
    EXPECT_THROW(Checked64(INT64_MAX / 2 + 1) * Checked64(2), OverflowError);
    EXPECT_THROW(-Checked64(INT64_MIN), OverflowError);
    EXPECT_THROW(Checked64(INT64_MIN) / Checked64(-1), OverflowError);
    EXPECT_EQ((Checked64(7) * Checked64(-6)).value(), -42);
    EXPECT_EQ((Checked64(INT64_MIN) % Checked64(-1)).value(), 0);
}

TEST(Determinant, SmallMatrices) {
    EXPECT_EQ(determinant({}), 1);
    EXPECT_EQ(determinant({{5}}), 5);
    EXPECT_EQ(determinant({{1, 2}, {3, 4}}), -2);
    EXPECT_EQ(determinant({{2, 0, 1}, {1, 3, 2}, {1, 1, 2}}), 6);
    EXPECT_EQ(determinant({{2, 0, 1}, {1, 3, 2}, {1, 1, 1}}), 0);
    EXPECT_EQ(determinant({{1, 2}, {2, 4}}), 0);
    EXPECT_EQ(determinant_sign({{0, 1}, {1, 0}}), -1);
    EXPECT_EQ(determinant_sign({{0, 0}, {1, 0}}), 0);
}

TEST(Determinant, FallsBackToBigInt) {
    // diag(2^40, 2^40, 2^40) overflows int64 but not the BigInt path.
    const std::int64_t p = std::int64_t(1) << 40;
    const BigInt d = determinant({{p, 0, 0}, {0, p, 0}, {0, 0, p}});
    EXPECT_EQ(d, BigInt(1) << 120);
    EXPECT_EQ(determinant_sign({{p, 1, 0}, {0, p, 0}, {0, 0, -p}}), -1);
}

TEST(Binomial, ValuesAndRange) {
    EXPECT_EQ(checked_binomial(5, 2), 10);
    EXPECT_EQ(checked_binomial(30, 15), 155117520);
    EXPECT_EQ(checked_binomial(4, 5), 0);
    EXPECT_EQ(checked_binomial(4, -1), 0);
    EXPECT_EQ(checked_factorial(10), 3628800);
    EXPECT_EQ(checked_pow2(40), std::int64_t(1) << 40);
    EXPECT_THROW(checked_factorial(30), OverflowError);
}
