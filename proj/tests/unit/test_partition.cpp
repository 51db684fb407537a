#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "halfcube/partition.hpp"
#include "oracles.hpp"

using namespace halfcube;

TEST(Partition, ValidationAndText) {
    EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
    EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
    EXPECT_EQ(Partition::parse("2,1,1"), Partition({2, 1, 1}));
    EXPECT_EQ(Partition::parse("0"), Partition());
    EXPECT_EQ(Partition::parse(""), Partition());
    EXPECT_EQ(Partition().to_string(), "0");
    EXPECT_EQ(Partition({3, 1}).to_string(), "3,1");
    EXPECT_EQ(Partition::from_unsorted({1, 0, 3, 1}), Partition({3, 1, 1}));
    EXPECT_THROW(Partition::parse("2,x"), std::invalid_argument);
    EXPECT_EQ(Partition({4, 2, 1}).conjugate(), Partition({3, 2, 1, 1}));
    EXPECT_EQ(Partition::row(3).conjugate(), Partition::column(3));
    EXPECT_TRUE(Partition({3, 2}).contains(Partition({2, 2})));
    EXPECT_FALSE(Partition({3, 2}).contains(Partition({1, 1, 1})));
}

TEST(Partition, CountsMatchGeneratingTable) {
    for (int n = 0; n <= 14; ++n) {
        const auto ps = partitions_of(n);
        EXPECT_EQ(static_cast<std::int64_t>(ps.size()), oracle::partition_count(n)) << n;
        for (const auto& p : ps) EXPECT_EQ(p.size(), n);
        EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end()));
    }
}

TEST(Partition, HookLengthMatchesTableauCount) {
    for (int n = 0; n <= 10; ++n) {
        std::int64_t squares = 0;
        for (const auto& p : partitions_of(n)) {
            EXPECT_EQ(dim_sn(p), oracle::syt(p)) << p.to_string();
            squares += dim_sn(p) * dim_sn(p);
        }
        EXPECT_EQ(squares, oracle::factorial(n));
    }
}

TEST(Partition, BorderStripsRemoveConnectedRims) {
    for (int n = 1; n <= 8; ++n) {
        for (const auto& p : partitions_of(n)) {
            for (int len = 1; len <= n; ++len) {
                for (const auto& s : border_strips(p, len)) {
                    EXPECT_EQ(static_cast<int>(s.cells.size()), len);
                    EXPECT_EQ(s.remainder.size(), n - len);
                    EXPECT_TRUE(p.contains(s.remainder));
                    int lo = INT32_MAX, hi = 0;
                    for (const auto& b : s.cells) {
                        lo = std::min(lo, b.row);
                        hi = std::max(hi, b.row);
                    }
                    EXPECT_EQ(s.height, hi - lo);
                }
            }
        }
    }
    // [3,3] has exactly one strip of length 4 and none of length 6 removing a 2x2 block.
    EXPECT_EQ(border_strips(Partition({3, 3}), 4).size(), 1u);
    EXPECT_EQ(border_strips(Partition({2, 2}), 4).size(), 0u);
}

TEST(Partition, RemovableBoxes) {
    const auto boxes = removable_boxes(Partition({3, 1, 1}));
    ASSERT_EQ(boxes.size(), 2u);
    EXPECT_EQ(boxes[0].row, 1);
    EXPECT_EQ(boxes[0].col, 3);
    EXPECT_EQ(remove_box(Partition({3, 1, 1}), boxes[1]), Partition({3, 1}));
}

TEST(LittlewoodRichardson, SkewTableauIdentity) {
    // f^{lambda/mu} = sum_nu c^lambda_{mu,nu} f^nu, with both sides counted independently.
    for (int n = 2; n <= 8; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            for (int m = 0; m <= n; ++m) {
                for (const auto& mu : partitions_of(m)) {
                    if (!lambda.contains(mu)) {
                        for (const auto& nu : partitions_of(n - m)) EXPECT_EQ(lr_coefficient(mu, nu, lambda), 0);
                        continue;
                    }
                    std::int64_t sum = 0;
                    for (const auto& nu : partitions_of(n - m)) sum += lr_coefficient(mu, nu, lambda) * oracle::syt(nu);
                    EXPECT_EQ(sum, oracle::skew_syt(lambda.parts(), mu.parts()))
                        << lambda.to_string() << " / " << mu.to_string();
                }
            }
        }
    }
}

TEST(LittlewoodRichardson, Symmetries) {
    for (int n = 2; n <= 7; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            for (int m = 1; m < n; ++m) {
                for (const auto& mu : partitions_of(m)) {
                    for (const auto& nu : partitions_of(n - m)) {
                        const auto c = lr_coefficient(mu, nu, lambda);
                        EXPECT_EQ(c, lr_coefficient(nu, mu, lambda));
                        EXPECT_EQ(c, lr_coefficient(mu.conjugate(), nu.conjugate(), lambda.conjugate()));
                    }
                }
            }
        }
    }
    // The first coefficient larger than one.
    EXPECT_EQ(lr_coefficient(Partition({2, 1}), Partition({2, 1}), Partition({3, 2, 1})), 2);
}

TEST(LittlewoodRichardson, PieriIsTheRowCase) {
    for (int n = 1; n <= 9; ++n) {
        for (int m = 0; m <= n; ++m) {
            for (const auto& mu : partitions_of(n - m)) {
                const auto strips = pieri_expand(mu, m);
                for (const auto& lambda : partitions_of(n)) {
                    const bool in = std::find(strips.begin(), strips.end(), lambda) != strips.end();
                    EXPECT_EQ(lr_coefficient(mu, Partition::row(m), lambda), in ? 1 : 0);
                }
            }
        }
    }
}

TEST(MurnaghanNakayama, OrthogonalityOfTheTable) {
    for (int n = 1; n <= 8; ++n) {
        const auto ps = partitions_of(n);
        std::int64_t classes_total = 0;
        for (const auto& a : ps) classes_total += class_size_sn(a);
        EXPECT_EQ(classes_total, oracle::factorial(n));
        for (const auto& l1 : ps) {
            for (const auto& l2 : ps) {
                std::int64_t s = 0;
                for (const auto& a : ps) s += class_size_sn(a) * mn_character_sn(l1, a) * mn_character_sn(l2, a);
                EXPECT_EQ(s, l1 == l2 ? oracle::factorial(n) : 0);
            }
        }
    }
}

TEST(MurnaghanNakayama, StripOrderDoesNotMatter) {
    const Partition lambda({4, 3, 1});
    const std::vector<int> lengths{1, 2, 5};
    std::vector<int> perm = lengths;
    const auto ref = mn_character_sn(lambda, Partition({5, 2, 1}));
    do {
        EXPECT_EQ(mn_character_sn_ordered(lambda, perm), ref);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(MurnaghanNakayama, ReflectionRepresentationOfS3) {
    // chi^[2,1](w) = fixed points - 1, by enumerating S_3.
    std::vector<int> p{0, 1, 2};
    do {
        int fixed = 0;
        std::vector<bool> seen(3, false);
        std::vector<int> cycles;
        for (int i = 0; i < 3; ++i) {
            fixed += p[i] == i;
            if (seen[i]) continue;
            int len = 0;
            for (int j = i; !seen[j]; j = p[j]) {
                seen[j] = true;
                ++len;
            }
            cycles.push_back(len);
        }
        const auto alpha = Partition::from_unsorted(cycles);
        EXPECT_EQ(mn_character_sn(Partition({2, 1}), alpha), fixed - 1);
        EXPECT_EQ(mn_character_sn(Partition({1, 1, 1}), alpha), oracle::perm_sign(p));
        EXPECT_EQ(permutation_sign(alpha), oracle::perm_sign(p));
    } while (std::next_permutation(p.begin(), p.end()));
}

TEST(Partition, HookPartition) {
    EXPECT_EQ(hook_partition(3, 0), Partition({1, 1, 1}));
    EXPECT_EQ(hook_partition(3, 2), Partition({3, 1, 1}));
    EXPECT_THROW(hook_partition(1, 0), std::out_of_range);
    EXPECT_THROW(hook_partition(3, -1), std::out_of_range);
}
