#include <gtest/gtest.h>

#include <random>

#include "halfcube/character_oracles.hpp"
#include "halfcube/characters.hpp"
#include "halfcube/signed_permutation.hpp"
#include "oracles.hpp"

using namespace halfcube;

TEST(DLabel, CanonicalFormAndParsing) {
    const DLabel a(Partition(), Partition({2, 1, 1}));
    EXPECT_EQ(a.to_string(), "{2,1,1|0}");
    EXPECT_EQ(a, DLabel(Partition({2, 1, 1}), Partition()));
    EXPECT_EQ(DLabel::parse("{0|2,1,1}"), a);
    EXPECT_EQ(DLabel::parse("{2|2}+").split(), SplitSign::plus);
    EXPECT_EQ(DLabel::parse("{1,1|1,1}-").to_string(), "{1,1|1,1}-");
    EXPECT_THROW(DLabel(Partition({2}), Partition({2})), std::invalid_argument);
    EXPECT_THROW(DLabel(Partition({2}), Partition({1}), SplitSign::plus), std::invalid_argument);
    EXPECT_THROW(DLabel::parse("{2,1"), std::invalid_argument);
}

TEST(VirtualCharacter, Arithmetic) {
    DnCharacter a, b;
    a.add(DLabel::parse("{3|1}"));
    b.add(DLabel::parse("{3|1}"), -1);
    EXPECT_TRUE((a + b).empty());
    EXPECT_EQ((2 * a).multiplicity(DLabel::parse("{1|3}")), 2);
    EXPECT_FALSE((2 * a).multiplicity_free());
    EXPECT_THROW(a.add(DLabel::parse("{2|1}")), std::invalid_argument);
    EXPECT_EQ(a.to_json().dump(), R"({"{3|1}":1})");
}

TEST(TypeB, LinearCharactersAndReflection) {
    // Checked against explicit signed permutation matrices.
    for (int n = 1; n <= 5; ++n) {
        for (const auto& w : enumerate_group(n, GroupType::B)) {
            const auto t = cycle_type_b(w);
            const int sp = oracle::perm_sign(w.perm());
            const int eps = w.negative_count() % 2 == 0 ? 1 : -1;
            EXPECT_EQ(mn_character_b({Partition::row(n), Partition()}, t), 1);
            EXPECT_EQ(mn_character_b({Partition::column(n), Partition()}, t), sp);
            EXPECT_EQ(mn_character_b({Partition(), Partition::row(n)}, t), eps);
            EXPECT_EQ(mn_character_b({Partition(), Partition::column(n)}, t), sp * eps);
            EXPECT_EQ(sign_rep(w), sp * eps);
            if (n >= 2) {
                EXPECT_EQ(mn_character_b({Partition::row(n - 1), Partition::row(1)}, t), oracle::reflection_trace(w));
            }
        }
    }
}

TEST(TypeB, ExteriorPowersOfTheReflectionRepresentation) {
    // Lambda^j of the signed permutation representation is ([n-j],[1^j]).
    for (int n = 2; n <= 5; ++n) {
        for (int j = 0; j <= n; ++j) {
            const Bipartition b{Partition::row(n - j), Partition::column(j)};
            for (const auto& c : conjugacy_classes(n, GroupType::B)) {
                EXPECT_EQ(mn_character_b(b, c.type), oracle::exterior_trace(c.representative, j));
            }
        }
    }
}

TEST(TypeB, Degrees) {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& b : all_bipartitions(n)) {
            const int m = b.first.size();
            EXPECT_EQ(degree_b(b), oracle::binomial(n, m) * oracle::syt(b.first) * oracle::syt(b.second));
        }
    }
}

TEST(TypeB, OrthogonalityOverTheGroup) {
    for (int n = 1; n <= 4; ++n) {
        const auto group = enumerate_group(n, GroupType::B);
        const auto labels = all_bipartitions(n);
        for (const auto& x : labels) {
            for (const auto& y : labels) {
                std::int64_t s = 0;
                for (const auto& w : group) s += mn_character_b(x, cycle_type_b(w)) * mn_character_b(y, cycle_type_b(w));
                EXPECT_EQ(s, x == y ? static_cast<std::int64_t>(group.size()) : 0);
            }
        }
    }
}

TEST(TypeD, IrreducibleUnsplitLabelsHaveNormOne) {
    for (int n = 2; n <= 5; ++n) {
        const auto group = enumerate_group(n, GroupType::D);
        std::int64_t squares = 0;
        for (const auto& l : all_dlabels(n)) {
            squares += degree_d(l) * degree_d(l);
            if (l.is_split()) {
                EXPECT_THROW(value_d(l, cycle_type_b(group[0])), CharacterError);
                continue;
            }
            std::int64_t s = 0;
            for (const auto& w : group) {
                const auto v = value_d(l, cycle_type_b(w));
                s += v * v;
            }
            EXPECT_EQ(s, static_cast<std::int64_t>(group.size())) << l.to_string();
        }
        EXPECT_EQ(squares, static_cast<std::int64_t>(group.size()));
    }
    const SignedCycleType odd{Partition({2}), Partition({1})};
    EXPECT_THROW(value_d(DLabel::parse("{2|1}"), odd), CharacterError);
}

TEST(TypeD, InducedTrivialByCosetCounting) {
    // Permutation character on W(D_n)/S_n, counted over the group. Odd n
    // only: for even n the induced module contains split constituents,
    // whose values are not evaluated.
    for (int n = 3; n <= 5; n += 2) {
        const auto group = enumerate_group(n, GroupType::D);
        const DnCharacter ind = induce_trivial_sn_to_d(n);
        EXPECT_EQ(degree(ind), static_cast<std::int64_t>(group.size()) / oracle::factorial(n));
        for (const auto& c : conjugacy_classes(n, GroupType::D)) {
            std::int64_t fixed = 0;
            for (const auto& x : group) {
                fixed += (x.inverse() * c.representative * x).negative_count() == 0;
            }
            EXPECT_EQ(value_d(ind, c.type) * oracle::factorial(n), fixed) << c.representative.to_string();
        }
    }
}

TEST(TypeD, RestrictionToSnKeepsValues) {
    for (int n = 2; n <= 5; ++n) {
        for (const auto& l : all_dlabels(n)) {
            if (l.is_split()) continue;
            const auto r = restrict_d_to_sn(l);
            EXPECT_EQ(degree(r), degree_d(l));
            for (const auto& alpha : partitions_of(n)) {
                std::int64_t v = 0;
                for (const auto& [lambda, m] : r.terms()) v += m * mn_character_sn(lambda, alpha);
                EXPECT_EQ(v, value_d(l, {alpha, Partition()}));
            }
        }
    }
}

TEST(TypeD, BranchingAgreesWithEmbeddedValues) {
    for (int n = 4; n <= 6; ++n) {
        const auto classes = conjugacy_classes(n - 1, GroupType::D);
        for (const auto& l : all_dlabels(n)) {
            if (l.is_split()) continue;
            DnCharacter b;
            try {
                b = branch_d(l);
            } catch (const CharacterError& e) {
                EXPECT_EQ(e.kind(), CharacterError::Kind::split_label_would_arise);
                continue;
            }
            EXPECT_EQ(degree(b), degree_d(l));
            for (const auto& c : classes) {
                EXPECT_EQ(value_d(b, c.type), value_d(l, cycle_type_b(embed(c.representative, n))));
            }
        }
    }
}

TEST(TypeD, ParabolicRestrictionMatchesBruteForce) {
    const int n = 4, k = 3;
    int compared = 0;
    for (const auto& l : all_dlabels(n)) {
        if (l.split() == SplitSign::minus) continue;
        for (const auto& left : all_dlabels(k)) {
            if (left.is_split()) continue;
            for (const auto& right : all_dlabels(n - k)) {
                std::int64_t formula;
                try {
                    formula = parabolic_restriction_multiplicity(l, k, left, right);
                } catch (const CharacterError& e) {
                    EXPECT_EQ(e.kind(), CharacterError::Kind::hypothesis_violated);
                    continue;
                }
                const auto brute = parabolic_multiplicity_bruteforce(l, k, left, right);
                EXPECT_EQ(brute, l.is_split() ? 2 * formula : formula) << l.to_string() << " " << left.to_string();
                ++compared;
            }
        }
    }
    EXPECT_GT(compared, 20);
    EXPECT_THROW(parabolic_restriction_multiplicity(DLabel::parse("{3,1|0}"), 2, DLabel::parse("{2|0}"),
                                                    DLabel::parse("{2|0}")),
                 std::exception);
}

TEST(SnOracles, ExteriorPowerOfSnReflectionIsAHook) {
    for (int m = 2; m <= 7; ++m) {
        for (int j = 0; j < m; ++j) {
            std::vector<std::pair<CycleType, std::int64_t>> values;
            for (const auto& a : partitions_of(m)) values.emplace_back(a, exterior_power_reflection_character(j, a));
            const Partition expected = j == 0 ? Partition::row(m) : hook_partition(j + 1, m - j - 1);
            for (const auto& lambda : partitions_of(m)) {
                const bool hook = lambda == expected;
                EXPECT_EQ(sn_multiplicity(lambda, values), hook ? 1 : 0);
            }
        }
    }
}
