#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "halfcube/characters.hpp"
#include "halfcube/errors.hpp"

namespace halfcube {

enum class GroupType { B, D };

/// Element of W(B_n) acting on R^n: coordinate i moves to position perm[i],
/// then the coordinate now at position j is multiplied by signs[j].
/// Indices are 0-based internally; the text form is 1-based.
class SignedPermutation {
public:
    SignedPermutation() = default;
    SignedPermutation(std::vector<int> perm, std::vector<int> signs);

    static SignedPermutation identity(int n);

    /// Parses "2 1 3 4 / --++".
    static SignedPermutation parse(std::string_view text);

    int degree() const { return static_cast<int>(perm_.size()); }
    const std::vector<int>& perm() const { return perm_; }
    const std::vector<int>& signs() const { return signs_; }

    int negative_count() const;
    bool in_d() const { return negative_count() % 2 == 0; }
    bool is_identity() const;

    template <typename T>
    std::vector<T> apply(const std::vector<T>& x) const {
        std::vector<T> y(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            const int j = perm_[i];
            y[j] = signs_[j] < 0 ? -x[i] : x[i];
        }
        return y;
    }

    /// (u * v)(x) = u(v(x)).
    friend SignedPermutation operator*(const SignedPermutation& u, const SignedPermutation& v);
    SignedPermutation inverse() const;

    /// Dense index in [0, n! * 2^n), bijective on W(B_n).
    std::uint64_t index() const;

    std::string to_string() const;

    /// Lexicographic on the one-line form, then on signs with + before -.
    friend std::strong_ordering operator<=>(const SignedPermutation& a, const SignedPermutation& b);
    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

private:
    std::vector<int> perm_;
    std::vector<int> signs_;
};

/// [s_1', s_1, ..., s_{n-1}].
std::vector<SignedPermutation> generators_d(int n);

/// s_0: sign change of the first coordinate (type B only).
SignedPermutation generator_b0(int n);

/// Checks the Coxeter relations of the D_n graph on generators_d(n).
bool coxeter_relation_check(int n);

SignedCycleType cycle_type_b(const SignedPermutation& w);

/// Type-B sign character: sgn(perm) * (-1)^(negative signs).
int sign_rep(const SignedPermutation& w);

std::uint64_t group_order(int n, GroupType type);

/// Visits every element once, in increasing total order.
void for_each_element(int n, GroupType type, const std::function<void(const SignedPermutation&)>& fn,
                      int max_n = 6);
std::vector<SignedPermutation> enumerate_group(int n, GroupType type, int max_n = 6);

SignedPermutation random_element(int n, GroupType type, std::mt19937_64& rng);

struct ConjugacyClass {
    SignedPermutation representative;  // least element of the class
    std::uint64_t size = 0;
    SignedCycleType type;
};

using ConjugacyTable = std::vector<ConjugacyClass>;

/// Brute-force class partition, ordered by representative.
ConjugacyTable conjugacy_classes(int n, GroupType type, int max_n = 6);

/// Extends w by the identity: it acts on coordinates offset .. offset+deg-1
/// of R^target_n.
SignedPermutation embed(const SignedPermutation& w, int target_n, int offset = 0);

}  // namespace halfcube
