#include "halfcube/character_oracles.hpp"

#include <stdexcept>

#include "halfcube/exact.hpp"

namespace halfcube {

namespace {

/// Membership in D_k x S_{n-k} and the value of sgn_k x trivial there.
bool parabolic_sign_value(const SignedPermutation& h, int k, int& value) {
    const int n = h.degree();
    int parity = 0;
    for (int i = 0; i < n; ++i) {
        if ((i < k) != (h.perm()[i] < k)) return false;
        if (i >= k && h.signs()[i] < 0) return false;
    }
    // Even sign count overall and none in the tail, so the head block lies in D_k.
    std::vector<bool> seen(k, false);
    for (int s = 0; s < k; ++s) {
        if (seen[s]) continue;
        int len = 0;
        for (int i = s; !seen[i]; i = h.perm()[i]) {
            seen[i] = true;
            ++len;
        }
        parity += len - 1;
    }
    value = parity % 2 == 0 ? 1 : -1;
    return true;
}

}  // namespace

std::vector<std::int64_t> induced_sign_character_table(int n, int k, const std::vector<SignedPermutation>& elements,
                                                       int max_n) {
    if (k < 1 || k > n) throw std::out_of_range("induced_sign_character requires 1 <= k <= n");
    const auto group = enumerate_group(n, GroupType::D, max_n);
    std::vector<SignedPermutation> inverses;
    inverses.reserve(group.size());
    for (const auto& x : group) inverses.push_back(x.inverse());
    const std::int64_t subgroup_order =
        checked_pow2(k - 1) * checked_factorial(k) * checked_factorial(n - k);
    std::vector<std::int64_t> out;
    for (const auto& w : elements) {
        std::int64_t total = 0;
        for (std::size_t i = 0; i < group.size(); ++i) {
            int v = 0;
            if (parabolic_sign_value(inverses[i] * w * group[i], k, v)) total += v;
        }
        if (total % subgroup_order != 0) throw std::logic_error("induced character is not integral");
        out.push_back(total / subgroup_order);
    }
    return out;
}

std::int64_t induced_sign_character(int n, int k, const SignedPermutation& w, int max_n) {
    return induced_sign_character_table(n, k, {w}, max_n).front();
}

std::int64_t parabolic_multiplicity_bruteforce(const DLabel& l, int k, const DLabel& left, const DLabel& right,
                                               int max_n) {
    const int n = l.size();
    if (left.is_split() || right.is_split()) {
        throw CharacterError(CharacterError::Kind::split_label_unsupported,
                             "brute-force inner product needs unsplit factor labels");
    }
    if (left.size() != k || right.size() != n - k) return 0;
    const auto head = k >= 1 ? enumerate_group(k, GroupType::D, max_n) : std::vector<SignedPermutation>{};
    const auto tail = n - k >= 1 ? enumerate_group(n - k, GroupType::D, max_n)
                                 : std::vector<SignedPermutation>{SignedPermutation::identity(0)};
    std::int64_t total = 0;
    for (const auto& a : head) {
        const auto ta = cycle_type_b(a);
        const std::int64_t va = mn_character_b(left.bipartition(), ta);
        for (const auto& b : tail) {
            const auto tb = cycle_type_b(b);
            const std::int64_t vb = n - k == 0 ? 1 : mn_character_b(right.bipartition(), tb);
            SignedPermutation g = embed(a, n, 0);
            if (n - k > 0) g = g * embed(b, n, k);
            total += mn_character_b(l.bipartition(), cycle_type_b(g)) * va * vb;
        }
    }
    const auto order = static_cast<std::int64_t>(head.size() * tail.size());
    if (total % order != 0) throw std::logic_error("inner product is not integral");
    return total / order;
}

std::int64_t exterior_power_reflection_character(int j, const CycleType& alpha) {
    // Permutation module: sum_j tr(Lambda^j P) t^j = prod over cycles (1 - (-t)^len).
    std::vector<std::int64_t> poly{1};
    for (int len : alpha.parts()) {
        std::vector<std::int64_t> next(poly.size() + len, 0);
        const std::int64_t coeff = len % 2 == 0 ? -1 : 1;  // -(-1)^len
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i] += poly[i];
            next[i + len] += coeff * poly[i];
        }
        poly = std::move(next);
    }
    // P = E + trivial, so Lambda(P) = Lambda(E) (1 + t): divide by (1 + t).
    std::vector<std::int64_t> quotient(poly.size(), 0);
    std::int64_t prev = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        quotient[i] = poly[i] - prev;
        prev = quotient[i];
    }
    if (j < 0 || static_cast<std::size_t>(j) >= quotient.size()) return 0;
    return quotient[j];
}

std::int64_t sn_multiplicity(const Partition& lambda, const std::vector<std::pair<CycleType, std::int64_t>>& values) {
    std::int64_t total = 0;
    for (const auto& [alpha, v] : values) total += class_size_sn(alpha) * v * mn_character_sn(lambda, alpha);
    const std::int64_t order = checked_factorial(lambda.size());
    if (total % order != 0) throw std::logic_error("class function is not a virtual character");
    return total / order;
}

}  // namespace halfcube
