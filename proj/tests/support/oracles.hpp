#pragma once

// Independent reference computations for the tests. Nothing here calls the
// closed forms it is used to check: counts come from recursion over
// diagrams, characters from explicit matrices, and so on.

#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "halfcube/partition.hpp"
#include "halfcube/signed_permutation.hpp"
#include "halfcube/sparse_matrix.hpp"

namespace oracle {

/// Number of partitions of n by the standard parts-at-most-m table.
inline std::int64_t partition_count(int n) {
    std::vector<std::int64_t> p(n + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= n; ++part) {
        for (int s = part; s <= n; ++s) p[s] += p[s - part];
    }
    return p[n];
}

/// Standard tableaux of the skew shape outer / inner, by removing outer
/// corners one at a time (memoized on the remaining shape).
inline std::int64_t skew_syt(const std::vector<int>& outer, const std::vector<int>& inner) {
    static std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t> memo;
    auto key = std::make_pair(outer, inner);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool empty = true;
    for (std::size_t i = 0; i < outer.size(); ++i) {
        const int in = i < inner.size() ? inner[i] : 0;
        if (outer[i] > in) empty = false;
    }
    if (empty) return memo[key] = 1;
    std::int64_t total = 0;
    for (std::size_t i = 0; i < outer.size(); ++i) {
        const int in = i < inner.size() ? inner[i] : 0;
        const int below = i + 1 < outer.size() ? outer[i + 1] : 0;
        if (outer[i] > in && outer[i] > below) {
            auto next = outer;
            --next[i];
            while (!next.empty() && next.back() == 0) next.pop_back();
            total += skew_syt(next, inner);
        }
    }
    return memo[key] = total;
}

inline std::int64_t syt(const halfcube::Partition& p) { return skew_syt(p.parts(), {}); }

inline std::int64_t factorial(int n) {
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t b = 1;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

/// Trace of the signed permutation matrix (the n-dimensional reflection
/// representation of W(B_n)).
inline std::int64_t reflection_trace(const halfcube::SignedPermutation& w) {
    std::int64_t t = 0;
    for (int i = 0; i < w.degree(); ++i) {
        if (w.perm()[i] == i) t += w.signs()[i];
    }
    return t;
}

/// Trace of Lambda^j of the signed permutation matrix: coefficient of t^j
/// in det(I + tM), built from the cycles of w directly.
inline std::int64_t exterior_trace(const halfcube::SignedPermutation& w, int j) {
    const int n = w.degree();
    std::vector<std::int64_t> poly{1};
    std::vector<bool> seen(n, false);
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        int len = 0, sign = 1, i = start;
        while (!seen[i]) {
            seen[i] = true;
            i = w.perm()[i];
            sign *= w.signs()[i];
            ++len;
        }
        // Block with M^len = sign * I contributes 1 - sign * (-t)^len.
        std::vector<std::int64_t> factor(len + 1, 0);
        factor[0] = 1;
        factor[len] = -sign * ((len % 2 == 0) ? 1 : -1);
        std::vector<std::int64_t> next(poly.size() + len, 0);
        for (std::size_t a = 0; a < poly.size(); ++a) {
            for (int b = 0; b <= len; ++b) next[a + b] += poly[a] * factor[b];
        }
        poly = std::move(next);
    }
    return j < static_cast<int>(poly.size()) ? poly[j] : 0;
}

/// Sign of the underlying permutation, by counting inversions.
inline int perm_sign(const std::vector<int>& perm) {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        for (std::size_t j = i + 1; j < perm.size(); ++j) inv += perm[i] > perm[j];
    }
    return inv % 2 == 0 ? 1 : -1;
}

/// Recurrence B(n,k) = 2B(n-1,k) + B(n-1,k-1) with B(n,0) = B(n,n) = 1,
/// tabulated afresh.
inline std::int64_t betti_table(int n, int k) {
    std::vector<std::vector<std::int64_t>> b(n + 1, std::vector<std::int64_t>(n + 1, 0));
    for (int m = 0; m <= n; ++m) {
        b[m][0] = b[m][m] = 1;
        for (int j = 1; j < m; ++j) b[m][j] = 2 * b[m - 1][j] + b[m - 1][j - 1];
    }
    return b[n][k];
}

/// Dense random integer matrix product of elementary unimodular moves.
inline std::vector<std::vector<std::int64_t>> random_unimodular(int n, std::mt19937_64& rng, int moves = 12) {
    std::vector<std::vector<std::int64_t>> u(n, std::vector<std::int64_t>(n, 0));
    for (int i = 0; i < n; ++i) u[i][i] = 1;
    if (n < 2) return u;
    std::uniform_int_distribution<int> pick(0, n - 1), coef(-2, 2);
    for (int m = 0; m < moves; ++m) {
        const int a = pick(rng), b = pick(rng);
        if (a == b) continue;
        const int c = coef(rng);
        for (int col = 0; col < n; ++col) u[a][col] += c * u[b][col];
    }
    return u;
}

}  // namespace oracle
