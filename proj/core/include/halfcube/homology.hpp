#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "halfcube/exact.hpp"
#include "halfcube/sparse_matrix.hpp"

namespace halfcube {

/// Invariant factors d_1 | d_2 | ... | d_r of an integer matrix.
struct SNFResult {
    std::vector<BigInt> factors;
    int rank() const { return static_cast<int>(factors.size()); }
};

/// Smith normal form over Z. Sparse elimination with smallest-magnitude
/// pivots; runs on checked int64 and restarts on arbitrary precision if an
/// entry overflows. The diagonal is normalized to a divisibility chain.
SNFResult smith_normal_form(const SparseIntMatrix& m);

/// Rank over Q by fraction-free Gaussian elimination (cross-check path).
int rational_rank(const SparseIntMatrix& m);

/// H ~= Z^rank + sum Z/torsion_i.
struct HomologyGroup {
    std::int64_t rank = 0;
    std::vector<BigInt> torsion;

    bool is_zero() const { return rank == 0 && torsion.empty(); }
    bool torsion_free() const { return torsion.empty(); }
    std::string to_string() const;
    nlohmann::json to_json() const;

    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Homology of every degree of cc. With reduced = false the bottom degree
/// (the empty cell) is dropped first. Throws NotAComplex unless the
/// boundaries square to zero.
std::map<int, HomologyGroup> homology(const ChainComplexData& cc, bool reduced = true);

nlohmann::json homology_to_json(const std::map<int, HomologyGroup>& h);

enum class BettiMethod { recurrence, closed, alternating };

BettiMethod parse_betti_method(const std::string& name);
std::string betti_method_name(BettiMethod method);

/// Nonzero Betti number B(n, k) of C_{n,k}:
///  recurrence: B(n,0) = B(n,n) = 1, B(n,k) = 2 B(n-1,k) + B(n-1,k-1);
///  closed:     sum_{i=k}^{n} C(n,i) C(i-1,k-1), with C(-1,-1) = 1;
///  alternating: sum_{l>=k} (-1)^(l-k) 2^(n-l) C(n,l), defined for k >= 3.
std::int64_t betti(int n, int k, BettiMethod method);

struct ConcentrationReport {
    int n = 0;
    int k = 0;
    std::map<int, HomologyGroup> groups;
    std::int64_t expected_rank = 0;
    bool passed = false;
    std::vector<std::string> failures;

    nlohmann::json to_json() const;
};

/// Homology of C_{n,k} is torsion free, zero outside degree k-1, and has
/// rank B(n,k) there.
ConcentrationReport verify_concentration(const ChainComplexData& cc, int n, int k);
ConcentrationReport verify_concentration(int n, int k, int max_n = 6);

}  // namespace halfcube
