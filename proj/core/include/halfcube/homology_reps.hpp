#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "halfcube/characters.hpp"
#include "halfcube/halfcube_complex.hpp"
#include "halfcube/report.hpp"
#include "halfcube/signed_permutation.hpp"

namespace halfcube {

/// Trace of w on Y_l, the span of the demicube l-cells (3 <= l <= n).
std::int64_t y_trace(const HalfCubeComplex& hc, int l, const SignedPermutation& w);

/// Y_k as a sum of W(D_n) irreducibles: the hook labels {eta(k,e), [n-k-e]}
/// for e <= n-k together with those for k+1.
DnCharacter y_character_decomposition(int n, int k);

/// Trace of w on H_{k-1}(C_{n,k}) through the alternating sum of Y traces,
/// sum_{l >= k} (-1)^(l-k) tr(w, Y_l). Valid because the homology is free
/// and concentrated in one degree; see verify_concentration.
std::int64_t hopf_homology_trace(const HalfCubeComplex& hc, int k, const SignedPermutation& w);

/// Lefschetz number sum_p (-1)^p tr(w, C_p(C_{n,k})) of the subcomplex,
/// empty cell included. Equals (-1)^(k-1) times the homology trace.
std::int64_t subcomplex_lefschetz_number(const HalfCubeComplex& hc, int k, const SignedPermutation& w);

/// Alternating trace over the full complex C_n; zero for every chain map.
std::int64_t full_lefschetz_number(const HalfCubeComplex& hc, const SignedPermutation& w);

/// sum_{e <= n-k} {eta(k,e), [n-k-e]}. Defined for 2 <= k <= n; k = 2 is a
/// formal extension with no homology behind it.
DnCharacter chi_d_decomposition(int n, int k);

struct HomologyCharacter {
    int n = 0;
    int k = 0;
    DnCharacter decomposition;
    std::vector<std::pair<SignedPermutation, std::int64_t>> values;  // per class representative

    std::int64_t degree() const { return halfcube::degree(decomposition); }
    nlohmann::json to_json() const;
};

HomologyCharacter chi_d(int n, int k, const ConjugacyTable& classes);

/// Compares the homology trace with the closed-form character at every
/// element of W(D_4), or at class representatives for larger n, for all
/// 3 <= k <= n.
Report verify_homology_character(const HalfCubeComplex& hc, int threads = 1);

struct BranchComparison {
    DnCharacter left;   // chi_d(n,k) restricted to W(D_{n-1})
    DnCharacter right;  // 2 chi_d(n-1,k) + chi_d(n-1,k-1)
    bool equal = false;
    nlohmann::json to_json() const;
};

/// Requires 3 <= k < n.
BranchComparison branch_chi_d(int n, int k);

struct InducedSummand {
    int e = 0;
    Partition hook;           // eta(k,e)
    Partition row;            // [n-k-e]
    std::int64_t dimension = 0;  // C(n,k+e) C(k+e-1,k-1)
    SnCharacter induced;      // Pieri expansion of hook x row
};

struct SnRestriction {
    int n = 0;
    int k = 0;
    SnCharacter decomposition;   // via Littlewood-Richardson restriction
    std::vector<InducedSummand> summands;
    std::int64_t total_dimension = 0;
    std::int64_t closed_form = 0;  // B(n,k), closed form
    nlohmann::json to_json() const;
};

SnRestriction restrict_chi_d_to_sn(int n, int k);

/// {[1^k], [n-k]} (the k-th exterior power of the reflection representation)
/// occurs in chi_d(n,k) with multiplicity one.
bool verify_exterior_power_constituent(int n, int k);

}  // namespace halfcube
