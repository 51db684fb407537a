#pragma once

#include <cstdint>
#include <vector>

#include "halfcube/characters.hpp"
#include "halfcube/signed_permutation.hpp"

// Brute-force evaluations over explicitly enumerated groups. These never go
// through cells or closed forms and exist to cross-check those paths.

namespace halfcube {

/// Character of (sgn_k x trivial) induced from D_k x S_{n-k} (first k
/// coordinates carry D_k, the rest are permuted without signs) to W(D_n),
/// evaluated at w by summing over the whole group.
std::int64_t induced_sign_character(int n, int k, const SignedPermutation& w, int max_n = 5);

/// Same, for every element of W(D_n) at once (one pass over the group).
std::vector<std::int64_t> induced_sign_character_table(int n, int k, const std::vector<SignedPermutation>& elements,
                                                       int max_n = 5);

/// <l restricted to D_k x D_{n-k}, left x right> by summation over the
/// enumerated subgroup (D_k on the first k coordinates, D_{n-k} on the rest).
/// For a split l the full type-B character chi^(mu,mu) is used, which gives
/// the sum over both split constituents. Split left/right labels throw.
std::int64_t parabolic_multiplicity_bruteforce(const DLabel& l, int k, const DLabel& left, const DLabel& right,
                                               int max_n = 6);

/// Character of the exterior power Lambda^j of the (m-1)-dimensional
/// reflection representation of S_m at cycle type alpha, from eigenvalues.
std::int64_t exterior_power_reflection_character(int j, const CycleType& alpha);

/// Multiplicity of chi^lambda in the class function given by values on
/// cycle types, via the S_n inner product.
std::int64_t sn_multiplicity(const Partition& lambda, const std::vector<std::pair<CycleType, std::int64_t>>& values);

}  // namespace halfcube
