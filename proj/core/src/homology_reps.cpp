#include "halfcube/homology_reps.hpp"

#include <stdexcept>

#include "halfcube/exact.hpp"
#include "halfcube/homology.hpp"
#include "halfcube/parallel.hpp"

namespace halfcube {

namespace {

void check_k(int n, int k, int lo) {
    if (k < lo || k > n) {
        throw std::out_of_range("k = " + std::to_string(k) + " outside " + std::to_string(lo) + ".." +
                                std::to_string(n));
    }
}

DnCharacter hook_sum(int n, int k) {
    DnCharacter out;
    for (int e = 0; e <= n - k; ++e) out.add(DLabel(hook_partition(k, e), Partition::row(n - k - e)));
    return out;
}

}  // namespace

std::int64_t y_trace(const HalfCubeComplex& hc, int l, const SignedPermutation& w) {
    check_k(hc.n(), l, 3);
    return hc.trace(w, l, CellKind::demicube);
}

DnCharacter y_character_decomposition(int n, int k) {
    check_k(n, k, 3);
    DnCharacter out = hook_sum(n, k);
    if (k < n) out += hook_sum(n, k + 1);
    return out;
}

std::int64_t hopf_homology_trace(const HalfCubeComplex& hc, int k, const SignedPermutation& w) {
    check_k(hc.n(), k, 3);
    std::int64_t total = 0;
    for (int l = k; l <= hc.n(); ++l) {
        const std::int64_t t = y_trace(hc, l, w);
        total += (l - k) % 2 == 0 ? t : -t;
    }
    return total;
}

std::int64_t subcomplex_lefschetz_number(const HalfCubeComplex& hc, int k, const SignedPermutation& w) {
    check_k(hc.n(), k, 3);
    std::int64_t total = 0;
    for (int l = -1; l <= hc.n(); ++l) {
        std::int64_t t = l < k ? hc.trace(w, l) : hc.trace(w, l) - hc.trace(w, l, CellKind::demicube);
        total += (l % 2 == 0) ? t : -t;
    }
    return total;
}

std::int64_t full_lefschetz_number(const HalfCubeComplex& hc, const SignedPermutation& w) {
    std::int64_t total = 0;
    for (int l = -1; l <= hc.n(); ++l) {
        const std::int64_t t = hc.trace(w, l);
        total += (l % 2 == 0) ? t : -t;
    }
    return total;
}

DnCharacter chi_d_decomposition(int n, int k) {
    check_k(n, k, 2);
    return hook_sum(n, k);
}

nlohmann::json HomologyCharacter::to_json() const {
    nlohmann::json vals = nlohmann::json::array();
    for (const auto& [w, v] : values) {
        vals.push_back({{"representative", w.to_string()}, {"type", cycle_type_b(w).to_string()}, {"value", v}});
    }
    return {{"n", n}, {"k", k}, {"decomposition", decomposition.to_json()}, {"degree", degree()}, {"values", vals}};
}

HomologyCharacter chi_d(int n, int k, const ConjugacyTable& classes) {
    HomologyCharacter hc;
    hc.n = n;
    hc.k = k;
    hc.decomposition = chi_d_decomposition(n, k);
    for (const auto& cls : classes) {
        hc.values.emplace_back(cls.representative, value_d(hc.decomposition, cls.type));
    }
    return hc;
}

Report verify_homology_character(const HalfCubeComplex& hc, int threads) {
    const int n = hc.n();
    Report report("homology-character");
    std::vector<SignedPermutation> elements;
    std::string scope;
    if (n == 4) {
        elements = enumerate_group(n, GroupType::D, n);
        scope = "all elements";
    } else {
        for (const auto& cls : conjugacy_classes(n, GroupType::D, std::max(n, 6))) {
            elements.push_back(cls.representative);
        }
        scope = "class representatives";
    }
    for (int k = 3; k <= n; ++k) {
        const DnCharacter formula = chi_d_decomposition(n, k);
        struct Row {
            std::int64_t trace;
            std::int64_t value;
        };
        auto rows = parallel_map(elements.size(), threads, [&](std::size_t i) {
            return Row{hopf_homology_trace(hc, k, elements[i]), value_d(formula, cycle_type_b(elements[i]))};
        });
        nlohmann::json mismatches = nlohmann::json::array();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].trace != rows[i].value) {
                mismatches.push_back({{"element", elements[i].to_string()},
                                      {"k", k},
                                      {"homology_trace", rows[i].trace},
                                      {"character_value", rows[i].value}});
            }
        }
        const bool ok = mismatches.empty();
        report.add("n=" + std::to_string(n) + " k=" + std::to_string(k),
                   ok,
                   {{"scope", scope},
                    {"elements", elements.size()},
                    {"decomposition", formula.to_json()},
                    {"mismatches", std::move(mismatches)}});
    }
    return report;
}

nlohmann::json BranchComparison::to_json() const {
    return {{"left", left.to_json()}, {"right", right.to_json()}, {"equal", equal}};
}

BranchComparison branch_chi_d(int n, int k) {
    if (k < 3 || k >= n) throw std::out_of_range("branch_chi_d requires 3 <= k < n");
    BranchComparison b;
    b.left = branch_d(chi_d_decomposition(n, k));
    b.right = 2 * chi_d_decomposition(n - 1, k) + chi_d_decomposition(n - 1, k - 1);
    b.equal = b.left == b.right;
    return b;
}

nlohmann::json SnRestriction::to_json() const {
    nlohmann::json s = nlohmann::json::array();
    for (const auto& t : summands) {
        s.push_back({{"e", t.e},
                     {"hook", t.hook.to_string()},
                     {"row", t.row.to_string()},
                     {"dimension", t.dimension},
                     {"induced", t.induced.to_json()}});
    }
    return {{"n", n},
            {"k", k},
            {"decomposition", decomposition.to_json()},
            {"summands", std::move(s)},
            {"total_dimension", total_dimension},
            {"closed_form", closed_form}};
}

SnRestriction restrict_chi_d_to_sn(int n, int k) {
    check_k(n, k, 3);
    SnRestriction r;
    r.n = n;
    r.k = k;
    for (int e = 0; e <= n - k; ++e) {
        InducedSummand s;
        s.e = e;
        s.hook = hook_partition(k, e);
        s.row = Partition::row(n - k - e);
        s.dimension = checked_binomial(n, k + e) * checked_binomial(k + e - 1, k - 1);
        for (const auto& lambda : pieri_expand(s.hook, n - k - e)) s.induced.add(lambda);
        r.decomposition += restrict_d_to_sn(DLabel(s.hook, s.row));
        r.total_dimension += s.dimension;
        r.summands.push_back(std::move(s));
    }
    r.closed_form = betti(n, k, BettiMethod::closed);
    return r;
}

bool verify_exterior_power_constituent(int n, int k) {
    check_k(n, k, 3);
    return chi_d_decomposition(n, k).multiplicity(DLabel(Partition::column(k), Partition::row(n - k))) == 1;
}

}  // namespace halfcube
