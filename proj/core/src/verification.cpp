#include "halfcube/verification.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <random>
#include <stdexcept>

#include "halfcube/character_oracles.hpp"
#include "halfcube/characters.hpp"
#include "halfcube/homology.hpp"
#include "halfcube/homology_reps.hpp"
#include "halfcube/parallel.hpp"
#include "halfcube/partition.hpp"

namespace halfcube {

namespace fs = std::filesystem;

const HalfCubeComplex& ComplexCache::get(int n) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = built_.find(n);
    if (it != built_.end()) return *it->second;
    if (n > max_n_) {
        throw BudgetExceeded("complex for n = " + std::to_string(n) + " exceeds the homology budget n <= " +
                             std::to_string(max_n_));
    }
    std::unique_ptr<HalfCubeComplex> hc;
    fs::path file;
    if (!dir_.empty()) {
        file = fs::path(dir_) / ("halfcube_n" + std::to_string(n) + ".json");
        std::ifstream in(file);
        if (in) {
            try {
                hc = std::make_unique<HalfCubeComplex>(HalfCubeComplex::from_json(nlohmann::json::parse(in)));
                if (hc->n() != n) hc.reset();
            } catch (const std::exception&) {
                hc.reset();  // stale or corrupt cache: rebuild below
            }
        }
    }
    if (!hc) {
        hc = std::make_unique<HalfCubeComplex>(n, max_n_);
        if (!file.empty()) {
            fs::create_directories(file.parent_path());
            std::ofstream(file) << hc->to_json().dump();
        }
    }
    return *built_.emplace(n, std::move(hc)).first->second;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"faces",     "chain",       "homology",   "theorem44",
                                                   "branching", "restriction", "characters", "all"};
    return names;
}

namespace {

std::string nk(int n, int k) { return "n=" + std::to_string(n) + " k=" + std::to_string(k); }
std::string nstr(int n) { return "n=" + std::to_string(n); }

std::vector<SignedPermutation> test_elements(int n) {
    if (n <= 4) return enumerate_group(n, GroupType::D, n);
    std::vector<SignedPermutation> reps;
    for (const auto& c : conjugacy_classes(n, GroupType::D, std::max(n, 6))) reps.push_back(c.representative);
    return reps;
}

}  // namespace

Report verify_faces(int n_max, const Budget& budget) {
    Report r("faces");
    if (n_max > budget.max_enumeration_n) {
        throw BudgetExceeded("face census limited to n <= " + std::to_string(budget.max_enumeration_n));
    }
    for (int n = 4; n <= n_max; ++n) {
        nlohmann::json rows = nlohmann::json::array();
        bool ok = true;
        for (const auto& c : face_census(n, budget.max_enumeration_n)) {
            ok = ok && c.measured == c.formula;
            rows.push_back({{"dim", c.dim}, {"kind", kind_name(c.kind)}, {"measured", c.measured}, {"formula", c.formula}});
        }
        r.add(nstr(n), ok, {{"counts", std::move(rows)}});
    }
    return r;
}

Report verify_chain(ComplexCache& cache, int n_max, int threads) {
    Report r("chain");
    for (int n = 4; n <= n_max; ++n) {
        const HalfCubeComplex& hc = cache.get(n);
        bool squares = true;
        nlohmann::json bad = nlohmann::json::array();
        for (int l = 1; l <= n; ++l) {
            if (!(hc.boundary(l - 1) * hc.boundary(l)).is_zero()) {
                squares = false;
                bad.push_back(l);
            }
        }
        r.add(nstr(n) + " boundary squares to zero", squares, {{"failing_degrees", std::move(bad)}});

        bool sub_ok = true;
        for (int k = 3; k <= n; ++k) sub_ok = sub_ok && hc.subcomplex(k).squares_to_zero();
        r.add(nstr(n) + " subcomplexes square to zero", sub_ok);

        r.add(nstr(n) + " Coxeter relations", coxeter_relation_check(n));

        const auto gens = generators_d(n);
        auto results = parallel_map(gens.size(), threads, [&](std::size_t g) {
            nlohmann::json fails = nlohmann::json::array();
            for (int l = 0; l <= n; ++l) {
                const auto a_hi = hc.action_matrix(gens[g], l);
                const auto a_lo = hc.action_matrix(gens[g], l - 1);
                if (!(a_lo * hc.boundary(l) == hc.boundary(l) * a_hi)) fails.push_back(l);
            }
            return fails;
        });
        for (std::size_t g = 0; g < gens.size(); ++g) {
            const std::string name = g == 0 ? "s1'" : "s" + std::to_string(g);
            r.add(nstr(n) + " " + name + " is a chain map", results[g].empty(),
                  {{"generator", gens[g].to_string()}, {"failing_degrees", results[g]}});
        }
    }
    return r;
}

Report verify_homology(ComplexCache& cache, int n_max) {
    Report r("homology");
    for (int n = 4; n <= n_max; ++n) {
        const HalfCubeComplex& hc = cache.get(n);
        const auto full = homology(hc.full());
        bool acyclic = true;
        for (const auto& [deg, g] : full) acyclic = acyclic && g.is_zero();
        r.add(nstr(n) + " full complex acyclic", acyclic, {{"homology", homology_to_json(full)}});
        for (int k = 3; k <= n; ++k) {
            const auto rep = verify_concentration(hc.subcomplex(k), n, k);
            r.add(nk(n, k) + " concentrated", rep.passed, rep.to_json());
        }
    }
    r.append(verify_betti());
    return r;
}

Report verify_betti(int n_max) {
    Report r("betti");
    nlohmann::json bad = nlohmann::json::array();
    for (int n = 0; n <= n_max; ++n) {
        for (int k = 0; k <= n; ++k) {
            const auto rec = betti(n, k, BettiMethod::recurrence);
            const auto closed = betti(n, k, BettiMethod::closed);
            bool ok = rec == closed;
            std::int64_t alt = 0;
            if (k >= 3) {
                alt = betti(n, k, BettiMethod::alternating);
                ok = ok && alt == rec;
            }
            if (!ok) bad.push_back({{"n", n}, {"k", k}, {"recurrence", rec}, {"closed", closed}, {"alternating", alt}});
        }
    }
    r.add("three methods agree up to n=" + std::to_string(n_max), bad.empty(), {{"mismatches", std::move(bad)}});
    return r;
}

Report verify_top_cell_sign(ComplexCache& cache, int n_max) {
    Report r("top-cell");
    for (int n = 4; n <= n_max; ++n) {
        const HalfCubeComplex& hc = cache.get(n);
        nlohmann::json rows = nlohmann::json::array();
        bool ok = true;
        for (const auto& g : generators_d(n)) {
            const auto top = hc.trace(g, n);
            const auto on_homology = hopf_homology_trace(hc, n, g);
            ok = ok && top == -1 && on_homology == -1;
            rows.push_back({{"generator", g.to_string()}, {"top_chain", top}, {"top_homology", on_homology}});
        }
        r.add(nstr(n) + " generators act by -1", ok, {{"generators", std::move(rows)}});
    }
    return r;
}

Report verify_y_traces(ComplexCache& cache, int n_max, int threads) {
    Report r("y-traces");
    for (int n = 4; n <= n_max; ++n) {
        const HalfCubeComplex& hc = cache.get(n);
        const auto elements = test_elements(n);
        for (int l = 3; l <= n; ++l) {
            const DnCharacter y = y_character_decomposition(n, l);
            auto traces = parallel_map(elements.size(), threads, [&](std::size_t i) { return y_trace(hc, l, elements[i]); });
            nlohmann::json bad = nlohmann::json::array();
            for (std::size_t i = 0; i < elements.size(); ++i) {
                const auto v = value_d(y, cycle_type_b(elements[i]));
                if (v != traces[i]) {
                    bad.push_back({{"element", elements[i].to_string()}, {"y_trace", traces[i]}, {"value", v}});
                }
            }
            r.add(nk(n, l) + " decomposition", bad.empty(),
                  {{"decomposition", y.to_json()}, {"elements", elements.size()}, {"mismatches", std::move(bad)}});
            if (n == 4) {
                const auto induced = induced_sign_character_table(n, l, elements);
                nlohmann::json bad_ind = nlohmann::json::array();
                for (std::size_t i = 0; i < elements.size(); ++i) {
                    if (induced[i] != traces[i]) {
                        bad_ind.push_back(
                            {{"element", elements[i].to_string()}, {"y_trace", traces[i]}, {"induced", induced[i]}});
                    }
                }
                r.add(nk(n, l) + " induced from D_k x S_(n-k)", bad_ind.empty(), {{"mismatches", std::move(bad_ind)}});
            }
        }
    }
    return r;
}

Report verify_equivariant_homology(ComplexCache& cache, int n_max, int threads) {
    Report r("equivariant-homology");
    for (int n = 4; n <= n_max; ++n) {
        const HalfCubeComplex& hc = cache.get(n);
        r.append(verify_homology_character(hc, threads));

        const auto elements = test_elements(n);
        bool lefschetz = true;
        for (const auto& w : elements) {
            lefschetz = lefschetz && full_lefschetz_number(hc, w) == 0;
            for (int k = 3; k <= n; ++k) {
                const auto h = hopf_homology_trace(hc, k, w);
                lefschetz = lefschetz && subcomplex_lefschetz_number(hc, k, w) == ((k - 1) % 2 == 0 ? h : -h);
            }
        }
        r.add(nstr(n) + " Lefschetz numbers consistent", lefschetz);
    }
    r.append(verify_y_traces(cache, n_max, threads));
    r.append(verify_top_cell_sign(cache, n_max));
    return r;
}

Report verify_branching(int n_max) {
    Report r("branching");
    for (int n = 4; n <= n_max; ++n) {
        for (int k = 3; k < n; ++k) {
            const auto b = branch_chi_d(n, k);
            r.add(nk(n, k) + " multiset identity", b.equal, b.to_json());
        }
    }
    if (n_max >= 5) {
        // Evaluate both sides on W(D_4) class representatives embedded in W(D_5).
        const int n = 5;
        for (int k = 3; k < n; ++k) {
            const DnCharacter left = chi_d_decomposition(n, k);
            const DnCharacter right = 2 * chi_d_decomposition(n - 1, k) + chi_d_decomposition(n - 1, k - 1);
            nlohmann::json bad = nlohmann::json::array();
            for (const auto& cls : conjugacy_classes(n - 1, GroupType::D)) {
                const auto w = embed(cls.representative, n);
                const auto lv = value_d(left, cycle_type_b(w));
                const auto rv = value_d(right, cls.type);
                if (lv != rv) bad.push_back({{"element", cls.representative.to_string()}, {"left", lv}, {"right", rv}});
            }
            r.add(nk(n, k) + " values on embedded W(D_4)", bad.empty(), {{"mismatches", std::move(bad)}});
        }
    }
    return r;
}

Report verify_restriction(int n_max) {
    Report r("restriction");
    for (int n = 4; n <= n_max; ++n) {
        for (int k = 3; k <= n; ++k) {
            const auto s = restrict_chi_d_to_sn(n, k);
            SnCharacter induced;
            for (const auto& t : s.summands) induced += t.induced;
            bool dims_ok = true;
            for (const auto& t : s.summands) dims_ok = dims_ok && degree(t.induced) == t.dimension;
            const bool ok = s.decomposition == induced && dims_ok && s.total_dimension == s.closed_form &&
                            degree(s.decomposition) == s.closed_form &&
                            s.closed_form == betti(n, k, BettiMethod::recurrence);
            r.add(nk(n, k), ok, s.to_json());
        }
    }
    if (n_max >= 4) {
        SnCharacter expected;
        expected.add(Partition({2, 1, 1}), 2);
        expected.add(Partition({1, 1, 1, 1}), 1);
        const auto s = restrict_chi_d_to_sn(4, 3);
        r.add("n=4 k=3 equals 2*[2,1,1] + [1,1,1,1]", s.decomposition == expected,
              {{"decomposition", s.decomposition.to_json()}});
    }
    return r;
}

Report verify_character_theory(int n_max, int group_max_n) {
    Report r("characters");
    // Row orthogonality of the type-B tables over the explicit group.
    for (int n = 1; n <= std::min(n_max, 4); ++n) {
        const auto classes = conjugacy_classes(n, GroupType::B, group_max_n);
        const auto labels = all_bipartitions(n);
        const auto order = static_cast<std::int64_t>(group_order(n, GroupType::B));
        bool ok = labels.size() == classes.size();
        std::vector<std::vector<std::int64_t>> table;
        for (const auto& b : labels) {
            std::vector<std::int64_t> row;
            for (const auto& c : classes) row.push_back(mn_character_b(b, c.type));
            table.push_back(std::move(row));
        }
        for (std::size_t i = 0; ok && i < labels.size(); ++i) {
            for (std::size_t j = 0; j < labels.size(); ++j) {
                std::int64_t s = 0;
                for (std::size_t c = 0; c < classes.size(); ++c) {
                    s += static_cast<std::int64_t>(classes[c].size) * table[i][c] * table[j][c];
                }
                if (s != (i == j ? order : 0)) ok = false;
            }
        }
        r.add(nstr(n) + " type-B orthogonality", ok, {{"classes", classes.size()}, {"irreducibles", labels.size()}});
    }
    // Degrees: value at the identity, sum of squares, and D-labels.
    for (int n = 1; n <= std::min(n_max, 6); ++n) {
        const SignedCycleType id{Partition(std::vector<int>(n, 1)), Partition()};
        std::int64_t squares_b = 0;
        bool ok = true;
        for (const auto& b : all_bipartitions(n)) {
            const auto d = degree_b(b);
            ok = ok && mn_character_b(b, id) == d;
            squares_b += d * d;
        }
        ok = ok && squares_b == static_cast<std::int64_t>(group_order(n, GroupType::B));
        if (n >= 2) {
            std::int64_t squares_d = 0;
            for (const auto& l : all_dlabels(n)) squares_d += degree_d(l) * degree_d(l);
            ok = ok && squares_d == static_cast<std::int64_t>(group_order(n, GroupType::D));
        }
        r.add(nstr(n) + " degrees", ok);
    }
    // Characters are constant on conjugacy classes of the explicit group.
    {
        std::mt19937_64 rng(20260101);
        bool ok = true;
        for (int n = 2; n <= std::min(n_max, 6); ++n) {
            const auto labels = all_bipartitions(n);
            for (int trial = 0; trial < 50; ++trial) {
                const auto w = random_element(n, GroupType::B, rng);
                const auto x = random_element(n, GroupType::B, rng);
                const auto conj = x.inverse() * w * x;
                const auto& b = labels[rng() % labels.size()];
                ok = ok && mn_character_b(b, cycle_type_b(w)) == mn_character_b(b, cycle_type_b(conj));
            }
        }
        r.add("class function property", ok);
    }
    // Closed-form parabolic restriction multiplicities against brute force.
    if (n_max >= 4) {
        const int n = 4, k = 3;
        nlohmann::json bad = nlohmann::json::array();
        int compared = 0;
        for (const auto& l : all_dlabels(n)) {
            if (l.split() == SplitSign::minus) continue;
            for (const auto& left : all_dlabels(k)) {
                if (left.is_split()) continue;
                for (const auto& right : all_dlabels(n - k)) {
                    if (right.is_split()) continue;
                    std::int64_t formula = 0;
                    try {
                        formula = parabolic_restriction_multiplicity(l, k, left, right);
                    } catch (const CharacterError& e) {
                        if (e.kind() == CharacterError::Kind::hypothesis_violated) continue;
                        throw;
                    }
                    // The brute force uses the unsplit type-B character for a
                    // split label, i.e. the sum of both halves.
                    const auto brute = parabolic_multiplicity_bruteforce(l, k, left, right);
                    const auto expected = l.is_split() ? 2 * formula : formula;
                    ++compared;
                    if (brute != expected) {
                        bad.push_back({{"label", l.to_string()},
                                       {"left", left.to_string()},
                                       {"right", right.to_string()},
                                       {"formula", formula},
                                       {"bruteforce", brute}});
                    }
                }
            }
        }
        r.add("n=4 k=3 parabolic restriction multiplicities", bad.empty() && compared > 0,
              {{"compared", compared}, {"mismatches", std::move(bad)}});
    }
    r.append(verify_multiplicity_free(n_max));
    return r;
}

Report verify_multiplicity_free(int n_max) {
    Report r("multiplicity-free");
    for (int n = 4; n <= n_max; ++n) {
        bool ok = true;
        nlohmann::json bad = nlohmann::json::array();
        for (int k = 3; k <= n; ++k) {
            const auto chi = chi_d_decomposition(n, k);
            const bool this_ok = chi.multiplicity_free() && verify_exterior_power_constituent(n, k) &&
                                 degree(chi) == betti(n, k, BettiMethod::closed);
            if (!this_ok) bad.push_back(k);
            ok = ok && this_ok;
        }
        r.add(nstr(n) + " multiplicity free with exterior-power constituent", ok, {{"failing_k", std::move(bad)}});
    }
    return r;
}

VerificationResult run_suite(const std::string& suite, int n_max, const VerifyOptions& options) {
    VerificationResult out;
    out.report = Report(suite);
    ComplexCache cache(options.cache_dir, options.budget.max_homology_n);
    const int threads = options.threads;

    auto complex_range = [&](const std::string& name) {
        if (n_max > options.budget.max_homology_n) {
            throw BudgetExceeded("suite " + name + " builds complexes and is limited to n <= " +
                                 std::to_string(options.budget.max_homology_n));
        }
    };
    auto timed = [&](const std::string& name, auto&& fn) {
        const auto start = std::chrono::steady_clock::now();
        Report rep = fn();
        out.seconds.emplace_back(name, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
        return rep;
    };
    auto one = [&](const std::string& name) -> Report {
        if (name == "faces") return timed(name, [&] { return verify_faces(n_max, options.budget); });
        complex_range(name);
        if (name == "chain") return timed(name, [&] { return verify_chain(cache, n_max, threads); });
        if (name == "homology") return timed(name, [&] { return verify_homology(cache, n_max); });
        return timed(name, [&] { return verify_equivariant_homology(cache, n_max, threads); });
    };
    auto combinatorial = [&](const std::string& name) -> Report {
        if (name == "branching") return timed(name, [&] { return verify_branching(n_max); });
        if (name == "restriction") return timed(name, [&] { return verify_restriction(n_max); });
        return timed(name, [&] { return verify_character_theory(n_max, options.budget.max_group_n); });
    };

    if (suite == "faces" || suite == "chain" || suite == "homology" || suite == "theorem44") {
        out.report.append(one(suite));
    } else if (suite == "branching" || suite == "restriction" || suite == "characters") {
        out.report.append(combinatorial(suite));
    } else if (suite == "all") {
        complex_range(suite);
        out.report.append(one("faces"));
        const Report chain = one("chain");
        out.report.append(chain);
        if (!chain.passed()) {
            for (const char* rest : {"homology", "theorem44", "branching", "restriction", "characters"}) {
                out.report.add(std::string(rest) + "/skipped", false, {{"reason", "chain gate failed"}});
            }
            return out;
        }
        out.report.append(one("homology"));
        out.report.append(one("theorem44"));
        for (const char* rest : {"branching", "restriction", "characters"}) out.report.append(combinatorial(rest));
    } else {
        throw std::invalid_argument("unknown suite '" + suite + "'");
    }
    return out;
}

}  // namespace halfcube
