#include "halfcube/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "halfcube/characters.hpp"
#include "halfcube/errors.hpp"
#include "halfcube/exact.hpp"
#include "halfcube/halfcube_complex.hpp"
#include "halfcube/homology.hpp"
#include "halfcube/homology_reps.hpp"
#include "halfcube/partition.hpp"
#include "halfcube/signed_permutation.hpp"
#include "halfcube/verification.hpp"

namespace halfcube::cli {

namespace {

constexpr int kFormatVersion = 1;

struct Globals {
    bool json = false;
    bool csv = false;
    bool timing = false;
    std::string out_file;
    std::string cache_dir;
    int threads = 0;
    int max_n = 0;
};

std::string env_or(const char* name, const std::string& fallback) {
    const char* v = std::getenv(name);
    return v && *v ? std::string(v) : fallback;
}

// Flags first, then HALFCUBE_* environment variables, then defaults.
void apply_environment(Globals& g) {
    if (g.threads <= 0) g.threads = std::max(1, std::atoi(env_or("HALFCUBE_THREADS", "1").c_str()));
    if (g.max_n <= 0) g.max_n = std::atoi(env_or("HALFCUBE_MAX_N", "0").c_str());
    if (g.cache_dir.empty()) g.cache_dir = env_or("HALFCUBE_CACHE_DIR", "");
}

Budget budget_for(const Globals& g) {
    Budget b;
    if (g.max_n > 0) b.max_enumeration_n = b.max_homology_n = b.max_group_n = g.max_n;
    return b;
}

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Output {
    std::string text;  // table or CSV rendering
    nlohmann::json parameters = nlohmann::json::object();
    nlohmann::json payload = nlohmann::json::object();
    bool passed = true;
};

std::string render_envelope(const std::string& command, const Output& o, const Globals& g, double seconds) {
    nlohmann::json env = {{"command", command},
                          {"format_version", kFormatVersion},
                          {"parameters", o.parameters},
                          {"payload", o.payload}};
    if (g.timing) env["timing"] = {{"seconds", seconds}};
    return env.dump(2) + "\n";
}

// ---------------------------------------------------------------------------

Output cmd_faces(int n, int dim, const Globals& g) {
    const Budget b = budget_for(g);
    if (n < 4) throw UsageError("faces: the half cube complex requires n >= 4");
    if (n > b.max_enumeration_n) {
        throw BudgetExceeded("faces: n = " + std::to_string(n) + " exceeds the enumeration budget n <= " +
                             std::to_string(b.max_enumeration_n) + " (raise with --max-n)");
    }
    if (dim > n) throw UsageError("faces: --dim must be at most n");
    Output o;
    o.parameters = {{"n", n}};
    if (dim >= 0) o.parameters["dim"] = dim;
    nlohmann::json rows = nlohmann::json::array();
    std::ostringstream text;
    if (g.csv) text << "dim,kind,measured,formula\n";
    int current = -1;
    for (const auto& c : face_census(n, b.max_enumeration_n)) {
        if (dim >= 0 && c.dim != dim) continue;
        o.passed = o.passed && c.measured == c.formula;
        rows.push_back({{"dim", c.dim}, {"kind", kind_name(c.kind)}, {"measured", c.measured}, {"formula", c.formula}});
        if (g.csv) {
            text << c.dim << ',' << kind_name(c.kind) << ',' << c.measured << ',' << c.formula << '\n';
            continue;
        }
        if (c.dim != current) {
            if (current >= 0) text << '\n';
            text << "dim " << c.dim << ":";
            current = c.dim;
        } else {
            text << ",";
        }
        text << " " << kind_name(c.kind) << " " << c.measured;
        if (c.measured != c.formula) text << " (formula " << c.formula << ")";
    }
    if (!g.csv && current >= 0) text << '\n';
    if (!g.csv && !o.passed) text << "MISMATCH against the closed-form counts\n";
    o.text = text.str();
    o.payload = {{"counts", std::move(rows)}, {"matches_formula", o.passed}};
    return o;
}

Output cmd_homology(int n, int k, const Globals& g) {
    const Budget b = budget_for(g);
    if (n < 4) throw UsageError("homology: requires n >= 4");
    if (k < 3 || k > n) throw UsageError("homology: requires 3 <= k <= n");
    if (n > b.max_homology_n) {
        throw BudgetExceeded("homology: n = " + std::to_string(n) + " exceeds the homology budget n <= " +
                             std::to_string(b.max_homology_n) + " (raise with --max-n)");
    }
    ComplexCache cache(g.cache_dir, b.max_homology_n);
    const auto rep = verify_concentration(cache.get(n).subcomplex(k), n, k);
    Output o;
    o.parameters = {{"n", n}, {"k", k}};
    o.payload = rep.to_json();
    o.passed = rep.passed;
    std::ostringstream text;
    if (g.csv) {
        text << "degree,rank,torsion\n";
        for (const auto& [deg, grp] : rep.groups) {
            std::string tors;
            for (const auto& t : grp.torsion) tors += (tors.empty() ? "" : ";") + t.str();
            text << deg << ',' << grp.rank << ',' << tors << '\n';
        }
    } else {
        text << "reduced homology of C_{" << n << "," << k << "}\n";
        for (const auto& [deg, grp] : rep.groups) text << "  H_" << deg << " = " << grp.to_string() << '\n';
        text << "expected: H_" << (k - 1) << " = Z^" << rep.expected_rank << ", zero elsewhere\n";
        text << "verdict: " << (rep.passed ? "pass" : "FAIL") << '\n';
        for (const auto& f : rep.failures) text << "  " << f << '\n';
    }
    o.text = text.str();
    return o;
}

Output cmd_betti(int n, int k, const std::string& method, const Globals& g) {
    if (n < 0) throw UsageError("betti: requires n >= 0");
    if (k > n) throw UsageError("betti: requires k <= n");
    std::vector<BettiMethod> methods;
    if (method == "all") {
        methods = {BettiMethod::recurrence, BettiMethod::closed, BettiMethod::alternating};
    } else {
        try {
            methods = {parse_betti_method(method)};
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    Output o;
    o.parameters = {{"n", n}, {"method", method}};
    if (k >= 0) o.parameters["k"] = k;
    nlohmann::json rows = nlohmann::json::array();
    std::ostringstream text;
    text << (g.csv ? "n,k" : "n  k");
    for (auto m : methods) text << (g.csv ? "," : "  ") << betti_method_name(m);
    text << '\n';
    for (int kk = (k >= 0 ? k : 0); kk <= (k >= 0 ? k : n); ++kk) {
        nlohmann::json row = {{"n", n}, {"k", kk}};
        text << n << (g.csv ? "," : "  ") << kk;
        std::vector<std::int64_t> values;
        for (auto m : methods) {
            if (m == BettiMethod::alternating && kk < 3) {
                row[betti_method_name(m)] = nullptr;
                text << (g.csv ? "," : "  -");
                continue;
            }
            const auto v = betti(n, kk, m);
            values.push_back(v);
            row[betti_method_name(m)] = v;
            text << (g.csv ? "," : "  ") << v;
        }
        const bool agree = std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) == values.end();
        row["agree"] = agree;
        o.passed = o.passed && agree;
        rows.push_back(std::move(row));
        text << '\n';
    }
    o.payload = {{"values", std::move(rows)}, {"agree", o.passed}};
    o.text = text.str();
    return o;
}

Output cmd_character(int n, int k, bool restrict_sn, bool values, bool branch, const Globals& g) {
    if (k < 3 || k > n) throw UsageError("character: requires 3 <= k <= n");
    if (branch && k == n) throw UsageError("character: --branch requires k < n");
    const Budget b = budget_for(g);
    Output o;
    o.parameters = {{"n", n}, {"k", k}, {"restrict_sn", restrict_sn}, {"values", values}, {"branch", branch}};
    const DnCharacter chi = chi_d_decomposition(n, k);
    nlohmann::json labels = nlohmann::json::array();
    std::ostringstream text;
    if (g.csv) text << "label,degree\n";
    else text << "chi_D(" << n << "," << k << "), dimension " << degree(chi) << '\n';
    for (const auto& [label, m] : chi.terms()) {
        labels.push_back({{"label", label.to_string()}, {"multiplicity", m}, {"degree", degree_d(label)}});
        if (g.csv) text << '"' << label.to_string() << "\"," << degree_d(label) << '\n';
        else text << "  " << label.to_string() << "  degree " << degree_d(label) << '\n';
    }
    o.payload["labels"] = std::move(labels);
    o.payload["degree"] = degree(chi);
    o.payload["multiplicity_free"] = chi.multiplicity_free();

    if (restrict_sn) {
        const auto s = restrict_chi_d_to_sn(n, k);
        o.payload["restrict_sn"] = s.to_json();
        o.passed = o.passed && s.total_dimension == s.closed_form;
        if (!g.csv) {
            text << "restriction to S_" << n << ": " << s.decomposition.to_string() << '\n';
            for (const auto& t : s.summands) {
                text << "  e=" << t.e << "  Ind(" << label_string(t.hook) << " x " << label_string(t.row)
                     << ")  dimension " << t.dimension << " = " << t.induced.to_string() << '\n';
            }
            text << "  total " << s.total_dimension << ", closed form " << s.closed_form << '\n';
        }
    }
    if (values) {
        if (n > b.max_group_n) {
            throw BudgetExceeded("character --values: n = " + std::to_string(n) + " exceeds the group budget n <= " +
                                 std::to_string(b.max_group_n) + " (raise with --max-n)");
        }
        const auto table = conjugacy_classes(n, GroupType::D, b.max_group_n);
        const auto hc = chi_d(n, k, table);
        nlohmann::json rows = nlohmann::json::array();
        if (g.csv) text << "representative,signed_cycle_type,class_size,value\n";
        else text << "class values\n";
        for (std::size_t i = 0; i < table.size(); ++i) {
            const auto& cls = table[i];
            const auto v = hc.values[i].second;
            rows.push_back({{"representative", cls.representative.to_string()},
                            {"type", cls.type.to_string()},
                            {"class_size", cls.size},
                            {"value", v}});
            if (g.csv) {
                text << '"' << cls.representative.to_string() << "\",\"" << cls.type.to_string() << "\"," << cls.size
                     << ',' << v << '\n';
            } else {
                text << "  " << std::left << std::setw(3 * n + 4) << cls.representative.to_string() << std::setw(24)
                     << cls.type.to_string() << " size " << std::setw(6) << cls.size << " value " << v << '\n';
            }
        }
        o.payload["values"] = std::move(rows);
    }
    if (branch) {
        const auto br = branch_chi_d(n, k);
        o.payload["branch"] = br.to_json();
        o.passed = o.passed && br.equal;
        if (!g.csv) {
            text << "branch to W(D_" << (n - 1) << "): " << br.left.to_string() << '\n';
            text << "2 chi_D(" << (n - 1) << "," << k << ") + chi_D(" << (n - 1) << "," << (k - 1)
                 << "): " << br.right.to_string() << '\n';
            text << "equal: " << (br.equal ? "true" : "false") << '\n';
        }
    }
    o.text = text.str();
    return o;
}

Output cmd_lr(const std::string& mu_text, const std::string& nu_text, const std::string& lambda_text,
              const Globals& g) {
    Partition mu, nu;
    try {
        mu = Partition::parse(mu_text);
        nu = Partition::parse(nu_text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("lr: ") + e.what());
    }
    Output o;
    o.parameters = {{"mu", mu.to_string()}, {"nu", nu.to_string()}};
    std::ostringstream text;
    if (!lambda_text.empty()) {
        Partition lambda;
        try {
            lambda = Partition::parse(lambda_text);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("lr: ") + e.what());
        }
        o.parameters["lambda"] = lambda.to_string();
        const auto c = lr_coefficient(mu, nu, lambda);
        o.payload = {{"coefficient", c}};
        if (g.csv) text << "lambda,coefficient\n\"" << lambda.to_string() << "\"," << c << '\n';
        else text << "c^{" << lambda.to_string() << "}_{" << mu.to_string() << ";" << nu.to_string() << "} = " << c << '\n';
    } else {
        SnCharacter product;
        for (const auto& lambda : partitions_of(mu.size() + nu.size())) {
            product.add(lambda, lr_coefficient(mu, nu, lambda));
        }
        o.payload = {{"product", product.to_json()}, {"degree", degree(product)}};
        if (g.csv) {
            text << "lambda,coefficient\n";
            for (const auto& [lambda, c] : product.terms()) text << '"' << lambda.to_string() << "\"," << c << '\n';
        } else {
            text << label_string(mu) << " x " << label_string(nu) << " = " << product.to_string() << '\n';
        }
    }
    o.text = text.str();
    return o;
}

Output cmd_verify(const std::string& suite, int n_max, const Globals& g, double& suite_seconds,
                  std::ostream& err) {
    if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
        throw UsageError("verify: unknown suite '" + suite + "'");
    }
    if (n_max < 4) throw UsageError("verify: --n-max must be at least 4");
    VerifyOptions opts;
    opts.threads = g.threads;
    opts.budget = budget_for(g);
    opts.cache_dir = g.cache_dir;
    const auto result = run_suite(suite, n_max, opts);
    Output o;
    o.parameters = {{"suite", suite}, {"n_max", n_max}};
    o.payload = result.report.to_json();
    o.passed = result.report.passed();
    suite_seconds = 0;
    for (const auto& [name, s] : result.seconds) {
        suite_seconds += s;
        if (g.timing) err << "timing " << name << " " << std::fixed << std::setprecision(3) << s << " s\n";
    }
    std::ostringstream text;
    if (g.csv) text << "check,passed\n";
    for (const auto& c : result.report.checks()) {
        if (g.csv) text << '"' << c.name << "\"," << (c.passed ? "true" : "false") << '\n';
        else text << (c.passed ? "PASS " : "FAIL ") << c.name << '\n';
    }
    if (!g.csv) {
        text << result.report.checks().size() << " checks, " << result.report.failures() << " failed\n";
    }
    o.text = text.str();
    return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Half cube CW complexes: cells, homology, and W(D_n) characters", "halfcube"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_flag("--json", g.json, "JSON envelope output");
    app.add_flag("--csv", g.csv, "CSV output");
    app.add_option("--out", g.out_file, "Write output to FILE");
    app.add_option("--threads", g.threads, "Worker threads (env HALFCUBE_THREADS)")->check(CLI::PositiveNumber);
    app.add_option("--cache", g.cache_dir, "Complex cache directory (env HALFCUBE_CACHE_DIR)");
    app.add_option("--max-n", g.max_n, "Override the size budget (env HALFCUBE_MAX_N)")->check(CLI::PositiveNumber);
    app.add_flag("--timing", g.timing, "Report wall time (stderr, and a timing key in JSON)");

    int n = -1, k = -1, dim = -1, n_max = 6;
    std::string method = "all", mu, nu, lambda, suite = "all";
    bool restrict_sn = false, values = false, branch = false;

    auto* faces = app.add_subcommand("faces", "Cell counts per dimension and kind");
    faces->add_option("--n", n, "Ambient dimension")->required();
    faces->add_option("--dim", dim, "Only this dimension");

    auto* hom = app.add_subcommand("homology", "Reduced homology of C_{n,k} and concentration verdict");
    hom->add_option("--n", n)->required();
    hom->add_option("--k", k)->required();

    auto* bet = app.add_subcommand("betti", "Betti numbers B(n,k)");
    bet->add_option("--n", n)->required();
    bet->add_option("--k", k);
    bet->add_option("--method", method, "recurrence|closed|alternating|all");

    auto* chr = app.add_subcommand("character", "Character of W(D_n) on H_{k-1}(C_{n,k})");
    chr->add_option("--n", n)->required();
    chr->add_option("--k", k)->required();
    chr->add_flag("--restrict-sn", restrict_sn, "Decompose the restriction to S_n");
    chr->add_flag("--values", values, "Class-function table");
    chr->add_flag("--branch", branch, "Compare the restriction to W(D_{n-1})");

    auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficients");
    lr->add_option("--mu", mu)->required();
    lr->add_option("--nu", nu)->required();
    lr->add_option("--lambda", lambda, "Single coefficient instead of the whole product");

    auto* ver = app.add_subcommand("verify", "Run verification suites");
    ver->add_option("--suite", suite, "faces|chain|homology|theorem44|branching|restriction|characters|all");
    ver->add_option("--n-max", n_max, "Largest n");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
    if (g.json && g.csv) {
        err << "error: --json and --csv are exclusive\n";
        return usage_error;
    }
    apply_environment(g);

    std::string command;
    Output o;
    const auto start = std::chrono::steady_clock::now();
    double verify_seconds = -1;
    try {
        if (faces->parsed()) {
            command = "faces";
            o = cmd_faces(n, dim, g);
        } else if (hom->parsed()) {
            command = "homology";
            o = cmd_homology(n, k, g);
        } else if (bet->parsed()) {
            command = "betti";
            o = cmd_betti(n, k, method, g);
        } else if (chr->parsed()) {
            command = "character";
            o = cmd_character(n, k, restrict_sn, values, branch, g);
        } else if (lr->parsed()) {
            command = "lr";
            o = cmd_lr(mu, nu, lambda, g);
        } else {
            command = "verify";
            o = cmd_verify(suite, n_max, g, verify_seconds, err);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return usage_error;
    } catch (const OverflowError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const CharacterError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (g.timing && verify_seconds < 0) err << "timing " << command << " " << seconds << " s\n";

    const std::string rendered = g.json ? render_envelope(command, o, g, seconds) : o.text;
    if (!g.out_file.empty()) {
        std::ofstream file(g.out_file);
        if (!file) {
            err << "error: cannot write " << g.out_file << '\n';
            return usage_error;
        }
        file << rendered;
    } else {
        out << rendered;
    }
    return o.passed ? ok : verification_failed;
}

}  // namespace halfcube::cli
