#include "halfcube/homology.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "halfcube/errors.hpp"
#include "halfcube/halfcube_complex.hpp"

namespace halfcube {

namespace {

/// Sparse matrix under unimodular row and column operations.
template <typename Int>
class Eliminator {
public:
    explicit Eliminator(const SparseIntMatrix& m) : rows_(m.rows()), col_rows_(m.cols()) {
        for (int j = 0; j < m.cols(); ++j) {
            for (auto [i, v] : m.column(j)) {
                rows_[i][j] = Int(v);
                col_rows_[j].insert(i);
            }
        }
    }

    /// Diagonalizes; returns the absolute values of the pivots.
    std::vector<Int> diagonalize() {
        std::vector<Int> diagonal;
        while (true) {
            auto pivot = choose_pivot();
            if (!pivot) break;
            auto [p, c] = *pivot;
            while (true) {
                const Int a = rows_[p].at(c);
                bool clean = true;
                // Row operations clear column c modulo a.
                std::vector<int> others(col_rows_[c].begin(), col_rows_[c].end());
                for (int r : others) {
                    if (r == p) continue;
                    const Int q = rows_[r].at(c) / a;
                    if (q != Int(0)) subtract_row(r, p, q);
                    if (rows_[r].count(c)) clean = false;
                }
                // Column operations clear row p modulo a; once column c holds
                // only the pivot they touch nothing but row p.
                if (clean) {
                    std::vector<int> cols;
                    for (const auto& [j, v] : rows_[p]) {
                        if (j != c) cols.push_back(j);
                    }
                    for (int j : cols) {
                        Int rem = rows_[p].at(j) % a;
                        set_entry(p, j, rem);
                        if (rem != Int(0)) clean = false;
                    }
                }
                if (clean) break;
                // Some remainder is smaller than |a|; move the pivot there.
                auto next = smallest_in_cross(p, c);
                p = next.first;
                c = next.second;
            }
            diagonal.push_back(abs(rows_[p].at(c)));
            set_entry(p, c, Int(0));
        }
        return diagonal;
    }

private:
    std::optional<std::pair<int, int>> choose_pivot() const {
        std::optional<std::pair<int, int>> best;
        Int best_abs = 0;
        std::size_t best_cost = 0;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            for (const auto& [j, v] : rows_[i]) {
                const Int av = abs(v);
                const std::size_t cost = (rows_[i].size() - 1) * (col_rows_[j].size() - 1);
                if (!best || av < best_abs || (av == best_abs && cost < best_cost)) {
                    best = {static_cast<int>(i), j};
                    best_abs = av;
                    best_cost = cost;
                    if (av == Int(1) && cost == 0) return best;
                }
            }
        }
        return best;
    }

    std::pair<int, int> smallest_in_cross(int p, int c) const {
        std::pair<int, int> best{p, c};
        Int best_abs = abs(rows_[p].at(c));
        for (int r : col_rows_[c]) {
            const Int av = abs(rows_[r].at(c));
            if (av < best_abs) {
                best = {r, c};
                best_abs = av;
            }
        }
        for (const auto& [j, v] : rows_[p]) {
            const Int av = abs(v);
            if (av < best_abs) {
                best = {p, j};
                best_abs = av;
            }
        }
        return best;
    }

    void set_entry(int r, int j, const Int& v) {
        if (v == Int(0)) {
            rows_[r].erase(j);
            col_rows_[j].erase(r);
        } else {
            rows_[r][j] = v;
            col_rows_[j].insert(r);
        }
    }

    /// row r -= q * row p
    void subtract_row(int r, int p, const Int& q) {
        for (const auto& [j, v] : rows_[p]) {
            auto it = rows_[r].find(j);
            const Int updated = (it == rows_[r].end() ? Int(0) : it->second) - q * v;
            set_entry(r, j, updated);
        }
    }

    std::vector<std::map<int, Int>> rows_;
    std::vector<std::set<int>> col_rows_;
};

std::vector<BigInt> normalize_diagonal(std::vector<BigInt> d) {
    // diag(a, b) is equivalent to diag(gcd, lcm); sweep until sorted chain.
    std::sort(d.begin(), d.end());
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            const BigInt g = boost::multiprecision::gcd(d[i], d[j]);
            if (g != d[i]) {
                const BigInt l = d[i] / g * d[j];
                d[i] = g;
                d[j] = l;
            }
        }
    }
    return d;
}

}  // namespace

SNFResult smith_normal_form(const SparseIntMatrix& m) {
    std::vector<BigInt> diag;
    try {
        Eliminator<Checked64> e(m);
        for (auto v : e.diagonalize()) diag.push_back(to_big(v));
    } catch (const OverflowError&) {
        diag.clear();
        Eliminator<BigInt> e(m);
        diag = e.diagonalize();
    }
    return {normalize_diagonal(std::move(diag))};
}

int rational_rank(const SparseIntMatrix& m) {
    auto dense = m.to_dense();
    std::vector<std::vector<BigInt>> a(dense.size());
    for (std::size_t i = 0; i < dense.size(); ++i) {
        for (auto v : dense[i]) a[i].push_back(BigInt(v));
    }
    const std::size_t rows = a.size();
    const std::size_t cols = m.cols();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (a[r][c] == 0) continue;
            const BigInt f = a[r][c];
            const BigInt g = a[rank][c];
            BigInt common = 0;
            for (std::size_t j = c; j < cols; ++j) {
                a[r][j] = a[r][j] * g - a[rank][j] * f;
                common = boost::multiprecision::gcd(common, a[r][j]);
            }
            if (common > 1) {
                for (std::size_t j = c; j < cols; ++j) a[r][j] /= common;
            }
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

std::string HomologyGroup::to_string() const {
    std::string s;
    if (rank > 0) s = rank == 1 ? "Z" : "Z^" + std::to_string(rank);
    for (const auto& t : torsion) {
        if (!s.empty()) s += " + ";
        s += "Z/" + t.str();
    }
    return s.empty() ? "0" : s;
}

namespace {

nlohmann::json big_to_json(const BigInt& v) {
    if (v <= INT64_MAX && v >= INT64_MIN) return static_cast<std::int64_t>(v);
    return v.str();
}

}  // namespace

nlohmann::json HomologyGroup::to_json() const {
    nlohmann::json t = nlohmann::json::array();
    for (const auto& v : torsion) t.push_back(big_to_json(v));
    return {{"rank", rank}, {"torsion", std::move(t)}};
}

nlohmann::json homology_to_json(const std::map<int, HomologyGroup>& h) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [deg, g] : h) j[std::to_string(deg)] = g.to_json();
    return j;
}

std::map<int, HomologyGroup> homology(const ChainComplexData& cc, bool reduced) {
    if (!cc.squares_to_zero()) throw NotAComplex("boundary matrices do not square to zero");
    std::map<int, SNFResult> snf;
    for (int l = cc.bottom + 1; l <= cc.top(); ++l) snf.emplace(l, smith_normal_form(cc.boundary(l)));
    auto rank_of = [&](int l) -> std::int64_t {
        auto it = snf.find(l);
        if (it == snf.end()) return 0;
        // Unreduced homology drops the bottom degree, and so the augmentation.
        if (!reduced && l == cc.bottom + 1) return 0;
        return it->second.rank();
    };
    std::map<int, HomologyGroup> out;
    const int first = reduced ? cc.bottom : cc.bottom + 1;
    for (int l = first; l <= cc.top(); ++l) {
        HomologyGroup g;
        g.rank = cc.rank(l) - rank_of(l) - rank_of(l + 1);
        if (auto it = snf.find(l + 1); it != snf.end() && !(!reduced && l + 1 == cc.bottom + 1)) {
            for (const auto& f : it->second.factors) {
                if (f > 1) g.torsion.push_back(f);
            }
        }
        out.emplace(l, std::move(g));
    }
    return out;
}

BettiMethod parse_betti_method(const std::string& name) {
    if (name == "recurrence") return BettiMethod::recurrence;
    if (name == "closed") return BettiMethod::closed;
    if (name == "alternating") return BettiMethod::alternating;
    throw std::invalid_argument("unknown Betti method: " + name);
}

std::string betti_method_name(BettiMethod method) {
    switch (method) {
        case BettiMethod::recurrence: return "recurrence";
        case BettiMethod::closed: return "closed";
        case BettiMethod::alternating: return "alternating";
    }
    return "unknown";
}

std::int64_t betti(int n, int k, BettiMethod method) {
    switch (method) {
        case BettiMethod::recurrence: {
            if (n < 0 || k < 0 || k > n) throw std::out_of_range("recurrence Betti requires 0 <= k <= n");
            // Row by row of the triangle.
            std::vector<Checked64> row{1};
            for (int m = 1; m <= n; ++m) {
                std::vector<Checked64> next(m + 1);
                next[0] = 1;
                next[m] = 1;
                for (int j = 1; j < m; ++j) next[j] = Checked64(2) * row[j] + row[j - 1];
                row = std::move(next);
            }
            return row[k].value();
        }
        case BettiMethod::closed: {
            if (n < 0 || k < 0 || k > n) throw std::out_of_range("closed-form Betti requires 0 <= k <= n");
            Checked64 total = 0;
            for (int i = k; i <= n; ++i) {
                const std::int64_t lower = (i == 0 && k == 0) ? 1 : checked_binomial(i - 1, k - 1);
                total += Checked64(checked_binomial(n, i)) * lower;
            }
            return total.value();
        }
        case BettiMethod::alternating: {
            if (k < 3 || k > n) throw std::out_of_range("alternating Betti sum requires 3 <= k <= n");
            Checked64 total = 0;
            for (int l = k; l <= n; ++l) {
                const Checked64 term = Checked64(checked_pow2(n - l)) * checked_binomial(n, l);
                total += (l - k) % 2 == 0 ? term : -term;
            }
            return total.value();
        }
    }
    return 0;
}

nlohmann::json ConcentrationReport::to_json() const {
    return {{"n", n},
            {"k", k},
            {"homology", homology_to_json(groups)},
            {"expected_rank", expected_rank},
            {"passed", passed},
            {"failures", failures}};
}

ConcentrationReport verify_concentration(const ChainComplexData& cc, int n, int k) {
    ConcentrationReport r;
    r.n = n;
    r.k = k;
    r.expected_rank = betti(n, k, BettiMethod::closed);
    r.groups = homology(cc);
    for (const auto& [deg, g] : r.groups) {
        if (!g.torsion_free()) r.failures.push_back("torsion in degree " + std::to_string(deg));
        if (deg != k - 1 && g.rank != 0) {
            r.failures.push_back("nonzero rank " + std::to_string(g.rank) + " in degree " + std::to_string(deg));
        }
    }
    const auto it = r.groups.find(k - 1);
    const std::int64_t got = it == r.groups.end() ? 0 : it->second.rank;
    if (got != r.expected_rank) {
        r.failures.push_back("rank " + std::to_string(got) + " in degree " + std::to_string(k - 1) +
                             ", expected " + std::to_string(r.expected_rank));
    }
    r.passed = r.failures.empty();
    return r;
}

ConcentrationReport verify_concentration(int n, int k, int max_n) {
    const HalfCubeComplex hc(n, max_n);
    return verify_concentration(hc.subcomplex(k), n, k);
}

}  // namespace halfcube
