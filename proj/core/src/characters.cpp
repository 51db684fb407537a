#include "halfcube/characters.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

#include "halfcube/exact.hpp"

namespace halfcube {

std::string Bipartition::to_string() const {
    return "(" + first.to_string() + "|" + second.to_string() + ")";
}

DLabel::DLabel(Partition a, Partition b, SplitSign split)
    : first_(std::move(a)), second_(std::move(b)), split_(split) {
    if (first_ < second_) std::swap(first_, second_);
    if (first_ == second_ && split_ == SplitSign::none) {
        throw std::invalid_argument("equal-pair W(D) label needs a split sign: " + to_string());
    }
    if (first_ != second_ && split_ != SplitSign::none) {
        throw std::invalid_argument("split sign on an unequal pair: " + to_string());
    }
}

DLabel DLabel::parse(std::string_view text) {
    SplitSign split = SplitSign::none;
    if (!text.empty() && (text.back() == '+' || text.back() == '-')) {
        split = text.back() == '+' ? SplitSign::plus : SplitSign::minus;
        text.remove_suffix(1);
    }
    if (text.size() < 3 || text.front() != '{' || text.back() != '}') {
        throw std::invalid_argument("malformed W(D) label: " + std::string(text));
    }
    text = text.substr(1, text.size() - 2);
    const auto bar = text.find('|');
    if (bar == std::string_view::npos) {
        throw std::invalid_argument("malformed W(D) label: " + std::string(text));
    }
    return DLabel(Partition::parse(text.substr(0, bar)), Partition::parse(text.substr(bar + 1)), split);
}

std::string DLabel::to_string() const {
    std::string s = "{" + first_.to_string() + "|" + second_.to_string() + "}";
    if (split_ == SplitSign::plus) s += "+";
    if (split_ == SplitSign::minus) s += "-";
    return s;
}

std::string SignedCycleType::to_string() const {
    return "(" + positive.to_string() + "|" + negative.to_string() + ")";
}

std::string label_string(const Partition& p) { return "[" + p.to_string() + "]"; }
std::string label_string(const Bipartition& b) { return b.to_string(); }
std::string label_string(const DLabel& d) { return d.to_string(); }

std::vector<Bipartition> all_bipartitions(int n) {
    std::vector<Bipartition> out;
    for (int a = 0; a <= n; ++a) {
        for (const auto& mu : partitions_of(a)) {
            for (const auto& nu : partitions_of(n - a)) out.push_back({mu, nu});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DLabel> all_dlabels(int n) {
    std::vector<DLabel> out;
    for (const auto& b : all_bipartitions(n)) {
        if (b.first > b.second) {
            out.emplace_back(b.first, b.second);
        } else if (b.first == b.second) {
            out.emplace_back(b.first, b.second, SplitSign::plus);
            out.emplace_back(b.first, b.second, SplitSign::minus);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t degree_b(const Bipartition& b) {
    return checked_binomial(b.size(), b.first.size()) * dim_sn(b.first) * dim_sn(b.second);
}

std::int64_t degree_d(const DLabel& l) {
    const std::int64_t full = degree_b(l.bipartition());
    return l.is_split() ? full / 2 : full;
}

std::int64_t degree(const SnCharacter& c) {
    return c.degree([](const Partition& p) { return dim_sn(p); });
}

std::int64_t degree(const DnCharacter& c) {
    return c.degree([](const DLabel& l) { return degree_d(l); });
}

std::int64_t mn_character_b(const Bipartition& b, const SignedCycleType& t) {
    if (b.size() != t.size()) {
        throw CharacterError(CharacterError::Kind::size_mismatch,
                             "mn_character_b: label " + b.to_string() + " vs class " + t.to_string());
    }
    struct Cycle {
        int length;
        bool negative;
    };
    std::vector<Cycle> cycles;
    for (int p : t.positive.parts()) cycles.push_back({p, false});
    for (int p : t.negative.parts()) cycles.push_back({p, true});
    std::stable_sort(cycles.begin(), cycles.end(),
                     [](const Cycle& x, const Cycle& y) { return x.length > y.length; });

    std::function<std::int64_t(const Partition&, const Partition&, std::size_t)> rec =
        [&](const Partition& mu, const Partition& nu, std::size_t idx) -> std::int64_t {
        if (idx == cycles.size()) return (mu.empty() && nu.empty()) ? 1 : 0;
        const Cycle c = cycles[idx];
        std::int64_t sum = 0;
        for (const auto& strip : border_strips(mu, c.length)) {
            const std::int64_t v = rec(strip.remainder, nu, idx + 1);
            sum += strip.height % 2 == 0 ? v : -v;
        }
        for (const auto& strip : border_strips(nu, c.length)) {
            std::int64_t v = rec(mu, strip.remainder, idx + 1);
            if (strip.height % 2 != 0) v = -v;
            sum += c.negative ? -v : v;
        }
        return sum;
    };
    return rec(b.first, b.second, 0);
}

std::int64_t value_d(const DLabel& l, const SignedCycleType& t) {
    if (l.is_split()) {
        throw CharacterError(CharacterError::Kind::split_label_unsupported,
                             "values of split characters are not implemented: " + l.to_string());
    }
    if (!t.in_d()) {
        throw CharacterError(CharacterError::Kind::not_in_d,
                             "class " + t.to_string() + " has an odd number of negative cycles");
    }
    return mn_character_b(l.bipartition(), t);
}

std::int64_t value_d(const DnCharacter& c, const SignedCycleType& t) {
    std::int64_t total = 0;
    for (const auto& [label, m] : c.terms()) total += m * value_d(label, t);
    return total;
}

SnCharacter restrict_d_to_sn(const DLabel& l) {
    if (l.is_split()) {
        throw CharacterError(CharacterError::Kind::split_label_unsupported,
                             "restriction of split label " + l.to_string());
    }
    SnCharacter out;
    for (const auto& lambda : partitions_of(l.size())) {
        out.add(lambda, lr_coefficient(l.first(), l.second(), lambda));
    }
    return out;
}

DnCharacter induce_trivial_sn_to_d(int n) {
    if (n < 2) throw std::out_of_range("induce_trivial_sn_to_d requires n >= 2");
    DnCharacter out;
    const int m = n / 2;
    if (n % 2 == 1) {
        for (int l = 0; l <= m; ++l) out.add(DLabel(Partition::row(l), Partition::row(n - l)));
    } else {
        out.add(DLabel(Partition::row(m), Partition::row(m), SplitSign::plus));
        for (int l = 0; l < m; ++l) out.add(DLabel(Partition::row(l), Partition::row(n - l)));
    }
    return out;
}

DnCharacter branch_d(const DLabel& l) {
    if (l.is_split()) {
        throw CharacterError(CharacterError::Kind::split_label_unsupported,
                             "branching of split label " + l.to_string());
    }
    DnCharacter out;
    auto push = [&](const Partition& a, const Partition& b) {
        if (a == b) {
            throw CharacterError(CharacterError::Kind::split_label_would_arise,
                                 "branching " + l.to_string() + " produces the equal pair {" +
                                     a.to_string() + "|" + b.to_string() + "}");
        }
        out.add(DLabel(a, b));
    };
    for (const Box& d : removable_boxes(l.first())) push(remove_box(l.first(), d), l.second());
    for (const Box& d : removable_boxes(l.second())) push(l.first(), remove_box(l.second(), d));
    return out;
}

DnCharacter branch_d(const DnCharacter& c) {
    DnCharacter out;
    for (const auto& [label, m] : c.terms()) out += m * branch_d(label);
    return out;
}

std::int64_t parabolic_restriction_multiplicity(const DLabel& l, int k, const DLabel& left,
                                                const DLabel& right) {
    const int n = l.size();
    if (k < 3 || k > n - 1) {
        throw std::out_of_range("parabolic_restriction_multiplicity requires 3 <= k <= n-1");
    }
    const Partition& alpha = left.first();
    const Partition& beta = left.second();
    const Partition& psi = right.first();
    const Partition& theta = right.second();
    if (alpha == beta && psi == theta) {
        throw CharacterError(CharacterError::Kind::hypothesis_violated,
                             "no closed form when (alpha, psi) == (beta, theta)");
    }
    const Partition& mu = l.first();
    const Partition& nu = l.second();
    auto c = [](const Partition& lam, const Partition& a, const Partition& b) {
        return lr_coefficient(a, b, lam);
    };
    if (l.is_split()) {
        return c(mu, alpha, psi) * c(mu, beta, theta) + c(mu, alpha, theta) * c(mu, beta, psi);
    }
    return c(mu, alpha, psi) * c(nu, beta, theta) + c(mu, alpha, theta) * c(nu, beta, psi) +
           c(mu, beta, psi) * c(nu, alpha, theta) + c(mu, beta, theta) * c(nu, alpha, psi);
}

}  // namespace halfcube
