#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "halfcube/errors.hpp"
#include "halfcube/partition.hpp"

namespace halfcube {

/// Label (mu, nu) of an irreducible character of W(B_n).
struct Bipartition {
    Partition first;
    Partition second;

    int size() const { return first.size() + second.size(); }
    std::string to_string() const;

    friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
    friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

enum class SplitSign { none, plus, minus };

/// Label of an irreducible character of W(D_n): an unordered pair {mu, nu},
/// split into +/- when mu == nu. Stored with the lexicographically larger
/// component first, so {[2,1,1],[0]} prints as "{2,1,1|0}".
class DLabel {
public:
    DLabel() = default;
    DLabel(Partition a, Partition b, SplitSign split = SplitSign::none);

    /// Parses "{2,1,1|0}", "{2|2}+", "{1,1|1,1}-".
    static DLabel parse(std::string_view text);

    const Partition& first() const { return first_; }
    const Partition& second() const { return second_; }
    SplitSign split() const { return split_; }
    bool is_split() const { return split_ != SplitSign::none; }
    int size() const { return first_.size() + second_.size(); }
    Bipartition bipartition() const { return {first_, second_}; }

    std::string to_string() const;

    friend auto operator<=>(const DLabel&, const DLabel&) = default;
    friend bool operator==(const DLabel&, const DLabel&) = default;

private:
    Partition first_;
    Partition second_;
    SplitSign split_ = SplitSign::none;
};

/// Conjugacy-class data in the wreath product Z_2 wr S_n: lengths of
/// positive cycles and of negative cycles.
struct SignedCycleType {
    Partition positive;
    Partition negative;

    int size() const { return positive.size() + negative.size(); }
    bool in_d() const { return negative.length() % 2 == 0; }
    std::string to_string() const;

    friend auto operator<=>(const SignedCycleType&, const SignedCycleType&) = default;
    friend bool operator==(const SignedCycleType&, const SignedCycleType&) = default;
};

std::string label_string(const Partition& p);
std::string label_string(const Bipartition& b);
std::string label_string(const DLabel& d);

inline int label_size(const Partition& p) { return p.size(); }
inline int label_size(const Bipartition& b) { return b.size(); }
inline int label_size(const DLabel& d) { return d.size(); }

/// Integer combination of irreducible labels. Zero multiplicities are never
/// stored; equality is equality of the canonical multisets.
template <typename Label>
class VirtualCharacter {
public:
    using Terms = std::map<Label, std::int64_t>;

    VirtualCharacter() = default;

    void add(const Label& label, std::int64_t multiplicity = 1) {
        if (multiplicity == 0) return;
        const int n = label_size(label);
        if (n_ >= 0 && n != n_) {
            throw std::invalid_argument("virtual character mixes labels of different sizes");
        }
        n_ = n;
        auto& m = terms_[label];
        m += multiplicity;
        if (m == 0) terms_.erase(label);
    }

    std::int64_t multiplicity(const Label& label) const {
        auto it = terms_.find(label);
        return it == terms_.end() ? 0 : it->second;
    }

    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    int rank() const { return n_; }

    bool multiplicity_free() const {
        for (const auto& [label, m] : terms_) {
            if (m != 1) return false;
        }
        return true;
    }

    std::int64_t degree(const std::function<std::int64_t(const Label&)>& deg) const {
        std::int64_t total = 0;
        for (const auto& [label, m] : terms_) total += m * deg(label);
        return total;
    }

    VirtualCharacter& operator+=(const VirtualCharacter& other) {
        for (const auto& [label, m] : other.terms_) add(label, m);
        return *this;
    }
    friend VirtualCharacter operator+(VirtualCharacter a, const VirtualCharacter& b) { return a += b; }
    friend VirtualCharacter operator*(std::int64_t scale, const VirtualCharacter& a) {
        VirtualCharacter out;
        for (const auto& [label, m] : a.terms_) out.add(label, scale * m);
        return out;
    }

    friend bool operator==(const VirtualCharacter& a, const VirtualCharacter& b) {
        return a.terms_ == b.terms_;
    }

    /// JSON object label-string -> multiplicity; keys sort as strings.
    nlohmann::json to_json() const {
        nlohmann::json j = nlohmann::json::object();
        for (const auto& [label, m] : terms_) j[label_string(label)] = m;
        return j;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [label, m] : terms_) {
            if (!s.empty()) s += " + ";
            if (m != 1) s += std::to_string(m) + "*";
            s += label_string(label);
        }
        return s;
    }

private:
    Terms terms_;
    int n_ = -1;
};

using SnCharacter = VirtualCharacter<Partition>;
using BnCharacter = VirtualCharacter<Bipartition>;
using DnCharacter = VirtualCharacter<DLabel>;

std::vector<Bipartition> all_bipartitions(int n);
std::vector<DLabel> all_dlabels(int n);

std::int64_t degree_b(const Bipartition& b);
std::int64_t degree_d(const DLabel& l);
std::int64_t degree(const SnCharacter& c);
std::int64_t degree(const DnCharacter& c);

/// chi^(mu,nu) at the class with the given signed cycle type. Positive
/// cycles remove strips from either component with (-1)^height; negative
/// cycles carry an extra -1 when the strip comes from the second component.
std::int64_t mn_character_b(const Bipartition& b, const SignedCycleType& t);

/// Value of the unsplit W(D_n) character l on an element of type t.
std::int64_t value_d(const DLabel& l, const SignedCycleType& t);
std::int64_t value_d(const DnCharacter& c, const SignedCycleType& t);

/// Restriction of an unsplit label to S_n: sum of c^lambda_{mu,nu} chi^lambda.
SnCharacter restrict_d_to_sn(const DLabel& l);

/// Induction of the trivial character from S_n to W(D_n).
DnCharacter induce_trivial_sn_to_d(int n);

/// Restriction of an unsplit label to W(D_{n-1}) by removable boxes.
DnCharacter branch_d(const DLabel& l);
DnCharacter branch_d(const DnCharacter& c);

/// Closed-form multiplicity <l restricted to D_k x D_{n-k}, left x right>
/// in terms of Littlewood-Richardson coefficients, where left = {alpha, beta}
/// and right = {psi, theta}. Requires 3 <= k <= n-1. There is no formula when
/// (alpha, psi) == (beta, theta); that case throws hypothesis_violated.
std::int64_t parabolic_restriction_multiplicity(const DLabel& l, int k, const DLabel& left,
                                                const DLabel& right);

}  // namespace halfcube
