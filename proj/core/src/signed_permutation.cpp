#include "halfcube/signed_permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "halfcube/exact.hpp"

namespace halfcube {

SignedPermutation::SignedPermutation(std::vector<int> perm, std::vector<int> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {
    const std::size_t n = perm_.size();
    if (signs_.size() != n) throw std::invalid_argument("perm and signs differ in length");
    std::vector<bool> seen(n, false);
    for (int p : perm_) {
        if (p < 0 || static_cast<std::size_t>(p) >= n || seen[p]) {
            throw std::invalid_argument("perm is not a bijection");
        }
        seen[p] = true;
    }
    for (int s : signs_) {
        if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
    }
}

SignedPermutation SignedPermutation::identity(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    return SignedPermutation(std::move(perm), std::vector<int>(n, 1));
}

SignedPermutation SignedPermutation::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        throw std::invalid_argument("signed permutation needs 'perm / signs'");
    }
    std::istringstream perm_in{std::string(text.substr(0, slash))};
    std::vector<int> perm;
    int v;
    while (perm_in >> v) perm.push_back(v - 1);
    std::vector<int> signs;
    for (char c : text.substr(slash + 1)) {
        if (c == '+') signs.push_back(1);
        else if (c == '-') signs.push_back(-1);
        else if (c != ' ') throw std::invalid_argument("bad sign character");
    }
    return SignedPermutation(std::move(perm), std::move(signs));
}

int SignedPermutation::negative_count() const {
    return static_cast<int>(std::count(signs_.begin(), signs_.end(), -1));
}

bool SignedPermutation::is_identity() const { return *this == identity(degree()); }

SignedPermutation operator*(const SignedPermutation& u, const SignedPermutation& v) {
    const int n = u.degree();
    if (v.degree() != n) throw std::invalid_argument("composing signed permutations of different degree");
    std::vector<int> perm(n);
    std::vector<int> signs(n);
    for (int i = 0; i < n; ++i) {
        const int mid = v.perm_[i];
        const int dest = u.perm_[mid];
        perm[i] = dest;
        signs[dest] = u.signs_[dest] * v.signs_[mid];
    }
    return SignedPermutation(std::move(perm), std::move(signs));
}

SignedPermutation SignedPermutation::inverse() const {
    const int n = degree();
    std::vector<int> perm(n);
    std::vector<int> signs(n);
    for (int i = 0; i < n; ++i) {
        perm[perm_[i]] = i;
        signs[i] = signs_[perm_[i]];
    }
    return SignedPermutation(std::move(perm), std::move(signs));
}

std::uint64_t SignedPermutation::index() const {
    const int n = degree();
    // Lehmer code rank of perm, then sign bits.
    std::uint64_t rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j) {
            if (perm_[j] < perm_[i]) ++smaller;
        }
        rank = rank * (n - i) + smaller;
    }
    std::uint64_t mask = 0;
    for (int i = 0; i < n; ++i) {
        if (signs_[i] < 0) mask |= std::uint64_t{1} << (n - 1 - i);
    }
    return (rank << n) | mask;
}

std::string SignedPermutation::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < perm_.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(perm_[i] + 1);
    }
    s += " / ";
    for (int sg : signs_) s += sg > 0 ? '+' : '-';
    return s;
}

std::strong_ordering operator<=>(const SignedPermutation& a, const SignedPermutation& b) {
    if (auto c = a.perm_ <=> b.perm_; c != 0) return c;
    // + sorts before -.
    for (std::size_t i = 0; i < a.signs_.size() && i < b.signs_.size(); ++i) {
        if (a.signs_[i] != b.signs_[i]) {
            return a.signs_[i] > b.signs_[i] ? std::strong_ordering::less : std::strong_ordering::greater;
        }
    }
    return a.signs_.size() <=> b.signs_.size();
}

namespace {

SignedPermutation transposition(int n, int i) {
    auto w = SignedPermutation::identity(n);
    std::vector<int> perm = w.perm();
    std::swap(perm[i], perm[i + 1]);
    return SignedPermutation(std::move(perm), std::vector<int>(n, 1));
}

int order_of(const SignedPermutation& w) {
    auto x = w;
    int k = 1;
    while (!x.is_identity()) {
        x = x * w;
        ++k;
    }
    return k;
}

}  // namespace

std::vector<SignedPermutation> generators_d(int n) {
    if (n < 2) throw std::out_of_range("generators_d requires n >= 2");
    std::vector<SignedPermutation> gens;
    std::vector<int> signs(n, 1);
    signs[0] = signs[1] = -1;
    gens.emplace_back(transposition(n, 0).perm(), signs);
    for (int i = 0; i + 1 < n; ++i) gens.push_back(transposition(n, i));
    return gens;
}

SignedPermutation generator_b0(int n) {
    auto id = SignedPermutation::identity(n);
    std::vector<int> signs(n, 1);
    signs[0] = -1;
    return SignedPermutation(id.perm(), std::move(signs));
}

bool coxeter_relation_check(int n) {
    const auto gens = generators_d(n);
    // Graph of D_n: s_1' (index 0) joins s_2; s_i joins s_{i+1}.
    auto coxeter_m = [&](std::size_t a, std::size_t b) -> int {
        if (a == b) return 1;
        if (a > b) std::swap(a, b);
        if (a == 0) return b == 2 ? 3 : 2;
        return b == a + 1 ? 3 : 2;
    };
    for (std::size_t a = 0; a < gens.size(); ++a) {
        for (std::size_t b = 0; b < gens.size(); ++b) {
            if (order_of(gens[a] * gens[b]) != coxeter_m(a, b)) return false;
        }
    }
    return true;
}

SignedCycleType cycle_type_b(const SignedPermutation& w) {
    const int n = w.degree();
    std::vector<bool> seen(n, false);
    std::vector<int> positive;
    std::vector<int> negative;
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        int len = 0;
        int sign = 1;
        for (int i = start; !seen[i]; i = w.perm()[i]) {
            seen[i] = true;
            sign *= w.signs()[i];
            ++len;
        }
        (sign > 0 ? positive : negative).push_back(len);
    }
    return {Partition::from_unsorted(positive), Partition::from_unsorted(negative)};
}

int sign_rep(const SignedPermutation& w) {
    const auto t = cycle_type_b(w);
    int parity = w.negative_count();
    for (int len : t.positive.parts()) parity += len - 1;
    for (int len : t.negative.parts()) parity += len - 1;
    return parity % 2 == 0 ? 1 : -1;
}

std::uint64_t group_order(int n, GroupType type) {
    const auto full = static_cast<std::uint64_t>(checked_factorial(n)) << n;
    return type == GroupType::B ? full : full / 2;
}

void for_each_element(int n, GroupType type, const std::function<void(const SignedPermutation&)>& fn,
                      int max_n) {
    if (n > max_n) {
        throw BudgetExceeded("group enumeration for n = " + std::to_string(n) +
                             " exceeds the budget n <= " + std::to_string(max_n));
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        // Mask bit (n-1-i) set means coordinate i is negative, so counting up
        // visits signs in the + before - order.
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (type == GroupType::D && __builtin_popcount(mask) % 2 != 0) continue;
            std::vector<int> signs(n);
            for (int i = 0; i < n; ++i) signs[i] = (mask >> (n - 1 - i)) & 1u ? -1 : 1;
            fn(SignedPermutation(perm, std::move(signs)));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<SignedPermutation> enumerate_group(int n, GroupType type, int max_n) {
    std::vector<SignedPermutation> out;
    out.reserve(group_order(std::min(n, max_n), type));
    for_each_element(n, type, [&](const SignedPermutation& w) { out.push_back(w); }, max_n);
    return out;
}

SignedPermutation random_element(int n, GroupType type, std::mt19937_64& rng) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> signs(n);
    std::uniform_int_distribution<int> coin(0, 1);
    for (auto& s : signs) s = coin(rng) ? -1 : 1;
    if (type == GroupType::D && std::count(signs.begin(), signs.end(), -1) % 2 != 0) signs[0] = -signs[0];
    return SignedPermutation(std::move(perm), std::move(signs));
}

ConjugacyTable conjugacy_classes(int n, GroupType type, int max_n) {
    const auto elements = enumerate_group(n, type, max_n);
    std::vector<SignedPermutation> gens;
    if (n >= 2) gens = generators_d(n);
    if (type == GroupType::B && n >= 1) gens.push_back(generator_b0(n));

    const std::uint64_t span = static_cast<std::uint64_t>(checked_factorial(n)) << n;
    std::vector<bool> assigned(span, false);
    ConjugacyTable table;
    // Elements arrive in increasing order, so the first unassigned element
    // is the least member of its class.
    for (const auto& w : elements) {
        if (assigned[w.index()]) continue;
        std::vector<SignedPermutation> frontier{w};
        assigned[w.index()] = true;
        std::uint64_t size = 1;
        while (!frontier.empty()) {
            auto x = frontier.back();
            frontier.pop_back();
            for (const auto& g : gens) {
                auto y = g * x * g;  // generators are involutions
                if (!assigned[y.index()]) {
                    assigned[y.index()] = true;
                    ++size;
                    frontier.push_back(std::move(y));
                }
            }
        }
        table.push_back({w, size, cycle_type_b(w)});
    }
    return table;
}

SignedPermutation embed(const SignedPermutation& w, int target_n, int offset) {
    const int m = w.degree();
    if (offset < 0 || offset + m > target_n) {
        throw std::out_of_range("embedding placement out of range");
    }
    auto out = SignedPermutation::identity(target_n);
    std::vector<int> perm = out.perm();
    std::vector<int> signs = out.signs();
    for (int i = 0; i < m; ++i) {
        perm[offset + i] = offset + w.perm()[i];
        signs[offset + i] = w.signs()[i];
    }
    return SignedPermutation(std::move(perm), std::move(signs));
}

}  // namespace halfcube
