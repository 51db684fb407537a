#include "halfcube/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "halfcube/exact.hpp"

namespace halfcube {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    if (text.empty() || text == "0") return Partition();
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view token = text.substr(pos, comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
            throw std::invalid_argument("malformed partition: " + std::string(text));
        }
        parts.push_back(value);
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

Partition Partition::row(int n) { return n == 0 ? Partition() : Partition({n}); }

Partition Partition::column(int n) { return Partition(std::vector<int>(n, 1)); }

bool Partition::contains(const Partition& other) const {
    if (other.length() > length()) return false;
    for (int i = 0; i < other.length(); ++i) {
        if (other.parts_[i] > parts_[i]) return false;
    }
    return true;
}

Partition Partition::conjugate() const {
    std::vector<int> out(parts_.empty() ? 0 : parts_.front(), 0);
    for (int p : parts_) {
        for (int j = 0; j < p; ++j) ++out[j];
    }
    return Partition(std::move(out));
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    rec(n, n);
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t dim_sn(const Partition& lambda) {
    const Partition conj = lambda.conjugate();
    BigInt hooks = 1;
    for (int i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < lambda.part(i); ++j) {
            hooks *= (lambda.part(i) - j - 1) + (conj.part(j) - i - 1) + 1;
        }
    }
    BigInt fact = 1;
    for (int i = 2; i <= lambda.size(); ++i) fact *= i;
    BigInt result = fact / hooks;
    if (result > INT64_MAX) throw OverflowError();
    return static_cast<std::int64_t>(result);
}

std::vector<Box> removable_boxes(const Partition& lambda) {
    std::vector<Box> out;
    for (int i = 0; i < lambda.length(); ++i) {
        if (lambda.part(i) > lambda.part(i + 1)) out.push_back({i + 1, lambda.part(i)});
    }
    return out;
}

Partition remove_box(const Partition& lambda, Box box) {
    const int r = box.row - 1;
    if (r < 0 || r >= lambda.length() || lambda.part(r) != box.col ||
        lambda.part(r + 1) >= box.col) {
        throw std::invalid_argument("box is not removable from " + lambda.to_string());
    }
    std::vector<int> parts = lambda.parts();
    --parts[r];
    return Partition::from_unsorted(std::move(parts));
}

std::vector<BorderStrip> border_strips(const Partition& lambda, int length) {
    std::vector<BorderStrip> out;
    if (length <= 0) return out;
    // Beta-set (abacus) form: a length-l strip moves one bead down by l
    // into an empty position; the height counts the beads jumped over.
    const int r = lambda.length();
    std::vector<int> beads(r);
    for (int i = 0; i < r; ++i) beads[i] = lambda.part(i) + (r - 1 - i);
    for (int i = 0; i < r; ++i) {
        const int target = beads[i] - length;
        if (target < 0) continue;
        if (std::find(beads.begin(), beads.end(), target) != beads.end()) continue;
        int height = 0;
        for (int b : beads) {
            if (b > target && b < beads[i]) ++height;
        }
        std::vector<int> moved = beads;
        moved[i] = target;
        std::sort(moved.begin(), moved.end(), std::greater<>());
        std::vector<int> parts(r);
        for (int j = 0; j < r; ++j) parts[j] = moved[j] - (r - 1 - j);
        BorderStrip strip;
        strip.remainder = Partition::from_unsorted(parts);
        strip.height = height;
        for (int row = 0; row < r; ++row) {
            for (int col = strip.remainder.part(row); col < lambda.part(row); ++col) {
                strip.cells.push_back({row + 1, col + 1});
            }
        }
        out.push_back(std::move(strip));
    }
    return out;
}

std::int64_t lr_coefficient(const Partition& mu, const Partition& nu, const Partition& lambda) {
    if (mu.size() + nu.size() != lambda.size()) return 0;
    if (!lambda.contains(mu) || !lambda.contains(nu)) return 0;

    // Skew cells of lambda/mu in reverse reading order: rows top to bottom,
    // each row right to left.
    std::vector<Box> cells;
    for (int i = 0; i < lambda.length(); ++i) {
        for (int j = lambda.part(i); j > mu.part(i); --j) cells.push_back({i + 1, j});
    }
    const int rows = lambda.length();
    const int cols = lambda.part(0);
    std::vector<std::vector<int>> filling(rows + 2, std::vector<int>(cols + 2, 0));
    const int letters = nu.length();
    std::vector<int> content(letters + 1, 0);
    std::int64_t count = 0;

    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells.size()) {
            ++count;
            return;
        }
        const Box c = cells[idx];
        const int right = (c.col + 1 <= lambda.part(c.row - 1)) ? filling[c.row][c.col + 1] : 0;
        const bool above_in_skew = c.row > 1 && c.col > mu.part(c.row - 2);
        const int above = above_in_skew ? filling[c.row - 1][c.col] : 0;
        const int hi = right > 0 ? right : letters;
        for (int v = above + 1; v <= hi; ++v) {
            if (content[v] + 1 > nu.part(v - 1)) continue;
            if (v > 1 && content[v] + 1 > content[v - 1]) continue;
            filling[c.row][c.col] = v;
            ++content[v];
            rec(idx + 1);
            --content[v];
            filling[c.row][c.col] = 0;
        }
    };
    rec(0);
    return count;
}

std::vector<Partition> pieri_expand(const Partition& mu, int m) {
    if (m < 0) throw std::invalid_argument("pieri_expand: negative strip size");
    std::vector<Partition> out;
    const int rows = mu.length() + 1;
    std::vector<int> parts(rows, 0);
    std::function<void(int, int)> rec = [&](int i, int remaining) {
        if (i == rows) {
            if (remaining == 0) out.push_back(Partition::from_unsorted(parts));
            return;
        }
        const int lo = mu.part(i);
        const int hi = i == 0 ? lo + remaining : std::min(mu.part(i - 1), lo + remaining);
        for (int p = lo; p <= hi; ++p) {
            parts[i] = p;
            rec(i + 1, remaining - (p - lo));
        }
    };
    rec(0, m);
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t mn_character_sn_ordered(const Partition& lambda, const std::vector<int>& lengths) {
    int total = 0;
    for (int l : lengths) total += l;
    if (total != lambda.size()) {
        throw std::invalid_argument("mn_character_sn: cycle type size differs from partition size");
    }
    std::function<std::int64_t(const Partition&, std::size_t)> rec =
        [&](const Partition& shape, std::size_t idx) -> std::int64_t {
        if (idx == lengths.size()) return shape.empty() ? 1 : 0;
        std::int64_t sum = 0;
        for (const auto& strip : border_strips(shape, lengths[idx])) {
            const std::int64_t sub = rec(strip.remainder, idx + 1);
            sum += (strip.height % 2 == 0) ? sub : -sub;
        }
        return sum;
    };
    return rec(lambda, 0);
}

std::int64_t mn_character_sn(const Partition& lambda, const CycleType& alpha) {
    if (lambda.size() != alpha.size()) {
        throw std::invalid_argument("mn_character_sn: cycle type size differs from partition size");
    }
    return mn_character_sn_ordered(lambda, alpha.parts());
}

Partition hook_partition(int k, int e) {
    if (k < 2 || e < 0) throw std::out_of_range("hook_partition requires k >= 2 and e >= 0");
    std::vector<int> parts(k, 1);
    parts[0] = e + 1;
    return Partition(std::move(parts));
}

std::int64_t class_size_sn(const CycleType& alpha) {
    std::map<int, int> multiplicity;
    for (int p : alpha.parts()) ++multiplicity[p];
    BigInt centralizer = 1;
    for (auto [len, mult] : multiplicity) {
        for (int i = 0; i < mult; ++i) centralizer *= len;
        for (int i = 2; i <= mult; ++i) centralizer *= i;
    }
    BigInt fact = 1;
    for (int i = 2; i <= alpha.size(); ++i) fact *= i;
    return static_cast<std::int64_t>(fact / centralizer);
}

int permutation_sign(const CycleType& alpha) {
    int even_cycles = 0;
    for (int p : alpha.parts()) {
        if (p % 2 == 0) ++even_cycles;
    }
    return even_cycles % 2 == 0 ? 1 : -1;
}

}  // namespace halfcube
