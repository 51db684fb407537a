#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace halfcube {

/// An integer partition in canonical weakly decreasing form. The empty
/// partition [0] has no parts.
class Partition {
public:
    Partition() = default;

    /// Throws std::invalid_argument unless parts are positive and weakly
    /// decreasing.
    explicit Partition(std::vector<int> parts);

    /// Sorts and drops zero entries before validating.
    static Partition from_unsorted(std::vector<int> parts);

    /// Parses "2,1,1"; "0" or "" is the empty partition.
    static Partition parse(std::string_view text);

    static Partition row(int n);
    static Partition column(int n);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// Part i (0-based), or 0 past the last part.
    int part(int i) const { return i < length() ? parts_[i] : 0; }

    bool contains(const Partition& other) const;
    Partition conjugate() const;

    std::string to_string() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Cycle lengths of a permutation.
using CycleType = Partition;

/// A Young-diagram box, 1-based (row, column).
struct Box {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const Box&, const Box&) = default;
};

struct BorderStrip {
    std::vector<Box> cells;
    int height = 0;         // rows spanned minus one
    Partition remainder;    // the partition left after removing the strip
};

std::vector<Partition> partitions_of(int n);

/// Number of standard Young tableaux of shape lambda (hook-length formula).
std::int64_t dim_sn(const Partition& lambda);

/// Corners of the diagram in top-to-bottom order.
std::vector<Box> removable_boxes(const Partition& lambda);
Partition remove_box(const Partition& lambda, Box box);

/// All border strips (rim hooks) of the given length.
std::vector<BorderStrip> border_strips(const Partition& lambda, int length);

/// c^lambda_{mu,nu} by enumeration of Littlewood-Richardson tableaux.
std::int64_t lr_coefficient(const Partition& mu, const Partition& nu, const Partition& lambda);

/// Partitions lambda with lambda / mu a horizontal strip of m boxes, sorted.
std::vector<Partition> pieri_expand(const Partition& mu, int m);

/// chi^lambda at cycle type alpha, via the Murnaghan-Nakayama rule.
std::int64_t mn_character_sn(const Partition& lambda, const CycleType& alpha);

/// Same rule with strips removed in the given order of cycle lengths.
std::int64_t mn_character_sn_ordered(const Partition& lambda, const std::vector<int>& lengths);

/// [e+1, 1^(k-1)], a partition of k+e. Requires k >= 2 and e >= 0.
Partition hook_partition(int k, int e);

/// Number of permutations of cycle type alpha.
std::int64_t class_size_sn(const CycleType& alpha);

/// Sign of any permutation with cycle type alpha.
int permutation_sign(const CycleType& alpha);

}  // namespace halfcube
