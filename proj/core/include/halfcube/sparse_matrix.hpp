#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace halfcube {

/// Exact integer matrix stored by columns; each column is a list of
/// (row, value) sorted by row with no zero values.
class SparseIntMatrix {
public:
    using Entry = std::pair<int, std::int64_t>;
    using Column = std::vector<Entry>;

    SparseIntMatrix() = default;
    SparseIntMatrix(int rows, int cols) : rows_(rows), columns_(cols) {}

    static SparseIntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return static_cast<int>(columns_.size()); }

    /// Adds value to entry (row, col).
    void add(int row, int col, std::int64_t value);
    std::int64_t at(int row, int col) const;

    const Column& column(int col) const { return columns_[col]; }
    std::size_t nonzeros() const;
    bool is_zero() const { return nonzeros() == 0; }

    SparseIntMatrix transpose() const;

    /// Keeps the listed rows and columns, in the given order.
    SparseIntMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;

    std::vector<std::vector<std::int64_t>> to_dense() const;
    static SparseIntMatrix from_dense(const std::vector<std::vector<std::int64_t>>& dense);

    /// Coordinate-list form: {"rows", "cols", "entries": [[r, c, v], ...]}.
    nlohmann::json to_json() const;
    static SparseIntMatrix from_json(const nlohmann::json& j);

    friend SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b);
    friend bool operator==(const SparseIntMatrix&, const SparseIntMatrix&) = default;

private:
    int rows_ = 0;
    std::vector<Column> columns_;
};

/// Integer chain complex C_bottom <- ... <- C_top. boundary(l) maps degree l
/// to degree l-1; the boundary out of the bottom degree is zero.
struct ChainComplexData {
    int bottom = -1;
    std::vector<int> ranks;                    // ranks[l - bottom]
    std::vector<SparseIntMatrix> boundaries;   // boundaries[l - bottom]
    std::vector<int> simplex_ranks;            // X part
    std::vector<int> demicube_ranks;           // Y part
    std::vector<std::vector<int>> basis;       // cell indices into the full complex

    int top() const { return bottom + static_cast<int>(ranks.size()) - 1; }
    int rank(int l) const {
        return (l < bottom || l > top()) ? 0 : ranks[l - bottom];
    }
    const SparseIntMatrix& boundary(int l) const { return boundaries.at(l - bottom); }

    /// True iff every composite boundary(l-1) * boundary(l) vanishes.
    bool squares_to_zero() const;
};

}  // namespace halfcube
