#include "halfcube/sparse_matrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace halfcube {

SparseIntMatrix SparseIntMatrix::identity(int n) {
    SparseIntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.columns_[i].push_back({i, 1});
    return m;
}

void SparseIntMatrix::add(int row, int col, std::int64_t value) {
    if (row < 0 || row >= rows_ || col < 0 || col >= cols()) {
        throw std::out_of_range("sparse matrix index out of range");
    }
    if (value == 0) return;
    auto& c = columns_[col];
    auto it = std::lower_bound(c.begin(), c.end(), row,
                               [](const Entry& e, int r) { return e.first < r; });
    if (it != c.end() && it->first == row) {
        it->second += value;
        if (it->second == 0) c.erase(it);
    } else {
        c.insert(it, {row, value});
    }
}

std::int64_t SparseIntMatrix::at(int row, int col) const {
    const auto& c = columns_.at(col);
    auto it = std::lower_bound(c.begin(), c.end(), row,
                               [](const Entry& e, int r) { return e.first < r; });
    return (it != c.end() && it->first == row) ? it->second : 0;
}

std::size_t SparseIntMatrix::nonzeros() const {
    std::size_t total = 0;
    for (const auto& c : columns_) total += c.size();
    return total;
}

SparseIntMatrix SparseIntMatrix::transpose() const {
    SparseIntMatrix t(cols(), rows_);
    for (int j = 0; j < cols(); ++j) {
        for (auto [i, v] : columns_[j]) t.columns_[i].push_back({j, v});
    }
    return t;
}

SparseIntMatrix SparseIntMatrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    std::vector<int> row_map(rows_, -1);
    for (std::size_t i = 0; i < rows.size(); ++i) row_map.at(rows[i]) = static_cast<int>(i);
    SparseIntMatrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        for (auto [i, v] : columns_.at(cols[j])) {
            if (row_map[i] >= 0) out.columns_[j].push_back({row_map[i], v});
        }
        std::sort(out.columns_[j].begin(), out.columns_[j].end());
    }
    return out;
}

std::vector<std::vector<std::int64_t>> SparseIntMatrix::to_dense() const {
    std::vector<std::vector<std::int64_t>> d(rows_, std::vector<std::int64_t>(cols(), 0));
    for (int j = 0; j < cols(); ++j) {
        for (auto [i, v] : columns_[j]) d[i][j] = v;
    }
    return d;
}

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<std::int64_t>>& dense) {
    const int r = static_cast<int>(dense.size());
    const int c = r == 0 ? 0 : static_cast<int>(dense[0].size());
    SparseIntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < c; ++j) {
            if (dense[i][j] != 0) m.columns_[j].push_back({i, dense[i][j]});
        }
    }
    return m;
}

nlohmann::json SparseIntMatrix::to_json() const {
    nlohmann::json entries = nlohmann::json::array();
    for (int j = 0; j < cols(); ++j) {
        for (auto [i, v] : columns_[j]) entries.push_back({i, j, v});
    }
    return {{"rows", rows_}, {"cols", cols()}, {"entries", std::move(entries)}};
}

SparseIntMatrix SparseIntMatrix::from_json(const nlohmann::json& j) {
    SparseIntMatrix m(j.at("rows").get<int>(), j.at("cols").get<int>());
    for (const auto& e : j.at("entries")) {
        m.add(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<std::int64_t>());
    }
    return m;
}

SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
    SparseIntMatrix out(a.rows(), b.cols());
    std::map<int, std::int64_t> acc;
    for (int j = 0; j < b.cols(); ++j) {
        acc.clear();
        for (auto [k, bv] : b.columns_[j]) {
            for (auto [i, av] : a.columns_[k]) acc[i] += av * bv;
        }
        for (auto [i, v] : acc) {
            if (v != 0) out.columns_[j].push_back({i, v});
        }
    }
    return out;
}

bool ChainComplexData::squares_to_zero() const {
    for (int l = bottom + 2; l <= top(); ++l) {
        if (!(boundary(l - 1) * boundary(l)).is_zero()) return false;
    }
    return true;
}

}  // namespace halfcube
