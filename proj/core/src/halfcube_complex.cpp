#include "halfcube/halfcube_complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "halfcube/exact.hpp"

namespace halfcube {

int coordinate(VertexId v, int n, int i) { return (v >> (n - 1 - i)) & 1u ? 1 : -1; }

std::vector<int> coordinates(VertexId v, int n) {
    std::vector<int> x(n);
    for (int i = 0; i < n; ++i) x[i] = coordinate(v, n, i);
    return x;
}

VertexId vertex_from_coordinates(const std::vector<int>& x) {
    const int n = static_cast<int>(x.size());
    VertexId v = 0;
    for (int i = 0; i < n; ++i) {
        if (x[i] > 0) v |= VertexId{1} << (n - 1 - i);
    }
    return v;
}

VertexId flip(VertexId v, int n, int i) { return v ^ (VertexId{1} << (n - 1 - i)); }

int negative_coordinates(VertexId v, int n) { return n - __builtin_popcount(v); }

bool in_psi_plus(VertexId v, int n) { return negative_coordinates(v, n) % 2 == 0; }

std::string vertex_string(VertexId v, int n) {
    std::string s(n, '+');
    for (int i = 0; i < n; ++i) {
        if (coordinate(v, n, i) < 0) s[i] = '-';
    }
    return s;
}

std::string kind_name(CellKind kind) {
    switch (kind) {
        case CellKind::empty: return "empty";
        case CellKind::vertex: return "vertex";
        case CellKind::simplex: return "simplex";
        case CellKind::demicube: return "demicube";
    }
    return "unknown";
}

namespace {

std::vector<int> support_indices(std::uint32_t support, int n) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i) {
        if (support & (1u << i)) out.push_back(i);
    }
    return out;
}

Cell make_empty() { return Cell{}; }

Cell make_vertex(VertexId v) {
    Cell c;
    c.kind = CellKind::vertex;
    c.dim = 0;
    c.vertices = {v};
    return c;
}

/// Bits of the vertex encoding that belong to coordinates listed in support.
VertexId support_bits(std::uint32_t support, int n) {
    VertexId bits = 0;
    for (int i : support_indices(support, n)) bits |= VertexId{1} << (n - 1 - i);
    return bits;
}

void check_n(int n, int max_n) {
    if (n < 4) throw std::out_of_range("half cube requires n >= 4");
    if (n > max_n) {
        throw BudgetExceeded("n = " + std::to_string(n) + " exceeds the budget n <= " + std::to_string(max_n));
    }
    if (n > 16) throw BudgetExceeded("cell enumeration is limited to n <= 16");
}

template <typename F>
void for_each_subset_of_size(int n, int size, F&& fn) {
    if (size < 0 || size > n) return;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        if (__builtin_popcount(s) == size) fn(s);
    }
}

}  // namespace

Cell make_simplex(int n, VertexId apex, std::uint32_t support) {
    if (in_psi_plus(apex, n)) throw std::invalid_argument("simplex apex must have odd parity");
    const auto idx = support_indices(support, n);
    if (idx.size() == 1) return make_vertex(flip(apex, n, idx[0]));
    Cell c;
    c.kind = CellKind::simplex;
    c.dim = static_cast<int>(idx.size()) - 1;
    c.support = support;
    for (int i : idx) c.vertices.push_back(flip(apex, n, i));
    std::sort(c.vertices.begin(), c.vertices.end());
    c.apex = apex;
    if (idx.size() == 2) {
        // Edges have two apex representations.
        c.apex = std::min(apex, flip(flip(apex, n, idx[0]), n, idx[1]));
    }
    return c;
}

Cell make_demicube(int n, std::uint32_t support, VertexId fixed) {
    const auto idx = support_indices(support, n);
    if (idx.size() < 3) throw std::invalid_argument("demicube cells need |support| >= 3");
    Cell c;
    c.kind = CellKind::demicube;
    c.dim = static_cast<int>(idx.size());
    c.support = support;
    c.fixed = fixed & ~support_bits(support, n);
    const std::uint32_t free_count = static_cast<std::uint32_t>(idx.size());
    for (std::uint32_t a = 0; a < (1u << free_count); ++a) {
        VertexId v = c.fixed;
        for (std::uint32_t b = 0; b < free_count; ++b) {
            if (a & (1u << b)) v |= VertexId{1} << (n - 1 - idx[b]);
        }
        if (in_psi_plus(v, n)) c.vertices.push_back(v);
    }
    std::sort(c.vertices.begin(), c.vertices.end());
    return c;
}

std::vector<Cell> enumerate_cells(int n, int l, int max_n) {
    check_n(n, max_n);
    std::vector<Cell> out;
    if (l < -1 || l > n) return out;
    if (l == -1) {
        out.push_back(make_empty());
        return out;
    }
    if (l == 0) {
        for (VertexId v = 0; v < (VertexId{1} << n); ++v) {
            if (in_psi_plus(v, n)) out.push_back(make_vertex(v));
        }
        return out;
    }
    std::map<std::vector<VertexId>, Cell> unique;
    if (l <= n - 1) {
        for_each_subset_of_size(n, l + 1, [&](std::uint32_t s) {
            for (VertexId apex = 0; apex < (VertexId{1} << n); ++apex) {
                if (in_psi_plus(apex, n)) continue;
                Cell c = make_simplex(n, apex, s);
                unique.emplace(c.vertices, std::move(c));
            }
        });
    }
    if (l >= 3) {
        for_each_subset_of_size(n, l, [&](std::uint32_t s) {
            const VertexId free_bits = support_bits(s, n);
            for (VertexId f = 0; f < (VertexId{1} << n); ++f) {
                if (f & free_bits) continue;
                Cell c = make_demicube(n, s, f);
                unique.emplace(c.vertices, std::move(c));
            }
        });
    }
    out.reserve(unique.size());
    for (auto& [key, c] : unique) out.push_back(std::move(c));
    return out;
}

std::vector<Cell> facets(int n, const Cell& c) {
    std::vector<Cell> out;
    switch (c.kind) {
        case CellKind::empty:
            break;
        case CellKind::vertex:
            out.push_back(make_empty());
            break;
        case CellKind::simplex:
            for (int i : support_indices(c.support, n)) {
                out.push_back(make_simplex(n, c.apex, c.support & ~(1u << i)));
            }
            break;
        case CellKind::demicube: {
            const auto idx = support_indices(c.support, n);
            const std::uint32_t l = static_cast<std::uint32_t>(idx.size());
            for (std::uint32_t a = 0; a < (1u << l); ++a) {
                VertexId w = c.fixed;
                for (std::uint32_t b = 0; b < l; ++b) {
                    if (a & (1u << b)) w |= VertexId{1} << (n - 1 - idx[b]);
                }
                if (!in_psi_plus(w, n)) out.push_back(make_simplex(n, w, c.support));
            }
            // A 3-dimensional demicube is a tetrahedron: only simplex facets.
            if (l >= 4) {
                for (int i : idx) {
                    const std::uint32_t smaller = c.support & ~(1u << i);
                    const VertexId bit = VertexId{1} << (n - 1 - i);
                    out.push_back(make_demicube(n, smaller, c.fixed));
                    out.push_back(make_demicube(n, smaller, c.fixed | bit));
                }
            }
            break;
        }
    }
    return out;
}

std::int64_t face_count_formula(int n, int l, CellKind kind) {
    switch (kind) {
        case CellKind::empty: return l == -1 ? 1 : 0;
        case CellKind::vertex: return l == 0 ? checked_pow2(n - 1) : 0;
        case CellKind::simplex:
            if (l == 1) return checked_pow2(n - 2) * checked_binomial(n, 2);
            if (l >= 2 && l < n) return checked_pow2(n - 1) * checked_binomial(n, l + 1);
            return 0;
        case CellKind::demicube:
            if (l >= 3 && l <= n) return checked_pow2(n - l) * checked_binomial(n, l);
            return 0;
    }
    return 0;
}

std::vector<CellCount> face_census(int n, int max_n) {
    std::vector<CellCount> out;
    for (int l = 0; l <= n; ++l) {
        const auto cells = enumerate_cells(n, l, max_n);
        std::map<CellKind, std::int64_t> by_kind;
        for (const auto& c : cells) ++by_kind[c.kind];
        for (CellKind kind : {CellKind::vertex, CellKind::simplex, CellKind::demicube}) {
            const std::int64_t formula = face_count_formula(n, l, kind);
            const std::int64_t measured = by_kind[kind];
            if (formula == 0 && measured == 0) continue;
            out.push_back({l, kind, measured, formula});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

HalfCubeComplex::HalfCubeComplex(int n, int max_n) : n_(n) {
    check_n(n, max_n);
    for (int l = -1; l <= n; ++l) cells_.push_back(enumerate_cells(n, l, max_n));
    index_cells();
    compute_frames();
    compute_boundaries();
}

void HalfCubeComplex::index_cells() {
    index_.assign(cells_.size(), {});
    for (std::size_t d = 0; d < cells_.size(); ++d) {
        for (std::size_t i = 0; i < cells_[d].size(); ++i) {
            index_[d].emplace(cells_[d][i].vertices, static_cast<int>(i));
        }
    }
}

std::optional<int> HalfCubeComplex::index_of(int dim, const std::vector<VertexId>& vertices) const {
    if (dim < -1 || dim > n_) return std::nullopt;
    const auto& m = index_.at(dim + 1);
    auto it = m.find(vertices);
    if (it == m.end()) return std::nullopt;
    return it->second;
}

namespace {

/// Greedy frame: least vertex as base, then each later vertex whose edge
/// vector is independent of those already chosen.
std::vector<std::vector<int>> greedy_frame(const Cell& c, int n) {
    std::vector<std::vector<int>> frame;
    if (c.dim <= 0) return frame;
    const auto base = coordinates(c.vertices.front(), n);
    std::vector<std::vector<std::int64_t>> echelon;
    std::vector<int> pivots;
    for (std::size_t k = 1; k < c.vertices.size() && static_cast<int>(frame.size()) < c.dim; ++k) {
        const auto x = coordinates(c.vertices[k], n);
        std::vector<int> diff(n);
        for (int i = 0; i < n; ++i) diff[i] = (x[i] - base[i]) / 2;
        std::vector<std::int64_t> r(diff.begin(), diff.end());
        for (std::size_t b = 0; b < echelon.size(); ++b) {
            const int p = pivots[b];
            if (r[p] == 0) continue;
            const std::int64_t scale_r = echelon[b][p];
            const std::int64_t scale_b = r[p];
            std::int64_t g = 0;
            for (int i = 0; i < n; ++i) {
                r[i] = scale_r * r[i] - scale_b * echelon[b][i];
                g = std::gcd(g, r[i]);
            }
            if (g > 1) {
                for (auto& v : r) v /= g;
            }
        }
        auto nz = std::find_if(r.begin(), r.end(), [](std::int64_t v) { return v != 0; });
        if (nz == r.end()) continue;
        pivots.push_back(static_cast<int>(nz - r.begin()));
        echelon.push_back(std::move(r));
        frame.push_back(std::move(diff));
    }
    if (static_cast<int>(frame.size()) != c.dim) {
        throw std::logic_error("cell vertices do not span a cell of the expected dimension");
    }
    return frame;
}

/// Sign of det(A^T B) for column lists A, B spanning the same subspace.
int relative_orientation(const std::vector<std::vector<int>>& a, const std::vector<std::vector<std::int64_t>>& b) {
    const std::size_t d = a.size();
    IntMatrix<std::int64_t> g(d, std::vector<std::int64_t>(d, 0));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            std::int64_t s = 0;
            for (std::size_t t = 0; t < a[i].size(); ++t) s += a[i][t] * b[j][t];
            g[i][j] = s;
        }
    }
    const int sign = determinant_sign(g);
    if (sign == 0) throw std::logic_error("singular orientation frame");
    return sign;
}

}  // namespace

void HalfCubeComplex::compute_frames() {
    frames_.assign(cells_.size(), {});
    for (std::size_t d = 0; d < cells_.size(); ++d) {
        for (const auto& c : cells_[d]) frames_[d].push_back(greedy_frame(c, n_));
    }
}

int HalfCubeComplex::incidence_sign(int dim, int cell, int facet) const {
    if (dim == 0) return 1;
    const Cell& c = cells(dim).at(cell);
    const Cell& f = cells(dim - 1).at(facet);
    // Outward direction, scaled to integers: |V_c| * sum(f) - |V_f| * sum(c).
    std::vector<std::int64_t> sum_c(n_, 0);
    std::vector<std::int64_t> sum_f(n_, 0);
    for (VertexId v : c.vertices) {
        for (int i = 0; i < n_; ++i) sum_c[i] += coordinate(v, n_, i);
    }
    for (VertexId v : f.vertices) {
        for (int i = 0; i < n_; ++i) sum_f[i] += coordinate(v, n_, i);
    }
    std::vector<std::vector<std::int64_t>> columns;
    std::vector<std::int64_t> outward(n_);
    const auto nc = static_cast<std::int64_t>(c.vertices.size());
    const auto nf = static_cast<std::int64_t>(f.vertices.size());
    for (int i = 0; i < n_; ++i) outward[i] = nc * sum_f[i] - nf * sum_c[i];
    columns.push_back(std::move(outward));
    for (const auto& v : frame(dim - 1, facet)) columns.emplace_back(v.begin(), v.end());
    return relative_orientation(frame(dim, cell), columns);
}

void HalfCubeComplex::compute_boundaries() {
    boundaries_.clear();
    SparseIntMatrix augmentation(1, count(0));
    for (int j = 0; j < count(0); ++j) augmentation.add(0, j, 1);
    boundaries_.push_back(std::move(augmentation));
    for (int l = 1; l <= n_; ++l) {
        SparseIntMatrix m(count(l - 1), count(l));
        for (int j = 0; j < count(l); ++j) {
            for (const Cell& f : facets(n_, cells(l)[j])) {
                const auto row = index_of(l - 1, f.vertices);
                if (!row) throw std::logic_error("facet missing from the complex");
                m.add(*row, j, incidence_sign(l, j, *row));
            }
        }
        boundaries_.push_back(std::move(m));
    }
}

CellAction HalfCubeComplex::act(const SignedPermutation& w, int l) const {
    if (w.degree() != n_) throw std::invalid_argument("group element degree differs from n");
    if (!w.in_d()) throw std::invalid_argument("element is not in W(D_n): odd number of sign changes");
    const auto& cs = cells(l);
    CellAction out;
    out.target.resize(cs.size());
    out.sign.assign(cs.size(), 1);
    std::vector<VertexId> vertex_map(std::size_t{1} << n_);
    for (VertexId v = 0; v < vertex_map.size(); ++v) {
        vertex_map[v] = vertex_from_coordinates(w.apply(coordinates(v, n_)));
    }
    for (std::size_t i = 0; i < cs.size(); ++i) {
        std::vector<VertexId> image;
        image.reserve(cs[i].vertices.size());
        for (VertexId v : cs[i].vertices) image.push_back(vertex_map[v]);
        std::sort(image.begin(), image.end());
        const auto j = index_of(l, image);
        if (!j) throw std::logic_error("group element does not preserve the cell structure");
        out.target[i] = *j;
        if (l >= 1) {
            std::vector<std::vector<std::int64_t>> moved;
            for (const auto& v : frame(l, static_cast<int>(i))) {
                const auto mv = w.apply(v);
                moved.emplace_back(mv.begin(), mv.end());
            }
            out.sign[i] = relative_orientation(frame(l, *j), moved);
        }
    }
    return out;
}

SparseIntMatrix HalfCubeComplex::action_matrix(const SignedPermutation& w, int l) const {
    const auto a = act(w, l);
    SparseIntMatrix m(count(l), count(l));
    for (std::size_t i = 0; i < a.target.size(); ++i) m.add(a.target[i], static_cast<int>(i), a.sign[i]);
    return m;
}

std::int64_t HalfCubeComplex::trace(const SignedPermutation& w, int l) const {
    const auto a = act(w, l);
    std::int64_t t = 0;
    for (std::size_t i = 0; i < a.target.size(); ++i) {
        if (a.target[i] == static_cast<int>(i)) t += a.sign[i];
    }
    return t;
}

std::int64_t HalfCubeComplex::trace(const SignedPermutation& w, int l, CellKind kind) const {
    const auto a = act(w, l);
    const auto& cs = cells(l);
    std::int64_t t = 0;
    for (std::size_t i = 0; i < a.target.size(); ++i) {
        if (a.target[i] == static_cast<int>(i) && cs[i].kind == kind) t += a.sign[i];
    }
    return t;
}

ChainComplexData HalfCubeComplex::full() const {
    ChainComplexData cc;
    cc.bottom = -1;
    for (int l = -1; l <= n_; ++l) {
        const int r = count(l);
        int y = 0;
        for (const auto& c : cells(l)) y += c.kind == CellKind::demicube ? 1 : 0;
        cc.ranks.push_back(r);
        cc.simplex_ranks.push_back(r - y);
        cc.demicube_ranks.push_back(y);
        std::vector<int> basis(r);
        std::iota(basis.begin(), basis.end(), 0);
        cc.basis.push_back(std::move(basis));
        cc.boundaries.push_back(l == -1 ? SparseIntMatrix(0, 1) : boundary(l));
    }
    return cc;
}

ChainComplexData HalfCubeComplex::subcomplex(int k) const {
    if (k < 3 || k > n_) throw std::out_of_range("subcomplex requires 3 <= k <= n");
    ChainComplexData cc;
    cc.bottom = -1;
    for (int l = -1; l <= n_; ++l) {
        std::vector<int> basis;
        int y = 0;
        for (int i = 0; i < count(l); ++i) {
            const bool demicube = cells(l)[i].kind == CellKind::demicube;
            if (demicube) ++y;
            if (l < k || !demicube) basis.push_back(i);
        }
        const int r = static_cast<int>(basis.size());
        cc.ranks.push_back(r);
        cc.demicube_ranks.push_back(l < k ? y : 0);
        cc.simplex_ranks.push_back(r - cc.demicube_ranks.back());
        if (l == -1) {
            cc.boundaries.emplace_back(0, r);
        } else {
            cc.boundaries.push_back(boundary(l).submatrix(cc.basis.back(), basis));
        }
        cc.basis.push_back(std::move(basis));
    }
    return cc;
}

nlohmann::json HalfCubeComplex::to_json() const {
    nlohmann::json cells_json = nlohmann::json::object();
    nlohmann::json boundary_json = nlohmann::json::object();
    for (int l = -1; l <= n_; ++l) {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& c : cells(l)) {
            nlohmann::json verts = nlohmann::json::array();
            for (VertexId v : c.vertices) verts.push_back(vertex_string(v, n_));
            list.push_back({{"kind", kind_name(c.kind)}, {"vertices", std::move(verts)}});
        }
        cells_json[std::to_string(l)] = std::move(list);
        if (l >= 0) boundary_json[std::to_string(l)] = boundary(l).to_json();
    }
    return {{"format_version", format_version},
            {"n", n_},
            {"cells", std::move(cells_json)},
            {"boundaries", std::move(boundary_json)}};
}

HalfCubeComplex HalfCubeComplex::from_json(const nlohmann::json& j) {
    if (j.at("format_version").get<int>() != format_version) {
        throw std::runtime_error("unsupported complex cache format version");
    }
    HalfCubeComplex hc;
    hc.n_ = j.at("n").get<int>();
    const int n = hc.n_;
    check_n(n, 16);
    for (int l = -1; l <= n; ++l) {
        std::vector<Cell> list;
        for (const auto& cj : j.at("cells").at(std::to_string(l))) {
            const std::string kind = cj.at("kind").get<std::string>();
            std::vector<VertexId> verts;
            for (const auto& vs : cj.at("vertices")) {
                const std::string s = vs.get<std::string>();
                std::vector<int> x;
                for (char ch : s) x.push_back(ch == '-' ? -1 : 1);
                verts.push_back(vertex_from_coordinates(x));
            }
            std::sort(verts.begin(), verts.end());
            std::uint32_t support = 0;
            for (int i = 0; i < n; ++i) {
                for (VertexId v : verts) {
                    if (coordinate(v, n, i) != coordinate(verts.front(), n, i)) support |= 1u << i;
                }
            }
            Cell c;
            if (kind == "empty") {
                c = make_empty();
            } else if (kind == "vertex") {
                c = make_vertex(verts.at(0));
            } else if (kind == "demicube") {
                c = make_demicube(n, support, verts.front());
            } else if (kind == "simplex") {
                bool found = false;
                for (int i : support_indices(support, n)) {
                    const Cell cand = make_simplex(n, flip(verts.front(), n, i), support);
                    if (cand.vertices == verts) {
                        c = cand;
                        found = true;
                        break;
                    }
                }
                if (!found) throw std::runtime_error("cache holds a vertex set that is not a simplex face");
            } else {
                throw std::runtime_error("unknown cell kind in cache: " + kind);
            }
            if (c.vertices != verts) throw std::runtime_error("cache cell does not match its kind");
            list.push_back(std::move(c));
        }
        hc.cells_.push_back(std::move(list));
    }
    hc.index_cells();
    hc.compute_frames();
    for (int l = 0; l <= n; ++l) {
        hc.boundaries_.push_back(SparseIntMatrix::from_json(j.at("boundaries").at(std::to_string(l))));
    }
    return hc;
}

}  // namespace halfcube
