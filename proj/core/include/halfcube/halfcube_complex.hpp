#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "halfcube/errors.hpp"
#include "halfcube/signed_permutation.hpp"
#include "halfcube/sparse_matrix.hpp"

namespace halfcube {

/// A point of {+1,-1}^n encoded by its bits: bit (n-1-i) is set when
/// coordinate i is +1. Integer order is then lexicographic order on the
/// coordinate vector with -1 < +1.
using VertexId = std::uint32_t;

int coordinate(VertexId v, int n, int i);
std::vector<int> coordinates(VertexId v, int n);
VertexId vertex_from_coordinates(const std::vector<int>& x);
VertexId flip(VertexId v, int n, int i);
int negative_coordinates(VertexId v, int n);
bool in_psi_plus(VertexId v, int n);

/// Renders a vertex as a sign string, e.g. "+-+-".
std::string vertex_string(VertexId v, int n);

enum class CellKind { empty, vertex, simplex, demicube };

std::string kind_name(CellKind kind);

/// A face of the half cube, identified by its sorted vertex set.
///  - simplex: vertices apex with coordinate i flipped, i in support
///    (apex in the odd-parity class); dimension |support| - 1
///  - demicube: even-parity points agreeing with `fixed` off the support;
///    dimension |support| >= 3
struct Cell {
    CellKind kind = CellKind::empty;
    int dim = -1;
    std::vector<VertexId> vertices;
    std::uint32_t support = 0;   // bit i: coordinate i varies
    VertexId apex = 0;           // simplex cells, least representative
    VertexId fixed = 0;          // demicube cells, bits off the support

    friend bool operator==(const Cell& a, const Cell& b) { return a.vertices == b.vertices && a.dim == b.dim; }
};

Cell make_simplex(int n, VertexId apex, std::uint32_t support);
Cell make_demicube(int n, std::uint32_t support, VertexId fixed);

/// All cells of dimension l, sorted by vertex set. Counts follow the face
/// classification of the half cube:
///   2^(n-1) vertices, 2^(n-2) C(n,2) edges,
///   2^(n-1) C(n,l+1) simplex l-faces (2 <= l < n),
///   2^(n-l) C(n,l) demicube l-faces (3 <= l <= n).
std::vector<Cell> enumerate_cells(int n, int l, int max_n = 8);

/// Codimension-one faces of c in the cell structure.
std::vector<Cell> facets(int n, const Cell& c);

struct CellCount {
    int dim = 0;
    CellKind kind = CellKind::vertex;
    std::int64_t measured = 0;
    std::int64_t formula = 0;
};

/// Closed-form count of cells of the given dimension and kind.
std::int64_t face_count_formula(int n, int l, CellKind kind);

/// Measured and closed-form counts per (dimension, kind); no matrices built.
std::vector<CellCount> face_census(int n, int max_n = 8);

/// Image of each cell under a group element: target index and orientation sign.
struct CellAction {
    std::vector<int> target;
    std::vector<int> sign;
};

/// The CW complex C_n with integer boundary matrices and the W(D_n) action.
/// Orientations are fixed by a frame per cell: the lexicographically least
/// vertex plus greedily chosen independent edge vectors. Immutable after
/// construction, so const access is safe from several threads.
class HalfCubeComplex {
public:
    static constexpr int format_version = 1;

    explicit HalfCubeComplex(int n, int max_n = 6);

    int n() const { return n_; }

    const std::vector<Cell>& cells(int dim) const { return cells_.at(dim + 1); }
    int count(int dim) const { return static_cast<int>(cells(dim).size()); }
    std::optional<int> index_of(int dim, const std::vector<VertexId>& vertices) const;

    /// Frame vectors (halved edge vectors, entries in {-1,0,1}).
    const std::vector<std::vector<int>>& frame(int dim, int index) const { return frames_.at(dim + 1).at(index); }

    /// boundary(l): C_l -> C_{l-1}, 0 <= l <= n. boundary(0) sends every
    /// vertex to the empty cell with coefficient +1.
    const SparseIntMatrix& boundary(int l) const { return boundaries_.at(l); }

    /// Incidence sign of facet f in cell c, computed from the frames:
    /// orientation of (outward vector, frame(f)) relative to frame(c).
    int incidence_sign(int dim, int cell, int facet) const;

    /// How w moves the cells of dimension l. Throws if w is not in W(D_n).
    CellAction act(const SignedPermutation& w, int l) const;
    SparseIntMatrix action_matrix(const SignedPermutation& w, int l) const;

    std::int64_t trace(const SignedPermutation& w, int l) const;
    std::int64_t trace(const SignedPermutation& w, int l, CellKind kind) const;

    /// The whole complex, degrees -1..n.
    ChainComplexData full() const;

    /// C_{n,k}: all cells below degree k, simplex cells only from degree k.
    ChainComplexData subcomplex(int k) const;

    /// Cells (sorted keys) and boundary matrices in coordinate-list form.
    nlohmann::json to_json() const;
    static HalfCubeComplex from_json(const nlohmann::json& j);

private:
    HalfCubeComplex() = default;
    void index_cells();
    void compute_frames();
    void compute_boundaries();

    int n_ = 0;
    std::vector<std::vector<Cell>> cells_;                           // by dim + 1
    std::vector<std::map<std::vector<VertexId>, int>> index_;        // by dim + 1
    std::vector<std::vector<std::vector<std::vector<int>>>> frames_; // by dim + 1
    std::vector<SparseIntMatrix> boundaries_;                        // by dim
};

}  // namespace halfcube
