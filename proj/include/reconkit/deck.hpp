#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "reconkit/graph.hpp"
#include "reconkit/integer.hpp"
#include "reconkit/isotype.hpp"

namespace reconkit {

/// Distinct isomorphism types of induced subgraphs with at least one edge,
/// ordered by (v, e, canonical code). The first class is K2, the last is G.
struct LambdaDeck {
    std::vector<IsoClass> classes;
};

/// Square matrix of induced-subgraph counts N[i][j] = (Λ_i choose Λ_j).
/// `labels` present means the matrix is labelled.
struct NMatrix {
    std::vector<std::vector<Count>> rows;
    std::optional<LambdaDeck> labels;

    int size() const noexcept { return static_cast<int>(rows.size()); }
    Count at(int i, int j) const { return rows[i][j]; }

    /// Entry-wise equality; labels are ignored.
    friend bool operator==(const NMatrix& a, const NMatrix& b) { return a.rows == b.rows; }
};

struct VE {
    int v = 0;
    int e = 0;
    friend bool operator==(const VE&, const VE&) = default;
    friend auto operator<=>(const VE&, const VE&) = default;
};

struct ElpCover {
    int from = 0;  // covered (lower) node
    int to = 0;    // covering (upper) node
    Count label = 0;
    friend bool operator==(const ElpCover&, const ElpCover&) = default;
};

/// Edge-labelled ranked poset. Node i has rank `ranks[i]`.
struct Elp {
    std::vector<int> ranks;
    std::vector<ElpCover> covers;

    int size() const noexcept { return static_cast<int>(ranks.size()); }
};

LambdaDeck lambda_deck(const Graph& g);
NMatrix nmatrix(const Graph& g);
NMatrix strip(const NMatrix& n);

/// Shape checks: square, unit diagonal. Throws InvalidMatrixError.
void validate_shape(const NMatrix& n);

/// (v, e) of every row, read off the matrix alone. Rows may be in any order.
std::vector<VE> infer_v_e(const NMatrix& n);

/// Index of the unique K2 row.
int k2_row(const NMatrix& n);
/// Index of the unique maximal row (the graph itself).
int top_row(const NMatrix& n);

/// Simultaneous row/column permutation: result row i is input row perm[i].
NMatrix permute(const NMatrix& n, const std::vector<int>& perm);
/// Stable reordering of rows by (v, e).
NMatrix sort_by_ve(const NMatrix& n);
/// Principal submatrix on the given rows, in the given order.
NMatrix principal_submatrix(const NMatrix& n, const std::vector<int>& rows);

Elp elp_from_nmatrix(const NMatrix& n);
/// Fills the matrix from the covers. Rows follow the node order of `p`.
NMatrix nmatrix_from_elp(const Elp& p);

struct ChildMatrix {
    NMatrix matrix;
    Count multiplicity = 0;
};

/// The N-matrices of the vertex-deleted subgraphs with at least one edge,
/// in canonical form, equal matrices merged.
std::vector<ChildMatrix> child_nmatrices(const NMatrix& n);

/// Number of r-vertex edgeless induced subgraphs of the top graph.
Integer count_empty_induced(const NMatrix& n, int r);

/// Nontrivial rank- and label-preserving automorphisms. Each is a node map.
std::vector<std::vector<int>> elp_automorphisms(const Elp& p);

/// Canonical simultaneous permutation; rows stay ordered by (v, e).
NMatrix canonical_nmatrix(const NMatrix& n);

}  // namespace reconkit
