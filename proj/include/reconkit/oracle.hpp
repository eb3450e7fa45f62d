#pragma once

#include <span>
#include <utility>
#include <vector>

#include "reconkit/graph.hpp"
#include "reconkit/integer.hpp"
#include "reconkit/polynomial.hpp"

// Brute-force ground truth. Everything here enumerates subgraphs directly and
// shares no code with the reconstruction pipelines.

namespace reconkit::oracle {

/// Number of cycles of length i; psi(g, 2) is the edge count.
Integer psi(const Graph& g, int i);

/// Spanning trees by enumeration of (n-1)-edge subsets.
Integer tr(const Graph& g);
/// Spanning trees by the matrix-tree theorem (exact Bareiss elimination).
Integer tr_determinant(const Graph& g);
/// Hamiltonian cycles; ham(K2) = 1 by the C2 = K2 convention.
Integer ham(const Graph& g);
/// Spanning unicyclic subgraphs whose cycle has length r.
Integer uni(const Graph& g, int r);

/// Sachs expansion over elementary subgraphs.
Polynomial charpoly(const Graph& g);
/// Faddeev-LeVerrier on the adjacency matrix, in exact rationals.
Polynomial charpoly_leverrier(const Graph& g);

/// Edge subsets with endpoint vertex sets; refuses e(g) > 16.
RankPolynomial rankpoly(const Graph& g);

/// <G, F_lambda> for a partition lambda with parts >= 2.
Integer elementary_count(const Graph& g, const std::vector<int>& lambda);

/// Kocay cover count c(S, H): tuples of subgraphs X_i of H with X_i = F_i
/// whose union is H.
Integer cover_count(std::span<const Graph> s, const Graph& h);

/// Tuples of cycles with lengths a_i spanning V(g) (c), additionally connected
/// (con), and the unrestricted product (p).
Integer c(const Graph& g, const std::vector<int>& a);
Integer con(const Graph& g, const std::vector<int>& a);
Integer p(const Graph& g, const std::vector<int>& a);

/// Tuples of elementary subgraphs F_j on a_j vertices spanning V(g), each
/// weighted by (-1)^r(F_j) 2^s(F_j).
Integer signed_c(const Graph& g, const std::vector<int>& a);

/// Connected spanning subgraphs with k edges.
Integer kedge_connected(const Graph& g, int k);

/// Spanning subgraphs whose components have (vertices, edges) given by `spec`.
Integer lcompo(const Graph& g, const std::vector<std::pair<int, int>>& spec);

}  // namespace reconkit::oracle
