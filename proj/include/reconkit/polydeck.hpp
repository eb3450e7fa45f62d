#pragma once

#include <vector>

#include "reconkit/graph.hpp"
#include "reconkit/integer.hpp"
#include "reconkit/polynomial.hpp"

namespace reconkit {

/// Characteristic polynomials P(G - S) for every nonempty proper S, as a multiset.
struct PolyDeck {
    int n = 0;
    std::vector<Polynomial> polys;
};

PolyDeck build_polydeck(const Graph& g);

/// Throws InconsistentDeckError when the multiset cannot be a complete
/// polynomial deck (entry count, degree profile, leading coefficients).
void validate_polydeck(const PolyDeck& d);

/// c_0 .. c_{n-1} of the graph, from the degree n-1 entries.
std::vector<Integer> low_coeffs(const PolyDeck& d);

/// Degrees of the vertices, one per degree n-1 entry (requires n >= 3).
std::vector<int> degree_sequence(const PolyDeck& d);

/// Signed spanning cover count c(a -> G) read from the deck. Every part must
/// be at most n - 1.
Integer c_lambda(const PolyDeck& d, const std::vector<int>& a);

/// The elementary graph whose components are cycles (or K2) of the given orders.
Graph elementary_graph(const std::vector<int>& lambda);

/// c(lambda -> F_target): signed tuples of elementary subgraphs of F_target
/// with orders lambda whose union is F_target.
Integer elementary_cover(const std::vector<int>& lambda, const std::vector<int>& target);

/// <G, F_lambda0> for a partition of n with at least two parts, by the
/// memoised refinement recursion.
Integer count_elementary(const PolyDeck& d, const std::vector<int>& lambda0);

/// The same count as an explicit sum over refinement chains, in rationals.
Rational count_elementary_chains(const PolyDeck& d, const std::vector<int>& lambda0);

/// P(G) from its complete polynomial deck. Requires a detectable vertex of
/// degree 1 or `assert_nonhamiltonian`; otherwise throws
/// NotReconstructibleError with reason "no-degree-one-vertex".
Polynomial charpoly_from_polydeck(const PolyDeck& d, bool assert_nonhamiltonian = false);

}  // namespace reconkit
