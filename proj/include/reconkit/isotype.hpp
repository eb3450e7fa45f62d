#pragma once

#include <span>
#include <string>
#include <vector>

#include "reconkit/graph.hpp"
#include "reconkit/integer.hpp"

namespace reconkit {

/// Isomorphism certificate. Byte layout: order, edge count (two bytes),
/// ascending degree sequence, then the canonically relabelled adjacency rows.
/// Comparing codes as byte strings therefore orders first by (v, e).
using CanonicalCode = std::string;

struct IsoClass {
    CanonicalCode code;
    Graph rep;
    int v = 0;
    int e = 0;

    friend bool operator==(const IsoClass& a, const IsoClass& b) { return a.code == b.code; }
};

CanonicalCode canonical_code(const Graph& g);
/// The canonically relabelled copy of g; isomorphic graphs give equal results.
Graph canonical_form(const Graph& g);
IsoClass iso_class(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

/// Number of automorphisms of g.
Count automorphism_count(const Graph& g);

/// (G choose F): vertex subsets of g inducing a copy of f.
Count count_induced(const Graph& g, const Graph& f);

/// <G, F>: subgraphs of g isomorphic to f. f must have no isolated vertices.
Count count_subgraphs(const Graph& g, const Graph& f);

enum class KellyMode { Subgraphs, Induced };

/// Kelly's lemma: the count of f in the graph whose vertex deck is `deck`,
/// for v(f) < n. Throws InconsistentDeckError if the division is not exact.
Count kelly_count(std::span<const Graph> deck, const Graph& f, int n, KellyMode mode = KellyMode::Subgraphs);

/// Canonical representatives of all graphs on exactly n vertices (n <= 8),
/// sorted by canonical code. Results are cached.
const std::vector<Graph>& enumerate_graphs(int n);

/// All graphs with min_n <= order <= max_n, optionally only those with edges.
std::vector<Graph> graph_corpus(int min_n, int max_n, bool require_edge);

}  // namespace reconkit
