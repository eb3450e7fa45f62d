#pragma once

#include <functional>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "reconkit/graph.hpp"
#include "reconkit/integer.hpp"
#include "reconkit/isotype.hpp"
#include "reconkit/polynomial.hpp"

namespace reconkit {

/// A multiset of non-separable graphs (blocks), sorted by canonical code.
/// Two types are equal when their code multisets are equal.
struct GraphType {
    std::vector<IsoClass> blocks;

    std::vector<CanonicalCode> codes() const;
    int edges() const;

    friend bool operator==(const GraphType& a, const GraphType& b) { return a.codes() == b.codes(); }
    friend bool operator<(const GraphType& a, const GraphType& b) { return a.codes() < b.codes(); }
};

/// Builds a type from explicit blocks. Each must be K2 or 2-connected.
GraphType make_type(const std::vector<Graph>& blocks);
/// The type of g. Throws DomainError if g has an isolated vertex.
GraphType block_type(const Graph& g);
std::string to_string(const GraphType& t);

struct CoverEntry {
    IsoClass x;
    GraphType type;
    Integer c = 0;
};

/// Every union X of copies of the root's blocks with v(X) <= vmax, with the
/// cover multiplicity c(root, X), and the same data grouped by type.
struct CoverTable {
    GraphType root;
    int vmax = 0;
    std::vector<CoverEntry> entries;
    std::vector<std::pair<GraphType, Integer>> by_type;

    /// c(root, root).
    Integer self() const;
};

/// Cached; safe to call from several threads. Throws std::logic_error if
/// two graphs of one type get different multiplicities.
const CoverTable& covers_of_type(const GraphType& s0, int vmax);

/// <G, S> for types S, from a source of block counts <G, B>. Types are
/// resolved by the memoised recursion over strictly smaller types.
class WhitneyCounter {
public:
    using BlockCount = std::function<Integer(const IsoClass&)>;

    WhitneyCounter(BlockCount block_count, int vmax);

    /// Product of the block counts.
    Integer p(const GraphType& s);
    Integer count(const GraphType& s);
    /// Explicit sum over chains S_q < ... < S_0, in rationals.
    Rational count_chains(const GraphType& s);

private:
    BlockCount block_count_;
    int vmax_;
    std::map<CanonicalCode, Integer> block_cache_;
    std::map<GraphType, Integer> memo_;
    std::set<GraphType> active_;
};

/// <g, S0>: subgraphs of g whose blocks form the multiset S0.
Integer count_type(const Graph& g, const GraphType& s0);
Rational count_type_chains(const Graph& g, const GraphType& s0);

/// P(G) from the vertex deck (n >= 3), by Kelly's lemma below the top order
/// and the type recursion for spanning elementary subgraphs.
Polynomial charpoly_from_vertex_deck(std::span<const Graph> deck);

}  // namespace reconkit
