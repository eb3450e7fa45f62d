#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <initializer_list>
#include <utility>
#include <vector>

namespace reconkit {

/// Bitmask over the vertices of a graph with at most 64 vertices.
using VertexMask = std::uint64_t;

struct Edge {
    int u = 0;
    int v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A labelled finite simple graph on vertices 0..n-1 (n <= 64).
///
/// Values are immutable once constructed. The null graph (n = 0) is
/// representable; operations that make no sense for it reject it explicitly.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    Graph() = default;
    /// Edgeless graph on n vertices.
    explicit Graph(int n);
    /// Throws DomainError on loops, duplicate edges or out-of-range endpoints.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges);

    /// Builds a graph from symmetric adjacency rows. Rows are validated.
    static Graph from_adjacency(int n, std::span<const VertexMask> rows);

    int order() const noexcept { return n_; }
    int size() const noexcept { return m_; }
    bool empty_vertex_set() const noexcept { return n_ == 0; }

    bool has_edge(int u, int v) const noexcept { return (adj_[u] >> v) & 1U; }
    VertexMask neighbours(int u) const noexcept { return adj_[u]; }
    int degree(int u) const noexcept;
    VertexMask all_vertices() const noexcept;
    std::span<const VertexMask> adjacency() const noexcept { return adj_; }

    /// Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<VertexMask> adj_;
};

/// The subgraph induced by `vertices`. Vertices are relabelled 0..k-1 in
/// increasing order of their original label.
Graph induced_subgraph(const Graph& g, VertexMask vertices);
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

/// G - v for every vertex v, in vertex order.
std::vector<Graph> vertex_deck(const Graph& g);

/// Vertex sets of the connected components, ordered by smallest vertex.
std::vector<VertexMask> component_masks(const Graph& g);
std::vector<Graph> components(const Graph& g);
bool is_connected(const Graph& g);
int component_count(const Graph& g);

/// Edge sets of the blocks (maximal 2-connected subgraphs and bridges).
/// Each block is a list of edges of `g`. Isolated vertices produce nothing.
std::vector<std::vector<Edge>> block_edge_sets(const Graph& g);
std::vector<VertexMask> block_vertex_masks(const Graph& g);
std::vector<Graph> blocks(const Graph& g);

/// Rank v - comp and co-rank e - v + comp.
int graph_rank(const Graph& g);
int graph_corank(const Graph& g);

/// Subgraph spanned by a set of edges: the vertices are the edge endpoints.
Graph edge_subgraph(const Graph& g, std::span<const Edge> edges);

/// Disjoint union; vertices of `b` follow those of `a`.
Graph disjoint_union(const Graph& a, const Graph& b);

// Named small graphs used throughout tests and examples.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph empty_graph(int n);
/// The triangular prism (ladder L3): triangles 0-1-2 and 3-4-5 joined by i - i+3.
Graph prism_graph();

/// Graph6 encoding for n <= 62.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

std::string describe(const Graph& g);

}  // namespace reconkit
