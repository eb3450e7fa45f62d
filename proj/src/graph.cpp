#include "reconkit/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "reconkit/errors.hpp"

namespace reconkit {

namespace {

void check_order(int n) {
    if (n < 0 || n > Graph::kMaxVertices) {
        throw DomainError("graph order " + std::to_string(n) + " outside [0, 64]");
    }
}

}  // namespace

Graph::Graph(int n) : n_(n) {
    check_order(n);
    adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
            throw DomainError("edge endpoint out of range");
        }
        if (e.u == e.v) throw DomainError("loops are not allowed");
        if (has_edge(e.u, e.v)) throw DomainError("duplicate edge");
        adj_[e.u] |= VertexMask{1} << e.v;
        adj_[e.v] |= VertexMask{1} << e.u;
        ++m_;
    }
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

Graph Graph::from_adjacency(int n, std::span<const VertexMask> rows) {
    check_order(n);
    if (static_cast<int>(rows.size()) != n) throw DomainError("adjacency row count mismatch");
    Graph g(n);
    const VertexMask all = g.all_vertices();
    int twice = 0;
    for (int u = 0; u < n; ++u) {
        VertexMask r = rows[u];
        if (r & ~all) throw DomainError("adjacency row references missing vertex");
        if ((r >> u) & 1U) throw DomainError("loops are not allowed");
        for (VertexMask rest = r; rest; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            if (!((rows[v] >> u) & 1U)) throw DomainError("adjacency is not symmetric");
        }
        g.adj_[u] = r;
        twice += std::popcount(r);
    }
    g.m_ = twice / 2;
    return g;
}

int Graph::degree(int u) const noexcept { return std::popcount(adj_[u]); }

VertexMask Graph::all_vertices() const noexcept {
    return n_ == 64 ? ~VertexMask{0} : (VertexMask{1} << n_) - 1;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u) {
        VertexMask higher = adj_[u] & ~((VertexMask{2} << u) - 1);
        for (; higher; higher &= higher - 1) out.push_back({u, std::countr_zero(higher)});
    }
    return out;
}

Graph induced_subgraph(const Graph& g, VertexMask vertices) {
    if (vertices & ~g.all_vertices()) throw DomainError("induced_subgraph: vertex out of range");
    std::vector<int> labels;
    for (VertexMask rest = vertices; rest; rest &= rest - 1) labels.push_back(std::countr_zero(rest));
    const int k = static_cast<int>(labels.size());
    std::vector<VertexMask> rows(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            if (g.has_edge(labels[i], labels[j])) rows[i] |= VertexMask{1} << j;
        }
    }
    return Graph::from_adjacency(k, rows);
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    VertexMask mask = 0;
    for (int v : vertices) {
        if (v < 0 || v >= g.order()) throw DomainError("induced_subgraph: vertex out of range");
        VertexMask bit = VertexMask{1} << v;
        if (mask & bit) throw DomainError("induced_subgraph: repeated vertex");
        mask |= bit;
    }
    return induced_subgraph(g, mask);
}

std::vector<Graph> vertex_deck(const Graph& g) {
    if (g.order() == 0) throw DomainError("vertex_deck: the null graph has no cards");
    std::vector<Graph> deck;
    deck.reserve(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) {
        deck.push_back(induced_subgraph(g, g.all_vertices() & ~(VertexMask{1} << v)));
    }
    return deck;
}

std::vector<VertexMask> component_masks(const Graph& g) {
    std::vector<VertexMask> out;
    VertexMask unseen = g.all_vertices();
    while (unseen) {
        VertexMask comp = unseen & (~unseen + 1);
        VertexMask frontier = comp;
        while (frontier) {
            VertexMask next = 0;
            for (VertexMask rest = frontier; rest; rest &= rest - 1) {
                next |= g.neighbours(std::countr_zero(rest));
            }
            frontier = next & ~comp;
            comp |= next;
        }
        out.push_back(comp);
        unseen &= ~comp;
    }
    return out;
}

std::vector<Graph> components(const Graph& g) {
    std::vector<Graph> out;
    for (VertexMask m : component_masks(g)) out.push_back(induced_subgraph(g, m));
    return out;
}

int component_count(const Graph& g) { return static_cast<int>(component_masks(g).size()); }

bool is_connected(const Graph& g) { return component_count(g) == 1; }

std::vector<std::vector<Edge>> block_edge_sets(const Graph& g) {
    // Hopcroft-Tarjan with an explicit edge stack.
    const int n = g.order();
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<Edge> stack;
    std::vector<std::vector<Edge>> out;
    int timer = 0;

    struct Frame {
        int v;
        int parent;
        VertexMask pending;
    };

    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        std::vector<Frame> frames;
        disc[root] = low[root] = timer++;
        frames.push_back({root, -1, g.neighbours(root)});
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.pending) {
                int w = std::countr_zero(f.pending);
                f.pending &= f.pending - 1;
                if (w == f.parent) continue;
                if (disc[w] == -1) {
                    stack.push_back({std::min(f.v, w), std::max(f.v, w)});
                    disc[w] = low[w] = timer++;
                    frames.push_back({w, f.v, g.neighbours(w)});
                } else if (disc[w] < disc[f.v]) {
                    stack.push_back({std::min(f.v, w), std::max(f.v, w)});
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
                continue;
            }
            const int v = f.v;
            const int parent = f.parent;
            frames.pop_back();
            if (parent < 0) continue;
            low[parent] = std::min(low[parent], low[v]);
            if (low[v] >= disc[parent]) {
                const Edge tree_edge{std::min(parent, v), std::max(parent, v)};
                std::vector<Edge> block;
                while (true) {
                    Edge e = stack.back();
                    stack.pop_back();
                    block.push_back(e);
                    if (e == tree_edge) break;
                }
                std::sort(block.begin(), block.end());
                out.push_back(std::move(block));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexMask> block_vertex_masks(const Graph& g) {
    std::vector<VertexMask> out;
    for (const auto& block : block_edge_sets(g)) {
        VertexMask m = 0;
        for (const Edge& e : block) m |= (VertexMask{1} << e.u) | (VertexMask{1} << e.v);
        out.push_back(m);
    }
    return out;
}

std::vector<Graph> blocks(const Graph& g) {
    std::vector<Graph> out;
    for (const auto& block : block_edge_sets(g)) out.push_back(edge_subgraph(g, block));
    return out;
}

int graph_rank(const Graph& g) { return g.order() - component_count(g); }

int graph_corank(const Graph& g) { return g.size() - g.order() + component_count(g); }

Graph edge_subgraph(const Graph& g, std::span<const Edge> edges) {
    VertexMask used = 0;
    for (const Edge& e : edges) {
        if (!g.has_edge(e.u, e.v)) throw DomainError("edge_subgraph: edge not in graph");
        used |= (VertexMask{1} << e.u) | (VertexMask{1} << e.v);
    }
    std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
    int k = 0;
    for (VertexMask rest = used; rest; rest &= rest - 1) index[std::countr_zero(rest)] = k++;
    std::vector<Edge> relabelled;
    relabelled.reserve(edges.size());
    for (const Edge& e : edges) relabelled.push_back({index[e.u], index[e.v]});
    return Graph(k, relabelled);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = a.edges();
    for (const Edge& e : b.edges()) edges.push_back({e.u + a.order(), e.v + a.order()});
    return Graph(a.order() + b.order(), edges);
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw DomainError("cycle_graph needs n >= 3");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) edges.push_back({std::min(u, (u + 1) % n), std::max(u, (u + 1) % n)});
    return Graph(n, edges);
}

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
    return Graph(n, edges);
}

Graph empty_graph(int n) { return Graph(n); }

Graph prism_graph() {
    return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
}

std::string describe(const Graph& g) {
    std::ostringstream os;
    os << "n=" << g.order() << " e=" << g.size() << " {";
    bool first = true;
    for (const Edge& e : g.edges()) {
        os << (first ? "" : " ") << e.u << '-' << e.v;
        first = false;
    }
    os << '}';
    return os.str();
}

}  // namespace reconkit
