#pragma once

// Reference computations for the tests. They go straight to permutations and
// edge subsets and use nothing from the library beyond the Graph type.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "reconkit/graph.hpp"
#include "reconkit/integer.hpp"

namespace reftest {

using reconkit::Edge;
using reconkit::Graph;
using reconkit::Integer;

inline Graph make(int n, const std::vector<std::pair<int, int>>& es) {
    std::vector<Edge> edges;
    for (auto [u, v] : es) edges.push_back({u, v});
    return Graph(n, edges);
}

inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
    std::vector<Edge> es;
    for (const Edge& e : g.edges()) {
        int a = perm[e.u], b = perm[e.v];
        es.push_back({std::min(a, b), std::max(a, b)});
    }
    return Graph(g.order(), es);
}

inline Graph random_relabel(const Graph& g, std::mt19937& rng) {
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return relabel(g, perm);
}

inline Graph random_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) es.push_back({u, v});
    return Graph(n, es);
}

/// det(xI - A) by the Leibniz expansion, coefficients c_0..c_n of x^(n-i).
inline std::vector<Integer> charpoly(const Graph& g) {
    const int n = g.order();
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        int moved = 0;
        long prod = 1;
        for (int i = 0; i < n && prod; ++i) {
            if (p[i] == i) continue;
            ++moved;
            prod *= g.has_edge(i, p[i]) ? -1 : 0;
        }
        if (!prod) continue;
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) inversions += p[i] > p[j];
        c[moved] += (inversions % 2 ? -prod : prod);
    } while (std::next_permutation(p.begin(), p.end()));
    return c;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    std::vector<int> p(static_cast<std::size_t>(a.order()));
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (const Edge& e : a.edges())
            if (!b.has_edge(p[e.u], p[e.v])) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

template <class Fn>
void for_each_edge_subset(const Graph& g, Fn fn) {
    const std::vector<Edge> es = g.edges();
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << es.size()); ++s) {
        std::vector<Edge> chosen;
        for (std::size_t i = 0; i < es.size(); ++i)
            if ((s >> i) & 1U) chosen.push_back(es[i]);
        fn(chosen);
    }
}

/// Subgraph spanned by an edge list, vertices renumbered in first-seen order.
inline Graph spanned(const std::vector<Edge>& es) {
    std::map<int, int> id;
    for (const Edge& e : es) {
        id.emplace(e.u, static_cast<int>(id.size()));
        id.emplace(e.v, static_cast<int>(id.size()));
    }
    std::vector<Edge> out;
    for (const Edge& e : es) {
        int a = id[e.u], b = id[e.v];
        out.push_back({std::min(a, b), std::max(a, b)});
    }
    return Graph(static_cast<int>(id.size()), out);
}

inline Integer count_subgraphs(const Graph& g, const Graph& f) {
    Integer total = 0;
    for_each_edge_subset(g, [&](const std::vector<Edge>& es) {
        if (static_cast<int>(es.size()) == f.size() && reftest::isomorphic(spanned(es), f)) ++total;
    });
    return total;
}

inline Integer count_induced(const Graph& g, const Graph& f) {
    Integer total = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s) {
        if (__builtin_popcountll(s) != f.order()) continue;
        if (reftest::isomorphic(reconkit::induced_subgraph(g, s), f)) ++total;
    }
    return total;
}

inline int components(int n, const std::vector<Edge>& es) {
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int comp = n;
    for (const Edge& e : es) {
        int a = find(e.u), b = find(e.v);
        if (a != b) {
            parent[a] = b;
            --comp;
        }
    }
    return comp;
}

inline Integer spanning_trees(const Graph& g) {
    Integer total = 0;
    for_each_edge_subset(g, [&](const std::vector<Edge>& es) {
        if (static_cast<int>(es.size()) == g.order() - 1 && components(g.order(), es) == 1) ++total;
    });
    return total;
}

/// Hamiltonian cycles as subgraphs; K2 counts as one.
inline Integer hamiltonian_cycles(const Graph& g) {
    const int n = g.order();
    if (n == 2) return g.size();
    if (n < 3) return 0;
    std::vector<int> p(static_cast<std::size_t>(n - 1));
    std::iota(p.begin(), p.end(), 1);
    Integer directed = 0;
    do {
        bool ok = g.has_edge(0, p.front()) && g.has_edge(p.back(), 0);
        for (std::size_t i = 0; ok && i + 1 < p.size(); ++i) ok = g.has_edge(p[i], p[i + 1]);
        if (ok) ++directed;
    } while (std::next_permutation(p.begin(), p.end()));
    return directed / 2;
}

/// Rank polynomial over edge subsets: (r, s) = (v - comp, e - v + comp).
inline std::map<std::pair<int, int>, Integer> rankpoly(const Graph& g) {
    std::map<std::pair<int, int>, Integer> out;
    for_each_edge_subset(g, [&](const std::vector<Edge>& es) {
        const int r = g.order() - components(g.order(), es);
        out[{r, static_cast<int>(es.size()) - r}] += 1;
    });
    return out;
}

}  // namespace reftest
