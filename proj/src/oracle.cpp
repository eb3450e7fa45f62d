#include "reconkit/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>

#include "reconkit/errors.hpp"

namespace reconkit::oracle {

namespace {

using EdgeMask = std::uint64_t;

struct Piece {
    VertexMask vertices = 0;
    EdgeMask edges = 0;
    friend auto operator<=>(const Piece&, const Piece&) = default;
};

struct EdgeIndex {
    std::vector<Edge> edges;
    std::vector<std::vector<int>> id;

    explicit EdgeIndex(const Graph& g) : edges(g.edges()) {
        if (edges.size() > 64) throw UnsupportedError("oracle: more than 64 edges");
        id.assign(static_cast<std::size_t>(g.order()), std::vector<int>(static_cast<std::size_t>(g.order()), -1));
        for (std::size_t k = 0; k < edges.size(); ++k) {
            id[edges[k].u][edges[k].v] = id[edges[k].v][edges[k].u] = static_cast<int>(k);
        }
    }

    EdgeMask bit(int u, int v) const { return EdgeMask{1} << id[u][v]; }
};

VertexMask endpoints(const EdgeIndex& ix, EdgeMask mask) {
    VertexMask vs = 0;
    for (; mask; mask &= mask - 1) {
        const Edge& e = ix.edges[std::countr_zero(mask)];
        vs |= (VertexMask{1} << e.u) | (VertexMask{1} << e.v);
    }
    return vs;
}

// Components of the graph (vertices, edges of `mask`), as (vertex count, edge count).
std::vector<std::pair<int, int>> component_shapes(const EdgeIndex& ix, int n, VertexMask vertices, EdgeMask mask) {
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) parent[v] = v;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (EdgeMask m = mask; m; m &= m - 1) {
        const Edge& e = ix.edges[std::countr_zero(m)];
        parent[find(e.u)] = find(e.v);
    }
    std::map<int, std::pair<int, int>> shapes;
    for (VertexMask vs = vertices; vs; vs &= vs - 1) ++shapes[find(std::countr_zero(vs))].first;
    for (EdgeMask m = mask; m; m &= m - 1) ++shapes[find(ix.edges[std::countr_zero(m)].u)].second;
    std::vector<std::pair<int, int>> out;
    for (auto& [root, shape] : shapes) out.push_back(shape);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

bool connected_spanning(const EdgeIndex& ix, int n, VertexMask vertices, EdgeMask mask) {
    if (vertices == 0) return false;
    return component_shapes(ix, n, vertices, mask).size() == 1;
}

void for_each_subset_of_size(int m, int k, const std::function<void(EdgeMask)>& fn) {
    if (k < 0 || k > m) return;
    std::function<void(int, int, EdgeMask)> rec = [&](int next, int left, EdgeMask acc) {
        if (left == 0) {
            fn(acc);
            return;
        }
        for (int i = next; i <= m - left; ++i) rec(i + 1, left - 1, acc | (EdgeMask{1} << i));
    };
    rec(0, k, 0);
}

std::vector<Piece> cycles(const Graph& g, const EdgeIndex& ix, int length) {
    std::vector<Piece> out;
    if (length == 2) {
        for (const Edge& e : ix.edges) out.push_back({(VertexMask{1} << e.u) | (VertexMask{1} << e.v), ix.bit(e.u, e.v)});
        return out;
    }
    if (length < 3) return out;
    const int n = g.order();
    std::vector<int> path;
    std::function<void(int, VertexMask)> walk = [&](int u, VertexMask used) {
        if (static_cast<int>(path.size()) == length) {
            if (g.has_edge(u, path.front()) && path[1] < path.back()) {
                Piece c{used, 0};
                for (std::size_t k = 0; k + 1 < path.size(); ++k) c.edges |= ix.bit(path[k], path[k + 1]);
                c.edges |= ix.bit(path.back(), path.front());
                out.push_back(c);
            }
            return;
        }
        for (VertexMask next = g.neighbours(u) & ~used; next; next &= next - 1) {
            const int w = std::countr_zero(next);
            if (w <= path.front()) continue;
            path.push_back(w);
            walk(w, used | (VertexMask{1} << w));
            path.pop_back();
        }
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        walk(s, VertexMask{1} << s);
    }
    return out;
}

// Elementary subgraphs: vertex-disjoint unions of edges and cycles.
struct Elementary {
    VertexMask vertices;
    std::vector<int> sizes;  // non-increasing component orders
};

void for_each_elementary(const Graph& g, const std::function<void(const Elementary&)>& fn) {
    const int n = g.order();
    std::vector<int> sizes;
    std::function<void(int, VertexMask, VertexMask)> rec = [&](int u, VertexMask used, VertexMask covered) {
        while (u < n && ((used >> u) & 1U)) ++u;
        if (u == n) {
            std::vector<int> s = sizes;
            std::sort(s.begin(), s.end(), std::greater<>());
            fn({covered, s});
            return;
        }
        const VertexMask ubit = VertexMask{1} << u;
        rec(u + 1, used | ubit, covered);
        for (VertexMask nb = g.neighbours(u) & ~used; nb; nb &= nb - 1) {
            const int w = std::countr_zero(nb);
            if (w < u) continue;
            const VertexMask pair = ubit | (VertexMask{1} << w);
            sizes.push_back(2);
            rec(u + 1, used | pair, covered | pair);
            sizes.pop_back();
        }
        // Cycles through u with u as the smallest vertex.
        std::vector<int> path{u};
        std::function<void(int, VertexMask)> walk = [&](int x, VertexMask in_cycle) {
            if (path.size() >= 3 && g.has_edge(x, u) && path[1] < path.back()) {
                sizes.push_back(static_cast<int>(path.size()));
                rec(u + 1, used | in_cycle, covered | in_cycle);
                sizes.pop_back();
            }
            for (VertexMask nb = g.neighbours(x) & ~used & ~in_cycle; nb; nb &= nb - 1) {
                const int w = std::countr_zero(nb);
                if (w <= u) continue;
                path.push_back(w);
                walk(w, in_cycle | (VertexMask{1} << w));
                path.pop_back();
            }
        };
        walk(u, ubit);
    };
    rec(0, 0, 0);
}

Integer power_of_two(int s) { return Integer(1) << s; }

Integer sachs_weight(const std::vector<int>& sizes) {
    int cycles_count = 0;
    for (int s : sizes) cycles_count += s >= 3;
    Integer w = power_of_two(cycles_count);
    return sizes.size() % 2 == 1 ? Integer(-w) : w;
}

// Tuples of pieces, one from each list, keyed by the union.
std::map<Piece, Integer> tuple_unions(const std::vector<std::vector<Piece>>& lists) {
    std::map<Piece, Integer> states{{Piece{}, Integer(1)}};
    for (const auto& list : lists) {
        std::map<Piece, Integer> next;
        for (const auto& [state, count] : states) {
            for (const Piece& piece : list) {
                next[Piece{state.vertices | piece.vertices, state.edges | piece.edges}] += count;
            }
        }
        states = std::move(next);
    }
    return states;
}

std::vector<Piece> copies(const Graph& f, const Graph& h, const EdgeIndex& ix) {
    std::set<Piece> found;
    const int k = f.order();
    std::vector<int> image(static_cast<std::size_t>(k), -1);
    std::function<void(int, VertexMask)> extend = [&](int x, VertexMask used) {
        if (x == k) {
            Piece p{used, 0};
            for (const Edge& e : f.edges()) p.edges |= ix.bit(image[e.u], image[e.v]);
            found.insert(p);
            return;
        }
        for (int w = 0; w < h.order(); ++w) {
            if ((used >> w) & 1U) continue;
            bool ok = true;
            for (int y = 0; y < x && ok; ++y)
                if (f.has_edge(x, y)) ok = h.has_edge(w, image[y]);
            if (!ok) continue;
            image[x] = w;
            extend(x + 1, used | (VertexMask{1} << w));
        }
        image[x] = -1;
    };
    extend(0, 0);
    return {found.begin(), found.end()};
}

}  // namespace

Integer psi(const Graph& g, int i) {
    if (i < 2 || i > g.order()) return 0;
    EdgeIndex ix(g);
    return static_cast<unsigned>(cycles(g, ix, i).size());
}

Integer tr(const Graph& g) {
    const int n = g.order();
    if (n == 0) return 0;
    if (n == 1) return 1;
    EdgeIndex ix(g);
    Integer total = 0;
    for_each_subset_of_size(g.size(), n - 1, [&](EdgeMask m) {
        if (endpoints(ix, m) == g.all_vertices() && connected_spanning(ix, n, g.all_vertices(), m)) ++total;
    });
    return total;
}

Integer tr_determinant(const Graph& g) {
    const int n = g.order();
    if (n == 0) return 0;
    if (n == 1) return 1;
    const int k = n - 1;
    std::vector<std::vector<Integer>> a(static_cast<std::size_t>(k), std::vector<Integer>(k, 0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) a[i][j] = i == j ? Integer(g.degree(i)) : Integer(g.has_edge(i, j) ? -1 : 0);
    Integer sign = 1, prev = 1;
    for (int p = 0; p < k; ++p) {
        if (a[p][p] == 0) {
            int swap_row = -1;
            for (int r = p + 1; r < k; ++r)
                if (a[r][p] != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return 0;
            std::swap(a[p], a[swap_row]);
            sign = -sign;
        }
        for (int i = p + 1; i < k; ++i) {
            for (int j = p + 1; j < k; ++j) a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / prev;
        }
        prev = a[p][p];
    }
    return sign * a[k - 1][k - 1];
}

Integer ham(const Graph& g) {
    if (g.order() == 2) return g.size();
    if (g.order() < 3) return 0;
    return psi(g, g.order());
}

Integer uni(const Graph& g, int r) {
    const int n = g.order();
    if (r < 3 || r > n) return 0;
    EdgeIndex ix(g);
    Integer total = 0;
    for_each_subset_of_size(g.size(), n, [&](EdgeMask m) {
        if (!connected_spanning(ix, n, g.all_vertices(), m) || endpoints(ix, m) != g.all_vertices()) return;
        std::vector<int> degree(static_cast<std::size_t>(n), 0);
        for (EdgeMask x = m; x; x &= x - 1) {
            const Edge& e = ix.edges[std::countr_zero(x)];
            ++degree[e.u];
            ++degree[e.v];
        }
        VertexMask alive = g.all_vertices();
        EdgeMask live = m;
        bool pruned = true;
        while (pruned) {
            pruned = false;
            for (int v = 0; v < n; ++v) {
                if (((alive >> v) & 1U) && degree[v] == 1) {
                    alive &= ~(VertexMask{1} << v);
                    for (EdgeMask x = live; x; x &= x - 1) {
                        const int id = std::countr_zero(x);
                        const Edge& e = ix.edges[id];
                        if (e.u == v || e.v == v) {
                            live &= ~(EdgeMask{1} << id);
                            --degree[e.u];
                            --degree[e.v];
                        }
                    }
                    pruned = true;
                }
            }
        }
        if (std::popcount(alive) == r) ++total;
    });
    return total;
}

Polynomial charpoly(const Graph& g) {
    const int n = g.order();
    Polynomial p;
    p.coeffs.assign(static_cast<std::size_t>(n) + 1, 0);
    for_each_elementary(g, [&](const Elementary& e) { p.coeffs[std::popcount(e.vertices)] += sachs_weight(e.sizes); });
    return p;
}

Polynomial charpoly_leverrier(const Graph& g) {
    const int n = g.order();
    using Matrix = std::vector<std::vector<Integer>>;
    Matrix a(static_cast<std::size_t>(n), std::vector<Integer>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = g.has_edge(i, j) ? 1 : 0;
    auto mul = [&](const Matrix& x, const Matrix& y) {
        Matrix z(static_cast<std::size_t>(n), std::vector<Integer>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                if (x[i][k] == 0) continue;
                for (int j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
            }
        return z;
    };
    Polynomial p;
    p.coeffs.assign(static_cast<std::size_t>(n) + 1, 0);
    p.coeffs[0] = 1;
    Matrix m(static_cast<std::size_t>(n), std::vector<Integer>(n, 0));
    for (int k = 1; k <= n; ++k) {
        Matrix am = mul(a, m);
        for (int i = 0; i < n; ++i) am[i][i] += p.coeffs[k - 1];
        m = std::move(am);
        Matrix t = mul(a, m);
        Integer trace = 0;
        for (int i = 0; i < n; ++i) trace += t[i][i];
        p.coeffs[k] = exact_div<InvalidMatrixError>(-trace, Integer(k), "charpoly_leverrier");
    }
    return p;
}

RankPolynomial rankpoly(const Graph& g) {
    if (g.size() > 16) throw UnsupportedError("rankpoly oracle refuses graphs with more than 16 edges");
    EdgeIndex ix(g);
    RankPolynomial out;
    const int n = g.order();
    for (EdgeMask m = 0; m < (EdgeMask{1} << g.size()); ++m) {
        const VertexMask vs = endpoints(ix, m);
        const int v = std::popcount(vs);
        const int e = std::popcount(m);
        const int comps = static_cast<int>(component_shapes(ix, n, vs, m).size());
        out[{v - comps, e - v + comps}] += 1;
    }
    return out;
}

Integer elementary_count(const Graph& g, const std::vector<int>& lambda) {
    std::vector<int> target = lambda;
    std::sort(target.begin(), target.end(), std::greater<>());
    Integer total = 0;
    for_each_elementary(g, [&](const Elementary& e) {
        if (e.sizes == target) ++total;
    });
    return total;
}

Integer cover_count(std::span<const Graph> s, const Graph& h) {
    EdgeIndex ix(h);
    std::vector<std::vector<Piece>> lists;
    for (const Graph& f : s) lists.push_back(copies(f, h, ix));
    const Piece whole{h.all_vertices(), h.size() == 64 ? ~EdgeMask{0} : (EdgeMask{1} << h.size()) - 1};
    const auto states = tuple_unions(lists);
    const auto it = states.find(whole);
    return it == states.end() ? Integer(0) : it->second;
}

namespace {

std::map<Piece, Integer> cycle_tuples(const Graph& g, const std::vector<int>& a) {
    EdgeIndex ix(g);
    std::vector<std::vector<Piece>> lists;
    for (int len : a) lists.push_back(cycles(g, ix, len));
    return tuple_unions(lists);
}

}  // namespace

Integer c(const Graph& g, const std::vector<int>& a) {
    Integer total = 0;
    for (const auto& [piece, count] : cycle_tuples(g, a))
        if (piece.vertices == g.all_vertices()) total += count;
    return total;
}

Integer con(const Graph& g, const std::vector<int>& a) {
    EdgeIndex ix(g);
    Integer total = 0;
    for (const auto& [piece, count] : cycle_tuples(g, a))
        if (piece.vertices == g.all_vertices() && connected_spanning(ix, g.order(), piece.vertices, piece.edges))
            total += count;
    return total;
}

Integer p(const Graph& g, const std::vector<int>& a) {
    Integer total = 1;
    for (int len : a) total *= psi(g, len);
    return total;
}

Integer signed_c(const Graph& g, const std::vector<int>& a) {
    std::map<int, std::vector<std::pair<VertexMask, Integer>>> by_order;
    for_each_elementary(g, [&](const Elementary& e) {
        if (e.vertices == 0) return;
        const int order = std::popcount(e.vertices);
        const int rank = order - static_cast<int>(e.sizes.size());
        int corank = 0;
        for (int s : e.sizes) corank += s >= 3;
        Integer w = power_of_two(corank);
        if (rank % 2 == 1) w = -w;
        by_order[order].emplace_back(e.vertices, w);
    });
    std::map<VertexMask, Integer> states{{0, Integer(1)}};
    for (int len : a) {
        std::map<VertexMask, Integer> next;
        for (const auto& [vs, weight] : states)
            for (const auto& [piece, w] : by_order[len]) next[vs | piece] += weight * w;
        states = std::move(next);
    }
    const auto it = states.find(g.all_vertices());
    return it == states.end() ? Integer(0) : it->second;
}

Integer kedge_connected(const Graph& g, int k) {
    const int n = g.order();
    EdgeIndex ix(g);
    Integer total = 0;
    for_each_subset_of_size(g.size(), k, [&](EdgeMask m) {
        if (n == 1 ? m == 0 : endpoints(ix, m) == g.all_vertices() && connected_spanning(ix, n, g.all_vertices(), m))
            ++total;
    });
    return total;
}

Integer lcompo(const Graph& g, const std::vector<std::pair<int, int>>& spec) {
    if (g.size() > 20) throw UnsupportedError("lcompo oracle refuses graphs with more than 20 edges");
    std::vector<std::pair<int, int>> target = spec;
    std::sort(target.begin(), target.end(), std::greater<>());
    EdgeIndex ix(g);
    Integer total = 0;
    for (EdgeMask m = 0; m < (EdgeMask{1} << g.size()); ++m) {
        if (component_shapes(ix, g.order(), g.all_vertices(), m) == target) ++total;
    }
    return total;
}

}  // namespace reconkit::oracle
