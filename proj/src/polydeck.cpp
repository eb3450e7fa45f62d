#include "reconkit/polydeck.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <mutex>

#include "reconkit/errors.hpp"
#include "reconkit/oracle.hpp"
#include "reconkit/partitions.hpp"

namespace reconkit {

PolyDeck build_polydeck(const Graph& g) {
    const int n = g.order();
    if (n < 2) throw DomainError("build_polydeck: need at least two vertices");
    if (n > 20) throw UnsupportedError("build_polydeck: more than 20 vertices");
    PolyDeck d;
    d.n = n;
    const VertexMask all = g.all_vertices();
    for (VertexMask s = 1; s < all; ++s) d.polys.push_back(oracle::charpoly(induced_subgraph(g, all & ~s)));
    return d;
}

void validate_polydeck(const PolyDeck& d) {
    const int n = d.n;
    if (n < 2) throw InconsistentDeckError("polynomial deck: order below 2");
    if (n > 20) throw UnsupportedError("polynomial deck: more than 20 vertices");
    if (d.polys.size() != (std::size_t{1} << n) - 2) throw InconsistentDeckError("polynomial deck: wrong number of entries");
    std::vector<std::size_t> by_degree(static_cast<std::size_t>(n), 0);
    for (const Polynomial& p : d.polys) {
        const int k = p.degree();
        if (k < 1 || k > n - 1) throw InconsistentDeckError("polynomial deck: entry of impossible degree");
        if (p[0] != 1 || p[1] != 0) throw InconsistentDeckError("polynomial deck: entry is not a characteristic polynomial");
        if (k == 1 && p != Polynomial{{1, 0}}) throw InconsistentDeckError("polynomial deck: degree 1 entry differs from x");
        ++by_degree[k];
    }
    for (int k = 1; k < n; ++k)
        if (Integer(by_degree[k]) != binomial(n, k)) throw InconsistentDeckError("polynomial deck: wrong degree profile");
}

std::vector<Integer> low_coeffs(const PolyDeck& d) {
    validate_polydeck(d);
    const int n = d.n;
    std::vector<Integer> sums(static_cast<std::size_t>(n), 0);
    for (const Polynomial& p : d.polys) {
        if (p.degree() != n - 1) continue;
        for (int i = 0; i < n; ++i) sums[i] += p[i];
    }
    for (int i = 0; i < n; ++i) sums[i] = exact_div<InconsistentDeckError>(sums[i], Integer(n - i), "low_coeffs");
    return sums;
}

std::vector<int> degree_sequence(const PolyDeck& d) {
    if (d.n < 3) throw NotReconstructibleError("order-too-small", "degree_sequence: needs at least three vertices");
    const std::vector<Integer> low = low_coeffs(d);
    std::vector<int> degrees;
    for (const Polynomial& p : d.polys) {
        if (p.degree() != d.n - 1) continue;
        const Integer deg = p[2] - low[2];
        if (deg < 0 || deg > d.n - 1) throw InconsistentDeckError("degree_sequence: impossible vertex degree");
        degrees.push_back(static_cast<int>(deg));
    }
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

namespace {

// p(A -> H) for a graph with coefficients `c` of degree k: the signed product.
Integer signed_product(const std::vector<Integer>& c, int k, const std::vector<int>& a) {
    Integer r = 1;
    for (int x : a) {
        if (x > k) return 0;
        r *= (x % 2 == 0) ? c[x] : Integer(-c[x]);
    }
    return r;
}

Integer c_lambda_with(const PolyDeck& d, const std::vector<Integer>& low, const std::vector<int>& a) {
    const int n = d.n;
    for (int x : a) {
        if (x < 2) throw DomainError("c_lambda: parts must be at least 2");
        if (x >= n) throw UnsupportedError("c_lambda: a part equal to the order cannot be read from the deck");
    }
    Integer total = signed_product(low, n, a);
    for (const Polynomial& p : d.polys) {
        const int k = p.degree();
        const Integer term = signed_product(p.coeffs, k, a);
        if ((n - k) % 2 == 0) total += term;
        else total -= term;
    }
    return total;
}

struct Piece {
    VertexMask vertices;
    std::uint32_t edges;
    int order;
    int weight;
};

// Elementary subgraphs of a small graph with their (-1)^r 2^s weights.
std::vector<Piece> elementary_pieces(const Graph& f) {
    const std::vector<Edge> es = f.edges();
    const int m = static_cast<int>(es.size());
    if (m > 24) throw UnsupportedError("elementary_pieces: too many edges");
    std::vector<Piece> out;
    for (std::uint32_t s = 1; s < (std::uint32_t{1} << m); ++s) {
        std::vector<Edge> chosen;
        for (int i = 0; i < m; ++i)
            if ((s >> i) & 1U) chosen.push_back(es[i]);
        const Graph h = edge_subgraph(f, chosen);
        bool ok = true;
        int cycles = 0;
        for (const Graph& comp : components(h)) {
            if (comp.order() == 2) continue;
            for (int u = 0; u < comp.order() && ok; ++u) ok = comp.degree(u) == 2;
            if (!ok) break;
            ++cycles;
        }
        if (!ok) continue;
        VertexMask vs = 0;
        for (const Edge& e : chosen) vs |= (VertexMask{1} << e.u) | (VertexMask{1} << e.v);
        const int rank = graph_rank(h);
        out.push_back({vs, s, std::popcount(vs), ((rank % 2) ? -1 : 1) * (1 << cycles)});
    }
    return out;
}

std::vector<std::vector<int>> nontrivial_refinements(const std::vector<int>& lambda0) {
    int n = 0;
    for (int x : lambda0) n += x;
    std::vector<std::vector<int>> out;
    for (const auto& mu : integer_partitions(n, 2, n))
        if (mu != lambda0 && refines(mu, lambda0)) out.push_back(mu);
    return out;
}

Integer sachs_sign(const std::vector<int>& lambda) {
    int cycles = 0;
    for (int x : lambda) cycles += x >= 3;
    Integer w = Integer(1) << cycles;
    return (lambda.size() % 2) ? Integer(-w) : w;
}

class ElementarySolver {
public:
    explicit ElementarySolver(const PolyDeck& d) : d_(d), low_(low_coeffs(d)) {}

    Integer count(const std::vector<int>& lambda0) {
        if (auto it = memo_.find(lambda0); it != memo_.end()) return it->second;
        Integer num = c_lambda_with(d_, low_, lambda0);
        for (const auto& mu : nontrivial_refinements(lambda0)) {
            const Integer cov = elementary_cover(lambda0, mu);
            if (cov != 0) num -= cov * count(mu);
        }
        Integer r = exact_div<InconsistentDeckError>(num, elementary_cover(lambda0, lambda0), "count_elementary");
        memo_.emplace(lambda0, r);
        return r;
    }

    Integer cover_from_deck(const std::vector<int>& a) { return c_lambda_with(d_, low_, a); }
    const std::vector<Integer>& low() const { return low_; }

private:
    const PolyDeck& d_;
    std::vector<Integer> low_;
    std::map<std::vector<int>, Integer> memo_;
};

void check_nontrivial(const PolyDeck& d, const std::vector<int>& lambda0) {
    int sum = 0;
    for (int x : lambda0) {
        if (x < 2) throw DomainError("count_elementary: parts must be at least 2");
        sum += x;
    }
    if (sum != d.n) throw DomainError("count_elementary: partition must sum to the order");
    if (lambda0.size() < 2) throw DomainError("count_elementary: partition needs at least two parts");
}

}  // namespace

Integer c_lambda(const PolyDeck& d, const std::vector<int>& a) { return c_lambda_with(d, low_coeffs(d), a); }

Graph elementary_graph(const std::vector<int>& lambda) {
    Graph g;
    for (int x : lambda) {
        if (x < 2) throw DomainError("elementary_graph: parts must be at least 2");
        g = disjoint_union(g, x == 2 ? complete_graph(2) : cycle_graph(x));
    }
    return g;
}

Integer elementary_cover(const std::vector<int>& lambda, const std::vector<int>& target) {
    static std::mutex mu;
    static std::map<std::pair<std::vector<int>, std::vector<int>>, Integer> cache;
    const auto key = std::make_pair(normalized(lambda), normalized(target));
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    const Graph f = elementary_graph(key.second);
    const std::vector<Piece> pieces = elementary_pieces(f);
    const std::uint32_t all_edges = f.size() == 0 ? 0 : (std::uint32_t{1} << f.size()) - 1;
    Integer total = 0;
    std::function<void(std::size_t, VertexMask, std::uint32_t, Integer)> rec =
        [&](std::size_t j, VertexMask used, std::uint32_t edges, Integer w) {
            if (j == key.first.size()) {
                if (used == f.all_vertices() && edges == all_edges) total += w;
                return;
            }
            for (const Piece& p : pieces)
                if (p.order == key.first[j] && !(p.vertices & used)) rec(j + 1, used | p.vertices, edges | p.edges, w * p.weight);
        };
    rec(0, 0, 0, 1);
    std::lock_guard lock(mu);
    cache.emplace(key, total);
    return total;
}

Integer count_elementary(const PolyDeck& d, const std::vector<int>& lambda0) {
    const std::vector<int> l = normalized(lambda0);
    check_nontrivial(d, l);
    ElementarySolver s(d);
    return s.count(l);
}

Rational count_elementary_chains(const PolyDeck& d, const std::vector<int>& lambda0) {
    const std::vector<int> l = normalized(lambda0);
    check_nontrivial(d, l);
    ElementarySolver s(d);
    // Chains lambda_q < ... < lambda_0: (-1)^q c(lambda_q -> G) prod c(lambda_i -> F_{lambda_{i+1}})
    // over prod c(lambda_i -> F_{lambda_i}).
    Rational total = 0;
    std::function<void(const std::vector<int>&, Rational, int)> rec = [&](const std::vector<int>& top, Rational w, int q) {
        w /= Rational(elementary_cover(top, top));
        const Rational term = w * Rational(s.cover_from_deck(top));
        total += (q % 2) ? Rational(-term) : term;
        for (const auto& mu : nontrivial_refinements(top)) {
            const Integer cov = elementary_cover(top, mu);
            if (cov != 0) rec(mu, w * Rational(cov), q + 1);
        }
    };
    rec(l, Rational(1), 0);
    return total;
}

Polynomial charpoly_from_polydeck(const PolyDeck& d, bool assert_nonhamiltonian) {
    validate_polydeck(d);
    const int n = d.n;
    bool leaf = false;
    if (n >= 3) {
        const std::vector<int> degs = degree_sequence(d);
        leaf = std::find(degs.begin(), degs.end(), 1) != degs.end();
    }
    if (!leaf && !assert_nonhamiltonian) {
        throw NotReconstructibleError("no-degree-one-vertex",
                                      "charpoly_from_polydeck: no vertex of degree 1 is visible and non-hamiltonicity was not asserted");
    }
    ElementarySolver s(d);
    Polynomial p;
    p.coeffs = s.low();
    Integer cn = 0;
    for (const auto& lambda : integer_partitions(n, 2, n)) {
        if (lambda.size() < 2) continue;
        cn += sachs_sign(lambda) * s.count(lambda);
    }
    p.coeffs.push_back(cn);
    return p;
}

}  // namespace reconkit
