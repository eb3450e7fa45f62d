#include <doctest.h>

#include <algorithm>
#include <random>

#include "reconkit/errors.hpp"
#include "reconkit/isotype.hpp"
#include "reconkit/oracle.hpp"
#include "reconkit/partitions.hpp"
#include "reconkit/polydeck.hpp"
#include "support.hpp"

using namespace reconkit;

namespace {

Polynomial poly(std::initializer_list<int> c) {
    Polynomial p;
    for (int x : c) p.coeffs.push_back(x);
    return p;
}

std::vector<Polynomial> sorted(std::vector<Polynomial> v) {
    std::sort(v.begin(), v.end(), [](const Polynomial& a, const Polynomial& b) { return a.coeffs < b.coeffs; });
    return v;
}

bool has_leaf(const Graph& g) {
    for (int u = 0; u < g.order(); ++u)
        if (g.degree(u) == 1) return true;
    return false;
}

// Signed tuples of elementary subgraphs spanning V(g) with orders a, straight
// from the Sachs weights of the pieces.
Integer signed_tuples(const Graph& g, const std::vector<int>& a) {
    struct Piece {
        VertexMask v;
        int w;
    };
    std::vector<Piece> pieces;
    reftest::for_each_edge_subset(g, [&](const std::vector<Edge>& es) {
        if (es.empty()) return;
        const Graph h = reftest::spanned(es);
        int cycles = 0;
        for (const Graph& c : components(h)) {
            if (c.order() == 2) continue;
            for (int u = 0; u < c.order(); ++u)
                if (c.degree(u) != 2) return;
            ++cycles;
        }
        VertexMask v = 0;
        for (const Edge& e : es) v |= (VertexMask{1} << e.u) | (VertexMask{1} << e.v);
        const int rank = h.order() - reftest::components(h.order(), h.edges());
        pieces.push_back({v, (rank % 2 ? -1 : 1) * (1 << cycles)});
    });
    Integer total = 0;
    std::function<void(std::size_t, VertexMask, Integer)> rec = [&](std::size_t k, VertexMask used, Integer w) {
        if (k == a.size()) {
            if (used == g.all_vertices()) total += w;
            return;
        }
        for (const Piece& p : pieces)
            if (std::popcount(p.v) == a[k] && !(p.v & used)) rec(k + 1, used | p.v, w * p.w);
    };
    rec(0, 0, 1);
    return total;
}

}  // namespace

TEST_CASE("building polynomial decks") {
    const PolyDeck p3 = build_polydeck(path_graph(3));
    CHECK(p3.n == 3);
    CHECK(sorted(p3.polys) == sorted({poly({1, 0, -1}), poly({1, 0, -1}), poly({1, 0, 0}), poly({1, 0}), poly({1, 0}), poly({1, 0})}));
    CHECK(build_polydeck(complete_graph(2)).polys == std::vector<Polynomial>{poly({1, 0}), poly({1, 0})});
    const PolyDeck k3 = build_polydeck(complete_graph(3));
    CHECK(std::count(k3.polys.begin(), k3.polys.end(), poly({1, 0, -1})) == 3);
    CHECK(std::count(k3.polys.begin(), k3.polys.end(), poly({1, 0})) == 3);
    CHECK_THROWS_AS(build_polydeck(Graph(1)), DomainError);
}

TEST_CASE("deck validation") {
    PolyDeck d = build_polydeck(path_graph(4));
    CHECK_NOTHROW(validate_polydeck(d));
    PolyDeck missing = d;
    missing.polys.pop_back();
    CHECK_THROWS_AS(validate_polydeck(missing), InconsistentDeckError);
    PolyDeck wrong = d;
    for (Polynomial& p : wrong.polys)
        if (p.degree() == 1) {
            p = poly({1, 1});
            break;
        }
    CHECK_THROWS_AS(validate_polydeck(wrong), InconsistentDeckError);
}

TEST_CASE("low coefficients") {
    const auto p3 = low_coeffs(build_polydeck(path_graph(3)));
    REQUIRE(p3.size() == 3);
    CHECK(p3[0] == 1);
    CHECK(p3[1] == 0);
    CHECK(p3[2] == -2);
    CHECK(low_coeffs(build_polydeck(complete_graph(3)))[2] == -3);
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            const auto low = low_coeffs(build_polydeck(g));
            const auto want = reftest::charpoly(g);
            for (int i = 0; i < n; ++i) CHECK(low[i] == want[i]);
        }
    // the degree n-1 entries of a real deck always divide; a tampered one does not
    PolyDeck d = build_polydeck(path_graph(3));
    for (Polynomial& p : d.polys)
        if (p.degree() == 2) {
            p = poly({1, 0, -2});
            break;
        }
    CHECK_NOTHROW(low_coeffs(d));
    PolyDeck e = build_polydeck(path_graph(4));
    for (Polynomial& p : e.polys)
        if (p.degree() == 3) {
            p.coeffs[2] += 1;
            break;
        }
    CHECK_THROWS_AS(low_coeffs(e), InconsistentDeckError);
}

TEST_CASE("degree sequences from the deck") {
    for (int n = 3; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            std::vector<int> want;
            for (int u = 0; u < n; ++u) want.push_back(g.degree(u));
            std::sort(want.begin(), want.end());
            CHECK(degree_sequence(build_polydeck(g)) == want);
        }
}

TEST_CASE("signed spanning covers read from the deck") {
    CHECK(c_lambda(build_polydeck(cycle_graph(4)), {2, 2}) == signed_tuples(cycle_graph(4), {2, 2}));
    CHECK(c_lambda(build_polydeck(cycle_graph(4)), {2, 2}) == 4);
    CHECK(c_lambda(build_polydeck(prism_graph()), {3}) == 0);
    CHECK_THROWS_AS(c_lambda(build_polydeck(path_graph(3)), {3}), UnsupportedError);
    CHECK_THROWS_AS(c_lambda(build_polydeck(cycle_graph(4)), {4}), UnsupportedError);
    for (int n = 3; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            const PolyDeck d = build_polydeck(g);
            for (int m = 2; m <= n; ++m)
                for (const auto& a : integer_partitions(m, 2, n - 1)) {
                    CHECK(c_lambda(d, a) == signed_tuples(g, a));
                    CHECK(c_lambda(d, a) == oracle::signed_c(g, a));
                }
        }
}

TEST_CASE("shuffling the deck changes nothing") {
    std::mt19937 rng(17);
    for (const Graph& g : graph_corpus(4, 6, true)) {
        PolyDeck d = build_polydeck(g);
        PolyDeck s = d;
        std::shuffle(s.polys.begin(), s.polys.end(), rng);
        for (const auto& a : integer_partitions(g.order(), 2, g.order() - 1)) CHECK(c_lambda(d, a) == c_lambda(s, a));
        CHECK(low_coeffs(d) == low_coeffs(s));
    }
}

TEST_CASE("covers between elementary graphs") {
    for (int n = 2; n <= 8; ++n)
        for (const auto& lambda : integer_partitions(n, 2, n)) CHECK(elementary_cover(lambda, lambda) != 0);
    // a single piece of order 4 is either C4 or a perfect matching
    CHECK(elementary_cover({4}, {2, 2}) == 1);
    CHECK(elementary_cover({4}, {4}) == -2);
    CHECK(elementary_cover({2, 2}, {2, 2}) == 2);
    CHECK(elementary_cover({2, 2}, {4}) == 0);
    for (int n = 4; n <= 8; ++n)
        for (const auto& lambda : integer_partitions(n, 2, n))
            for (const auto& mu : integer_partitions(n, 2, n))
                if (elementary_cover(lambda, mu) != 0) CHECK(refines(mu, lambda));
}

TEST_CASE("elementary spanning counts") {
    CHECK(count_elementary(build_polydeck(prism_graph()), {3, 3}) == 1);
    CHECK(count_elementary(build_polydeck(cycle_graph(6)), {2, 2, 2}) == 2);
    CHECK(count_elementary(build_polydeck(path_graph(4)), {2, 2}) == 1);
    CHECK_THROWS_AS(count_elementary(build_polydeck(path_graph(4)), {4}), DomainError);
    for (int n = 4; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            const PolyDeck d = build_polydeck(g);
            for (const auto& lambda : integer_partitions(n, 2, n)) {
                if (lambda.size() < 2) continue;
                const Integer got = count_elementary(d, lambda);
                CHECK(got == oracle::elementary_count(g, lambda));
                CHECK(count_elementary_chains(d, lambda) == Rational(got));
            }
        }
}

TEST_CASE("characteristic polynomial from the polynomial deck") {
    CHECK(charpoly_from_polydeck(build_polydeck(path_graph(3))) == poly({1, 0, -2, 0}));
    CHECK(charpoly_from_polydeck(build_polydeck(path_graph(4))) == poly({1, 0, -3, 0, 1}));
    try {
        charpoly_from_polydeck(build_polydeck(cycle_graph(4)));
        FAIL("expected a refusal");
    } catch (const NotReconstructibleError& e) {
        CHECK(e.reason() == "no-degree-one-vertex");
    }
    for (int n = 3; n <= 7; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            const PolyDeck d = build_polydeck(g);
            if (has_leaf(g)) CHECK(charpoly_from_polydeck(d).coeffs == reftest::charpoly(g));
            if (n <= 6 && reftest::hamiltonian_cycles(g) == 0) CHECK(charpoly_from_polydeck(d, true).coeffs == reftest::charpoly(g));
        }
}

TEST_CASE("two vertices: the deck cannot tell K2 from its complement") {
    const PolyDeck k2 = build_polydeck(complete_graph(2));
    const PolyDeck e2 = build_polydeck(empty_graph(2));
    CHECK(k2.polys == e2.polys);
    CHECK(charpoly_from_polydeck(e2, true) == poly({1, 0, 0}));
    CHECK_THROWS_AS(charpoly_from_polydeck(k2), NotReconstructibleError);
}
