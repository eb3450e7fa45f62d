#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "reconkit/deck.hpp"
#include "reconkit/errors.hpp"
#include "support.hpp"

using namespace reconkit;

namespace {

const std::vector<std::vector<Count>> kPrismMatrix{
    {1, 0, 0, 0, 0, 0, 0, 0, 0},  //
    {1, 1, 0, 0, 0, 0, 0, 0, 0},  //
    {2, 0, 1, 0, 0, 0, 0, 0, 0},  //
    {3, 0, 0, 1, 0, 0, 0, 0, 0},  //
    {3, 2, 2, 0, 1, 0, 0, 0, 0},  //
    {4, 1, 2, 1, 0, 1, 0, 0, 0},  //
    {4, 0, 4, 0, 0, 0, 1, 0, 0},  //
    {6, 3, 6, 1, 2, 2, 1, 1, 0},  //
    {9, 6, 12, 2, 6, 6, 3, 6, 1},
};

const std::vector<Count> kPrismCoverLabels{2, 1, 3, 4, 2, 2, 1, 2, 1, 1, 2, 2, 6};

std::vector<Graph> with_edges(int max_n) { return graph_corpus(1, max_n, true); }

std::vector<std::vector<Count>> canon_rows(const NMatrix& n) { return canonical_nmatrix(strip(n)).rows; }

}  // namespace

TEST_CASE("lambda decks") {
    const auto k2 = lambda_deck(complete_graph(2));
    CHECK(k2.classes.size() == 1);
    const auto p3 = lambda_deck(path_graph(3));
    REQUIRE(p3.classes.size() == 2);
    CHECK(p3.classes[1].rep.size() == 2);
    const auto l3 = lambda_deck(prism_graph());
    REQUIRE(l3.classes.size() == 9);
    CHECK(l3.classes.front().code == canonical_code(complete_graph(2)));
    CHECK(l3.classes.back().code == canonical_code(prism_graph()));
    CHECK_THROWS_AS(lambda_deck(empty_graph(4)), DomainError);
}

TEST_CASE("N-matrix of the prism") {
    const NMatrix n = nmatrix(prism_graph());
    CHECK(n.rows == kPrismMatrix);
    CHECK(nmatrix(complete_graph(2)).rows == std::vector<std::vector<Count>>{{1}});
    CHECK(nmatrix(path_graph(3)).rows == std::vector<std::vector<Count>>{{1, 0}, {2, 1}});
}

TEST_CASE("N-matrix entries are induced counts") {
    for (const Graph& g : with_edges(5)) {
        const NMatrix n = nmatrix(g);
        const auto& cls = n.labels->classes;
        for (int i = 0; i < n.size(); ++i)
            for (int j = 0; j < n.size(); ++j) CHECK(Integer(n.at(i, j)) == reftest::count_induced(cls[i].rep, cls[j].rep));
    }
}

TEST_CASE("shape invariants of N-matrices") {
    for (const Graph& g : with_edges(6)) {
        const NMatrix n = nmatrix(g);
        const auto ve = infer_v_e(strip(n));
        const auto& cls = n.labels->classes;
        CHECK(n.rows[0] == std::vector<Count>([&] {
                  std::vector<Count> r(static_cast<std::size_t>(n.size()), 0);
                  r[0] = 1;
                  return r;
              }()));
        for (int i = 0; i < n.size(); ++i) {
            CHECK(n.at(i, i) == 1);
            CHECK(n.at(i, 0) == static_cast<Count>(cls[i].e));
            CHECK(ve[i] == VE{cls[i].v, cls[i].e});
            if (i) CHECK(cls[i - 1].v <= cls[i].v);
            for (int j = 0; j < n.size(); ++j)
                if (cls[j].v > cls[i].v) CHECK(n.at(i, j) == 0);
        }
    }
}

TEST_CASE("strip drops labels only") {
    for (const Graph& g : {complete_graph(2), path_graph(3), prism_graph()}) {
        const NMatrix n = nmatrix(g);
        const NMatrix s = strip(n);
        CHECK_FALSE(s.labels.has_value());
        CHECK(s.rows == n.rows);
    }
}

TEST_CASE("vertex and edge counts from an unlabelled matrix") {
    const auto ve = infer_v_e(strip(nmatrix(prism_graph())));
    CHECK(ve.back() == VE{6, 9});
    CHECK(infer_v_e(strip(nmatrix(complete_graph(2)))) == std::vector<VE>{{2, 1}});
    CHECK(infer_v_e(strip(nmatrix(path_graph(3)))) == std::vector<VE>{{2, 1}, {3, 2}});

    // row order does not matter
    const NMatrix n = strip(nmatrix(prism_graph()));
    std::vector<int> perm{8, 3, 0, 6, 1, 7, 2, 5, 4};
    const auto shuffled = infer_v_e(permute(n, perm));
    for (int i = 0; i < 9; ++i) CHECK(shuffled[i] == ve[perm[i]]);
}

TEST_CASE("invalid matrices are rejected") {
    NMatrix bad;
    bad.rows = {{1, 0}, {2, 2}};
    CHECK_THROWS_AS(validate_shape(bad), InvalidMatrixError);
    bad.rows = {{1, 0}, {0, 1}};
    CHECK_THROWS_AS(infer_v_e(bad), InvalidMatrixError);
    bad.rows = {{1, 0, 0}, {1, 1, 0}};
    CHECK_THROWS_AS(validate_shape(bad), InvalidMatrixError);
    // more edges than a 3-vertex graph can carry
    bad.rows = {{1, 0}, {4, 1}};
    CHECK_THROWS_AS(infer_v_e(bad), InvalidMatrixError);
}

TEST_CASE("ELP of the prism") {
    const Elp p = elp_from_nmatrix(nmatrix(prism_graph()));
    CHECK(p.ranks == std::vector<int>{2, 3, 3, 3, 4, 4, 4, 5, 6});
    // covers read off the golden matrix: consecutive ranks, positive entry
    std::vector<ElpCover> expected;
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j)
            if (p.ranks[i] == p.ranks[j] + 1 && kPrismMatrix[i][j]) expected.push_back({j, i, kPrismMatrix[i][j]});
    auto key = [](const ElpCover& c) { return std::make_tuple(c.to, c.from, c.label); };
    auto sorted = [&](std::vector<ElpCover> v) {
        std::sort(v.begin(), v.end(), [&](const ElpCover& a, const ElpCover& b) { return key(a) < key(b); });
        return v;
    };
    CHECK(sorted(p.covers) == sorted(expected));
    CHECK(p.covers.size() == kPrismCoverLabels.size());
    std::vector<Count> labels;
    for (const ElpCover& c : p.covers) labels.push_back(c.label);
    std::vector<Count> want = kPrismCoverLabels;
    std::sort(labels.begin(), labels.end());
    std::sort(want.begin(), want.end());
    CHECK(labels == want);
    const auto top = std::find_if(p.covers.begin(), p.covers.end(), [](const ElpCover& c) { return c.to == 8; });
    REQUIRE(top != p.covers.end());
    CHECK(top->label == 6);
}

TEST_CASE("small ELPs") {
    const Elp k2 = elp_from_nmatrix(nmatrix(complete_graph(2)));
    CHECK(k2.size() == 1);
    CHECK(k2.covers.empty());
    const Elp p3 = elp_from_nmatrix(nmatrix(path_graph(3)));
    REQUIRE(p3.covers.size() == 1);
    CHECK(p3.covers[0].label == 2);
}

TEST_CASE("ELP ranks step by one on covers") {
    for (const Graph& g : with_edges(6)) {
        const Elp p = elp_from_nmatrix(strip(nmatrix(g)));
        for (const ElpCover& c : p.covers) CHECK(p.ranks[c.to] == p.ranks[c.from] + 1);
        CHECK(p.ranks[0] == 2);
        CHECK(std::count(p.ranks.begin(), p.ranks.end(), g.order()) == 1);
    }
}

TEST_CASE("matrix and poset round trip") {
    CHECK(nmatrix_from_elp(elp_from_nmatrix(nmatrix(prism_graph()))).rows == kPrismMatrix);
    for (const Graph& g : with_edges(7)) {
        const NMatrix n = nmatrix(g);
        CHECK(nmatrix_from_elp(elp_from_nmatrix(n)) == n);
    }
}

TEST_CASE("a poset with inconsistent labels fails to fill") {
    Elp p;
    p.ranks = {2, 3, 3, 4};
    p.covers = {{0, 1, 1}, {0, 2, 2}, {1, 3, 1}, {2, 3, 1}};
    CHECK_THROWS_AS(nmatrix_from_elp(p), InvalidMatrixError);
}

TEST_CASE("child matrices") {
    const auto l3 = child_nmatrices(strip(nmatrix(prism_graph())));
    REQUIRE(l3.size() == 1);
    CHECK(l3[0].multiplicity == 6);
    const Graph l8 = induced_subgraph(prism_graph(), VertexMask{0b011111});
    CHECK(l3[0].matrix.rows == canon_rows(nmatrix(l8)));

    const auto p3 = child_nmatrices(strip(nmatrix(path_graph(3))));
    REQUIRE(p3.size() == 1);
    CHECK(p3[0].multiplicity == 2);
    CHECK(p3[0].matrix.rows == std::vector<std::vector<Count>>{{1}});
    CHECK(child_nmatrices(strip(nmatrix(complete_graph(2)))).empty());
}

TEST_CASE("child matrices match the vertex-deleted subgraphs") {
    for (const Graph& g : with_edges(6)) {
        std::map<std::vector<std::vector<Count>>, Count> direct;
        for (const Graph& c : vertex_deck(g))
            if (c.size() > 0) direct[canon_rows(nmatrix(c))] += 1;
        std::map<std::vector<std::vector<Count>>, Count> derived;
        for (const ChildMatrix& c : child_nmatrices(strip(nmatrix(g)))) derived[c.matrix.rows] += c.multiplicity;
        CHECK(direct == derived);
    }
}

TEST_CASE("edgeless induced subgraphs") {
    CHECK(count_empty_induced(strip(nmatrix(path_graph(3))), 2) == 1);
    CHECK(count_empty_induced(strip(nmatrix(complete_graph(3))), 2) == 0);
    CHECK(count_empty_induced(strip(nmatrix(prism_graph())), 2) == 6);
    CHECK_THROWS_AS(count_empty_induced(strip(nmatrix(path_graph(3))), 4), DomainError);
    for (const Graph& g : with_edges(6))
        for (int r = 2; r <= g.order(); ++r)
            CHECK(count_empty_induced(strip(nmatrix(g)), r) == reftest::count_induced(g, empty_graph(r)));
}

TEST_CASE("ELP automorphisms") {
    CHECK(elp_automorphisms(elp_from_nmatrix(nmatrix(prism_graph()))).empty());
    CHECK(elp_automorphisms(elp_from_nmatrix(nmatrix(complete_graph(2)))).empty());
    // an abstract poset with a swap symmetry
    Elp p;
    p.ranks = {2, 3, 3, 4};
    p.covers = {{0, 1, 1}, {0, 2, 1}, {1, 3, 1}, {2, 3, 1}};
    const auto auts = elp_automorphisms(p);
    REQUIRE(auts.size() == 1);
    CHECK(auts[0] == std::vector<int>{0, 2, 1, 3});
}

TEST_CASE("canonical matrices") {
    const NMatrix l3 = strip(nmatrix(prism_graph()));
    const NMatrix c = canonical_nmatrix(l3);
    CHECK(canonical_nmatrix(c) == c);
    std::mt19937 rng(5);
    for (const Graph& g : with_edges(5)) {
        const NMatrix n = strip(nmatrix(g));
        // any (v, e)-respecting reordering has the same canonical form
        std::vector<int> perm(static_cast<std::size_t>(n.size()));
        std::iota(perm.begin(), perm.end(), 0);
        const auto ve = infer_v_e(n);
        std::shuffle(perm.begin() + 1, perm.end(), rng);
        std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return ve[a] < ve[b]; });
        CHECK(canonical_nmatrix(permute(n, perm)) == canonical_nmatrix(n));
    }
    std::map<std::vector<std::vector<Count>>, int> seen;
    for (const Graph& g : with_edges(6)) seen[canon_rows(nmatrix(g))] += 1;
    CHECK(seen.size() == with_edges(6).size());
}
