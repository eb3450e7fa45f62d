#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "reconkit/errors.hpp"
#include "reconkit/isotype.hpp"
#include "reconkit/oracle.hpp"
#include "reconkit/whitney.hpp"
#include "support.hpp"

using namespace reconkit;

namespace {

using Mask = std::uint32_t;

// Cycles of g as edge masks over g.edges().
std::vector<Mask> cycle_masks(const Graph& g) {
    const std::vector<Edge> es = g.edges();
    std::vector<Mask> out;
    for (Mask m = 1; m < (Mask{1} << es.size()); ++m) {
        std::vector<Edge> chosen;
        for (std::size_t i = 0; i < es.size(); ++i)
            if ((m >> i) & 1U) chosen.push_back(es[i]);
        if (chosen.size() < 3) continue;
        const Graph h = reftest::spanned(chosen);
        bool two = true;
        for (int u = 0; u < h.order(); ++u) two &= h.degree(u) == 2;
        if (two && reftest::components(h.order(), h.edges()) == 1) out.push_back(m);
    }
    return out;
}

// Block codes of the edge set m: edges are grouped when some cycle inside m
// passes through both.
std::vector<CanonicalCode> brute_blocks(const std::vector<Edge>& es, const std::vector<Mask>& cycles, Mask m) {
    std::vector<int> parent(es.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (Mask c : cycles) {
        if ((c & m) != c) continue;
        int first = -1;
        for (std::size_t i = 0; i < es.size(); ++i)
            if ((c >> i) & 1U) {
                if (first < 0) first = static_cast<int>(i);
                else parent[find(static_cast<int>(i))] = find(first);
            }
    }
    std::map<int, std::vector<Edge>> groups;
    for (std::size_t i = 0; i < es.size(); ++i)
        if ((m >> i) & 1U) groups[find(static_cast<int>(i))].push_back(es[i]);
    std::vector<CanonicalCode> codes;
    for (const auto& [root, g] : groups) codes.push_back(canonical_code(reftest::spanned(g)));
    std::sort(codes.begin(), codes.end());
    return codes;
}

// Every nonempty subgraph of g without isolated vertices, counted by block type.
std::map<std::vector<CanonicalCode>, Integer> brute_type_counts(const Graph& g) {
    const std::vector<Edge> es = g.edges();
    const std::vector<Mask> cycles = cycle_masks(g);
    std::map<std::vector<CanonicalCode>, Integer> out;
    for (Mask m = 1; m < (Mask{1} << es.size()); ++m) out[brute_blocks(es, cycles, m)] += 1;
    return out;
}

const Graph k2 = complete_graph(2);

}  // namespace

TEST_CASE("block types") {
    CHECK(block_type(path_graph(3)) == make_type({k2, k2}));
    CHECK(block_type(complete_graph(4)) == make_type({complete_graph(4)}));
    const Graph bowtie = reftest::make(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    CHECK(block_type(bowtie) == make_type({complete_graph(3), complete_graph(3)}));
    const Graph paw = reftest::make(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    CHECK(block_type(paw) == make_type({k2, complete_graph(3)}));
    CHECK(block_type(paw).edges() == 4);
    CHECK_FALSE(block_type(paw) == block_type(bowtie));
    CHECK_THROWS_AS(block_type(empty_graph(2)), DomainError);
    CHECK_THROWS_AS(make_type({path_graph(3)}), DomainError);
    CHECK(to_string(make_type({k2})).front() == '{');
}

TEST_CASE("cover tables for two edges") {
    const GraphType two = make_type({k2, k2});
    const CoverTable& t3 = covers_of_type(two, 3);
    std::map<CanonicalCode, Integer> by_x;
    for (const CoverEntry& e : t3.entries) by_x[e.x.code] = e.c;
    CHECK(by_x.size() == 2);
    CHECK(by_x.at(canonical_code(k2)) == 1);
    CHECK(by_x.at(canonical_code(path_graph(3))) == 2);
    CHECK(t3.self() == 2);

    const CoverTable& t4 = covers_of_type(two, 4);
    const Graph two_k2 = reftest::make(4, {{0, 1}, {2, 3}});
    bool found = false;
    for (const CoverEntry& e : t4.entries)
        if (e.x.code == canonical_code(two_k2)) {
            found = true;
            CHECK(e.c == 2);
            CHECK(e.type == two);
        }
    CHECK(found);
    CHECK(t4.by_type.size() == 2);
}

TEST_CASE("cover multiplicities match direct counting") {
    const std::vector<GraphType> roots{
        make_type({k2, k2}),
        make_type({k2, complete_graph(3)}),
        make_type({complete_graph(3), complete_graph(3)}),
        make_type({k2, k2, k2}),
        make_type({cycle_graph(4), k2}),
    };
    for (const GraphType& s : roots)
        for (int vmax = 3; vmax <= 6; ++vmax) {
            std::vector<Graph> family;
            for (const IsoClass& b : s.blocks) family.push_back(b.rep);
            for (const CoverEntry& e : covers_of_type(s, vmax).entries) {
                CHECK(e.x.v <= vmax);
                CHECK(e.c == oracle::cover_count(family, e.x.rep));
                CHECK(e.type == block_type(e.x.rep));
            }
        }
}

TEST_CASE("subgraph counts by type") {
    CHECK(count_type(complete_graph(3), make_type({k2, k2})) == 3);
    CHECK(count_type(cycle_graph(4), make_type({k2, k2, k2})) == 4);
    CHECK(count_type(cycle_graph(4), make_type({cycle_graph(4)})) == 1);
    CHECK(count_type(path_graph(4), make_type({complete_graph(3)})) == 0);
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            if (g.size() == 0) continue;
            for (const auto& [codes, want] : brute_type_counts(g)) {
                std::vector<Graph> blocks;
                for (const CanonicalCode& c : codes)
                    for (int k = 2; k <= n; ++k)
                        for (const Graph& h : enumerate_graphs(k))
                            if (canonical_code(h) == c) blocks.push_back(h);
                REQUIRE(blocks.size() == codes.size());
                const GraphType t = make_type(blocks);
                CHECK(count_type(g, t) == want);
                CHECK(count_type_chains(g, t) == Rational(want));
            }
        }
}

TEST_CASE("products of block counts expand over covers") {
    const std::vector<std::vector<Graph>> families{
        {k2, k2},
        {k2, complete_graph(3)},
        {complete_graph(3), complete_graph(3)},
        {k2, k2, k2},
    };
    for (const auto& f : families) {
        const GraphType s = make_type(f);
        for (const Graph& g : graph_corpus(3, 6, true)) {
            Integer product = 1;
            for (const Graph& b : f) product *= reftest::count_subgraphs(g, b);
            Integer expanded = 0;
            for (const CoverEntry& e : covers_of_type(s, g.order()).entries) expanded += e.c * reftest::count_subgraphs(g, e.x.rep);
            CHECK(expanded == product);
        }
    }
}

TEST_CASE("characteristic polynomial from the vertex deck") {
    CHECK(charpoly_from_vertex_deck(vertex_deck(complete_graph(4))).coeffs == reftest::charpoly(complete_graph(4)));
    CHECK(charpoly_from_vertex_deck(vertex_deck(cycle_graph(5))).coeffs == reftest::charpoly(cycle_graph(5)));
    CHECK(charpoly_from_vertex_deck(vertex_deck(path_graph(4))).coeffs == reftest::charpoly(path_graph(4)));
    for (int n = 3; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n)) CHECK(charpoly_from_vertex_deck(vertex_deck(g)).coeffs == reftest::charpoly(g));
}

TEST_CASE("vertex deck errors") {
    const std::vector<Graph> two{Graph(1), Graph(1)};
    CHECK_THROWS_AS(charpoly_from_vertex_deck(two), DomainError);
    std::vector<Graph> bad = vertex_deck(cycle_graph(5));
    bad[2] = Graph(3);
    CHECK_THROWS_AS(charpoly_from_vertex_deck(bad), InconsistentDeckError);
}
