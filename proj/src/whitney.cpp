#include "reconkit/whitney.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>

#include "reconkit/errors.hpp"
#include "reconkit/oracle.hpp"
#include "reconkit/partitions.hpp"
#include "reconkit/polydeck.hpp"

namespace reconkit {

std::vector<CanonicalCode> GraphType::codes() const {
    std::vector<CanonicalCode> out;
    out.reserve(blocks.size());
    for (const IsoClass& b : blocks) out.push_back(b.code);
    return out;
}

int GraphType::edges() const {
    int e = 0;
    for (const IsoClass& b : blocks) e += b.e;
    return e;
}

namespace {

bool non_separable(const Graph& g) {
    if (g.size() == 0) return false;
    for (int u = 0; u < g.order(); ++u)
        if (g.degree(u) == 0) return false;
    return block_edge_sets(g).size() == 1;
}

GraphType sorted_type(std::vector<IsoClass> blocks) {
    std::sort(blocks.begin(), blocks.end(), [](const IsoClass& a, const IsoClass& b) { return a.code < b.code; });
    return {std::move(blocks)};
}

bool all_k2(const GraphType& t) {
    return std::all_of(t.blocks.begin(), t.blocks.end(), [](const IsoClass& b) { return b.v == 2; });
}

// All graphs (up to isomorphism) formed as X plus a copy of f sharing any
// vertices and edges with X, with at most vmax vertices.
void glue(const Graph& x, const Graph& f, int vmax, std::map<CanonicalCode, Graph>& out) {
    const int k = x.order();
    const int fv = f.order();
    const int range = k + std::min(fv, vmax - k);
    if (range < fv) return;
    const std::vector<Edge> fe = f.edges();
    std::vector<int> img(static_cast<std::size_t>(fv));
    std::vector<char> used(static_cast<std::size_t>(range), 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == fv) {
            std::vector<int> relabel(static_cast<std::size_t>(range), -1);
            int next = k;
            for (int t = 0; t < k; ++t) relabel[t] = t;
            for (int t = k; t < range; ++t)
                if (used[t]) relabel[t] = next++;
            std::vector<Edge> es = x.edges();
            for (const Edge& e : fe) {
                int a = relabel[img[e.u]], b = relabel[img[e.v]];
                if (a > b) std::swap(a, b);
                es.push_back({a, b});
            }
            std::sort(es.begin(), es.end());
            es.erase(std::unique(es.begin(), es.end()), es.end());
            const Graph u(next, es);
            const IsoClass c = iso_class(u);
            out.emplace(c.code, c.rep);
            return;
        }
        for (int t = 0; t < range; ++t) {
            if (used[t]) continue;
            used[t] = 1;
            img[i] = t;
            rec(i + 1);
            used[t] = 0;
        }
    };
    rec(0);
}

CoverTable build_table(const GraphType& s0, int vmax) {
    CoverTable t;
    t.root = s0;
    t.vmax = vmax;
    if (all_k2(s0)) {
        const int k = static_cast<int>(s0.blocks.size());
        for (const Graph& x : graph_corpus(2, vmax, true)) {
            if (x.size() > k) continue;
            bool isolated = false;
            for (int u = 0; u < x.order(); ++u) isolated |= x.degree(u) == 0;
            if (isolated) continue;
            t.entries.push_back({iso_class(x), block_type(x), surjections(k, x.size())});
        }
    } else {
        std::map<CanonicalCode, Graph> level;
        if (!s0.blocks.empty() && s0.blocks[0].v <= vmax) level.emplace(s0.blocks[0].code, s0.blocks[0].rep);
        for (std::size_t i = 1; i < s0.blocks.size(); ++i) {
            std::map<CanonicalCode, Graph> next;
            for (const auto& [code, x] : level) glue(x, s0.blocks[i].rep, vmax, next);
            level = std::move(next);
        }
        std::vector<Graph> parts;
        for (const IsoClass& b : s0.blocks) parts.push_back(b.rep);
        for (const auto& [code, x] : level) {
            const Integer c = oracle::cover_count(parts, x);
            if (c != 0) t.entries.push_back({iso_class(x), block_type(x), c});
        }
    }
    std::map<GraphType, Integer> grouped;
    for (const CoverEntry& e : t.entries) {
        auto [it, fresh] = grouped.emplace(e.type, e.c);
        if (!fresh && it->second != e.c) {
            throw std::logic_error("cover multiplicity differs within type " + to_string(e.type) + " under root " +
                                   to_string(s0));
        }
    }
    t.by_type.assign(grouped.begin(), grouped.end());
    return t;
}

}  // namespace

GraphType make_type(const std::vector<Graph>& blocks) {
    std::vector<IsoClass> out;
    for (const Graph& b : blocks) {
        if (!non_separable(b)) throw DomainError("make_type: " + describe(b) + " is not a block");
        out.push_back(iso_class(b));
    }
    return sorted_type(std::move(out));
}

GraphType block_type(const Graph& g) {
    for (int u = 0; u < g.order(); ++u)
        if (g.degree(u) == 0) throw DomainError("block_type: graph has an isolated vertex");
    std::vector<IsoClass> out;
    for (const auto& es : block_edge_sets(g)) out.push_back(iso_class(edge_subgraph(g, es)));
    return sorted_type(std::move(out));
}

std::string to_string(const GraphType& t) {
    std::string s = "{";
    for (std::size_t i = 0; i < t.blocks.size(); ++i) {
        if (i) s += ", ";
        s += describe(t.blocks[i].rep);
    }
    return s + "}";
}

Integer CoverTable::self() const {
    for (const auto& [type, c] : by_type)
        if (type == root) return c;
    return 0;
}

const CoverTable& covers_of_type(const GraphType& s0, int vmax) {
    static std::mutex mu;
    static std::map<std::pair<std::vector<CanonicalCode>, int>, std::shared_ptr<std::once_flag>> flags;
    static std::map<std::pair<std::vector<CanonicalCode>, int>, std::unique_ptr<CoverTable>> tables;
    const auto key = std::make_pair(s0.codes(), vmax);
    std::shared_ptr<std::once_flag> flag;
    {
        std::lock_guard lock(mu);
        auto& f = flags[key];
        if (!f) f = std::make_shared<std::once_flag>();
        flag = f;
    }
    std::call_once(*flag, [&] {
        auto t = std::make_unique<CoverTable>(build_table(s0, vmax));
        std::lock_guard lock(mu);
        tables[key] = std::move(t);
    });
    std::lock_guard lock(mu);
    return *tables.at(key);
}

WhitneyCounter::WhitneyCounter(BlockCount block_count, int vmax) : block_count_(std::move(block_count)), vmax_(vmax) {}

Integer WhitneyCounter::p(const GraphType& s) {
    Integer r = 1;
    for (const IsoClass& b : s.blocks) {
        auto it = block_cache_.find(b.code);
        if (it == block_cache_.end()) it = block_cache_.emplace(b.code, block_count_(b)).first;
        r *= it->second;
        if (r == 0) break;
    }
    return r;
}

Integer WhitneyCounter::count(const GraphType& s) {
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;
    for (const IsoClass& b : s.blocks)
        if (b.v > vmax_) return memo_[s] = 0;
    if (!active_.insert(s).second) throw std::logic_error("type order is not acyclic at " + to_string(s));
    const CoverTable& t = covers_of_type(s, vmax_);
    if (t.self() == 0) {
        active_.erase(s);
        return memo_[s] = 0;
    }
    Integer num = p(s);
    for (const auto& [type, c] : t.by_type)
        if (!(type == s)) num -= c * count(type);
    active_.erase(s);
    const Integer r = exact_div<InconsistentDeckError>(num, t.self(), "count_type");
    memo_[s] = r;
    return r;
}

Rational WhitneyCounter::count_chains(const GraphType& s0) {
    Rational total = 0;
    std::function<void(const GraphType&, Rational, int)> rec = [&](const GraphType& s, Rational w, int q) {
        const CoverTable& t = covers_of_type(s, vmax_);
        if (t.self() == 0) return;
        w /= Rational(t.self());
        const Rational term = w * Rational(p(s));
        total += (q % 2) ? Rational(-term) : term;
        for (const auto& [type, c] : t.by_type)
            if (!(type == s)) rec(type, w * Rational(c), q + 1);
    };
    for (const IsoClass& b : s0.blocks)
        if (b.v > vmax_) return 0;
    rec(s0, Rational(1), 0);
    return total;
}

Integer count_type(const Graph& g, const GraphType& s0) {
    WhitneyCounter w([&](const IsoClass& b) { return Integer(count_subgraphs(g, b.rep)); }, g.order());
    return w.count(s0);
}

Rational count_type_chains(const Graph& g, const GraphType& s0) {
    WhitneyCounter w([&](const IsoClass& b) { return Integer(count_subgraphs(g, b.rep)); }, g.order());
    return w.count_chains(s0);
}

Polynomial charpoly_from_vertex_deck(std::span<const Graph> deck) {
    const int n = static_cast<int>(deck.size());
    if (n < 3) throw DomainError("charpoly_from_vertex_deck: needs at least three cards");
    for (const Graph& card : deck)
        if (card.order() != n - 1) throw InconsistentDeckError("charpoly_from_vertex_deck: card of the wrong order");

    std::map<CanonicalCode, Integer> kelly;
    auto below = [&](const IsoClass& f) -> Integer {
        auto it = kelly.find(f.code);
        if (it == kelly.end()) it = kelly.emplace(f.code, Integer(kelly_count(deck, f.rep, n))).first;
        return it->second;
    };
    const IsoClass cn = iso_class(cycle_graph(n));
    std::optional<Integer> ham;
    WhitneyCounter w(
        [&](const IsoClass& b) -> Integer {
            if (b.v < n) return below(b);
            if (ham && b.code == cn.code) return *ham;
            throw std::logic_error("charpoly_from_vertex_deck: unexpected spanning block " + describe(b.rep));
        },
        n);

    // No subgraph has n bridge blocks, so the {nK2} equation isolates ham.
    const GraphType s_edges = make_type(std::vector<Graph>(static_cast<std::size_t>(n), complete_graph(2)));
    const CoverTable& t = covers_of_type(s_edges, n);
    const GraphType s_cycle = make_type({cycle_graph(n)});
    Integer rest = 0, coef = 0;
    for (const auto& [type, c] : t.by_type) {
        if (type == s_edges) continue;
        if (type == s_cycle) coef = c;
        else rest += c * w.count(type);
    }
    ham = exact_div<InconsistentDeckError>(w.p(s_edges) - rest, coef, "charpoly_from_vertex_deck");
    if (*ham < 0) throw InconsistentDeckError("charpoly_from_vertex_deck: negative hamiltonian cycle count");

    Polynomial poly;
    poly.coeffs.assign(static_cast<std::size_t>(n) + 1, 0);
    poly.coeffs[0] = 1;
    for (int i = 2; i <= n; ++i) {
        for (const auto& lambda : integer_partitions(i, 2, i)) {
            int cycles = 0;
            for (int x : lambda) cycles += x >= 3;
            Integer weight = Integer(1) << cycles;
            if (lambda.size() % 2) weight = -weight;
            const Graph h = elementary_graph(lambda);
            Integer count;
            if (i < n) {
                count = below(iso_class(h));
            } else if (lambda.size() == 1) {
                count = *ham;
            } else {
                const GraphType s0 = block_type(h);
                count = w.count(s0);
                int spanning = 0;
                for (const CoverEntry& e : covers_of_type(s0, n).entries) {
                    if (!(e.type == s0)) continue;
                    if (e.x.v < n) count -= below(e.x);
                    else ++spanning;
                }
                if (spanning != 1) throw std::logic_error("charpoly_from_vertex_deck: spanning member of type is not unique");
            }
            poly.coeffs[i] += weight * count;
        }
    }
    return poly;
}

}  // namespace reconkit
