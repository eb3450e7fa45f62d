#include "reconkit/isotype.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <unordered_set>

#include "reconkit/canon.hpp"
#include "reconkit/errors.hpp"

namespace reconkit {

namespace {

struct GraphTraits {
    using Key = int;
    const Graph& g;

    int key(int x, const std::vector<int>& cell) const {
        VertexMask m = 0;
        for (int v : cell) m |= VertexMask{1} << v;
        return std::popcount(g.neighbours(x) & m);
    }

    std::vector<std::uint64_t> certificate(const std::vector<int>& order) const {
        const int n = g.order();
        std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (g.has_edge(order[i], order[j])) rows[i] |= std::uint64_t{1} << (n - 1 - j);
            }
        }
        return rows;
    }
};

canon::Labelling label(const Graph& g) {
    canon::Cells initial;
    if (g.order() > 0) {
        initial.emplace_back(static_cast<std::size_t>(g.order()));
        for (int v = 0; v < g.order(); ++v) initial[0][v] = v;
    }
    GraphTraits traits{g};
    return canon::canonical_labelling(traits, std::move(initial));
}

CanonicalCode encode(const Graph& g, const std::vector<std::uint64_t>& rows) {
    const int n = g.order();
    CanonicalCode code;
    code.push_back(static_cast<char>(n));
    code.push_back(static_cast<char>((g.size() >> 8) & 0xff));
    code.push_back(static_cast<char>(g.size() & 0xff));
    std::vector<int> degrees;
    for (int v = 0; v < n; ++v) degrees.push_back(g.degree(v));
    std::sort(degrees.begin(), degrees.end());
    for (int d : degrees) code.push_back(static_cast<char>(d));
    const int row_bytes = (n + 7) / 8;
    for (std::uint64_t row : rows) {
        for (int b = row_bytes - 1; b >= 0; --b) code.push_back(static_cast<char>((row >> (8 * b)) & 0xff));
    }
    return code;
}

Graph relabel(const Graph& g, const std::vector<int>& order) {
    const int n = g.order();
    std::vector<VertexMask> rows(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.has_edge(order[i], order[j])) rows[i] |= VertexMask{1} << j;
    return Graph::from_adjacency(n, rows);
}

// Injective maps f -> g sending edges to edges (and, if `induced`, non-edges
// to non-edges).
class EmbeddingCounter {
public:
    EmbeddingCounter(const Graph& f, const Graph& g, bool induced) : f_(f), g_(g), induced_(induced) {
        const int k = f.order();
        std::vector<bool> placed(static_cast<std::size_t>(k), false);
        VertexMask placed_mask = 0;
        for (int step = 0; step < k; ++step) {
            int pick = -1, best_links = -1, best_degree = -1;
            for (int x = 0; x < k; ++x) {
                if (placed[x]) continue;
                int links = std::popcount(f.neighbours(x) & placed_mask);
                if (links > best_links || (links == best_links && f.degree(x) > best_degree)) {
                    pick = x;
                    best_links = links;
                    best_degree = f.degree(x);
                }
            }
            placed[pick] = true;
            placed_mask |= VertexMask{1} << pick;
            order_.push_back(pick);
        }
        image_.assign(static_cast<std::size_t>(k), -1);
    }

    Count count() {
        if (f_.order() > g_.order()) return 0;
        return extend(0, 0);
    }

private:
    Count extend(std::size_t step, VertexMask used) {
        if (step == order_.size()) return 1;
        const int x = order_[step];
        VertexMask cand = g_.all_vertices() & ~used;
        for (std::size_t s = 0; s < step; ++s) {
            const int y = order_[s];
            if (f_.has_edge(x, y)) {
                cand &= g_.neighbours(image_[y]);
            } else if (induced_) {
                cand &= ~g_.neighbours(image_[y]);
            }
        }
        Count total = 0;
        for (; cand; cand &= cand - 1) {
            const int w = std::countr_zero(cand);
            if (g_.degree(w) < f_.degree(x)) continue;
            image_[x] = w;
            total = checked_add(total, extend(step + 1, used | (VertexMask{1} << w)));
        }
        image_[x] = -1;
        return total;
    }

    const Graph& f_;
    const Graph& g_;
    bool induced_;
    std::vector<int> order_;
    std::vector<int> image_;
};

Count embeddings(const Graph& f, const Graph& g, bool induced) { return EmbeddingCounter(f, g, induced).count(); }

}  // namespace

CanonicalCode canonical_code(const Graph& g) { return encode(g, label(g).certificate); }

Graph canonical_form(const Graph& g) { return relabel(g, label(g).order); }

IsoClass iso_class(const Graph& g) {
    canon::Labelling l = label(g);
    return {encode(g, l.certificate), relabel(g, l.order), g.order(), g.size()};
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_code(a) == canonical_code(b);
}

Count automorphism_count(const Graph& g) { return embeddings(g, g, true); }

Count count_induced(const Graph& g, const Graph& f) {
    if (f.order() > g.order() || f.size() > g.size()) return 0;
    const Count hits = embeddings(f, g, true);
    return hits / automorphism_count(f);
}

Count count_subgraphs(const Graph& g, const Graph& f) {
    for (int v = 0; v < f.order(); ++v) {
        if (f.degree(v) == 0) throw DomainError("count_subgraphs: pattern has an isolated vertex");
    }
    if (f.order() > g.order() || f.size() > g.size()) return 0;
    const Count hits = embeddings(f, g, false);
    return hits / automorphism_count(f);
}

Count kelly_count(std::span<const Graph> deck, const Graph& f, int n, KellyMode mode) {
    if (f.order() >= n) throw DomainError("kelly_count: pattern must be smaller than the graph");
    if (static_cast<int>(deck.size()) != n) throw InconsistentDeckError("kelly_count: deck size differs from n");
    Count sum = 0;
    for (const Graph& card : deck) {
        if (card.order() != n - 1) throw InconsistentDeckError("kelly_count: card of the wrong order");
        sum = checked_add(sum, mode == KellyMode::Subgraphs ? count_subgraphs(card, f) : count_induced(card, f));
    }
    const Count den = static_cast<Count>(n - f.order());
    if (sum % den != 0) throw InconsistentDeckError("kelly_count: card counts are not divisible by n - v(F)");
    return sum / den;
}

const std::vector<Graph>& enumerate_graphs(int n) {
    if (n < 0 || n > 8) throw DomainError("enumerate_graphs supports 0 <= n <= 8");
    static std::mutex mutex;
    static std::map<int, std::vector<Graph>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    std::vector<std::pair<CanonicalCode, Graph>> found;
    if (n == 0) {
        found.emplace_back(canonical_code(Graph(0)), Graph(0));
    } else {
        std::unordered_set<CanonicalCode> seen;
        for (const Graph& smaller : enumerate_graphs(n - 1)) {
            const auto base = smaller.adjacency();
            for (VertexMask nb = 0; nb < (VertexMask{1} << (n - 1)); ++nb) {
                std::vector<VertexMask> rows(base.begin(), base.end());
                for (int u = 0; u < n - 1; ++u)
                    if ((nb >> u) & 1U) rows[u] |= VertexMask{1} << (n - 1);
                rows.push_back(nb);
                Graph g = Graph::from_adjacency(n, rows);
                IsoClass c = iso_class(g);
                if (seen.insert(c.code).second) found.emplace_back(std::move(c.code), std::move(c.rep));
            }
        }
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> graphs;
    graphs.reserve(found.size());
    for (auto& entry : found) graphs.push_back(std::move(entry.second));
    std::lock_guard lock(mutex);
    return cache.emplace(n, std::move(graphs)).first->second;
}

std::vector<Graph> graph_corpus(int min_n, int max_n, bool require_edge) {
    std::vector<Graph> out;
    for (int n = std::max(min_n, 0); n <= max_n; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            if (!require_edge || g.size() > 0) out.push_back(g);
        }
    }
    return out;
}

}  // namespace reconkit
