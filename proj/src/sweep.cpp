#include "reconkit/sweep.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <thread>

#include "reconkit/deck.hpp"
#include "reconkit/errors.hpp"
#include "reconkit/isotype.hpp"
#include "reconkit/nrecon.hpp"
#include "reconkit/oracle.hpp"
#include "reconkit/polydeck.hpp"
#include "reconkit/whitney.hpp"

namespace reconkit {

namespace {

CheckOutcome skip() { return {false, true, {}}; }
CheckOutcome verdict(bool ok, std::string detail = {}) { return {true, ok, ok ? std::string() : std::move(detail)}; }

bool has_isolated(const Graph& g) {
    for (int u = 0; u < g.order(); ++u)
        if (g.degree(u) == 0) return true;
    return false;
}

CheckOutcome check_elp_roundtrip(const Graph& g) {
    if (g.size() == 0) return skip();
    const NMatrix n = nmatrix(g);
    return verdict(nmatrix_from_elp(elp_from_nmatrix(n)) == n, "round trip changed the matrix");
}

CheckOutcome check_nrecon(const Graph& g) {
    if (g.size() == 0) return skip();
    const InvariantReport got = reconstruct(strip(nmatrix(g)));
    const InvariantReport want = direct_report(g);
    if (got.charpoly != want.charpoly) return verdict(false, "charpoly " + to_string(got.charpoly));
    if (got.psi != want.psi) return verdict(false, "psi");
    if (got.ham != want.ham) return verdict(false, "ham " + got.ham.str());
    if (is_connected(g) && got.tr != want.tr) return verdict(false, "tr " + got.tr.str());
    if (got.uni != want.uni) return verdict(false, "uni");
    return verdict(true);
}

CheckOutcome check_rankpoly(const Graph& g) {
    if (g.size() == 0 || g.size() > 16) return skip();
    Reconstruction r(strip(nmatrix(g)));
    return verdict(r.rankpoly(r.top()) == oracle::rankpoly(g), "rank polynomial differs");
}

CheckOutcome check_polydeck(const Graph& g) {
    if (g.order() < 2) return skip();
    bool leaf = false;
    for (int u = 0; u < g.order(); ++u) leaf |= g.degree(u) == 1;
    const bool nonham = oracle::ham(g) == 0;
    const PolyDeck d = build_polydeck(g);
    if (g.order() >= 3 && leaf) return verdict(charpoly_from_polydeck(d) == oracle::charpoly(g), "unflagged charpoly differs");
    if (nonham) return verdict(charpoly_from_polydeck(d, true) == oracle::charpoly(g), "flagged charpoly differs");
    try {
        charpoly_from_polydeck(d);
    } catch (const NotReconstructibleError&) {
        return verdict(true);
    }
    return verdict(false, "expected a refusal without a visible leaf");
}

CheckOutcome check_vertexdeck(const Graph& g) {
    if (g.order() < 3) return skip();
    const std::vector<Graph> deck = vertex_deck(g);
    return verdict(charpoly_from_vertex_deck(deck) == oracle::charpoly(g), "charpoly from the vertex deck differs");
}

CheckOutcome check_kelly(const Graph& g) {
    const int n = g.order();
    if (n < 3) return skip();
    const std::vector<Graph> deck = vertex_deck(g);
    for (int k = 1; k < n; ++k) {
        for (const Graph& f : enumerate_graphs(k)) {
            if (kelly_count(deck, f, n, KellyMode::Induced) != count_induced(g, f))
                return verdict(false, "induced count of " + write_graph6(f));
            if (f.size() > 0 && !has_isolated(f) && kelly_count(deck, f, n, KellyMode::Subgraphs) != count_subgraphs(g, f))
                return verdict(false, "subgraph count of " + write_graph6(f));
        }
    }
    return verdict(true);
}

const std::vector<Graph>& kocay_blocks() {
    static const std::vector<Graph> b{complete_graph(2), path_graph(3), complete_graph(3)};
    return b;
}

CheckOutcome check_kocay(const Graph& g) {
    if (g.order() < 2 || g.order() > 6) return skip();
    const auto& b = kocay_blocks();
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = i; j < b.size(); ++j) {
            const std::vector<Graph> s{b[i], b[j]};
            const Integer lhs = Integer(count_subgraphs(g, b[i])) * count_subgraphs(g, b[j]);
            Integer rhs = 0;
            for (const Graph& x : graph_corpus(2, g.order(), true)) {
                if (has_isolated(x)) continue;
                const Count in_g = count_subgraphs(g, x);
                if (in_g) rhs += oracle::cover_count(s, x) * in_g;
            }
            if (lhs != rhs) return verdict(false, "pair " + describe(b[i]) + ", " + describe(b[j]));
        }
    }
    return verdict(true);
}

std::vector<GraphType> small_types() {
    const std::vector<Graph> pool{complete_graph(2), complete_graph(3), cycle_graph(4)};
    std::vector<GraphType> out;
    std::function<void(std::size_t, std::vector<Graph>&)> rec = [&](std::size_t from, std::vector<Graph>& cur) {
        if (!cur.empty()) out.push_back(make_type(cur));
        if (cur.size() == 3) return;
        for (std::size_t i = from; i < pool.size(); ++i) {
            cur.push_back(pool[i]);
            rec(i, cur);
            cur.pop_back();
        }
    };
    std::vector<Graph> cur;
    rec(0, cur);
    return out;
}

std::map<GraphType, Integer> brute_type_counts(const Graph& g) {
    const std::vector<Edge> es = g.edges();
    std::map<GraphType, Integer> out;
    for (std::uint32_t s = 1; s < (std::uint32_t{1} << es.size()); ++s) {
        std::vector<Edge> chosen;
        for (std::size_t i = 0; i < es.size(); ++i)
            if ((s >> i) & 1U) chosen.push_back(es[i]);
        out[block_type(edge_subgraph(g, chosen))] += 1;
    }
    return out;
}

CheckOutcome check_whitney(const Graph& g) {
    if (g.size() == 0 || g.order() > 6 || g.size() > 12) return skip();
    static const std::vector<GraphType> types = small_types();
    const auto brute = brute_type_counts(g);
    for (const GraphType& t : types) {
        const Integer rec = count_type(g, t);
        const auto it = brute.find(t);
        const Integer want = it == brute.end() ? Integer(0) : it->second;
        if (rec != want) return verdict(false, "recursion on " + to_string(t));
        if (count_type_chains(g, t) != Rational(rec)) return verdict(false, "chain sum on " + to_string(t));
    }
    return verdict(true);
}

CheckOutcome check_elp_aut(const Graph& g) {
    if (g.size() == 0) return skip();
    const auto auts = elp_automorphisms(elp_from_nmatrix(nmatrix(g)));
    return verdict(auts.empty(), "nontrivial ELP automorphism (counterexample candidate)");
}

using CheckFn = CheckOutcome (*)(const Graph&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
    static const std::vector<std::pair<std::string, CheckFn>> r{
        {"elp-roundtrip", check_elp_roundtrip}, {"nrecon", check_nrecon},
        {"rankpoly", check_rankpoly},           {"polydeck", check_polydeck},
        {"vertexdeck", check_vertexdeck},       {"kelly-identity", check_kelly},
        {"kocay-identity", check_kocay},        {"whitney", check_whitney},
        {"elp-aut", check_elp_aut},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& sweep_check_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : registry()) v.push_back(name);
        return v;
    }();
    return names;
}

CheckOutcome run_check(const std::string& name, const Graph& g) {
    for (const auto& [n, fn] : registry()) {
        if (n != name) continue;
        try {
            return fn(g);
        } catch (const std::exception& e) {
            return verdict(false, e.what());
        }
    }
    throw DomainError("unknown check: " + name);
}

bool SweepReport::ok() const {
    for (const auto& [name, t] : checks)
        if (t.failed) return false;
    return true;
}

void SweepReport::merge(const SweepReport& other) {
    graphs += other.graphs;
    wall_seconds = std::max(wall_seconds, other.wall_seconds);
    for (const auto& [name, t] : other.checks) {
        CheckTally& mine = checks[name];
        mine.passed += t.passed;
        mine.failed += t.failed;
        mine.skipped += t.skipped;
        if (!mine.first_counterexample && t.first_counterexample) {
            mine.first_counterexample = t.first_counterexample;
            mine.detail = t.detail;
        }
    }
}

SweepReport run_sweep(const std::vector<Graph>& graphs, const std::vector<std::string>& checks, int jobs) {
    for (const std::string& c : checks) {
        bool known = false;
        for (const std::string& n : sweep_check_names()) known |= n == c;
        if (!known) throw DomainError("unknown check: " + c);
    }
    const auto start = std::chrono::steady_clock::now();
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(graphs.size())));
    // Results are stored per graph so that the first counterexample is the
    // earliest graph in corpus order, independent of scheduling.
    std::vector<std::vector<CheckOutcome>> results(graphs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < graphs.size(); i = next++) {
            for (const std::string& c : checks) results[i].push_back(run_check(c, graphs[i]));
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();

    SweepReport report;
    for (const std::string& c : checks) report.checks[c];
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        SweepReport one;
        one.graphs = 1;
        for (std::size_t k = 0; k < checks.size(); ++k) {
            const CheckOutcome& o = results[i][k];
            CheckTally& t = one.checks[checks[k]];
            if (!o.applies) ++t.skipped;
            else if (o.passed) ++t.passed;
            else {
                ++t.failed;
                t.first_counterexample = write_graph6(graphs[i]);
                t.detail = o.detail;
            }
        }
        report.merge(one);
    }
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

Json to_json(const SweepReport& r) {
    Json checks = Json::object();
    for (const auto& [name, t] : r.checks) {
        Json j{{"passed", t.passed}, {"failed", t.failed}, {"skipped", t.skipped}};
        j["first_counterexample"] = t.first_counterexample ? Json(*t.first_counterexample) : Json(nullptr);
        if (!t.detail.empty()) j["detail"] = t.detail;
        checks[name] = j;
    }
    return {{"graphs", r.graphs}, {"checks", checks}, {"ok", r.ok()}, {"wall_time_s", r.wall_seconds}};
}

int default_jobs() {
    if (const char* env = std::getenv("RECONKIT_JOBS")) {
        const int j = std::atoi(env);
        if (j > 0) return j;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

}  // namespace reconkit
