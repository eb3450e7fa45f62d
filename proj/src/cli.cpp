#include "reconkit/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "reconkit/deck.hpp"
#include "reconkit/errors.hpp"
#include "reconkit/json_io.hpp"
#include "reconkit/nrecon.hpp"
#include "reconkit/polydeck.hpp"
#include "reconkit/sweep.hpp"
#include "reconkit/whitney.hpp"

namespace reconkit {

namespace {

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

// A path to an existing file yields its contents, anything else is taken literally.
std::string read_input(const std::string& arg) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        std::ifstream in(arg, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return arg;
}

bool looks_like_json(const std::string& text) {
    const std::string t = trim(text);
    return !t.empty() && (t.front() == '{' || t.front() == '[');
}

std::vector<Graph> read_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open corpus file " + path);
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

std::vector<std::string> split_checks(const std::string& list) {
    if (list == "all") return sweep_check_names();
    std::vector<std::string> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item == "all") return sweep_check_names();
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

Json charpoly_only(const Polynomial& p) { return {{"charpoly", to_json(p)}}; }

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Reconstruction of graph invariants from induced-subgraph data"};
    app.require_subcommand(1);

    std::string what, graph6;
    auto* build = app.add_subcommand("build", "Emit the N-matrix, ELP or polynomial deck of a graph as JSON");
    build->add_option("what", what, "nmatrix | elp | polydeck")->required()->check(CLI::IsMember({"nmatrix", "elp", "polydeck"}));
    build->add_option("graph6", graph6, "graph in graph6 format")->required();

    std::string source = "nmatrix", input;
    bool nonham = false, with_rankpoly = false;
    auto* recon = app.add_subcommand("recon", "Reconstruct invariants from an artifact");
    recon->add_option("--source", source, "nmatrix | polydeck | vertexdeck | direct")
        ->check(CLI::IsMember({"nmatrix", "polydeck", "vertexdeck", "direct"}));
    recon->add_flag("--assert-nonhamiltonian", nonham, "assert that the graph has no hamiltonian cycle");
    recon->add_flag("--rankpoly", with_rankpoly, "also report the rank polynomial (nmatrix and direct)");
    recon->add_option("input", input, "JSON file, or a graph6 string from which the artifact is built")->required();

    int max_n = 0;
    std::string checks = "all", corpus;
    int jobs = default_jobs();
    auto* sweep = app.add_subcommand("sweep", "Run verification checks over all small graphs");
    sweep->add_option("--max-n", max_n, "largest order")->required()->check(CLI::Range(2, 8));
    sweep->add_option("--checks", checks, "comma separated check names, or all");
    sweep->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    sweep->add_option("--corpus", corpus, "graph6 file to use instead of the built-in generator");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitParse;
    }

    try {
        if (*build) {
            const Graph g = parse_graph6(trim(read_input(graph6)));
            if (what == "polydeck") {
                out << to_json(build_polydeck(g)).dump() << "\n";
                return kExitOk;
            }
            if (g.size() == 0) throw DomainError("graph has no edges");
            const NMatrix n = nmatrix(g);
            out << (what == "nmatrix" ? to_json(n) : to_json(elp_from_nmatrix(n))).dump() << "\n";
            return kExitOk;
        }
        if (*recon) {
            const std::string text = read_input(input);
            const bool json = looks_like_json(text);
            Json result;
            if (source == "direct") {
                result = to_json(direct_report(parse_graph6(trim(text)), with_rankpoly));
            } else if (source == "nmatrix") {
                NMatrix n;
                if (json) n = nmatrix_from_json(parse_json(text));
                else {
                    const Graph g = parse_graph6(trim(text));
                    if (g.size() == 0) throw DomainError("graph has no edges");
                    n = strip(nmatrix(g));
                }
                result = to_json(reconstruct(n, with_rankpoly));
            } else if (source == "polydeck") {
                const PolyDeck d = json ? polydeck_from_json(parse_json(text)) : build_polydeck(parse_graph6(trim(text)));
                result = charpoly_only(charpoly_from_polydeck(d, nonham));
            } else {
                const std::vector<Graph> deck =
                    json ? vertex_deck_from_json(parse_json(text)) : vertex_deck(parse_graph6(trim(text)));
                result = charpoly_only(charpoly_from_vertex_deck(deck));
            }
            out << result.dump() << "\n";
            return kExitOk;
        }
        const std::vector<Graph> graphs = corpus.empty() ? graph_corpus(1, max_n, true) : read_corpus(corpus);
        const SweepReport report = run_sweep(graphs, split_checks(checks), jobs);
        out << to_json(report).dump() << "\n";
        if (!report.ok()) {
            for (const auto& [name, t] : report.checks)
                if (t.failed) err << "check " << name << " failed on " << *t.first_counterexample << ": " << t.detail << "\n";
            return kExitCheckFailed;
        }
        return kExitOk;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const NotReconstructibleError& e) {
        out << Json{{"error", "not-reconstructible"}, {"reason", e.reason()}}.dump() << "\n";
        err << e.what() << "\n";
        return kExitNotReconstructible;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}

}  // namespace reconkit
