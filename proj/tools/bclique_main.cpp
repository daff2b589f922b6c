#include "bclique/analysis.hpp"
#include "bclique/corpus.hpp"
#include "bclique/graph_io.hpp"
#include "bclique/neighborhood_geometry.hpp"
#include "bclique/report.hpp"
#include "bclique/spectral.hpp"
#include "bclique/stability.hpp"
#include "bclique/version.hpp"
#include "bclique/weighted_hom.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace bclique;

std::uint64_t fnv1a(std::string_view data, std::uint64_t h = 0xcbf29ce484222325ULL) {
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

struct Session {
    std::uint64_t input_hash = 0xcbf29ce484222325ULL;
    Json params = Json::object();

    void feed(const std::string& text) { input_hash = fnv1a(text, input_hash); }

    ParsedGraph load(const std::string& path) {
        std::string text = read_text_file(path);
        feed(text);
        return parse_graph(text);
    }

    int emit(const Json& reports) const {
        Json envelope;
        envelope["version"] = version;
        envelope["input_hash"] = hex64(input_hash);
        envelope["params"] = params;
        envelope["reports"] = reports;
        std::cout << envelope.dump(2) << "\n";
        return 0;
    }

    int emit_reports(const std::vector<CheckReport>& reports) {
        emit(reports_to_json(reports));
        for (const auto& r : reports)
            if (r.verdict == Verdict::Violated) return 2;
        return 0;
    }
};

std::uint64_t clique_budget_from_env() {
    if (const char* s = std::getenv("BCLIQUE_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw std::invalid_argument("BCLIQUE_BUDGET must be a positive integer");
    }
    return default_clique_budget;
}

Rat parse_rat_flag(const std::string& s) {
    if (s.find('.') != std::string::npos)
        throw std::invalid_argument("decimal input rejected, use p/q syntax: '" + s + "'");
    return parse_rational(s);
}

std::vector<Rat> parse_grid(const std::vector<std::string>& items,
                            const std::vector<Rat>& fallback) {
    if (items.empty()) return fallback;
    std::vector<Rat> out;
    for (const auto& s : items) out.push_back(parse_rat_flag(s));
    return out;
}

Json spectrum_json(const SpectralProfile& prof) {
    Json j;
    j["n"] = prof.n;
    j["d"] = prof.d;
    j["eigenvalues"] = prof.eigenvalues;
    j["error_radius"] = prof.error_radius;
    j["lambda"] = rat_string(prof.lambda);
    return j;
}

std::vector<CheckReport> monotonicity_reports(const Graph& g, VertexSet b,
                                              const std::vector<Rat>& grid,
                                              std::uint64_t budget) {
    std::vector<CheckReport> reports;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.vertex_count() < 2) break;
        CheckReport r = check_induced_monotonicity(g, b, v, grid, budget);
        r.notes = "deleted vertex " + std::to_string(g.label(v)) + "; " + r.notes;
        reports.push_back(std::move(r));
    }
    for (auto [u, v] : g.edges()) {
        CheckReport r = check_spanning_monotonicity(g, b, u, v, grid, budget);
        r.notes = "deleted edge {" + std::to_string(g.label(u)) + "," +
                  std::to_string(g.label(v)) + "}; " + r.notes;
        reports.push_back(std::move(r));
    }
    return reports;
}

std::vector<CheckReport> spectral_reports(const Graph& g, VertexSet b, std::uint64_t budget) {
    std::vector<Rat> grid = default_spectral_grid();
    std::vector<CheckReport> reports;
    CheckReport profile;
    profile.claim = "spectral-profile";
    try {
        profile.verdict = Verdict::Holds;
        profile.witness = spectrum_json(SpectralProfile::compute(g));
        profile.notes = "informational: certified spectrum of the regular input";
    } catch (const std::invalid_argument& e) {
        profile.verdict = Verdict::NotApplicable;
        profile.notes = e.what();
    }
    reports.push_back(std::move(profile));
    reports.push_back(check_common_neighborhood_bound(g, b));
    reports.push_back(check_coefficient_bounds(g, b, budget));
    reports.push_back(check_effective_degree_bound(g, b, grid, budget));
    reports.push_back(check_root_bound(g, b, grid, budget));
    return reports;
}

std::vector<CheckReport> stability_reports(const Graph& g, VertexSet b, int r, int trials,
                                           std::uint64_t seed, std::uint64_t budget) {
    std::vector<CheckReport> reports;
    reports.push_back(check_main_stability_theorem(g, b, r, trials, seed, budget));
    reports.push_back(triangle_free_stability_check(g, b, trials, seed, budget));
    return reports;
}

std::vector<CheckReport> hom_reports(const HomFile& hf, std::uint64_t budget) {
    std::vector<CheckReport> reports;
    reports.push_back(validate_homomorphism(hf.hom));
    reports.push_back(check_clique_lift(hf.hom, budget));
    WeightFunction wg = hf.w_g ? *hf.w_g : WeightFunction::ones(hf.b_g);
    reports.push_back(check_hom_monotonicity(hf.hom, hf.b_g, wg, budget));
    return reports;
}

// Weight monotonicity of the declared weights against the all-ones baseline
// (declared weights are >= 1 pointwise by construction).
std::vector<CheckReport> weight_reports(const ParsedGraph& pg, std::uint64_t budget) {
    std::vector<CheckReport> reports;
    if (!pg.weights) return reports;
    WeightFunction w;
    w.values = *pg.weights;
    WeightFunction ones = WeightFunction::ones(pg.b);
    reports.push_back(check_weight_monotonicity(pg.graph, pg.b, ones, w, budget));
    std::vector<Rat> ygrid = grid_ge_one();
    reports.push_back(check_weighted_root_monotonicity(pg.graph, pg.b, ones, w, ygrid, budget));
    return reports;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bclique: exact bivariate B-restricted clique polynomials, root "
                 "isolation, and theorem checkers"};
    app.require_subcommand(1);

    std::string graph_path, map_path, strategy = "all", y_str = "1";
    std::vector<std::string> ygrid_raw;
    int r = 1, trials = default_stability_trials;
    std::uint64_t seed = 42;
    bool quick = false;

    auto* compute = app.add_subcommand("compute", "compute C_B(G;x,y)");
    compute->add_option("--graph", graph_path, "graph file")->required();
    compute->add_option("--strategy", strategy,
                        "brute|vertex|edge|peo|all (all cross-checks every strategy)");

    auto* zeta_cmd = app.add_subcommand("zeta", "isolate negative roots of the y-section");
    zeta_cmd->add_option("--graph", graph_path, "graph file")->required();
    zeta_cmd->add_option("--y", y_str, "rational y >= 0, p/q syntax");

    auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of a regular graph");
    spectrum->add_option("--graph", graph_path, "graph file")->required();

    auto* bounds = app.add_subcommand("bounds", "B-independence and B-girth bounds");
    bounds->add_option("--graph", graph_path, "graph file")->required();

    auto* check = app.add_subcommand("check", "theorem checkers");
    check->require_subcommand(1);
    auto add_common = [&](CLI::App* c, bool needs_graph) {
        if (needs_graph) c->add_option("--graph", graph_path, "graph file")->required();
        return c;
    };
    auto* c_mono = add_common(check->add_subcommand("monotonicity", "deletion monotonicity"), true);
    c_mono->add_option("--y-grid", ygrid_raw, "rational grid points");
    add_common(check->add_subcommand("bounds", "extremal bounds"), true);
    auto* c_stab = add_common(check->add_subcommand("stability", "real-stability battery"), true);
    c_stab->add_option("--r", r, "connectivity parameter");
    c_stab->add_option("--trials", trials, "line restriction trials");
    c_stab->add_option("--seed", seed, "RNG seed");
    add_common(check->add_subcommand("spectral", "spectral bound checkers"), true);
    auto* c_hom = check->add_subcommand("hom", "homomorphism checkers");
    c_hom->add_option("--map", map_path, "homomorphism map file")->required();
    auto* c_all = add_common(check->add_subcommand("all", "all applicable checkers"), true);
    c_all->add_option("--map", map_path, "optional homomorphism map file");
    c_all->add_option("--r", r, "connectivity parameter");
    c_all->add_option("--trials", trials, "line restriction trials");
    c_all->add_option("--seed", seed, "RNG seed");

    auto* corpus_cmd = app.add_subcommand("corpus", "randomized corpus suites");
    corpus_cmd->add_option("--seed", seed, "corpus seed");
    corpus_cmd->add_flag("--quick", quick, "shrink random corpus for fast runs");

    CLI11_PARSE(app, argc, argv);

    try {
        std::uint64_t budget = clique_budget_from_env();
        Session session;

        if (compute->parsed()) {
            session.params = {{"command", "compute"}, {"graph", graph_path}, {"strategy", strategy}};
            ParsedGraph pg = session.load(graph_path);
            std::optional<Peo> peo = is_chordal(pg.graph);
            std::map<std::string, BivariatePoly> results;
            if (strategy == "brute" || strategy == "all")
                results["brute"] = cbpoly_bruteforce(pg.graph, pg.b, budget);
            if (strategy == "vertex" || strategy == "all")
                results["vertex"] = cbpoly_vertex_recurrence(pg.graph, pg.b, budget);
            if (strategy == "edge" || strategy == "all")
                results["edge"] = cbpoly_edge_recurrence(pg.graph, pg.b, budget);
            if (strategy == "peo" || (strategy == "all" && peo)) {
                if (!peo) throw std::invalid_argument("peo strategy requires a chordal graph");
                results["peo"] = cbpoly_peo(pg.graph, pg.b, *peo);
            }
            if (results.empty()) throw std::invalid_argument("unknown strategy: " + strategy);
            const BivariatePoly& first = results.begin()->second;
            for (const auto& [name, p] : results)
                if (!(p == first))
                    throw std::logic_error("strategy cross-check failed: " + name +
                                           " disagrees with " + results.begin()->first);
            Json out;
            out["polynomial"] = bipoly_to_json(first);
            out["pretty"] = first.pretty();
            Json names = Json::array();
            for (const auto& [name, p] : results) names.push_back(name);
            out["strategies"] = names;
            out["total_cliques"] = first.total_coefficient_sum().str();
            return session.emit(out);
        }

        if (zeta_cmd->parsed()) {
            Rat y = parse_rat_flag(y_str);
            session.params = {{"command", "zeta"}, {"graph", graph_path}, {"y", rat_string(y)}};
            ParsedGraph pg = session.load(graph_path);
            RootAnalysis ra = zeta(pg.graph, pg.b, y, budget);
            return session.emit(root_analysis_json(ra));
        }

        if (spectrum->parsed()) {
            session.params = {{"command", "spectrum"}, {"graph", graph_path}};
            ParsedGraph pg = session.load(graph_path);
            return session.emit(spectrum_json(SpectralProfile::compute(pg.graph)));
        }

        if (bounds->parsed()) {
            session.params = {{"command", "bounds"}, {"graph", graph_path}};
            ParsedGraph pg = session.load(graph_path);
            return session.emit_reports(
                {check_b_independence_bound(pg.graph, pg.b, budget),
                 check_b_girth_bound(pg.graph, pg.b, budget)});
        }

        if (check->parsed()) {
            CLI::App* sub = check->get_subcommands().front();
            const std::string name = sub->get_name();
            if (name == "hom") {
                session.params = {{"command", "check hom"}, {"map", map_path}};
                HomFile hf = parse_homomorphism_file(map_path);
                session.feed(read_text_file(map_path));
                session.feed(read_text_file(hf.g_path));
                session.feed(read_text_file(hf.h_path));
                return session.emit_reports(hom_reports(hf, budget));
            }
            std::vector<Rat> grid = parse_grid(ygrid_raw, default_unit_grid());
            session.params = {{"command", "check " + name}, {"graph", graph_path}};
            ParsedGraph pg = session.load(graph_path);
            std::vector<CheckReport> reports;
            if (name == "monotonicity") {
                reports = monotonicity_reports(pg.graph, pg.b, grid, budget);
            } else if (name == "bounds") {
                reports = {check_b_independence_bound(pg.graph, pg.b, budget),
                           check_b_girth_bound(pg.graph, pg.b, budget)};
            } else if (name == "stability") {
                session.params["r"] = r;
                session.params["trials"] = trials;
                session.params["seed"] = seed;
                reports = stability_reports(pg.graph, pg.b, r, trials, seed, budget);
                reports.push_back(check_neighborhood_geometry(pg.graph, r));
            } else if (name == "spectral") {
                reports = spectral_reports(pg.graph, pg.b, budget);
            } else if (name == "all") {
                session.params["r"] = r;
                session.params["trials"] = trials;
                session.params["seed"] = seed;
                reports = monotonicity_reports(pg.graph, pg.b, grid, budget);
                reports.push_back(check_b_independence_bound(pg.graph, pg.b, budget));
                reports.push_back(check_b_girth_bound(pg.graph, pg.b, budget));
                for (auto& rep : stability_reports(pg.graph, pg.b, r, trials, seed, budget))
                    reports.push_back(std::move(rep));
                reports.push_back(check_neighborhood_geometry(pg.graph, r));
                for (auto& rep : spectral_reports(pg.graph, pg.b, budget))
                    reports.push_back(std::move(rep));
                for (auto& rep : weight_reports(pg, budget)) reports.push_back(std::move(rep));
                if (!map_path.empty()) {
                    HomFile hf = parse_homomorphism_file(map_path);
                    session.feed(read_text_file(map_path));
                    session.feed(read_text_file(hf.g_path));
                    session.feed(read_text_file(hf.h_path));
                    for (auto& rep : hom_reports(hf, budget)) reports.push_back(std::move(rep));
                }
            }
            return session.emit_reports(reports);
        }

        if (corpus_cmd->parsed()) {
            session.params = {{"command", "corpus"}, {"seed", seed}, {"quick", quick}};
            session.feed("corpus-seed=" + std::to_string(seed));
            std::vector<CorpusEntry> corpus = build_corpus(seed, quick);
            Json out;
            out["corpus_size"] = corpus.size();
            out["agreement_pairs"] = run_agreement_suite(corpus, budget);
            out["specialization_graphs"] = run_specialization_suite(corpus, budget);
            std::vector<Rat> grid = default_unit_grid();
            SuiteSummary mono = run_monotonicity_suite(corpus, grid, seed, budget);
            out["monotonicity"] = mono.to_json();
            SuiteSummary bnd = run_bounds_suite(corpus, budget);
            out["bounds"] = bnd.to_json();
            session.emit(out);
            return (mono.violated || bnd.violated) ? 2 : 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
