#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "kcover/components.hpp"
#include "kcover/generators.hpp"
#include "kcover/matching.hpp"
#include "kcover/plane.hpp"
#include "kcover/structure.hpp"
#include "kcover/walks.hpp"

using json = nlohmann::json;
using namespace kcover;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_algorithm = 2;
constexpr int exit_audit = 3;

struct GraphSource {
    std::string input;      // colouring file
    std::string generator;  // random | adversary
    int n = 0;
    int k = 0;
    double p_red = 0.5;
    int l = 1;
    std::uint64_t seed = 0;

    void add_options(CLI::App* cmd)
    {
        cmd->add_option("--input", input, "colouring file (text format)");
        cmd->add_option("--generator", generator, "random | adversary");
        cmd->add_option("--n", n, "number of vertices");
        cmd->add_option("--k", k, "uniformity");
        cmd->add_option("--p-red", p_red, "red probability (random generator)");
        cmd->add_option("--l", l, "number of parts (adversary generator)");
        cmd->add_option("--seed", seed, "generator seed");
    }

    ColouredKGraph load() const
    {
        if (!input.empty()) {
            std::ifstream in(input);
            if (!in) throw CLI::ValidationError("--input", "cannot open " + input);
            return read_colouring(in);
        }
        if (generator == "random") return random_colouring(n, k, p_red, seed);
        if (generator == "adversary") return partition_adversary(n, k, l);
        throw CLI::ValidationError("--generator", "need --input or --generator");
    }
};

int max_threads()
{
    if (const char* env = std::getenv("KGRAPH_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) return t;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void emit(const std::string& path, const std::string& text)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    out << text;
}

json edge_json(const KEdge& e) { return json(e.v); }

json labeling_json(const ColouredKGraph& g, const TightComponentLabeling& l)
{
    json components = json::array();
    for (int id = 0; id < l.num_components(); ++id)
        components.push_back({{"id", id},
                              {"colour", std::string(1, colour_char(l.colour[id]))},
                              {"size", l.size[id]},
                              {"span", vs_vertices(l.span[id])}});
    json edges = json::array();
    for (std::uint64_t r : g.present_ranks())
        edges.push_back({{"edge", edge_json(g.edge_of(r))}, {"component", l.component[r]}});
    return {{"n", l.n}, {"k", l.k}, {"num_components", l.num_components()},
            {"components", components}, {"edges", edges}};
}

json walk_json(const TightPseudoWalk& w)
{
    json edges = json::array();
    for (const KEdge& e : w.edges) edges.push_back(edge_json(e));
    return {{"closed", w.closed}, {"edges", edges}};
}

TightPseudoWalk walk_from_json(const json& j)
{
    TightPseudoWalk w;
    w.closed = j.value("closed", true);
    for (const auto& ej : j.at("edges")) w.edges.push_back(KEdge(ej.get<std::vector<int>>()));
    return w;
}

json triangulation_json(const Triangulation& t)
{
    json phi = json::array();
    for (const KEdge& e : t.phi) phi.push_back(edge_json(e));
    return {{"num_vertices", t.plane.num_vertices}, {"faces", t.plane.faces},
            {"outer", t.plane.outer}, {"outer_cycle", t.outer_cycle},
            {"phi", phi}, {"case_b_splits", t.case_b_splits}};
}

Triangulation triangulation_from_json(const json& j)
{
    Triangulation t;
    t.plane.num_vertices = j.at("num_vertices").get<int>();
    t.plane.faces = j.at("faces").get<std::vector<std::vector<int>>>();
    t.plane.outer = j.at("outer").get<int>();
    t.outer_cycle = j.at("outer_cycle").get<std::vector<int>>();
    for (const auto& ej : j.at("phi")) t.phi.push_back(KEdge(ej.get<std::vector<int>>()));
    t.case_b_splits = j.value("case_b_splits", 0);
    if (!t.plane.finalize()) throw invalid_input("triangulation JSON: invalid embedding");
    return t;
}

json matching_json(const ConnectedMatchingResult& r, const AuditReport& audit)
{
    json medges = json::array();
    for (const KEdge& e : r.matching.edges)
        medges.push_back({{"edge", edge_json(e)}, {"component", r.per_edge_component.at(e)}});
    json layer_sizes = json::array();
    for (const Matching& m : r.layer_matchings) layer_sizes.push_back(m.edges.size());
    return {{"matching", medges},
            {"layers", r.layers},
            {"layer_matching_sizes", layer_sizes},
            {"i_star", r.i_star},
            {"leftover", vs_vertices(r.leftover)},
            {"components_used", r.components_used()},
            {"colour_counts",
             {{"red", r.colour_counts.at(Colour::red)},
              {"blue", r.colour_counts.at(Colour::blue)}}},
            {"f_star", r.f_star},
            {"audit",
             {{"passed", audit.all_passed()}, {"violations", audit.violations}}}};
}

struct ExperimentRow {
    std::uint64_t seed = 0;
    bool ok = false;
    std::string line;
};

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{
        "kcover: monochromatic tight-component analysis, triangulations and "
        "layered connected matchings for 2-edge-coloured complete k-graphs"};
    app.require_subcommand(1);
    std::string output;
    app.add_option("--output", output, "output path (default: stdout)")
        ->capture_default_str();

    GraphSource src_components, src_matching, src_triangulate, src_hexwalk,
        src_verify, src_experiment;

    auto* cmd_components =
        app.add_subcommand("components", "emit the tight-component labeling as JSON");
    src_components.add_options(cmd_components);

    auto* cmd_matching = app.add_subcommand(
        "matching", "run the layered connected matching plus audit, emit JSON");
    src_matching.add_options(cmd_matching);
    double eta = 0.0;
    cmd_matching->add_option("--eta", eta, "leftover fraction threshold");

    auto* cmd_triangulate =
        app.add_subcommand("triangulate", "triangulate a closed walk (JSON in, JSON out)");
    src_triangulate.add_options(cmd_triangulate);
    std::string walk_path;
    int threshold = 64;
    cmd_triangulate->add_option("--walk", walk_path, "walk JSON file")->required();
    cmd_triangulate->add_option("--threshold", threshold,
                                "grid construction cutoff (floored at 4k+2)");

    auto* cmd_hexwalk = app.add_subcommand(
        "hexwalk", "extract the crossing monochromatic walks from a triangulation");
    src_hexwalk.add_options(cmd_hexwalk);
    std::string tri_path;
    cmd_hexwalk->add_option("--triangulation", tri_path, "triangulation JSON file")
        ->required();

    auto* cmd_verify = app.add_subcommand(
        "verify-lemma", "exhaustively check crossing witnesses on small graphs");
    src_verify.add_options(cmd_verify);
    int max_len = 8;
    cmd_verify->add_option("--max-len", max_len, "maximum closed-walk length");

    auto* cmd_experiment =
        app.add_subcommand("experiment", "sweep seeds and emit one CSV row per run");
    src_experiment.add_options(cmd_experiment);
    std::string seeds_spec = "0..9";
    double exp_eta = 0.0;
    cmd_experiment->add_option("--seeds", seeds_spec, "seed range A..B (inclusive)");
    cmd_experiment->add_option("--eta", exp_eta, "leftover fraction threshold");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (cmd_components->parsed()) {
            ColouredKGraph g = src_components.load();
            TightComponentLabeling l = tight_components(g);
            emit(output, labeling_json(g, l).dump(2) + "\n");
            return exit_ok;
        }

        if (cmd_matching->parsed()) {
            ColouredKGraph g = src_matching.load();
            ConnectedMatchingResult r = connected_matching(g, eta);
            AuditReport audit = audit_result(g, r);
            emit(output, matching_json(r, audit).dump(2) + "\n");
            return audit.all_passed() ? exit_ok : exit_audit;
        }

        if (cmd_triangulate->parsed()) {
            ColouredKGraph g = src_triangulate.load();
            std::ifstream in(walk_path);
            if (!in) {
                std::cerr << "cannot open walk file " << walk_path << "\n";
                return exit_usage;
            }
            TightPseudoWalk q = walk_from_json(json::parse(in));
            auto t = triangulate(g, q, threshold);
            if (!t) {
                std::cerr << "triangulation construction failed\n";
                return exit_algorithm;
            }
            emit(output, triangulation_json(*t).dump(2) + "\n");
            return exit_ok;
        }

        if (cmd_hexwalk->parsed()) {
            ColouredKGraph g = src_hexwalk.load();
            std::ifstream in(tri_path);
            if (!in) {
                std::cerr << "cannot open triangulation file " << tri_path << "\n";
                return exit_usage;
            }
            Triangulation t = triangulation_from_json(json::parse(in));
            std::vector<Colour> col;
            for (const KEdge& e : t.phi) col.push_back(g.colour(e));
            HexResult hex = hex_walk(t.plane, t.outer_cycle, col);
            emit(output, json{{"i_star", hex.i_star},
                              {"red_walk", hex.red_walk},
                              {"blue_walk", hex.blue_walk}}
                                 .dump(2) +
                             "\n");
            return exit_ok;
        }

        if (cmd_verify->parsed()) {
            ColouredKGraph g = src_verify.load();
            LemmaReport r = verify_lemma_exhaustive(g, max_len);
            json counter = json::array();
            for (const LemmaInstance& inst : r.counterexamples)
                counter.push_back({{"walk", walk_json(inst.walk)}, {"i", inst.i}});
            emit(output, json{{"walks_enumerated", r.walks_enumerated},
                              {"instances_checked", r.instances_checked},
                              {"witnesses_found", r.witnesses_found},
                              {"counterexamples", counter}}
                                 .dump(2) +
                             "\n");
            return r.counterexamples.empty() ? exit_ok : exit_audit;
        }

        if (cmd_experiment->parsed()) {
            auto sep = seeds_spec.find("..");
            if (sep == std::string::npos) {
                std::cerr << "--seeds expects A..B\n";
                return exit_usage;
            }
            std::uint64_t lo = std::stoull(seeds_spec.substr(0, sep));
            std::uint64_t hi = std::stoull(seeds_spec.substr(sep + 2));
            if (hi < lo) {
                std::cerr << "--seeds range is empty\n";
                return exit_usage;
            }
            const std::size_t count = hi - lo + 1;
            std::vector<ExperimentRow> rows(count);
            const int workers =
                std::min<int>(max_threads(), static_cast<int>(count));
            std::vector<std::thread> pool;
            std::mutex next_mutex;
            std::size_t next = 0;
            auto work = [&]() {
                for (;;) {
                    std::size_t idx;
                    {
                        std::lock_guard<std::mutex> lock(next_mutex);
                        if (next >= count) return;
                        idx = next++;
                    }
                    std::uint64_t seed = lo + idx;
                    ExperimentRow& row = rows[idx];
                    row.seed = seed;
                    try {
                        GraphSource src = src_experiment;
                        src.seed = seed;
                        ColouredKGraph g = src.load();
                        ConnectedMatchingResult r = connected_matching(g, exp_eta);
                        std::ostringstream line;
                        line << seed << ',' << g.n() << ',' << g.k() << ','
                             << r.components_used() << ',' << vs_size(r.leftover) << ','
                             << r.i_star << ',' << r.colour_counts.at(Colour::red) << ','
                             << r.colour_counts.at(Colour::blue);
                        row.line = line.str();
                        row.ok = true;
                    } catch (const std::exception& e) {
                        row.line = std::string("error: ") + e.what();
                    }
                }
            };
            for (int t = 0; t < workers; ++t) pool.emplace_back(work);
            for (auto& t : pool) t.join();

            std::ostringstream csv;
            csv << "seed,n,k,components_used,leftover,i_star,red_components,"
                   "blue_components\n";
            bool all_ok = true;
            for (const ExperimentRow& row : rows) {
                if (!row.ok) {
                    std::cerr << "seed " << row.seed << ": " << row.line << "\n";
                    all_ok = false;
                    continue;
                }
                csv << row.line << "\n";
            }
            emit(output, csv.str());
            return all_ok ? exit_ok : exit_algorithm;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return exit_usage;
    } catch (const invalid_input& e) {
        std::cerr << e.what() << "\n";
        return exit_algorithm;
    } catch (const precondition_violation& e) {
        std::cerr << e.what() << "\n";
        return exit_algorithm;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return exit_algorithm;
    }
    return exit_usage;
}
