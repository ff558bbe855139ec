#include "ramseylab/cli.hpp"

#include "ramseylab/density.hpp"
#include "ramseylab/experiments.hpp"
#include "ramseylab/hblocks.hpp"
#include "ramseylab/json_io.hpp"
#include "ramseylab/rainbow.hpp"
#include "ramseylab/triangle.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace ramsey {

namespace {

using nlohmann::json;

// Graph arguments accept a file path (edge-list format) or a named graph;
// an existing file wins.
Graph load_graph(const std::string& spec) {
    if (std::filesystem::exists(spec)) {
        std::ifstream in(spec);
        std::ostringstream text;
        text << in.rdbuf();
        return parse_graph(text.str());
    }
    return parse_named(spec);
}

int default_jobs() {
    if (const char* env = std::getenv("RAMSEYLAB_JOBS")) {
        int jobs = std::atoi(env);
        if (jobs >= 1) return jobs;
    }
    return 1;
}

const char* rainbow_status_name(RainbowStatus s) {
    switch (s) {
        case RainbowStatus::ok: return "ok";
        case RainbowStatus::block_budget_exhausted: return "budget-exhausted";
        case RainbowStatus::block_uncolourable: return "block-uncolourable";
    }
    return "?";
}

struct Options {
    std::string input, pattern, mode, out;
    int k = 3;
    int jobs = default_jobs();
    std::uint64_t seed = 0;
    bool seed_set = false;
    int n = 0, trials = 0;
    double c = 1.0, p = 0.0;
    std::string exponent = "1/2";
    std::uint64_t budget_nodes = 50'000'000;
    int budget_edges = 0;  // 0 keeps the per-command default
};

SearchBudget budget_for(const Options& opt, int default_edges) {
    SearchBudget budget;
    budget.max_nodes = opt.budget_nodes;
    budget.max_edges = opt.budget_edges > 0 ? opt.budget_edges : default_edges;
    return budget;
}

CommandResult cmd_density(const Options& opt) {
    Graph g = load_graph(opt.input);
    auto rep = density_report(g);
    return {CommandResult::Status::ok,
            json{{"graph", to_json(g)}, {"density", to_json(rep)}}};
}

CommandResult cmd_check(const Options& opt) {
    Graph g = load_graph(opt.input);
    json out{{"graph", to_json(g)}};
    auto facts = structural_facts(g);
    out["min_degree"] = facts.min_degree;
    out["two_connected"] = facts.two_connected;
    if (g.edge_count() >= 1) {
        out["balanced"] = is_balanced(g);
        out["strictly_balanced"] = is_strictly_balanced(g);
        out["spacious"] = is_spacious(g);
    }
    if (g.vertex_count() >= 3 && g.edge_count() >= 1) {
        out["two_balanced"] = is_2_balanced(g);
        out["strictly_two_balanced"] = is_strictly_2_balanced(g);
    }
    if (g.edge_count() >= 5) out["robust_spacious"] = robust_spacious_check(g);
    try {
        auto gate = special_case_gate(g);
        out["special_case_gate"] = {{"m2", gate.m2.str()},
                                    {"bound", gate.bound.str()},
                                    {"passes", gate.passes},
                                    {"regular", gate.regular},
                                    {"degree", gate.degree},
                                    {"regular_condition", gate.regular_condition}};
    } catch (const std::invalid_argument& e) {
        out["special_case_gate"] = {{"error", e.what()}};
    }
    return {CommandResult::Status::ok, out};
}

CommandResult cmd_blocks(const Options& opt) {
    Graph g = load_graph(opt.input);
    Graph pattern = load_graph(opt.pattern);
    auto status = closed_status(g, pattern);
    json out{{"closed_status", to_json(status)}};
    if (status.is_closed) out["decomposition"] = to_json(block_decomposition(g, pattern));
    return {CommandResult::Status::ok, out};
}

CommandResult cmd_colour(const Options& opt) {
    Graph g = load_graph(opt.input);
    Graph pattern = load_graph(opt.pattern);
    SearchBudget budget = budget_for(opt, 12);
    RainbowResult run = (opt.mode == "aram")
                            ? rainbow_colour(g, pattern, budget, opt.jobs)
                            : rainbow_colour_constrained(g, pattern, opt.k, budget, opt.jobs);
    json out{{"mode", opt.mode}, {"status", rainbow_status_name(run.status)}};
    if (run.status == RainbowStatus::ok) {
        out["trace"] = to_json(g, run.trace);
        json oracle{{"rainbow_pattern", has_rainbow_copy(g, run.trace.combined, pattern)}};
        if (opt.mode == "aram") oracle["proper"] = is_proper(g, run.trace.combined);
        else oracle["mono_star"] = has_monochromatic_star(g, run.trace.combined, opt.k);
        out["oracle"] = oracle;
        return {CommandResult::Status::ok, out};
    }
    out["certificate_block"] = run.certificate_block;
    return {run.status == RainbowStatus::block_budget_exhausted ? CommandResult::Status::indeterminate
                                                                : CommandResult::Status::ok,
            out};
}

CommandResult cmd_colour_triangle(const Options& opt) {
    Graph g = load_graph(opt.input);
    auto run = colour_graph_triangle_mode(g, opt.k, budget_for(opt, 32), opt.jobs);
    json out{{"k", opt.k}, {"ok", run.ok}, {"components", run.component_count},
             {"fallbacks", run.fallback_count}};
    if (run.ok) {
        out["colouring"] = to_json(g, run.colouring);
        out["oracle"] = {{"mono_star", has_monochromatic_star(g, run.colouring, opt.k)},
                         {"rainbow_triangle",
                          has_rainbow_copy(g, run.colouring, make_named("K", {3}))}};
    } else {
        out["offending_component"] = run.offending_component;
    }
    return {CommandResult::Status::ok, out};
}

CommandResult cmd_triangles(const Options& opt) {
    Graph g = load_graph(opt.input);
    json comps = json::array();
    for (const auto& comp : triangle_components(g)) {
        auto sub = subgraph_by_edges(g, comp);
        comps.push_back({{"edges", comp},
                         {"v", sub.graph.vertex_count()},
                         {"e", sub.graph.edge_count()},
                         {"r", sub.graph.edge_count() - 2 * sub.graph.vertex_count() + 3}});
    }
    return {CommandResult::Status::ok,
            json{{"components", comps}, {"scan", to_json(scan_triangle_density(g))}}};
}

CommandResult cmd_decide(const Options& opt) {
    Graph g = load_graph(opt.input);
    Graph pattern = load_graph(opt.pattern);
    SearchBudget budget = budget_for(opt, 14);
    DecideResult result = (opt.mode == "aram") ? decide_aram(g, pattern, budget, opt.jobs)
                                               : decide_cram(g, opt.k, pattern, budget, opt.jobs);
    if (result.status == DecideStatus::budget_exhausted)
        return {CommandResult::Status::indeterminate,
                json{{"status", "budget-exhausted"}, {"explored", result.verdict.explored}}};
    return {CommandResult::Status::ok, to_json(g, result.verdict)};
}

CommandResult cmd_experiment(const Options& opt) {
    TrialConfig cfg;
    cfg.n = opt.n;
    cfg.c = opt.c;
    cfg.exponent = Rational::parse(opt.exponent);
    cfg.trials = opt.trials;
    cfg.seed = opt.seed;
    cfg.pattern_name = opt.pattern;
    cfg.pattern = load_graph(opt.pattern);
    cfg.k = opt.k;
    cfg.jobs = opt.jobs;
    cfg.budget = budget_for(opt, 12);  // blocks beyond 12 edges go indeterminate
    if (opt.mode == "scan") cfg.mode = TrialMode::scan;
    else if (opt.mode == "colour") cfg.mode = TrialMode::colour;
    else cfg.mode = TrialMode::appear;

    auto report = run_experiment(cfg);
    json out = to_json(report);
    if (!opt.out.empty()) {
        std::ofstream file(opt.out);
        file << out.dump(2) << "\n";
    }
    bool any_indeterminate = report.indeterminate > 0;
    return {any_indeterminate ? CommandResult::Status::indeterminate : CommandResult::Status::ok, out};
}

CommandResult cmd_janson(const Options& opt) {
    Graph pattern = load_graph(opt.pattern);
    auto bound = janson_bound(pattern, opt.n, opt.p);
    return {CommandResult::Status::ok, to_json(bound)};
}

}  // namespace

CommandResult dispatch(const std::vector<std::string>& args) {
    CLI::App app{"constrained-Ramsey and anti-Ramsey colouring laboratory"};
    app.require_subcommand(1);
    Options opt;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--input", opt.input, "graph file or named graph")->required();
    };
    auto add_pattern = [&](CLI::App* cmd, bool required) {
        auto* o = cmd->add_option("--pattern", opt.pattern, "pattern graph file or name");
        if (required) o->required();
    };
    auto add_jobs = [&](CLI::App* cmd) { cmd->add_option("--jobs", opt.jobs, "worker threads"); };
    auto add_budget = [&](CLI::App* cmd) {
        cmd->add_option("--budget-nodes", opt.budget_nodes, "search node limit");
        cmd->add_option("--budget-edges", opt.budget_edges, "search edge-count limit");
    };

    auto* density = app.add_subcommand("density", "exact density report");
    add_input(density);

    auto* check = app.add_subcommand("check", "balancedness and structural predicates");
    add_input(check);

    auto* blocks = app.add_subcommand("blocks", "closed status and block decomposition");
    add_input(blocks);
    add_pattern(blocks, true);

    auto* colour = app.add_subcommand("colour", "reduction-algorithm colouring");
    add_input(colour);
    add_pattern(colour, true);
    colour->add_option("--mode", opt.mode, "aram or cram")->required()
        ->check(CLI::IsMember({"aram", "cram"}));
    colour->add_option("--k", opt.k, "star arm count (cram)");
    add_jobs(colour);
    add_budget(colour);

    auto* ct = app.add_subcommand("colour-triangle", "triangle-component colouring");
    add_input(ct);
    ct->add_option("--k", opt.k, "3 or 4")->required();
    add_jobs(ct);
    add_budget(ct);

    auto* triangles = app.add_subcommand("triangles", "triangle-connected components");
    add_input(triangles);

    auto* decide = app.add_subcommand("decide", "exhaustive arrows decision");
    add_input(decide);
    add_pattern(decide, true);
    decide->add_option("--mode", opt.mode, "cram or aram")->required()
        ->check(CLI::IsMember({"cram", "aram"}));
    decide->add_option("--k", opt.k, "star arm count (cram)");
    add_jobs(decide);
    add_budget(decide);

    auto* experiment = app.add_subcommand("experiment", "seeded G(n,p) trials");
    experiment->add_option("--mode", opt.mode, "scan, colour or appear")->required()
        ->check(CLI::IsMember({"scan", "colour", "appear"}));
    experiment->add_option("--n", opt.n, "vertex count")->required();
    experiment->add_option("--c", opt.c, "threshold constant")->required();
    experiment->add_option("--exponent", opt.exponent, "exponent as p/q (p = c*n^-exp)");
    experiment->add_option("--trials", opt.trials, "trial count")->required();
    experiment->add_option("--seed", opt.seed, "master seed")->required();
    add_pattern(experiment, true);
    experiment->add_option("--k", opt.k, "star arm count for colour mode");
    experiment->add_option("--out", opt.out, "also write the report to this file");
    add_jobs(experiment);
    add_budget(experiment);

    auto* janson = app.add_subcommand("janson", "exact Janson lower bound");
    add_pattern(janson, true);
    janson->add_option("--n", opt.n, "host clique size")->required();
    janson->add_option("--p", opt.p, "edge probability")->required();

    std::vector<char*> argv;
    std::vector<std::string> storage;
    storage.push_back("ramseylab");
    storage.insert(storage.end(), args.begin(), args.end());
    for (auto& s : storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream usage;
        usage << app.help();
        return {CommandResult::Status::error,
                json{{"error", e.what()}, {"usage", usage.str()}}};
    }

    try {
        if (density->parsed()) return cmd_density(opt);
        if (check->parsed()) return cmd_check(opt);
        if (blocks->parsed()) return cmd_blocks(opt);
        if (colour->parsed()) return cmd_colour(opt);
        if (ct->parsed()) return cmd_colour_triangle(opt);
        if (triangles->parsed()) return cmd_triangles(opt);
        if (decide->parsed()) return cmd_decide(opt);
        if (experiment->parsed()) return cmd_experiment(opt);
        if (janson->parsed()) return cmd_janson(opt);
    } catch (const std::exception& e) {
        return {CommandResult::Status::error, json{{"error", e.what()}}};
    }
    return {CommandResult::Status::error, json{{"error", "no subcommand"}}};
}

}  // namespace ramsey
