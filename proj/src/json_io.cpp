#include "ramseylab/json_io.hpp"

namespace ramsey {

using nlohmann::json;

json to_json(const Rational& r) { return r.str(); }

json to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    return json{{"n", g.vertex_count()}, {"edges", edges}};
}

json to_json(const Graph& host, const EdgeColouring& c) {
    json out = json::array();
    for (int e = 0; e < host.edge_count(); ++e) {
        const auto& [u, v] = host.edge(e);
        out.push_back({{"edge", {u, v}}, {"colour", c.colour[static_cast<size_t>(e)]}});
    }
    return out;
}

json to_json(const DensityReport& rep) {
    return json{{"d", rep.d.str()},
                {"m", rep.m.str()},
                {"m_witness", rep.m_witness},
                {"d2", rep.d2.str()},
                {"m2", rep.m2.str()},
                {"m2_witness", rep.m2_witness}};
}

json to_json(const ClosedStatus& status) {
    return json{{"closed_edges", status.closed_edges},
                {"open_copies", status.open_copies},
                {"uncovered_edges", status.uncovered_edges},
                {"uncovered_vertices", status.uncovered_vertices},
                {"is_closed", status.is_closed}};
}

json to_json(const BlockDecomposition& decomp) {
    return json{{"blocks", decomp.blocks}, {"block_of_copy", decomp.block_of_copy}};
}

json to_json(const Graph& host, const ColouringTrace& trace) {
    json paired = json::array();
    for (const auto& [e1, e2, col] : trace.paired_edges)
        paired.push_back({{"edges", {e1, e2}}, {"colour", col}});
    json solo = json::array();
    for (const auto& [e, col] : trace.solo_edges) solo.push_back({{"edge", e}, {"colour", col}});
    json blocks = json::array();
    for (size_t b = 0; b < trace.blocks.size(); ++b)
        blocks.push_back({{"edges", trace.blocks[b]}, {"colouring", trace.block_colourings[b]}});
    return json{{"paired", paired},
                {"solo", solo},
                {"blocks", blocks},
                {"combined", to_json(host, trace.combined)}};
}

json to_json(const Graph& host, const Verdict& verdict) {
    json out{{"arrows", verdict.arrows}, {"explored", verdict.explored}};
    if (verdict.witness) out["witness"] = to_json(host, *verdict.witness);
    return out;
}

json to_json(const ScanResult& scan) {
    json out{{"has_components", scan.has_components}};
    if (scan.has_components) {
        out["max_excess"] = scan.max_excess;
        out["max_component"] = {{"v", scan.max_v}, {"e", scan.max_e}, {"r", scan.max_r}};
    } else {
        out["max_excess"] = "-inf";
    }
    if (scan.offender) out["offender"] = *scan.offender;
    return out;
}

json to_json(const JansonBound& bound) {
    json pairs = json::object();
    for (const auto& [size, count] : bound.ordered_pairs_by_union)
        pairs[std::to_string(size)] = count;
    return json{{"mu", bound.mu},
                {"delta", bound.delta},
                {"lower_bound", bound.lower_bound},
                {"copies", bound.copy_count},
                {"ordered_pairs_by_union", pairs}};
}

namespace {

const char* status_name(TrialStatus s) {
    switch (s) {
        case TrialStatus::success: return "success";
        case TrialStatus::failure: return "failure";
        case TrialStatus::offender: return "offender";
        case TrialStatus::indeterminate: return "indeterminate";
    }
    return "?";
}

const char* mode_name(TrialMode m) {
    switch (m) {
        case TrialMode::scan: return "scan";
        case TrialMode::colour: return "colour";
        case TrialMode::appear: return "appear";
    }
    return "?";
}

}  // namespace

json to_json(const TrialReport& report) {
    const auto& cfg = report.config;
    json rows = json::array();
    for (const auto& row : report.rows)
        rows.push_back({{"trial", row.index},
                        {"status", status_name(row.status)},
                        {"edges", row.edges},
                        {"components", row.components},
                        {"max_component", {{"v", row.max_v}, {"e", row.max_e}, {"r", row.max_r}}},
                        {"ms", row.ms}});
    return json{{"config",
                 {{"n", cfg.n},
                  {"c", cfg.c},
                  {"exponent", cfg.exponent.str()},
                  {"p", cfg.p()},
                  {"trials", cfg.trials},
                  {"seed", cfg.seed},
                  {"pattern", cfg.pattern_name},
                  {"mode", mode_name(cfg.mode)},
                  {"k", cfg.k},
                  {"jobs", cfg.jobs}}},
                {"rows", rows},
                {"aggregate",
                 {{"successes", report.successes},
                  {"failures", report.failures},
                  {"offenders", report.offenders},
                  {"indeterminate", report.indeterminate},
                  {"success_fraction", report.success_fraction},
                  {"wilson95", {report.ci.lo, report.ci.hi}},
                  {"max_component",
                   {{"v", report.max_component_v},
                    {"e", report.max_component_e},
                    {"r", report.max_component_r}}}}},
                {"total_ms", report.total_ms}};
}

}  // namespace ramsey
