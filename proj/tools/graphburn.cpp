// Command-line surface for the toolkit. Subcommands: generate, burn,
// dominate, reduce, verify, experiment, bounds.
//
// Exit codes: 0 success, 1 invalid input, 2 invalid witness,
// 3 internal verification failure (a solver emitted something the verifier
// rejects; that is a bug, never an expected path).

#include <iostream>

#include <CLI11.hpp>

#include "gburn/domination.hpp"
#include "gburn/edgelist.hpp"
#include "gburn/experiment.hpp"
#include "gburn/generators.hpp"
#include "gburn/witness_json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 1;
constexpr int kExitInvalidWitness = 2;
constexpr int kExitInternalFailure = 3;

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        if (content.empty() || content.back() != '\n') std::cout << '\n';
    } else {
        gburn::write_text_file(out_path, content.back() == '\n' ? content : content + "\n");
    }
}

int run_generate(const std::string& family, const std::vector<long long>& params,
                 uint64_t seed, const std::string& out_path) {
    std::vector<std::string> names = gburn::detail::required_params(family);
    if (params.size() != names.size()) {
        std::ostringstream msg;
        msg << "family " << family << " takes " << names.size() << " parameter(s):";
        for (const auto& n : names) msg << ' ' << n;
        throw std::runtime_error(msg.str());
    }
    std::map<std::string, long long> p;
    for (size_t i = 0; i < names.size(); ++i) p[names[i]] = params[i];
    gburn::Graph g = gburn::detail::make_family_graph(family, p, seed);
    emit(out_path, gburn::to_edge_list(g));
    return kExitOk;
}

int run_burn(const std::string& mode, const std::string& graph_path, int exact_threshold,
             double epsilon, const std::string& out_path) {
    gburn::Graph g = gburn::read_edge_list(graph_path);
    gburn::BurningSchedule schedule;
    if (mode == "exact") {
        schedule = gburn::burning_number_exact(g).second;
    } else if (mode == "greedy") {
        schedule = gburn::greedy_burning(g);
    } else if (mode == "mindeg") {
        auto [s, report] = gburn::burn_via_mindeg(g, exact_threshold);
        schedule = s;
        std::cerr << "h_size=" << report.h_size << " twohop_bound=" << report.twohop_bound
                  << " h_length=" << report.h_length << " total_length=" << report.total_length
                  << " used_exact=" << (report.used_exact ? "true" : "false");
        if (report.bounds)
            std::cerr << " sqrt_ceil=" << report.bounds->sqrt_ceil
                      << " mindeg_ref=" << report.bounds->mindeg_ref
                      << " general_upper=" << report.bounds->general_upper;
        std::cerr << '\n';
    } else if (mode == "weakdeg") {
        auto [s, report] = gburn::burn_via_weakdeg(g, epsilon, exact_threshold);
        schedule = s;
        std::cerr << "branch=" << (report.leaf_branch ? "leaf" : "reduction")
                  << " leaf_count=" << report.leaf_count << " cds_size=" << report.cds_size
                  << " reference_size=" << report.reference_size
                  << " nondeg2_fraction=" << report.nondeg2_fraction
                  << " h_length=" << report.h_length << " total_length=" << report.total_length
                  << '\n';
    } else {
        throw std::runtime_error("unknown burn mode: " + mode);
    }
    if (!gburn::verify_schedule(g, schedule))
        throw std::logic_error("emitted schedule failed verification");
    emit(out_path, gburn::schedule_json(g.vertex_count(), schedule, true));
    return kExitOk;
}

int run_dominate(const std::string& mode, const std::string& graph_path, int start,
                 const std::string& trace_path, const std::string& out_path) {
    gburn::Graph g = gburn::read_edge_list(graph_path);
    gburn::HopDomWitness w;
    if (mode == "2hop") {
        gburn::Vertex s = start >= 0 ? start : gburn::max_degree_vertex(g);
        gburn::TwoHopResult r = gburn::connected_two_hop_dominating(g, s);
        w = r.witness;
        if (!trace_path.empty()) gburn::write_text_file(trace_path, gburn::growth_trace_csv(r.trace));
    } else if (mode == "cds-nonleaf") {
        w = gburn::nonleaf_cds(g);
    } else if (mode == "cds-greedy") {
        w = gburn::greedy_cds(g);
    } else {
        throw std::runtime_error("unknown dominate mode: " + mode);
    }
    if (!gburn::verify_hop_domination(g, w))
        throw std::logic_error("emitted dominating set failed verification");
    emit(out_path, gburn::domset_json(g.vertex_count(), w, true));
    return kExitOk;
}

int run_reduce(const std::string& graph_path, const std::string& out_path) {
    gburn::Graph g = gburn::read_edge_list(graph_path);
    gburn::MultiGraph mg = gburn::MultiGraph::from_graph(g);
    gburn::ReductionResult result = gburn::reduce_to_core(mg);
    if (!(gburn::replay_trace(mg, result.trace) == result.core))
        throw std::logic_error("reduction trace does not replay to the core");
    emit(out_path, gburn::reduction_json(mg, result));
    return kExitOk;
}

int run_verify(const std::string& kind, const std::string& graph_path,
               const std::string& witness_path) {
    gburn::Graph g = gburn::read_edge_list(graph_path);
    std::string text = gburn::read_text_file(witness_path);
    bool ok;
    if (kind == "schedule") {
        ok = gburn::verify_schedule(g, gburn::parse_schedule_json(text));
    } else if (kind == "domset") {
        ok = gburn::verify_hop_domination(g, gburn::parse_domset_json(text));
    } else {
        throw std::runtime_error("unknown verify kind: " + kind + " (schedule|domset)");
    }
    if (!ok) {
        std::cerr << "witness is invalid\n";
        return kExitInvalidWitness;
    }
    std::cout << "witness is valid\n";
    return kExitOk;
}

int run_experiment(const std::string& config_path, const std::string& out_override,
                   int threads) {
    gburn::ExperimentConfig cfg = gburn::read_experiment_config(config_path);
    std::string csv = gburn::run_experiment(cfg, threads);
    std::string out_path = out_override.empty() ? cfg.out_path : out_override;
    gburn::write_text_file(out_path, csv);
    std::cerr << "wrote " << out_path << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph burning and domination toolkit"};
    app.require_subcommand(1);

    uint64_t seed = 0;
    std::string out_path;
    int threads = 1;
    int exact_threshold = 20;
    double epsilon = 0.5;
    app.add_option("--seed", seed, "random seed (default 0)");
    app.add_option("--out", out_path, "output file (default: stdout)");
    app.add_option("--threads", threads, "experiment worker threads (default 1)");
    app.add_option("--exact-threshold", exact_threshold,
                   "largest subgraph the pipelines burn exactly (default 20)");
    app.add_option("--epsilon", epsilon, "weakdeg pipeline epsilon in (0,1] (default 0.5)");

    std::string family;
    std::vector<long long> params;
    auto* gen = app.add_subcommand("generate", "write a graph in edge-list format");
    gen->fallthrough();
    gen->add_option("family", family,
                    "path|cycle|complete|star|spider|necklace|random-regular|random-connected")
        ->required();
    gen->add_option("params", params, "family parameters, e.g. `path 9` or `necklace 4 3`");

    std::string burn_mode, graph_path;
    auto* burn = app.add_subcommand("burn", "compute a burning schedule witness");
    burn->fallthrough();
    burn->add_option("mode", burn_mode, "exact|greedy|mindeg|weakdeg")->required();
    burn->add_option("graph", graph_path, "edge-list file")->required();

    std::string dom_mode, dom_graph, trace_path;
    int start = -1;
    auto* dom = app.add_subcommand("dominate", "compute a dominating-set witness");
    dom->fallthrough();
    dom->add_option("mode", dom_mode, "2hop|cds-nonleaf|cds-greedy")->required();
    dom->add_option("graph", dom_graph, "edge-list file")->required();
    dom->add_option("--start", start, "start vertex for 2hop (default: max-degree vertex)");
    dom->add_option("--trace", trace_path, "write the 2hop growth trace CSV here");

    std::string red_graph;
    auto* red = app.add_subcommand("reduce", "peel leaves and smooth degree-2 vertices");
    red->fallthrough();
    red->add_option("graph", red_graph, "edge-list file")->required();

    std::string ver_kind, ver_graph, ver_witness;
    auto* ver = app.add_subcommand("verify", "check a witness file against a graph");
    ver->fallthrough();
    ver->add_option("kind", ver_kind, "schedule|domset")->required();
    ver->add_option("graph", ver_graph, "edge-list file")->required();
    ver->add_option("witness", ver_witness, "witness JSON file")->required();

    std::string config_path;
    auto* exp = app.add_subcommand("experiment", "run a config grid and write a CSV");
    exp->fallthrough();
    exp->add_option("config", config_path, "experiment config file")->required();

    int bounds_n = 0, bounds_k = 0;
    auto* bnd = app.add_subcommand("bounds", "closed-form reference values for (n, k)");
    bnd->fallthrough();
    bnd->add_option("n", bounds_n, "vertex count")->required();
    bnd->add_option("k", bounds_k, "minimum degree")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) return run_generate(family, params, seed, out_path);
        if (*burn) return run_burn(burn_mode, graph_path, exact_threshold, epsilon, out_path);
        if (*dom) return run_dominate(dom_mode, dom_graph, start, trace_path, out_path);
        if (*red) return run_reduce(red_graph, out_path);
        if (*ver) return run_verify(ver_kind, ver_graph, ver_witness);
        if (*exp) return run_experiment(config_path, out_path, threads);
        if (*bnd) {
            emit(out_path, gburn::bounds_json(gburn::reference_bounds(bounds_n, bounds_k)));
            return kExitOk;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::logic_error& e) {
        std::cerr << "internal verification failure: " << e.what() << '\n';
        return kExitInternalFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }
    return kExitOk;
}
