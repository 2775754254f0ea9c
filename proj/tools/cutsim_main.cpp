#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cutsim/enumeration.hpp"
#include "cutsim/experiment.hpp"
#include "cutsim/generators.hpp"
#include "cutsim/graph.hpp"
#include "cutsim/similarity.hpp"
#include "cutsim/stoer_wagner.hpp"
#include "cutsim/strategies.hpp"

namespace {

struct GlobalOptions {
    std::uint64_t seed = 0;
    std::uint32_t repetitions = 0; // 0 = auto
    std::string out_path;
    std::string format = "csv";
    bool log_weights = false;
};

cutsim::Graph load_graph(const std::string& path, const GlobalOptions& opt) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    cutsim::Graph g = cutsim::parse_graph(buf.str());
    return opt.log_weights ? cutsim::log_transform(g) : g;
}

void emit(const GlobalOptions& opt, const std::string& text) {
    if (opt.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + opt.out_path);
    out << text;
}

cutsim::EnumerationConfig make_config(const GlobalOptions& opt) {
    cutsim::EnumerationConfig cfg;
    cfg.master_seed = opt.seed;
    cfg.repetitions = opt.repetitions;
    return cfg;
}

nlohmann::json cut_list_json(const cutsim::ApproximationSet& set) {
    nlohmann::json cuts = nlohmann::json::array();
    for (const auto& wc : set.members)
        cuts.push_back({{"cut_bits", wc.cut.to_string()}, {"weight", wc.weight}});
    return {{"rho", set.rho}, {"lambda", set.lambda}, {"cuts", cuts}};
}

std::string outcome_csv(const cutsim::StrategyOutcome& outcome) {
    std::string out = "triple_index,strategy,rho,intersection_size,u_sim,cut_bits,weight_on_g3,failed\n";
    cutsim::append_outcome_csv(out, 0, outcome);
    return out;
}

nlohmann::json outcome_json(const cutsim::StrategyOutcome& o) {
    nlohmann::json j{{"strategy", cutsim::strategy_name(o.strategy)}, {"failed", o.failed}};
    if (o.chosen_cut) j["cut_bits"] = o.chosen_cut->to_string();
    if (!o.failed) j["weight_on_g3"] = o.weight_on_g3;
    if (!std::isnan(o.rho)) j["rho"] = o.rho;
    if (o.intersection_size >= 0) j["intersection_size"] = o.intersection_size;
    if (!std::isnan(o.u_sim)) j["u_sim"] = o.u_sim;
    j["pick_seed"] = o.pick_seed;
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Near-minimum cut enumeration, approximation-set similarity, and "
                 "cut-selection strategies for weighted complete graphs"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    GlobalOptions opt;
    app.add_option("--seed", opt.seed, "Master seed for all randomized steps");
    app.add_option("--repetitions", opt.repetitions,
                   "Contraction repetitions per enumeration (0 = auto)");
    app.add_option("--out", opt.out_path, "Write output to a file instead of stdout");
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_flag("--log-weights", opt.log_weights,
                 "Transform loaded edge weights by w -> ln(1+w)");

    std::string file1, file2, file3, strategy_name_arg, spec_path;
    double rho = 1.0, rho_max = 3.0;
    bool exact = false;
    std::uint32_t triples = 512, workers = 1;
    std::string rows_out;

    auto* mincut = app.add_subcommand("mincut", "Deterministic global minimum cut");
    mincut->add_option("file", file1, "Graph file")->required();

    auto* enumerate = app.add_subcommand("enumerate", "Enumerate the rho-approximation set");
    enumerate->add_option("file", file1, "Graph file")->required();
    enumerate->add_option("--rho", rho, "Approximation factor (>= 1)")->required();
    enumerate->add_flag("--exact", exact, "Exhaustive enumeration instead of Monte Carlo");

    auto* similarity = app.add_subcommand("similarity", "Unexpected-similarity sweep over rho");
    similarity->add_option("file1", file1, "First graph")->required();
    similarity->add_option("file2", file2, "Second graph")->required();
    similarity->add_option("--rho-max", rho_max, "Largest rho to test");

    auto* predict = app.add_subcommand("predict", "Predict a cut for a third graph");
    predict->add_option("file1", file1, "First observed graph")->required();
    predict->add_option("file2", file2, "Second observed graph")->required();
    predict->add_option("file3", file3, "Evaluation graph")->required();
    predict->add_option("--strategy", strategy_name_arg,
                        "average | first-intersection | best-similarity | optimum")
        ->required();
    predict->add_option("--rho-max", rho_max, "Largest rho to test");

    auto* experiment = app.add_subcommand("experiment", "Run strategy experiments over generated triples");
    experiment->add_option("--spec", spec_path, "Generator spec JSON file")->required();
    experiment->add_option("--triples", triples, "Number of triples");
    experiment->add_option("--workers", workers, "Worker threads");
    experiment->add_option("--rho-max", rho_max, "Largest rho to test");
    experiment->add_option("--rows-out", rows_out, "Also write the per-triple rows CSV here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (mincut->parsed()) {
            cutsim::Graph g = load_graph(file1, opt);
            cutsim::WeightedCut wc = cutsim::stoer_wagner_min_cut(g);
            if (opt.format == "json") {
                nlohmann::json j{{"weight", wc.weight}, {"cut_bits", wc.cut.to_string()}};
                emit(opt, j.dump(2) + "\n");
            } else {
                emit(opt, "cut_bits,weight\n" + wc.cut.to_string() + "," +
                              cutsim::format_double(wc.weight) + "\n");
            }
        } else if (enumerate->parsed()) {
            cutsim::Graph g = load_graph(file1, opt);
            cutsim::ApproximationSet set;
            if (exact) {
                set = cutsim::brute_force_approximation_set(g, rho);
            } else {
                cutsim::EnumerationConfig cfg = make_config(opt);
                cfg.rho = rho;
                set = cutsim::approximation_set(g, cfg);
            }
            emit(opt, opt.format == "json" ? cut_list_json(set).dump(2) + "\n"
                                           : cutsim::approximation_set_to_csv(set));
        } else if (similarity->parsed()) {
            cutsim::Graph g1 = load_graph(file1, opt);
            cutsim::Graph g2 = load_graph(file2, opt);
            auto report = cutsim::sweep_rho_star(g1, g2, make_config(opt), rho_max);
            emit(opt, opt.format == "json"
                          ? cutsim::similarity_report_to_json(report).dump(2) + "\n"
                          : cutsim::similarity_report_to_csv(report));
        } else if (predict->parsed()) {
            auto strat = cutsim::strategy_from_name(strategy_name_arg);
            if (!strat) throw std::runtime_error("unknown strategy: " + strategy_name_arg);
            cutsim::Graph g1 = load_graph(file1, opt);
            cutsim::Graph g2 = load_graph(file2, opt);
            cutsim::Graph g3 = load_graph(file3, opt);
            cutsim::EnumerationConfig cfg = make_config(opt);
            cutsim::StrategyOutcome outcome;
            switch (*strat) {
                case cutsim::Strategy::Average:
                    outcome = cutsim::strategy_average(g1, g2, g3);
                    break;
                case cutsim::Strategy::FirstIntersection:
                    outcome = cutsim::strategy_first_intersection(
                        g1, g2, g3, cfg, rho_max, cutsim::mix_seed(opt.seed, 11));
                    break;
                case cutsim::Strategy::BestSimilarity:
                    outcome = cutsim::strategy_best_similarity(
                        g1, g2, g3, cfg, rho_max, cutsim::mix_seed(opt.seed, 12));
                    break;
                case cutsim::Strategy::Optimum:
                    outcome = cutsim::strategy_optimum(g3);
                    break;
            }
            emit(opt, opt.format == "json" ? outcome_json(outcome).dump(2) + "\n"
                                           : outcome_csv(outcome));
            if (outcome.failed) {
                nlohmann::json err{{"error", "strategy found no intersection"},
                                   {"strategy", cutsim::strategy_name(outcome.strategy)},
                                   {"rho_max", rho_max}};
                std::cerr << err.dump() << "\n";
                return 2;
            }
        } else if (experiment->parsed()) {
            std::ifstream in(spec_path);
            if (!in) throw std::runtime_error("cannot open spec file: " + spec_path);
            nlohmann::json spec_json = nlohmann::json::parse(in);
            cutsim::GeneratorSpec spec = cutsim::parse_generator_spec(spec_json);
            cutsim::EnumerationConfig cfg = make_config(opt);
            cutsim::ExperimentOptions eopt;
            eopt.rho_max = rho_max;
            eopt.workers = workers;
            auto report = cutsim::run_experiment(spec, triples, cfg, eopt);
            if (!rows_out.empty()) {
                std::ofstream rows_file(rows_out, std::ios::binary);
                if (!rows_file) throw std::runtime_error("cannot open rows file: " + rows_out);
                rows_file << cutsim::experiment_rows_to_csv(report);
            }
            emit(opt, opt.format == "json"
                          ? cutsim::experiment_report_to_json(report).dump(2) + "\n"
                          : cutsim::experiment_aggregates_to_csv(report));
        }
    } catch (const std::exception& e) {
        nlohmann::json err{{"error", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    }
    return 0;
}
