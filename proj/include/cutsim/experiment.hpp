#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "cutsim/enumeration.hpp"
#include "cutsim/generators.hpp"
#include "cutsim/graph.hpp"
#include "cutsim/io_util.hpp"
#include "cutsim/random.hpp"
#include "cutsim/strategies.hpp"

namespace cutsim {

constexpr std::array<Strategy, 4> kAllStrategies{Strategy::Average, Strategy::FirstIntersection,
                                                 Strategy::BestSimilarity, Strategy::Optimum};

struct TripleResult {
    std::uint32_t triple_index = 0;
    std::array<StrategyOutcome, 4> outcomes; // order: kAllStrategies
    double pair_u_sim = 0.0;                 // max unexpected similarity of (G1,G2)
};

struct StrategyAggregate {
    Strategy strategy = Strategy::Optimum;
    double sum_all = 0.0;
    double pct_of_opt_all = 0.0;
    double sum_high_sim = 0.0;
    double pct_of_opt_high_sim = 0.0;
    std::uint32_t failures = 0;
};

struct ExperimentReport {
    std::vector<TripleResult> rows;
    std::array<StrategyAggregate, 4> aggregates;
    double u_sim_median = 0.0;
};

struct ExperimentOptions {
    double rho_max = 3.0;
    std::uint32_t workers = 1;
};

namespace detail {

inline TripleResult run_triple(const GeneratorSpec& spec, std::uint32_t index,
                               const EnumerationConfig& cfg, const ExperimentOptions& opt) {
    const std::uint64_t triple_seed = mix_seed(cfg.master_seed, index);

    std::array<Graph, 3> graphs = spec.kind == GeneratorKind::UniformRandom
                                      ? generate_independent_triple(spec, triple_seed)
                                      : generate_similar_triple(spec, triple_seed).graphs;
    const Graph& g1 = graphs[0];
    const Graph& g2 = graphs[1];
    const Graph& g3 = graphs[2];

    EnumerationConfig pair_cfg = cfg;
    pair_cfg.master_seed = mix_seed(triple_seed, 10);
    PairAnalysis pa = analyze_pair(g1, g2, pair_cfg, opt.rho_max);

    TripleResult result;
    result.triple_index = index;
    result.pair_u_sim = pa.report.max_u_sim;
    result.outcomes[0] = strategy_average(g1, g2, g3);
    result.outcomes[1] = strategy_first_intersection_from_sets(pa.full1, pa.full2, pa.report, g3,
                                                               mix_seed(triple_seed, 11));
    result.outcomes[2] =
        strategy_best_similarity_from_sets(pa.report, g3, mix_seed(triple_seed, 12));
    result.outcomes[3] = strategy_optimum(g3);
    return result;
}

/// Lower median: element floor((T-1)/2) of the sorted values, so the
/// U >= median subset always covers at least half the triples.
inline double lower_median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    return values[(values.size() - 1) / 2];
}

} // namespace detail

/// Runs all four strategies on `triples` generated triples. Per-triple seeds
/// derive from cfg.master_seed and the triple index, and aggregation is a
/// commutative fold over the index-ordered rows, so the report does not
/// depend on the worker count.
inline ExperimentReport run_experiment(const GeneratorSpec& spec, std::uint32_t triples,
                                       const EnumerationConfig& cfg,
                                       const ExperimentOptions& opt = {}) {
    validate(spec);
    if (triples < 1) throw std::invalid_argument("need at least one triple");

    ExperimentReport report;
    report.rows.resize(triples);

    const std::uint32_t workers = std::max<std::uint32_t>(1, opt.workers);
    if (workers == 1) {
        for (std::uint32_t i = 0; i < triples; ++i)
            report.rows[i] = detail::run_triple(spec, i, cfg, opt);
    } else {
        std::atomic<std::uint32_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::uint32_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                while (true) {
                    std::uint32_t i = next.fetch_add(1);
                    if (i >= triples) return;
                    report.rows[i] = detail::run_triple(spec, i, cfg, opt);
                }
            });
        for (auto& t : pool) t.join();
    }

    std::vector<double> u_sims;
    u_sims.reserve(triples);
    for (const auto& row : report.rows) u_sims.push_back(row.pair_u_sim);
    report.u_sim_median = detail::lower_median(u_sims);

    for (std::size_t s = 0; s < kAllStrategies.size(); ++s) {
        StrategyAggregate agg;
        agg.strategy = kAllStrategies[s];
        double opt_all = 0.0, opt_high = 0.0;
        for (const auto& row : report.rows) {
            const StrategyOutcome& outcome = row.outcomes[s];
            const double optimum = row.outcomes[3].weight_on_g3;
            if (outcome.failed) {
                ++agg.failures;
                continue;
            }
            const bool high = row.pair_u_sim >= report.u_sim_median;
            agg.sum_all += outcome.weight_on_g3;
            opt_all += optimum;
            if (high) {
                agg.sum_high_sim += outcome.weight_on_g3;
                opt_high += optimum;
            }
        }
        agg.pct_of_opt_all = opt_all > 0.0 ? 100.0 * agg.sum_all / opt_all : 100.0;
        agg.pct_of_opt_high_sim = opt_high > 0.0 ? 100.0 * agg.sum_high_sim / opt_high : 100.0;
        report.aggregates[s] = agg;
    }
    return report;
}

// --- serialization ---------------------------------------------------------

/// Cut-list CSV: a commented rho/lambda line, then one "cut_bits,weight" row
/// per member.
inline std::string approximation_set_to_csv(const ApproximationSet& set) {
    std::string out = "# rho=" + format_double(set.rho) +
                      " lambda=" + format_double(set.lambda) + "\n";
    out += "cut_bits,weight\n";
    for (const auto& wc : set.members) {
        out += wc.cut.to_string();
        out += ',';
        out += format_double(wc.weight);
        out += '\n';
    }
    return out;
}

inline ApproximationSet parse_approximation_set_csv(const std::string& text) {
    ApproximationSet set;
    std::size_t pos = 0;
    bool header = true;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string::npos) end = text.size();
        std::string line = text.substr(pos, end - pos);
        pos = end + 1;
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::size_t r = line.find("rho=");
            std::size_t l = line.find("lambda=");
            if (r != std::string::npos) set.rho = std::strtod(line.c_str() + r + 4, nullptr);
            if (l != std::string::npos) set.lambda = std::strtod(line.c_str() + l + 7, nullptr);
            continue;
        }
        if (header) {
            header = false;
            continue;
        }
        auto f = split_csv_line(line);
        if (f.size() != 2) throw std::runtime_error("bad cut-list CSV row");
        set.members.push_back(
            WeightedCut{canonicalize(f[0]), std::strtod(f[1].c_str(), nullptr)});
    }
    return set;
}

inline void append_outcome_csv(std::string& out, std::uint32_t triple_index,
                               const StrategyOutcome& o) {
    out += std::to_string(triple_index);
    out += ',';
    out += strategy_name(o.strategy);
    out += ',';
    if (!std::isnan(o.rho)) out += format_double(o.rho);
    out += ',';
    if (o.intersection_size >= 0) out += std::to_string(o.intersection_size);
    out += ',';
    if (!std::isnan(o.u_sim)) out += format_double(o.u_sim);
    out += ',';
    if (o.chosen_cut) out += o.chosen_cut->to_string();
    out += ',';
    if (!o.failed) out += format_double(o.weight_on_g3);
    out += ',';
    out += o.failed ? '1' : '0';
    out += '\n';
}

inline std::string experiment_rows_to_csv(const ExperimentReport& report) {
    std::string out = "triple_index,strategy,rho,intersection_size,u_sim,cut_bits,weight_on_g3,failed\n";
    for (const auto& row : report.rows)
        for (const auto& outcome : row.outcomes)
            append_outcome_csv(out, row.triple_index, outcome);
    return out;
}

inline std::string experiment_aggregates_to_csv(const ExperimentReport& report) {
    std::string out = "strategy,sum_all,pct_of_opt_all,sum_high_sim,pct_of_opt_high_sim,failures\n";
    char pct[32];
    for (const auto& agg : report.aggregates) {
        out += strategy_name(agg.strategy);
        out += ',';
        out += format_double(agg.sum_all);
        out += ',';
        std::snprintf(pct, sizeof pct, "%.2f", agg.pct_of_opt_all);
        out += pct;
        out += ',';
        out += format_double(agg.sum_high_sim);
        out += ',';
        std::snprintf(pct, sizeof pct, "%.2f", agg.pct_of_opt_high_sim);
        out += pct;
        out += ',';
        out += std::to_string(agg.failures);
        out += '\n';
    }
    return out;
}

struct ParsedOutcomeRow {
    std::uint32_t triple_index = 0;
    Strategy strategy = Strategy::Optimum;
    double rho = std::numeric_limits<double>::quiet_NaN();
    std::int64_t intersection_size = -1;
    double u_sim = std::numeric_limits<double>::quiet_NaN();
    std::string cut_bits;
    double weight_on_g3 = std::numeric_limits<double>::quiet_NaN();
    bool failed = false;
};

inline std::vector<ParsedOutcomeRow> parse_experiment_rows_csv(const std::string& text) {
    std::vector<ParsedOutcomeRow> rows;
    std::size_t pos = 0;
    bool header = true;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string::npos) end = text.size();
        std::string line = text.substr(pos, end - pos);
        pos = end + 1;
        if (line.empty() || line[0] == '#') continue;
        if (header) {
            header = false;
            continue;
        }
        auto f = split_csv_line(line);
        if (f.size() != 8) throw std::runtime_error("bad experiment CSV row");
        ParsedOutcomeRow row;
        row.triple_index = static_cast<std::uint32_t>(std::strtoul(f[0].c_str(), nullptr, 10));
        auto s = strategy_from_name(f[1]);
        if (!s) throw std::runtime_error("unknown strategy in CSV: " + f[1]);
        row.strategy = *s;
        if (!f[2].empty()) row.rho = std::strtod(f[2].c_str(), nullptr);
        if (!f[3].empty()) row.intersection_size = std::strtoll(f[3].c_str(), nullptr, 10);
        if (!f[4].empty()) row.u_sim = std::strtod(f[4].c_str(), nullptr);
        row.cut_bits = f[5];
        if (!f[6].empty()) row.weight_on_g3 = std::strtod(f[6].c_str(), nullptr);
        row.failed = f[7] == "1";
        rows.push_back(std::move(row));
    }
    return rows;
}

struct ParsedAggregateRow {
    Strategy strategy = Strategy::Optimum;
    double sum_all = 0.0;
    double pct_of_opt_all = 0.0;
    double sum_high_sim = 0.0;
    double pct_of_opt_high_sim = 0.0;
    std::uint32_t failures = 0;
};

inline std::vector<ParsedAggregateRow> parse_experiment_aggregates_csv(const std::string& text) {
    std::vector<ParsedAggregateRow> rows;
    std::size_t pos = 0;
    bool header = true;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string::npos) end = text.size();
        std::string line = text.substr(pos, end - pos);
        pos = end + 1;
        if (line.empty() || line[0] == '#') continue;
        if (header) {
            header = false;
            continue;
        }
        auto f = split_csv_line(line);
        if (f.size() != 6) throw std::runtime_error("bad aggregate CSV row");
        ParsedAggregateRow row;
        auto s = strategy_from_name(f[0]);
        if (!s) throw std::runtime_error("unknown strategy in CSV: " + f[0]);
        row.strategy = *s;
        row.sum_all = std::strtod(f[1].c_str(), nullptr);
        row.pct_of_opt_all = std::strtod(f[2].c_str(), nullptr);
        row.sum_high_sim = std::strtod(f[3].c_str(), nullptr);
        row.pct_of_opt_high_sim = std::strtod(f[4].c_str(), nullptr);
        row.failures = static_cast<std::uint32_t>(std::strtoul(f[5].c_str(), nullptr, 10));
        rows.push_back(row);
    }
    return rows;
}

inline nlohmann::json experiment_report_to_json(const ExperimentReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : report.rows) {
        nlohmann::json outcomes = nlohmann::json::array();
        for (const auto& o : row.outcomes) {
            nlohmann::json jo{{"strategy", strategy_name(o.strategy)}, {"failed", o.failed}};
            if (o.chosen_cut) jo["cut_bits"] = o.chosen_cut->to_string();
            if (!o.failed) jo["weight_on_g3"] = o.weight_on_g3;
            if (!std::isnan(o.rho)) jo["rho"] = o.rho;
            if (o.intersection_size >= 0) jo["intersection_size"] = o.intersection_size;
            if (!std::isnan(o.u_sim)) jo["u_sim"] = o.u_sim;
            outcomes.push_back(std::move(jo));
        }
        rows.push_back({{"triple_index", row.triple_index},
                        {"pair_u_sim", row.pair_u_sim},
                        {"outcomes", outcomes}});
    }
    nlohmann::json aggregates = nlohmann::json::array();
    for (const auto& agg : report.aggregates)
        aggregates.push_back({{"strategy", strategy_name(agg.strategy)},
                              {"sum_all", agg.sum_all},
                              {"pct_of_opt_all", agg.pct_of_opt_all},
                              {"sum_high_sim", agg.sum_high_sim},
                              {"pct_of_opt_high_sim", agg.pct_of_opt_high_sim},
                              {"failures", agg.failures}});
    return {{"rows", rows},
            {"aggregates", aggregates},
            {"u_sim_median", report.u_sim_median}};
}

} // namespace cutsim
