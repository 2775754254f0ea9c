#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "cutsim/cut.hpp"
#include "cutsim/enumeration.hpp"
#include "cutsim/graph.hpp"
#include "cutsim/random.hpp"
#include "cutsim/similarity.hpp"
#include "cutsim/stoer_wagner.hpp"

namespace cutsim {

enum class Strategy { Average, FirstIntersection, BestSimilarity, Optimum };

inline const char* strategy_name(Strategy s) {
    switch (s) {
        case Strategy::Average: return "Average";
        case Strategy::FirstIntersection: return "FirstIntersection";
        case Strategy::BestSimilarity: return "BestSimilarity";
        case Strategy::Optimum: return "Optimum";
    }
    return "?";
}

inline std::optional<Strategy> strategy_from_name(const std::string& name) {
    for (Strategy s : {Strategy::Average, Strategy::FirstIntersection,
                       Strategy::BestSimilarity, Strategy::Optimum})
        if (name == strategy_name(s)) return s;
    if (name == "average") return Strategy::Average;
    if (name == "first-intersection") return Strategy::FirstIntersection;
    if (name == "best-similarity") return Strategy::BestSimilarity;
    if (name == "optimum") return Strategy::Optimum;
    return std::nullopt;
}

/// One strategy's prediction for the third graph. `failed` is set when an
/// intersection-based strategy finds no cut to pick (reported, never
/// silently patched). rho / intersection_size / u_sim are diagnostics and
/// only meaningful where the strategy defines them.
struct StrategyOutcome {
    Strategy strategy = Strategy::Optimum;
    std::optional<Cut> chosen_cut;
    double weight_on_g3 = std::numeric_limits<double>::quiet_NaN();
    double rho = std::numeric_limits<double>::quiet_NaN();
    std::int64_t intersection_size = -1;
    double u_sim = std::numeric_limits<double>::quiet_NaN();
    std::uint64_t pick_seed = 0;
    bool failed = false;
};

/// Add the edge weights of G1 and G2 pairwise and take the sum graph's
/// deterministic minimum cut. (The paper's "average": argmin is invariant
/// under the factor 2.)
inline StrategyOutcome strategy_average(const Graph& g1, const Graph& g2, const Graph& g3) {
    StrategyOutcome out;
    out.strategy = Strategy::Average;
    WeightedCut wc = stoer_wagner_min_cut(edgewise_sum(g1, g2));
    out.chosen_cut = wc.cut;
    out.weight_on_g3 = cut_weight(g3, wc.cut);
    return out;
}

inline StrategyOutcome strategy_optimum(const Graph& g3) {
    StrategyOutcome out;
    out.strategy = Strategy::Optimum;
    WeightedCut wc = stoer_wagner_min_cut(g3);
    out.chosen_cut = wc.cut;
    out.weight_on_g3 = wc.weight;
    return out;
}

namespace detail {

inline std::vector<Cut> intersection_at(const ApproximationSet& a, const ApproximationSet& b,
                                        double rho) {
    std::vector<Cut> cuts;
    std::uint64_t k, l, inter;
    filtered_intersection(a, b, rho, k, l, &cuts, inter);
    return cuts;
}

inline void pick_from(StrategyOutcome& out, const std::vector<Cut>& cuts, const Graph& g3,
                      std::uint64_t pick_seed) {
    Rng rng = make_rng(pick_seed);
    const Cut& chosen = cuts[uniform_below(rng, cuts.size())];
    out.chosen_cut = chosen;
    out.weight_on_g3 = cut_weight(g3, chosen);
}

} // namespace detail

/// Smallest candidate rho with a non-empty intersection of the two
/// approximation sets; picks a seeded uniform random cut from it.
inline StrategyOutcome strategy_first_intersection_from_sets(
    const ApproximationSet& full1, const ApproximationSet& full2,
    const SimilarityReport& report, const Graph& g3, std::uint64_t pick_seed) {
    StrategyOutcome out;
    out.strategy = Strategy::FirstIntersection;
    out.pick_seed = pick_seed;
    for (const auto& row : report.rows) {
        if (row.intersection == 0) continue;
        out.rho = row.rho;
        out.intersection_size = static_cast<std::int64_t>(row.intersection);
        out.u_sim = row.u_sim;
        auto cuts = detail::intersection_at(full1, full2, row.rho);
        detail::pick_from(out, cuts, g3, pick_seed);
        return out;
    }
    out.failed = true;
    return out;
}

/// The rho* row of the sweep; picks a seeded uniform random cut from the
/// maximizing intersection.
inline StrategyOutcome strategy_best_similarity_from_sets(const SimilarityReport& report,
                                                          const Graph& g3,
                                                          std::uint64_t pick_seed) {
    StrategyOutcome out;
    out.strategy = Strategy::BestSimilarity;
    out.pick_seed = pick_seed;
    out.rho = report.rho_star;
    out.intersection_size = static_cast<std::int64_t>(report.star_intersection.size());
    out.u_sim = report.max_u_sim;
    if (report.star_intersection.empty()) {
        out.failed = true;
        return out;
    }
    detail::pick_from(out, report.star_intersection, g3, pick_seed);
    return out;
}

/// Everything an intersection strategy needs about a graph pair, computed
/// once and shared between FirstIntersection and BestSimilarity.
struct PairAnalysis {
    ApproximationSet full1;
    ApproximationSet full2;
    SimilarityReport report;
};

inline PairAnalysis analyze_pair(const Graph& g1, const Graph& g2, const EnumerationConfig& cfg,
                                 double rho_max, bool exhaustive = false) {
    if (g1.size() != g2.size()) throw std::invalid_argument("graph sizes differ");
    PairAnalysis pa;
    if (exhaustive) {
        pa.full1 = brute_force_approximation_set(g1, rho_max);
        pa.full2 = brute_force_approximation_set(g2, rho_max);
    } else {
        EnumerationConfig c = cfg;
        c.rho = rho_max;
        c.master_seed = mix_seed(cfg.master_seed, 1);
        pa.full1 = approximation_set(g1, c);
        c.master_seed = mix_seed(cfg.master_seed, 2);
        pa.full2 = approximation_set(g2, c);
    }
    CombinatoricsTables tables(g1.size());
    pa.report = sweep_rho_star_sets(pa.full1, pa.full2, tables);
    return pa;
}

inline StrategyOutcome strategy_first_intersection(const Graph& g1, const Graph& g2,
                                                   const Graph& g3,
                                                   const EnumerationConfig& cfg,
                                                   double rho_max, std::uint64_t pick_seed) {
    PairAnalysis pa = analyze_pair(g1, g2, cfg, rho_max);
    return strategy_first_intersection_from_sets(pa.full1, pa.full2, pa.report, g3, pick_seed);
}

inline StrategyOutcome strategy_best_similarity(const Graph& g1, const Graph& g2,
                                                const Graph& g3, const EnumerationConfig& cfg,
                                                double rho_max, std::uint64_t pick_seed) {
    PairAnalysis pa = analyze_pair(g1, g2, cfg, rho_max);
    return strategy_best_similarity_from_sets(pa.report, g3, pick_seed);
}

} // namespace cutsim
