#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "cutsim/contraction.hpp"
#include "cutsim/cut.hpp"
#include "cutsim/graph.hpp"
#include "cutsim/random.hpp"
#include "cutsim/stoer_wagner.hpp"

namespace cutsim {

/// All rho-approximate cuts of a graph: member weights are at most
/// rho * lambda (plus the rounding tolerance below), sorted ascending by
/// canonical bit string and deduplicated.
struct ApproximationSet {
    double rho = 1.0;
    double lambda = 0.0;
    std::vector<WeightedCut> members;
};

struct EnumerationConfig {
    double rho = 1.0;
    /// 0 selects the default ceil(repetition_factor * log2(n)^2).
    std::uint32_t repetitions = 0;
    double repetition_factor = 10.0;
    std::uint64_t master_seed = 0;
    bool weight_proportional = true;
};

/// Threshold test with a small tolerance so integer-weight instances stay
/// robust after real transforms (e.g. logarithms).
inline bool within_threshold(double w, double rho, double lambda) {
    return w <= rho * lambda * (1.0 + 1e-9) + 1e-12;
}

inline std::uint32_t default_repetitions(std::uint32_t n, double factor = 10.0) {
    double l = std::log2(static_cast<double>(n));
    auto reps = static_cast<std::uint32_t>(std::ceil(factor * l * l));
    return reps < 1 ? 1 : reps;
}

/// Recursion bottoms out at max(2*ceil(rho), 6) super-vertices, where every
/// remaining cut is evaluated exhaustively.
inline std::uint32_t contraction_base_size(double rho) {
    auto two_ceil_rho = static_cast<std::uint32_t>(2.0 * std::ceil(rho));
    return std::max<std::uint32_t>(two_ceil_rho, 6);
}

/// Reduction target ceil(count / 2^(1/(2 rho)) + 1), clamped so every level
/// makes progress (for rho > 1 the raw formula can round back up to count).
inline std::uint32_t contraction_target(std::uint32_t count, double rho) {
    double factor = std::pow(2.0, 1.0 / (2.0 * rho));
    auto t = static_cast<std::uint32_t>(std::ceil(count / factor + 1.0));
    if (t >= count) t = count - 1;
    return std::max<std::uint32_t>(t, 2);
}

namespace detail {

/// Evaluates every cut of a base-case contraction state, mapping each back
/// to a cut over original vertices. Weights come from the contracted matrix;
/// contraction conserves crossing weights, so they equal the weight in g.
inline void evaluate_base_cuts(const ContractionState& s, std::vector<WeightedCut>& out) {
    const std::uint32_t t = s.super_vertex_count();
    const std::uint64_t masks = (std::uint64_t(1) << (t - 1)) - 1;
    for (std::uint64_t mask = 1; mask <= masks; ++mask) {
        // Bit b of mask marks super-vertex b+1; super-vertex 0 stays out,
        // which dedups complements at the super-vertex level.
        double w = 0.0;
        for (std::uint32_t a = 0; a < t; ++a) {
            bool in_a = a > 0 && ((mask >> (a - 1)) & 1);
            if (!in_a) continue;
            for (std::uint32_t b = 0; b < t; ++b) {
                bool in_b = b > 0 && ((mask >> (b - 1)) & 1);
                if (!in_b) w += s.weight(a, b);
            }
        }
        VertexSet side(s.origin(0).size());
        for (std::uint32_t a = 1; a < t; ++a)
            if ((mask >> (a - 1)) & 1) side |= s.origin(a);
        out.push_back(WeightedCut{canonicalize(side), w});
    }
}

inline void recursive_contract_impl(ContractionState state, double rho, Rng& rng,
                                    bool weight_proportional, std::uint32_t base,
                                    std::vector<WeightedCut>& out) {
    if (state.super_vertex_count() <= base) {
        evaluate_base_cuts(state, out);
        return;
    }
    std::uint32_t target = contraction_target(state.super_vertex_count(), rho);
    for (int branch = 0; branch < 2; ++branch) {
        ContractionState copy = state;
        contract_to(copy, target, rng, weight_proportional);
        recursive_contract_impl(std::move(copy), rho, rng, weight_proportional, base, out);
    }
}

inline void sort_dedup(std::vector<WeightedCut>& cuts) {
    std::sort(cuts.begin(), cuts.end(),
              [](const WeightedCut& a, const WeightedCut& b) { return a.cut < b.cut; });
    cuts.erase(std::unique(cuts.begin(), cuts.end(),
                           [](const WeightedCut& a, const WeightedCut& b) {
                               return a.cut == b.cut;
                           }),
               cuts.end());
}

} // namespace detail

/// One run of the rho-variant recursive contraction tree. Monte Carlo: the
/// result is always a sound subset of the graph's cuts with their true
/// weights, but any single run may miss cuts.
inline std::vector<WeightedCut> recursive_contract(const Graph& g, double rho, Rng& rng,
                                                   bool weight_proportional = true) {
    if (rho < 1.0) throw std::invalid_argument("rho must be at least 1");
    if (contraction_base_size(rho) >= 32)
        throw std::invalid_argument("rho too large for exhaustive base evaluation");
    std::vector<WeightedCut> out;
    detail::recursive_contract_impl(ContractionState(g), rho, rng, weight_proportional,
                                    contraction_base_size(rho), out);
    detail::sort_dedup(out);
    return out;
}

/// Exhaustive enumeration over all 2^(n-1)-1 canonical cuts; the independent
/// oracle for the Monte Carlo enumerator. Refuses graphs beyond the
/// exhaustive limit.
inline ApproximationSet brute_force_approximation_set(const Graph& g, double rho,
                                                      std::uint32_t exhaustive_limit = 20) {
    if (rho < 1.0) throw std::invalid_argument("rho must be at least 1");
    if (g.size() > exhaustive_limit || g.size() >= 64)
        throw std::invalid_argument("graph too large for exhaustive enumeration");
    const std::uint32_t n = g.size();
    const std::uint64_t masks = (std::uint64_t(1) << (n - 1)) - 1;
    std::vector<WeightedCut> all;
    all.reserve(masks);
    double lambda = std::numeric_limits<double>::infinity();
    for (std::uint64_t mask = 1; mask <= masks; ++mask) {
        Cut c = cut_from_mask(n, mask << 1);
        double w = cut_weight(g, c);
        lambda = std::min(lambda, w);
        all.push_back(WeightedCut{std::move(c), w});
    }
    ApproximationSet result;
    result.rho = rho;
    result.lambda = lambda;
    for (auto& wc : all)
        if (within_threshold(wc.weight, rho, lambda)) result.members.push_back(std::move(wc));
    detail::sort_dedup(result.members);
    return result;
}

/// Repeated recursive contraction with per-repetition seeds derived from the
/// master seed, union of all found cuts, lambda from the deterministic
/// Stoer-Wagner cut, and threshold filtering. Deterministic for a given
/// (graph, config); the union is order-independent because member weights
/// are recomputed from the graph after deduplication.
inline ApproximationSet approximation_set(const Graph& g, const EnumerationConfig& cfg) {
    if (cfg.rho < 1.0) throw std::invalid_argument("rho must be at least 1");
    std::uint32_t reps = cfg.repetitions;
    if (reps == 0) {
        reps = g.size() <= contraction_base_size(cfg.rho)
                   ? 1 // a single run is already exhaustive
                   : default_repetitions(g.size(), cfg.repetition_factor);
    }

    std::vector<WeightedCut> found;
    for (std::uint32_t i = 0; i < reps; ++i) {
        Rng rng = make_rng(mix_seed(cfg.master_seed, i));
        auto run = recursive_contract(g, cfg.rho, rng, cfg.weight_proportional);
        found.insert(found.end(), std::make_move_iterator(run.begin()),
                     std::make_move_iterator(run.end()));
    }
    detail::sort_dedup(found);
    for (auto& wc : found) wc.weight = cut_weight(g, wc.cut);

    WeightedCut sw = stoer_wagner_min_cut(g);
    double lambda = sw.weight;
    for (const auto& wc : found) lambda = std::min(lambda, wc.weight);

    ApproximationSet result;
    result.rho = cfg.rho;
    result.lambda = lambda;
    for (auto& wc : found)
        if (within_threshold(wc.weight, cfg.rho, lambda)) result.members.push_back(std::move(wc));
    return result;
}

} // namespace cutsim
