#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cutsim/cut.hpp"
#include "cutsim/graph.hpp"
#include "cutsim/random.hpp"

namespace cutsim {

enum class GeneratorKind { UniformRandom, PlantedRange, PlantedFixedCost };

inline const char* generator_kind_name(GeneratorKind k) {
    switch (k) {
        case GeneratorKind::UniformRandom: return "uniform-random";
        case GeneratorKind::PlantedRange: return "planted-range";
        case GeneratorKind::PlantedFixedCost: return "planted-fixed-cost";
    }
    return "?";
}

/// Instance-generator parameters. Integer weight ranges are inclusive;
/// planted parameters must be present exactly for their kind.
struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::UniformRandom;
    std::uint32_t n = 15;
    std::pair<std::int64_t, std::int64_t> weight_range{0, 255};
    std::optional<std::pair<std::int64_t, std::int64_t>> small_range;
    std::optional<std::uint32_t> planted_cut_count;
    std::optional<double> planted_cut_cost;
    std::uint64_t seed = 0;
};

inline void validate(const GeneratorSpec& spec) {
    if (spec.n < 2) throw std::invalid_argument("generator needs n >= 2");
    if (spec.weight_range.first > spec.weight_range.second ||
        spec.weight_range.first < 0)
        throw std::invalid_argument("invalid weight range");
    const bool planted = spec.kind != GeneratorKind::UniformRandom;
    if (planted) {
        if (!spec.planted_cut_count || *spec.planted_cut_count < 1)
            throw std::invalid_argument("planted generators need planted_cut_count >= 1");
    } else {
        if (spec.small_range || spec.planted_cut_count || spec.planted_cut_cost)
            throw std::invalid_argument("uniform-random takes no planted parameters");
    }
    if (spec.kind == GeneratorKind::PlantedRange) {
        if (!spec.small_range) throw std::invalid_argument("planted-range needs small_range");
        if (spec.small_range->first > spec.small_range->second || spec.small_range->first < 0)
            throw std::invalid_argument("invalid small range");
        if (spec.planted_cut_cost)
            throw std::invalid_argument("planted-range takes no planted_cut_cost");
    }
    if (spec.kind == GeneratorKind::PlantedFixedCost) {
        if (!spec.planted_cut_cost) throw std::invalid_argument("planted-fixed-cost needs planted_cut_cost");
        if (*spec.planted_cut_cost < 0) throw std::invalid_argument("planted cut cost must be non-negative");
        if (*spec.planted_cut_cost == 0 && spec.weight_range.first > 0)
            throw std::invalid_argument("planted cut cost 0 impossible with positive weight range");
        if (spec.small_range)
            throw std::invalid_argument("planted-fixed-cost takes no small_range");
    }
}

/// Uniformly random canonical non-trivial cut.
inline Cut random_cut(std::uint32_t n, Rng& rng) {
    while (true) {
        VertexSet side(n);
        for (std::uint32_t v = 1; v < n; ++v)
            if (rng() & 1) side.set(v);
        if (!side.empty()) return canonicalize(side);
    }
}

namespace detail {

inline std::int64_t draw_int(Rng& rng, std::pair<std::int64_t, std::int64_t> range) {
    auto span = static_cast<std::uint64_t>(range.second - range.first) + 1;
    return range.first + static_cast<std::int64_t>(uniform_below(rng, span));
}

inline bool edge_crosses(const Cut& c, std::uint32_t u, std::uint32_t v) {
    return c.contains(u) != c.contains(v);
}

/// Weights for one instance given an already-drawn planted cut set.
inline Graph generate_weights(const GeneratorSpec& spec, const std::vector<Cut>& planted,
                              std::uint64_t weight_seed) {
    Rng rng = make_rng(weight_seed);
    Graph g(spec.n);
    for (std::uint32_t u = 0; u < spec.n; ++u)
        for (std::uint32_t v = u + 1; v < spec.n; ++v)
            g.set_weight(u, v, static_cast<double>(draw_int(rng, spec.weight_range)));

    if (spec.kind == GeneratorKind::PlantedRange) {
        for (std::uint32_t u = 0; u < spec.n; ++u)
            for (std::uint32_t v = u + 1; v < spec.n; ++v) {
                bool crossing_any = false;
                for (const Cut& c : planted)
                    if (edge_crosses(c, u, v)) {
                        crossing_any = true;
                        break;
                    }
                if (crossing_any)
                    g.set_weight(u, v, static_cast<double>(draw_int(rng, *spec.small_range)));
            }
    } else if (spec.kind == GeneratorKind::PlantedFixedCost) {
        // Rescale each planted cut's crossing edges to the target cost.
        // Overlapping cuts couple the totals, so cycle until they all hold.
        const double cost = *spec.planted_cut_cost;
        for (int pass = 0; pass < 200; ++pass) {
            double worst = 0.0;
            for (const Cut& c : planted) {
                double total = cut_weight(g, c);
                double deviation = std::abs(total - cost) / std::max(cost, 1.0);
                worst = std::max(worst, deviation);
                if (total > 0.0) {
                    double f = cost / total;
                    for (std::uint32_t u = 0; u < spec.n; ++u)
                        for (std::uint32_t v = u + 1; v < spec.n; ++v)
                            if (edge_crosses(c, u, v)) g.set_weight(u, v, g.weight(u, v) * f);
                } else if (cost > 0.0) {
                    // All crossing edges drew 0: distribute the cost evenly.
                    std::uint64_t crossing_edges = 0;
                    for (std::uint32_t u = 0; u < spec.n; ++u)
                        for (std::uint32_t v = u + 1; v < spec.n; ++v)
                            if (edge_crosses(c, u, v)) ++crossing_edges;
                    for (std::uint32_t u = 0; u < spec.n; ++u)
                        for (std::uint32_t v = u + 1; v < spec.n; ++v)
                            if (edge_crosses(c, u, v))
                                g.set_weight(u, v, cost / static_cast<double>(crossing_edges));
                }
            }
            if (worst <= 1e-12 && pass > 0) break;
        }
    }
    return g;
}

inline std::vector<Cut> draw_planted_cuts(const GeneratorSpec& spec, std::uint64_t cut_seed) {
    std::vector<Cut> planted;
    if (spec.kind == GeneratorKind::UniformRandom) return planted;
    Rng rng = make_rng(cut_seed);
    for (std::uint32_t i = 0; i < *spec.planted_cut_count; ++i)
        planted.push_back(random_cut(spec.n, rng));
    return planted;
}

} // namespace detail

/// Deterministic per seed.
inline Graph generate(const GeneratorSpec& spec) {
    validate(spec);
    auto planted = detail::draw_planted_cuts(spec, mix_seed(spec.seed, 0));
    return detail::generate_weights(spec, planted, mix_seed(spec.seed, 1));
}

/// Three instances sharing one planted cut set (drawn once from the triple
/// seed); edge weights are drawn independently per instance.
struct SimilarTriple {
    std::array<Graph, 3> graphs;
    std::vector<Cut> planted;
};

inline SimilarTriple generate_similar_triple(const GeneratorSpec& spec, std::uint64_t triple_seed) {
    validate(spec);
    if (spec.kind == GeneratorKind::UniformRandom)
        throw std::invalid_argument("similar triples need a planted generator kind");
    auto planted = detail::draw_planted_cuts(spec, mix_seed(triple_seed, 0));
    return SimilarTriple{
        {detail::generate_weights(spec, planted, mix_seed(triple_seed, 1)),
         detail::generate_weights(spec, planted, mix_seed(triple_seed, 2)),
         detail::generate_weights(spec, planted, mix_seed(triple_seed, 3))},
        std::move(planted)};
}

/// Three independent instances (for the uniform-random control experiments).
inline std::array<Graph, 3> generate_independent_triple(const GeneratorSpec& spec,
                                                        std::uint64_t triple_seed) {
    validate(spec);
    return {detail::generate_weights(spec, {}, mix_seed(triple_seed, 1)),
            detail::generate_weights(spec, {}, mix_seed(triple_seed, 2)),
            detail::generate_weights(spec, {}, mix_seed(triple_seed, 3))};
}

/// JSON spec document, e.g.
///   {"kind": "planted-range", "n": 15, "weight_range": [0,255],
///    "small_range": [0,31], "planted_cut_count": 3, "seed": 1}
inline GeneratorSpec parse_generator_spec(const nlohmann::json& j) {
    GeneratorSpec spec;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "uniform-random") spec.kind = GeneratorKind::UniformRandom;
    else if (kind == "planted-range") spec.kind = GeneratorKind::PlantedRange;
    else if (kind == "planted-fixed-cost") spec.kind = GeneratorKind::PlantedFixedCost;
    else throw std::invalid_argument("unknown generator kind: " + kind);
    spec.n = j.at("n").get<std::uint32_t>();
    if (j.contains("weight_range")) {
        spec.weight_range = {j["weight_range"].at(0).get<std::int64_t>(),
                             j["weight_range"].at(1).get<std::int64_t>()};
    }
    if (j.contains("small_range"))
        spec.small_range = {{j["small_range"].at(0).get<std::int64_t>(),
                             j["small_range"].at(1).get<std::int64_t>()}};
    if (j.contains("planted_cut_count"))
        spec.planted_cut_count = j["planted_cut_count"].get<std::uint32_t>();
    else if (spec.kind != GeneratorKind::UniformRandom)
        spec.planted_cut_count = 1;
    if (j.contains("planted_cut_cost"))
        spec.planted_cut_cost = j["planted_cut_cost"].get<double>();
    if (j.contains("seed")) spec.seed = j["seed"].get<std::uint64_t>();
    validate(spec);
    return spec;
}

inline nlohmann::json generator_spec_to_json(const GeneratorSpec& spec) {
    nlohmann::json j{{"kind", generator_kind_name(spec.kind)},
                     {"n", spec.n},
                     {"weight_range", {spec.weight_range.first, spec.weight_range.second}},
                     {"seed", spec.seed}};
    if (spec.small_range) j["small_range"] = {spec.small_range->first, spec.small_range->second};
    if (spec.planted_cut_count) j["planted_cut_count"] = *spec.planted_cut_count;
    if (spec.planted_cut_cost) j["planted_cut_cost"] = *spec.planted_cut_cost;
    return j;
}

} // namespace cutsim
