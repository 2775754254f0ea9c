#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cutsim/combinatorics.hpp"
#include "cutsim/cut.hpp"
#include "cutsim/enumeration.hpp"
#include "cutsim/graph.hpp"
#include "cutsim/io_util.hpp"

namespace cutsim {

/// Sorted-merge intersection of two approximation sets over the same vertex
/// count; linear in the set sizes.
inline std::vector<Cut> intersect_sets(const ApproximationSet& a, const ApproximationSet& b) {
    std::vector<Cut> out;
    std::size_t i = 0, j = 0;
    while (i < a.members.size() && j < b.members.size()) {
        const Cut& ca = a.members[i].cut;
        const Cut& cb = b.members[j].cut;
        if (ca.size() != cb.size())
            throw std::invalid_argument("approximation sets over different vertex counts");
        if (ca < cb) ++i;
        else if (cb < ca) ++j;
        else {
            out.push_back(ca);
            ++i;
            ++j;
        }
    }
    return out;
}

/// Observed-over-expected intersection size.
inline double unexpected_similarity(std::uint64_t intersection_size, const Rational& es) {
    if (es <= 0) throw std::invalid_argument("expected intersection must be positive");
    if (intersection_size == 0) return 0.0;
    Rational r = Rational(BigInt(intersection_size)) / es;
    return rational_to_double(r);
}

/// The four vertex sets induced by a pair of cuts: X&Y, X-Y, Y-X, V-X-Y.
/// Sets may be empty; callers canonicalize the non-empty proper ones into
/// cuts.
inline std::array<VertexSet, 4> composed_cuts(const Cut& x, const Cut& y) {
    if (x.size() != y.size()) throw std::invalid_argument("cuts over different vertex counts");
    VertexSet z1 = x.side();
    z1 &= y.side();
    VertexSet z2 = x.side();
    z2.subtract(y.side());
    VertexSet z3 = y.side();
    z3.subtract(x.side());
    VertexSet z4 = x.side().complement();
    z4.subtract(y.side());
    return {z1, z2, z3, z4};
}

/// Two cuts cross iff all four composed sets are non-empty (evaluated on the
/// canonical side assignment).
inline bool crossing(const Cut& x, const Cut& y) {
    auto z = composed_cuts(x, y);
    for (const auto& s : z)
        if (s.empty()) return false;
    return true;
}

struct SimilarityRow {
    double rho = 1.0;
    std::uint64_t set_size_1 = 0;   // k = |A_rho(G1)|
    std::uint64_t set_size_2 = 0;   // l = |A_rho(G2)|
    std::uint64_t intersection = 0;
    Rational es;
    double u_sim = 0.0;
    bool es_fallback = false;
};

struct SimilarityReport {
    std::vector<double> rho_grid;
    std::vector<SimilarityRow> rows;
    double rho_star = 1.0;
    double max_u_sim = 0.0;
    std::vector<Cut> star_intersection;
};

namespace detail {

/// Counts members within threshold and merges the two weight-filtered sets,
/// without materializing the filtered subsets.
inline void filtered_intersection(const ApproximationSet& a, const ApproximationSet& b,
                                  double rho, std::uint64_t& k, std::uint64_t& l,
                                  std::vector<Cut>* cuts, std::uint64_t& inter) {
    k = l = inter = 0;
    for (const auto& wc : a.members)
        if (within_threshold(wc.weight, rho, a.lambda)) ++k;
    for (const auto& wc : b.members)
        if (within_threshold(wc.weight, rho, b.lambda)) ++l;
    std::size_t i = 0, j = 0;
    while (i < a.members.size() && j < b.members.size()) {
        if (!within_threshold(a.members[i].weight, rho, a.lambda)) {
            ++i;
            continue;
        }
        if (!within_threshold(b.members[j].weight, rho, b.lambda)) {
            ++j;
            continue;
        }
        const Cut& ca = a.members[i].cut;
        const Cut& cb = b.members[j].cut;
        if (ca < cb) ++i;
        else if (cb < ca) ++j;
        else {
            ++inter;
            if (cuts) cuts->push_back(ca);
            ++i;
            ++j;
        }
    }
}

} // namespace detail

/// Sweeps rho over the breakpoint grid of both approximation sets and picks
/// rho* maximizing the unexpected similarity (smallest rho on ties). Both
/// sets are enumerated once at rho_max; every smaller rho is a weight
/// filter, since approximation sets only change where some member weight
/// crosses the threshold.
inline SimilarityReport sweep_rho_star_sets(const ApproximationSet& full1,
                                            const ApproximationSet& full2,
                                            const CombinatoricsTables& tables) {
    SimilarityReport report;

    std::vector<double> grid{1.0};
    auto add_breakpoints = [&](const ApproximationSet& s) {
        if (s.lambda <= 0.0) return; // degenerate: the set never changes with rho
        for (const auto& wc : s.members) {
            double r = wc.weight / s.lambda;
            if (r >= 1.0) grid.push_back(r);
        }
    };
    add_breakpoints(full1);
    add_breakpoints(full2);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    report.rho_grid = grid;
    bool have_star = false;
    Rational all_cuts{(BigInt(1) << (tables.n() - 1)) - 1};
    for (double rho : grid) {
        SimilarityRow row;
        row.rho = rho;
        detail::filtered_intersection(full1, full2, rho, row.set_size_1, row.set_size_2,
                                      nullptr, row.intersection);
        if (row.set_size_1 >= 1 && row.set_size_2 >= 1) {
            auto es = expected_intersection(tables, row.set_size_1, row.set_size_2);
            // The Stirling-model estimate can drop below k*l/|S|, which is a
            // proven lower bound on the true expectation (it collapses to
            // Es(1,1) as k,l approach n-1). Rows are compared on the
            // tighter of the two, flagged like the out-of-domain fallback.
            Rational lower_bound =
                Rational(BigInt(row.set_size_1) * BigInt(row.set_size_2)) / all_cuts;
            if (es.value < lower_bound) {
                row.es = lower_bound;
                row.es_fallback = true;
            } else {
                row.es = es.value;
                row.es_fallback = es.fallback;
            }
            row.u_sim = unexpected_similarity(row.intersection, row.es);
        } else {
            row.es = Rational(0);
            row.es_fallback = true;
            row.u_sim = 0.0;
        }
        if (!have_star || row.u_sim > report.max_u_sim) {
            have_star = true;
            report.max_u_sim = row.u_sim;
            report.rho_star = rho;
        }
        report.rows.push_back(std::move(row));
    }

    std::uint64_t k, l, inter;
    detail::filtered_intersection(full1, full2, report.rho_star, k, l,
                                  &report.star_intersection, inter);
    return report;
}

inline SimilarityReport sweep_rho_star(const Graph& g1, const Graph& g2,
                                       const EnumerationConfig& cfg, double rho_max,
                                       bool exhaustive = false) {
    if (g1.size() != g2.size()) throw std::invalid_argument("graph sizes differ");
    if (rho_max < 1.0) throw std::invalid_argument("rho_max must be at least 1");

    ApproximationSet full1, full2;
    if (exhaustive) {
        full1 = brute_force_approximation_set(g1, rho_max);
        full2 = brute_force_approximation_set(g2, rho_max);
    } else {
        EnumerationConfig c = cfg;
        c.rho = rho_max;
        c.master_seed = mix_seed(cfg.master_seed, 1);
        full1 = approximation_set(g1, c);
        c.master_seed = mix_seed(cfg.master_seed, 2);
        full2 = approximation_set(g2, c);
    }
    CombinatoricsTables tables(g1.size());
    return sweep_rho_star_sets(full1, full2, tables);
}

/// CSV with one row per candidate rho.
inline std::string similarity_report_to_csv(const SimilarityReport& report) {
    std::string out = "rho,k,l,intersection,es_num,es_den,u_sim,fallback\n";
    for (const auto& row : report.rows) {
        out += format_double(row.rho);
        out += ',';
        out += std::to_string(row.set_size_1);
        out += ',';
        out += std::to_string(row.set_size_2);
        out += ',';
        out += std::to_string(row.intersection);
        out += ',';
        out += row.es.get_num().get_str();
        out += ',';
        out += row.es.get_den().get_str();
        out += ',';
        out += format_double(row.u_sim);
        out += ',';
        out += row.es_fallback ? '1' : '0';
        out += '\n';
    }
    return out;
}

inline SimilarityReport parse_similarity_csv(const std::string& text) {
    SimilarityReport report;
    std::size_t pos = 0;
    bool header = true;
    bool have_star = false;
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
        if (f.size() != 8) throw std::runtime_error("bad similarity CSV row");
        SimilarityRow row;
        row.rho = std::strtod(f[0].c_str(), nullptr);
        row.set_size_1 = std::strtoull(f[1].c_str(), nullptr, 10);
        row.set_size_2 = std::strtoull(f[2].c_str(), nullptr, 10);
        row.intersection = std::strtoull(f[3].c_str(), nullptr, 10);
        row.es = Rational(BigInt(f[4]), BigInt(f[5]));
        if (row.es.get_den() != 0) row.es.canonicalize();
        row.u_sim = std::strtod(f[6].c_str(), nullptr);
        row.es_fallback = f[7] == "1";
        report.rho_grid.push_back(row.rho);
        if (!have_star || row.u_sim > report.max_u_sim) {
            have_star = true;
            report.max_u_sim = row.u_sim;
            report.rho_star = row.rho;
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

inline nlohmann::json similarity_report_to_json(const SimilarityReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : report.rows) {
        rows.push_back({{"rho", row.rho},
                        {"k", row.set_size_1},
                        {"l", row.set_size_2},
                        {"intersection", row.intersection},
                        {"es_num", row.es.get_num().get_str()},
                        {"es_den", row.es.get_den().get_str()},
                        {"es", rational_to_double(row.es)},
                        {"u_sim", row.u_sim},
                        {"fallback", row.es_fallback}});
    }
    nlohmann::json star = nlohmann::json::array();
    for (const auto& c : report.star_intersection) star.push_back(c.to_string());
    return {{"rows", rows},
            {"rho_star", report.rho_star},
            {"max_u_sim", report.max_u_sim},
            {"star_intersection", star}};
}

} // namespace cutsim
