#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "cutsim/cut.hpp"
#include "cutsim/graph.hpp"

namespace cutsim {

struct WeightedCut {
    Cut cut;
    double weight = 0.0;

    friend bool operator==(const WeightedCut& a, const WeightedCut& b) {
        return a.cut == b.cut && a.weight == b.weight;
    }
};

/// Deterministic global minimum cut (maximum adjacency ordering, n-1 phases,
/// O(n^3) on the dense matrix). Ties always resolve to the lowest index, so
/// repeated calls return the identical cut. The returned weight is
/// recomputed with cut_weight so it matches independent evaluation exactly.
inline WeightedCut stoer_wagner_min_cut(const Graph& g) {
    const std::uint32_t n = g.size();
    std::vector<std::vector<double>> w(n, std::vector<double>(n));
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) w[i][j] = (i == j) ? 0.0 : g.weight(i, j);

    std::vector<VertexSet> origin;
    origin.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        VertexSet s(n);
        s.set(i);
        origin.push_back(std::move(s));
    }
    std::vector<std::uint32_t> active(n);
    for (std::uint32_t i = 0; i < n; ++i) active[i] = i;

    double best = std::numeric_limits<double>::infinity();
    VertexSet best_side(n);

    while (active.size() > 1) {
        const std::size_t m = active.size();
        std::vector<double> key(m, 0.0);
        std::vector<bool> added(m, false);
        std::size_t prev = 0, last = 0;
        for (std::size_t step = 0; step < m; ++step) {
            std::size_t pick = m; // lowest index among maximal keys
            for (std::size_t i = 0; i < m; ++i)
                if (!added[i] && (pick == m || key[i] > key[pick])) pick = i;
            added[pick] = true;
            prev = last;
            last = pick;
            for (std::size_t i = 0; i < m; ++i)
                if (!added[i]) key[i] += w[active[pick]][active[i]];
        }
        // Cut of the phase: the last-added super-vertex against the rest.
        if (key[last] < best) {
            best = key[last];
            best_side = origin[active[last]];
        }
        // Merge last into prev.
        std::uint32_t a = active[prev], b = active[last];
        origin[a] |= origin[b];
        for (std::size_t i = 0; i < m; ++i) {
            std::uint32_t c = active[i];
            if (c == a || c == b) continue;
            w[a][c] += w[b][c];
            w[c][a] = w[a][c];
        }
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(last));
    }

    Cut cut = canonicalize(best_side);
    return WeightedCut{cut, cut_weight(g, cut)};
}

} // namespace cutsim
