#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cutsim/cut.hpp"
#include "cutsim/graph.hpp"
#include "cutsim/random.hpp"

namespace cutsim {

/// Multigraph state under edge contraction: each super-vertex carries the
/// set of original vertices merged into it, and the matrix holds summed
/// inter-super-vertex weights (self-loops are dropped on merge). Owned by a
/// single worker; copy to branch.
class ContractionState {
public:
    explicit ContractionState(const Graph& g)
        : cap_(g.size()), alive_(g.size()), w_(std::size_t(cap_) * cap_) {
        origins_.reserve(alive_);
        for (std::uint32_t i = 0; i < alive_; ++i) {
            VertexSet s(g.size());
            s.set(i);
            origins_.push_back(std::move(s));
            for (std::uint32_t j = 0; j < alive_; ++j)
                w_[std::size_t(i) * cap_ + j] = (i == j) ? 0.0 : g.weight(i, j);
        }
    }

    std::uint32_t super_vertex_count() const { return alive_; }

    double weight(std::uint32_t a, std::uint32_t b) const {
        return w_[std::size_t(a) * cap_ + b];
    }

    const VertexSet& origin(std::uint32_t a) const { return origins_[a]; }

    /// Merges super-vertices u and v: origin sets unite, parallel edges sum,
    /// the u-v self-loop disappears. Indices are positional; the last
    /// super-vertex moves into the freed slot.
    void contract_edge(std::uint32_t u, std::uint32_t v) {
        if (u == v) throw std::invalid_argument("cannot contract a self-loop");
        if (u >= alive_ || v >= alive_) throw std::invalid_argument("super-vertex out of range");
        if (u > v) std::swap(u, v);
        for (std::uint32_t k = 0; k < alive_; ++k) {
            if (k == u || k == v) continue;
            double merged = at(u, k) + at(v, k);
            at(u, k) = merged;
            at(k, u) = merged;
        }
        at(u, u) = 0.0;
        origins_[u] |= origins_[v];
        std::uint32_t last = alive_ - 1;
        if (v != last) {
            for (std::uint32_t k = 0; k < alive_; ++k) {
                at(v, k) = at(last, k);
                at(k, v) = at(v, k);
            }
            at(v, v) = 0.0;
            origins_[v] = std::move(origins_[last]);
        }
        origins_.pop_back();
        --alive_;
    }

    double total_weight() const {
        double t = 0.0;
        for (std::uint32_t a = 0; a < alive_; ++a)
            for (std::uint32_t b = a + 1; b < alive_; ++b) t += weight(a, b);
        return t;
    }

private:
    double& at(std::uint32_t a, std::uint32_t b) { return w_[std::size_t(a) * cap_ + b]; }

    std::uint32_t cap_;
    std::uint32_t alive_;
    std::vector<double> w_;
    std::vector<VertexSet> origins_;
};

/// Repeated random edge contraction until `target` super-vertices remain.
/// Edges are sampled proportionally to their merged weight; with
/// `weight_proportional` off, uniformly over positive-weight pairs. If every
/// remaining weight is zero the graph is degenerate and an arbitrary alive
/// pair is contracted uniformly (any choice preserves the zero-weight cuts).
inline void contract_to(ContractionState& s, std::uint32_t target, Rng& rng,
                        bool weight_proportional = true) {
    if (target < 2 || target > s.super_vertex_count())
        throw std::invalid_argument("contraction target out of range");
    while (s.super_vertex_count() > target) {
        const std::uint32_t n = s.super_vertex_count();
        std::uint32_t pick_u = 0, pick_v = 1;
        bool picked = false;
        if (weight_proportional) {
            double total = 0.0;
            for (std::uint32_t a = 0; a < n; ++a)
                for (std::uint32_t b = a + 1; b < n; ++b) total += s.weight(a, b);
            if (total > 0.0) {
                double x = uniform_unit(rng) * total;
                double acc = 0.0;
                for (std::uint32_t a = 0; a < n && !picked; ++a)
                    for (std::uint32_t b = a + 1; b < n; ++b) {
                        acc += s.weight(a, b);
                        if (x < acc) {
                            pick_u = a;
                            pick_v = b;
                            picked = true;
                            break;
                        }
                    }
                if (!picked) { // x landed on the rounding tail
                    pick_u = n - 2;
                    pick_v = n - 1;
                    picked = true;
                }
            }
        } else {
            std::uint64_t positive = 0;
            for (std::uint32_t a = 0; a < n; ++a)
                for (std::uint32_t b = a + 1; b < n; ++b)
                    if (s.weight(a, b) > 0.0) ++positive;
            if (positive > 0) {
                std::uint64_t idx = uniform_below(rng, positive);
                for (std::uint32_t a = 0; a < n && !picked; ++a)
                    for (std::uint32_t b = a + 1; b < n; ++b)
                        if (s.weight(a, b) > 0.0 && idx-- == 0) {
                            pick_u = a;
                            pick_v = b;
                            picked = true;
                            break;
                        }
            }
        }
        if (!picked) {
            // Degenerate: all weights zero. Uniform over alive pairs.
            std::uint64_t pairs = std::uint64_t(n) * (n - 1) / 2;
            std::uint64_t idx = uniform_below(rng, pairs);
            for (std::uint32_t a = 0; a < n && !picked; ++a)
                for (std::uint32_t b = a + 1; b < n; ++b)
                    if (idx-- == 0) {
                        pick_u = a;
                        pick_v = b;
                        picked = true;
                        break;
                    }
        }
        s.contract_edge(pick_u, pick_v);
    }
}

} // namespace cutsim
