#pragma once

#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cutsim/cut.hpp"
#include "cutsim/io_util.hpp"

namespace cutsim {

/// Complete undirected weighted graph on n >= 2 vertices, stored as a dense
/// symmetric matrix with zero diagonal. Pairs not mentioned by an input file
/// are weight-0 edges of the complete graph. Immutable sharing across
/// threads is safe once construction is done.
class Graph {
public:
    explicit Graph(std::uint32_t n) : n_(n), w_(std::size_t(n) * n, 0.0) {
        if (n < 2) throw std::invalid_argument("graph needs at least 2 vertices");
    }

    std::uint32_t size() const { return n_; }
    std::uint64_t edge_count() const { return std::uint64_t(n_) * (n_ - 1) / 2; }

    double weight(std::uint32_t u, std::uint32_t v) const {
        return w_[std::size_t(u) * n_ + v];
    }

    void set_weight(std::uint32_t u, std::uint32_t v, double w) {
        if (u == v) throw std::invalid_argument("no self-loop weights");
        if (u >= n_ || v >= n_) throw std::invalid_argument("vertex index out of range");
        if (!(w >= 0.0) || !std::isfinite(w))
            throw std::invalid_argument("edge weights must be finite and non-negative");
        w_[std::size_t(u) * n_ + v] = w;
        w_[std::size_t(v) * n_ + u] = w;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }

private:
    std::uint32_t n_;
    std::vector<double> w_;
};

/// Sum of edge weights crossing the bipartition.
inline double cut_weight(const Graph& g, const Cut& c) {
    if (c.size() != g.size())
        throw std::invalid_argument("cut size does not match graph size");
    double total = 0.0;
    for (std::uint32_t u = 0; u < g.size(); ++u) {
        if (!c.contains(u)) continue;
        for (std::uint32_t v = 0; v < g.size(); ++v)
            if (!c.contains(v)) total += g.weight(u, v);
    }
    return total;
}

/// Edge-wise sum of two graphs over the same vertex set.
inline Graph edgewise_sum(const Graph& a, const Graph& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("graph sizes differ");
    Graph r(a.size());
    for (std::uint32_t u = 0; u < a.size(); ++u)
        for (std::uint32_t v = u + 1; v < a.size(); ++v)
            r.set_weight(u, v, a.weight(u, v) + b.weight(u, v));
    return r;
}

/// w -> ln(1+w) on every edge; used to ingest wide-range real-world weights.
inline Graph log_transform(const Graph& g) {
    Graph r(g.size());
    for (std::uint32_t u = 0; u < g.size(); ++u)
        for (std::uint32_t v = u + 1; v < g.size(); ++v)
            r.set_weight(u, v, std::log1p(g.weight(u, v)));
    return r;
}

struct ParseError : std::runtime_error {
    ParseError(std::size_t line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
          line(line_no) {}
    std::size_t line;
};

/// Edge-list text format: first line n, then "u v w" lines with u < v and
/// non-negative weight. '#' starts a comment. Duplicate pairs are an error;
/// unlisted pairs keep weight 0.
inline Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    bool have_n = false;
    std::uint32_t n = 0;
    std::vector<bool> seen;
    Graph g(2);

    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        if (!have_n) {
            long long value;
            if (!(ls >> value)) {
                if (ls.eof()) continue; // blank / comment before header
                throw ParseError(line_no, "expected vertex count");
            }
            std::string rest;
            if (ls >> rest) throw ParseError(line_no, "trailing tokens after vertex count");
            if (value < 2) throw ParseError(line_no, "vertex count must be at least 2");
            n = static_cast<std::uint32_t>(value);
            g = Graph(n);
            seen.assign(std::size_t(n) * n, false);
            have_n = true;
            continue;
        }
        long long u, v;
        double w;
        if (!(ls >> u)) {
            if (ls.eof()) continue; // blank line
            throw ParseError(line_no, "malformed edge line");
        }
        if (!(ls >> v >> w)) throw ParseError(line_no, "malformed edge line, expected 'u v w'");
        std::string rest;
        if (ls >> rest) throw ParseError(line_no, "trailing tokens after edge");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(line_no, "vertex index out of range");
        if (u >= v) throw ParseError(line_no, "edges must be listed with u < v");
        if (w < 0.0) throw ParseError(line_no, "negative edge weight");
        if (!std::isfinite(w)) throw ParseError(line_no, "edge weight must be finite");
        if (seen[std::size_t(u) * n + v]) throw ParseError(line_no, "duplicate edge");
        seen[std::size_t(u) * n + v] = true;
        g.set_weight(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v), w);
    }
    if (!have_n) throw ParseError(line_no, "missing vertex count");
    return g;
}

/// Inverse of parse_graph; zero-weight pairs are omitted.
inline std::string write_graph(const Graph& g) {
    std::string out = std::to_string(g.size());
    out += '\n';
    for (std::uint32_t u = 0; u < g.size(); ++u)
        for (std::uint32_t v = u + 1; v < g.size(); ++v)
            if (g.weight(u, v) != 0.0) {
                out += std::to_string(u);
                out += ' ';
                out += std::to_string(v);
                out += ' ';
                out += format_double(g.weight(u, v));
                out += '\n';
            }
    return out;
}

} // namespace cutsim
