#include <doctest.h>

#include "cutsim/graph.hpp"
#include "cutsim/random.hpp"

using namespace cutsim;

namespace {

Graph k3_fixture() {
    Graph g(3);
    g.set_weight(0, 1, 1);
    g.set_weight(0, 2, 2);
    g.set_weight(1, 2, 3);
    return g;
}

Graph random_integer_graph(std::uint32_t n, Rng& rng, std::int64_t hi = 255) {
    Graph g(n);
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v)
            g.set_weight(u, v, static_cast<double>(uniform_below(rng, hi + 1)));
    return g;
}

} // namespace

TEST_CASE("cut_weight sums crossing edges") {
    Graph g = k3_fixture();
    CHECK(cut_weight(g, canonicalize("010")) == 4); // {1}: 1 + 3
    CHECK(cut_weight(g, canonicalize("001")) == 5); // {2}: 2 + 3
    Graph k4(4);
    for (std::uint32_t u = 0; u < 4; ++u)
        for (std::uint32_t v = u + 1; v < 4; ++v) k4.set_weight(u, v, 1);
    CHECK(cut_weight(k4, canonicalize("0011")) == 4);
}

TEST_CASE("cut_weight rejects mismatched sizes") {
    Graph g = k3_fixture();
    CHECK_THROWS_AS(cut_weight(g, canonicalize("0110")), std::invalid_argument);
}

TEST_CASE("cut weight is invariant under complementing the side") {
    Rng rng = make_rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        std::uint32_t n = 3 + static_cast<std::uint32_t>(uniform_below(rng, 8));
        Graph g = random_integer_graph(n, rng);
        VertexSet side(n);
        for (std::uint32_t v = 0; v < n; ++v)
            if (rng() & 1) side.set(v);
        if (side.empty() || side.full()) continue;
        Cut c = canonicalize(side);
        Cut cc = canonicalize(side.complement());
        CHECK(c == cc);
        CHECK(cut_weight(g, c) == cut_weight(g, cc));
    }
}

TEST_CASE("parse_graph reads the edge-list format") {
    Graph g = parse_graph("3\n0 1 1\n0 2 2\n1 2 3\n");
    CHECK(g == k3_fixture());
    Graph k2 = parse_graph("2\n0 1 5\n");
    CHECK(k2.size() == 2);
    CHECK(k2.weight(0, 1) == 5);

    // unlisted pairs default to 0; comments and blank lines are skipped
    Graph sparse = parse_graph("# header comment\n3\n\n0 1 4 # trailing\n");
    CHECK(sparse.weight(0, 1) == 4);
    CHECK(sparse.weight(0, 2) == 0);
    CHECK(sparse.weight(1, 2) == 0);
}

TEST_CASE("parse_graph rejects malformed input with line numbers") {
    CHECK_THROWS_AS(parse_graph("3\n0 1 -4\n"), ParseError);
    try {
        parse_graph("3\n0 1 1\n0 1 -4\n");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
    CHECK_THROWS_AS(parse_graph("3\n0 3 1\n"), ParseError);   // index out of range
    CHECK_THROWS_AS(parse_graph("3\n1 0 1\n"), ParseError);   // u >= v
    CHECK_THROWS_AS(parse_graph("3\n0 1 1\n0 1 2\n"), ParseError); // duplicate
    CHECK_THROWS_AS(parse_graph("3\n0 1\n"), ParseError);     // missing weight
    CHECK_THROWS_AS(parse_graph("1\n"), ParseError);          // n too small
    CHECK_THROWS_AS(parse_graph(""), ParseError);             // no vertex count
}

TEST_CASE("write/parse round trip is the identity") {
    Rng rng = make_rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        std::uint32_t n = 2 + static_cast<std::uint32_t>(uniform_below(rng, 10));
        Graph g = random_integer_graph(n, rng);
        Graph back = parse_graph(write_graph(g));
        CHECK(back == g);
        CHECK(write_graph(back) == write_graph(g));
    }
}

TEST_CASE("edgewise_sum adds weights pairwise") {
    Graph g = k3_fixture();
    Graph s = edgewise_sum(g, g);
    CHECK(s.weight(0, 1) == 2);
    CHECK(s.weight(1, 2) == 6);
}

TEST_CASE("log_transform maps w to ln(1+w)") {
    Graph g = k3_fixture();
    Graph t = log_transform(g);
    CHECK(t.weight(0, 1) == doctest::Approx(std::log(2.0)));
    CHECK(t.weight(1, 2) == doctest::Approx(std::log(4.0)));
    CHECK(log_transform(Graph(2)).weight(0, 1) == 0.0); // zero weights stay zero
}
