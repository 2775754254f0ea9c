#include <doctest.h>

#include "cutsim/contraction.hpp"
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

Graph k4_unit() {
    Graph g(4);
    for (std::uint32_t u = 0; u < 4; ++u)
        for (std::uint32_t v = u + 1; v < 4; ++v) g.set_weight(u, v, 1);
    return g;
}

// Index of the alive super-vertex whose origin set equals `s`, or -1.
int find_origin(const ContractionState& st, const VertexSet& s) {
    for (std::uint32_t a = 0; a < st.super_vertex_count(); ++a)
        if (st.origin(a) == s) return static_cast<int>(a);
    return -1;
}

} // namespace

TEST_CASE("contract_edge merges parallel edges and drops the self-loop") {
    ContractionState st(k3_fixture());
    st.contract_edge(1, 2);
    REQUIRE(st.super_vertex_count() == 2);
    CHECK(st.weight(0, 1) == 3); // 1 + 2 merged
    VertexSet merged(3);
    merged.set(1);
    merged.set(2);
    CHECK(find_origin(st, merged) >= 0);
}

TEST_CASE("contract_edge on K4 keeps the remaining structure") {
    ContractionState st(k4_unit());
    st.contract_edge(0, 1);
    REQUIRE(st.super_vertex_count() == 3);
    VertexSet merged(4);
    merged.set(0);
    merged.set(1);
    int m = find_origin(st, merged);
    REQUIRE(m >= 0);
    for (std::uint32_t a = 0; a < 3; ++a) {
        if (static_cast<int>(a) == m) continue;
        CHECK(st.weight(static_cast<std::uint32_t>(m), a) == 2);
    }
    // the two singleton supers keep their unit edge
    double singleton_edge = -1;
    for (std::uint32_t a = 0; a < 3; ++a)
        for (std::uint32_t b = a + 1; b < 3; ++b)
            if (static_cast<int>(a) != m && static_cast<int>(b) != m)
                singleton_edge = st.weight(a, b);
    CHECK(singleton_edge == 1);
}

TEST_CASE("contract_edge rejects self-contraction") {
    ContractionState st(k3_fixture());
    CHECK_THROWS_AS(st.contract_edge(1, 1), std::invalid_argument);
}

TEST_CASE("contract_to target bounds") {
    ContractionState st(k3_fixture());
    Rng rng = make_rng(1);
    ContractionState same = st;
    contract_to(same, 3, rng); // identity
    CHECK(same.super_vertex_count() == 3);
    CHECK_THROWS_AS(contract_to(st, 1, rng), std::invalid_argument);
    CHECK_THROWS_AS(contract_to(st, 4, rng), std::invalid_argument);
}

TEST_CASE("weight-proportional sampling picks edges by weight share") {
    // K3 fixture: edge (1,2) has weight 3 of total 6.
    const int trials = 100000;
    int heavy_first = 0;
    VertexSet merged(3);
    merged.set(1);
    merged.set(2);
    for (int t = 0; t < trials; ++t) {
        ContractionState st(k3_fixture());
        Rng rng = make_rng(mix_seed(99, static_cast<std::uint64_t>(t)));
        contract_to(st, 2, rng);
        if (find_origin(st, merged) >= 0) ++heavy_first;
    }
    double freq = static_cast<double>(heavy_first) / trials;
    CHECK(freq == doctest::Approx(0.5).epsilon(0.02)); // 3/6 within ±0.01
}

TEST_CASE("uniform sampling ignores weights but skips zero-weight pairs") {
    // K3 fixture with uniform sampling: each positive-weight pair is equally
    // likely, so edge (1,2) comes first in ~1/3 of trials.
    const int trials = 30000;
    int heavy_first = 0;
    VertexSet merged(3);
    merged.set(1);
    merged.set(2);
    for (int t = 0; t < trials; ++t) {
        ContractionState st(k3_fixture());
        Rng rng = make_rng(mix_seed(123, static_cast<std::uint64_t>(t)));
        contract_to(st, 2, rng, /*weight_proportional=*/false);
        if (find_origin(st, merged) >= 0) ++heavy_first;
    }
    double freq = static_cast<double>(heavy_first) / trials;
    CHECK(freq == doctest::Approx(1.0 / 3.0).epsilon(0.05));

    // A zero-weight edge is never picked while positive pairs remain.
    Graph g(3);
    g.set_weight(0, 1, 0.0);
    g.set_weight(0, 2, 1.0);
    g.set_weight(1, 2, 1.0);
    for (int t = 0; t < 50; ++t) {
        ContractionState st(g);
        Rng rng = make_rng(static_cast<std::uint64_t>(t));
        contract_to(st, 2, rng, /*weight_proportional=*/false);
        VertexSet zero_pair(3);
        zero_pair.set(0);
        zero_pair.set(1);
        CHECK(find_origin(st, zero_pair) < 0);
    }
}

TEST_CASE("degenerate all-zero weights still contract") {
    Graph zero(5);
    ContractionState st(zero);
    Rng rng = make_rng(3);
    contract_to(st, 2, rng);
    CHECK(st.super_vertex_count() == 2);
    CHECK(st.weight(0, 1) == 0);
}

TEST_CASE("contraction conserves weights of cuts that respect origin sets") {
    Rng rng = make_rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        std::uint32_t n = 5 + static_cast<std::uint32_t>(uniform_below(rng, 6));
        Graph g(n);
        for (std::uint32_t u = 0; u < n; ++u)
            for (std::uint32_t v = u + 1; v < n; ++v)
                g.set_weight(u, v, static_cast<double>(uniform_below(rng, 256)));
        ContractionState st(g);
        std::uint32_t target = 2 + static_cast<std::uint32_t>(uniform_below(rng, n - 2));
        contract_to(st, target, rng);

        // Pick a random super-vertex subset; the induced original cut must
        // weigh the same on the contracted matrix as on g.
        std::uint32_t k = st.super_vertex_count();
        std::uint64_t mask = 1 + uniform_below(rng, (std::uint64_t(1) << (k - 1)) - 1);
        double contracted_weight = 0.0;
        VertexSet side(n);
        for (std::uint32_t a = 0; a < k; ++a) {
            bool in_a = a > 0 && ((mask >> (a - 1)) & 1);
            if (!in_a) continue;
            side |= st.origin(a);
            for (std::uint32_t b = 0; b < k; ++b) {
                bool in_b = b > 0 && ((mask >> (b - 1)) & 1);
                if (!in_b) contracted_weight += st.weight(a, b);
            }
        }
        Cut induced = canonicalize(side);
        CHECK(cut_weight(g, induced) == doctest::Approx(contracted_weight).epsilon(1e-12));
    }
}
