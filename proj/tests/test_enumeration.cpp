#include <doctest.h>

#include <algorithm>

#include "cutsim/enumeration.hpp"
#include "cutsim/graph.hpp"
#include "cutsim/random.hpp"
#include "cutsim/stoer_wagner.hpp"

using namespace cutsim;

namespace {

Graph k3_fixture() {
    Graph g(3);
    g.set_weight(0, 1, 1);
    g.set_weight(0, 2, 2);
    g.set_weight(1, 2, 3);
    return g;
}

Graph unit_kn(std::uint32_t n) {
    Graph g(n);
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v) g.set_weight(u, v, 1);
    return g;
}

Graph random_graph(std::uint32_t n, std::uint64_t seed, std::int64_t lo = 1,
                   std::int64_t hi = 255) {
    Rng rng = make_rng(seed);
    Graph g(n);
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v)
            g.set_weight(u, v, static_cast<double>(lo + static_cast<std::int64_t>(uniform_below(
                                                            rng, hi - lo + 1))));
    return g;
}

bool same_members(const ApproximationSet& a, const ApproximationSet& b) {
    if (a.members.size() != b.members.size()) return false;
    for (std::size_t i = 0; i < a.members.size(); ++i)
        if (!(a.members[i].cut == b.members[i].cut)) return false;
    return true;
}

bool subset_of(const std::vector<WeightedCut>& small, const std::vector<WeightedCut>& big) {
    // both sorted by cut
    std::size_t j = 0;
    for (const auto& wc : small) {
        while (j < big.size() && big[j].cut < wc.cut) ++j;
        if (j == big.size() || !(big[j].cut == wc.cut)) return false;
    }
    return true;
}

} // namespace

TEST_CASE("brute force on the K3 fixture") {
    auto set = brute_force_approximation_set(k3_fixture(), 1.5);
    CHECK(set.lambda == 3);
    REQUIRE(set.members.size() == 2);
    // sorted by bit string: 010 ({1}) before 011 ({0})
    CHECK(set.members[0].cut.to_string() == "010");
    CHECK(set.members[0].weight == 4);
    CHECK(set.members[1].cut.to_string() == "011");
    CHECK(set.members[1].weight == 3);

    auto tight = brute_force_approximation_set(k3_fixture(), 1.0);
    REQUIRE(tight.members.size() == 1);
    CHECK(tight.members[0].cut.to_string() == "011");
}

TEST_CASE("brute force on unit K4 at rho=4/3 returns all 7 cuts") {
    auto set = brute_force_approximation_set(unit_kn(4), 4.0 / 3.0);
    CHECK(set.lambda == 3);
    CHECK(set.members.size() == 7);
    int singletons = 0, bipartitions = 0;
    for (const auto& wc : set.members) {
        if (wc.weight == 3) ++singletons;
        if (wc.weight == 4) ++bipartitions;
    }
    CHECK(singletons == 4);
    CHECK(bipartitions == 3);
}

TEST_CASE("brute force refuses graphs beyond the exhaustive limit") {
    CHECK_THROWS_AS(brute_force_approximation_set(unit_kn(21), 1.0), std::invalid_argument);
    CHECK_NOTHROW(brute_force_approximation_set(unit_kn(21), 1.0, 22));
}

TEST_CASE("approximation sets are monotone in rho") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = random_graph(8, mix_seed(41, seed));
        auto a = brute_force_approximation_set(g, 1.0);
        auto b = brute_force_approximation_set(g, 1.3);
        auto c = brute_force_approximation_set(g, 2.0);
        CHECK(subset_of(a.members, b.members));
        CHECK(subset_of(b.members, c.members));
    }
}

TEST_CASE("recursive_contract base case equals exhaustive enumeration") {
    Graph g = random_graph(6, 77);
    Rng rng = make_rng(5);
    auto cuts = recursive_contract(g, 1.0, rng); // n=6 <= base: no contraction at all
    auto all = brute_force_approximation_set(g, 1e18); // threshold beyond every cut
    REQUIRE(cuts.size() == all.members.size());
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        CHECK(cuts[i].cut == all.members[i].cut);
        CHECK(cuts[i].weight == all.members[i].weight);
    }
}

TEST_CASE("recursive_contract output is always sound") {
    Graph g = random_graph(8, 123);
    auto all = brute_force_approximation_set(g, 1e18);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Rng rng = make_rng(seed);
        auto cuts = recursive_contract(g, 1.0, rng);
        CHECK(subset_of(cuts, all.members));
        for (const auto& wc : cuts)
            CHECK(wc.weight == cut_weight(g, wc.cut)); // integer weights: exact
    }
}

TEST_CASE("single runs find the minimum cut at the Karger-Stein rate") {
    Graph g = random_graph(8, 2024);
    double lambda = stoer_wagner_min_cut(g).weight;
    const int trials = 10000;
    int hits = 0;
    for (int t = 0; t < trials; ++t) {
        Rng rng = make_rng(mix_seed(7, static_cast<std::uint64_t>(t)));
        auto cuts = recursive_contract(g, 1.0, rng);
        for (const auto& wc : cuts)
            if (wc.weight == lambda) {
                ++hits;
                break;
            }
    }
    // Omega(1/log n): 1/log2(8) = 1/3. Empirically far higher on K8.
    CHECK(static_cast<double>(hits) / trials >= 1.0 / 3.0);
}

TEST_CASE("approximation_set equals brute force on small graphs") {
    EnumerationConfig cfg;
    cfg.rho = 1.5;
    cfg.master_seed = 9;
    auto mc = approximation_set(k3_fixture(), cfg);
    auto bf = brute_force_approximation_set(k3_fixture(), 1.5);
    CHECK(mc.lambda == bf.lambda);
    CHECK(same_members(mc, bf));
}

TEST_CASE("approximation_set matches the oracle on random K8 instances") {
    int equal = 0, total = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = random_graph(8, mix_seed(1000, seed));
        for (double rho : {1.0, 1.5, 2.0}) {
            EnumerationConfig cfg;
            cfg.rho = rho;
            cfg.master_seed = seed;
            auto mc = approximation_set(g, cfg);
            auto bf = brute_force_approximation_set(g, rho);
            CHECK(subset_of(mc.members, bf.members)); // soundness always
            if (same_members(mc, bf)) ++equal;
            ++total;
        }
    }
    CHECK(equal >= total - 1); // default repetitions: misses are rare
}

TEST_CASE("approximation_set is deterministic bit for bit") {
    Graph g = random_graph(9, 555);
    EnumerationConfig cfg;
    cfg.rho = 1.7;
    cfg.master_seed = 42;
    auto a = approximation_set(g, cfg);
    auto b = approximation_set(g, cfg);
    REQUIRE(a.members.size() == b.members.size());
    CHECK(a.lambda == b.lambda);
    for (std::size_t i = 0; i < a.members.size(); ++i) {
        CHECK(a.members[i].cut == b.members[i].cut);
        CHECK(a.members[i].weight == b.members[i].weight);
    }
}

TEST_CASE("Dinits bound: at most n(n-1)/2 minimum cuts") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = random_graph(8, mix_seed(2000, seed));
        auto set = brute_force_approximation_set(g, 1.0);
        CHECK(set.members.size() <= 8 * 7 / 2);
    }
}

TEST_CASE("unit K_n has exactly the n singleton cuts at rho=1") {
    for (std::uint32_t n = 4; n <= 10; ++n) {
        auto set = brute_force_approximation_set(unit_kn(n), 1.0);
        REQUIRE(set.members.size() == n);
        for (const auto& wc : set.members) {
            std::uint32_t size = wc.cut.side().count();
            CHECK((size == 1 || size == n - 1));
            CHECK(wc.weight == n - 1);
        }
    }
}

TEST_CASE("degenerate zero-weight graph: every cut is 0-approximate") {
    Graph zero(4);
    EnumerationConfig cfg;
    cfg.rho = 1.0;
    cfg.master_seed = 3;
    auto set = approximation_set(zero, cfg);
    CHECK(set.lambda == 0);
    CHECK(set.members.size() == 7);

    // Planted zero cut among positive weights: threshold 0 for every rho.
    Graph g(4);
    for (std::uint32_t u = 1; u < 4; ++u)
        for (std::uint32_t v = u + 1; v < 4; ++v) g.set_weight(u, v, 10.0);
    cfg.rho = 5.0;
    auto planted = approximation_set(g, cfg);
    CHECK(planted.lambda == 0);
    REQUIRE(planted.members.size() == 1);
    CHECK(planted.members[0].cut.to_string() == "0111");
}

TEST_CASE("default repetition count follows ceil(c * log2(n)^2)") {
    CHECK(default_repetitions(8) == 90);    // 10 * 3^2
    CHECK(default_repetitions(2) == 10);    // 10 * 1
    CHECK(default_repetitions(15) == 153);  // ceil(10 * 3.9069^2)
    CHECK(default_repetitions(3, 1.0) == 3); // ceil(1.585^2)
}

TEST_CASE("uniform-sampling enumeration stays sound") {
    Graph g = random_graph(8, 314);
    auto all = brute_force_approximation_set(g, 1e18);
    EnumerationConfig cfg;
    cfg.rho = 1.5;
    cfg.master_seed = 6;
    cfg.weight_proportional = false;
    auto set = approximation_set(g, cfg);
    CHECK(subset_of(set.members, all.members));
    for (const auto& wc : set.members) CHECK(within_threshold(wc.weight, 1.5, set.lambda));
}

TEST_CASE("rho below 1 is rejected") {
    CHECK_THROWS_AS(brute_force_approximation_set(k3_fixture(), 0.5), std::invalid_argument);
    EnumerationConfig cfg;
    cfg.rho = 0.5;
    CHECK_THROWS_AS(approximation_set(k3_fixture(), cfg), std::invalid_argument);
}
