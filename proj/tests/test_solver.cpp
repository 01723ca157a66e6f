#include <doctest.h>

#include "edisc/analysis.hpp"
#include "edisc/construct.hpp"
#include "edisc/solver.hpp"
#include "oracles.hpp"

using namespace edisc;

TEST_CASE("exists_with_weight") {
    auto chain = parse_hypergraph("1\n1 2\n1 2 3\n");
    auto found = exists_with_weight(chain, 3);
    REQUIRE(found);
    CHECK(found->values() == std::vector<Weight>{1, 1, 1});
    CHECK_FALSE(exists_with_weight(chain, 2));

    auto disjoint = parse_hypergraph("a\nb\nc\n");
    CHECK_FALSE(exists_with_weight(disjoint, 5));
    CHECK(exists_with_weight(disjoint, 6));
}

TEST_CASE("exact optimum on small instances") {
    auto disjoint = exact_optimal(parse_hypergraph("a\nb\nc\n"));
    CHECK(disjoint.optimal_weight == 6);

    auto star = parse_hypergraph("c x\nc y\nc z\n");
    auto s = exact_optimal(star);
    CHECK(s.optimal_weight == 4);
    CHECK(validate_discriminator(star, s.witness).valid());
    CHECK(total_weight(s.witness) == 4);

    auto k22 = parse_hypergraph("a1 b1\na1 b2\na2 b1\na2 b2\n");
    CHECK(exact_optimal(k22).optimal_weight == 5);
}

TEST_CASE("node cap is reported as a resource limit") {
    auto h = parse_hypergraph("a\nb\nc\nd\ne\n");
    SolveOptions tiny;
    tiny.node_cap = 3;
    CHECK_THROWS_AS(exact_optimal(h, tiny), ResourceLimitError);
}

TEST_CASE("witness places class weight on one representative") {
    auto h = parse_hypergraph("a b\nb c\n");
    auto r = exact_optimal(h);
    CHECK(validate_discriminator(h, r.witness).valid());
    auto red = reduce(h);
    for (std::size_t c = 0; c < red.class_count(); ++c) {
        std::size_t nonzero = 0;
        for (VertexIndex v = 0; v < h.vertex_count(); ++v)
            if (red.class_map()[v] == c && r.witness[v] > 0) ++nonzero;
        CHECK(nonzero <= 1);
    }
}

TEST_CASE("property: solver agrees with exhaustive labeling search") {
    std::mt19937 rng(99);
    for (int round = 0; round < 150; ++round) {
        auto h = oracle::random_hypergraph(rng, 5, 5);
        auto r = exact_optimal(h);
        CHECK(r.optimal_weight == oracle::optimum(h));
        CHECK(oracle::is_discriminator(h, r.witness.values()));
        CHECK(total_weight(r.witness) == r.optimal_weight);
        CHECK(exact_optimal(reduce(h)).optimal_weight == r.optimal_weight);
    }
}

TEST_CASE("property: bounds sandwich the optimum") {
    std::mt19937 rng(1234);
    for (int round = 0; round < 200; ++round) {
        auto h = oracle::random_hypergraph(rng, 6, 7);
        const auto n = static_cast<Weight>(h.edge_count());
        const auto w = exact_optimal(h).optimal_weight;
        const auto d = static_cast<Weight>(oracle::matching_number(h));
        const auto hit = static_cast<Weight>(oracle::hitting_number(h));
        CHECK(std::max(n, d * (d + 1) / 2) <= w);
        CHECK(w <= std::min(n * (n + 1) / 2, n * (n - 1) / 2 + hit));
        CHECK(lower_bound(h) <= w);

        auto order = oracle::random_ordering(rng, h.vertex_count());
        auto kappa = oracle::random_initial(rng, h.vertex_count(), 3);
        CHECK(w <= total_weight(greedy_construct(h, order, kappa)));
    }
}

TEST_CASE("property: renaming and reordering vertices keeps the optimum") {
    std::mt19937 rng(8);
    for (int round = 0; round < 100; ++round) {
        auto h = oracle::random_hypergraph(rng, 5, 6);
        auto perm = oracle::random_ordering(rng, h.vertex_count());
        std::vector<std::string> names(h.vertex_count());
        for (VertexIndex v = 0; v < h.vertex_count(); ++v) names[perm.at(v)] = "y" + std::to_string(v);
        std::vector<std::vector<VertexIndex>> edges;
        for (const auto& e : h.edges()) {
            std::vector<VertexIndex> f;
            for (auto v : e) f.push_back(perm.at(v));
            edges.push_back(f);
        }
        Hypergraph copy(names, edges);
        CHECK(exact_optimal(copy).optimal_weight == exact_optimal(h).optimal_weight);
    }
}
