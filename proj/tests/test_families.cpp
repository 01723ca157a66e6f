#include <doctest.h>

#include <set>

#include "edisc/families.hpp"
#include "edisc/solver.hpp"
#include "oracles.hpp"

using namespace edisc;

namespace {

std::vector<Weight> sorted_edge_weights(const FamilyResult& f) {
    auto w = edge_weights(f.graph, f.labeling);
    std::sort(w.begin(), w.end());
    return w;
}

std::vector<Weight> one_to(std::size_t k) {
    std::vector<Weight> v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = static_cast<Weight>(i) + 1;
    return v;
}

void check_family(const FamilyResult& f) {
    CHECK(validate_discriminator(f.graph, f.labeling).valid());
    CHECK(total_weight(f.labeling) == f.weight);
}

}  // namespace

TEST_CASE("nested chain") {
    for (std::size_t n = 1; n <= 6; ++n) {
        auto f = nested_chain(n);
        check_family(f);
        CHECK(f.weight == static_cast<Weight>(n));
        CHECK(sorted_edge_weights(f) == one_to(n));
        CHECK(exact_optimal(f.graph).optimal_weight == f.weight);
    }
}

TEST_CASE("power set") {
    CHECK(power_set_optimal(1).weight == 1);
    auto p3 = power_set_optimal(3);
    CHECK(p3.labeling.values() == std::vector<Weight>{1, 2, 4});
    CHECK(p3.weight == 7);
    CHECK(power_set_optimal(4).weight == 15);
    for (std::size_t m = 1; m <= 4; ++m) {
        auto f = power_set_optimal(m);
        check_family(f);
        CHECK(exact_optimal(f.graph).optimal_weight == f.weight);
    }
    CHECK_THROWS(power_set_optimal(0));
    CHECK_THROWS(power_set_optimal(kMaxPowerSetVertices + 1));
}

TEST_CASE("paths") {
    CHECK(path_optimal(4).labeling.values() == std::vector<Weight>{0, 1, 2, 0});
    CHECK(edge_weights(path_optimal(4).graph, path_optimal(4).labeling) == std::vector<Weight>{1, 3, 2});
    CHECK(path_optimal(5).labeling.values() == std::vector<Weight>{0, 1, 2, 2, 0});
    CHECK(path_optimal(6).labeling.values() == std::vector<Weight>{0, 1, 2, 3, 1, 1});
    CHECK(edge_weights(path_optimal(6).graph, path_optimal(6).labeling) == std::vector<Weight>{1, 3, 5, 4, 2});

    for (std::size_t m = 2; m <= 40; ++m) {
        auto f = path_optimal(m);
        check_family(f);
        const auto M = static_cast<Weight>(m);
        CHECK(f.weight == (M * (M - 1) + 3) / 4);
        CHECK(sorted_edge_weights(f) == one_to(m - 1));
        const auto& lab = f.labeling.values();
        CHECK(lab.front() == 0);
        CHECK(lab.back() == ((m % 4 == 0 || m % 4 == 1) ? 0 : 1));
    }
    CHECK_THROWS(path_optimal(1));
}

TEST_CASE("paths with end labels 0 and 2") {
    CHECK(path_end2(4).labeling.values() == std::vector<Weight>{0, 1, 1, 2});
    CHECK(path_end2(5).labeling.values() == std::vector<Weight>{0, 1, 1, 2, 2});
    CHECK(path_end2(8).weight == 15);
    for (std::size_t m = 4; m <= 41; ++m) {
        if (m % 4 != 0 && m % 4 != 1) {
            CHECK_THROWS(path_end2(m));
            continue;
        }
        auto f = path_end2(m);
        check_family(f);
        CHECK(f.labeling.values().front() == 0);
        CHECK(f.labeling.values().back() == 2);
        CHECK(sorted_edge_weights(f) == one_to(m - 1));
        CHECK(f.weight == static_cast<Weight>(m * (m - 1) / 4 + 1));
    }
}

TEST_CASE("cycles") {
    const std::vector<Weight> expect{3, 5, 8, 11, 14, 18};
    for (std::size_t m = 3; m <= 8; ++m) {
        auto f = cycle_optimal(m);
        check_family(f);
        CHECK(f.weight == expect[m - 3]);
        CHECK(f.graph.edge_count() == m);
        CHECK(oracle::max_degree(f.graph) == 2);
    }
    for (std::size_t m = 3; m <= 40; ++m) {
        auto f = cycle_optimal(m);
        check_family(f);
        const auto M = static_cast<Weight>(m);
        CHECK(f.weight == (M * (M + 1) + 3) / 4);
    }
    auto c3 = cycle_optimal(3);
    CHECK(sorted_edge_weights(c3) == one_to(3));
    CHECK_THROWS(cycle_optimal(2));
}

TEST_CASE("complete r-partite") {
    auto f = r_partite_optimal(PartiteSizes({2, 2}));
    CHECK(f.labeling.values() == std::vector<Weight>{0, 1, 1, 3});
    CHECK(sorted_edge_weights(f) == one_to(4));
    CHECK(f.weight == 5);
    CHECK(r_partite_optimal(PartiteSizes({2, 2, 2})).weight == 9);
    CHECK_THROWS_AS(PartiteSizes({2, 3}), InvariantError);
    CHECK_THROWS_AS(PartiteSizes({}), InvariantError);
    CHECK_THROWS_AS(PartiteSizes({2, 0}), InvariantError);

    for (std::size_t m = 1; m <= 4; ++m)
        for (std::size_t r = 1; r <= 3; ++r) {
            auto g = r_partite_optimal(PartiteSizes(std::vector<std::size_t>(r, m)));
            Weight mr = 1;
            for (std::size_t i = 0; i < r; ++i) mr *= static_cast<Weight>(m);
            CHECK(g.weight == static_cast<Weight>(m) * (mr + 1) / 2);
        }

    // every edge-weight pair compared exhaustively
    for (auto sizes : std::vector<std::vector<std::size_t>>{{3, 3}, {4, 2, 2}, {3, 3, 2}, {5, 1}, {2, 2, 2, 2}}) {
        auto g = r_partite_optimal(PartiteSizes(sizes));
        check_family(g);
        auto w = edge_weights(g.graph, g.labeling);
        CHECK(std::set<Weight>(w.begin(), w.end()).size() == w.size());
        CHECK(g.weight == partite_optimal_weight(PartiteSizes(sizes)));
    }

    for (auto sizes : std::vector<std::vector<std::size_t>>{{2, 2}, {3, 2}, {3, 3}, {2, 2, 2}, {3, 2, 2}, {2, 1}}) {
        auto g = r_partite_optimal(PartiteSizes(sizes));
        CHECK(exact_optimal(g.graph).optimal_weight == g.weight);
    }
}

TEST_CASE("stars and disjoint singletons") {
    CHECK(star(1).weight == 1);
    CHECK(star(3).weight == 4);
    CHECK(star(5).weight == 11);
    CHECK(disjoint(1).weight == 1);
    CHECK(disjoint(3).weight == 6);
    CHECK(disjoint(6).weight == 21);
    for (std::size_t n = 1; n <= 5; ++n) {
        check_family(star(n));
        check_family(disjoint(n));
        CHECK(exact_optimal(star(n).graph).optimal_weight == star(n).weight);
        CHECK(exact_optimal(disjoint(n).graph).optimal_weight == disjoint(n).weight);
    }
}

TEST_CASE("small paths and cycles against exhaustive search") {
    for (std::size_t m = 2; m <= 6; ++m) CHECK(oracle::optimum(path_optimal(m).graph) == path_optimal(m).weight);
    for (std::size_t m = 3; m <= 6; ++m) CHECK(oracle::optimum(cycle_optimal(m).graph) == cycle_optimal(m).weight);
    CHECK(oracle::optimum(r_partite_optimal(PartiteSizes({2, 2})).graph) == 5);
    CHECK(oracle::optimum(r_partite_optimal(PartiteSizes({3, 2})).graph) == 8);
}
