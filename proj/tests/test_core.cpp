#include <doctest.h>

#include "edisc/core.hpp"
#include "oracles.hpp"

using namespace edisc;

namespace {

Hypergraph hg(const char* text) { return parse_hypergraph(text); }

}  // namespace

TEST_CASE("edge weights and totals") {
    auto h = hg("a b\n");
    CHECK(edge_weight(h, Labeling(std::vector<Weight>{1, 2}), 0) == 3);
    CHECK(edge_weight(hg("a\n"), Labeling(std::vector<Weight>{0}), 0) == 0);
    auto chain = hg("1\n1 2\n1 2 3\n");
    CHECK(edge_weight(chain, Labeling(std::vector<Weight>{1, 1, 1}), 2) == 3);
    CHECK_THROWS_AS(edge_weight(h, Labeling(std::vector<Weight>{1, 2}), 1), std::out_of_range);

    CHECK(total_weight(Labeling(5)) == 0);
    CHECK(total_weight(Labeling(std::vector<Weight>{1, 2, 4})) == 7);
    CHECK(total_weight(Labeling(std::vector<Weight>{0, 1, 2, 0})) == 3);
}

TEST_CASE("validate_discriminator verdicts") {
    CHECK(validate_discriminator(hg("a\n"), Labeling(std::vector<Weight>{1})).valid());

    auto chain = hg("1\n1 2\n1 2 3\n");
    auto ok = validate_discriminator(chain, Labeling(std::vector<Weight>{1, 1, 1}));
    CHECK(ok.valid());
    CHECK(ok.weights == std::vector<Weight>{1, 2, 3});

    auto bad = validate_discriminator(hg("a\nb\n"), Labeling(std::vector<Weight>{1, 1}));
    REQUIRE_FALSE(bad.valid());
    CHECK(bad.violation->kind == Violation::Kind::Collision);
    CHECK(bad.violation->first == 0);
    CHECK(bad.violation->second == 1);
    CHECK(bad.describe() == "edges 1,2 both weigh 1");

    auto zero = validate_discriminator(hg("a\nb\n"), Labeling(std::vector<Weight>{1, 0}));
    REQUIRE_FALSE(zero.valid());
    CHECK(zero.violation->kind == Violation::Kind::ZeroWeight);
    CHECK(zero.violation->first == 1);

    CHECK_FALSE(validate_discriminator(hg("a\n"), Labeling(std::vector<Weight>{1, 2})).valid());
}

TEST_CASE("labeling rejects negative values") {
    CHECK_THROWS_AS(Labeling(std::vector<Weight>{1, -1}), InvariantError);
    Labeling l(2);
    CHECK_THROWS_AS(l.set(0, -3), InvariantError);
}

TEST_CASE("hypergraph invariants") {
    CHECK_THROWS_AS(Hypergraph({"a"}, {{}}), InvariantError);
    CHECK_THROWS_AS(Hypergraph({"a"}, {{1}}), InvariantError);
    CHECK_THROWS_AS(Hypergraph({"a", "b"}, {{0, 1}, {1, 0}}), InvariantError);
    CHECK_THROWS_AS(Hypergraph({"a", "a"}, {{0}}), InvariantError);

    auto h = hg("a b\nb c\n");
    CHECK(h.vertex_count() == 3);
    CHECK(h.degree(1) == 2);
    CHECK(h.max_degree() == 2);
    CHECK(h.incident_edges(1) == std::vector<EdgeIndex>{0, 1});
    CHECK(h.find_vertex("c") == VertexIndex{2});
    CHECK_FALSE(h.find_vertex("z"));
}

TEST_CASE("reduce merges identical incidences") {
    auto r = reduce(hg("a b\nc\n"));
    REQUIRE(r.class_count() == 2);
    CHECK(r.classes()[0].to_string() == "{1}");
    CHECK(r.classes()[1].to_string() == "{2}");
    CHECK(r.class_map()[0] == r.class_map()[1]);

    auto chain = reduce(hg("1 2 3\n2 3\n3\n"));
    REQUIRE(chain.class_count() == 3);
    CHECK(chain.classes()[0].to_string() == "{1}");
    CHECK(chain.classes()[1].to_string() == "{1,2}");
    CHECK(chain.classes()[2].to_string() == "{1,2,3}");

    auto already = hg("a\nb\n");
    auto ra = reduce(already);
    CHECK(ra.class_count() == 2);
    CHECK(ra.to_hypergraph().edge_count() == 2);
}

TEST_CASE("reduced hypergraph validation") {
    CHECK_THROWS_AS(ReducedHypergraph(2, {IncidenceVector({0})}), InvariantError);
    CHECK_THROWS_AS(ReducedHypergraph(2, {IncidenceVector({0, 1})}), InvariantError);
    CHECK_THROWS_AS(ReducedHypergraph(1, {IncidenceVector({0}), IncidenceVector({0})}), InvariantError);
    CHECK_NOTHROW(ReducedHypergraph(2, {IncidenceVector({0}), IncidenceVector({0, 1})}));
}

TEST_CASE("parse and serialize") {
    auto h = hg("a b\nc\n");
    CHECK(h.edge_count() == 2);
    CHECK(h.edge(0) == std::vector<VertexIndex>{0, 1});
    CHECK(h.edge(1) == std::vector<VertexIndex>{2});

    try {
        hg("a\na\n");
        FAIL("expected duplicate edge");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK(hg("# comment\n\na b\n").edge_count() == 1);
    CHECK_THROWS_AS(hg("a #x\n"), ParseError);

    auto text = serialize_hypergraph(hg("  b a \n\n# c\nc a\n"));
    CHECK(text == "b a\nc a\n");
    CHECK(serialize_hypergraph(parse_hypergraph(text)) == text);
}

TEST_CASE("labeling text round trip") {
    auto h = hg("a b\nb c\n");
    Labeling l({0, 1, 3});
    auto text = format_labeling(h, l);
    CHECK(text == "v a 0\nv b 1\nv c 3\ne 1 1\ne 2 4\ntotal 4\n");
    CHECK(parse_labeling(h, text) == l);
    CHECK(parse_labeling(h, "# x\nv c 2\n") == Labeling(std::vector<Weight>{0, 0, 2}));
    CHECK_THROWS_AS(parse_labeling(h, "v z 1\n"), ParseError);
    CHECK_THROWS_AS(parse_labeling(h, "v a 1\nv a 2\n"), ParseError);
    CHECK_THROWS_AS(parse_labeling(h, "v a -1\n"), ParseError);
}

TEST_CASE("property: validity matches a naive check and survives reduction") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<Weight> d(0, 4);
    for (int round = 0; round < 300; ++round) {
        auto h = oracle::random_hypergraph(rng, 6, 6);
        std::vector<Weight> v(h.vertex_count());
        for (auto& x : v) x = d(rng);
        Labeling l(v);
        const bool valid = validate_discriminator(h, l).valid();
        CHECK(valid == oracle::is_discriminator(h, v));

        auto r = reduce(h);
        CHECK(validate_discriminator(r.to_hypergraph(), r.project(l)).valid() == valid);

        auto text = serialize_hypergraph(h);
        CHECK(serialize_hypergraph(parse_hypergraph(text)) == text);
    }
}
