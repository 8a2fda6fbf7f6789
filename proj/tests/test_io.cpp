#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qdeg/io.hpp"
#include "qdeg/slice.hpp"

using namespace qdeg;

TEST_CASE("field specs") {
    CHECK(parse_field_spec(json("Q")).kind == FieldSpec::Rationals);
    auto fs = parse_field_spec(json{{"GF", 10007}});
    CHECK(fs.kind == FieldSpec::Prime);
    CHECK(fs.p == 10007);
    CHECK_THROWS_AS(parse_field_spec(json("R")), std::invalid_argument);
    CHECK(parse_field_spec(field_spec_to_json(fs)).p == fs.p);
}

TEST_CASE("quiver spec round trip") {
    json j = {
        {"vertices", {"1", "2"}},
        {"arrows", {{{"id", "a"}, {"tail", "1"}, {"head", "2"}}}},
        {"dim", {{"1", 2}, {"2", 3}}},
        {"field", "Q"},
    };
    QuiverSpec qs = parse_quiver_spec(j);
    CHECK(qs.quiver.num_vertices() == 2);
    CHECK(qs.quiver.num_arrows() == 1);
    CHECK(qs.dim == DimVector{2, 3});
    QuiverSpec again = parse_quiver_spec(quiver_spec_to_json(qs));
    CHECK(again.quiver == qs.quiver);
    CHECK(again.dim == qs.dim);

    json missing = j;
    missing["dim"].erase("2");
    CHECK_THROWS_AS(parse_quiver_spec(missing), std::invalid_argument);
}

TEST_CASE("matrices parse integers and fraction strings") {
    RationalField f;
    json j = json::parse(R"([[1, "2/3"], ["-4", 0]])");
    auto m = parse_matrix(j, f);
    CHECK(m.at(0, 1) == mpq_class(2, 3));
    CHECK(m.at(1, 0) == mpq_class(-4));
    auto round = parse_matrix(matrix_to_json(m), f);
    CHECK(round == m);

    PrimeField fp(7);
    auto mp = parse_matrix(j, fp);
    CHECK(mp.at(0, 1) == fp.div(2, 3));
    CHECK(mp.at(1, 0) == fp.from_long(-4));

    CHECK_THROWS_AS(parse_matrix(json::parse(R"([[1],[2,3]])"), f), std::invalid_argument);
    CHECK_THROWS_AS(parse_matrix(json::parse(R"([[null]])"), f), std::invalid_argument);
}

TEST_CASE("representation matrices validate against the dimension vector") {
    RationalField f;
    Quiver q;
    q.add_vertex("1");
    q.add_vertex("2");
    q.add_arrow("a", "1", "2");
    auto qp = std::make_shared<const Quiver>(q);
    DimVector d = {1, 2};
    auto v = parse_rep_mats(json{{"a", {{1, 2}}}}, f, qp, d);
    CHECK(v.mats[0].at(0, 1) == mpq_class(2));
    // Missing arrows default to zero.
    auto z = parse_rep_mats(json::object(), f, qp, d);
    CHECK(z.mats[0].is_zero());
    CHECK_THROWS_AS(parse_rep_mats(json{{"a", {{1}, {2}}}}, f, qp, d), std::invalid_argument);
    CHECK_THROWS_AS(parse_rep_mats(json{{"zz", {{1}}}}, f, qp, d), std::invalid_argument);
}

TEST_CASE("signature and poset serialization") {
    json s = signature_to_json(2, {1, 2, 3});
    CHECK(s["n"] == 2);
    CHECK(s["enumeration_version"] == kEnumerationVersion);
    CHECK(s["values"] == json::array({1, 2, 3}));

    DegenerationPoset p;
    p.labels = {OrbitLabel{{{0, 1}}}, OrbitLabel{{{1, 2}}}};
    p.signatures = {{2}, {1}};
    p.edges = {{0, 1}};
    p.generic = 0;
    std::vector<Root> roots = {{1, 0}, {0, 1}};
    QuiverSpec qs;
    qs.quiver.add_vertex("1");
    qs.quiver.add_vertex("2");
    qs.quiver.add_arrow("a", "1", "2");
    qs.dim = {1, 1};
    json pj = poset_to_json(p, roots, qs, 1);
    CHECK(pj["nodes"].size() == 2);
    CHECK(pj["edges"] == json::array({json::array({0, 1})}));
    std::string dot = poset_to_dot(p, roots);
    CHECK(dot.find("digraph degeneration") != std::string::npos);
    CHECK(dot.find("n0 -> n1") != std::string::npos);
    CHECK(label_to_string(p.labels[1], roots) == "2*(0,1)");
    CHECK(label_to_string(OrbitLabel{}, roots) == "0");
}
