#include <catch2/catch_amalgamated.hpp>

#include "niche/families.hpp"

using namespace niche;

TEST_CASE("hyperpath shapes") {
    Hypergraph h1 = make_hyperpath(1, 3);
    CHECK(h1.edges.size() == 1);
    CHECK(h1.vertices.size() == 3);

    Hypergraph h = make_hyperpath(5, 3);
    CHECK(h.edges.size() == 5);
    CHECK(h.vertices.size() == 5 * 3 - 4);
    StructureReport r = validate(h);
    CHECK(r.is_linear);
    CHECK(r.max_degree == 2);
}

TEST_CASE("hypernova shapes") {
    Hypergraph h = make_hypernova(3, 2);
    CHECK(h.edges.size() == 3);
    CHECK(h.vertices.size() == 4);  // K_{1,3}
    StructureReport r = validate(h);
    CHECK(r.degree.at("x") == 3);

    Hypergraph n = make_hypernova(4, 5);
    StructureReport rn = validate(n);
    CHECK(rn.max_degree == 4);
    CHECK(rn.rank == 5);
    CHECK(rn.anti_rank == 5);
    CHECK(rn.is_linear);
}

TEST_CASE("flower F(6) matches the expected counts") {
    Hypergraph h = make_flower(6, 6);
    StructureReport r = validate(h);
    // 5 petals of 5 fresh vertices each, the 5-edge path (5*(6-1)+1 vertices
    // counting a), and 5 fresh vertices of e'
    CHECK(h.vertices.size() == 5 * 5 + (5 * 5 + 1) + 5);
    CHECK(h.edges.size() == 5 + 1 + 5);
    CHECK(r.max_degree == 6);
    CHECK(r.degree.at("a") == 6);
    CHECK(r.rank == 6);
    CHECK(r.anti_rank == 6);
    CHECK(r.is_linear);
    CHECK(r.is_connected);
}

TEST_CASE("flower is r-uniform and linear across the whole range") {
    for (int r = 3; r <= 6; ++r)
        for (int s = 3; s <= 2 * r; ++s) {
            Hypergraph h = make_flower(s, r);
            StructureReport rep = validate(h);
            CHECK(rep.rank == r);
            CHECK(rep.anti_rank == r);
            CHECK(rep.is_linear);
            CHECK(rep.is_connected);
            CHECK(rep.max_degree == s);
        }
}

TEST_CASE("family spec validation") {
    CHECK_THROWS_MATCHES(make_flower(7, 3), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.kind() == ErrorKind::BadSpec;
                         }));
    CHECK_THROWS_AS(make_hyperpath(0, 3), Error);
    CHECK_THROWS_AS(make_hypernova(1, 1), Error);
    CHECK_THROWS_AS(make_random_member(1, 3, 6, 0), Error);
    CHECK_THROWS_AS(make_random_member(4, 2, 6, 0), Error);
}

TEST_CASE("generate dispatches on the spec kind") {
    FamilySpec spec;
    spec.kind = FamilySpec::Kind::Hyperpath;
    spec.k = 3;
    spec.r = 3;
    CHECK(generate(spec) == make_hyperpath(3, 3));
    spec.kind = FamilySpec::Kind::RandomMember;
    spec.edge_count = 5;
    spec.seed = 11;
    CHECK(generate(spec) == make_random_member(5, 3, 6, 11));
}
