#include <catch2/catch_amalgamated.hpp>

#include "niche/families.hpp"
#include "niche/hypergraph.hpp"

using namespace niche;

namespace {

Hypergraph hg(std::vector<Edge> edges) {
    std::set<VertexId> vs;
    for (const Edge& e : edges) vs.insert(e.begin(), e.end());
    return make_hypergraph(std::move(vs), std::move(edges));
}

}  // namespace

TEST_CASE("validate computes the structure of a 2-edge path") {
    Hypergraph h = hg({{"a", "b", "c"}, {"c", "d", "e"}});
    StructureReport r = validate(h);
    CHECK(r.is_linear);
    CHECK(r.is_connected);
    CHECK(r.max_degree == 2);
    CHECK(r.degree.at("c") == 2);
    CHECK(r.rank == 3);
    CHECK(r.anti_rank == 3);
    CHECK(r.twigs.size() == 2);
    CHECK(r.trunks.empty());
    CHECK(r.buds == std::set<VertexId>{"a", "b", "d", "e"});
    CHECK(r.isolated.empty());
}

TEST_CASE("validate on a single edge") {
    Hypergraph h = hg({{"a", "b", "c"}});
    StructureReport r = validate(h);
    CHECK(r.rank == 3);
    CHECK(r.anti_rank == 3);
    CHECK(r.max_degree == 1);
    CHECK(r.edge_degree == std::vector<int>{0});
    CHECK(r.twigs.size() == 1);  // a sole edge counts as a twig
}

TEST_CASE("validate rejects bad inputs") {
    CHECK_THROWS_MATCHES(validate(hg({{"a", "b"}, {"a", "b", "c"}})), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.kind() == ErrorKind::NonSimple;
                         }));
    CHECK_THROWS_MATCHES(validate(hg({{"a"}})), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.kind() == ErrorKind::LoopEdge;
                         }));
    Hypergraph h;
    h.vertices = {"a", "b"};
    h.edges = {{"a", "b", "c"}};
    CHECK_THROWS_MATCHES(validate(h), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.kind() == ErrorKind::UnknownVertex;
                         }));
}

TEST_CASE("validate reports rank as absent with no edges") {
    Hypergraph h;
    h.vertices = {"a"};
    StructureReport r = validate(h);
    CHECK_FALSE(r.rank.has_value());
    CHECK_FALSE(r.anti_rank.has_value());
    CHECK(r.isolated == std::set<VertexId>{"a"});
}

TEST_CASE("class membership") {
    CHECK(classify_T(make_hyperpath(3, 3)).in_T);
    CHECK(classify_T(make_hyperpath(2, 4)).in_T);

    TVerdict nova = classify_T(make_hypernova(3, 3));
    CHECK_FALSE(nova.in_T);
    CHECK(nova.reason.find("degree") != std::string::npos);

    TVerdict flower = classify_T(make_flower(6, 6));
    CHECK_FALSE(flower.in_T);
    CHECK(flower.reason.find("degree") != std::string::npos);

    // single edge: maximum degree 1
    CHECK_FALSE(classify_T(make_hyperpath(1, 3)).in_T);
    // 2-uniform path: anti-rank too small
    CHECK_FALSE(classify_T(hg({{"a", "b"}, {"b", "c"}})).in_T);
    // disconnected
    CHECK_FALSE(classify_T(hg({{"a", "b", "c"}, {"d", "e", "f"}})).in_T);
}

TEST_CASE("host tree witness: every edge induces a connected subtree") {
    for (uint64_t seed : {7u, 13u, 99u}) {
        Hypergraph h = make_random_member(7, 3, 6, seed);
        auto tree = host_tree(h);
        REQUIRE(tree.size() == h.vertices.size() - 1);
        std::map<VertexId, std::vector<VertexId>> adj;
        for (auto& [a, b] : tree) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        for (const Edge& e : h.edges) {
            // BFS within e
            std::set<VertexId> seen{*e.begin()};
            std::vector<VertexId> q{*e.begin()};
            while (!q.empty()) {
                VertexId v = q.back();
                q.pop_back();
                for (const VertexId& w : adj[v])
                    if (e.count(w) && seen.insert(w).second) q.push_back(w);
            }
            CHECK(seen.size() == e.size());
        }
    }
}

TEST_CASE("branch decomposition of a 3-edge hyperpath is the whole tree") {
    Hypergraph h = make_hyperpath(3, 3);
    BranchDecomposition dec = branch_decomposition(h);
    REQUIRE(dec.branches.size() == 1);
    CHECK(dec.branches[0].twigs.size() == 2);
    Hypergraph rest = remove_branch(h, dec.removable);
    CHECK(rest.edges.empty());
}

TEST_CASE("branch decomposition of a 4-edge hyperpath peels one end") {
    Hypergraph h = make_hyperpath(4, 3);
    BranchDecomposition dec = branch_decomposition(h);
    REQUIRE(dec.branches.size() == 2);
    const Branch& b = dec.removable;
    REQUIRE(b.twigs.size() == 1);
    REQUIRE(b.attachment.has_value());
    Hypergraph rest = remove_branch(h, b);
    CHECK(rest.edges.size() == 2);
    CHECK(rest.vertices.count(*b.attachment) == 1);
    StructureReport r = validate(rest);
    CHECK(r.is_connected);
    CHECK(classify_T(rest).in_T);
}

TEST_CASE("two twigs sharing a vertex have no trunk") {
    Hypergraph h = hg({{"a", "b", "u"}, {"u", "c", "d"}});
    CHECK_THROWS_MATCHES(branch_decomposition(h), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.kind() == ErrorKind::NoTrunk;
                         }));
}

TEST_CASE("remove_branch rejects unknown edges") {
    Hypergraph h = make_hyperpath(3, 3);
    Branch ghost{{"z1", "z2", "z3"}, {}, std::nullopt};
    CHECK_THROWS_MATCHES(remove_branch(h, ghost), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.kind() == ErrorKind::UnknownEdge;
                         }));
}

TEST_CASE("removing every edge leaves the empty hypergraph") {
    Hypergraph h = make_hyperpath(3, 3);
    BranchDecomposition dec = branch_decomposition(h);
    Hypergraph rest = remove_branch(h, dec.removable);
    CHECK(rest.vertices.empty());
    CHECK(rest.edges.empty());
}

TEST_CASE("class invariants on random members") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        Hypergraph h = make_random_member(2 + seed % 9, 3, 6, seed);
        CAPTURE(seed);
        REQUIRE(classify_T(h).in_T);
        StructureReport r = validate(h);
        for (auto& [v, d] : r.degree) CHECK((d == 1 || d == 2));
        CHECK(r.twigs.size() + r.trunks.size() == h.edges.size());
        if (!r.trunks.empty()) {
            BranchDecomposition dec = branch_decomposition(h);
            CHECK(dec.removable.twigs.size() >= 1);
            Hypergraph rest = remove_branch(h, dec.removable);
            if (rest.edges.size() >= 2) CHECK(classify_T(rest).in_T);
        }
    }
}

TEST_CASE("generation is deterministic in the seed") {
    CHECK(make_random_member(6, 3, 6, 42) == make_random_member(6, 3, 6, 42));
    CHECK_FALSE(make_random_member(6, 3, 6, 42) == make_random_member(6, 3, 6, 43));
}
