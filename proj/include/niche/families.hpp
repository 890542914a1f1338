#pragma once

#include <cstdint>
#include <random>

#include "niche/hypergraph.hpp"

namespace niche {

namespace detail {

inline std::string pad2(int n) {
    std::string s = std::to_string(n);
    return s.size() < 2 ? "0" + s : s;
}

inline std::string pad3(int n) {
    std::string s = std::to_string(n);
    while (s.size() < 3) s = "0" + s;
    return s;
}

}  // namespace detail

// Hyperpath of k r-sets, consecutive ones sharing exactly one vertex.
inline Hypergraph make_hyperpath(int k, int r) {
    if (k < 1 || r < 2)
        throw Error(ErrorKind::BadSpec, "hyperpath needs k >= 1 and r >= 2");
    Hypergraph h;
    for (int i = 1; i <= k; ++i) {
        Edge e;
        if (i > 1) e.insert("s" + detail::pad2(i - 1));
        if (i < k) e.insert("s" + detail::pad2(i));
        for (int j = 1; (int)e.size() < r; ++j)
            e.insert("p" + detail::pad2(i) + "x" + detail::pad2(j));
        h.vertices.insert(e.begin(), e.end());
        h.edges.push_back(std::move(e));
    }
    h.normalize();
    return h;
}

// Hypernova N(m): m r-sets pairwise meeting exactly in the common center x.
inline Hypergraph make_hypernova(int m, int r) {
    if (m < 1 || r < 2)
        throw Error(ErrorKind::BadSpec, "hypernova needs m >= 1 and r >= 2");
    Hypergraph h;
    h.vertices.insert("x");
    for (int i = 1; i <= m; ++i) {
        Edge e{"x"};
        for (int j = 1; j < r; ++j)
            e.insert("n" + detail::pad2(i) + "x" + detail::pad2(j));
        h.vertices.insert(e.begin(), e.end());
        h.edges.push_back(std::move(e));
    }
    h.normalize();
    return h;
}

// Named layout of the (s-1)-petal flower F(s): the hypernova N(s-1), a
// 5-edge hyperpath, and one extra edge e', glued by identifying the
// hypernova center with the first path vertex and u1 of e' with the
// second vertex of the second path edge.
struct FlowerLayout {
    Hypergraph h;
    VertexId a;
    std::vector<std::vector<VertexId>> path;    // path[i][j]: e_{i+1} position j+1
    std::vector<std::vector<VertexId>> petals;  // petals[i][j]: f_{i+1} position j+1
    std::vector<VertexId> eprime;               // u_1 .. u_r
};

inline FlowerLayout make_flower_layout(int s, int r) {
    if (r < 3 || s < 3 || s > 2 * r)
        throw Error(ErrorKind::BadSpec, "flower needs r >= 3 and 3 <= s <= 2r");
    FlowerLayout fl;
    fl.a = "a";
    auto path_name = [&](int i, int j) -> VertexId {
        while (j == r && i < 5) { j = 1; ++i; }  // v^r_i = v^1_{i+1}
        if (i == 1 && j == 1) return "a";
        if (i == 2 && j == 2) return "u01";      // u_1 = v^2_2
        return "p" + std::to_string(i) + "v" + detail::pad2(j);
    };
    fl.path.assign(5, {});
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= r; ++j)
            fl.path[i - 1].push_back(path_name(i, j));
    for (int j = 1; j <= r; ++j)
        fl.eprime.push_back("u" + detail::pad2(j));
    fl.petals.assign(s - 1, {});
    for (int i = 1; i <= s - 1; ++i) {
        fl.petals[i - 1].push_back(fl.a);
        for (int j = 2; j <= r; ++j)
            fl.petals[i - 1].push_back("f" + detail::pad2(i) + "w" + detail::pad2(j));
    }

    auto add_edge = [&](const std::vector<VertexId>& vs) {
        Edge e(vs.begin(), vs.end());
        fl.h.vertices.insert(e.begin(), e.end());
        fl.h.edges.push_back(std::move(e));
    };
    for (auto& e : fl.path) add_edge(e);
    add_edge(fl.eprime);
    for (auto& f : fl.petals) add_edge(f);
    fl.h.normalize();
    return fl;
}

inline Hypergraph make_flower(int s, int r) { return make_flower_layout(s, r).h; }

// Random member of the class: a uniform labeled tree on edge-nodes (Prufer),
// every tree adjacency realized by a fresh shared vertex, remaining slots
// filled with fresh buds. Linear with maximum degree 2 by construction.
inline Hypergraph make_random_member(int edge_count, int min_size, int max_size,
                                     uint64_t seed) {
    if (edge_count < 2 || min_size < 3 || max_size < min_size)
        throw Error(ErrorKind::BadSpec,
                    "random member needs edge_count >= 2 and 3 <= min_size <= max_size");
    std::mt19937_64 rng(seed);
    int b = edge_count;

    // labeled tree on b nodes from a random Prufer sequence
    std::vector<std::pair<int, int>> tree_edges;
    std::vector<int> deg(b, 1);
    if (b == 2) {
        tree_edges.push_back({0, 1});
        deg = {1, 1};
    } else {
        std::vector<int> prufer(b - 2);
        std::uniform_int_distribution<int> node(0, b - 1);
        for (int& p : prufer) {
            p = node(rng);
            deg[p]++;
        }
        std::set<int> leaves;
        std::vector<int> d = deg;
        for (int i = 0; i < b; ++i)
            if (d[i] == 1) leaves.insert(i);
        for (int p : prufer) {
            int leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            tree_edges.push_back({leaf, p});
            if (--d[p] == 1) leaves.insert(p);
        }
        tree_edges.push_back({*leaves.begin(), *std::next(leaves.begin())});
    }

    std::vector<Edge> edges(b);
    int shared_idx = 0;
    for (auto [i, j] : tree_edges) {
        VertexId v = "s" + detail::pad3(shared_idx++);
        edges[i].insert(v);
        edges[j].insert(v);
    }
    std::uniform_int_distribution<int> size_dist(min_size, max_size);
    for (int i = 0; i < b; ++i) {
        int size = std::max({size_dist(rng), 3, deg[i]});
        for (int j = 1; (int)edges[i].size() < size; ++j)
            edges[i].insert("b" + detail::pad3(i) + "x" + detail::pad2(j));
    }
    Hypergraph h;
    for (Edge& e : edges) {
        h.vertices.insert(e.begin(), e.end());
        h.edges.push_back(std::move(e));
    }
    h.normalize();
    return h;
}

struct FamilySpec {
    enum class Kind { Hyperpath, Hypernova, Flower, RandomMember } kind;
    int k = 0, r = 0, m = 0, s = 0;
    int edge_count = 0, min_size = 3, max_size = 6;
    uint64_t seed = 0;
};

inline Hypergraph generate(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilySpec::Kind::Hyperpath: return make_hyperpath(spec.k, spec.r);
        case FamilySpec::Kind::Hypernova: return make_hypernova(spec.m, spec.r);
        case FamilySpec::Kind::Flower: return make_flower(spec.s, spec.r);
        case FamilySpec::Kind::RandomMember:
            return make_random_member(spec.edge_count, spec.min_size, spec.max_size,
                                      spec.seed);
    }
    throw Error(ErrorKind::BadSpec, "unknown family kind");
}

}  // namespace niche
