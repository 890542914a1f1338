#pragma once

#include <map>
#include <queue>

#include "niche/core.hpp"

namespace niche {

struct StructureReport {
    std::map<VertexId, int> degree;
    int max_degree = 0;
    std::optional<int> rank;       // absent when there are no edges
    std::optional<int> anti_rank;
    bool is_linear = true;
    bool is_connected = true;
    std::vector<int> edge_degree;  // parallel to h.edges
    std::vector<Edge> twigs;       // edge degree <= 1
    std::vector<Edge> trunks;      // edge degree  > 1
    std::set<VertexId> buds;       // degree exactly 1
    std::set<VertexId> isolated;   // degree 0
};

// Checks the representation invariants (no loops, simple, members known)
// and computes the full structural summary.
inline StructureReport validate(const Hypergraph& h) {
    for (const Edge& e : h.edges) {
        if (e.size() < 2)
            throw Error(ErrorKind::LoopEdge, "loop edge " + edge_to_string(e));
        for (const VertexId& v : e)
            if (!h.vertices.count(v))
                throw Error(ErrorKind::UnknownVertex,
                            "edge " + edge_to_string(e) + " uses unknown vertex " + v);
    }
    for (size_t i = 0; i < h.edges.size(); ++i)
        for (size_t j = 0; j < h.edges.size(); ++j)
            if (i != j && std::includes(h.edges[j].begin(), h.edges[j].end(),
                                        h.edges[i].begin(), h.edges[i].end()))
                throw Error(ErrorKind::NonSimple,
                            "edge " + edge_to_string(h.edges[i]) +
                                " is contained in " + edge_to_string(h.edges[j]));

    StructureReport r;
    for (const VertexId& v : h.vertices) r.degree[v] = 0;
    for (const Edge& e : h.edges) {
        for (const VertexId& v : e) r.degree[v]++;
        if (!r.rank || (int)e.size() > *r.rank) r.rank = (int)e.size();
        if (!r.anti_rank || (int)e.size() < *r.anti_rank) r.anti_rank = (int)e.size();
    }
    for (auto& [v, d] : r.degree) {
        r.max_degree = std::max(r.max_degree, d);
        if (d == 0) r.isolated.insert(v);
        if (d == 1) r.buds.insert(v);
    }

    r.edge_degree.assign(h.edges.size(), 0);
    for (size_t i = 0; i < h.edges.size(); ++i)
        for (size_t j = 0; j < h.edges.size(); ++j) {
            if (i == j) continue;
            Edge common = edge_intersection(h.edges[i], h.edges[j]);
            if (!common.empty()) r.edge_degree[i]++;
            if (common.size() > 1) r.is_linear = false;
        }
    for (size_t i = 0; i < h.edges.size(); ++i) {
        // a sole edge has edge degree 0; it is still classified a twig
        if (r.edge_degree[i] <= 1) r.twigs.push_back(h.edges[i]);
        else r.trunks.push_back(h.edges[i]);
    }

    // connectivity over the whole vertex set; isolated vertices disconnect
    if (h.vertices.size() > 1) {
        std::map<VertexId, const VertexId*> parent;
        std::queue<VertexId> q;
        q.push(*h.vertices.begin());
        std::set<VertexId> seen{*h.vertices.begin()};
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (const Edge& e : h.edges)
                if (e.count(v))
                    for (const VertexId& w : e)
                        if (seen.insert(w).second) q.push(w);
        }
        r.is_connected = seen.size() == h.vertices.size();
    }
    return r;
}

struct TVerdict {
    bool in_T = false;
    std::string reason;  // first violated criterion, with a witness
};

namespace detail {

// Line graph of a linear hypergraph: one node per edge, adjacency by
// nonempty intersection. Returns adjacency lists of edge indices.
inline std::vector<std::vector<int>> line_graph(const Hypergraph& h) {
    std::vector<std::vector<int>> adj(h.edges.size());
    for (size_t i = 0; i < h.edges.size(); ++i)
        for (size_t j = i + 1; j < h.edges.size(); ++j)
            if (!edge_intersection(h.edges[i], h.edges[j]).empty()) {
                adj[i].push_back((int)j);
                adj[j].push_back((int)i);
            }
    return adj;
}

}  // namespace detail

// Membership in the class of connected linear hypertrees with maximum
// degree exactly two and every hyperedge of size at least three.
// Hypertree-ness is decided by the line graph being a tree, which is
// equivalent on this class.
inline TVerdict classify_T(const Hypergraph& h) {
    StructureReport r = validate(h);
    if (!r.is_connected) return {false, "not connected"};
    if (!r.isolated.empty())
        return {false, "isolated vertex " + *r.isolated.begin()};
    if (!r.is_linear) {
        for (size_t i = 0; i < h.edges.size(); ++i)
            for (size_t j = i + 1; j < h.edges.size(); ++j)
                if (edge_intersection(h.edges[i], h.edges[j]).size() > 1)
                    return {false, "not linear: " + edge_to_string(h.edges[i]) +
                                       " and " + edge_to_string(h.edges[j]) +
                                       " share more than one vertex"};
    }
    if (r.max_degree != 2) {
        for (auto& [v, d] : r.degree)
            if (d == r.max_degree)
                return {false, "maximum degree is " + std::to_string(r.max_degree) +
                                   " (need 2), e.g. at " + v};
        return {false, "maximum degree is " + std::to_string(r.max_degree) + " (need 2)"};
    }
    if (r.anti_rank && *r.anti_rank < 3) {
        for (const Edge& e : h.edges)
            if (e.size() < 3)
                return {false, "edge " + edge_to_string(e) + " has fewer than 3 vertices"};
    }
    if (h.edges.size() < 2)
        return {false, "fewer than 2 hyperedges"};

    // tree check: connected (implied by H connected) + edge count m-1
    auto adj = detail::line_graph(h);
    size_t pairs = 0;
    for (auto& a : adj) pairs += a.size();
    pairs /= 2;
    if (pairs != h.edges.size() - 1) {
        // locate one line-graph cycle for the witness
        std::vector<int> parent(adj.size(), -2);
        for (size_t s = 0; s < adj.size(); ++s) {
            if (parent[s] != -2) continue;
            std::vector<std::pair<int, int>> stack{{(int)s, -1}};
            parent[s] = -1;
            while (!stack.empty()) {
                auto [v, p] = stack.back();
                stack.pop_back();
                for (int w : adj[v]) {
                    if (w == p) continue;
                    if (parent[w] != -2) {
                        return {false, "line graph has a cycle through " +
                                           edge_to_string(h.edges[v]) + " and " +
                                           edge_to_string(h.edges[w])};
                    }
                    parent[w] = v;
                    stack.push_back({w, v});
                }
            }
        }
        return {false, "line graph is not a tree"};
    }
    return {true, ""};
}

// Host tree witness: a tree on V(H) in which every hyperedge induces a
// connected subtree. Valid for members of the class accepted above.
// Built by rooting the line-graph tree and hanging each edge's vertices
// as a path from its entry vertex.
inline std::vector<std::pair<VertexId, VertexId>> host_tree(const Hypergraph& h) {
    std::vector<std::pair<VertexId, VertexId>> tree;
    if (h.edges.empty()) return tree;
    auto adj = detail::line_graph(h);
    std::vector<bool> done(h.edges.size(), false);
    // entry[i]: the vertex through which edge i was reached (none for the root)
    std::queue<std::pair<int, std::optional<VertexId>>> q;
    q.push({0, std::nullopt});
    done[0] = true;
    while (!q.empty()) {
        auto [i, entry] = q.front();
        q.pop();
        const Edge& e = h.edges[i];
        std::vector<VertexId> chain;
        if (entry) chain.push_back(*entry);
        for (const VertexId& v : e)
            if (!entry || v != *entry) chain.push_back(v);
        for (size_t t = 1; t < chain.size(); ++t)
            tree.push_back({chain[t - 1], chain[t]});
        for (int j : adj[i])
            if (!done[j]) {
                done[j] = true;
                Edge shared = edge_intersection(h.edges[i], h.edges[j]);
                q.push({j, *shared.begin()});
            }
    }
    return tree;
}

struct Branch {
    Edge trunk;
    std::vector<Edge> twigs;                // each meets trunk in one vertex
    std::optional<VertexId> attachment;     // where the trunk meets the rest of H
};

inline Hypergraph branch_to_hypergraph(const Branch& b) {
    std::set<VertexId> vs(b.trunk.begin(), b.trunk.end());
    std::vector<Edge> es{b.trunk};
    for (const Edge& t : b.twigs) {
        vs.insert(t.begin(), t.end());
        es.push_back(t);
    }
    return make_hypergraph(std::move(vs), std::move(es));
}

struct BranchDecomposition {
    std::vector<Branch> branches;  // one per trunk of H
    Branch removable;              // H - removable stays connected
};

// Branch structure of a member of the class. Implements the removable-branch
// selection: take the set of all twigs T, and pick a trunk that is a twig of
// H - T; its branch can be deleted without disconnecting H.
// Throws NoTrunk when H has exactly two edges (both twigs).
inline BranchDecomposition branch_decomposition(const Hypergraph& h) {
    StructureReport r = validate(h);
    if (r.trunks.empty())
        throw Error(ErrorKind::NoTrunk, "no trunk: " + std::to_string(h.edges.size()) +
                                            " edges, all twigs");

    std::set<Edge> trunk_set(r.trunks.begin(), r.trunks.end());
    BranchDecomposition out;
    for (const Edge& trunk : r.trunks) {
        Branch b{trunk, {}, std::nullopt};
        for (const Edge& twig : r.twigs)
            if (!edge_intersection(trunk, twig).empty()) b.twigs.push_back(twig);
        out.branches.push_back(std::move(b));
    }

    // edge degree of each trunk within H - T
    for (Branch& b : out.branches) {
        std::vector<Edge> meets;
        for (const Edge& f : r.trunks)
            if (f != b.trunk && !edge_intersection(b.trunk, f).empty())
                meets.push_back(f);
        if (meets.size() <= 1) {
            if (meets.size() == 1) {
                Edge shared = edge_intersection(b.trunk, meets[0]);
                b.attachment = *shared.begin();
            }
            if (!out.removable.trunk.empty()) continue;  // keep the lex-first one
            out.removable = b;
        }
    }
    return out;
}

// H minus the branch's edges, dropping vertices left uncovered. The
// attachment vertex survives through its remaining edge.
inline Hypergraph remove_branch(const Hypergraph& h, const Branch& b) {
    std::set<Edge> gone{b.trunk};
    gone.insert(b.twigs.begin(), b.twigs.end());
    for (const Edge& e : gone)
        if (std::find(h.edges.begin(), h.edges.end(), e) == h.edges.end())
            throw Error(ErrorKind::UnknownEdge,
                        "edge " + edge_to_string(e) + " is not in the hypergraph");

    StructureReport r = validate(h);
    Hypergraph out;
    for (const Edge& e : h.edges)
        if (!gone.count(e)) {
            out.edges.push_back(e);
            out.vertices.insert(e.begin(), e.end());
        }
    // vertices that were already isolated stay
    out.vertices.insert(r.isolated.begin(), r.isolated.end());
    out.normalize();
    return out;
}

}  // namespace niche
