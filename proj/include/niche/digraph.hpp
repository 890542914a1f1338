#pragma once

#include <map>
#include <queue>

#include "niche/core.hpp"
#include "niche/hypergraph.hpp"

namespace niche {

struct Digraph {
    std::set<VertexId> vertices;
    std::set<std::pair<VertexId, VertexId>> arcs;

    // Rejects self-arcs and 2-cycles at construction; both are
    // representation-forbidden. Inserting an existing arc is a no-op.
    void add_arc(const VertexId& tail, const VertexId& head) {
        if (tail == head)
            throw Error(ErrorKind::BadSpec, "self-arc at " + tail);
        if (arcs.count({head, tail}))
            throw Error(ErrorKind::TwoCycle, "2-cycle between " + tail + " and " + head);
        vertices.insert(tail);
        vertices.insert(head);
        arcs.insert({tail, head});
    }

    Edge in_neighbours(const VertexId& v) const {
        Edge out;
        for (auto& [t, h] : arcs)
            if (h == v) out.insert(t);
        return out;
    }

    Edge out_neighbours(const VertexId& v) const {
        Edge out;
        for (auto& [t, h] : arcs)
            if (t == v) out.insert(h);
        return out;
    }

    bool operator==(const Digraph&) const = default;
};

struct AcyclicityResult {
    bool acyclic = false;
    std::vector<VertexId> order;  // all arcs go forward in it
    std::vector<VertexId> cycle;  // x1,...,xp with (xp,x1) an arc
};

// Kahn's algorithm with a min-ordered frontier; the returned order is the
// lexicographically smallest topological order. On failure returns a
// shortest directed cycle, ties broken lexicographically.
inline AcyclicityResult is_acyclic(const Digraph& d) {
    std::map<VertexId, int> indeg;
    std::map<VertexId, std::vector<VertexId>> succ;
    for (const VertexId& v : d.vertices) indeg[v] = 0;
    for (auto& [t, h] : d.arcs) {
        indeg[h]++;
        succ[t].push_back(h);
    }
    AcyclicityResult r;
    std::set<VertexId> frontier;
    for (auto& [v, deg] : indeg)
        if (deg == 0) frontier.insert(v);
    while (!frontier.empty()) {
        VertexId v = *frontier.begin();
        frontier.erase(frontier.begin());
        r.order.push_back(v);
        for (const VertexId& w : succ[v])
            if (--indeg[w] == 0) frontier.insert(w);
    }
    if (r.order.size() == d.vertices.size()) {
        r.acyclic = true;
        return r;
    }
    r.order.clear();

    // shortest cycle: BFS back to the start from each remaining vertex
    std::vector<VertexId> best;
    for (auto& [s, deg] : indeg) {
        if (deg == 0) continue;
        std::map<VertexId, VertexId> parent;
        std::queue<VertexId> q;
        q.push(s);
        std::optional<std::vector<VertexId>> found;
        std::set<VertexId> seen{s};
        while (!q.empty() && !found) {
            VertexId v = q.front();
            q.pop();
            for (const VertexId& w : succ[v]) {
                if (w == s) {
                    std::vector<VertexId> cyc{v};
                    while (cyc.back() != s) cyc.push_back(parent[cyc.back()]);
                    std::reverse(cyc.begin(), cyc.end());
                    found = cyc;
                    break;
                }
                if (seen.insert(w).second) {
                    parent[w] = v;
                    q.push(w);
                }
            }
        }
        if (!found) continue;
        // canonical rotation: start at the smallest vertex on the cycle
        auto& cyc = *found;
        auto mn = std::min_element(cyc.begin(), cyc.end());
        std::rotate(cyc.begin(), mn, cyc.end());
        if (best.empty() || cyc.size() < best.size() ||
            (cyc.size() == best.size() && cyc < best))
            best = cyc;
    }
    r.cycle = best;
    return r;
}

enum class Side { In, Out };

struct NicheResult {
    Hypergraph hypergraph;
    bool simple = true;
    // first witness per edge in (vertex, side) order
    std::map<Edge, std::pair<VertexId, Side>> witness;
};

// The niche hypergraph: all in- and out-neighbour sets of size >= 2,
// collected as a set, over the full vertex set of D.
inline NicheResult niche_hypergraph(const Digraph& d) {
    NicheResult r;
    r.hypergraph.vertices = d.vertices;
    std::map<VertexId, Edge> ins, outs;
    for (const VertexId& v : d.vertices) ins[v] = outs[v] = {};
    for (auto& [t, h] : d.arcs) {
        ins[h].insert(t);
        outs[t].insert(h);
    }
    for (const VertexId& v : d.vertices) {
        if (ins[v].size() >= 2 && !r.witness.count(ins[v]))
            r.witness.emplace(ins[v], std::make_pair(v, Side::In));
        if (outs[v].size() >= 2 && !r.witness.count(outs[v]))
            r.witness.emplace(outs[v], std::make_pair(v, Side::Out));
    }
    for (auto& [e, w] : r.witness) r.hypergraph.edges.push_back(e);
    r.hypergraph.normalize();
    for (const Edge& e : r.hypergraph.edges)
        for (const Edge& f : r.hypergraph.edges)
            if (e != f && std::includes(f.begin(), f.end(), e.begin(), e.end()))
                r.simple = false;
    return r;
}

inline Digraph reverse(const Digraph& d) {
    Digraph out;
    out.vertices = d.vertices;
    for (auto& [t, h] : d.arcs) out.arcs.insert({h, t});
    return out;
}

// Exchanges the in- and out-neighbourhoods of u and x. Equivalent to
// relabelling by the transposition u <-> x; an arc between u and x maps
// to its reversal, never to a self-arc.
inline Digraph swap_neighborhoods(const Digraph& d, const VertexId& u,
                                  const VertexId& x) {
    if (u == x) throw Error(ErrorKind::SameVertex, "cannot swap " + u + " with itself");
    if (!d.vertices.count(u) || !d.vertices.count(x))
        throw Error(ErrorKind::UnknownVertex, "swap endpoint not in digraph");
    auto relabel = [&](const VertexId& v) -> const VertexId& {
        if (v == u) return x;
        if (v == x) return u;
        return v;
    };
    Digraph out;
    out.vertices = d.vertices;
    for (auto& [t, h] : d.arcs) out.arcs.insert({relabel(t), relabel(h)});
    return out;
}

// Union of vertex and arc sets. Acyclicity is not assumed; callers re-check.
inline Digraph digraph_union(const Digraph& a, const Digraph& b) {
    Digraph out = a;
    out.vertices.insert(b.vertices.begin(), b.vertices.end());
    for (auto& [t, h] : b.arcs) {
        if (out.arcs.count({h, t}))
            throw Error(ErrorKind::TwoCycle,
                        "union creates a 2-cycle between " + t + " and " + h);
        out.arcs.insert({t, h});
    }
    return out;
}

struct GoodnessResult {
    bool good = false;
    std::vector<std::string> violations;
};

// A good digraph of H: NH(D) = H exactly (same vertex set, identical simple
// edge family) and every hyperedge has at most one bud with both
// neighbourhoods nonempty.
inline GoodnessResult is_good_digraph(const Digraph& d, const Hypergraph& h) {
    GoodnessResult r;
    NicheResult nh = niche_hypergraph(d);
    if (nh.hypergraph.vertices != h.vertices)
        r.violations.push_back("(i) vertex sets differ");
    if (!nh.simple)
        r.violations.push_back("(i) collected neighbourhood family is not simple");
    std::set<Edge> got(nh.hypergraph.edges.begin(), nh.hypergraph.edges.end());
    std::set<Edge> want(h.edges.begin(), h.edges.end());
    for (const Edge& e : want)
        if (!got.count(e))
            r.violations.push_back("(i) edge " + edge_to_string(e) +
                                   " is not realized by any neighbourhood");
    for (const Edge& e : got)
        if (!want.count(e))
            r.violations.push_back("(i) spurious neighbourhood " + edge_to_string(e));

    StructureReport rep = validate(h);
    for (const Edge& e : h.edges) {
        std::vector<VertexId> both;
        for (const VertexId& v : e)
            if (rep.buds.count(v) && !d.in_neighbours(v).empty() &&
                !d.out_neighbours(v).empty())
                both.push_back(v);
        if (both.size() > 1)
            r.violations.push_back("(ii) edge " + edge_to_string(e) + " has " +
                                   std::to_string(both.size()) +
                                   " buds with both sides nonempty: " + join(both, ","));
    }
    r.good = r.violations.empty();
    return r;
}

}  // namespace niche
