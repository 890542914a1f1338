#pragma once

#include "niche/digraph.hpp"
#include "niche/families.hpp"
#include "niche/hypergraph.hpp"

namespace niche {

struct TraceStep {
    enum class Kind { BaseBranch, TwoEdge, RemoveBranch, Reverse, Swap, Merge };
    Kind kind;
    Edge trunk;               // BaseBranch, RemoveBranch
    std::vector<Edge> twigs;  // BaseBranch (in role order), RemoveBranch
    Edge e, f;                // TwoEdge
    VertexId shared;          // TwoEdge
    VertexId bud_e, bud_f;    // TwoEdge chosen buds
    VertexId attachment;      // RemoveBranch, Merge
    std::string target;       // "main" or "branch" for Reverse/Swap
    VertexId u, x;            // Swap
};

struct ConstructionTrace {
    std::vector<TraceStep> steps;
};

namespace detail {

inline void verify_or_die(const Digraph& d, const Hypergraph& h, const char* where) {
    AcyclicityResult ac = is_acyclic(d);
    if (!ac.acyclic)
        throw std::logic_error(std::string(where) + ": constructed digraph has a cycle " +
                               join(ac.cycle, ","));
    GoodnessResult g = is_good_digraph(d, h);
    if (!g.good)
        throw std::logic_error(std::string(where) + ": constructed digraph is not good: " +
                               g.violations.front());
}

// Role order inside a branch: twigs sorted by their trunk attachment
// vertex, remaining twig vertices ascending (smallest plays v^2, largest v^r).
inline std::vector<Edge> ordered_twigs(const Branch& b) {
    std::vector<std::pair<VertexId, Edge>> order;
    for (const Edge& t : b.twigs) {
        Edge shared = edge_intersection(b.trunk, t);
        if (shared.size() != 1)
            throw std::logic_error("twig must meet trunk in exactly one vertex");
        order.push_back({*shared.begin(), t});
    }
    std::sort(order.begin(), order.end());
    std::vector<Edge> out;
    for (auto& [v, t] : order) out.push_back(t);
    return out;
}

}  // namespace detail

// Base-case digraph for a standalone branch: trunk e with twigs e_1..e_l,
// l >= 2. Arc families: v^2_1 feeds e, v^1_1 feeds e_l, e_1 feeds v^1_l,
// and each middle twig e_i feeds v^{r_{i-1}}_{i-1}.
inline Digraph base_branch_digraph(const Branch& b) {
    if (b.twigs.size() < 2)
        throw Error(ErrorKind::DegenerateBranch,
                    "branch has " + std::to_string(b.twigs.size()) +
                        " twigs; the base construction needs at least 2");
    std::vector<Edge> tw = detail::ordered_twigs(b);
    size_t l = tw.size();
    auto attach = [&](const Edge& t) { return *edge_intersection(b.trunk, t).begin(); };
    auto rest = [&](const Edge& t) {
        std::vector<VertexId> r;
        VertexId a = attach(t);
        for (const VertexId& v : t)
            if (v != a) r.push_back(v);
        return r;  // ascending: r[0] is v^2, r.back() is v^{r_i}
    };
    for (const Edge& t : tw)
        if (t.size() < 3)
            throw Error(ErrorKind::TooSmall, "twig " + edge_to_string(t) + " has < 3 vertices");
    if (b.trunk.size() < 3)
        throw Error(ErrorKind::TooSmall, "trunk " + edge_to_string(b.trunk) + " has < 3 vertices");

    Digraph d;
    Hypergraph h = branch_to_hypergraph(b);
    d.vertices = h.vertices;
    VertexId v21 = rest(tw[0])[0];
    VertexId v11 = attach(tw[0]);
    VertexId v1l = attach(tw[l - 1]);
    for (const VertexId& v : b.trunk) d.add_arc(v21, v);
    for (const VertexId& v : tw[l - 1]) d.add_arc(v11, v);
    for (const VertexId& v : tw[0]) d.add_arc(v, v1l);
    for (size_t i = 1; i + 1 < l; ++i) {
        VertexId head = rest(tw[i - 1]).back();  // v^{r_i}_i of the previous twig
        for (const VertexId& v : tw[i]) d.add_arc(v, head);
    }
    detail::verify_or_die(d, h, "base_branch_digraph");
    return d;
}

// Degenerate two-edge case of the induction: two mutually intersecting
// twigs with no trunk. A chosen bud of e feeds all of f and all of e
// feeds a chosen bud of f.
inline Digraph two_edge_digraph(const Edge& e, const Edge& f, const VertexId& shared) {
    if (e.size() < 3 || f.size() < 3)
        throw Error(ErrorKind::TooSmall, "both edges need at least 3 vertices");
    Edge common = edge_intersection(e, f);
    if (common != Edge{shared})
        throw Error(ErrorKind::BadSpec, "edges must intersect exactly in " + shared);

    auto first_bud = [&](const Edge& g) {
        for (const VertexId& v : g)
            if (v != shared) return v;
        throw std::logic_error("edge has no bud");
    };
    VertexId xp = first_bud(e);  // its out-neighbourhood becomes f
    VertexId z = first_bud(f);   // its in-neighbourhood becomes e
    Digraph d;
    d.vertices.insert(e.begin(), e.end());
    d.vertices.insert(f.begin(), f.end());
    for (const VertexId& w : e) d.add_arc(w, z);
    for (const VertexId& w : f)
        if (w != z) d.add_arc(xp, w);
    Hypergraph h;
    h.vertices = d.vertices;
    h.edges = {e, f};
    h.normalize();
    detail::verify_or_die(d, h, "two_edge_digraph");
    return d;
}

struct FreeSideResult {
    Digraph digraph;
    std::vector<TraceStep> steps;  // Reverse / Swap applied, in order
};

// Given a good digraph of H and a bud u, produce a good digraph of H in
// which the requested side of u is empty: reuse D, reverse it, or switch
// neighbourhoods with another bud of u's edge that has an empty side.
inline FreeSideResult free_side(const Digraph& d, const Hypergraph& h,
                                const VertexId& u, Side side) {
    auto side_empty = [&](const Digraph& dg, const VertexId& v) {
        return side == Side::In ? dg.in_neighbours(v).empty()
                                : dg.out_neighbours(v).empty();
    };
    FreeSideResult r{d, {}};
    if (side_empty(d, u)) return r;
    bool other_empty = side == Side::In ? d.out_neighbours(u).empty()
                                        : d.in_neighbours(u).empty();
    if (other_empty) {
        r.digraph = reverse(d);
        r.steps.push_back({TraceStep::Kind::Reverse});
        return r;
    }

    StructureReport rep = validate(h);
    if (!rep.buds.count(u))
        throw std::logic_error("free_side: " + u + " is not a bud");
    const Edge* g = nullptr;
    for (const Edge& e : h.edges)
        if (e.count(u)) g = &e;
    std::optional<VertexId> partner;
    for (const VertexId& x : *g)
        if (x != u && rep.buds.count(x) &&
            (r.digraph.in_neighbours(x).empty() || r.digraph.out_neighbours(x).empty())) {
            partner = x;
            break;
        }
    if (!partner)
        throw Error(ErrorKind::NoSwapPartner,
                    "edge " + edge_to_string(*g) + " has no second bud with an empty side");
    if (!side_empty(r.digraph, *partner)) {
        r.digraph = reverse(r.digraph);
        r.steps.push_back({TraceStep::Kind::Reverse});
    }
    r.digraph = swap_neighborhoods(r.digraph, u, *partner);
    TraceStep sw{TraceStep::Kind::Swap};
    sw.u = u;
    sw.x = *partner;
    r.steps.push_back(sw);

    if (!side_empty(r.digraph, u))
        throw std::logic_error("free_side: requested side still nonempty after swap");
    detail::verify_or_die(r.digraph, h, "free_side");
    return r;
}

struct Construction {
    Digraph digraph;
    ConstructionTrace trace;
};

namespace detail {

inline Digraph construct_rec(const Hypergraph& h, ConstructionTrace& trace) {
    if (h.edges.size() == 2) {
        const Edge& e = h.edges[0];
        const Edge& f = h.edges[1];
        Edge common = edge_intersection(e, f);
        VertexId shared = *common.begin();
        Digraph d = two_edge_digraph(e, f, shared);
        TraceStep st{TraceStep::Kind::TwoEdge};
        st.e = e;
        st.f = f;
        st.shared = shared;
        for (const VertexId& v : e)
            if (v != shared) { st.bud_e = v; break; }
        for (const VertexId& v : f)
            if (v != shared) { st.bud_f = v; break; }
        trace.steps.push_back(std::move(st));
        return d;
    }

    BranchDecomposition dec = branch_decomposition(h);
    if (dec.branches.size() == 1) {
        Branch& b = dec.branches[0];
        Digraph d = base_branch_digraph(b);
        TraceStep st{TraceStep::Kind::BaseBranch};
        st.trunk = b.trunk;
        st.twigs = ordered_twigs(b);
        trace.steps.push_back(std::move(st));
        return d;
    }

    const Branch& b = dec.removable;
    if (!b.attachment)
        throw std::logic_error("removable branch with several branches must attach");
    VertexId u = *b.attachment;
    Hypergraph rest = remove_branch(h, b);
    TraceStep st{TraceStep::Kind::RemoveBranch};
    st.trunk = b.trunk;
    st.twigs = b.twigs;
    st.attachment = u;
    trace.steps.push_back(std::move(st));

    Digraph d_main = construct_rec(rest, trace);
    FreeSideResult fr_main = free_side(d_main, rest, u, Side::Out);
    for (TraceStep s : fr_main.steps) {
        s.target = "main";
        trace.steps.push_back(std::move(s));
    }

    Hypergraph bh = branch_to_hypergraph(b);
    Digraph d_branch = construct_rec(bh, trace);
    FreeSideResult fr_branch = free_side(d_branch, bh, u, Side::In);
    for (TraceStep s : fr_branch.steps) {
        s.target = "branch";
        trace.steps.push_back(std::move(s));
    }

    Digraph d = digraph_union(fr_main.digraph, fr_branch.digraph);
    TraceStep mg{TraceStep::Kind::Merge};
    mg.attachment = u;
    trace.steps.push_back(std::move(mg));
    verify_or_die(d, h, "merge");
    return d;
}

}  // namespace detail

// Recursive good-digraph construction for members of the class: peel off a
// removable branch, build both halves, empty the merge vertex's out side in
// the main digraph and its in side in the branch digraph, and union them.
// The result is re-verified before returning.
inline Construction construct_good_digraph(const Hypergraph& h) {
    TVerdict v = classify_T(h);
    if (!v.in_T) throw Error(ErrorKind::NotInT, v.reason);
    Construction c;
    c.digraph = detail::construct_rec(h, c.trace);
    detail::verify_or_die(c.digraph, h, "construct_good_digraph");
    return c;
}

// Replays a trace with a small stack machine: base and two-edge steps push
// digraphs, reverse/swap act on the top, merge unions the top two.
inline Digraph replay(const ConstructionTrace& trace) {
    std::vector<Digraph> stack;
    for (const TraceStep& st : trace.steps) {
        switch (st.kind) {
            case TraceStep::Kind::BaseBranch:
                stack.push_back(base_branch_digraph({st.trunk, st.twigs, std::nullopt}));
                break;
            case TraceStep::Kind::TwoEdge:
                stack.push_back(two_edge_digraph(st.e, st.f, st.shared));
                break;
            case TraceStep::Kind::RemoveBranch:
                break;
            case TraceStep::Kind::Reverse:
                stack.back() = reverse(stack.back());
                break;
            case TraceStep::Kind::Swap:
                stack.back() = swap_neighborhoods(stack.back(), st.u, st.x);
                break;
            case TraceStep::Kind::Merge: {
                Digraph top = std::move(stack.back());
                stack.pop_back();
                Digraph main = std::move(stack.back());
                stack.pop_back();
                stack.push_back(digraph_union(main, top));
                break;
            }
        }
    }
    if (stack.size() != 1) throw std::logic_error("trace does not replay to one digraph");
    return stack.back();
}

struct FlowerConstruction {
    Hypergraph hypergraph;
    Digraph digraph;
};

// The petal-flower realization: for s <= r the seven arc families over the
// path, e' and the petals; for r < s <= 2r the F(r)-part digraph plus
// extension arcs from the remaining petals into u_1..u_{s-r}.
inline FlowerConstruction flower_digraph(int r, int s) {
    FlowerLayout fl = make_flower_layout(s, r);
    Digraph d;
    d.vertices = fl.h.vertices;
    auto pv = [&](int i, int j) { return fl.path[i - 1][j - 1]; };

    int base_petals = std::min(s, r) - 1;  // petals wired through e_5
    for (const VertexId& v : fl.path[0]) d.add_arc(pv(5, 1), v);
    for (const VertexId& v : fl.path[1]) d.add_arc(v, pv(4, 1));
    for (const VertexId& v : fl.path[2]) d.add_arc(v, pv(4, 2));
    for (const VertexId& v : fl.path[3])
        if (v != pv(3, 1)) d.add_arc(pv(3, 1), v);
    for (const VertexId& v : fl.path[4]) d.add_arc(v, fl.a);
    for (const VertexId& v : fl.eprime) d.add_arc(fl.a, v);
    for (int i = 2; i <= base_petals + 1; ++i)
        for (const VertexId& v : fl.petals[i - 2])
            if (v != pv(5, i)) d.add_arc(pv(5, i), v);
    for (int i = 1; i <= s - r; ++i)
        for (const VertexId& v : fl.petals[r - 2 + i])
            if (v != fl.eprime[i - 1]) d.add_arc(v, fl.eprime[i - 1]);

    AcyclicityResult ac = is_acyclic(d);
    if (!ac.acyclic)
        throw std::logic_error("flower digraph has a cycle " + join(ac.cycle, ","));
    NicheResult nh = niche_hypergraph(d);
    if (nh.hypergraph != fl.h || !nh.simple)
        throw std::logic_error("flower digraph does not realize the flower");
    return {fl.h, d};
}

struct NecessaryCheck {
    bool pass = false;
    std::optional<VertexId> witness;  // a vertex of degree > 2 * rank
};

// Degree bound necessary for finite niche number: every vertex degree is
// at most twice the rank. Passing does not imply the niche number is finite.
inline NecessaryCheck necessary_check(const Hypergraph& h) {
    StructureReport r = validate(h);
    if (!r.rank) throw Error(ErrorKind::BadSpec, "necessary_check needs a nonempty edge set");
    for (auto& [v, deg] : r.degree)
        if (deg > 2 * *r.rank) return {false, v};
    return {true, std::nullopt};
}

}  // namespace niche
