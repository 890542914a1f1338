#pragma once

#include <sstream>

#include <json.hpp>

#include "niche/construct.hpp"
#include "niche/digraph.hpp"
#include "niche/hypergraph.hpp"

namespace niche {

namespace detail {

// Vertex names are validated tokens (no quotes, backslashes or whitespace),
// so quoting them verbatim yields valid JSON.
inline void emit_string_array(std::ostream& os, const std::vector<VertexId>& vs) {
    os << '[';
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) os << ',';
        os << '"' << vs[i] << '"';
    }
    os << ']';
}

}  // namespace detail

// Canonical form: sorted vertices, edges as sorted arrays sorted
// lexicographically, no whitespace. Unique per hypergraph.
inline std::string to_canonical_json(const Hypergraph& h) {
    std::ostringstream os;
    os << "{\"vertices\":";
    detail::emit_string_array(os, {h.vertices.begin(), h.vertices.end()});
    os << ",\"edges\":[";
    for (size_t i = 0; i < h.edges.size(); ++i) {
        if (i) os << ',';
        detail::emit_string_array(os, {h.edges[i].begin(), h.edges[i].end()});
    }
    os << "]}";
    return os.str();
}

inline std::string to_canonical_json(const Digraph& d) {
    std::ostringstream os;
    os << "{\"vertices\":";
    detail::emit_string_array(os, {d.vertices.begin(), d.vertices.end()});
    os << ",\"arcs\":[";
    bool first = true;
    for (auto& [t, h] : d.arcs) {
        if (!first) os << ',';
        first = false;
        os << "[\"" << t << "\",\"" << h << "\"]";
    }
    os << "]}";
    return os.str();
}

namespace detail {

inline nlohmann::json parse_json(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
        throw Error(ErrorKind::ParseError, ex.what());
    }
}

inline VertexId parse_vertex(const nlohmann::json& j) {
    if (!j.is_string())
        throw Error(ErrorKind::ParseError, "vertex name must be a string");
    VertexId v = j.get<std::string>();
    if (!valid_vertex_name(v))
        throw Error(ErrorKind::ParseError, "invalid vertex name \"" + v + "\"");
    return v;
}

}  // namespace detail

inline Hypergraph parse_hypergraph(const std::string& text) {
    nlohmann::json j = detail::parse_json(text);
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges") ||
        !j["vertices"].is_array() || !j["edges"].is_array())
        throw Error(ErrorKind::ParseError,
                    "expected an object with \"vertices\" and \"edges\" arrays");
    Hypergraph h;
    for (auto& v : j["vertices"]) h.vertices.insert(detail::parse_vertex(v));
    for (auto& ej : j["edges"]) {
        if (!ej.is_array())
            throw Error(ErrorKind::ParseError, "each edge must be an array of vertex names");
        Edge e;
        for (auto& v : ej) e.insert(detail::parse_vertex(v));
        h.edges.push_back(std::move(e));
    }
    h.normalize();
    validate(h);
    return h;
}

inline Digraph parse_digraph(const std::string& text) {
    nlohmann::json j = detail::parse_json(text);
    if (!j.is_object() || !j.contains("vertices") || !j.contains("arcs") ||
        !j["vertices"].is_array() || !j["arcs"].is_array())
        throw Error(ErrorKind::ParseError,
                    "expected an object with \"vertices\" and \"arcs\" arrays");
    Digraph d;
    for (auto& v : j["vertices"]) d.vertices.insert(detail::parse_vertex(v));
    for (auto& aj : j["arcs"]) {
        if (!aj.is_array() || aj.size() != 2)
            throw Error(ErrorKind::ParseError, "each arc must be a [tail, head] pair");
        VertexId t = detail::parse_vertex(aj[0]);
        VertexId h = detail::parse_vertex(aj[1]);
        d.add_arc(t, h);
    }
    return d;
}

inline std::string to_dot(const Digraph& d) {
    std::ostringstream os;
    os << "digraph D {\n";
    for (const VertexId& v : d.vertices) os << "  \"" << v << "\";\n";
    for (auto& [t, h] : d.arcs) os << "  \"" << t << "\" -> \"" << h << "\";\n";
    os << "}\n";
    return os.str();
}

// Bipartite incidence drawing: square nodes stand for hyperedges.
inline std::string to_dot(const Hypergraph& h) {
    std::ostringstream os;
    os << "graph H {\n";
    for (const VertexId& v : h.vertices) os << "  \"" << v << "\";\n";
    for (size_t i = 0; i < h.edges.size(); ++i)
        os << "  \"e" << i << "\" [shape=box];\n";
    for (size_t i = 0; i < h.edges.size(); ++i)
        for (const VertexId& v : h.edges[i])
            os << "  \"e" << i << "\" -- \"" << v << "\";\n";
    os << "}\n";
    return os.str();
}

inline std::string to_json(const ConstructionTrace& trace) {
    nlohmann::json steps = nlohmann::json::array();
    auto edge_array = [](const Edge& e) {
        nlohmann::json a = nlohmann::json::array();
        for (const VertexId& v : e) a.push_back(v);
        return a;
    };
    for (const TraceStep& st : trace.steps) {
        nlohmann::json j;
        switch (st.kind) {
            case TraceStep::Kind::BaseBranch: {
                j["step"] = "base_branch";
                j["trunk"] = edge_array(st.trunk);
                nlohmann::json tw = nlohmann::json::array();
                for (const Edge& t : st.twigs) tw.push_back(edge_array(t));
                j["twigs"] = tw;
                break;
            }
            case TraceStep::Kind::TwoEdge:
                j["step"] = "two_edge";
                j["e"] = edge_array(st.e);
                j["f"] = edge_array(st.f);
                j["shared"] = st.shared;
                j["bud_e"] = st.bud_e;
                j["bud_f"] = st.bud_f;
                break;
            case TraceStep::Kind::RemoveBranch: {
                j["step"] = "remove_branch";
                j["trunk"] = edge_array(st.trunk);
                nlohmann::json tw = nlohmann::json::array();
                for (const Edge& t : st.twigs) tw.push_back(edge_array(t));
                j["twigs"] = tw;
                j["attachment"] = st.attachment;
                break;
            }
            case TraceStep::Kind::Reverse:
                j["step"] = "reverse";
                j["target"] = st.target;
                break;
            case TraceStep::Kind::Swap:
                j["step"] = "swap";
                j["u"] = st.u;
                j["x"] = st.x;
                j["target"] = st.target;
                break;
            case TraceStep::Kind::Merge:
                j["step"] = "merge";
                j["attachment"] = st.attachment;
                break;
        }
        steps.push_back(std::move(j));
    }
    return steps.dump(2);
}

}  // namespace niche
