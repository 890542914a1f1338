#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace niche {

using VertexId = std::string;
using Edge = std::set<VertexId>;

enum class ErrorKind {
    LoopEdge,
    NonSimple,
    UnknownVertex,
    UnknownEdge,
    NoTrunk,
    BadSpec,
    SameVertex,
    TwoCycle,
    DegenerateBranch,
    TooSmall,
    NoSwapPartner,
    NotInT,
    BudgetExceeded,
    ParseError,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::LoopEdge: return "LoopEdge";
        case ErrorKind::NonSimple: return "NonSimple";
        case ErrorKind::UnknownVertex: return "UnknownVertex";
        case ErrorKind::UnknownEdge: return "UnknownEdge";
        case ErrorKind::NoTrunk: return "NoTrunk";
        case ErrorKind::BadSpec: return "BadSpec";
        case ErrorKind::SameVertex: return "SameVertex";
        case ErrorKind::TwoCycle: return "TwoCycle";
        case ErrorKind::DegenerateBranch: return "DegenerateBranch";
        case ErrorKind::TooSmall: return "TooSmall";
        case ErrorKind::NoSwapPartner: return "NoSwapPartner";
        case ErrorKind::NotInT: return "NotInT";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

// Vertex names are bare tokens so they can appear unquoted in diagnostics
// and unescaped in the canonical JSON.
inline bool valid_vertex_name(const VertexId& v) {
    if (v.empty()) return false;
    for (char c : v) {
        if (c == ',' || c == '"' || c == '\\') return false;
        if (std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

struct Hypergraph {
    std::set<VertexId> vertices;
    std::vector<Edge> edges;  // kept sorted and deduplicated

    void normalize() {
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    }

    bool operator==(const Hypergraph&) const = default;
};

inline Hypergraph make_hypergraph(std::set<VertexId> vertices,
                                  std::vector<Edge> edges) {
    Hypergraph h{std::move(vertices), std::move(edges)};
    h.normalize();
    return h;
}

inline Edge edge_intersection(const Edge& a, const Edge& b) {
    Edge out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(out, out.end()));
    return out;
}

inline std::string join(const std::vector<VertexId>& vs, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) out += sep;
        out += vs[i];
    }
    return out;
}

inline std::string edge_to_string(const Edge& e) {
    return "{" + join({e.begin(), e.end()}, ",") + "}";
}

}  // namespace niche
