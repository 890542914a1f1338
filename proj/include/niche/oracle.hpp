#pragma once

#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <thread>

#include "niche/digraph.hpp"

namespace niche {

struct SearchBudget {
    int max_vertices = 10;
    uint64_t max_dags = UINT64_MAX;
    std::chrono::milliseconds time_limit{0};  // 0 = unlimited
    int worker_count = 1;
};

struct RealizabilityResult {
    bool realizable = false;
    std::optional<Digraph> witness;  // passes is_acyclic and NH(D) = H + I_k
    int k = 0;
    uint64_t dags_examined = 0;
    double wall_seconds = 0.0;
};

namespace oracle_detail {

using Mask = uint32_t;

struct Target {
    int n = 0;                       // |V(H)| + k
    int base = 0;                    // |V(H)|
    std::vector<Mask> edges;         // hyperedges as bitmasks over 0..base-1
    std::vector<VertexId> names;     // index -> name, extras appended
};

inline bool subset_of_some(const std::vector<Mask>& edges, Mask m) {
    for (Mask e : edges)
        if ((m & ~e) == 0) return true;
    return false;
}

struct Search {
    const Target& t;
    const SearchBudget& budget;
    std::chrono::steady_clock::time_point start;
    std::atomic<bool>& found;
    std::atomic<bool>& out_of_budget;
    std::atomic<uint64_t>& leaves;

    std::vector<int> perm;
    std::vector<Mask> in_set;    // by vertex id
    std::vector<Mask> out_mask;  // by vertex id
    std::vector<Mask> witness_in;
    bool have_witness = false;

    Search(const Target& t_, const SearchBudget& b, std::chrono::steady_clock::time_point s,
           std::atomic<bool>& f, std::atomic<bool>& ob, std::atomic<uint64_t>& lv)
        : t(t_), budget(b), start(s), found(f), out_of_budget(ob), leaves(lv) {
        perm.resize(t.n);
        in_set.assign(t.n, 0);
        out_mask.assign(t.n, 0);
    }

    bool leaf() {
        uint64_t seen = ++leaves;
        if (seen > budget.max_dags) {
            out_of_budget = true;
            return false;
        }
        if (budget.time_limit.count() > 0 && (seen & 0xfff) == 0 &&
            std::chrono::steady_clock::now() - start > budget.time_limit) {
            out_of_budget = true;
            return false;
        }
        // out-neighbourhoods of size >= 2 must equal hyperedges exactly
        std::vector<bool> realized(t.edges.size(), false);
        for (int v = 0; v < t.n; ++v) {
            Mask om = out_mask[v];
            if (std::popcount(om) >= 2) {
                bool hit = false;
                for (size_t i = 0; i < t.edges.size(); ++i)
                    if (t.edges[i] == om) {
                        realized[i] = true;
                        hit = true;
                    }
                if (!hit) return false;
            }
            Mask im = in_set[v];
            if (std::popcount(im) >= 2)
                for (size_t i = 0; i < t.edges.size(); ++i)
                    if (t.edges[i] == im) realized[i] = true;
        }
        for (bool r : realized)
            if (!r) return false;
        witness_in = in_set;
        have_witness = true;
        return true;
    }

    // Assign in-neighbourhoods position by position; a finished in-set must
    // be empty, a singleton, or exactly a hyperedge, and every partial
    // out-set of size >= 2 must stay inside some hyperedge.
    bool descend(int pos, Mask prefix) {
        if (found.load(std::memory_order_relaxed) || out_of_budget.load())
            return false;
        if (pos == t.n) return leaf();

        int v = perm[pos];
        std::vector<Mask> candidates{0};
        Mask rest = prefix;
        while (rest) {
            Mask bit = rest & (~rest + 1);
            candidates.push_back(bit);
            rest &= rest - 1;
        }
        for (Mask e : t.edges)
            if ((e & ~prefix) == 0) candidates.push_back(e);

        for (Mask s : candidates) {
            in_set[v] = s;
            bool ok = true;
            Mask applied = 0;
            for (Mask rem = s; rem; rem &= rem - 1) {
                int w = std::countr_zero(rem);
                out_mask[w] |= Mask(1) << v;
                applied |= Mask(1) << w;
                if (std::popcount(out_mask[w]) >= 2 &&
                    !subset_of_some(t.edges, out_mask[w])) {
                    ok = false;
                    break;
                }
            }
            if (ok && descend(pos + 1, prefix | (Mask(1) << v))) return true;
            for (Mask rem = applied; rem; rem &= rem - 1)
                out_mask[std::countr_zero(rem)] &= ~(Mask(1) << v);
            if (found.load(std::memory_order_relaxed) || out_of_budget.load())
                return false;
        }
        in_set[v] = 0;
        return false;
    }

    // Enumerate all permutations starting with `first`.
    bool run_partition(int first) {
        std::vector<int> tail;
        for (int i = 0; i < t.n; ++i)
            if (i != first) tail.push_back(i);
        do {
            perm[0] = first;
            for (int i = 1; i < t.n; ++i) perm[i] = tail[i - 1];
            in_set.assign(t.n, 0);
            out_mask.assign(t.n, 0);
            if (descend(1, Mask(1) << first)) return true;
            if (found.load(std::memory_order_relaxed) || out_of_budget.load())
                return false;
        } while (std::next_permutation(tail.begin(), tail.end()));
        return false;
    }
};

inline Target make_target(const Hypergraph& h, int k) {
    Target t;
    t.names.assign(h.vertices.begin(), h.vertices.end());
    t.base = (int)t.names.size();
    t.n = t.base + k;
    for (int i = 0; i < k; ++i) t.names.push_back("+i" + std::to_string(i + 1));
    std::map<VertexId, int> id;
    for (int i = 0; i < t.base; ++i) id[t.names[i]] = i;
    for (const Edge& e : h.edges) {
        Mask m = 0;
        for (const VertexId& v : e) m |= Mask(1) << id[v];
        t.edges.push_back(m);
    }
    return t;
}

inline Digraph to_digraph(const Target& t, const std::vector<Mask>& in_set) {
    Digraph d;
    for (const VertexId& v : t.names) d.vertices.insert(v);
    for (int v = 0; v < t.n; ++v)
        for (Mask rem = in_set[v]; rem; rem &= rem - 1)
            d.add_arc(t.names[std::countr_zero(rem)], t.names[v]);
    return d;
}

}  // namespace oracle_detail

// Exhaustive search for an acyclic digraph D on V(H) plus k fresh vertices
// with NH(D) = H + I_k. Digraphs are enumerated as (topological order,
// in-neighbourhood assignment) pairs with dead branches pruned against the
// hyperedge family. NotRealizable is only reported when the search ran to
// completion; a tripped budget throws BudgetExceeded instead.
inline RealizabilityResult realizes(const Hypergraph& h, int k,
                                    const SearchBudget& budget = {}) {
    using namespace oracle_detail;
    validate(h);
    Target t = make_target(h, k);
    if (t.n > budget.max_vertices)
        throw Error(ErrorKind::BudgetExceeded,
                    std::to_string(t.n) + " vertices exceeds max_vertices=" +
                        std::to_string(budget.max_vertices));

    auto start = std::chrono::steady_clock::now();
    std::atomic<bool> found{false}, over{false};
    std::atomic<uint64_t> leaves{0};
    std::mutex mtx;
    int best_partition = t.n;
    std::vector<Mask> best_in;

    int workers = std::clamp(budget.worker_count, 1, t.n);
    std::atomic<int> next{0};
    auto work = [&]() {
        while (true) {
            int first = next.fetch_add(1);
            if (first >= t.n || over.load()) return;
            Search s(t, budget, start, found, over, leaves);
            if (s.run_partition(first)) {
                std::lock_guard<std::mutex> lock(mtx);
                found = true;
                if (first < best_partition) {
                    best_partition = first;
                    best_in = s.witness_in;
                }
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    RealizabilityResult r;
    r.k = k;
    r.dags_examined = leaves.load();
    r.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (found.load()) {
        r.realizable = true;
        r.witness = to_digraph(t, best_in);
        // never trust the search bookkeeping
        if (!is_acyclic(*r.witness).acyclic)
            throw std::logic_error("oracle witness is not acyclic");
        NicheResult nh = niche_hypergraph(*r.witness);
        std::set<Edge> got(nh.hypergraph.edges.begin(), nh.hypergraph.edges.end());
        std::set<Edge> want(h.edges.begin(), h.edges.end());
        if (got != want || !nh.simple)
            throw std::logic_error("oracle witness does not realize H");
        return r;
    }
    if (over.load())
        throw Error(ErrorKind::BudgetExceeded,
                    "search budget exceeded after " + std::to_string(r.dags_examined) +
                        " digraphs; no exhaustiveness claim");
    return r;  // realizable == false, exhaustively
}

struct NicheNumberResult {
    std::optional<int> value;        // min k with a realization, if <= k_max
    int lower_bound = 0;             // k_max + 1 when value is absent
    std::optional<Digraph> witness;
    uint64_t dags_examined = 0;
    double wall_seconds = 0.0;
};

// Minimum k <= k_max with a realization; realizability is monotone in k,
// so the first hit is the niche number.
inline NicheNumberResult niche_number_upto(const Hypergraph& h, int k_max,
                                           const SearchBudget& budget = {}) {
    NicheNumberResult out;
    for (int k = 0; k <= k_max; ++k) {
        RealizabilityResult r = realizes(h, k, budget);
        out.dags_examined += r.dags_examined;
        out.wall_seconds += r.wall_seconds;
        if (r.realizable) {
            out.value = k;
            out.witness = std::move(r.witness);
            return out;
        }
    }
    out.lower_bound = k_max + 1;
    return out;
}

struct EnumerationAudit {
    uint64_t leaves_visited = 0;  // (order, arc subset) pairs, i.e. n! * 2^C(n,2)
    uint64_t distinct_dags = 0;   // counted once, under the lex-min topological order
};

// Unpruned sweep of the oracle's enumeration scheme, counting each DAG only
// when the current permutation is its lexicographically minimal topological
// order.
inline EnumerationAudit count_dags(int n) {
    using namespace oracle_detail;
    EnumerationAudit audit;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::vector<Mask> in_set(n, 0);

    auto lexmin_is_perm = [&]() {
        Mask placed = 0;
        for (int pos = 0; pos < n; ++pos) {
            int smallest = -1;
            for (int v = 0; v < n; ++v) {
                if (placed & (Mask(1) << v)) continue;
                if ((in_set[v] & ~placed) == 0) {
                    smallest = v;
                    break;
                }
            }
            if (smallest != perm[pos]) return false;
            placed |= Mask(1) << smallest;
        }
        return true;
    };

    std::function<void(int, Mask)> rec = [&](int pos, Mask prefix) {
        if (pos == n) {
            audit.leaves_visited++;
            if (lexmin_is_perm()) audit.distinct_dags++;
            return;
        }
        int v = perm[pos];
        Mask limit = Mask(1) << std::popcount(prefix);
        for (Mask choice = 0; choice < limit; ++choice) {
            // spread choice bits over the prefix vertices
            Mask s = 0, rem = prefix;
            int bit = 0;
            while (rem) {
                int w = std::countr_zero(rem);
                if (choice & (Mask(1) << bit)) s |= Mask(1) << w;
                rem &= rem - 1;
                bit++;
            }
            in_set[v] = s;
            rec(pos + 1, prefix | (Mask(1) << v));
        }
        in_set[v] = 0;
    };

    std::sort(perm.begin(), perm.end());
    do {
        in_set.assign(n, 0);
        rec(1, Mask(1) << perm[0]);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return audit;
}

// Independent count of labeled DAGs on n vertices: every orientation choice
// (absent / forward / backward) for each unordered pair, filtered for
// acyclicity by Kahn's algorithm.
inline uint64_t count_acyclic_orientations(int n) {
    using oracle_detail::Mask;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
    uint64_t total = 1;
    for (size_t i = 0; i < pairs.size(); ++i) total *= 3;

    uint64_t count = 0;
    std::vector<Mask> in_adj(n);
    for (uint64_t code = 0; code < total; ++code) {
        std::fill(in_adj.begin(), in_adj.end(), 0);
        uint64_t c = code;
        for (auto [i, j] : pairs) {
            int choice = c % 3;
            c /= 3;
            if (choice == 1) in_adj[j] |= Mask(1) << i;
            if (choice == 2) in_adj[i] |= Mask(1) << j;
        }
        Mask placed = 0;
        bool progress = true;
        while (progress) {
            progress = false;
            for (int v = 0; v < n; ++v)
                if (!(placed & (Mask(1) << v)) && (in_adj[v] & ~placed) == 0) {
                    placed |= Mask(1) << v;
                    progress = true;
                }
        }
        if (placed == (Mask(1) << n) - 1) count++;
    }
    return count;
}

}  // namespace niche
