// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 the parqa authors
//
// Undirected problem graphs and exact max-clique search. The solver is a
// bitboard branch-and-bound with greedy-coloring bounds; it is exact and
// limited to 64 vertices, which covers every problem size this toolkit
// embeds. all_max_cliques() enumerates maximal cliques (Bron-Kerbosch with
// pivoting) and keeps the maximum ones, so ground-state degeneracy of the
// derived QUBOs is known exactly.
#ifndef PARQA_CLIQUE_HPP
#define PARQA_CLIQUE_HPP

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "parqa/errors.hpp"
#include "parqa/io.hpp"
#include "parqa/rng.hpp"

namespace parqa {

struct Graph {
    int n = 0;
    // canonical form: a < b, sorted lexicographically, no duplicates
    std::vector<std::pair<int, int>> edges;

    Graph() = default;

    Graph(int num_vertices, std::vector<std::pair<int, int>> edge_list)
            : n(num_vertices), edges(std::move(edge_list)) {
        if (n < 0) throw ParameterError("graph: negative vertex count");
        for (auto& [a, b] : edges) {
            if (a == b) throw ValidationError("graph: self loop at vertex " + std::to_string(a));
            if (a > b) std::swap(a, b);
            if (a < 0 || b >= n)
                throw ValidationError("graph: edge (" + std::to_string(a) + ", " +
                                      std::to_string(b) + ") out of range for n = " +
                                      std::to_string(n));
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    }

    bool has_edge(int a, int b) const {
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
    }

    std::vector<int> degrees() const {
        std::vector<int> deg(n, 0);
        for (const auto& [a, b] : edges) {
            ++deg[a];
            ++deg[b];
        }
        return deg;
    }

    double density() const {
        if (n < 2) return 0.0;
        return static_cast<double>(edges.size()) / (static_cast<double>(n) * (n - 1) / 2.0);
    }

    bool connected() const {
        if (n <= 1) return true;
        std::vector<std::vector<int>> adj(n);
        for (const auto& [a, b] : edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        std::vector<char> seen(n, 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        int reached = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    q.push(w);
                }
        }
        return reached == n;
    }

    bool complete() const {
        return static_cast<long long>(edges.size()) * 2 == static_cast<long long>(n) * (n - 1);
    }
};

namespace detail {

inline std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    if (g.n > 64) throw CapacityError("clique: graphs above 64 vertices are not supported");
    std::vector<std::uint64_t> adj(g.n, 0);
    for (const auto& [a, b] : g.edges) {
        adj[a] |= std::uint64_t(1) << b;
        adj[b] |= std::uint64_t(1) << a;
    }
    return adj;
}

struct BranchBound {
    const std::vector<std::uint64_t>& adj;
    int best = 0;
    std::vector<int> best_set;
    std::vector<int> current;
    std::uint64_t nodes = 0;

    explicit BranchBound(const std::vector<std::uint64_t>& a) : adj(a) {}

    void expand(std::uint64_t cand) {
        ++nodes;
        if (!cand) {
            if (static_cast<int>(current.size()) > best) {
                best = static_cast<int>(current.size());
                best_set = current;
            }
            return;
        }
        // Greedy coloring of the candidate set. colors[i] is the number of
        // color classes used up to and including order[i], a valid upper
        // bound on any clique inside {order[0..i]}.
        int order[64], colors[64], cnt = 0;
        std::uint64_t uncolored = cand;
        int color = 0;
        while (uncolored) {
            ++color;
            std::uint64_t avail = uncolored;
            while (avail) {
                int v = std::countr_zero(avail);
                order[cnt] = v;
                colors[cnt] = color;
                ++cnt;
                uncolored &= ~(std::uint64_t(1) << v);
                avail &= ~(std::uint64_t(1) << v);
                avail &= ~adj[v];
            }
        }
        std::uint64_t rem = cand;
        for (int i = cnt - 1; i >= 0; --i) {
            if (static_cast<int>(current.size()) + colors[i] <= best) break;
            int v = order[i];
            current.push_back(v);
            expand(rem & adj[v]);
            current.pop_back();
            rem &= ~(std::uint64_t(1) << v);
        }
    }
};

struct PivotEnumerator {
    const std::vector<std::uint64_t>& adj;
    std::vector<int> current;
    std::vector<std::vector<int>> maximal;

    explicit PivotEnumerator(const std::vector<std::uint64_t>& a) : adj(a) {}

    void run(std::uint64_t p, std::uint64_t x) {
        if (!p && !x) {
            maximal.push_back(current);
            return;
        }
        // pivot: vertex of P|X with the most neighbors in P
        int pivot = -1, pivot_deg = -1;
        for (std::uint64_t s = p | x; s;) {
            int u = std::countr_zero(s);
            s &= s - 1;
            int d = std::popcount(p & adj[u]);
            if (d > pivot_deg) {
                pivot_deg = d;
                pivot = u;
            }
        }
        std::uint64_t ext = p & ~adj[pivot];
        while (ext) {
            int v = std::countr_zero(ext);
            ext &= ext - 1;
            const std::uint64_t bit = std::uint64_t(1) << v;
            current.push_back(v);
            run(p & adj[v], x & adj[v]);
            current.pop_back();
            p &= ~bit;
            x |= bit;
        }
    }
};

}  // namespace detail

struct CliqueResult {
    int omega = 0;
    std::vector<int> witness;     // one maximum clique, ascending vertex ids
    std::uint64_t nodes = 0;      // branch tree nodes visited
    double seconds = 0.0;
};

inline CliqueResult max_clique_exact(const Graph& g) {
    const auto t0 = std::chrono::steady_clock::now();
    CliqueResult result;
    if (g.n == 0) return result;
    const auto adj = detail::adjacency_masks(g);
    detail::BranchBound bb(adj);
    const std::uint64_t all = g.n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << g.n) - 1;
    bb.expand(all);
    result.omega = bb.best;
    result.witness = bb.best_set;
    std::sort(result.witness.begin(), result.witness.end());
    result.nodes = bb.nodes;
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

// All maximum cliques, each ascending, the list in lexicographic order.
inline std::vector<std::vector<int>> all_max_cliques(const Graph& g) {
    if (g.n == 0) return {};
    const auto adj = detail::adjacency_masks(g);
    detail::PivotEnumerator en(adj);
    const std::uint64_t all = g.n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << g.n) - 1;
    en.run(all, 0);
    std::size_t omega = 0;
    for (const auto& c : en.maximal) omega = std::max(omega, c.size());
    std::vector<std::vector<int>> out;
    for (auto& c : en.maximal)
        if (c.size() == omega) {
            std::sort(c.begin(), c.end());
            out.push_back(std::move(c));
        }
    std::sort(out.begin(), out.end());
    return out;
}

// Erdos-Renyi G(n, p) conditioned on being connected and not complete, by
// rejection sampling. Connectivity subsumes the no-isolated-vertex
// requirement for n >= 2. n <= 2 admits no graph meeting both constraints.
inline Graph erdos_renyi_constrained(int n, double p, std::uint64_t seed,
                                     int max_attempts = 10000) {
    if (n < 3) throw ParameterError("erdos_renyi_constrained: need n >= 3, got " +
                                    std::to_string(n));
    if (!(p > 0.0) || !(p < 1.0))
        throw ParameterError("erdos_renyi_constrained: density must lie in (0, 1)");
    std::mt19937_64 rng(mix64(seed, kStreamGraph));
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<std::pair<int, int>> edges;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (next_double(rng) < p) edges.emplace_back(a, b);
        Graph g(n, std::move(edges));
        if (g.connected() && !g.complete()) return g;
    }
    throw ParameterError("erdos_renyi_constrained: no admissible graph in " +
                         std::to_string(max_attempts) + " attempts (n = " + std::to_string(n) +
                         ", p = " + std::to_string(p) + ")");
}

inline void save_problem_graph(const std::string& path, const Graph& g) {
    json j;
    j["n"] = g.n;
    j["edges"] = json::array();
    for (const auto& [a, b] : g.edges) j["edges"].push_back({a, b});
    write_json_file(path, j);
}

inline Graph load_problem_graph(const std::string& path) {
    const json j = load_json_file(path);
    const int n = get_field<int>(j, "n", path);
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : get_field<json>(j, "edges", path)) {
        if (!e.is_array() || e.size() != 2)
            throw ParseError(path + ": field 'edges': entries must be [a, b] pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    try {
        return Graph(n, std::move(edges));
    } catch (const Error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

}  // namespace parqa

#endif
