// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 the parqa authors
//
// Randomized disjoint clique embedder for arbitrary hardware graphs.
//
// Two phases. On a recognized topology the deterministic packers run first:
// triangular tiling on shore-4 Chimera, and the same tiling pushed through
// each of the three Chimera(m-1, 4) layers of Pegasus. They guarantee the
// counts the deterministic tiler would give. The second phase grows further
// copies on the remaining qubits by randomized chain growth: place a seed
// qubit, then attach one logical variable at a time at the free qubit that
// minimizes the summed BFS distance to all existing chains, claiming the
// connecting path interiors for the new chain. Attempts that cannot reach
// every chain are discarded.
//
// The attempt sequence is a pure function of the seed. The wall clock is
// only consulted between attempts, so a generous time budget gives fully
// reproducible output and a binding one merely truncates the sequence;
// more budget can only add embeddings.
#ifndef PARQA_EMBEDDER_HPP
#define PARQA_EMBEDDER_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "parqa/embedding.hpp"
#include "parqa/errors.hpp"
#include "parqa/hardware.hpp"
#include "parqa/rng.hpp"

namespace parqa {

namespace detail {

inline std::optional<Embedding> grow_clique_attempt(const HardwareGraph& hw, int n,
                                                    const std::vector<char>& used,
                                                    std::mt19937_64& rng) {
    const auto& ids = hw.qubits();
    const std::size_t nq = ids.size();
    std::vector<int> free_ids;
    for (std::size_t i = 0; i < nq; ++i)
        if (!used[i] && hw.usable(ids[i])) free_ids.push_back(ids[i]);
    if (static_cast<int>(free_ids.size()) < n) return std::nullopt;

    std::vector<char> claimed(nq, 0);  // by current partial embedding
    Embedding emb;
    emb.chains.resize(n);
    for (int v = 0; v < n; ++v) emb.chains[v].logical = v;

    const int root = free_ids[next_below(rng, free_ids.size())];
    emb.chains[0].qubits.push_back(root);
    claimed[hw.qubit_index(root)] = 1;

    std::vector<std::vector<int>> dist(n), parent(n);
    for (int v = 1; v < n; ++v) {
        // BFS from every existing chain through free, unclaimed qubits
        for (int c = 0; c < v; ++c) {
            dist[c].assign(nq, -1);
            parent[c].assign(nq, -1);
            std::vector<int> frontier;
            for (int q : emb.chains[c].qubits) {
                dist[c][hw.qubit_index(q)] = 0;
                frontier.push_back(q);
            }
            while (!frontier.empty()) {
                std::vector<int> next;
                for (int q : frontier)
                    for (int nb : hw.usable_neighbors(q)) {
                        const int bi = hw.qubit_index(nb);
                        if (dist[c][bi] >= 0 || used[bi] || claimed[bi]) continue;
                        dist[c][bi] = dist[c][hw.qubit_index(q)] + 1;
                        parent[c][bi] = q;
                        next.push_back(nb);
                    }
                frontier = std::move(next);
            }
        }
        long long best_cost = -1;
        std::vector<int> best;
        for (int q : free_ids) {
            const int qi = hw.qubit_index(q);
            if (used[qi] || claimed[qi]) continue;
            long long cost = 0;
            bool reachable = true;
            for (int c = 0; c < v && reachable; ++c) {
                if (dist[c][qi] < 0)
                    reachable = false;
                else
                    cost += dist[c][qi];
            }
            if (!reachable) continue;
            if (best_cost < 0 || cost < best_cost) {
                best_cost = cost;
                best.assign(1, q);
            } else if (cost == best_cost) {
                best.push_back(q);
            }
        }
        if (best.empty()) return std::nullopt;
        const int q = best[next_below(rng, best.size())];
        auto& chain = emb.chains[v].qubits;
        chain.push_back(q);
        claimed[hw.qubit_index(q)] = 1;
        for (int c = 0; c < v; ++c) {
            int cur = parent[c][hw.qubit_index(q)];
            while (cur >= 0 && dist[c][hw.qubit_index(cur)] > 0) {
                const int ci = hw.qubit_index(cur);
                if (!claimed[ci]) {
                    claimed[ci] = 1;
                    chain.push_back(cur);
                }
                cur = parent[c][ci];
            }
        }
    }
    return emb;
}

}  // namespace detail

// Builds as many disjoint K_n embeddings as it can find, up to k_target
// (0 means unbounded). Deterministic for a fixed seed whenever the time
// budget does not bind; see the header comment.
inline DisjointEmbeddingSet greedy_disjoint_embedder(const HardwareGraph& hw, int n, int k_target,
                                                     std::uint64_t seed,
                                                     double time_budget_seconds = 10.0) {
    if (n < 1) throw ParameterError("greedy_disjoint_embedder: need at least one variable");
    if (k_target < 0) throw ParameterError("greedy_disjoint_embedder: negative embedding cap");
    if (time_budget_seconds < 0)
        throw ParameterError("greedy_disjoint_embedder: negative time budget");

    DisjointEmbeddingSet set;
    set.topology = hw.topology;
    set.m = hw.m;
    set.shore = hw.shore;
    set.n_logical = n;

    std::vector<char> used(hw.num_qubits(), 0);
    const auto done = [&] {
        return k_target > 0 && static_cast<int>(set.embeddings.size()) >= k_target;
    };
    const auto commit = [&](Embedding emb) {
        for (const Chain& c : emb.chains)
            for (int q : c.qubits) used[hw.qubit_index(q)] = 1;
        set.embeddings.push_back(std::move(emb));
    };

    if (n == 1) {
        for (int q : hw.qubits()) {
            if (done()) break;
            if (!hw.usable(q)) continue;
            Embedding emb;
            emb.chains.push_back({0, {q}});
            commit(std::move(emb));
        }
        return set;
    }

    const int b = (n + 3) / 4;
    if (hw.topology == Topology::kChimera && hw.shore == 4 && n <= 4 * hw.m) {
        for (auto& emb : tile_clique_chimera(hw, n).embeddings) {
            if (done()) break;
            commit(std::move(emb));
        }
    } else if (hw.topology == Topology::kPegasus && b <= hw.m - 1) {
        const int per_side = (hw.m - 1) / b;
        for (int t = 0; t < 3 && !done(); ++t)
            for (int by = 0; by < per_side && !done(); ++by)
                for (int bx = 0; bx < per_side && !done(); ++bx) {
                    Embedding emb = detail::triangular_clique_block(
                            n, b, [&](int y, int x, int u, int k) {
                                return pegasus_nice_qubit(hw.m, t, by * b + y, bx * b + x, u, k);
                            });
                    if (validate_embedding(emb, hw).ok()) commit(std::move(emb));
                }
    }

    std::mt19937_64 rng(mix64(seed, kStreamEmbedder));
    const auto deadline =
            std::chrono::steady_clock::now() + std::chrono::duration<double>(time_budget_seconds);
    constexpr int kMaxConsecutiveFailures = 64;
    int failures = 0;
    while (!done() && failures < kMaxConsecutiveFailures &&
           std::chrono::steady_clock::now() < deadline) {
        auto emb = detail::grow_clique_attempt(hw, n, used, rng);
        if (emb && validate_embedding(*emb, hw).ok()) {
            commit(std::move(*emb));
            failures = 0;
        } else {
            ++failures;
        }
    }
    return set;
}

}  // namespace parqa

#endif
