// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 the parqa authors
//
// Minor embeddings of cliques into hardware graphs. An embedding maps each
// logical variable to a chain (connected set of qubits); a disjoint
// embedding set places many copies of the same clique on non-overlapping
// qubits so independent problems anneal side by side.
//
// tile_clique_chimera() is the deterministic packer: K_N needs b = ceil(N/4)
// shores, one triangular block of b x b cells embeds one copy with every
// chain of length b + 1, and floor(m / b)^2 disjoint blocks fit on C(m, 4).
// Inside a block, variable i = 4a + k owns the horizontal qubits of shore k
// in cells (a, 0..a) and the vertical qubits of shore k in cells (a..b-1, a);
// the two runs meet in the diagonal cell (a, a). Variables on the same
// diagonal cell meet there through an intra-cell coupler, variables with
// a_i < a_j meet in cell (a_j, a_i), so every clique edge has a coupler.
#ifndef PARQA_EMBEDDING_HPP
#define PARQA_EMBEDDING_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "parqa/errors.hpp"
#include "parqa/hardware.hpp"
#include "parqa/io.hpp"

namespace parqa {

struct Chain {
    int logical = 0;
    std::vector<int> qubits;
};

struct Embedding {
    std::vector<Chain> chains;  // chains[i].logical == i
    int logical_size() const { return static_cast<int>(chains.size()); }
};

struct DisjointEmbeddingSet {
    Topology topology = Topology::kCustom;
    int m = 0;
    int shore = 0;
    int n_logical = 0;
    std::vector<Embedding> embeddings;
};

struct EmbeddingCheck {
    bool shape_ok = true;        // chains keyed 0..N-1, none empty, no duplicates inside
    bool qubits_usable = true;   // all chain qubits exist and are not dead
    bool chains_connected = true;
    bool chains_disjoint = true;
    bool edges_covered = true;   // every logical pair bridged by a usable coupler
    std::vector<std::string> failures;

    bool ok() const {
        return shape_ok && qubits_usable && chains_connected && chains_disjoint && edges_covered;
    }
};

struct ValidationReport {
    std::vector<EmbeddingCheck> embeddings;
    bool cross_disjoint = true;
    std::vector<std::string> failures;

    bool ok() const {
        if (!cross_disjoint) return false;
        for (const auto& e : embeddings)
            if (!e.ok()) return false;
        return true;
    }
};

inline EmbeddingCheck validate_embedding(const Embedding& emb, const HardwareGraph& hw) {
    EmbeddingCheck check;
    const int n = emb.logical_size();
    std::map<int, int> owner;  // qubit -> logical variable
    for (int i = 0; i < n; ++i) {
        const Chain& c = emb.chains[i];
        if (c.logical != i) {
            check.shape_ok = false;
            check.failures.push_back("chain " + std::to_string(i) + " labeled " +
                                     std::to_string(c.logical));
        }
        if (c.qubits.empty()) {
            check.shape_ok = false;
            check.failures.push_back("chain " + std::to_string(i) + " is empty");
            continue;
        }
        for (int q : c.qubits) {
            if (!hw.usable(q)) {
                check.qubits_usable = false;
                check.failures.push_back("chain " + std::to_string(i) + " uses " +
                                         (hw.contains(q) ? "dead" : "unknown") + " qubit " +
                                         std::to_string(q));
                continue;
            }
            auto [it, inserted] = owner.emplace(q, i);
            if (!inserted) {
                if (it->second == i) {
                    check.shape_ok = false;
                    check.failures.push_back("chain " + std::to_string(i) +
                                             " lists qubit " + std::to_string(q) + " twice");
                } else {
                    check.chains_disjoint = false;
                    check.failures.push_back("qubit " + std::to_string(q) + " shared by chains " +
                                             std::to_string(it->second) + " and " +
                                             std::to_string(i));
                }
            }
        }
    }
    if (!check.qubits_usable) return check;  // connectivity over missing qubits is meaningless

    for (int i = 0; i < n; ++i) {
        const Chain& c = emb.chains[i];
        if (c.qubits.empty()) continue;
        std::set<int> members(c.qubits.begin(), c.qubits.end());
        std::vector<int> stack{c.qubits.front()};
        std::set<int> seen{c.qubits.front()};
        while (!stack.empty()) {
            const int q = stack.back();
            stack.pop_back();
            for (int nb : hw.usable_neighbors(q))
                if (members.count(nb) && !seen.count(nb)) {
                    seen.insert(nb);
                    stack.push_back(nb);
                }
        }
        if (seen.size() != members.size()) {
            check.chains_connected = false;
            check.failures.push_back("chain " + std::to_string(i) + " is disconnected");
        }
    }

    std::set<std::pair<int, int>> covered;
    for (const auto& [q, i] : owner)
        for (int nb : hw.usable_neighbors(q)) {
            const auto it = owner.find(nb);
            if (it != owner.end() && it->second != i)
                covered.insert({std::min(i, it->second), std::max(i, it->second)});
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!covered.count({i, j})) {
                check.edges_covered = false;
                check.failures.push_back("no coupler between chains " + std::to_string(i) +
                                         " and " + std::to_string(j));
            }
    return check;
}

inline ValidationReport validate(const DisjointEmbeddingSet& set, const HardwareGraph& hw) {
    ValidationReport report;
    std::map<int, std::size_t> owner;  // qubit -> embedding index
    for (std::size_t e = 0; e < set.embeddings.size(); ++e) {
        const Embedding& emb = set.embeddings[e];
        report.embeddings.push_back(validate_embedding(emb, hw));
        if (emb.logical_size() != set.n_logical) {
            report.embeddings.back().shape_ok = false;
            report.embeddings.back().failures.push_back(
                    "embedding " + std::to_string(e) + " has " +
                    std::to_string(emb.logical_size()) + " chains, set says " +
                    std::to_string(set.n_logical));
        }
        for (const Chain& c : emb.chains)
            for (int q : c.qubits) {
                auto [it, inserted] = owner.emplace(q, e);
                if (!inserted && it->second != e) {
                    report.cross_disjoint = false;
                    report.failures.push_back("qubit " + std::to_string(q) +
                                              " shared by embeddings " +
                                              std::to_string(it->second) + " and " +
                                              std::to_string(e));
                }
            }
    }
    return report;
}

namespace detail {

// One triangular clique block in shore-4 cell coordinates, mapped to qubit
// ids by the caller. cell_qubit(y, x, u, k) must yield the vertical (u = 0)
// or horizontal (u = 1) qubit of shore k in cell (y, x).
inline Embedding triangular_clique_block(int n, int b,
                                         const std::function<int(int, int, int, int)>& cell_qubit) {
    Embedding emb;
    for (int i = 0; i < n; ++i) {
        Chain chain;
        chain.logical = i;
        const int a = i / 4, k = i % 4;
        for (int x = 0; x <= a; ++x) chain.qubits.push_back(cell_qubit(a, x, 1, k));
        for (int y = a; y < b; ++y) chain.qubits.push_back(cell_qubit(y, a, 0, k));
        emb.chains.push_back(std::move(chain));
    }
    return emb;
}

}  // namespace detail

// Deterministic clique tiling of C(m, 4). Returns floor(m / ceil(N/4))^2
// embeddings (or max_embeddings if smaller), scanning blocks row-major and
// skipping any block that touches a dead qubit. max_embeddings = 0 means all.
inline DisjointEmbeddingSet tile_clique_chimera(const HardwareGraph& hw, int n,
                                                int max_embeddings = 0) {
    if (hw.topology != Topology::kChimera || hw.shore != 4)
        throw ParameterError("tile_clique_chimera: target must be a shore-4 chimera graph");
    if (n < 1) throw ParameterError("tile_clique_chimera: need at least one logical variable");
    if (max_embeddings < 0) throw ParameterError("tile_clique_chimera: negative embedding cap");
    if (n > 4 * hw.m)
        throw CapacityError("tile_clique_chimera: K" + std::to_string(n) + " does not fit on C(" +
                            std::to_string(hw.m) + ", 4)");
    const int b = (n + 3) / 4;
    const int per_side = hw.m / b;
    DisjointEmbeddingSet set;
    set.topology = Topology::kChimera;
    set.m = hw.m;
    set.shore = 4;
    set.n_logical = n;
    for (int by = 0; by < per_side; ++by)
        for (int bx = 0; bx < per_side; ++bx) {
            if (max_embeddings && static_cast<int>(set.embeddings.size()) >= max_embeddings)
                return set;
            Embedding emb = detail::triangular_clique_block(
                    n, b, [&](int y, int x, int u, int k) {
                        return chimera_cell_qubit(hw.m, 4, by * b + y, bx * b + x, u, k);
                    });
            if (validate_embedding(emb, hw).ok()) set.embeddings.push_back(std::move(emb));
        }
    return set;
}

struct ChainLengthStats {
    std::size_t chains = 0;
    int min = 0;
    int max = 0;
    double mean = 0.0;
    std::map<int, std::size_t> histogram;
};

inline ChainLengthStats chain_length_stats(const DisjointEmbeddingSet& set) {
    ChainLengthStats stats;
    long long total = 0;
    for (const auto& emb : set.embeddings)
        for (const auto& chain : emb.chains) {
            const int len = static_cast<int>(chain.qubits.size());
            if (stats.chains == 0) {
                stats.min = stats.max = len;
            } else {
                stats.min = std::min(stats.min, len);
                stats.max = std::max(stats.max, len);
            }
            ++stats.chains;
            total += len;
            ++stats.histogram[len];
        }
    if (stats.chains) stats.mean = static_cast<double>(total) / stats.chains;
    return stats;
}

inline void save_embeddings(const std::string& path, const DisjointEmbeddingSet& set) {
    json j;
    j["topology"] = topology_name(set.topology);
    j["m"] = set.m;
    j["shore"] = set.shore;
    j["N"] = set.n_logical;
    j["embeddings"] = json::array();
    for (const auto& emb : set.embeddings) {
        json chains = json::object();
        for (const auto& chain : emb.chains) chains[std::to_string(chain.logical)] = chain.qubits;
        j["embeddings"].push_back({{"chains", chains}});
    }
    write_json_file(path, j);
}

inline DisjointEmbeddingSet load_embeddings(const std::string& path) {
    const json j = load_json_file(path);
    DisjointEmbeddingSet set;
    set.topology = topology_from_name(get_field<std::string>(j, "topology", path));
    set.m = get_field_or<int>(j, "m", path, 0);
    set.shore = get_field_or<int>(j, "shore", path, 0);
    set.n_logical = get_field<int>(j, "N", path);
    for (const auto& e : get_field<json>(j, "embeddings", path)) {
        const json chains = get_field<json>(e, "chains", path);
        Embedding emb;
        emb.chains.resize(set.n_logical);
        for (const auto& [key, qubits] : chains.items()) {
            int logical;
            try {
                logical = std::stoi(key);
            } catch (const std::exception&) {
                throw ParseError(path + ": field 'chains': bad logical id '" + key + "'");
            }
            if (logical < 0 || logical >= set.n_logical)
                throw ParseError(path + ": field 'chains': logical id " + key +
                                 " out of range for N = " + std::to_string(set.n_logical));
            emb.chains[logical].logical = logical;
            emb.chains[logical].qubits = qubits.get<std::vector<int>>();
        }
        for (int i = 0; i < set.n_logical; ++i) {
            emb.chains[i].logical = i;
            if (emb.chains[i].qubits.empty())
                throw ParseError(path + ": embedding missing chain for variable " +
                                 std::to_string(i));
        }
        set.embeddings.push_back(std::move(emb));
    }
    return set;
}

}  // namespace parqa

#endif
