// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 the parqa authors
//
// Maps physical reads back to logical bit assignments, one part per
// embedding that the sample set covers. A chain whose qubits disagree is
// broken; broken chains are resolved per read either by majority vote
// (ties decided by a fair coin) or by weighted random draw, where each
// value wins with probability equal to the fraction of chain qubits
// holding it. Resolution order is reads, then parts, then chains, and the
// generator is only consulted for broken chains, so output is a pure
// function of (samples, seed).
#ifndef PARQA_UNEMBED_HPP
#define PARQA_UNEMBED_HPP

#include <chrono>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "parqa/embedding.hpp"
#include "parqa/errors.hpp"
#include "parqa/rng.hpp"
#include "parqa/sampler.hpp"

namespace parqa {

enum class UnembedMethod { kMajorityVote, kWeightedRandom };

inline std::string unembed_method_name(UnembedMethod m) {
    return m == UnembedMethod::kMajorityVote ? "majority_vote" : "weighted_random";
}

inline UnembedMethod unembed_method_from_name(const std::string& s) {
    if (s == "majority_vote") return UnembedMethod::kMajorityVote;
    if (s == "weighted_random") return UnembedMethod::kWeightedRandom;
    throw ParseError("unknown unembed method '" + s + "'");
}

inline bool detect_broken(const std::vector<std::int8_t>& chain_spins) {
    if (chain_spins.empty()) throw ParameterError("detect_broken: empty chain");
    for (std::int8_t s : chain_spins)
        if (s != chain_spins.front()) return true;
    return false;
}

inline std::int8_t majority_vote(const std::vector<std::int8_t>& chain_spins,
                                 std::mt19937_64& rng) {
    if (chain_spins.empty()) throw ParameterError("majority_vote: empty chain");
    int up = 0;
    for (std::int8_t s : chain_spins) up += s > 0;
    const int down = static_cast<int>(chain_spins.size()) - up;
    if (up > down) return 1;
    if (down > up) return -1;
    return (rng() & 1) ? 1 : -1;
}

inline std::int8_t weighted_random(const std::vector<std::int8_t>& chain_spins,
                                   std::mt19937_64& rng) {
    if (chain_spins.empty()) throw ParameterError("weighted_random: empty chain");
    int up = 0;
    for (std::int8_t s : chain_spins) up += s > 0;
    const double p_up = static_cast<double>(up) / static_cast<double>(chain_spins.size());
    return next_double(rng) < p_up ? 1 : -1;
}

struct UnembedPart {
    int n_logical = 0;
    std::vector<std::int8_t> bits;       // num_reads x n_logical, values 0/1
    std::vector<int> broken_per_read;

    const std::int8_t* row(int read) const {
        return bits.data() + static_cast<std::size_t>(read) * n_logical;
    }
};

struct UnembedResult {
    std::vector<UnembedPart> parts;
    std::vector<int> broken_per_read;   // summed over parts
    long long broken_chains = 0;        // total broken chain instances
    long long chain_instances = 0;      // reads x chains considered
    double wall_seconds = 0.0;          // measured; reports use a modeled time instead

    double broken_fraction() const {
        return chain_instances ? static_cast<double>(broken_chains) / chain_instances : 0.0;
    }
};

// Splits a sample set back into per-part logical samples. Each embedding of
// the set whose leading chains are fully present in the samples becomes one
// part (fewer problems than embeddings leaves trailing embeddings unused);
// a chain that is only partially present is a mismatch and an error.
inline UnembedResult unembed_sampleset(const SampleSet& samples, const DisjointEmbeddingSet& set,
                                       UnembedMethod method, std::uint64_t seed) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto find_column = [&](int qubit) -> int {
        const auto it = std::lower_bound(samples.variables.begin(), samples.variables.end(), qubit);
        if (it == samples.variables.end() || *it != qubit) return -1;
        return static_cast<int>(it - samples.variables.begin());
    };
    if (!std::is_sorted(samples.variables.begin(), samples.variables.end()))
        throw ValidationError("unembed: sample variables are not sorted");

    struct PartPlan {
        std::vector<std::vector<int>> chain_columns;
    };
    std::vector<PartPlan> plans;
    for (const Embedding& emb : set.embeddings) {
        PartPlan plan;
        bool open = true;  // still accepting chains for this part
        for (const Chain& chain : emb.chains) {
            std::vector<int> cols;
            int present = 0;
            for (int q : chain.qubits) {
                const int c = find_column(q);
                if (c >= 0) {
                    ++present;
                    cols.push_back(c);
                }
            }
            if (present != 0 && present != static_cast<int>(chain.qubits.size()))
                throw ValidationError("unembed: chain " + std::to_string(chain.logical) +
                                      " is only partially present in the sample set");
            if (present == 0) {
                open = false;
                continue;
            }
            if (!open)
                throw ValidationError("unembed: embedding covered with a gap at chain " +
                                      std::to_string(chain.logical));
            plan.chain_columns.push_back(std::move(cols));
        }
        if (!plan.chain_columns.empty()) plans.push_back(std::move(plan));
    }

    UnembedResult result;
    result.broken_per_read.assign(samples.num_reads, 0);
    for (const PartPlan& plan : plans) {
        UnembedPart part;
        part.n_logical = static_cast<int>(plan.chain_columns.size());
        part.bits.resize(static_cast<std::size_t>(samples.num_reads) * part.n_logical);
        part.broken_per_read.assign(samples.num_reads, 0);
        result.parts.push_back(std::move(part));
    }

    std::mt19937_64 rng(mix64(seed, kStreamUnembed));
    std::vector<std::int8_t> chain_spins;
    for (int r = 0; r < samples.num_reads; ++r) {
        const std::int8_t* row = samples.row(r);
        for (std::size_t p = 0; p < plans.size(); ++p) {
            UnembedPart& part = result.parts[p];
            for (int i = 0; i < part.n_logical; ++i) {
                const auto& cols = plans[p].chain_columns[i];
                chain_spins.clear();
                for (int c : cols) chain_spins.push_back(row[c]);
                std::int8_t spin;
                if (!detect_broken(chain_spins)) {
                    spin = chain_spins.front();
                } else {
                    ++part.broken_per_read[r];
                    ++result.broken_per_read[r];
                    ++result.broken_chains;
                    spin = method == UnembedMethod::kMajorityVote ? majority_vote(chain_spins, rng)
                                                                  : weighted_random(chain_spins, rng);
                }
                part.bits[static_cast<std::size_t>(r) * part.n_logical + i] = spin > 0 ? 1 : 0;
                ++result.chain_instances;
            }
        }
    }
    result.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

}  // namespace parqa

#endif
