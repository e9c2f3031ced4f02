// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 the parqa authors
//
// Turns logical QUBOs plus embeddings into one physical Ising problem.
// Per part: the logical model is converted to spins, each bias h_i is split
// equally over the qubits of chain i, each coupling J_ij is split equally
// over every usable coupler joining chains i and j, and every coupler
// inside a chain gets the ferromagnetic term -chain_strength. For a read
// where all chains agree, physical energy = logical energy minus
// chain_strength times the number of intra-chain couplers; the total of
// that constant over all parts is exposed as chain_energy_shift.
#ifndef PARQA_PARAMETRIZE_HPP
#define PARQA_PARAMETRIZE_HPP

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "parqa/embedding.hpp"
#include "parqa/errors.hpp"
#include "parqa/hardware.hpp"
#include "parqa/model.hpp"

namespace parqa {

struct ChainStrength {
    double value = 1.0;
    bool fallback = false;  // no quadratic terms, RMS undefined, defaulted to 1.0
};

// Uniform torque compensation: prefactor * rms(quadratic coefficients)
// * sqrt(mean variable degree), degrees counted over quadratic terms with
// every variable in the denominator.
inline ChainStrength chain_strength_utc(const Qubo& q, double prefactor = 0.2) {
    if (!(prefactor > 0.0)) throw ParameterError("chain_strength_utc: prefactor must be positive");
    if (q.n == 0) throw ParameterError("chain_strength_utc: empty model");
    if (q.quadratic.empty()) return {1.0, true};
    double sum_sq = 0.0;
    std::vector<int> degree(q.n, 0);
    for (const auto& [ij, w] : q.quadratic) {
        sum_sq += w * w;
        ++degree[ij.first];
        ++degree[ij.second];
    }
    const double rms = std::sqrt(sum_sq / static_cast<double>(q.quadratic.size()));
    double mean_degree = 0.0;
    for (int d : degree) mean_degree += d;
    mean_degree /= q.n;
    return {prefactor * rms * std::sqrt(mean_degree), false};
}

struct QpuTimeModel {
    double anneal_time = 50e-6;  // seconds per anneal
    double readout_time = 0.0;
    double programming_time = 0.0;  // once per call
    double delay_time = 0.0;
};

inline double qpu_time(const QpuTimeModel& model, long long anneals) {
    if (anneals < 1) throw ParameterError("qpu_time: need at least one anneal");
    if (model.anneal_time < 0 || model.readout_time < 0 || model.programming_time < 0 ||
        model.delay_time < 0)
        throw ParameterError("qpu_time: negative time component");
    return model.programming_time +
           static_cast<double>(anneals) * (model.anneal_time + model.readout_time + model.delay_time);
}

struct EmbedOptions {
    bool normalize_parts = false;
    double chain_strength = 0.0;  // > 0 overrides the per-part UTC value
    double utc_prefactor = 0.2;
};

struct PhysicalPart {
    std::vector<Chain> chains;  // the chains actually used (first n_logical of the embedding)
    int n_logical = 0;
    double scale = 1.0;            // multiplier applied to this part's coefficients
    double chain_strength = 0.0;
    bool strength_fallback = false;
    int intra_couplers = 0;  // usable couplers inside chains, each carrying -chain_strength
};

struct PhysicalProblem {
    std::vector<int> variables;  // sorted physical qubit ids, one per ising index
    IsingModel ising;            // over dense indices aligned with variables
    std::vector<PhysicalPart> parts;
    double chain_energy_shift = 0.0;  // sum of chain_strength * intra_couplers

    int index_of(int qubit) const {
        const auto it = std::lower_bound(variables.begin(), variables.end(), qubit);
        if (it == variables.end() || *it != qubit)
            throw ParameterError("physical problem: qubit " + std::to_string(qubit) +
                                 " is not a variable");
        return static_cast<int>(it - variables.begin());
    }
};

namespace detail {

inline PhysicalProblem embed_parts(const std::vector<Qubo>& parts,
                                   const std::vector<const Embedding*>& embeddings,
                                   const HardwareGraph& hw, const EmbedOptions& options) {
    if (parts.empty()) throw ParameterError("embed: no parts");
    if (parts.size() > embeddings.size())
        throw CapacityError("embed: " + std::to_string(parts.size()) + " parts but only " +
                            std::to_string(embeddings.size()) + " embeddings");
    if (options.chain_strength < 0) throw ParameterError("embed: negative chain strength");

    PhysicalProblem prob;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p].n > embeddings[p]->logical_size())
            throw CapacityError("embed: part " + std::to_string(p) + " has " +
                                std::to_string(parts[p].n) + " variables, embedding only " +
                                std::to_string(embeddings[p]->logical_size()) + " chains");
        for (int i = 0; i < parts[p].n; ++i)
            for (int q : embeddings[p]->chains[i].qubits) prob.variables.push_back(q);
    }
    std::sort(prob.variables.begin(), prob.variables.end());
    if (std::adjacent_find(prob.variables.begin(), prob.variables.end()) != prob.variables.end())
        throw ValidationError("embed: embeddings overlap on a qubit");
    prob.ising = IsingModel(static_cast<int>(prob.variables.size()));

    for (std::size_t p = 0; p < parts.size(); ++p) {
        PhysicalPart part;
        part.n_logical = parts[p].n;
        const Qubo* logical = &parts[p];
        NormalizeResult scaled;
        if (options.normalize_parts) {
            scaled = normalize(parts[p]);
            logical = &scaled.qubo;
            part.scale = scaled.scale;
        }
        if (options.chain_strength > 0) {
            part.chain_strength = options.chain_strength;
        } else {
            const ChainStrength cs = chain_strength_utc(*logical, options.utc_prefactor);
            part.chain_strength = cs.value;
            part.strength_fallback = cs.fallback;
        }
        part.chains.assign(embeddings[p]->chains.begin(),
                           embeddings[p]->chains.begin() + parts[p].n);

        const IsingModel logical_ising = qubo_to_ising(*logical);
        prob.ising.offset += logical_ising.offset;
        for (int i = 0; i < parts[p].n; ++i) {
            const auto& qubits = part.chains[i].qubits;
            if (qubits.empty()) throw ValidationError("embed: empty chain");
            const double share = logical_ising.h[i] / static_cast<double>(qubits.size());
            for (int q : qubits) prob.ising.h[prob.index_of(q)] += share;
        }
        for (const auto& [ij, w] : logical_ising.j) {
            std::vector<std::pair<int, int>> couplers;
            for (int a : part.chains[ij.first].qubits)
                for (int b : part.chains[ij.second].qubits)
                    if (hw.usable_edge(a, b)) couplers.emplace_back(a, b);
            if (couplers.empty())
                throw ValidationError("embed: no coupler between chains " +
                                      std::to_string(ij.first) + " and " +
                                      std::to_string(ij.second) + " of part " + std::to_string(p));
            const double share = w / static_cast<double>(couplers.size());
            for (const auto& [a, b] : couplers)
                prob.ising.add_coupling(prob.index_of(a), prob.index_of(b), share);
        }
        for (int i = 0; i < parts[p].n; ++i) {
            const auto& qubits = part.chains[i].qubits;
            for (std::size_t a = 0; a < qubits.size(); ++a)
                for (std::size_t b = a + 1; b < qubits.size(); ++b)
                    if (hw.usable_edge(qubits[a], qubits[b])) {
                        prob.ising.add_coupling(prob.index_of(qubits[a]),
                                                prob.index_of(qubits[b]), -part.chain_strength);
                        ++part.intra_couplers;
                    }
        }
        prob.chain_energy_shift += part.chain_strength * part.intra_couplers;
        prob.parts.push_back(std::move(part));
    }
    return prob;
}

}  // namespace detail

// Single problem on a single embedding. The embedding must already be valid
// for the target graph (validate_embedding); invalid input is rejected.
inline PhysicalProblem embed_problem(const Qubo& q, const Embedding& emb, const HardwareGraph& hw,
                                     const EmbedOptions& options = {}) {
    const EmbeddingCheck check = validate_embedding(emb, hw);
    if (!check.ok())
        throw ValidationError("embed_problem: invalid embedding: " +
                              (check.failures.empty() ? std::string("shape") : check.failures[0]));
    return detail::embed_parts({q}, {&emb}, hw, options);
}

// Many independent problems, part i on embedding i of the set. Fewer parts
// than embeddings is fine; the surplus embeddings stay idle.
inline PhysicalProblem embed_composite(const std::vector<Qubo>& parts,
                                       const DisjointEmbeddingSet& set, const HardwareGraph& hw,
                                       const EmbedOptions& options = {}) {
    const ValidationReport report = validate(set, hw);
    if (!report.ok())
        throw ValidationError("embed_composite: invalid embedding set" +
                              (report.failures.empty()
                                       ? std::string()
                                       : ": " + report.failures[0]));
    std::vector<const Embedding*> refs;
    for (std::size_t p = 0; p < parts.size() && p < set.embeddings.size(); ++p)
        refs.push_back(&set.embeddings[p]);
    return detail::embed_parts(parts, refs, hw, options);
}

}  // namespace parqa

#endif
