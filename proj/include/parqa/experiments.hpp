// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 the parqa authors
//
// End-to-end experiment drivers. A parallel run embeds k independent
// max-clique problems side by side, anneals the composite problem
// calls_per_problem times with anneals_per_call reads, unembeds, counts
// ground hits per problem and reports ensemble time-to-solution per
// density. A sequential run replays the problems the parallel run ended on
// (after retries), one problem at a time with the same per-problem read
// budget, for the speedup baseline. Replica mode embeds the same problem k
// times and scores a read as solved when any replica hits the ground state.
//
// Determinism contract: every random stream derives from the master seed
// via mix64 with fixed salts, wall-clock time never enters any report file
// (unembedding cost is modeled as unembed_rate seconds per read-qubit), and
// rerunning with the same seed reproduces problems.csv, ensemble.csv and
// report.json byte for byte.
//
// Retries: a problem whose ground state was never sampled gets its graph
// regenerated (seed salted with the slot's attempt number) and the whole
// density is re-sampled fresh, up to retry_limit rounds; slots that were
// already solved keep their graphs. A density that still has unsolved
// problems is reported with solved = false and undefined TTS fields.
#ifndef PARQA_EXPERIMENTS_HPP
#define PARQA_EXPERIMENTS_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "parqa/clique.hpp"
#include "parqa/embedder.hpp"
#include "parqa/embedding.hpp"
#include "parqa/errors.hpp"
#include "parqa/hardware.hpp"
#include "parqa/io.hpp"
#include "parqa/metrics.hpp"
#include "parqa/model.hpp"
#include "parqa/parametrize.hpp"
#include "parqa/rng.hpp"
#include "parqa/sampler.hpp"
#include "parqa/unembed.hpp"

namespace parqa {

struct TopologyConfig {
    Topology kind = Topology::kChimera;
    int m = 16;
    int shore = 4;
    std::string file;        // load a custom graph instead of generating
    std::vector<int> dead;   // extra yield mask on top of the graph's own
};

inline std::vector<double> default_densities() {
    std::vector<double> d;
    for (int i = 2; i <= 19; ++i) d.push_back(i * 0.05);
    return d;
}

struct ExperimentConfig {
    TopologyConfig topology;
    int clique_size = 20;
    std::vector<double> densities = default_densities();
    int calls_per_problem = 100;
    int anneals_per_call = 1000;
    SamplerConfig sampler;  // num_reads and seed are managed per call
    UnembedMethod unembed_method = UnembedMethod::kWeightedRandom;
    QpuTimeModel qpu;
    double unembed_rate = 5e-9;  // modeled unembedding seconds per read-qubit
    double utc_prefactor = 0.2;
    double chain_strength = 0.0;  // 0 = per-part UTC
    bool normalize_parts = false;
    std::string embedder = "tile";  // "tile" | "greedy"
    std::string embedding_file;
    int k = 0;  // embeddings to use, 0 = all found
    int replicas = 8;
    int retry_limit = 3;
    std::uint64_t seed = 0;
    std::string graph_file;  // replica mode: fixed input problem
    double embed_time_budget = 10.0;
    double gsp_tolerance = 1e-9;
    std::string output_dir = "out";
};

struct RunRecord {
    double density = 0.0;
    int slot = 0;
    std::uint64_t graph_seed = 0;
    int retries = 0;
    int n = 0;
    int edges = 0;
    int omega = 0;
    double ground_energy = 0.0;
    int embedding_index = 0;
    int chain_max = 0;
    long long reads = 0;
    long long successes = 0;
    double p = 0.0;
    double u_model = 0.0;  // modeled unembedding seconds for this problem
    double tts_seq = 0.0;  // sequential mode only
    bool tts_defined = false;
    bool solved = false;
};

struct ReplicaStats {
    int k = 0;  // 0 marks "not a replica run"
    long long reads = 0;
    double p_single = 0.0;
    double p_any = 0.0;
    double p_any_predicted = 0.0;  // 1 - (1 - p_single)^k
    double gsp_gain = 0.0;
    double tts_single = 0.0;
    double tts_any = 0.0;
    double speedup = 0.0;
    bool solved = false;
};

struct DensityResult {
    double density = 0.0;
    int k = 0;
    std::vector<RunRecord> problems;
    int retries_total = 0;
    bool solved = false;
    double p_ens = 0.0;
    double t_qpu = 0.0;   // total qpu seconds per problem budget (all calls)
    double u_mean = 0.0;  // mean modeled per-problem unembedding seconds
    double tts_ens = 0.0;
    double tts_seq_total = 0.0;  // sequential mode
    double speedup = 0.0;        // sequential mode
    ReplicaStats replica;
};

struct ExperimentResult {
    std::string mode;  // "parallel" | "sequential" | "replica"
    ExperimentConfig config;
    std::vector<DensityResult> densities;

    bool all_solved() const {
        for (const auto& d : densities)
            if (!d.solved) return false;
        return true;
    }
};

inline void check_experiment_config(const ExperimentConfig& cfg) {
    if (cfg.clique_size < 1) throw ParameterError("config: clique_size must be positive");
    if (cfg.calls_per_problem < 1) throw ParameterError("config: calls_per_problem must be positive");
    if (cfg.anneals_per_call < 1) throw ParameterError("config: anneals_per_call must be positive");
    if (cfg.densities.empty()) throw ParameterError("config: no densities");
    for (double d : cfg.densities)
        if (!(d > 0.0) || !(d < 1.0))
            throw ParameterError("config: density " + std::to_string(d) + " outside (0, 1)");
    if (cfg.retry_limit < 0) throw ParameterError("config: negative retry_limit");
    if (cfg.unembed_rate < 0) throw ParameterError("config: negative unembed_rate");
    if (cfg.k < 0) throw ParameterError("config: negative k");
    if (cfg.replicas < 1) throw ParameterError("config: replicas must be positive");
    if (cfg.embedder != "tile" && cfg.embedder != "greedy")
        throw ParameterError("config: unknown embedder '" + cfg.embedder + "'");
}

inline HardwareGraph build_hardware(const TopologyConfig& t) {
    HardwareGraph hw;
    if (!t.file.empty()) {
        hw = load_graph(t.file);
    } else if (t.kind == Topology::kChimera) {
        hw = chimera_graph(t.m, t.shore);
    } else if (t.kind == Topology::kPegasus) {
        hw = pegasus_graph(t.m);
    } else {
        throw ParameterError("topology: custom topology requires a graph file");
    }
    if (!t.dead.empty()) hw = apply_yield_mask(hw, t.dead);
    return hw;
}

inline DisjointEmbeddingSet build_embeddings(const ExperimentConfig& cfg,
                                             const HardwareGraph& hw) {
    DisjointEmbeddingSet set;
    if (!cfg.embedding_file.empty()) {
        set = load_embeddings(cfg.embedding_file);
        if (set.n_logical != cfg.clique_size)
            throw ParameterError("embeddings: file is for N = " + std::to_string(set.n_logical) +
                                 ", config wants N = " + std::to_string(cfg.clique_size));
        if (!validate(set, hw).ok())
            throw ValidationError("embeddings: file does not validate against the target graph");
        if (cfg.k > 0 && static_cast<int>(set.embeddings.size()) > cfg.k)
            set.embeddings.resize(cfg.k);
    } else if (cfg.embedder == "tile") {
        set = tile_clique_chimera(hw, cfg.clique_size, cfg.k);
    } else {
        set = greedy_disjoint_embedder(hw, cfg.clique_size, cfg.k, cfg.seed,
                                       cfg.embed_time_budget);
    }
    if (set.embeddings.empty())
        throw CapacityError("embeddings: no disjoint embedding of K" +
                            std::to_string(cfg.clique_size) + " found on the target graph");
    return set;
}

namespace detail {

inline int chain_max_of(const Embedding& emb, int n) {
    int cm = 0;
    for (int i = 0; i < n; ++i)
        cm = std::max(cm, static_cast<int>(emb.chains[i].qubits.size()));
    return cm;
}

inline int chain_qubits_of(const Embedding& emb, int n) {
    int total = 0;
    for (int i = 0; i < n; ++i) total += static_cast<int>(emb.chains[i].qubits.size());
    return total;
}

inline EmbedOptions embed_options(const ExperimentConfig& cfg) {
    return {cfg.normalize_parts, cfg.chain_strength, cfg.utc_prefactor};
}

// Counts ground hits per part for one unembedded call.
inline void count_successes(const UnembedResult& un, const std::vector<Qubo>& qubos,
                            const std::vector<double>& grounds, double tolerance,
                            std::vector<long long>* successes) {
    for (std::size_t p = 0; p < un.parts.size(); ++p) {
        const UnembedPart& part = un.parts[p];
        std::vector<std::int8_t> bits(part.n_logical);
        for (int r = 0; r < static_cast<int>(part.broken_per_read.size()); ++r) {
            const std::int8_t* row = part.row(r);
            bits.assign(row, row + part.n_logical);
            if (energy(qubos[p], bits) <= grounds[p] + tolerance) ++(*successes)[p];
        }
    }
}

}  // namespace detail

inline ExperimentResult run_parallel(const ExperimentConfig& cfg) {
    check_experiment_config(cfg);
    const HardwareGraph hw = build_hardware(cfg.topology);
    const DisjointEmbeddingSet set = build_embeddings(cfg, hw);
    const int k = static_cast<int>(set.embeddings.size());
    const long long reads_total =
            static_cast<long long>(cfg.calls_per_problem) * cfg.anneals_per_call;
    const double t_qpu_total = cfg.calls_per_problem * qpu_time(cfg.qpu, cfg.anneals_per_call);

    ExperimentResult out;
    out.mode = "parallel";
    out.config = cfg;
    for (std::size_t di = 0; di < cfg.densities.size(); ++di) {
        const double density = cfg.densities[di];
        const auto wall0 = std::chrono::steady_clock::now();
        std::vector<int> attempt(k, 0);
        std::vector<std::uint64_t> gseeds(k);
        std::vector<Graph> graphs(k);
        std::vector<Qubo> qubos(k);
        std::vector<int> omegas(k);
        std::vector<double> grounds(k);
        std::vector<long long> successes;
        int round = 0;
        while (true) {
            for (int i = 0; i < k; ++i) {
                gseeds[i] = mix64(mix64(cfg.seed, kStreamGraph, di, i), attempt[i]);
                graphs[i] = erdos_renyi_constrained(cfg.clique_size, density, gseeds[i]);
                qubos[i] = max_clique_qubo(graphs[i]);
                omegas[i] = max_clique_exact(graphs[i]).omega;
                grounds[i] = -static_cast<double>(omegas[i]);
            }
            const PhysicalProblem physical =
                    embed_composite(qubos, set, hw, detail::embed_options(cfg));
            successes.assign(k, 0);
            for (int c = 0; c < cfg.calls_per_problem; ++c) {
                SamplerConfig sc = cfg.sampler;
                sc.num_reads = cfg.anneals_per_call;
                sc.seed = mix64(mix64(cfg.seed, kStreamCall, di, round), c);
                const SampleSet samples = anneal(physical, sc);
                const UnembedResult un =
                        unembed_sampleset(samples, set, cfg.unembed_method,
                                          mix64(mix64(cfg.seed, kStreamUnembed, di, round), c));
                detail::count_successes(un, qubos, grounds, cfg.gsp_tolerance, &successes);
            }
            bool all_solved = true;
            for (int i = 0; i < k; ++i)
                if (successes[i] == 0) all_solved = false;
            if (all_solved || round >= cfg.retry_limit) break;
            for (int i = 0; i < k; ++i)
                if (successes[i] == 0) ++attempt[i];
            ++round;
        }

        DensityResult dr;
        dr.density = density;
        dr.k = k;
        std::vector<double> ps(k);
        for (int i = 0; i < k; ++i) {
            RunRecord rec;
            rec.density = density;
            rec.slot = i;
            rec.graph_seed = gseeds[i];
            rec.retries = attempt[i];
            rec.n = cfg.clique_size;
            rec.edges = static_cast<int>(graphs[i].edges.size());
            rec.omega = omegas[i];
            rec.ground_energy = grounds[i];
            rec.embedding_index = i;
            rec.chain_max = detail::chain_max_of(set.embeddings[i], cfg.clique_size);
            rec.reads = reads_total;
            rec.successes = successes[i];
            rec.p = static_cast<double>(successes[i]) / static_cast<double>(reads_total);
            rec.u_model = cfg.unembed_rate * static_cast<double>(reads_total) *
                          detail::chain_qubits_of(set.embeddings[i], cfg.clique_size);
            rec.solved = successes[i] > 0;
            ps[i] = rec.p;
            dr.retries_total += rec.retries;
            dr.problems.push_back(rec);
        }
        dr.t_qpu = t_qpu_total;
        double u_sum = 0.0;
        for (const auto& rec : dr.problems) u_sum += rec.u_model;
        dr.u_mean = u_sum / k;
        dr.solved = std::all_of(dr.problems.begin(), dr.problems.end(),
                                [](const RunRecord& r) { return r.solved; });
        if (dr.solved) {
            dr.p_ens = p_ensemble(ps);
            dr.tts_ens = tts_ensemble(ps, dr.t_qpu, dr.u_mean, reads_total);
        }
        const double wall =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - wall0).count();
        std::cerr << "parallel d=" << density << " k=" << k << " retries=" << dr.retries_total
                  << (dr.solved ? "" : " UNSOLVED") << " p_ens=" << dr.p_ens
                  << " tts_ens=" << dr.tts_ens << "s (wall " << wall << "s)\n";
        out.densities.push_back(std::move(dr));
    }
    return out;
}

// Replays the problems a parallel run ended on, one at a time on their own
// embedding with the same per-problem read budget.
inline ExperimentResult run_sequential(const ExperimentResult& parallel, std::uint64_t seed) {
    if (parallel.mode != "parallel")
        throw ParameterError("run_sequential: input result is a '" + parallel.mode +
                             "' run, need 'parallel'");
    ExperimentConfig cfg = parallel.config;
    cfg.seed = seed;
    check_experiment_config(cfg);
    const HardwareGraph hw = build_hardware(cfg.topology);
    const DisjointEmbeddingSet set = build_embeddings(cfg, hw);
    const long long reads_total =
            static_cast<long long>(cfg.calls_per_problem) * cfg.anneals_per_call;
    const double t_qpu_total = cfg.calls_per_problem * qpu_time(cfg.qpu, cfg.anneals_per_call);

    ExperimentResult out;
    out.mode = "sequential";
    out.config = cfg;
    for (std::size_t di = 0; di < parallel.densities.size(); ++di) {
        const DensityResult& src = parallel.densities[di];
        const auto wall0 = std::chrono::steady_clock::now();
        DensityResult dr;
        dr.density = src.density;
        dr.k = src.k;
        dr.t_qpu = t_qpu_total;
        dr.tts_ens = src.tts_ens;  // carried over for the speedup column
        dr.solved = true;
        double tts_sum = 0.0;
        double u_sum = 0.0;
        for (int i = 0; i < src.k; ++i) {
            const RunRecord& prev = src.problems[i];
            const Graph graph =
                    erdos_renyi_constrained(cfg.clique_size, src.density, prev.graph_seed);
            const Qubo qubo = max_clique_qubo(graph);
            const int omega = max_clique_exact(graph).omega;
            const double ground = -static_cast<double>(omega);
            if (static_cast<std::size_t>(prev.embedding_index) >= set.embeddings.size())
                throw ParameterError("run_sequential: record references embedding " +
                                     std::to_string(prev.embedding_index) +
                                     " but only " + std::to_string(set.embeddings.size()) +
                                     " exist");
            const Embedding& emb = set.embeddings[prev.embedding_index];
            const PhysicalProblem physical =
                    embed_problem(qubo, emb, hw, detail::embed_options(cfg));
            DisjointEmbeddingSet solo = set;  // unembed plans skip absent embeddings
            long long hits = 0;
            for (int c = 0; c < cfg.calls_per_problem; ++c) {
                SamplerConfig sc = cfg.sampler;
                sc.num_reads = cfg.anneals_per_call;
                sc.seed = mix64(mix64(seed, kStreamProblem, di, i), c);
                const SampleSet samples = anneal(physical, sc);
                const UnembedResult un = unembed_sampleset(
                        samples, solo, cfg.unembed_method,
                        mix64(mix64(seed, kStreamUnembed, di, i), c + 1000000));
                std::vector<long long> tally(1, 0);
                detail::count_successes(un, {qubo}, {ground}, cfg.gsp_tolerance, &tally);
                hits += tally[0];
            }
            RunRecord rec = prev;
            rec.omega = omega;
            rec.ground_energy = ground;
            rec.edges = static_cast<int>(graph.edges.size());
            rec.reads = reads_total;
            rec.successes = hits;
            rec.p = static_cast<double>(hits) / static_cast<double>(reads_total);
            rec.u_model = cfg.unembed_rate * static_cast<double>(reads_total) *
                          detail::chain_qubits_of(emb, cfg.clique_size);
            rec.solved = hits > 0;
            if (rec.solved) {
                rec.tts_seq = tts_sequential(rec.p, t_qpu_total, rec.u_model, reads_total);
                rec.tts_defined = true;
                tts_sum += rec.tts_seq;
            } else {
                dr.solved = false;
            }
            u_sum += rec.u_model;
            dr.problems.push_back(std::move(rec));
        }
        dr.u_mean = u_sum / src.k;
        if (dr.solved) {
            dr.tts_seq_total = tts_sum;
            if (src.solved && src.tts_ens > 0) dr.speedup = speedup(tts_sum, src.tts_ens);
        }
        const double wall =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - wall0).count();
        std::cerr << "sequential d=" << dr.density << " k=" << dr.k
                  << (dr.solved ? "" : " UNSOLVED") << " tts_seq_total=" << dr.tts_seq_total
                  << "s speedup=" << dr.speedup << " (wall " << wall << "s)\n";
        out.densities.push_back(std::move(dr));
    }
    return out;
}

// Same problem embedded `replicas` times; a read counts as solved when any
// replica lands in the ground state. The single-copy baseline runs on
// embedding 0 with an identical read budget.
inline ExperimentResult run_replicas(const ExperimentConfig& cfg) {
    check_experiment_config(cfg);
    ExperimentConfig ecfg = cfg;
    if (ecfg.k == 0 || ecfg.k > cfg.replicas) ecfg.k = cfg.replicas;
    const HardwareGraph hw = build_hardware(ecfg.topology);
    const DisjointEmbeddingSet set = build_embeddings(ecfg, hw);
    const int k = static_cast<int>(set.embeddings.size());
    if (k < cfg.replicas)
        throw CapacityError("run_replicas: need " + std::to_string(cfg.replicas) +
                            " embeddings, found " + std::to_string(k));
    const long long reads_total =
            static_cast<long long>(cfg.calls_per_problem) * cfg.anneals_per_call;
    const double t_qpu_total = cfg.calls_per_problem * qpu_time(cfg.qpu, cfg.anneals_per_call);

    ExperimentResult out;
    out.mode = "replica";
    out.config = cfg;
    for (std::size_t di = 0; di < cfg.densities.size(); ++di) {
        const double density = cfg.densities[di];
        const auto wall0 = std::chrono::steady_clock::now();
        DensityResult dr;
        dr.density = density;
        dr.k = cfg.replicas;
        dr.t_qpu = t_qpu_total;
        int attempt = 0;
        while (true) {
            Graph graph;
            std::uint64_t gseed = 0;
            if (!cfg.graph_file.empty()) {
                graph = load_problem_graph(cfg.graph_file);
                if (graph.n != cfg.clique_size)
                    throw ParameterError("run_replicas: graph file has n = " +
                                         std::to_string(graph.n) + ", config wants " +
                                         std::to_string(cfg.clique_size));
            } else {
                gseed = mix64(mix64(cfg.seed, kStreamGraph, di, 0), attempt);
                graph = erdos_renyi_constrained(cfg.clique_size, density, gseed);
            }
            const Qubo qubo = max_clique_qubo(graph);
            const int omega = max_clique_exact(graph).omega;
            const double ground = -static_cast<double>(omega);

            const std::vector<Qubo> copies(cfg.replicas, qubo);
            const PhysicalProblem many =
                    embed_composite(copies, set, hw, detail::embed_options(cfg));
            std::vector<long long> per_replica(cfg.replicas, 0);
            long long any_hits = 0;
            double u_any = 0.0;
            for (int r = 0; r < cfg.replicas; ++r)
                u_any += cfg.unembed_rate * static_cast<double>(reads_total) *
                         detail::chain_qubits_of(set.embeddings[r], cfg.clique_size);
            for (int c = 0; c < cfg.calls_per_problem; ++c) {
                SamplerConfig sc = cfg.sampler;
                sc.num_reads = cfg.anneals_per_call;
                sc.seed = mix64(mix64(cfg.seed, kStreamCall, di, attempt), c);
                const SampleSet samples = anneal(many, sc);
                const UnembedResult un =
                        unembed_sampleset(samples, set, cfg.unembed_method,
                                          mix64(mix64(cfg.seed, kStreamUnembed, di, attempt), c));
                std::vector<std::int8_t> bits;
                for (int read = 0; read < sc.num_reads; ++read) {
                    bool any = false;
                    for (int p = 0; p < cfg.replicas; ++p) {
                        const std::int8_t* row = un.parts[p].row(read);
                        bits.assign(row, row + un.parts[p].n_logical);
                        if (energy(qubo, bits) <= ground + cfg.gsp_tolerance) {
                            ++per_replica[p];
                            any = true;
                        }
                    }
                    any_hits += any;
                }
            }

            const PhysicalProblem solo =
                    embed_problem(qubo, set.embeddings[0], hw, detail::embed_options(cfg));
            long long single_hits = 0;
            for (int c = 0; c < cfg.calls_per_problem; ++c) {
                SamplerConfig sc = cfg.sampler;
                sc.num_reads = cfg.anneals_per_call;
                sc.seed = mix64(mix64(cfg.seed, kStreamProblem, di, attempt), c);
                const SampleSet samples = anneal(solo, sc);
                const UnembedResult un = unembed_sampleset(
                        samples, set, cfg.unembed_method,
                        mix64(mix64(cfg.seed, kStreamUnembed, di, attempt), c + 1000000));
                std::vector<long long> tally(1, 0);
                detail::count_successes(un, {qubo}, {ground}, cfg.gsp_tolerance, &tally);
                single_hits += tally[0];
            }

            const bool solved = single_hits > 0 && any_hits > 0;
            if (!solved && cfg.graph_file.empty() && attempt < cfg.retry_limit) {
                ++attempt;
                continue;
            }

            const double u_single = cfg.unembed_rate * static_cast<double>(reads_total) *
                                    detail::chain_qubits_of(set.embeddings[0], cfg.clique_size);
            for (int i = 0; i < cfg.replicas; ++i) {
                RunRecord rec;
                rec.density = density;
                rec.slot = i;
                rec.graph_seed = gseed;
                rec.retries = attempt;
                rec.n = cfg.clique_size;
                rec.edges = static_cast<int>(graph.edges.size());
                rec.omega = omega;
                rec.ground_energy = ground;
                rec.embedding_index = i;
                rec.chain_max = detail::chain_max_of(set.embeddings[i], cfg.clique_size);
                rec.reads = reads_total;
                rec.successes = per_replica[i];
                rec.p = static_cast<double>(per_replica[i]) / static_cast<double>(reads_total);
                rec.u_model = cfg.unembed_rate * static_cast<double>(reads_total) *
                              detail::chain_qubits_of(set.embeddings[i], cfg.clique_size);
                rec.solved = per_replica[i] > 0;
                dr.problems.push_back(rec);
            }
            dr.retries_total = attempt;
            dr.solved = solved;
            dr.replica.k = cfg.replicas;
            dr.replica.reads = reads_total;
            dr.replica.p_single =
                    static_cast<double>(single_hits) / static_cast<double>(reads_total);
            dr.replica.p_any = static_cast<double>(any_hits) / static_cast<double>(reads_total);
            dr.replica.p_any_predicted =
                    1.0 - std::pow(1.0 - dr.replica.p_single, cfg.replicas);
            dr.replica.solved = solved;
            if (solved) {
                dr.replica.gsp_gain = dr.replica.p_any / dr.replica.p_single;
                dr.replica.tts_single =
                        tts_sequential(dr.replica.p_single, t_qpu_total, u_single, reads_total);
                dr.replica.tts_any =
                        tts_replicas(dr.replica.p_any, t_qpu_total, u_any, reads_total);
                dr.replica.speedup = speedup(dr.replica.tts_single, dr.replica.tts_any);
            }
            break;
        }
        const double wall =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - wall0).count();
        std::cerr << "replica d=" << dr.density << " k=" << dr.replica.k
                  << (dr.solved ? "" : " UNSOLVED") << " p_single=" << dr.replica.p_single
                  << " p_any=" << dr.replica.p_any << " predicted=" << dr.replica.p_any_predicted
                  << " (wall " << wall << "s)\n";
        out.densities.push_back(std::move(dr));
    }
    return out;
}

}  // namespace parqa

#endif
