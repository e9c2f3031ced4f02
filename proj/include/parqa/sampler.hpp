// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 the parqa authors
//
// Classical stand-in for the annealer: single-spin-flip Metropolis with a
// rising beta schedule. Each read gets its own generator seeded by
// mix64(config.seed, kStreamRead, read_index), and one uniform variate is
// drawn per flip proposal whether or not it is needed, so a read's
// trajectory is a pure function of its seed. That makes results identical
// for any worker count and keeps reads statistically independent replicas.
// Energies are recomputed from scratch at the end of every read.
#ifndef PARQA_SAMPLER_HPP
#define PARQA_SAMPLER_HPP

#include <chrono>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "parqa/errors.hpp"
#include "parqa/io.hpp"
#include "parqa/model.hpp"
#include "parqa/parametrize.hpp"
#include "parqa/rng.hpp"

namespace parqa {

enum class Schedule { kGeometric, kLinear };

struct SamplerConfig {
    int num_reads = 100;
    int sweeps = 1000;
    double beta_initial = 0.1;
    double beta_final = 10.0;
    Schedule schedule = Schedule::kGeometric;
    std::uint64_t seed = 0;
    int threads = 1;  // 0 = hardware concurrency
};

struct SampleSet {
    std::vector<int> variables;        // physical ids, or 0..n-1 for a bare model
    int num_reads = 0;
    std::vector<std::int8_t> values;   // num_reads x variables.size(), spins -1/+1
    std::vector<double> energies;      // per read, includes the model offset
    double wall_seconds = 0.0;         // measured; not part of any report file

    const std::int8_t* row(int read) const {
        return values.data() + static_cast<std::size_t>(read) * variables.size();
    }
};

namespace detail {

struct DenseIsing {
    int n = 0;
    double offset = 0.0;
    std::vector<double> h;
    std::vector<int> adj_start;  // CSR over both directions
    std::vector<int> adj_index;
    std::vector<double> adj_weight;
    std::vector<std::pair<std::pair<int, int>, double>> terms;  // for exact energy

    explicit DenseIsing(const IsingModel& m) : n(m.n), offset(m.offset), h(m.h) {
        std::vector<int> degree(n, 0);
        for (const auto& [ij, w] : m.j) {
            ++degree[ij.first];
            ++degree[ij.second];
            terms.push_back({ij, w});
        }
        adj_start.assign(n + 1, 0);
        for (int i = 0; i < n; ++i) adj_start[i + 1] = adj_start[i] + degree[i];
        adj_index.resize(adj_start[n]);
        adj_weight.resize(adj_start[n]);
        std::vector<int> fill(adj_start.begin(), adj_start.end() - 1);
        for (const auto& [ij, w] : m.j) {
            adj_index[fill[ij.first]] = ij.second;
            adj_weight[fill[ij.first]++] = w;
            adj_index[fill[ij.second]] = ij.first;
            adj_weight[fill[ij.second]++] = w;
        }
    }

    double local_field(const std::vector<std::int8_t>& s, int i) const {
        double f = h[i];
        for (int e = adj_start[i]; e < adj_start[i + 1]; ++e)
            f += adj_weight[e] * s[adj_index[e]];
        return f;
    }

    double exact_energy(const std::vector<std::int8_t>& s) const {
        double e = offset;
        for (int i = 0; i < n; ++i) e += h[i] * s[i];
        for (const auto& [ij, w] : terms) e += w * s[ij.first] * s[ij.second];
        return e;
    }
};

inline std::vector<double> beta_schedule(const SamplerConfig& c) {
    std::vector<double> betas(c.sweeps);
    if (c.sweeps == 1) {
        betas[0] = c.beta_final;
        return betas;
    }
    for (int t = 0; t < c.sweeps; ++t) {
        const double frac = static_cast<double>(t) / (c.sweeps - 1);
        if (c.schedule == Schedule::kGeometric)
            betas[t] = c.beta_initial * std::pow(c.beta_final / c.beta_initial, frac);
        else
            betas[t] = c.beta_initial + (c.beta_final - c.beta_initial) * frac;
    }
    return betas;
}

inline void anneal_one_read(const DenseIsing& model, const std::vector<double>& betas,
                            std::uint64_t read_seed, std::int8_t* out, double* energy) {
    std::mt19937_64 rng(read_seed);
    const int n = model.n;
    std::vector<std::int8_t> s(n);
    for (int i = 0; i < n; ++i) s[i] = (rng() & 1) ? 1 : -1;
    for (double beta : betas) {
        for (int i = 0; i < n; ++i) {
            const double delta = -2.0 * s[i] * model.local_field(s, i);
            const double u = next_double(rng);  // always drawn, see header comment
            if (delta <= 0.0) {
                s[i] = -s[i];
                continue;
            }
            const double x = beta * delta;
            // exp(-x) < 2^-53 for x >= 37, and u is a multiple of 2^-53, so
            // only u == 0 can accept there; skipping exp() changes nothing.
            if (x >= 37.0 ? (u == 0.0 && std::exp(-x) > 0.0) : (u < std::exp(-x)))
                s[i] = -s[i];
        }
    }
    for (int i = 0; i < n; ++i) out[i] = s[i];
    *energy = model.exact_energy(s);
}

}  // namespace detail

inline void check_sampler_config(const SamplerConfig& c) {
    if (c.num_reads < 1) throw ParameterError("sampler: need at least one read");
    if (c.sweeps < 1) throw ParameterError("sampler: need at least one sweep");
    if (!(c.beta_initial > 0)) throw ParameterError("sampler: beta_initial must be positive");
    if (!(c.beta_final >= c.beta_initial))
        throw ParameterError("sampler: beta_final must be >= beta_initial");
    if (c.threads < 0) throw ParameterError("sampler: negative thread count");
}

inline SampleSet anneal(const IsingModel& model, const SamplerConfig& config) {
    check_sampler_config(config);
    if (model.n < 1) throw ParameterError("sampler: empty model");
    const auto t0 = std::chrono::steady_clock::now();
    const detail::DenseIsing dense(model);
    const auto betas = detail::beta_schedule(config);

    SampleSet out;
    out.variables.resize(model.n);
    for (int i = 0; i < model.n; ++i) out.variables[i] = i;
    out.num_reads = config.num_reads;
    out.values.resize(static_cast<std::size_t>(config.num_reads) * model.n);
    out.energies.resize(config.num_reads);

    int workers = config.threads ? config.threads
                                 : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    workers = std::min(workers, config.num_reads);
    const auto run_range = [&](int first, int last) {
        for (int r = first; r < last; ++r)
            detail::anneal_one_read(dense, betas, mix64(config.seed, kStreamRead, r),
                                    out.values.data() + static_cast<std::size_t>(r) * model.n,
                                    &out.energies[r]);
    };
    if (workers == 1) {
        run_range(0, config.num_reads);
    } else {
        std::vector<std::thread> pool;
        const int chunk = (config.num_reads + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const int first = w * chunk, last = std::min(config.num_reads, first + chunk);
            if (first < last) pool.emplace_back(run_range, first, last);
        }
        for (auto& t : pool) t.join();
    }
    out.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

// Same sampler, variables labeled with the problem's physical qubit ids.
inline SampleSet anneal(const PhysicalProblem& problem, const SamplerConfig& config) {
    SampleSet out = anneal(problem.ising, config);
    out.variables = problem.variables;
    return out;
}

struct BruteForceResult {
    double min_energy = 0.0;
    std::vector<std::vector<std::int8_t>> minimizers;  // all optimal assignments
};

// Exhaustive minimization by Gray-code walk, up to 26 variables. Energies
// are tracked incrementally and every near-optimal state is re-evaluated
// exactly before it is accepted, so the returned minimum is exact.
inline BruteForceResult brute_force(const Qubo& q) {
    if (q.n > 26) throw CapacityError("brute_force: " + std::to_string(q.n) +
                                      " variables exceed the 26-variable cap");
    BruteForceResult result;
    if (q.n == 0) {
        result.min_energy = q.offset;
        result.minimizers.push_back({});
        return result;
    }
    std::vector<std::vector<std::pair<int, double>>> adj(q.n);
    for (const auto& [ij, w] : q.quadratic) {
        adj[ij.first].emplace_back(ij.second, w);
        adj[ij.second].emplace_back(ij.first, w);
    }
    std::vector<std::int8_t> x(q.n, 0);
    double e = q.offset;
    double best = e;
    constexpr double kWindow = 1e-9;
    std::vector<std::uint32_t> candidates{0};
    std::uint32_t state = 0;
    const std::uint64_t total = std::uint64_t(1) << q.n;
    for (std::uint64_t k = 1; k < total; ++k) {
        const int i = std::countr_zero(k);
        double field = q.linear[i];
        for (const auto& [j, w] : adj[i])
            if (x[j]) field += w;
        if (x[i]) {
            x[i] = 0;
            state &= ~(std::uint32_t(1) << i);
            e -= field;
        } else {
            x[i] = 1;
            state |= std::uint32_t(1) << i;
            e += field;
        }
        if (e < best - kWindow) {
            best = e;
            candidates.clear();
            candidates.push_back(state);
        } else if (e <= best + kWindow) {
            candidates.push_back(state);
        }
    }
    // exact re-evaluation of the shortlisted states
    double exact_best = 0.0;
    std::vector<double> exact(candidates.size());
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        std::vector<std::int8_t> bits(q.n);
        for (int i = 0; i < q.n; ++i) bits[i] = (candidates[c] >> i) & 1;
        exact[c] = energy(q, bits);
        if (c == 0 || exact[c] < exact_best) exact_best = exact[c];
    }
    result.min_energy = exact_best;
    for (std::size_t c = 0; c < candidates.size(); ++c)
        if (exact[c] <= exact_best + kWindow) {
            std::vector<std::int8_t> bits(q.n);
            for (int i = 0; i < q.n; ++i) bits[i] = (candidates[c] >> i) & 1;
            result.minimizers.push_back(std::move(bits));
        }
    return result;
}

// Spin-domain counterpart, through the exact QUBO equivalence.
inline BruteForceResult brute_force(const IsingModel& m) {
    BruteForceResult r = brute_force(ising_to_qubo(m));
    for (auto& state : r.minimizers)
        for (auto& v : state) v = v ? 1 : -1;
    return r;
}

// One row per read: index, exact energy, broken chain count when known
// (blank otherwise) and optionally the assignment packed as '0'/'1' per
// variable, '1' meaning spin up.
inline void write_sample_csv(const std::string& path, const SampleSet& samples,
                             const std::vector<int>* broken_per_read = nullptr,
                             bool include_assignments = false) {
    if (broken_per_read && static_cast<int>(broken_per_read->size()) != samples.num_reads)
        throw ParameterError("write_sample_csv: broken counts do not match read count");
    std::string text = "read_index,energy,broken_chain_count";
    if (include_assignments) text += ",assignment";
    text += "\n";
    for (int r = 0; r < samples.num_reads; ++r) {
        text += std::to_string(r);
        text += ',';
        text += format_double(samples.energies[r]);
        text += ',';
        if (broken_per_read) text += std::to_string((*broken_per_read)[r]);
        if (include_assignments) {
            text += ',';
            const std::int8_t* row = samples.row(r);
            for (std::size_t i = 0; i < samples.variables.size(); ++i)
                text += row[i] > 0 ? '1' : '0';
        }
        text += '\n';
    }
    write_text_file(path, text);
}

}  // namespace parqa

#endif
