// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 the parqa authors
//
// Ground-state probability and time-to-solution estimators.
//
// Sequential, one problem owning the whole anneal budget:
//
//   tts = (t_qpu + u) / anneals * log(1 - target) / log(1 - p)
//
// with the p = 1 floor (t_qpu + u) / anneals (a single anneal suffices).
// Ensemble, k problems sharing the annealer, each still paying its own
// unembedding u:
//
//   tts = (t_qpu / k + u) / anneals * log(1 - target) / log(1 - p_k)
//
// where p_k is the mean per-problem ground-state probability, defined only
// when every problem was solved at least once. Replica mode reuses the
// sequential formula with p = the any-replica success probability.
#ifndef PARQA_METRICS_HPP
#define PARQA_METRICS_HPP

#include <cmath>
#include <string>
#include <vector>

#include "parqa/errors.hpp"

namespace parqa {

inline double gsp(const std::vector<double>& energies, double ground_energy,
                  double tolerance = 1e-9) {
    if (energies.empty()) throw ParameterError("gsp: no energies");
    if (tolerance < 0) throw ParameterError("gsp: negative tolerance");
    std::size_t hits = 0;
    for (double e : energies) hits += e <= ground_energy + tolerance;
    return static_cast<double>(hits) / static_cast<double>(energies.size());
}

namespace detail {
inline void check_tts_args(double t_qpu, double u, long long anneals, double target) {
    if (t_qpu < 0) throw ParameterError("tts: negative qpu time");
    if (u < 0) throw ParameterError("tts: negative unembedding time");
    if (anneals < 1) throw ParameterError("tts: need at least one anneal");
    if (!(target > 0.0) || !(target < 1.0))
        throw ParameterError("tts: target confidence must lie in (0, 1)");
}

inline double check_probability(double p, const std::string& what) {
    if (p > 1.0) throw ParameterError(what + ": probability above 1");
    if (!(p > 0.0))
        throw UndefinedTtsError(what + ": undefined for success probability " +
                                std::to_string(p) + "; the problem was never solved");
    return p;
}
}  // namespace detail

inline double tts_sequential(double p, double t_qpu, double u, long long anneals,
                             double target = 0.99) {
    detail::check_tts_args(t_qpu, u, anneals, target);
    detail::check_probability(p, "tts_sequential");
    const double per_anneal = (t_qpu + u) / static_cast<double>(anneals);
    if (p == 1.0) return per_anneal;
    return per_anneal * std::log(1.0 - target) / std::log(1.0 - p);
}

// Mean per-problem ground-state probability; defined only when every
// problem was solved at least once.
inline double p_ensemble(const std::vector<double>& per_problem) {
    if (per_problem.empty()) throw ParameterError("p_ensemble: no problems");
    double sum = 0.0;
    for (std::size_t i = 0; i < per_problem.size(); ++i) {
        const double p = per_problem[i];
        if (p > 1.0)
            throw ParameterError("p_ensemble: probability above 1 at problem " +
                                 std::to_string(i));
        if (!(p > 0.0))
            throw UndefinedTtsError("p_ensemble: problem " + std::to_string(i) +
                                    " was never solved (p = " + std::to_string(p) + ")");
        sum += p;
    }
    return sum / static_cast<double>(per_problem.size());
}

inline double tts_ensemble(const std::vector<double>& per_problem, double t_qpu, double u,
                           long long anneals, double target = 0.99) {
    detail::check_tts_args(t_qpu, u, anneals, target);
    const double p = p_ensemble(per_problem);
    const double k = static_cast<double>(per_problem.size());
    const double per_anneal = (t_qpu / k + u) / static_cast<double>(anneals);
    if (p == 1.0) return per_anneal;
    return per_anneal * std::log(1.0 - target) / std::log(1.0 - p);
}

inline double tts_replicas(double p_any, double t_qpu, double u, long long anneals,
                           double target = 0.99) {
    return tts_sequential(p_any, t_qpu, u, anneals, target);
}

inline double speedup(double tts_sequential_total, double tts_parallel) {
    if (!(tts_sequential_total > 0) || !(tts_parallel > 0))
        throw ParameterError("speedup: times must be positive");
    return tts_sequential_total / tts_parallel;
}

}  // namespace parqa

#endif
