// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 the parqa authors

#include <catch_amalgamated.hpp>

#include <vector>

#include "parqa/metrics.hpp"

using namespace parqa;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("ground-state probability counts hits within tolerance") {
    CHECK(gsp({-2.0, -1.0, -2.0, 0.0}, -2.0) == 0.5);
    CHECK(gsp({-1.0, 0.0}, -2.0) == 0.0);
    CHECK(gsp({-2.0}, -2.0) == 1.0);
    // the tolerance window is inclusive upward
    CHECK(gsp({-2.0 + 1e-10}, -2.0, 1e-9) == 1.0);
    CHECK(gsp({-2.0 + 1e-8}, -2.0, 1e-9) == 0.0);
    CHECK(gsp({-2.5}, -2.0) == 1.0);  // below ground still counts
    CHECK_THROWS_AS(gsp({}, 0.0), ParameterError);
    CHECK_THROWS_AS(gsp({1.0}, 0.0, -1e-9), ParameterError);
}

TEST_CASE("sequential time to solution on frozen inputs") {
    // p = 1/2, one anneal of one second: log(0.01) / log(0.5) anneals
    CHECK(tts_sequential(0.5, 1.0, 0.0, 1) ==
          Catch::Approx(6.6438561897747395).epsilon(1e-12));
    // p equal to the target collapses the ratio to exactly one
    CHECK(tts_sequential(0.99, 1.0, 0.0, 1) == 1.0);
    // per-anneal cost scales the estimate linearly
    CHECK(tts_sequential(0.5, 2.0, 0.0, 4) ==
          Catch::Approx(0.5 * 6.6438561897747395).epsilon(1e-12));
    // unembedding time rides along with the qpu time
    CHECK(tts_sequential(0.5, 1.0, 1.0, 1) ==
          Catch::Approx(2 * 6.6438561897747395).epsilon(1e-12));
    // a different target re-weights the numerator
    CHECK(tts_sequential(0.5, 1.0, 0.0, 1, 0.5) == 1.0);
}

TEST_CASE("certain success floors at one anneal's cost") {
    CHECK(tts_sequential(1.0, 3.0, 1.0, 4) == 1.0);
    CHECK(tts_sequential(1.0, 50e-6, 0.0, 1) == 50e-6);
}

TEST_CASE("time to solution rejects out-of-range inputs") {
    CHECK_THROWS_AS(tts_sequential(0.0, 1.0, 0.0, 1), UndefinedTtsError);
    CHECK_THROWS_AS(tts_sequential(-0.1, 1.0, 0.0, 1), UndefinedTtsError);
    CHECK_THROWS_AS(tts_sequential(1.1, 1.0, 0.0, 1), ParameterError);
    CHECK_THROWS_AS(tts_sequential(0.5, -1.0, 0.0, 1), ParameterError);
    CHECK_THROWS_AS(tts_sequential(0.5, 1.0, -1.0, 1), ParameterError);
    CHECK_THROWS_AS(tts_sequential(0.5, 1.0, 0.0, 0), ParameterError);
    CHECK_THROWS_AS(tts_sequential(0.5, 1.0, 0.0, 1, 0.0), ParameterError);
    CHECK_THROWS_AS(tts_sequential(0.5, 1.0, 0.0, 1, 1.0), ParameterError);
}

TEST_CASE("ensemble probability is the mean and names the failing problem") {
    CHECK(p_ensemble({0.2, 0.4, 0.6}) == Catch::Approx(0.4).epsilon(1e-12));
    CHECK(p_ensemble({1.0}) == 1.0);
    CHECK_THROWS_AS(p_ensemble({}), ParameterError);
    CHECK_THROWS_AS(p_ensemble({0.5, 1.5}), ParameterError);
    CHECK_THROWS_AS(p_ensemble({0.5, 0.0}), UndefinedTtsError);
    CHECK_THROWS_WITH(p_ensemble({0.5, 0.0, 0.5}), ContainsSubstring("problem 1"));
}

TEST_CASE("one-problem ensembles reduce to the sequential formula") {
    for (double p : {0.05, 0.3, 0.77, 1.0})
        CHECK(tts_ensemble({p}, 0.16, 2e-5, 1000) == tts_sequential(p, 0.16, 2e-5, 1000));
}

TEST_CASE("sharing the annealer over k equal problems wins k squared") {
    const double p = 0.35, t = 0.16;
    const long long anneals = 1000;
    for (int k : {2, 8, 12, 64}) {
        const std::vector<double> per_problem(k, p);
        const double parallel = tts_ensemble(per_problem, t, 0.0, anneals);
        const double sequential_total = k * tts_sequential(p, t, 0.0, anneals);
        CHECK(speedup(sequential_total, parallel) ==
              Catch::Approx(static_cast<double>(k) * k).epsilon(1e-9));
    }
    // per-problem unembedding cost erodes the square
    const std::vector<double> per_problem(8, p);
    const double parallel = tts_ensemble(per_problem, t, 1e-3, anneals);
    const double sequential_total = 8 * tts_sequential(p, t, 1e-3, anneals);
    CHECK(speedup(sequential_total, parallel) < 64.0);
}

TEST_CASE("ensemble time handles mixed probabilities") {
    // mean of {0.2, 0.6} is 0.4; two problems share the qpu time
    const double expected = (0.16 / 2 + 1e-4) / 1000.0 * std::log(0.01) / std::log(0.6);
    CHECK(tts_ensemble({0.2, 0.6}, 0.16, 1e-4, 1000) ==
          Catch::Approx(expected).epsilon(1e-12));
    CHECK_THROWS_AS(tts_ensemble({0.2, 0.0}, 0.16, 0.0, 1000), UndefinedTtsError);
    // perfect mean floors like the sequential formula
    CHECK(tts_ensemble({1.0, 1.0}, 0.16, 0.0, 1000) == Catch::Approx(0.16 / 2 / 1000));
}

TEST_CASE("replica mode reuses the sequential estimator on p_any") {
    for (double p_any : {0.1, 0.5, 0.999, 1.0})
        CHECK(tts_replicas(p_any, 0.05, 1e-5, 500) == tts_sequential(p_any, 0.05, 1e-5, 500));
    CHECK_THROWS_AS(tts_replicas(0.0, 0.05, 0.0, 500), UndefinedTtsError);
}

TEST_CASE("speedup is a guarded ratio") {
    CHECK(speedup(4.0, 2.0) == 2.0);
    CHECK(speedup(2.0, 4.0) == 0.5);
    CHECK_THROWS_AS(speedup(0.0, 1.0), ParameterError);
    CHECK_THROWS_AS(speedup(1.0, 0.0), ParameterError);
    CHECK_THROWS_AS(speedup(-1.0, 1.0), ParameterError);
}
