// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 the parqa authors

#include <catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "parqa/experiments.hpp"
#include "parqa/reports.hpp"

using namespace parqa;

namespace {

// 16 tiny clique problems on a C(4, 4), solved in well under a second
ExperimentConfig tiny_parallel_config() {
    ExperimentConfig cfg;
    cfg.topology.m = 4;
    cfg.clique_size = 4;
    cfg.densities = {0.5};
    cfg.calls_per_problem = 2;
    cfg.anneals_per_call = 50;
    cfg.sampler.sweeps = 50;
    cfg.seed = 123;
    return cfg;
}

std::vector<std::string> split_line(const std::string& csv, int line) {
    std::size_t start = 0;
    for (int l = 0; l < line; ++l) start = csv.find('\n', start) + 1;
    const std::size_t end = csv.find('\n', start);
    std::vector<std::string> fields;
    std::string cell;
    for (std::size_t i = start; i < end; ++i) {
        if (csv[i] == ',') {
            fields.push_back(cell);
            cell.clear();
        } else {
            cell += csv[i];
        }
    }
    fields.push_back(cell);
    return fields;
}

}  // namespace

TEST_CASE("parallel runs are deterministic and fully recorded") {
    const ExperimentConfig cfg = tiny_parallel_config();
    const ExperimentResult par = run_parallel(cfg);

    CHECK(par.mode == "parallel");
    REQUIRE(par.densities.size() == 1);
    const DensityResult& dr = par.densities[0];
    CHECK(dr.k == 16);
    REQUIRE(dr.problems.size() == 16);
    CHECK(dr.solved);
    CHECK(par.all_solved());
    CHECK(dr.retries_total == 0);
    CHECK(dr.t_qpu == Catch::Approx(2 * 50 * 50e-6).epsilon(1e-12));
    CHECK(dr.u_mean == Catch::Approx(5e-9 * 100 * 8).epsilon(1e-12));

    double p_sum = 0.0;
    for (int i = 0; i < 16; ++i) {
        const RunRecord& rec = dr.problems[i];
        CAPTURE(i);
        CHECK(rec.slot == i);
        CHECK(rec.embedding_index == i);
        CHECK(rec.n == 4);
        CHECK(rec.reads == 100);
        CHECK(rec.chain_max == 2);
        CHECK(rec.retries == 0);
        CHECK(rec.graph_seed == mix64(mix64(cfg.seed, kStreamGraph, 0, i), 0));
        CHECK(rec.solved);
        CHECK(rec.successes > 0);
        CHECK(rec.p == Catch::Approx(rec.successes / 100.0).epsilon(1e-12));
        CHECK(rec.u_model == Catch::Approx(5e-9 * 100 * 8).epsilon(1e-12));
        CHECK(rec.ground_energy == -static_cast<double>(rec.omega));
        CHECK_FALSE(rec.tts_defined);
        p_sum += rec.p;
    }
    CHECK(dr.p_ens == Catch::Approx(p_sum / 16).epsilon(1e-12));
    std::vector<double> ps;
    for (const auto& rec : dr.problems) ps.push_back(rec.p);
    CHECK(dr.tts_ens == Catch::Approx(tts_ensemble(ps, dr.t_qpu, dr.u_mean, 100)).epsilon(1e-12));

    const ExperimentResult again = run_parallel(cfg);
    CHECK(result_to_json(par).dump() == result_to_json(again).dump());
    CHECK(problems_csv(par) == problems_csv(again));
}

TEST_CASE("sequential runs replay the same problems one at a time") {
    const ExperimentResult par = run_parallel(tiny_parallel_config());
    const ExperimentResult seq = run_sequential(par, 123);

    CHECK(seq.mode == "sequential");
    REQUIRE(seq.densities.size() == 1);
    const DensityResult& ds = seq.densities[0];
    const DensityResult& dp = par.densities[0];
    REQUIRE(ds.problems.size() == 16);
    CHECK(ds.solved);
    CHECK(ds.tts_ens == dp.tts_ens);  // carried over for the speedup column

    double tts_sum = 0.0;
    for (int i = 0; i < 16; ++i) {
        const RunRecord& s = ds.problems[i];
        const RunRecord& p = dp.problems[i];
        CAPTURE(i);
        CHECK(s.graph_seed == p.graph_seed);
        CHECK(s.embedding_index == p.embedding_index);
        CHECK(s.slot == p.slot);
        CHECK(s.omega == p.omega);  // same graph regenerated from the seed
        CHECK(s.edges == p.edges);
        CHECK(s.solved);
        REQUIRE(s.tts_defined);
        CHECK(s.tts_seq ==
              Catch::Approx(tts_sequential(s.p, ds.t_qpu, s.u_model, s.reads)).epsilon(1e-12));
        tts_sum += s.tts_seq;
    }
    CHECK(ds.tts_seq_total == Catch::Approx(tts_sum).epsilon(1e-12));
    CHECK(ds.speedup == Catch::Approx(speedup(ds.tts_seq_total, dp.tts_ens)).epsilon(1e-12));
    CHECK(ds.speedup > 1.0);

    CHECK_THROWS_AS(run_sequential(seq, 1), ParameterError);
}

TEST_CASE("replica statistics are internally consistent") {
    ExperimentConfig cfg;
    cfg.topology.m = 4;
    cfg.clique_size = 4;
    cfg.densities = {0.5};
    cfg.calls_per_problem = 2;
    cfg.anneals_per_call = 100;
    cfg.sampler.sweeps = 50;
    cfg.replicas = 4;
    cfg.seed = 9;
    const ExperimentResult rep = run_replicas(cfg);

    CHECK(rep.mode == "replica");
    REQUIRE(rep.densities.size() == 1);
    const DensityResult& dr = rep.densities[0];
    const ReplicaStats& st = dr.replica;
    REQUIRE(dr.problems.size() == 4);
    CHECK(dr.solved);
    CHECK(st.k == 4);
    CHECK(st.reads == 200);
    CHECK(st.p_any_predicted ==
          Catch::Approx(1.0 - std::pow(1.0 - st.p_single, 4)).epsilon(1e-12));
    CHECK(st.gsp_gain == Catch::Approx(st.p_any / st.p_single).epsilon(1e-12));

    double u_any = 0.0;
    for (int i = 0; i < 4; ++i) {
        const RunRecord& rec = dr.problems[i];
        CAPTURE(i);
        CHECK(rec.slot == i);
        CHECK(rec.embedding_index == i);
        // a read solved by replica i is solved by "any"
        CHECK(st.p_any >= rec.p);
        // every replica anneals the same graph
        CHECK(rec.graph_seed == dr.problems[0].graph_seed);
        CHECK(rec.omega == dr.problems[0].omega);
        u_any += rec.u_model;
    }
    CHECK(st.tts_single ==
          Catch::Approx(tts_sequential(st.p_single, dr.t_qpu, dr.problems[0].u_model, 200))
                  .epsilon(1e-12));
    CHECK(st.tts_any ==
          Catch::Approx(tts_replicas(st.p_any, dr.t_qpu, u_any, 200)).epsilon(1e-12));
    CHECK(st.speedup == Catch::Approx(st.tts_single / st.tts_any).epsilon(1e-12));

    const ExperimentResult again = run_replicas(cfg);
    CHECK(result_to_json(rep).dump() == result_to_json(again).dump());
}

TEST_CASE("unsolved densities keep undefined metrics blank") {
    // one K12 problem, a single random-start read: never lands in the ground state
    ExperimentConfig cfg;
    cfg.topology.m = 4;
    cfg.clique_size = 12;
    cfg.densities = {0.5};
    cfg.calls_per_problem = 1;
    cfg.anneals_per_call = 1;
    cfg.sampler.sweeps = 1;
    cfg.sampler.beta_initial = 0.01;
    cfg.sampler.beta_final = 0.01;
    cfg.retry_limit = 2;
    cfg.seed = 1;
    const ExperimentResult par = run_parallel(cfg);

    REQUIRE(par.densities.size() == 1);
    const DensityResult& dr = par.densities[0];
    CHECK(dr.k == 1);
    CHECK_FALSE(dr.solved);
    CHECK_FALSE(par.all_solved());
    CHECK(dr.retries_total == 2);
    REQUIRE(dr.problems.size() == 1);
    CHECK(dr.problems[0].retries == 2);
    CHECK(dr.problems[0].successes == 0);
    CHECK(dr.problems[0].p == 0.0);
    CHECK_FALSE(dr.problems[0].solved);
    CHECK(dr.p_ens == 0.0);
    CHECK(dr.tts_ens == 0.0);

    // ensemble row: p_ensemble, tts and speedup cells are empty, solved is 0
    const auto fields = split_line(ensemble_csv(par), 1);
    REQUIRE(fields.size() == 11);
    CHECK(fields[0] == "parallel");
    CHECK(fields[3].empty());   // p_ensemble
    CHECK(fields[6].empty());   // tts_ensemble_s
    CHECK(fields[7].empty());   // tts_sequential_total_s
    CHECK(fields[8].empty());   // speedup
    CHECK(fields[9] == "2");
    CHECK(fields[10] == "0");
    // problem row: empty tts cell, unsolved flag
    const auto prow = split_line(problems_csv(par), 1);
    REQUIRE(prow.size() == 17);
    CHECK(prow[15].empty());
    CHECK(prow[16] == "0");

    // the undefined metrics survive a json round trip as nulls
    const json j = result_to_json(par);
    CHECK(j["densities"][0]["tts_ensemble_s"].is_null());
    CHECK(j["densities"][0]["problems"][0]["tts_seq_s"].is_null());
    const ExperimentResult back = result_from_json(j, "test");
    CHECK(result_to_json(back).dump() == j.dump());
}

TEST_CASE("experiment configs round trip through json") {
    ExperimentConfig cfg;
    cfg.topology.kind = Topology::kPegasus;
    cfg.topology.m = 3;
    cfg.topology.dead = {5, 7};
    cfg.clique_size = 6;
    cfg.densities = {0.25, 0.75};
    cfg.calls_per_problem = 3;
    cfg.anneals_per_call = 7;
    cfg.sampler.sweeps = 11;
    cfg.sampler.beta_initial = 0.2;
    cfg.sampler.beta_final = 5.0;
    cfg.sampler.schedule = Schedule::kLinear;
    cfg.unembed_method = UnembedMethod::kMajorityVote;
    cfg.qpu.anneal_time = 20e-6;
    cfg.qpu.readout_time = 120e-6;
    cfg.qpu.programming_time = 8e-3;
    cfg.qpu.delay_time = 1e-6;
    cfg.unembed_rate = 1e-8;
    cfg.utc_prefactor = 0.3;
    cfg.chain_strength = 2.5;
    cfg.normalize_parts = true;
    cfg.embedder = "greedy";
    cfg.embedding_file = "embs.json";
    cfg.k = 5;
    cfg.replicas = 3;
    cfg.retry_limit = 1;
    cfg.seed = 77;
    cfg.graph_file = "g.json";
    cfg.embed_time_budget = 2.5;
    cfg.gsp_tolerance = 1e-8;
    cfg.output_dir = "somewhere";

    const json j1 = config_to_json(cfg);
    const ExperimentConfig cfg2 = config_from_json(j1, "test");
    CHECK(config_to_json(cfg2).dump() == j1.dump());
    CHECK(cfg2.topology.kind == Topology::kPegasus);
    CHECK(cfg2.topology.dead == std::vector<int>{5, 7});
    CHECK(cfg2.sampler.schedule == Schedule::kLinear);
    CHECK(cfg2.unembed_method == UnembedMethod::kMajorityVote);
    CHECK(cfg2.seed == 77);
    CHECK(cfg2.densities == std::vector<double>{0.25, 0.75});

    // runtime destinations and resources are not part of the identity
    CHECK_FALSE(j1.contains("output_dir"));
    CHECK_FALSE(j1.at("sampler").contains("threads"));

    json bad = j1;
    bad["sampler"]["schedule"] = "cubic";
    CHECK_THROWS_AS(config_from_json(bad, "test"), ParseError);
}

TEST_CASE("config validation rejects out-of-range values") {
    ExperimentConfig cfg = tiny_parallel_config();
    cfg.densities = {1.5};
    CHECK_THROWS_AS(check_experiment_config(cfg), ParameterError);
    cfg = tiny_parallel_config();
    cfg.densities = {};
    CHECK_THROWS_AS(check_experiment_config(cfg), ParameterError);
    cfg = tiny_parallel_config();
    cfg.embedder = "magic";
    CHECK_THROWS_AS(check_experiment_config(cfg), ParameterError);
    cfg = tiny_parallel_config();
    cfg.replicas = 0;
    CHECK_THROWS_AS(check_experiment_config(cfg), ParameterError);
    cfg = tiny_parallel_config();
    cfg.retry_limit = -1;
    CHECK_THROWS_AS(check_experiment_config(cfg), ParameterError);
    cfg = tiny_parallel_config();
    cfg.calls_per_problem = 0;
    CHECK_THROWS_AS(check_experiment_config(cfg), ParameterError);
}

TEST_CASE("reports round trip through json and disk") {
    const ExperimentResult par = run_parallel(tiny_parallel_config());
    const ExperimentResult seq = run_sequential(par, 123);

    for (const ExperimentResult* r : {&par, &seq}) {
        const json j = result_to_json(*r);
        const ExperimentResult back = result_from_json(j, "test");
        CHECK(result_to_json(back).dump() == j.dump());
        CHECK(problems_csv(back) == problems_csv(*r));
        CHECK(ensemble_csv(back) == ensemble_csv(*r));
    }

    const std::string dir = "test_experiments_out";
    emit_reports(par, dir);
    CHECK(std::filesystem::exists(dir + "/problems.csv"));
    CHECK(std::filesystem::exists(dir + "/ensemble.csv"));
    CHECK(std::filesystem::exists(dir + "/report.json"));
    const ExperimentResult loaded = load_report(dir + "/report.json");
    CHECK(result_to_json(loaded).dump() == result_to_json(par).dump());
    std::filesystem::remove_all(dir);

    json bad = result_to_json(par);
    bad["mode"] = "weird";
    CHECK_THROWS_AS(result_from_json(bad, "test"), ParseError);
    bad = result_to_json(par);
    bad["densities"][0].erase("problems");
    CHECK_THROWS_AS(result_from_json(bad, "test"), ParseError);
    bad = result_to_json(par);
    bad.erase("config");
    CHECK_THROWS_AS(result_from_json(bad, "test"), ParseError);
}

TEST_CASE("csv headers are frozen") {
    const ExperimentResult par = run_parallel(tiny_parallel_config());
    CHECK(problems_csv(par).rfind(
                  "mode,density,slot,graph_seed,retries,n,edges,omega,ground_energy,"
                  "embedding_index,chain_max,reads,successes,p,u_model_s,tts_seq_s,solved\n",
                  0) == 0);
    CHECK(ensemble_csv(par).rfind(
                  "mode,density,k,p_ensemble,t_qpu_s,u_mean_s,tts_ensemble_s,"
                  "tts_sequential_total_s,speedup,retries,solved\n",
                  0) == 0);

    ExperimentResult rep;
    rep.mode = "replica";
    rep.densities.push_back({});
    CHECK(ensemble_csv(rep).rfind(
                  "mode,density,k,reads,p_single,p_any,p_any_predicted,gsp_gain,"
                  "tts_single_s,tts_any_s,speedup,retries,solved\n",
                  0) == 0);
}

TEST_CASE("hardware builds from generators, files, and masks") {
    const std::string path = "test_experiments_graph.json";
    save_graph(path, chimera_graph(2));
    TopologyConfig t;
    t.file = path;
    t.dead = {0};
    const HardwareGraph hw = build_hardware(t);
    CHECK(hw.num_qubits() == 32);
    CHECK(hw.num_usable_qubits() == 31);
    CHECK(hw.topology == Topology::kChimera);
    std::remove(path.c_str());

    TopologyConfig pegasus;
    pegasus.kind = Topology::kPegasus;
    pegasus.m = 2;
    CHECK(build_hardware(pegasus).num_qubits() == 40);

    TopologyConfig custom;
    custom.kind = Topology::kCustom;
    CHECK_THROWS_AS(build_hardware(custom), ParameterError);
}

TEST_CASE("embeddings build from files and both embedders") {
    const std::string path = "test_experiments_embs.json";
    const HardwareGraph hw = chimera_graph(4);
    save_embeddings(path, tile_clique_chimera(hw, 4));

    ExperimentConfig cfg = tiny_parallel_config();
    cfg.embedding_file = path;
    cfg.k = 3;
    CHECK(build_embeddings(cfg, hw).embeddings.size() == 3);
    cfg.k = 0;
    CHECK(build_embeddings(cfg, hw).embeddings.size() == 16);

    cfg.clique_size = 5;  // file says 4
    CHECK_THROWS_AS(build_embeddings(cfg, hw), ParameterError);
    cfg.clique_size = 4;
    const HardwareGraph small = chimera_graph(2);
    CHECK_THROWS_AS(build_embeddings(cfg, small), ValidationError);
    std::remove(path.c_str());

    ExperimentConfig greedy;
    greedy.topology.kind = Topology::kPegasus;
    greedy.topology.m = 2;
    greedy.clique_size = 4;
    greedy.embedder = "greedy";
    greedy.embed_time_budget = 0.0;
    CHECK(build_embeddings(greedy, build_hardware(greedy.topology)).embeddings.size() == 3);

    ExperimentConfig hopeless = tiny_parallel_config();
    hopeless.clique_size = 20;  // K20 does not fit on C(4)
    CHECK_THROWS_AS(build_embeddings(hopeless, hw), CapacityError);
}
