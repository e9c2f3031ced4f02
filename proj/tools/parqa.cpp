// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 the parqa authors
//
// Command line front end. Subcommands:
//
//   topology        generate a hardware graph and save it as JSON
//   embed           find disjoint clique embeddings and save them
//   gen-graphs      generate constrained random problem graphs
//   solve-exact     exact maximum clique of a problem graph
//   run-parallel    parallel experiment over a density sweep
//   run-sequential  sequential baseline replaying a parallel report
//   run-replicas    identical-copy replica experiment
//   report          summarize a report.json on stdout
//
// Exit codes: 0 success, 1 parameter or input error, 2 capacity or
// validation error, 3 finished but some problem stayed unsolved after all
// retries. Run commands require an explicit --seed; every config field has
// a matching flag that overrides the config file.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <parqa/parqa.hpp>

namespace {

using namespace parqa;

// One bundle of flag storage per run subcommand; values only apply when the
// flag was actually given, so config file settings survive unrelated flags.
struct RunFlags {
    std::string config_path;
    std::string topology_kind;
    int m = 0;
    int shore = 0;
    std::string topology_file;
    std::vector<int> dead;
    int clique_size = 0;
    std::vector<double> densities;
    int calls = 0;
    int anneals = 0;
    int sweeps = 0;
    double beta_initial = 0;
    double beta_final = 0;
    std::string schedule;
    int threads = -1;
    std::string unembed_method;
    double anneal_time = 0;
    double readout_time = 0;
    double programming_time = 0;
    double delay_time = 0;
    double unembed_rate = 0;
    double utc_prefactor = 0;
    double chain_strength = 0;
    bool normalize_parts = false;
    std::string embedder;
    std::string embedding_file;
    int k = -1;
    int replicas = 0;
    int retry_limit = -1;
    std::uint64_t seed = 0;
    std::string graph_file;
    double embed_time_budget = 0;
    double gsp_tolerance = 0;
    std::string out_dir;
};

void add_run_flags(CLI::App* sub, RunFlags& f) {
    sub->add_option("--config", f.config_path, "experiment config JSON");
    sub->add_option("--topology", f.topology_kind, "hardware topology")
            ->check(CLI::IsMember({"chimera", "pegasus"}));
    sub->add_option("--m", f.m, "topology grid parameter");
    sub->add_option("--shore", f.shore, "chimera shore size");
    sub->add_option("--topology-file", f.topology_file, "hardware graph JSON");
    sub->add_option("--dead", f.dead, "extra dead qubit ids");
    sub->add_option("--n", f.clique_size, "logical problem size N");
    sub->add_option("--densities", f.densities, "edge densities in (0,1)");
    sub->add_option("--calls", f.calls, "backend calls per problem");
    sub->add_option("--anneals", f.anneals, "reads per backend call");
    sub->add_option("--sweeps", f.sweeps, "annealer sweeps per read");
    sub->add_option("--beta-initial", f.beta_initial, "initial inverse temperature");
    sub->add_option("--beta-final", f.beta_final, "final inverse temperature");
    sub->add_option("--schedule", f.schedule, "beta schedule")
            ->check(CLI::IsMember({"geometric", "linear"}));
    sub->add_option("--threads", f.threads, "sampler worker threads, 0 = all cores");
    sub->add_option("--unembed-method", f.unembed_method, "broken chain repair")
            ->check(CLI::IsMember({"majority_vote", "weighted_random"}));
    sub->add_option("--anneal-time", f.anneal_time, "modeled seconds per anneal");
    sub->add_option("--readout-time", f.readout_time, "modeled seconds per readout");
    sub->add_option("--programming-time", f.programming_time, "modeled seconds per call");
    sub->add_option("--delay-time", f.delay_time, "modeled inter-read delay seconds");
    sub->add_option("--unembed-rate", f.unembed_rate, "modeled seconds per read-qubit");
    sub->add_option("--utc-prefactor", f.utc_prefactor, "chain strength prefactor");
    sub->add_option("--chain-strength", f.chain_strength, "fixed chain strength, 0 = UTC");
    sub->add_flag("--normalize-parts", f.normalize_parts, "rescale each part to max |coeff| 1");
    sub->add_option("--embedder", f.embedder, "embedding strategy")
            ->check(CLI::IsMember({"tile", "greedy"}));
    sub->add_option("--embedding-file", f.embedding_file, "precomputed embeddings JSON");
    sub->add_option("--k", f.k, "embeddings to use, 0 = all found");
    sub->add_option("--replicas", f.replicas, "replica copies");
    sub->add_option("--retry-limit", f.retry_limit, "regeneration rounds for unsolved problems");
    sub->add_option("--seed", f.seed, "master seed")->required();
    sub->add_option("--graph-file", f.graph_file, "fixed problem graph (replica mode)");
    sub->add_option("--embed-time-budget", f.embed_time_budget, "greedy embedder seconds");
    sub->add_option("--gsp-tolerance", f.gsp_tolerance, "ground energy match tolerance");
    sub->add_option("--out-dir", f.out_dir, "report output directory");
}

ExperimentConfig merge_config(const CLI::App* sub, const RunFlags& f) {
    ExperimentConfig cfg =
            f.config_path.empty() ? ExperimentConfig{} : load_config(f.config_path);
    const auto given = [sub](const std::string& flag) { return sub->count(flag) > 0; };
    if (given("--topology")) cfg.topology.kind = topology_from_name(f.topology_kind);
    if (given("--m")) cfg.topology.m = f.m;
    if (given("--shore")) cfg.topology.shore = f.shore;
    if (given("--topology-file")) cfg.topology.file = f.topology_file;
    if (given("--dead")) cfg.topology.dead = f.dead;
    if (given("--n")) cfg.clique_size = f.clique_size;
    if (given("--densities")) cfg.densities = f.densities;
    if (given("--calls")) cfg.calls_per_problem = f.calls;
    if (given("--anneals")) cfg.anneals_per_call = f.anneals;
    if (given("--sweeps")) cfg.sampler.sweeps = f.sweeps;
    if (given("--beta-initial")) cfg.sampler.beta_initial = f.beta_initial;
    if (given("--beta-final")) cfg.sampler.beta_final = f.beta_final;
    if (given("--schedule"))
        cfg.sampler.schedule = f.schedule == "linear" ? Schedule::kLinear : Schedule::kGeometric;
    if (given("--threads")) cfg.sampler.threads = f.threads;
    if (given("--unembed-method"))
        cfg.unembed_method = unembed_method_from_name(f.unembed_method);
    if (given("--anneal-time")) cfg.qpu.anneal_time = f.anneal_time;
    if (given("--readout-time")) cfg.qpu.readout_time = f.readout_time;
    if (given("--programming-time")) cfg.qpu.programming_time = f.programming_time;
    if (given("--delay-time")) cfg.qpu.delay_time = f.delay_time;
    if (given("--unembed-rate")) cfg.unembed_rate = f.unembed_rate;
    if (given("--utc-prefactor")) cfg.utc_prefactor = f.utc_prefactor;
    if (given("--chain-strength")) cfg.chain_strength = f.chain_strength;
    if (given("--normalize-parts")) cfg.normalize_parts = true;
    if (given("--embedder")) cfg.embedder = f.embedder;
    if (given("--embedding-file")) cfg.embedding_file = f.embedding_file;
    if (given("--k")) cfg.k = f.k;
    if (given("--replicas")) cfg.replicas = f.replicas;
    if (given("--retry-limit")) cfg.retry_limit = f.retry_limit;
    cfg.seed = f.seed;
    if (given("--graph-file")) cfg.graph_file = f.graph_file;
    if (given("--embed-time-budget")) cfg.embed_time_budget = f.embed_time_budget;
    if (given("--gsp-tolerance")) cfg.gsp_tolerance = f.gsp_tolerance;
    if (given("--out-dir")) cfg.output_dir = f.out_dir;
    return cfg;
}

void print_summary(const ExperimentResult& result) {
    std::cout << result.mode << " run, N = " << result.config.clique_size << ", "
              << result.densities.size() << " densities\n";
    for (const auto& d : result.densities) {
        std::cout << "  density " << format_double(d.density) << ": k=" << d.k
                  << " retries=" << d.retries_total;
        if (result.mode == "replica") {
            const ReplicaStats& r = d.replica;
            std::cout << " p_single=" << format_double(r.p_single)
                      << " p_any=" << format_double(r.p_any)
                      << " predicted=" << format_double(r.p_any_predicted);
            if (r.solved)
                std::cout << " gain=" << format_double(r.gsp_gain)
                          << " speedup=" << format_double(r.speedup);
        } else {
            if (d.p_ens > 0) std::cout << " p_ens=" << format_double(d.p_ens);
            if (d.tts_ens > 0) std::cout << " tts_ens=" << format_double(d.tts_ens) << "s";
            if (d.tts_seq_total > 0)
                std::cout << " tts_seq=" << format_double(d.tts_seq_total) << "s";
            if (d.speedup > 0) std::cout << " speedup=" << format_double(d.speedup);
        }
        std::cout << (d.solved ? "" : " UNSOLVED") << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"parallel annealing experiment toolkit"};
    app.require_subcommand(1);
    int rc = 0;

    // topology
    std::string topo_kind = "chimera", topo_out;
    int topo_m = 16, topo_shore = 4;
    std::vector<int> topo_dead;
    auto* topo = app.add_subcommand("topology", "generate a hardware graph");
    topo->add_option("--topology", topo_kind, "chimera or pegasus")
            ->check(CLI::IsMember({"chimera", "pegasus"}));
    topo->add_option("--m", topo_m, "grid parameter");
    topo->add_option("--shore", topo_shore, "chimera shore size");
    topo->add_option("--dead", topo_dead, "dead qubit ids");
    topo->add_option("--out", topo_out, "output JSON path")->required();
    topo->callback([&]() {
        HardwareGraph hw = topology_from_name(topo_kind) == Topology::kChimera
                                   ? chimera_graph(topo_m, topo_shore)
                                   : pegasus_graph(topo_m);
        if (!topo_dead.empty()) hw = apply_yield_mask(hw, topo_dead);
        save_graph(topo_out, hw);
        std::cout << topo_kind << " m=" << topo_m << " qubits=" << hw.num_qubits()
                  << " couplers=" << hw.num_edges() << " usable=" << hw.num_usable_qubits()
                  << " -> " << topo_out << "\n";
    });

    // embed
    std::string emb_kind = "chimera", emb_topo_file, emb_method = "tile", emb_out;
    int emb_m = 16, emb_shore = 4, emb_n = 0, emb_k = 0;
    std::uint64_t emb_seed = 0;
    double emb_budget = 10.0;
    std::vector<int> emb_dead;
    auto* emb = app.add_subcommand("embed", "find disjoint clique embeddings");
    emb->add_option("--topology", emb_kind, "chimera or pegasus")
            ->check(CLI::IsMember({"chimera", "pegasus"}));
    emb->add_option("--m", emb_m, "grid parameter");
    emb->add_option("--shore", emb_shore, "chimera shore size");
    emb->add_option("--topology-file", emb_topo_file, "hardware graph JSON");
    emb->add_option("--dead", emb_dead, "extra dead qubit ids");
    emb->add_option("--n", emb_n, "clique size to embed")->required();
    emb->add_option("--k", emb_k, "embeddings wanted, 0 = as many as possible");
    emb->add_option("--embedder", emb_method, "tile or greedy")
            ->check(CLI::IsMember({"tile", "greedy"}));
    emb->add_option("--seed", emb_seed, "greedy embedder seed");
    emb->add_option("--time-budget", emb_budget, "greedy embedder seconds");
    emb->add_option("--out", emb_out, "output JSON path")->required();
    emb->callback([&]() {
        TopologyConfig tc;
        tc.kind = topology_from_name(emb_kind);
        tc.m = emb_m;
        tc.shore = emb_shore;
        tc.file = emb_topo_file;
        tc.dead = emb_dead;
        const HardwareGraph hw = build_hardware(tc);
        const DisjointEmbeddingSet set =
                emb_method == "tile" ? tile_clique_chimera(hw, emb_n, emb_k)
                                     : greedy_disjoint_embedder(hw, emb_n, emb_k, emb_seed,
                                                                emb_budget);
        if (set.embeddings.empty())
            throw CapacityError("embed: no disjoint embedding of K" + std::to_string(emb_n) +
                                " found");
        save_embeddings(emb_out, set);
        const ChainLengthStats stats = chain_length_stats(set);
        std::cout << set.embeddings.size() << " embeddings of K" << emb_n << ", chain length "
                  << stats.min << ".." << stats.max << " mean " << format_double(stats.mean)
                  << " -> " << emb_out << "\n";
    });

    // gen-graphs
    int gg_n = 0, gg_count = 1;
    double gg_density = 0.5;
    std::uint64_t gg_seed = 0;
    std::string gg_dir;
    auto* gg = app.add_subcommand("gen-graphs", "generate constrained random graphs");
    gg->add_option("--n", gg_n, "vertex count")->required();
    gg->add_option("--density", gg_density, "edge density in (0,1)")->required();
    gg->add_option("--count", gg_count, "graphs to generate");
    gg->add_option("--seed", gg_seed, "master seed");
    gg->add_option("--out-dir", gg_dir, "output directory")->required();
    gg->callback([&]() {
        if (gg_count < 1) throw ParameterError("gen-graphs: count must be positive");
        for (int i = 0; i < gg_count; ++i) {
            const Graph g =
                    erdos_renyi_constrained(gg_n, gg_density, mix64(gg_seed, kStreamGraph, i));
            char name[32];
            std::snprintf(name, sizeof(name), "graph_%03d.json", i);
            const std::string path = gg_dir + "/" + name;
            save_problem_graph(path, g);
            std::cout << path << " n=" << g.n << " edges=" << g.edges.size() << "\n";
        }
    });

    // solve-exact
    std::string se_graph, se_out;
    bool se_all = false;
    auto* se = app.add_subcommand("solve-exact", "exact maximum clique of a graph");
    se->add_option("--graph", se_graph, "problem graph JSON")->required();
    se->add_flag("--all", se_all, "enumerate every maximum clique");
    se->add_option("--out", se_out, "write the result as JSON");
    se->callback([&]() {
        const Graph g = load_problem_graph(se_graph);
        const CliqueResult res = max_clique_exact(g);
        std::cout << "omega=" << res.omega << " witness=[";
        for (std::size_t i = 0; i < res.witness.size(); ++i)
            std::cout << (i ? "," : "") << res.witness[i];
        std::cout << "] nodes=" << res.nodes << "\n";
        json out;
        out["omega"] = res.omega;
        out["witness"] = res.witness;
        if (se_all) {
            const auto cliques = all_max_cliques(g);
            std::cout << cliques.size() << " maximum cliques\n";
            out["all"] = cliques;
        }
        if (!se_out.empty()) write_json_file(se_out, out);
    });

    // run-parallel
    RunFlags fp;
    auto* rp = app.add_subcommand("run-parallel", "parallel experiment over densities");
    add_run_flags(rp, fp);
    rp->callback([&]() {
        const ExperimentConfig cfg = merge_config(rp, fp);
        const ExperimentResult result = run_parallel(cfg);
        emit_reports(result, cfg.output_dir);
        print_summary(result);
        std::cout << "reports -> " << cfg.output_dir << "\n";
        if (!result.all_solved()) rc = 3;
    });

    // run-sequential
    std::string rs_report, rs_dir;
    std::uint64_t rs_seed = 0;
    int rs_threads = -1;
    auto* rs = app.add_subcommand("run-sequential",
                                  "sequential baseline replaying a parallel report");
    rs->add_option("--report", rs_report, "report.json of a parallel run")->required();
    rs->add_option("--seed", rs_seed, "master seed")->required();
    rs->add_option("--threads", rs_threads, "sampler worker threads");
    rs->add_option("--out-dir", rs_dir, "report output directory")->required();
    rs->callback([&]() {
        ExperimentResult parallel = load_report(rs_report);
        if (rs->count("--threads")) parallel.config.sampler.threads = rs_threads;
        ExperimentResult result = run_sequential(parallel, rs_seed);
        result.config.output_dir = rs_dir;
        emit_reports(result, rs_dir);
        print_summary(result);
        std::cout << "reports -> " << rs_dir << "\n";
        if (!result.all_solved()) rc = 3;
    });

    // run-replicas
    RunFlags fr;
    auto* rr = app.add_subcommand("run-replicas", "identical-copy replica experiment");
    add_run_flags(rr, fr);
    rr->callback([&]() {
        const ExperimentConfig cfg = merge_config(rr, fr);
        const ExperimentResult result = run_replicas(cfg);
        emit_reports(result, cfg.output_dir);
        print_summary(result);
        std::cout << "reports -> " << cfg.output_dir << "\n";
        if (!result.all_solved()) rc = 3;
    });

    // report
    std::string rep_path;
    auto* rep = app.add_subcommand("report", "summarize a report.json");
    rep->add_option("--report", rep_path, "report JSON path")->required();
    rep->callback([&]() { print_summary(load_report(rep_path)); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
