// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 the parqa authors
//
// Serialization for experiment configs and results. Reports are written as
// three files per run directory:
//
//   problems.csv   one row per (density, problem slot)
//   ensemble.csv   one row per density
//   report.json    config echo plus full results, machine readable
//
// report.json of a parallel run is the input for the sequential baseline,
// which replays the recorded problems. Undefined values (TTS of an unsolved
// problem, speedup columns of a parallel-only run) are empty CSV cells and
// JSON nulls. Doubles are printed with the shortest round-trip form so a
// rerun with the same seed is byte-identical.
#ifndef PARQA_REPORTS_HPP
#define PARQA_REPORTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "parqa/errors.hpp"
#include "parqa/experiments.hpp"
#include "parqa/io.hpp"

namespace parqa {

inline json config_to_json(const ExperimentConfig& cfg) {
    json t;
    t["kind"] = topology_name(cfg.topology.kind);
    t["m"] = cfg.topology.m;
    t["shore"] = cfg.topology.shore;
    t["file"] = cfg.topology.file;
    t["dead"] = cfg.topology.dead;
    json s;
    s["sweeps"] = cfg.sampler.sweeps;
    s["beta_initial"] = cfg.sampler.beta_initial;
    s["beta_final"] = cfg.sampler.beta_final;
    s["schedule"] = cfg.sampler.schedule == Schedule::kGeometric ? "geometric" : "linear";
    // threads is a runtime resource like output_dir: sampling results are
    // identical for any worker count, so it is not part of the echo either.
    json q;
    q["anneal_time"] = cfg.qpu.anneal_time;
    q["readout_time"] = cfg.qpu.readout_time;
    q["programming_time"] = cfg.qpu.programming_time;
    q["delay_time"] = cfg.qpu.delay_time;
    json j;
    j["topology"] = t;
    j["clique_size"] = cfg.clique_size;
    j["densities"] = cfg.densities;
    j["calls_per_problem"] = cfg.calls_per_problem;
    j["anneals_per_call"] = cfg.anneals_per_call;
    j["sampler"] = s;
    j["unembed_method"] = unembed_method_name(cfg.unembed_method);
    j["qpu"] = q;
    j["unembed_rate"] = cfg.unembed_rate;
    j["utc_prefactor"] = cfg.utc_prefactor;
    j["chain_strength"] = cfg.chain_strength;
    j["normalize_parts"] = cfg.normalize_parts;
    j["embedder"] = cfg.embedder;
    j["embedding_file"] = cfg.embedding_file;
    j["k"] = cfg.k;
    j["replicas"] = cfg.replicas;
    j["retry_limit"] = cfg.retry_limit;
    j["seed"] = cfg.seed;
    j["graph_file"] = cfg.graph_file;
    j["embed_time_budget"] = cfg.embed_time_budget;
    j["gsp_tolerance"] = cfg.gsp_tolerance;
    // output_dir is a runtime destination, not part of the experiment
    // identity, so it is accepted on load but never echoed back.
    return j;
}

inline ExperimentConfig config_from_json(const json& j, const std::string& where) {
    ExperimentConfig cfg;
    if (j.contains("topology")) {
        const json& t = j.at("topology");
        if (t.contains("kind"))
            cfg.topology.kind = topology_from_name(t.at("kind").get<std::string>());
        cfg.topology.m = get_field_or<int>(t, "m", cfg.topology.m);
        cfg.topology.shore = get_field_or<int>(t, "shore", cfg.topology.shore);
        cfg.topology.file = get_field_or<std::string>(t, "file", "");
        if (t.contains("dead")) cfg.topology.dead = t.at("dead").get<std::vector<int>>();
    }
    cfg.clique_size = get_field_or<int>(j, "clique_size", cfg.clique_size);
    if (j.contains("densities")) {
        cfg.densities = j.at("densities").get<std::vector<double>>();
        if (cfg.densities.empty()) throw ParseError(where + ": empty densities array");
    }
    cfg.calls_per_problem = get_field_or<int>(j, "calls_per_problem", cfg.calls_per_problem);
    cfg.anneals_per_call = get_field_or<int>(j, "anneals_per_call", cfg.anneals_per_call);
    if (j.contains("sampler")) {
        const json& s = j.at("sampler");
        cfg.sampler.sweeps = get_field_or<int>(s, "sweeps", cfg.sampler.sweeps);
        cfg.sampler.beta_initial = get_field_or<double>(s, "beta_initial", cfg.sampler.beta_initial);
        cfg.sampler.beta_final = get_field_or<double>(s, "beta_final", cfg.sampler.beta_final);
        const std::string sched = get_field_or<std::string>(s, "schedule", "geometric");
        if (sched == "geometric") {
            cfg.sampler.schedule = Schedule::kGeometric;
        } else if (sched == "linear") {
            cfg.sampler.schedule = Schedule::kLinear;
        } else {
            throw ParseError(where + ": unknown schedule '" + sched + "'");
        }
        cfg.sampler.threads = get_field_or<int>(s, "threads", cfg.sampler.threads);
    }
    if (j.contains("unembed_method"))
        cfg.unembed_method = unembed_method_from_name(j.at("unembed_method").get<std::string>());
    if (j.contains("qpu")) {
        const json& q = j.at("qpu");
        cfg.qpu.anneal_time = get_field_or<double>(q, "anneal_time", cfg.qpu.anneal_time);
        cfg.qpu.readout_time = get_field_or<double>(q, "readout_time", cfg.qpu.readout_time);
        cfg.qpu.programming_time =
                get_field_or<double>(q, "programming_time", cfg.qpu.programming_time);
        cfg.qpu.delay_time = get_field_or<double>(q, "delay_time", cfg.qpu.delay_time);
    }
    cfg.unembed_rate = get_field_or<double>(j, "unembed_rate", cfg.unembed_rate);
    cfg.utc_prefactor = get_field_or<double>(j, "utc_prefactor", cfg.utc_prefactor);
    cfg.chain_strength = get_field_or<double>(j, "chain_strength", cfg.chain_strength);
    cfg.normalize_parts = get_field_or<bool>(j, "normalize_parts", cfg.normalize_parts);
    cfg.embedder = get_field_or<std::string>(j, "embedder", cfg.embedder);
    cfg.embedding_file = get_field_or<std::string>(j, "embedding_file", cfg.embedding_file);
    cfg.k = get_field_or<int>(j, "k", cfg.k);
    cfg.replicas = get_field_or<int>(j, "replicas", cfg.replicas);
    cfg.retry_limit = get_field_or<int>(j, "retry_limit", cfg.retry_limit);
    cfg.seed = get_field_or<std::uint64_t>(j, "seed", cfg.seed);
    cfg.graph_file = get_field_or<std::string>(j, "graph_file", cfg.graph_file);
    cfg.embed_time_budget = get_field_or<double>(j, "embed_time_budget", cfg.embed_time_budget);
    cfg.gsp_tolerance = get_field_or<double>(j, "gsp_tolerance", cfg.gsp_tolerance);
    cfg.output_dir = get_field_or<std::string>(j, "output_dir", cfg.output_dir);
    return cfg;
}

inline ExperimentConfig load_config(const std::string& path) {
    return config_from_json(load_json_file(path), path);
}

namespace detail {

inline json record_to_json(const RunRecord& r) {
    json j;
    j["density"] = r.density;
    j["slot"] = r.slot;
    j["graph_seed"] = r.graph_seed;
    j["retries"] = r.retries;
    j["n"] = r.n;
    j["edges"] = r.edges;
    j["omega"] = r.omega;
    j["ground_energy"] = r.ground_energy;
    j["embedding_index"] = r.embedding_index;
    j["chain_max"] = r.chain_max;
    j["reads"] = r.reads;
    j["successes"] = r.successes;
    j["p"] = r.p;
    j["u_model_s"] = r.u_model;
    if (r.tts_defined) j["tts_seq_s"] = r.tts_seq; else j["tts_seq_s"] = nullptr;
    j["solved"] = r.solved;
    return j;
}

inline RunRecord record_from_json(const json& j, const std::string& where) {
    RunRecord r;
    r.density = get_field<double>(j, "density", where);
    r.slot = get_field<int>(j, "slot", where);
    r.graph_seed = get_field<std::uint64_t>(j, "graph_seed", where);
    r.retries = get_field<int>(j, "retries", where);
    r.n = get_field<int>(j, "n", where);
    r.edges = get_field<int>(j, "edges", where);
    r.omega = get_field<int>(j, "omega", where);
    r.ground_energy = get_field<double>(j, "ground_energy", where);
    r.embedding_index = get_field<int>(j, "embedding_index", where);
    r.chain_max = get_field<int>(j, "chain_max", where);
    r.reads = get_field<long long>(j, "reads", where);
    r.successes = get_field<long long>(j, "successes", where);
    r.p = get_field<double>(j, "p", where);
    r.u_model = get_field<double>(j, "u_model_s", where);
    if (j.contains("tts_seq_s") && !j.at("tts_seq_s").is_null()) {
        r.tts_seq = j.at("tts_seq_s").get<double>();
        r.tts_defined = true;
    }
    r.solved = get_field<bool>(j, "solved", where);
    return r;
}

inline json replica_to_json(const ReplicaStats& r) {
    json j;
    j["k"] = r.k;
    j["reads"] = r.reads;
    j["p_single"] = r.p_single;
    j["p_any"] = r.p_any;
    j["p_any_predicted"] = r.p_any_predicted;
    if (r.solved) {
        j["gsp_gain"] = r.gsp_gain;
        j["tts_single_s"] = r.tts_single;
        j["tts_any_s"] = r.tts_any;
        j["speedup"] = r.speedup;
    } else {
        j["gsp_gain"] = nullptr;
        j["tts_single_s"] = nullptr;
        j["tts_any_s"] = nullptr;
        j["speedup"] = nullptr;
    }
    j["solved"] = r.solved;
    return j;
}

inline ReplicaStats replica_from_json(const json& j, const std::string& where) {
    ReplicaStats r;
    r.k = get_field<int>(j, "k", where);
    r.reads = get_field<long long>(j, "reads", where);
    r.p_single = get_field<double>(j, "p_single", where);
    r.p_any = get_field<double>(j, "p_any", where);
    r.p_any_predicted = get_field<double>(j, "p_any_predicted", where);
    r.solved = get_field<bool>(j, "solved", where);
    if (r.solved) {
        r.gsp_gain = get_field<double>(j, "gsp_gain", where);
        r.tts_single = get_field<double>(j, "tts_single_s", where);
        r.tts_any = get_field<double>(j, "tts_any_s", where);
        r.speedup = get_field<double>(j, "speedup", where);
    }
    return r;
}

inline json density_to_json(const DensityResult& d, const std::string& mode) {
    json j;
    j["density"] = d.density;
    j["k"] = d.k;
    j["retries"] = d.retries_total;
    j["solved"] = d.solved;
    j["t_qpu_s"] = d.t_qpu;
    j["u_mean_s"] = d.u_mean;
    if (mode == "parallel" || mode == "sequential") {
        if (d.solved || d.tts_ens > 0) j["p_ensemble"] = d.p_ens; else j["p_ensemble"] = nullptr;
        j["tts_ensemble_s"] = d.tts_ens > 0 ? json(d.tts_ens) : json(nullptr);
    }
    if (mode == "sequential") {
        j["tts_sequential_total_s"] = d.solved ? json(d.tts_seq_total) : json(nullptr);
        j["speedup"] = d.speedup > 0 ? json(d.speedup) : json(nullptr);
    }
    json arr = json::array();
    for (const auto& r : d.problems) arr.push_back(record_to_json(r));
    j["problems"] = arr;
    if (mode == "replica") j["replica"] = replica_to_json(d.replica);
    return j;
}

inline DensityResult density_from_json(const json& j, const std::string& mode,
                                       const std::string& where) {
    DensityResult d;
    d.density = get_field<double>(j, "density", where);
    d.k = get_field<int>(j, "k", where);
    d.retries_total = get_field<int>(j, "retries", where);
    d.solved = get_field<bool>(j, "solved", where);
    d.t_qpu = get_field<double>(j, "t_qpu_s", where);
    d.u_mean = get_field<double>(j, "u_mean_s", where);
    if (j.contains("p_ensemble") && !j.at("p_ensemble").is_null())
        d.p_ens = j.at("p_ensemble").get<double>();
    if (j.contains("tts_ensemble_s") && !j.at("tts_ensemble_s").is_null())
        d.tts_ens = j.at("tts_ensemble_s").get<double>();
    if (j.contains("tts_sequential_total_s") && !j.at("tts_sequential_total_s").is_null())
        d.tts_seq_total = j.at("tts_sequential_total_s").get<double>();
    if (j.contains("speedup") && !j.at("speedup").is_null())
        d.speedup = j.at("speedup").get<double>();
    if (!j.contains("problems") || !j.at("problems").is_array())
        throw ParseError(where + ": missing problems array");
    for (const auto& rj : j.at("problems")) d.problems.push_back(record_from_json(rj, where));
    if (mode == "replica") {
        if (!j.contains("replica")) throw ParseError(where + ": replica run without stats");
        d.replica = replica_from_json(j.at("replica"), where);
    }
    return d;
}

}  // namespace detail

inline json result_to_json(const ExperimentResult& result) {
    json j;
    j["mode"] = result.mode;
    j["config"] = config_to_json(result.config);
    json arr = json::array();
    for (const auto& d : result.densities)
        arr.push_back(detail::density_to_json(d, result.mode));
    j["densities"] = arr;
    j["solved"] = result.all_solved();
    return j;
}

inline ExperimentResult result_from_json(const json& j, const std::string& where) {
    ExperimentResult result;
    result.mode = get_field<std::string>(j, "mode", where);
    if (result.mode != "parallel" && result.mode != "sequential" && result.mode != "replica")
        throw ParseError(where + ": unknown mode '" + result.mode + "'");
    if (!j.contains("config")) throw ParseError(where + ": missing config");
    result.config = config_from_json(j.at("config"), where);
    if (!j.contains("densities") || !j.at("densities").is_array())
        throw ParseError(where + ": missing densities array");
    for (const auto& dj : j.at("densities"))
        result.densities.push_back(detail::density_from_json(dj, result.mode, where));
    return result;
}

inline ExperimentResult load_report(const std::string& path) {
    return result_from_json(load_json_file(path), path);
}

namespace detail {

inline std::string csv_cell(double v, bool defined) {
    return defined ? format_double(v) : std::string();
}

}  // namespace detail

inline std::string problems_csv(const ExperimentResult& result) {
    std::string out =
            "mode,density,slot,graph_seed,retries,n,edges,omega,ground_energy,"
            "embedding_index,chain_max,reads,successes,p,u_model_s,tts_seq_s,solved\n";
    for (const auto& d : result.densities) {
        for (const auto& r : d.problems) {
            out += result.mode;
            out += ',' + format_double(r.density);
            out += ',' + std::to_string(r.slot);
            out += ',' + std::to_string(r.graph_seed);
            out += ',' + std::to_string(r.retries);
            out += ',' + std::to_string(r.n);
            out += ',' + std::to_string(r.edges);
            out += ',' + std::to_string(r.omega);
            out += ',' + format_double(r.ground_energy);
            out += ',' + std::to_string(r.embedding_index);
            out += ',' + std::to_string(r.chain_max);
            out += ',' + std::to_string(r.reads);
            out += ',' + std::to_string(r.successes);
            out += ',' + format_double(r.p);
            out += ',' + format_double(r.u_model);
            out += ',' + detail::csv_cell(r.tts_seq, r.tts_defined);
            out += r.solved ? ",1\n" : ",0\n";
        }
    }
    return out;
}

inline std::string ensemble_csv(const ExperimentResult& result) {
    std::string out;
    if (result.mode == "replica") {
        out = "mode,density,k,reads,p_single,p_any,p_any_predicted,gsp_gain,"
              "tts_single_s,tts_any_s,speedup,retries,solved\n";
        for (const auto& d : result.densities) {
            const ReplicaStats& r = d.replica;
            out += result.mode;
            out += ',' + format_double(d.density);
            out += ',' + std::to_string(r.k);
            out += ',' + std::to_string(r.reads);
            out += ',' + format_double(r.p_single);
            out += ',' + format_double(r.p_any);
            out += ',' + format_double(r.p_any_predicted);
            out += ',' + detail::csv_cell(r.gsp_gain, r.solved);
            out += ',' + detail::csv_cell(r.tts_single, r.solved);
            out += ',' + detail::csv_cell(r.tts_any, r.solved);
            out += ',' + detail::csv_cell(r.speedup, r.solved);
            out += ',' + std::to_string(d.retries_total);
            out += d.solved ? ",1\n" : ",0\n";
        }
        return out;
    }
    out = "mode,density,k,p_ensemble,t_qpu_s,u_mean_s,tts_ensemble_s,"
          "tts_sequential_total_s,speedup,retries,solved\n";
    for (const auto& d : result.densities) {
        const bool ens_defined = d.tts_ens > 0;
        out += result.mode;
        out += ',' + format_double(d.density);
        out += ',' + std::to_string(d.k);
        out += ',' + detail::csv_cell(d.p_ens, d.p_ens > 0);
        out += ',' + format_double(d.t_qpu);
        out += ',' + format_double(d.u_mean);
        out += ',' + detail::csv_cell(d.tts_ens, ens_defined);
        out += ',' + detail::csv_cell(d.tts_seq_total, d.tts_seq_total > 0);
        out += ',' + detail::csv_cell(d.speedup, d.speedup > 0);
        out += ',' + std::to_string(d.retries_total);
        out += d.solved ? ",1\n" : ",0\n";
    }
    return out;
}

// Writes problems.csv, ensemble.csv and report.json into dir.
inline void emit_reports(const ExperimentResult& result, const std::string& dir) {
    write_text_file(dir + "/problems.csv", problems_csv(result));
    write_text_file(dir + "/ensemble.csv", ensemble_csv(result));
    write_json_file(dir + "/report.json", result_to_json(result));
}

}  // namespace parqa

#endif
