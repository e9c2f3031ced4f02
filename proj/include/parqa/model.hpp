// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 the parqa authors
//
// Binary quadratic models over {0,1} (Qubo) and {-1,+1} (IsingModel),
// the max-clique reduction, exact variable-for-variable conversions between
// the two domains, and the composition of independent problems into one
// block-diagonal model. Variables are always 0..n-1; quadratic terms are
// stored once with i < j.
#ifndef PARQA_MODEL_HPP
#define PARQA_MODEL_HPP

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "parqa/clique.hpp"
#include "parqa/errors.hpp"
#include "parqa/io.hpp"

namespace parqa {

namespace detail {
inline std::pair<int, int> ordered_pair(int i, int j, const char* what) {
    if (i == j) throw ParameterError(std::string(what) + ": diagonal term at variable " +
                                     std::to_string(i));
    return i < j ? std::make_pair(i, j) : std::make_pair(j, i);
}
}  // namespace detail

struct Qubo {
    int n = 0;
    std::vector<double> linear;                      // size n
    std::map<std::pair<int, int>, double> quadratic; // keys i < j
    double offset = 0.0;

    Qubo() = default;
    explicit Qubo(int num_variables) : n(num_variables), linear(num_variables, 0.0) {
        if (num_variables < 0) throw ParameterError("qubo: negative variable count");
    }

    void check_var(int i) const {
        if (i < 0 || i >= n)
            throw ParameterError("qubo: variable " + std::to_string(i) +
                                 " out of range for n = " + std::to_string(n));
    }

    void add_linear(int i, double h) {
        check_var(i);
        linear[i] += h;
    }

    void add_quadratic(int i, int j, double w) {
        check_var(i);
        check_var(j);
        quadratic[detail::ordered_pair(i, j, "qubo")] += w;
    }
};

struct IsingModel {
    int n = 0;
    std::vector<double> h;
    std::map<std::pair<int, int>, double> j;  // keys i < j
    double offset = 0.0;

    IsingModel() = default;
    explicit IsingModel(int num_variables) : n(num_variables), h(num_variables, 0.0) {
        if (num_variables < 0) throw ParameterError("ising: negative variable count");
    }

    void add_coupling(int i, int j_, double w) {
        if (i < 0 || i >= n || j_ < 0 || j_ >= n)
            throw ParameterError("ising: variable out of range");
        j[detail::ordered_pair(i, j_, "ising")] += w;
    }
};

inline void check_assignment_size(int n, std::size_t got, const char* what) {
    if (static_cast<std::size_t>(n) != got)
        throw ParameterError(std::string(what) + ": assignment has " + std::to_string(got) +
                             " values for " + std::to_string(n) + " variables");
}

inline double energy(const Qubo& q, const std::vector<std::int8_t>& x) {
    check_assignment_size(q.n, x.size(), "energy(qubo)");
    for (int i = 0; i < q.n; ++i)
        if (x[i] != 0 && x[i] != 1)
            throw ParameterError("energy(qubo): variable " + std::to_string(i) +
                                 " is not binary");
    double e = q.offset;
    for (int i = 0; i < q.n; ++i)
        if (x[i]) e += q.linear[i];
    for (const auto& [ij, w] : q.quadratic)
        if (x[ij.first] && x[ij.second]) e += w;
    return e;
}

inline double energy(const IsingModel& m, const std::vector<std::int8_t>& s) {
    check_assignment_size(m.n, s.size(), "energy(ising)");
    for (int i = 0; i < m.n; ++i)
        if (s[i] != -1 && s[i] != 1)
            throw ParameterError("energy(ising): variable " + std::to_string(i) +
                                 " is not a spin");
    double e = m.offset;
    for (int i = 0; i < m.n; ++i) e += m.h[i] * s[i];
    for (const auto& [ij, w] : m.j) e += w * s[ij.first] * s[ij.second];
    return e;
}

// Max-clique objective: reward -a per selected vertex, penalty +b on every
// selected non-edge pair. With b > a no optimum ever contains a non-edge, so
// the minimum energy is exactly -a * omega(g) and the minimizers are the
// indicator vectors of maximum cliques.
inline Qubo max_clique_qubo(const Graph& g, double a = 1.0, double b = 2.0) {
    if (!(a > 0.0)) throw ParameterError("max_clique_qubo: vertex reward must be positive");
    if (!(b > a)) throw ParameterError("max_clique_qubo: penalty must exceed the reward");
    Qubo q(g.n);
    for (int v = 0; v < g.n; ++v) q.linear[v] = -a;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!g.has_edge(u, v)) q.quadratic[{u, v}] = b;
    return q;
}

// Substitution x = (s + 1) / 2. Energies match state for state.
inline IsingModel qubo_to_ising(const Qubo& q) {
    IsingModel m(q.n);
    m.offset = q.offset;
    for (int i = 0; i < q.n; ++i) {
        m.h[i] += q.linear[i] / 2.0;
        m.offset += q.linear[i] / 2.0;
    }
    for (const auto& [ij, w] : q.quadratic) {
        m.j[ij] += w / 4.0;
        m.h[ij.first] += w / 4.0;
        m.h[ij.second] += w / 4.0;
        m.offset += w / 4.0;
    }
    return m;
}

// Substitution s = 2x - 1, the exact inverse of qubo_to_ising.
inline Qubo ising_to_qubo(const IsingModel& m) {
    Qubo q(m.n);
    q.offset = m.offset;
    for (int i = 0; i < m.n; ++i) {
        q.linear[i] += 2.0 * m.h[i];
        q.offset -= m.h[i];
    }
    for (const auto& [ij, w] : m.j) {
        q.quadratic[ij] += 4.0 * w;
        q.linear[ij.first] -= 2.0 * w;
        q.linear[ij.second] -= 2.0 * w;
        q.offset += w;
    }
    return q;
}

inline double max_abs_coefficient(const Qubo& q) {
    double m = 0.0;
    for (double h : q.linear) m = std::max(m, std::abs(h));
    for (const auto& [ij, w] : q.quadratic) m = std::max(m, std::abs(w));
    return m;
}

struct NormalizeResult {
    Qubo qubo;
    double scale;  // the multiplier applied; original energy = scaled energy / scale
};

// Rescales so the largest coefficient magnitude is 1. The offset scales too,
// keeping scaled energy proportional to the original state for state.
inline NormalizeResult normalize(const Qubo& q) {
    const double m = max_abs_coefficient(q);
    if (m == 0.0)
        throw ParameterError("normalize: all coefficients are zero, scale is undefined");
    NormalizeResult r{q, 1.0 / m};
    for (double& h : r.qubo.linear) h *= r.scale;
    for (auto& [ij, w] : r.qubo.quadratic) w *= r.scale;
    r.qubo.offset *= r.scale;
    return r;
}

// One independent problem inside a combined model: variables
// [first, first + n) of the combined QUBO, with the scale that was applied
// to its coefficients (1 when normalization was off).
struct PartSlice {
    int first = 0;
    int n = 0;
    double scale = 1.0;
};

struct CompositeQubo {
    Qubo qubo;
    std::vector<PartSlice> parts;
};

// Block-diagonal union of independent QUBOs. No quadratic term ever crosses
// a part boundary, so the combined minimum is the sum of part minima and
// minimizers restrict to part minimizers.
inline CompositeQubo combine(const std::vector<Qubo>& parts, bool normalize_parts = false) {
    if (parts.empty()) throw ParameterError("combine: no parts");
    int total = 0;
    for (const auto& p : parts) total += p.n;
    CompositeQubo c;
    c.qubo = Qubo(total);
    int first = 0;
    for (const auto& p : parts) {
        double scale = 1.0;
        const Qubo* src = &p;
        NormalizeResult scaled;
        if (normalize_parts) {
            scaled = normalize(p);
            src = &scaled.qubo;
            scale = scaled.scale;
        }
        for (int i = 0; i < src->n; ++i) c.qubo.linear[first + i] = src->linear[i];
        for (const auto& [ij, w] : src->quadratic)
            c.qubo.quadratic[{first + ij.first, first + ij.second}] = w;
        c.qubo.offset += src->offset;
        c.parts.push_back({first, src->n, scale});
        first += src->n;
    }
    return c;
}

inline std::vector<std::int8_t> part_assignment(const CompositeQubo& c, std::size_t part,
                                                const std::vector<std::int8_t>& full) {
    if (part >= c.parts.size()) throw ParameterError("part_assignment: part index out of range");
    check_assignment_size(c.qubo.n, full.size(), "part_assignment");
    const auto& s = c.parts[part];
    return {full.begin() + s.first, full.begin() + s.first + s.n};
}

inline void save_qubo(const std::string& path, const Qubo& q) {
    json j;
    j["n"] = q.n;
    j["linear"] = json::object();
    for (int i = 0; i < q.n; ++i)
        if (q.linear[i] != 0.0) j["linear"][std::to_string(i)] = q.linear[i];
    j["quadratic"] = json::array();
    for (const auto& [ij, w] : q.quadratic) j["quadratic"].push_back({ij.first, ij.second, w});
    j["offset"] = q.offset;
    write_json_file(path, j);
}

inline Qubo load_qubo(const std::string& path) {
    const json j = load_json_file(path);
    Qubo q(get_field<int>(j, "n", path));
    q.offset = get_field_or<double>(j, "offset", path, 0.0);
    if (j.contains("linear")) {
        if (!j["linear"].is_object()) throw ParseError(path + ": field 'linear' must be an object");
        for (const auto& [key, value] : j["linear"].items()) {
            int i;
            try {
                i = std::stoi(key);
            } catch (const std::exception&) {
                throw ParseError(path + ": field 'linear': bad variable key '" + key + "'");
            }
            if (i < 0 || i >= q.n)
                throw ParseError(path + ": field 'linear': variable " + key + " out of range");
            q.linear[i] = value.get<double>();
        }
    }
    if (j.contains("quadratic")) {
        for (const auto& t : j["quadratic"]) {
            if (!t.is_array() || t.size() != 3)
                throw ParseError(path + ": field 'quadratic': entries must be [i, j, value]");
            const int a = t[0].get<int>(), b = t[1].get<int>();
            if (a >= b)
                throw ParseError(path + ": field 'quadratic': pairs must be listed once with i < j");
            if (a < 0 || b >= q.n)
                throw ParseError(path + ": field 'quadratic': pair out of range");
            if (q.quadratic.count({a, b}))
                throw ParseError(path + ": field 'quadratic': duplicate pair (" +
                                 std::to_string(a) + ", " + std::to_string(b) + ")");
            q.quadratic[{a, b}] = t[2].get<double>();
        }
    }
    return q;
}

}  // namespace parqa

#endif
