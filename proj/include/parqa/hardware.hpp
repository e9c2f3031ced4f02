// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 the parqa authors
//
// Annealer hardware graphs: Chimera and Pegasus generators plus arbitrary
// imported graphs, with a dead-qubit mask layered on top.
//
// Chimera C(m, shore): an m x m grid of complete bipartite K_{shore,shore}
// cells. Qubit numbering, fixed by this library:
//
//   id(y, x, u, k) = (y * m + x) * 2 * shore + u * shore + k
//
// with cell row y, cell column x, orientation u (0 vertical, 1 horizontal)
// and shore index k. Vertical qubits couple to the same shore index in the
// cell below, horizontal ones to the cell to the right.
//
// Pegasus P(m): qubits are length-12 segments on a 12m x 12m grid, addressed
// (u, w, k, z) with orientation u, perpendicular line w in [0, m), track
// k in [0, 12) and position z in [0, m-1):
//
//   id(u, w, k, z) = ((u * m + w) * 12 + k) * (m - 1) + z
//
// A vertical qubit occupies column 12w + k, rows [12z + o, 12z + o + 11];
// a horizontal one row 12w + k, columns [12z + o, 12z + o + 11], where the
// offset o is per four-track group: o = (6, 10, 2)[k / 4] for both
// orientations. Couplers: "external" between consecutive z on the same
// track, "odd" between tracks 2j and 2j+1 at equal (w, z), "internal"
// wherever perpendicular segments cross. Boundary qubits whose segment is
// crossed by nothing (8(m-1) of them) are clipped, leaving (m-1)(24m-8)
// qubits of degree at most 15.
//
// No reference generator for the Pegasus family is importable here, so the
// tests pin the published structural facts instead: qubit counts, degree
// bounds, clip count, and the decomposition into three disjoint
// Chimera(m-1, 4) subgraphs exposed by pegasus_nice_qubit(). The track
// groups may be a relabeling of deployed chips (graphs isomorphic).
#ifndef PARQA_HARDWARE_HPP
#define PARQA_HARDWARE_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "parqa/errors.hpp"
#include "parqa/io.hpp"

namespace parqa {

enum class Topology { kChimera, kPegasus, kCustom };

inline std::string topology_name(Topology t) {
    switch (t) {
        case Topology::kChimera: return "chimera";
        case Topology::kPegasus: return "pegasus";
        case Topology::kCustom: return "custom";
    }
    throw ParameterError("topology_name: unknown topology");
}

inline Topology topology_from_name(const std::string& s) {
    if (s == "chimera") return Topology::kChimera;
    if (s == "pegasus") return Topology::kPegasus;
    if (s == "custom") return Topology::kCustom;
    throw ParseError("unknown topology '" + s + "'");
}

class HardwareGraph {
  public:
    Topology topology = Topology::kCustom;
    int m = 0;      // grid parameter for the generated families, 0 otherwise
    int shore = 0;  // chimera only

    HardwareGraph() = default;

    HardwareGraph(Topology t, int m_, int shore_, std::vector<int> qubits,
                  std::vector<std::pair<int, int>> edges, std::vector<int> dead = {})
            : topology(t), m(m_), shore(shore_), qubits_(std::move(qubits)),
              edges_(std::move(edges)), dead_(std::move(dead)) {
        canonicalize();
        rebuild();
    }

    const std::vector<int>& qubits() const { return qubits_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& dead() const { return dead_; }

    std::size_t num_qubits() const { return qubits_.size(); }
    std::size_t num_edges() const { return edges_.size(); }
    std::size_t num_usable_qubits() const { return qubits_.size() - dead_.size(); }

    bool contains(int q) const { return index_of(q) >= 0; }
    bool is_dead(int q) const { return std::binary_search(dead_.begin(), dead_.end(), q); }
    bool usable(int q) const { return contains(q) && !is_dead(q); }

    // Dense position of qubit q in qubits(), -1 if absent.
    int qubit_index(int q) const { return index_of(q); }

    bool has_edge(int a, int b) const {
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(a, b));
    }

    // Both endpoints alive and the coupler present.
    bool usable_edge(int a, int b) const {
        return has_edge(a, b) && !is_dead(a) && !is_dead(b);
    }

    // Neighbors through usable couplers only; dead qubits have none.
    const std::vector<int>& usable_neighbors(int q) const {
        const int i = index_of(q);
        if (i < 0) throw ParameterError("hardware: unknown qubit " + std::to_string(q));
        return usable_adj_[i];
    }

    std::size_t num_usable_edges() const { return num_usable_edges_; }

  private:
    std::vector<int> qubits_;                   // sorted
    std::vector<std::pair<int, int>> edges_;    // a < b, sorted
    std::vector<int> dead_;                     // sorted subset of qubits_
    std::vector<int> id_to_index_;              // -1 for absent ids
    std::vector<std::vector<int>> usable_adj_;  // by qubit index
    std::size_t num_usable_edges_ = 0;

    int index_of(int q) const {
        if (q < 0 || q >= static_cast<int>(id_to_index_.size())) return -1;
        return id_to_index_[q];
    }

    void canonicalize() {
        std::sort(qubits_.begin(), qubits_.end());
        qubits_.erase(std::unique(qubits_.begin(), qubits_.end()), qubits_.end());
        if (!qubits_.empty() && qubits_.front() < 0)
            throw ValidationError("hardware: negative qubit id");
        for (auto& [a, b] : edges_) {
            if (a == b) throw ValidationError("hardware: self loop at qubit " + std::to_string(a));
            if (a > b) std::swap(a, b);
        }
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
        std::sort(dead_.begin(), dead_.end());
        dead_.erase(std::unique(dead_.begin(), dead_.end()), dead_.end());
    }

    void rebuild() {
        const int max_id = qubits_.empty() ? -1 : qubits_.back();
        id_to_index_.assign(max_id + 1, -1);
        for (std::size_t i = 0; i < qubits_.size(); ++i) id_to_index_[qubits_[i]] = i;
        for (const auto& [a, b] : edges_)
            if (index_of(a) < 0 || index_of(b) < 0)
                throw ValidationError("hardware: edge (" + std::to_string(a) + ", " +
                                      std::to_string(b) + ") references an unknown qubit");
        for (int d : dead_)
            if (index_of(d) < 0)
                throw ValidationError("hardware: dead list references unknown qubit " +
                                      std::to_string(d));
        usable_adj_.assign(qubits_.size(), {});
        num_usable_edges_ = 0;
        for (const auto& [a, b] : edges_) {
            if (is_dead(a) || is_dead(b)) continue;
            usable_adj_[index_of(a)].push_back(b);
            usable_adj_[index_of(b)].push_back(a);
            ++num_usable_edges_;
        }
        for (auto& nbrs : usable_adj_) std::sort(nbrs.begin(), nbrs.end());
    }
};

inline int chimera_cell_qubit(int m, int shore, int y, int x, int u, int k) {
    return (y * m + x) * 2 * shore + u * shore + k;
}

inline HardwareGraph chimera_graph(int m, int shore = 4) {
    if (m < 1) throw ParameterError("chimera_graph: need m >= 1");
    if (shore < 1) throw ParameterError("chimera_graph: need shore >= 1");
    std::vector<int> qubits(static_cast<std::size_t>(2) * shore * m * m);
    for (std::size_t i = 0; i < qubits.size(); ++i) qubits[i] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int y = 0; y < m; ++y)
        for (int x = 0; x < m; ++x) {
            for (int kv = 0; kv < shore; ++kv)
                for (int kh = 0; kh < shore; ++kh)
                    edges.emplace_back(chimera_cell_qubit(m, shore, y, x, 0, kv),
                                       chimera_cell_qubit(m, shore, y, x, 1, kh));
            if (y + 1 < m)
                for (int k = 0; k < shore; ++k)
                    edges.emplace_back(chimera_cell_qubit(m, shore, y, x, 0, k),
                                       chimera_cell_qubit(m, shore, y + 1, x, 0, k));
            if (x + 1 < m)
                for (int k = 0; k < shore; ++k)
                    edges.emplace_back(chimera_cell_qubit(m, shore, y, x, 1, k),
                                       chimera_cell_qubit(m, shore, y, x + 1, 1, k));
        }
    return HardwareGraph(Topology::kChimera, m, shore, std::move(qubits), std::move(edges));
}

namespace detail {

inline constexpr int kPegasusOffsets[3] = {6, 10, 2};  // per track group k / 4

inline int pegasus_linear(int m, int u, int w, int k, int z) {
    return ((u * m + w) * 12 + k) * (m - 1) + z;
}

// Boundary qubits whose segment no perpendicular segment can reach.
inline bool pegasus_clipped(int m, int w, int k) {
    return (w == 0 && k < 2) || (w == m - 1 && k >= 10);
}

}  // namespace detail

inline HardwareGraph pegasus_graph(int m) {
    if (m < 2) throw ParameterError("pegasus_graph: need m >= 2");
    std::vector<int> qubits;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 2; ++u)
        for (int w = 0; w < m; ++w)
            for (int k = 0; k < 12; ++k) {
                if (detail::pegasus_clipped(m, w, k)) continue;
                for (int z = 0; z + 1 < m; ++z)
                    qubits.push_back(detail::pegasus_linear(m, u, w, k, z));
            }
    for (int w = 0; w < m; ++w)
        for (int k = 0; k < 12; ++k) {
            if (detail::pegasus_clipped(m, w, k)) continue;
            for (int z = 0; z + 1 < m; ++z) {
                for (int u = 0; u < 2; ++u) {
                    const int q = detail::pegasus_linear(m, u, w, k, z);
                    // external: next segment on the same track
                    if (z + 2 < m) edges.emplace_back(q, detail::pegasus_linear(m, u, w, k, z + 1));
                    // odd: the parallel partner track
                    if (k % 2 == 0) edges.emplace_back(q, detail::pegasus_linear(m, u, w, k + 1, z));
                }
                // internal: all horizontal segments crossing this vertical one
                const int column = 12 * w + k;
                const int row0 = 12 * z + detail::kPegasusOffsets[k / 4];
                for (int row = row0; row < row0 + 12; ++row) {
                    const int wh = row / 12, kh = row % 12;
                    if (detail::pegasus_clipped(m, wh, kh)) continue;
                    const int oh = detail::kPegasusOffsets[kh / 4];
                    if (column < oh) continue;
                    const int zh = (column - oh) / 12;
                    if (zh > m - 2) continue;
                    edges.emplace_back(detail::pegasus_linear(m, 0, w, k, z),
                                       detail::pegasus_linear(m, 1, wh, kh, zh));
                }
            }
        }
    return HardwareGraph(Topology::kPegasus, m, 0, std::move(qubits), std::move(edges));
}

// The three disjoint Chimera(m-1, shore 4) subgraphs inside P(m). Layer t
// uses track group t of both orientations; cell (y, x) of layer t maps its
// vertical shore index k to one pegasus qubit, likewise horizontal. Every
// intra-cell and grid coupler of the Chimera image is a pegasus coupler.
inline int pegasus_nice_qubit(int m, int t, int y, int x, int u, int k) {
    if (t < 0 || t > 2 || y < 0 || y >= m - 1 || x < 0 || x >= m - 1 || u < 0 || u > 1 ||
        k < 0 || k > 3)
        throw ParameterError("pegasus_nice_qubit: coordinate out of range");
    const int track = 4 * t + k;
    if (u == 0) {
        const int w = (t == 2) ? x : x + 1;
        return detail::pegasus_linear(m, 0, w, track, y);
    }
    const int w = (t == 2) ? y : y + 1;
    return detail::pegasus_linear(m, 1, w, track, x);
}

inline HardwareGraph apply_yield_mask(const HardwareGraph& g, const std::vector<int>& extra_dead) {
    for (int d : extra_dead)
        if (!g.contains(d))
            throw ParameterError("apply_yield_mask: unknown qubit " + std::to_string(d));
    std::vector<int> dead = g.dead();
    dead.insert(dead.end(), extra_dead.begin(), extra_dead.end());
    return HardwareGraph(g.topology, g.m, g.shore, g.qubits(), g.edges(), std::move(dead));
}

inline void save_graph(const std::string& path, const HardwareGraph& g) {
    json j;
    j["topology"] = topology_name(g.topology);
    j["m"] = g.m;
    j["shore"] = g.shore;
    j["qubits"] = g.qubits();
    j["edges"] = json::array();
    for (const auto& [a, b] : g.edges()) j["edges"].push_back({a, b});
    j["dead"] = g.dead();
    write_json_file(path, j);
}

inline HardwareGraph load_graph(const std::string& path) {
    const json j = load_json_file(path);
    const Topology t = topology_from_name(get_field<std::string>(j, "topology", path));
    const int m = get_field_or<int>(j, "m", path, 0);
    const int shore = get_field_or<int>(j, "shore", path, 0);
    std::vector<int> qubits = get_field<std::vector<int>>(j, "qubits", path);
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : get_field<json>(j, "edges", path)) {
        if (!e.is_array() || e.size() != 2)
            throw ParseError(path + ": field 'edges': entries must be [a, b] pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    std::vector<int> dead = get_field_or<std::vector<int>>(j, "dead", path, {});
    try {
        return HardwareGraph(t, m, shore, std::move(qubits), std::move(edges), std::move(dead));
    } catch (const Error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

}  // namespace parqa

#endif
