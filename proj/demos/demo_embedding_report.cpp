// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 the parqa authors
//
// Prints how many disjoint K_N embeddings the tiler and the greedy embedder
// find on ideal chimera(16) and pegasus(6), with chain length stats.

#include <iostream>

#include <parqa/parqa.hpp>

namespace {

void report(const char* label, const parqa::DisjointEmbeddingSet& set) {
    const parqa::ChainLengthStats stats = parqa::chain_length_stats(set);
    std::cout << label << ": " << set.embeddings.size() << " embeddings, chains "
              << stats.min << ".." << stats.max << " (mean "
              << parqa::format_double(stats.mean) << ")\n";
}

}  // namespace

int main() {
    using namespace parqa;

    const HardwareGraph chimera = chimera_graph(16);
    const HardwareGraph pegasus = pegasus_graph(6);
    std::cout << "chimera(16): " << chimera.num_qubits() << " qubits, " << chimera.num_edges()
              << " couplers\n";
    std::cout << "pegasus(6): " << pegasus.num_qubits() << " qubits, " << pegasus.num_edges()
              << " couplers\n";

    for (int n : {4, 8, 12, 20}) {
        report(("tile chimera(16) N=" + std::to_string(n)).c_str(),
               tile_clique_chimera(chimera, n));
    }
    report("greedy pegasus(6) N=8", greedy_disjoint_embedder(pegasus, 8, 0, 1, 5.0));
    return 0;
}
