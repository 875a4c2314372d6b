#pragma once

#include <string>
#include <vector>

#include "lie/rational.hpp"

namespace lie {

// Cartan matrix in the convention n_ij = 2(a_i, a_j)/(a_i, a_i), so that the
// symmetry constraint reads n_ij (a_i,a_i) = n_ji (a_j,a_j).
struct CartanMatrix {
    std::vector<std::vector<long>> n;

    std::size_t rank() const { return n.size(); }
    void validate() const; // n_ii = 2, n_ij <= 0 off-diagonal, zero pattern symmetric

    // Length vector (a_i, a_i) consistent with the matrix, normalized so the
    // longest simple root has squared length 2. Fails if the ratios are
    // inconsistent or the matrix is not connected-componentwise scalable.
    std::vector<Rat> default_lengths() const;
};

// Registry of finite Cartan matrices addressable as "A1".."A8", "B2".."B8",
// "C2".."C8", "D4".."D8", "E6","E7","E8", "F4", "G2".
CartanMatrix cartan_by_label(const std::string& label);

// Directed multigraph with loop-free, symmetric-support incidence matrix.
struct MultiGraph {
    std::vector<std::vector<long>> m;

    std::size_t nodes() const { return m.size(); }
    void validate() const;
    bool connected() const;

    static MultiGraph from_incidence(std::vector<std::vector<long>> m);
    // The graph 2I - N of a (possibly extended) Cartan matrix N.
    static MultiGraph from_cartan(const std::vector<std::vector<long>>& n);

    friend bool operator==(const MultiGraph& a, const MultiGraph& b) { return a.m == b.m; }
};

struct DiagramEntry {
    std::string label;
    MultiGraph graph;
};

// Affine Dynkin diagrams: untwisted X_n^{(1)} generated from the
// finite root systems, plus the twisted series A_2^{(2)}, A_{2n}^{(2)},
// A_{2n-1}^{(2)}, D_n^{(2)}, E_6^{(2)}, D_4^{(3)}. Labels use "~k" for the
// twist: "A3~1", "D4~3". All entries with at most `max_nodes` nodes.
std::vector<DiagramEntry> affine_diagram_registry(std::size_t max_nodes);

// Finite Dynkin diagrams as multigraphs, same label scheme as cartan_by_label.
std::vector<DiagramEntry> finite_diagram_registry(std::size_t max_nodes);

} // namespace lie
