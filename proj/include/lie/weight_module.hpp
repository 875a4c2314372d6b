#pragma once

#include <map>
#include <vector>

#include "lie/matrix.hpp"
#include "lie/rootsystem.hpp"

namespace lie {

// Column-sparse linear operator on the module basis.
struct SparseOp {
    // col -> (row -> coefficient)
    std::vector<std::map<std::size_t, Rat>> cols;

    explicit SparseOp(std::size_t n = 0) : cols(n) {}
    std::size_t dim() const { return cols.size(); }
    void add(std::size_t row, std::size_t col, const Rat& v) {
        if (v.is_zero()) return;
        auto [it, fresh] = cols[col].try_emplace(row, v);
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero()) cols[col].erase(it);
        }
    }
    std::map<std::size_t, Rat> apply(const std::map<std::size_t, Rat>& x) const;
    Matrix<Rat> dense() const;
};

// Explicit irreducible highest-weight module, built as the Verma module
// modulo the radical of the Shapovalov form, level by level. The basis is
// not orthonormalized; the exact Gram blocks are kept instead.
struct WeightModule {
    RootSystem rs;
    Vec highest_weight;
    std::vector<Vec> weights;     // weight of each basis vector
    std::vector<std::size_t> level; // total lowering depth of each basis vector
    std::vector<SparseOp> E, F;   // one per simple root

    // Distinct weights with their basis indices and Gram blocks.
    std::vector<Vec> block_weights;
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<Matrix<Rat>> gram_blocks;

    std::size_t dim() const { return weights.size(); }

    // <mu, a_i^vee> diagonal action.
    Rat h_eigenvalue(std::size_t basis_index, std::size_t i) const {
        return rs.coroot_pairing(weights[basis_index], i);
    }

    // weight -> multiplicity.
    std::map<std::vector<Rat>, std::size_t> weight_multiset() const;

    // Full Gram as a dense matrix (block diagonal by weight).
    Matrix<Rat> gram_dense() const;

    // Gram-adjoint of an operator (conjugate transpose across blocks).
    SparseOp gram_adjoint(const SparseOp& a) const;

    // Root vector operators for an arbitrary positive root, built along
    // commutator paths from the simple ones (normalization arbitrary but
    // consistent between the returned E and its Gram adjoint).
    SparseOp raising_op(const Vec& alpha) const;

    // The Casimir as a matrix, via dual-basis pairings (no square roots).
    Matrix<Rat> casimir_matrix() const;
};

// Verma quotient construction. Errors: non-dominant weight
// (Kind::invalid_argument), predicted or actual dimension beyond dim_cap
// (Kind::size_cap).
WeightModule build_irrep(const RootSystem& rs, const Vec& lambda, std::size_t dim_cap);

// (lambda + rho, lambda + rho) - (rho, rho), exact.
Rat casimir_scalar(const RootSystem& rs, const Vec& lambda);

} // namespace lie
