#pragma once

#include <string>
#include <vector>

#include "lie/clifford.hpp"
#include "lie/laurent.hpp"
#include "lie/weight_module.hpp"

namespace lie {

// Supercharge operator data for a simply-laced rank <= 2 system (A1, A2).
//
// The invariant form used on the Clifford side is twice the theta-normalized
// form; in that scale every frame vector of m = h-perp is rational:
//   Z_{2a} = (E_a + E_{-a})/2,  Z_{2a+1} = i (E_a - E_{-a})/2
// over the lattice model, and the Cartan part embeds rationally into a
// standard euclidean space by four-square decomposition. The scale is undone
// explicitly in the reported Casimir comparisons (a factor 1/2).
struct DiracOperator {
    RootSystem rs;
    WeightModule mod;

    std::size_t wm_dim = 0; // 2^{|Phi^+|}
    std::size_t wh_dim = 0; // spin module of the embedded Cartan Clifford

    Matrix<CRat> Q;        // on V (x) W_m
    Matrix<CRat> Qg, Qh;   // on V (x) W_m (x) W_h
    Matrix<CRat> Q0;       // on W_m (x) W_h (no pi term)
    Matrix<CRat> gamma_m;  // parity of W_m

    std::vector<Vec> wm_weights; // weight of each W_m basis vector
    std::vector<int> wm_parity;  // +1 even, -1 odd

    // The m-frame Clifford model and the full-frame quantizations, kept for
    // the supersymmetry-relation checks.
    CliffordModel cliff_m;
    CliffordModel cliff_h;
    // s_g(X) (x) nothing and c(X) on W_m (x) W_h, for each frame element of g
    // (m-frame first, then the Cartan basis elements i H_A).
    std::vector<Matrix<CRat>> s_frame;
    std::vector<Matrix<CRat>> c_frame;
    // Structure constants in the mixed frame via the doubled form, and the
    // dual-pairing data of the Cartan block.
    Matrix<Rat> k2h;      // doubled Gram of the Cartan basis
    Matrix<Rat> k2h_inv;
};

// Requires lambda dominant integral, label in {A1, A2}; total space
// dim V * 2^{|Phi^+|} * wh_dim within dim_cap.
DiracOperator build_dirac(const std::string& label, const Vec& lambda, std::size_t dim_cap);

// ||rho||^2 == g dim(g) / 12 in the theta-normalized form, exact.
bool strange_formula_check(const RootSystem& rs);

// Super-character of ker Q on V (x) W_m, as a Laurent polynomial in the
// fundamental-weight exponents, plus the plain kernel dimension.
struct KernelReport {
    LaurentPoly super_character;
    std::size_t dim = 0;
};
KernelReport dirac_kernel(const DiracOperator& D);

// sum_{sigma in W} eps(sigma) e^{sigma(lambda + rho)}.
LaurentPoly expected_kernel_character(const RootSystem& rs, const Vec& lambda);

// Rational euclidean embedding of a positive-definite rational Gram matrix:
// returns vectors (rows) with pairwise standard inner products equal to g.
std::vector<std::vector<Rat>> rational_isometric_embedding(const Matrix<Rat>& g);

} // namespace lie
