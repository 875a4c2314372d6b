#pragma once

#include <map>
#include <set>
#include <vector>

#include "lie/matrix.hpp"
#include "lie/qseries.hpp"
#include "lie/rational.hpp"
#include "lie/sqrt2.hpp"

namespace lie {

enum class FockKind { boson, fermion };

// Truncated Fock space: all states of energy <= cutoff.
//
// Bosons: occupation numbers per (field, mode n >= 1); zero modes A_i(0) act
// as the scalars mu_i. Norms ||prod A_i(-n)^k Omega||^2 = prod k! n^k are
// carried by the diagonal Gram (the polynomial realization A_i(-n) = z_{i,n},
// A_i(n) = n d/dz_{i,n} keeps every matrix rational).
//
// Fermions (Ramond, integer modes): subsets of modes n >= 1 per field,
// tensored with the irreducible module W of the zero-mode Clifford algebra
// c_i = sqrt(2) psi_i(0). Matrix entries live in Q(sqrt 2); states are
// orthonormal. Supported for one or two fields, where W is real.
struct FockSpace {
    FockKind kind;
    std::size_t fields = 0;
    long cutoff = 0;
    std::vector<Rat> mu; // boson zero modes

    struct BosonState {
        std::vector<std::map<long, long>> occ; // per field: mode -> count
        long energy = 0;
    };
    struct FermionState {
        std::vector<std::set<long>> occ; // per field: occupied modes
        std::size_t zm = 0;              // zero-mode factor index
        long energy = 0;
    };
    std::vector<BosonState> bstates;
    std::vector<FermionState> fstates;
    std::map<std::vector<long>, std::size_t> index; // canonical key -> index

    std::size_t zm_dim = 1;
    std::vector<Matrix<Rat>> zm_clifford; // c_i = sqrt2 psi_i(0), exact integer matrices

    std::size_t dim() const {
        return kind == FockKind::boson ? bstates.size() : fstates.size();
    }
    long energy_of(std::size_t k) const {
        return kind == FockKind::boson ? bstates[k].energy : fstates[k].energy;
    }
    std::vector<std::size_t> level_dims() const;

    // Diagonal Gram (boson norms; fermions orthonormal).
    std::vector<Rat> gram_diagonal() const;
};

FockSpace build_fock(FockKind kind, std::size_t fields, long cutoff, std::vector<Rat> mu = {});

// Mode operator matrices on the truncated basis.
Matrix<Rat> boson_mode(const FockSpace& f, std::size_t field, long n);
Matrix<Rat2> fermion_mode(const FockSpace& f, std::size_t field, long n);

// Fubini-Veneziano Virasoro operators, normal-ordered (creation left).
Matrix<Rat> boson_virasoro(const FockSpace& f, long m);
Matrix<Rat2> fermion_virasoro(const FockSpace& f, long m);

struct VirasoroCheck {
    bool pass = false;
    Rat expected_central;         // (c/12)(m^3 - m) delta_{m+n,0}
    Rat measured_central;         // vacuum expectation extraction
    Rat central_charge;           // 12 * measured / (m^3 - m), when defined
    bool charge_defined = false;
    std::size_t subspace_dim = 0; // states of energy <= depth
};

// Checks [L_m, L_n] = (m-n) L_{m+n} + (c/12)(m^3-m) delta_{m+n,0} on all
// states of energy <= depth; requires depth + |m| + |n| <= cutoff.
VirasoroCheck verify_virasoro(const FockSpace& f, long m, long n, long depth);

// Largest energy on which a product of two modes (m then n, either order)
// is exactly represented by the truncated matrices.
long safe_energy(const FockSpace& f, long m, long n);

// Normalized character trace q^{L_0 - c/24} over the truncated space.
QSeries fock_character(const FockSpace& f);

} // namespace lie
