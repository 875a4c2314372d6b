#pragma once

#include <map>
#include <string>
#include <vector>

#include "lie/matrix.hpp"
#include "lie/rational.hpp"

namespace lie {

// Simply-laced Lie algebra from an even positive-definite lattice: basis
// H_1..H_r (the lattice basis as Cartan elements) and E_a for each norm-2
// lattice vector a, with
//   [H, E_a] = (H, a) E_a,   [E_a, E_{-a}] = -a,
//   [E_a, E_b] = eps(a, b) E_{a+b}  when a + b is again norm 2.
// eps is the bilinear Z_2 factor built from the basis recipe
// b(a_i,a_i) = |a_i|^2/2, b(a_i,a_j) = (a_i,a_j) for i<j, 0 for i>j.
class LatticeAlgebra {
public:
    // gram: symmetric, even, positive definite integer matrix.
    explicit LatticeAlgebra(std::vector<std::vector<long>> gram);

    std::size_t rank() const { return rank_; }
    const std::vector<std::vector<long>>& norm2_vectors() const { return phi_; }
    std::size_t dim() const { return rank_ + phi_.size(); }

    // +1/-1 valued bilinear epsilon factor.
    int epsilon(const std::vector<long>& a, const std::vector<long>& b) const;

    long inner(const std::vector<long>& a, const std::vector<long>& b) const;

    // Basis elements are indexed 0..rank-1 (Cartan) then rank..dim-1 (root
    // vectors, in the stored norm2_vectors() order). A general element is a
    // rational coordinate vector of length dim().
    using Elt = std::vector<Rat>;
    Elt basis(std::size_t k) const;
    Elt bracket(const Elt& x, const Elt& y) const;
    // Adjoint conjugation X -> X*: H* = H on real Cartan coordinates,
    // E_a* = -E_{-a}; satisfies ad(X*) = ad(X)* for the stored form.
    Elt star(const Elt& x) const;
    // Invariant form: E_a orthonormal, Cartan block the lattice Gram,
    // Cartan orthogonal to root vectors.
    Rat form(const Elt& x, const Elt& y) const;

    struct Report {
        bool antisymmetric = false;
        bool jacobi = false;
        bool simple = false;                  // spans and connected
        bool star_invariance_sample = false;  // ad(X*) = ad(X)* on samples
        std::size_t dim = 0;
        std::size_t num_roots = 0;
    };
    // Exhaustive checks over all basis pairs/triples.
    Report verify() const;

private:
    std::size_t root_index(const std::vector<long>& a) const; // npos if absent

    std::size_t rank_;
    std::vector<std::vector<long>> gram_;
    std::vector<std::vector<long>> phi_;
    std::map<std::vector<long>, std::size_t> phi_index_;
    std::vector<std::vector<long>> bmat_; // epsilon exponent bilinear form
};

} // namespace lie
