#pragma once

#include <string>
#include <vector>

#include "lie/cartan.hpp"
#include "lie/matrix.hpp"
#include "lie/rational.hpp"

namespace lie {

// Vectors in h* are stored in simple-root coordinates; the exact Gram matrix
// of the simple roots carries all inner products. Normalization: the highest
// root theta has squared length 2.
using Vec = std::vector<Rat>;

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rat& s, const Vec& a);
Vec operator-(const Vec& a);

struct RootSystem {
    std::size_t rank = 0;
    CartanMatrix cartan;
    Matrix<Rat> gram;                 // (a_i, a_j), normalized
    std::vector<Vec> roots;          // all roots
    std::vector<Vec> positive_roots; // nonnegative coordinates
    Vec theta;                       // highest root
    Vec rho;                         // half-sum of positive roots
    std::vector<Vec> fundamental_weights;
    Rat dual_coxeter;                // g = 1 + (rho, theta)

    Rat inner(const Vec& a, const Vec& b) const;
    Rat norm2(const Vec& a) const { return inner(a, a); }
    // <x, a_i^vee> = 2 (x, a_i) / (a_i, a_i)
    Rat coroot_pairing(const Vec& x, std::size_t i) const;
    Vec simple_reflect(std::size_t i, const Vec& x) const;
    // Reflection in an arbitrary root/vector with (a,a) != 0.
    Vec reflect(const Vec& alpha, const Vec& x) const;

    bool is_root(const Vec& x) const;
    bool is_dominant(const Vec& x) const;
    // lambda = sum m_i lambda_i from fundamental-weight coordinates.
    Vec weight_from_fw(const std::vector<long>& m) const;
    // Coordinates <x, a_i^vee> (integral weights give integers).
    std::vector<Rat> fw_coords(const Vec& x) const;
    // Sum of simple-root coordinates.
    Rat height(const Vec& x) const;
    // Coroot alpha^vee = 2 alpha / (alpha, alpha) in simple-root coordinates.
    Vec coroot(const Vec& alpha) const;
    // Basis of the coroot lattice (simple coroots), simple-root coordinates.
    std::vector<Vec> simple_coroots() const;

    std::size_t dim_g() const { return rank + roots.size(); }
};

// Generates the root system by closing the simple roots under simple
// reflections; errors with Kind::non_finite_type if the closure does not
// terminate within height 30 * rank.
RootSystem build_root_system(const CartanMatrix& cartan, const std::vector<Rat>& lengths);

// Registry convenience: build_root_system(cartan_by_label(l), defaults).
RootSystem root_system(const std::string& label);

} // namespace lie
