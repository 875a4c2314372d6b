#pragma once

#include <vector>

#include "lie/gaussian.hpp"
#include "lie/matrix.hpp"

namespace lie {

// Matrix model of the complex Clifford algebra of R^dim_v with orthonormal
// frame (e_k), built on the exterior algebra of C^n (n = floor(dim_v/2)):
//   c(e_{2k})   = e(v_k) + e(v_k)^*        (real entries)
//   c(e_{2k+1}) = i (e(v_k) - e(v_k)^*)    (imaginary entries)
// and, for odd dim_v, the extra generator
//   c(e_{dim_v-1}) = i^n c(e_0) ... c(e_{2n-1}).
// All entries are Gaussian rationals; relations are exact.
struct CliffordModel {
    std::size_t dim_v = 0;
    std::size_t sdim = 0;              // 2^n
    std::vector<Matrix<CRat>> gen;     // c(e_k), k = 0..dim_v-1
    Matrix<CRat> gamma;                // i^n c(e_0)...c(e_{2n-1}): exterior parity

    // {c(a), c(b)} = 2 (a,b) I and c(v)* = c(v), checked exactly.
    bool verify_relations() const;
    // gamma^2 = I and gamma c gamma = -c for the even generators.
    bool verify_grading() const;
    // Dimension of the commutant of the generated algebra (1 = irreducible).
    std::size_t commutant_dimension() const;

    // c(x) for x = sum x_k e_k with Gaussian rational coordinates.
    Matrix<CRat> c(const std::vector<CRat>& x) const;

    // Quantization s(A) = 1/4 sum_k c(A e_k) c(e_k) of an antisymmetric A.
    Matrix<CRat> quantize(const Matrix<Rat>& a) const;

    // z = c(e_{2n}) c(e_0) ... c(e_{2n-1}) for odd dim_v (central element).
    Matrix<CRat> central_element() const;
};

CliffordModel build_clifford(std::size_t dim_v);

} // namespace lie
