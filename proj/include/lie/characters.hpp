#pragma once

#include <vector>

#include "lie/laurent.hpp"
#include "lie/rootsystem.hpp"

namespace lie {

// Characters are Laurent polynomials in the formal exponentials of the
// fundamental weights: the exponent vector of e^mu is (<mu, a_i^vee>)_i.

// Exponent coordinates of a lattice weight (errors if not integral).
std::vector<long> weight_exponent(const RootSystem& rs, const Vec& mu);
// Inverse: weight from fundamental-weight exponents.
Vec weight_from_exponent(const RootSystem& rs, const std::vector<long>& e);

// Weyl character formula, computed by exact Laurent division:
//   ch(V_lambda) = sum_sigma eps(sigma) e^{sigma(lambda+rho)-rho} / prod_{a>0}(1-e^{-a}).
LaurentPoly weyl_character(const RootSystem& rs, const Vec& lambda);

// prod (lambda+rho, a) / prod (rho, a) over positive roots; exact integer.
Rat weyl_dimension(const RootSystem& rs, const Vec& lambda);

// Weyl denominator formula check:
//   sum_sigma eps(sigma) e^{sigma rho - rho} == prod_{a>0} (1 - e^{-a}).
bool weyl_denominator_check(const RootSystem& rs);

// Character product decomposed greedily into irreducible highest weights.
struct TensorSummand {
    Vec highest_weight;
    long multiplicity;
};
std::vector<TensorSummand> tensor_decompose(const RootSystem& rs, const Vec& lambda, const Vec& mu);

// dim of a character (value at the identity = sum of coefficients).
Rat character_dimension(const LaurentPoly& ch);

} // namespace lie
