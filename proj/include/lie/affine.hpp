#pragma once

#include <vector>

#include "lie/qseries.hpp"
#include "lie/rootsystem.hpp"
#include "lie/weyl.hpp"

namespace lie {

// Affine weight (mu, k, level) with the Lorentzian pairing
//   (mu1,k1,l1).(mu2,k2,l2) = (mu1,mu2) + k1 l2 + k2 l1.
//
// Convention: the k-slot of the affine simple root a_0 = (-theta, +1, 0) is
// +1, so that (rho_bar, a_i^vee) = 1 holds for all i with rho_bar =
// (rho, 0, g) and the translation formula below. Formal exponentials grade
// by q^{-k}: module weights have k = -energy.
struct AffineWeight {
    Vec mu;
    Rat k;
    Rat level;
};

Rat lorentzian(const RootSystem& rs, const AffineWeight& a, const AffineWeight& b);

// Hyperbolic reflection in a space-like root (alpha, n, 0); errors on
// time-like input.
AffineWeight affine_reflect(const RootSystem& rs, const Vec& alpha, const Rat& n,
                            const AffineWeight& w);

// T_beta(mu,k,l) = (mu + l beta, k - (mu,beta) - l |beta|^2/2, l).
AffineWeight translate(const RootSystem& rs, const Vec& beta, const AffineWeight& w);

// Element T_beta o w of Q^vee x| W.
struct AffineWeylElement {
    Vec beta;       // coroot-lattice translation
    WeylElement w;  // finite part

    AffineWeight apply(const RootSystem& rs, const AffineWeight& x) const;
};
AffineWeylElement affine_compose(const RootSystem& rs, const AffineWeylElement& a,
                                 const AffineWeylElement& b);

enum class AlcovePosition { inside, wall, outside };
// Position of X relative to the fundamental alcove {(X,a_i) > 0, (X,theta) < 1}.
AlcovePosition alcove_membership(const RootSystem& rs, const Vec& x);

// Dominance at level l: (lambda, theta) <= l.
bool dominant_level_test(const RootSystem& rs, const Vec& lambda, const Rat& ell);

// Normalized affine sl2 character (Kac): q^{-c/24} Tr(q^{L_0} z^H) =
//   (Theta_{2j+1,l+2} - Theta_{-2j-1,l+2}) / (Theta_{1,2} - Theta_{-1,2}),
// a series in q with Laurent coefficients in z (z-exponent = pairing with
// alpha^vee). two_j = 2j must satisfy 0 <= 2j <= l. If normalized is false,
// the q^{-c/24} shift is removed (the leading exponent is then h).
QSeries affine_sl2_character(long ell, long two_j, long order, bool normalized = true);

// sl2 data: c = 3 l / (l + 2), h = j(j+1)/(l+2).
Rat sl2_central_charge(long ell);
Rat sl2_conformal_weight(long ell, long two_j);

// Kac/Macdonald denominator identity for a rank <= 2 system, verified to the
// given q-order: product side
//   prod_{n>=1}(1-q^n)^rank prod_{a>0}(1-e^{-a}) prod_{n>=1, a in Phi}(1-e^a q^n)
// against sum_{sigma in W_hat} eps(sigma) e^{sigma rho_bar - rho_bar}, with
// the translation shell chosen so no term below the truncation is missed.
bool kac_denominator_check(const RootSystem& rs, long order);
// Both sides, exposed for tests.
QSeries kac_denominator_product_side(const RootSystem& rs, long order);
QSeries kac_denominator_sum_side(const RootSystem& rs, long order);

// Enumerate coroot-lattice vectors needed for the sum side at the given
// order (exposed for the group-law property tests).
std::vector<Vec> coroot_shell(const RootSystem& rs, long order);

} // namespace lie
