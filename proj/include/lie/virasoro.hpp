#pragma once

#include <optional>
#include <vector>

#include "lie/laurent.hpp"
#include "lie/matrix.hpp"
#include "lie/qseries.hpp"

namespace lie {

// Bivariate polynomials in (c, h) as Laurent polynomials with nonnegative
// exponents; variable 0 is c, variable 1 is h.
using CHPoly = LaurentPoly;
CHPoly ch_const(Rat v);
CHPoly ch_c();
CHPoly ch_h();

// Partitions of N in reverse lexicographic order (decreasing parts,
// compared as sequences, largest first): N = 2 gives [2], [1,1].
std::vector<std::vector<long>> partitions_of(long n);

// Level-N Verma Gram matrix of the Virasoro algebra with L_0 xi = h xi,
// entries computed by exact normal-ordering reduction, symbolic in (c,h).
// Levels above the cap (default 8, P(8) = 22) are a typed error.
Matrix<CHPoly> gram_matrix_symbolic(long n, long cap = 8);
// Evaluated at exact rational (c, h).
Matrix<Rat> gram_matrix_at(long n, const Rat& c, const Rat& h, long cap = 8);

// Kac determinant: symbolic determinant, the factored reference form
//   C_N prod_{p = q} phi_{p,p}^{P(N-p^2)} prod_{p > q} phi_{p,q}^{P(N-pq)}
// with C_N derived from the boson degeneration (never hard-coded), and the
// polynomial identity verdict.
struct KacDeterminant {
    CHPoly det;
    CHPoly factored;
    Rat leading_constant; // C_N, derived
    bool identity_holds;  // det == factored as polynomials
};
KacDeterminant kac_determinant(long n, long cap = 8);
Rat kac_determinant_at(long n, const Rat& c, const Rat& h, long cap = 8);

// phi_{p,q}(c,h): h - h_{p,p}(c) for p = q, else (h - h_{p,q})(h - h_{q,p})
// cleared to a polynomial.
CHPoly phi_pq(long p, long q);

// Discrete series data: c = 1 - 6/m(m+1), h = ((m+1)p - mq)^2 - 1)/(4m(m+1)).
Rat discrete_series_c(long m);
Rat h_pq(long m_num, long m_den, long p, long q); // rational parameter m = num/den
struct DiscreteSeriesEntry {
    long p, q;
    Rat h;
};
std::vector<DiscreteSeriesEntry> discrete_series(long m);

// GKO branching: for l = ell, j encoded as two_j, m = l + 2,
//   psi_k = eta^{-1} (Theta_{a+,b}(q,1) - Theta_{a-,b}(q,1)),
//   a_pm = (2j+1)(m+1) -+ (2k+1) m, b = m(m+1).
struct BranchingTerm {
    long two_k;
    QSeries psi; // no auxiliary variables
};
std::vector<BranchingTerm> gko_branching(long ell, long two_j, long order);
// Verifies ch L(0,1) ch L(j,l) = sum_k psi_k ch L(k,l+1) to the given order.
bool gko_branching_check(long ell, long two_j, long order);

// Feigin-Fuchs normalized character for the discrete series.
QSeries feigin_fuchs_character(long m, long p, long q, long order);
struct FFRankReport {
    bool rank_matches = false;   // rank of Gram at (c, h_pq) == character coefficient
    bool bound_matches = false;  // q^{-h} ch phi(q) == 1 - q^{rs} - q^{r's'} below M
    std::size_t gram_rank = 0;
    long coefficient = 0;
};
FFRankReport ff_rank_check(long m, long p, long q, long n, long cap = 8);

// FQS geometry: first intersections of C^+_{p,q} with all curves of level
// <= N (ordered labels (r,s), s = 0 giving the boundary curves), via the
// exact x-parameter formulas.
struct Intersection {
    long r, s;
    Rat x;
};
struct FqsGeometry {
    std::vector<Intersection> intersections; // positive-x, sorted descending
    Intersection first;                      // largest x
    bool matches_lemma;                      // x = p + q + k - 1/2, k in {0,1}
    long lemma_k;
    Rat lemma_x;
};
FqsGeometry fqs_geometry(long p, long q, long n);

// Exact determinant-sign probe: first n <= N with det_n(c,h) < 0, if any.
struct ExclusionReport {
    std::optional<long> first_negative_level;
    Rat det_value;
};
ExclusionReport exclusion_probe(const Rat& c, const Rat& h, long n);

} // namespace lie
