#pragma once

#include <string>
#include <vector>

#include "lie/laurent.hpp"
#include "lie/rational.hpp"

namespace lie {

// Truncated formal series in q with LaurentPoly coefficients in auxiliary
// variables and an exact fractional base exponent:
//
//   q^base * sum_{k=0..order} coeff[k] q^k,
//
// exactly known through q^{base+order} and exactly zero below q^base.
// Operations never extrapolate beyond the minimum order of their inputs;
// adding series whose base exponents differ by a non-integer is an error.
class QSeries {
public:
    QSeries() : base_(0), order_(-1), nvars_(0) {}
    QSeries(Rat base, long order, std::size_t nvars)
        : base_(std::move(base)), order_(order), nvars_(nvars),
          c_(order >= 0 ? static_cast<std::size_t>(order) + 1 : 0, LaurentPoly(nvars)) {}

    static QSeries zero(long order, std::size_t nvars) { return QSeries(Rat(0), order, nvars); }
    static QSeries one(long order, std::size_t nvars);

    const Rat& base() const { return base_; }
    long order() const { return order_; }
    std::size_t nvars() const { return nvars_; }

    const LaurentPoly& coeff(long k) const;
    LaurentPoly& coeff_mut(long k);
    // Coefficient at absolute exponent e (= base + integer in range); zero
    // below base, error above the known window.
    LaurentPoly at_exponent(const Rat& e) const;

    void set_coeff(long k, LaurentPoly p);

    bool is_zero_through_order() const;

    QSeries operator-() const;
    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    QSeries operator*(const Rat& s) const;

    // Exact series division; every coefficient division must be exact in the
    // Laurent polynomial ring, otherwise Kind::inexact.
    QSeries divide_exact(const QSeries& d) const;

    // Multiply by q^t, t rational (shifts the base exponent).
    QSeries shift(const Rat& t) const;

    // Truncate to a smaller order.
    QSeries truncated(long order) const;

    // Equality of the underlying series on the overlap of the known windows.
    // Series that provably differ return false; fractional-part mismatch of
    // the bases counts as inequality of values only if both are nonzero.
    bool equal_to_order(const QSeries& o) const;

    // Auxiliary variable maps, applied coefficient-wise.
    QSeries map_invert_var(std::size_t var) const;
    QSeries map_eval_var_one(std::size_t var) const;

    std::string str(const std::vector<std::string>& names) const;

private:
    Rat base_;
    long order_; // -1: empty/invalid
    std::size_t nvars_;
    std::vector<LaurentPoly> c_;
};

struct ThetaLabel {
    long n;
    long m; // > 0
    // Theta_{n,m} depends on n only mod 2m; canonical n lies in (-m, m].
    ThetaLabel canonical() const;
    friend bool operator==(const ThetaLabel& a, const ThetaLabel& b) {
        return a.n == b.n && a.m == b.m;
    }
};

// eta(q) = q^{1/24} prod_{n>=1} (1 - q^n), truncated at q-degree `order`
// past the prefactor. No auxiliary variables.
QSeries expand_eta(long order);

// prod_{n>=1} (1-q^n)^{-1} expanded independently via partition counts.
QSeries expand_inverse_euler(long order);

// Euler phi(q) = prod (1-q^n) without the q^{1/24} prefactor.
QSeries expand_euler_product(long order);

// Pentagonal-number series sum_k (-1)^k q^{(3k^2+k)/2}.
QSeries pentagonal_series(long order);

// Theta_{n,m}(q,z) = sum_{k in n/2m + Z} q^{m k^2} z^{2mk}. With with_z the
// single auxiliary variable is z; otherwise z is specialized to 1 (still
// carrying one variable slot so products with z-series stay well-typed
// when nvars == 0 is requested use with_z=false and nvars 0).
QSeries expand_theta(ThetaLabel label, long order, bool with_z);

// Jacobi triple product both ways to q-degree `order` in the variable t.
bool verify_triple_product(long order);
// The two sides, exposed for tests/CLI.
QSeries triple_product_sum_side(long order);
QSeries triple_product_product_side(long order);

// Pentagonal identity: integer part of eta equals the pentagonal series.
bool verify_pentagonal(long order);

// Theta product decomposition:
//   Theta_{n,m} Theta_{n',m'} = sum_{j mod m+m'} F_j(q) Theta_{n+n'+2mj, m+m'}
// Returns the (coefficient, label) list with F_j expanded to `order`.
struct ThetaProductTerm {
    QSeries coeff; // F_j, no auxiliary variables
    ThetaLabel label;
};
std::vector<ThetaProductTerm> theta_product(ThetaLabel a, ThetaLabel b, long order);

// Partition counts p(0..n).
std::vector<unsigned long> partition_counts(long n);

} // namespace lie
