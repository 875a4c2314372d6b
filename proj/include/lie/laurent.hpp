#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "lie/error.hpp"
#include "lie/rational.hpp"

namespace lie {

// Multivariate Laurent polynomial over Rat: a finitely supported map from
// integer exponent vectors to coefficients. The variable count is fixed per
// value; names are carried for printing/serialization only. No zero
// coefficients are ever stored.
class LaurentPoly {
public:
    using Exps = std::vector<long>;
    using Terms = std::map<Exps, Rat>;

    LaurentPoly() : nvars_(0) {}
    explicit LaurentPoly(std::size_t nvars) : nvars_(nvars) {}

    static LaurentPoly constant(std::size_t nvars, Rat c);
    // Monomial c * x_var^power.
    static LaurentPoly monomial(std::size_t nvars, std::size_t var, long power, Rat c = Rat(1));
    static LaurentPoly monomial(std::size_t nvars, Exps e, Rat c = Rat(1));

    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == Exps(nvars_, 0)); }
    std::size_t size() const { return t_.size(); }

    Rat coeff(const Exps& e) const {
        auto it = t_.find(e);
        return it == t_.end() ? Rat(0) : it->second;
    }
    Rat constant_term() const { return coeff(Exps(nvars_, 0)); }

    void add_term(const Exps& e, const Rat& c);

    // Zero polynomials and variable-free constants embed into any arity.
    bool lift_to_arity(std::size_t nvars);
    static void harmonize(LaurentPoly& a, LaurentPoly& b);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }
    LaurentPoly& operator*=(const Rat& s);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { a += b; return a; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { a -= b; return a; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rat& s) { a *= s; return a; }
    friend LaurentPoly operator*(const Rat& s, LaurentPoly a) { a *= s; return a; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.nvars_ == b.nvars_) return a.t_ == b.t_;
        LaurentPoly aa = a, bb = b;
        LaurentPoly& lo = aa.nvars_ < bb.nvars_ ? aa : bb;
        const LaurentPoly& hi = aa.nvars_ < bb.nvars_ ? bb : aa;
        if (!lo.lift_to_arity(hi.nvars_)) return false;
        return lo.t_ == hi.t_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // Exact division: fails with Kind::inexact unless o divides *this in the
    // Laurent polynomial ring.
    LaurentPoly divide_exact(const LaurentPoly& o) const;
    friend LaurentPoly operator/(const LaurentPoly& a, const LaurentPoly& b) {
        return a.divide_exact(b);
    }

    // x_var -> x_var^{-1}.
    LaurentPoly invert_var(std::size_t var) const;

    // Substitute x_var = 1 (dropping that variable's grading; variable count
    // is preserved, the exponent is zeroed).
    LaurentPoly eval_var_one(std::size_t var) const;

    // Full evaluation at a rational point.
    Rat eval(const std::vector<Rat>& point) const;

    // Coefficient-of view: partial evaluation keeping structure is not
    // needed; tests use coeff/eval.

    long min_exp(std::size_t var) const;
    long max_exp(std::size_t var) const;

    std::string str(const std::vector<std::string>& names) const;

private:
    std::size_t nvars_;
    Terms t_;
};

} // namespace lie
