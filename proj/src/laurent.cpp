#include "lie/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace lie {

LaurentPoly LaurentPoly::constant(std::size_t nvars, Rat c) {
    LaurentPoly p(nvars);
    p.add_term(Exps(nvars, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(std::size_t nvars, std::size_t var, long power, Rat c) {
    Exps e(nvars, 0);
    e.at(var) = power;
    return monomial(nvars, std::move(e), std::move(c));
}

LaurentPoly LaurentPoly::monomial(std::size_t nvars, Exps e, Rat c) {
    if (e.size() != nvars) fail(Error::Kind::invalid_argument, "LaurentPoly: exponent arity");
    LaurentPoly p(nvars);
    p.add_term(e, c);
    return p;
}

void LaurentPoly::add_term(const Exps& e, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

// Zero polynomials and variable-free constants act as scalars of any arity:
// harmonize the variable counts where that interpretation is unambiguous.
bool LaurentPoly::lift_to_arity(std::size_t nvars) {
    if (nvars_ == nvars) return true;
    if (t_.empty()) {
        nvars_ = nvars;
        return true;
    }
    if (nvars_ == 0) {
        Rat c = t_.begin()->second;
        t_.clear();
        nvars_ = nvars;
        add_term(Exps(nvars, 0), c);
        return true;
    }
    return false;
}

void LaurentPoly::harmonize(LaurentPoly& a, LaurentPoly& b) {
    if (a.nvars_ == b.nvars_) return;
    if (a.nvars_ < b.nvars_ && a.lift_to_arity(b.nvars_)) return;
    if (b.lift_to_arity(a.nvars_)) return;
    if (a.lift_to_arity(b.nvars_)) return;
    fail(Error::Kind::invalid_argument, "LaurentPoly: arity mismatch");
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p(nvars_);
    for (const auto& [e, c] : t_) p.t_.emplace(e, -c);
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (nvars_ != o.nvars_) {
        LaurentPoly rhs = o;
        harmonize(*this, rhs);
        for (const auto& [e, c] : rhs.t_) add_term(e, c);
        return *this;
    }
    for (const auto& [e, c] : o.t_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (nvars_ != o.nvars_) {
        LaurentPoly rhs = o;
        harmonize(*this, rhs);
        for (const auto& [e, c] : rhs.t_) add_term(e, -c);
        return *this;
    }
    for (const auto& [e, c] : o.t_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rat& s) {
    if (s.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& [e, c] : t_) c *= s;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.nvars_ != b.nvars_) {
        LaurentPoly aa = a, bb = b;
        LaurentPoly::harmonize(aa, bb);
        return aa * bb;
    }
    LaurentPoly p(a.nvars_);
    LaurentPoly::Exps e(a.nvars_);
    for (const auto& [ea, ca] : a.t_)
        for (const auto& [eb, cb] : b.t_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            p.add_term(e, ca * cb);
        }
    return p;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& o) const {
    if (nvars_ != o.nvars_) {
        LaurentPoly aa = *this, bb = o;
        harmonize(aa, bb);
        return aa.divide_exact(bb);
    }
    if (o.is_zero()) fail(Error::Kind::invalid_argument, "LaurentPoly: division by zero");
    if (is_zero()) return LaurentPoly(nvars_);
    // Shift both so all exponents are nonnegative, then cancel leading terms
    // in the (well-ordered) lex order. The shifts differ by a monomial factor
    // that is recorded in the quotient.
    Exps shift_n(nvars_, 0), shift_d(nvars_, 0);
    for (std::size_t v = 0; v < nvars_; ++v) {
        shift_n[v] = -min_exp(v);
        shift_d[v] = -o.min_exp(v);
    }
    Terms rem;
    for (const auto& [e, c] : t_) {
        Exps f(e);
        for (std::size_t v = 0; v < nvars_; ++v) f[v] += shift_n[v];
        rem.emplace(f, c);
    }
    Terms den;
    for (const auto& [e, c] : o.t_) {
        Exps f(e);
        for (std::size_t v = 0; v < nvars_; ++v) f[v] += shift_d[v];
        den.emplace(f, c);
    }
    const auto& dlead = *den.rbegin(); // lex-largest term of the divisor
    LaurentPoly q(nvars_);
    while (!rem.empty()) {
        const auto rlead = *rem.rbegin();
        Exps qe(nvars_);
        for (std::size_t v = 0; v < nvars_; ++v) {
            qe[v] = rlead.first[v] - dlead.first[v];
            if (qe[v] < 0)
                fail(Error::Kind::inexact, "LaurentPoly: inexact division");
        }
        Rat qc = rlead.second / dlead.second;
        // rem -= (qc * x^qe) * den
        Exps e(nvars_);
        for (const auto& [de, dc] : den) {
            for (std::size_t v = 0; v < nvars_; ++v) e[v] = de[v] + qe[v];
            Rat delta = qc * dc;
            auto [it, fresh] = rem.try_emplace(e, -delta);
            if (!fresh) {
                it->second -= delta;
                if (it->second.is_zero()) rem.erase(it);
            }
        }
        for (std::size_t v = 0; v < nvars_; ++v) qe[v] += shift_d[v] - shift_n[v];
        q.add_term(qe, qc);
    }
    return q;
}

LaurentPoly LaurentPoly::invert_var(std::size_t var) const {
    LaurentPoly p(nvars_);
    for (const auto& [e, c] : t_) {
        Exps f(e);
        f.at(var) = -f.at(var);
        p.t_.emplace(std::move(f), c);
    }
    return p;
}

LaurentPoly LaurentPoly::eval_var_one(std::size_t var) const {
    LaurentPoly p(nvars_);
    for (const auto& [e, c] : t_) {
        Exps f(e);
        f.at(var) = 0;
        p.add_term(f, c);
    }
    return p;
}

Rat LaurentPoly::eval(const std::vector<Rat>& point) const {
    if (point.size() != nvars_) fail(Error::Kind::invalid_argument, "LaurentPoly::eval arity");
    Rat total(0);
    for (const auto& [e, c] : t_) {
        Rat term = c;
        for (std::size_t v = 0; v < nvars_; ++v) {
            long k = e[v];
            if (k == 0) continue;
            if (point[v].is_zero() && k < 0)
                fail(Error::Kind::invalid_argument, "LaurentPoly::eval: pole at zero");
            Rat base = k > 0 ? point[v] : Rat(1) / point[v];
            for (long i = 0; i < (k > 0 ? k : -k); ++i) term *= base;
        }
        total += term;
    }
    return total;
}

long LaurentPoly::min_exp(std::size_t var) const {
    long m = 0;
    bool first = true;
    for (const auto& [e, c] : t_) {
        (void)c;
        if (first || e[var] < m) m = e[var];
        first = false;
    }
    return m;
}

long LaurentPoly::max_exp(std::size_t var) const {
    long m = 0;
    bool first = true;
    for (const auto& [e, c] : t_) {
        (void)c;
        if (first || e[var] > m) m = e[var];
        first = false;
    }
    return m;
}

std::string LaurentPoly::str(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : t_) {
        std::string coeff = c.str();
        if (!first) os << (c.sign() >= 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        first = false;
        std::string mag = (c.sign() < 0 ? (-c).str() : coeff);
        bool all_zero = std::all_of(e.begin(), e.end(), [](long k) { return k == 0; });
        if (mag != "1" || all_zero) os << mag;
        bool printed = false;
        for (std::size_t v = 0; v < nvars_; ++v) {
            if (e[v] == 0) continue;
            if (printed || (mag != "1" || all_zero)) os << "*";
            os << (v < names.size() ? names[v] : "x" + std::to_string(v));
            if (e[v] != 1) os << "^" << e[v];
            printed = true;
        }
    }
    return os.str();
}

} // namespace lie
