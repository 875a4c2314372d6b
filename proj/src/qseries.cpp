#include "lie/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace lie {

QSeries QSeries::one(long order, std::size_t nvars) {
    QSeries s(Rat(0), order, nvars);
    s.c_.at(0) = LaurentPoly::constant(nvars, Rat(1));
    return s;
}

const LaurentPoly& QSeries::coeff(long k) const {
    if (k < 0 || k > order_) fail(Error::Kind::truncation, "QSeries: coefficient index out of window");
    return c_[static_cast<std::size_t>(k)];
}

LaurentPoly& QSeries::coeff_mut(long k) {
    if (k < 0 || k > order_) fail(Error::Kind::truncation, "QSeries: coefficient index out of window");
    return c_[static_cast<std::size_t>(k)];
}

LaurentPoly QSeries::at_exponent(const Rat& e) const {
    Rat rel = e - base_;
    if (!rel.is_integer()) return LaurentPoly(nvars_);
    mpz_class k = rel.to_mpz();
    if (k < 0) return LaurentPoly(nvars_);
    if (k > order_) fail(Error::Kind::truncation, "QSeries: exponent beyond truncation");
    return c_[k.get_ui()];
}

void QSeries::set_coeff(long k, LaurentPoly p) {
    if (p.nvars() != nvars_) fail(Error::Kind::invalid_argument, "QSeries: coefficient arity");
    coeff_mut(k) = std::move(p);
}

bool QSeries::is_zero_through_order() const {
    for (const auto& p : c_)
        if (!p.is_zero()) return false;
    return true;
}

QSeries QSeries::operator-() const {
    QSeries r = *this;
    for (auto& p : r.c_) p = -p;
    return r;
}

namespace {

// Common window for addition: result base = min(base), order clipped so both
// operands are exactly known on the window.
QSeries add_impl(const QSeries& a, const QSeries& b, bool subtract) {
    if (a.nvars() != b.nvars()) fail(Error::Kind::invalid_argument, "QSeries: arity mismatch");
    Rat diff = b.base() - a.base();
    if (!diff.is_integer())
        fail(Error::Kind::incompatible,
             "QSeries: adding series with incompatible fractional exponents");
    long off = diff.to_long(); // b.base = a.base + off
    Rat base = off >= 0 ? a.base() : b.base();
    long sa = off >= 0 ? 0 : -off; // shift of a relative to result base
    long sb = off >= 0 ? off : 0;
    long order = std::min(sa + a.order(), sb + b.order());
    QSeries r(base, order, a.nvars());
    for (long k = 0; k <= order; ++k) {
        LaurentPoly p(a.nvars());
        if (k - sa >= 0 && k - sa <= a.order()) p += a.coeff(k - sa);
        if (k - sb >= 0 && k - sb <= b.order()) {
            if (subtract) p -= b.coeff(k - sb);
            else p += b.coeff(k - sb);
        }
        r.set_coeff(k, std::move(p));
    }
    return r;
}

} // namespace

QSeries operator+(const QSeries& a, const QSeries& b) { return add_impl(a, b, false); }
QSeries operator-(const QSeries& a, const QSeries& b) { return add_impl(a, b, true); }

QSeries operator*(const QSeries& a, const QSeries& b) {
    if (a.nvars() != b.nvars()) fail(Error::Kind::invalid_argument, "QSeries: arity mismatch");
    long order = std::min(a.order(), b.order());
    QSeries r(a.base() + b.base(), order, a.nvars());
    for (long i = 0; i <= std::min(order, a.order()); ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (long j = 0; i + j <= order && j <= b.order(); ++j) {
            if (b.coeff(j).is_zero()) continue;
            r.coeff_mut(i + j) += a.coeff(i) * b.coeff(j);
        }
    }
    return r;
}

QSeries QSeries::operator*(const Rat& s) const {
    QSeries r = *this;
    for (auto& p : r.c_) p *= s;
    return r;
}

QSeries QSeries::divide_exact(const QSeries& d) const {
    if (nvars_ != d.nvars()) fail(Error::Kind::invalid_argument, "QSeries: arity mismatch");
    long v = 0;
    while (v <= d.order() && d.coeff(v).is_zero()) ++v;
    if (v > d.order()) fail(Error::Kind::invalid_argument, "QSeries: division by zero series");
    for (long k = 0; k < std::min(v, order_ + 1); ++k)
        if (!coeff(k).is_zero())
            fail(Error::Kind::inexact, "QSeries: numerator valuation below denominator");
    const LaurentPoly& lead = d.coeff(v);
    long order = std::min(order_, d.order()) - v;
    if (order < 0) fail(Error::Kind::truncation, "QSeries: division exceeds truncation");
    QSeries q(base_ - d.base() - Rat(v), order, nvars_);
    for (long k = 0; k <= order; ++k) {
        LaurentPoly acc = (k + v <= order_) ? coeff(k + v) : LaurentPoly(nvars_);
        for (long j = 0; j < k; ++j) {
            const LaurentPoly& qc = q.coeff(j);
            if (qc.is_zero()) continue;
            acc -= qc * d.coeff(k - j + v);
        }
        q.set_coeff(k, acc.divide_exact(lead));
    }
    return q;
}

QSeries QSeries::shift(const Rat& t) const {
    QSeries r = *this;
    r.base_ += t;
    return r;
}

QSeries QSeries::truncated(long order) const {
    if (order > order_) fail(Error::Kind::truncation, "QSeries: cannot extend truncation");
    QSeries r(base_, order, nvars_);
    for (long k = 0; k <= order; ++k) r.set_coeff(k, coeff(k));
    return r;
}

bool QSeries::equal_to_order(const QSeries& o) const {
    if (nvars_ != o.nvars()) return false;
    Rat diff = o.base() - base_;
    if (!diff.is_integer()) {
        // Values can only agree if both vanish identically on their windows.
        return is_zero_through_order() && o.is_zero_through_order();
    }
    long off = diff.to_long();
    long lo = std::min(0L, off);
    long hi = std::min(order_, off + o.order());
    for (long k = lo; k <= hi; ++k) {
        LaurentPoly pa = (k >= 0 && k <= order_) ? coeff(k) : LaurentPoly(nvars_);
        LaurentPoly pb = (k - off >= 0 && k - off <= o.order()) ? o.coeff(k - off) : LaurentPoly(nvars_);
        if (pa != pb) return false;
    }
    return true;
}

QSeries QSeries::map_invert_var(std::size_t var) const {
    QSeries r = *this;
    for (auto& p : r.c_) p = p.invert_var(var);
    return r;
}

QSeries QSeries::map_eval_var_one(std::size_t var) const {
    QSeries r = *this;
    for (auto& p : r.c_) p = p.eval_var_one(var);
    return r;
}

std::string QSeries::str(const std::vector<std::string>& names) const {
    std::ostringstream os;
    os << "q^(" << base_.str() << ") * [";
    bool first = true;
    for (long k = 0; k <= order_; ++k) {
        if (coeff(k).is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeff(k).str(names) << ")";
        if (k > 0) os << " q^" << k;
    }
    if (first) os << "0";
    os << " + O(q^" << order_ + 1 << ")]";
    return os.str();
}

ThetaLabel ThetaLabel::canonical() const {
    if (m <= 0) fail(Error::Kind::invalid_argument, "ThetaLabel: m must be positive");
    long r = n % (2 * m);
    if (r <= -m) r += 2 * m;
    if (r > m) r -= 2 * m;
    return ThetaLabel{r, m};
}

QSeries expand_euler_product(long order) {
    if (order < 0) fail(Error::Kind::invalid_argument, "expand_euler_product: negative order");
    QSeries s = QSeries::one(order, 0);
    for (long n = 1; n <= order; ++n) {
        QSeries f = QSeries::one(order, 0);
        f.set_coeff(n, LaurentPoly::constant(0, Rat(-1)));
        s = s * f;
    }
    return s;
}

QSeries expand_eta(long order) {
    return expand_euler_product(order).shift(Rat(1, 24));
}

std::vector<unsigned long> partition_counts(long n) {
    std::vector<unsigned long> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (long part = 1; part <= n; ++part)
        for (long total = part; total <= n; ++total)
            p[static_cast<std::size_t>(total)] += p[static_cast<std::size_t>(total - part)];
    return p;
}

QSeries expand_inverse_euler(long order) {
    if (order < 0) fail(Error::Kind::invalid_argument, "expand_inverse_euler: negative order");
    auto p = partition_counts(order);
    QSeries s(Rat(0), order, 0);
    for (long k = 0; k <= order; ++k)
        s.set_coeff(k, LaurentPoly::constant(0, Rat(static_cast<long>(p[static_cast<std::size_t>(k)]))));
    return s;
}

QSeries pentagonal_series(long order) {
    QSeries s(Rat(0), order, 0);
    for (long k = -order - 2; k <= order + 2; ++k) {
        long e2 = 3 * k * k + k; // always even
        if (e2 % 2 != 0) continue;
        long e = e2 / 2;
        if (e < 0 || e > order) continue;
        Rat sign = (k % 2 == 0) ? Rat(1) : Rat(-1);
        s.coeff_mut(e) += LaurentPoly::constant(0, sign);
    }
    return s;
}

bool verify_pentagonal(long order) {
    return expand_euler_product(order).equal_to_order(pentagonal_series(order));
}

QSeries expand_theta(ThetaLabel label, long order, bool with_z) {
    if (order < 0) fail(Error::Kind::invalid_argument, "expand_theta: negative order");
    ThetaLabel L = label.canonical();
    const long n = L.n, m = L.m;
    std::size_t nv = with_z ? 1 : 0;
    Rat base = Rat(n * n, 4 * m);
    QSeries s(base, order, nv);
    // k = n/2m + j; exponent m k^2 = base + (n j + m j^2); z-power 2mk = n + 2mj.
    for (long j = -(order + std::abs(n) + 2 * m + 2); j <= order + std::abs(n) + 2 * m + 2; ++j) {
        long rel = n * j + m * j * j;
        if (rel < 0 || rel > order) continue;
        long zpow = n + 2 * m * j;
        LaurentPoly t = with_z ? LaurentPoly::monomial(1, 0, zpow)
                               : LaurentPoly::constant(0, Rat(1));
        s.coeff_mut(rel) += t;
    }
    return s;
}

QSeries triple_product_sum_side(long order) {
    // sum_k (-1)^k q^{(k-1)k/2} t^k
    QSeries s(Rat(0), order, 1);
    for (long k = -(2 * order + 4); k <= 2 * order + 4; ++k) {
        long e2 = k * k - k;
        long e = e2 / 2;
        if (e < 0 || e > order) continue;
        Rat sign = (((k % 2) + 2) % 2 == 0) ? Rat(1) : Rat(-1);
        s.coeff_mut(e) += LaurentPoly::monomial(1, 0, k, sign);
    }
    return s;
}

QSeries triple_product_product_side(long order) {
    // prod_{m>=1} (1 - q^{m-1} t)(1 - q^m t^{-1})(1 - q^m)
    QSeries s = QSeries::one(order, 1);
    for (long m = 1; m - 1 <= order; ++m) {
        if (m - 1 <= order) {
            QSeries f = QSeries::one(order, 1);
            f.coeff_mut(m - 1) += LaurentPoly::monomial(1, 0, 1, Rat(-1));
            s = s * f;
        }
        if (m <= order) {
            QSeries f = QSeries::one(order, 1);
            f.coeff_mut(m) += LaurentPoly::monomial(1, 0, -1, Rat(-1));
            s = s * f;
            QSeries g = QSeries::one(order, 1);
            g.coeff_mut(m) += LaurentPoly::constant(1, Rat(-1));
            s = s * g;
        }
    }
    return s;
}

bool verify_triple_product(long order) {
    if (order < 1) fail(Error::Kind::invalid_argument, "verify_triple_product: order >= 1");
    return triple_product_sum_side(order).equal_to_order(triple_product_product_side(order));
}

std::vector<ThetaProductTerm> theta_product(ThetaLabel a, ThetaLabel b, long order) {
    if (order < 0) fail(Error::Kind::invalid_argument, "theta_product: negative order");
    ThetaLabel A = a.canonical(), B = b.canonical();
    const long m = A.m, mp = B.m, n = A.n, np = B.n;
    const long mm = m + mp;
    const long big = m * mp * mm; // q-exponent quadratic coefficient of F_j
    std::vector<ThetaProductTerm> out;
    for (long j = 0; j < mm; ++j) {
        // F_j = sum_{k in Z + x} q^{big k^2},  x = (mp n - m np + 2 j m mp) / (2 m mp (m+mp)).
        Rat x(mp * n - m * np + 2 * j * m * mp, 2 * m * mp * mm);
        // Center x into [-1/2, 1/2] so big*x^2 is the minimal exponent.
        Rat xc = frac_part(x);
        if (xc > Rat(1, 2)) xc -= Rat(1);
        Rat base = Rat(big) * xc * xc;
        QSeries F(base, order, 0);
        for (long t = -(order + 2 * big + 2); t <= order + 2 * big + 2; ++t) {
            Rat k = xc + Rat(t);
            Rat rel = Rat(big) * k * k - base;
            if (!rel.is_integer()) continue;
            if (rel.sign() < 0) continue;
            mpz_class relz = rel.to_mpz();
            if (relz > order) continue;
            F.coeff_mut(relz.get_si()) += LaurentPoly::constant(0, Rat(1));
        }
        out.push_back(ThetaProductTerm{std::move(F), ThetaLabel{n + np + 2 * m * j, mm}.canonical()});
    }
    return out;
}

} // namespace lie
