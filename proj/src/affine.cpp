#include "lie/affine.hpp"

#include <algorithm>
#include <functional>

namespace lie {

Rat lorentzian(const RootSystem& rs, const AffineWeight& a, const AffineWeight& b) {
    return rs.inner(a.mu, b.mu) + a.k * b.level + b.k * a.level;
}

AffineWeight affine_reflect(const RootSystem& rs, const Vec& alpha, const Rat& n,
                            const AffineWeight& w) {
    Rat a2 = rs.inner(alpha, alpha);
    if (a2.sign() <= 0)
        fail(Error::Kind::invalid_argument, "affine_reflect: root must be space-like");
    AffineWeight root{alpha, n, Rat(0)};
    Rat c = Rat(2) * lorentzian(rs, w, root) / a2;
    AffineWeight out = w;
    out.mu = out.mu - c * alpha;
    out.k -= c * n;
    return out;
}

AffineWeight translate(const RootSystem& rs, const Vec& beta, const AffineWeight& w) {
    AffineWeight out = w;
    out.mu = w.mu + w.level * beta;
    out.k = w.k - rs.inner(w.mu, beta) - w.level * rs.inner(beta, beta) / Rat(2);
    return out;
}

AffineWeight AffineWeylElement::apply(const RootSystem& rs, const AffineWeight& x) const {
    AffineWeight y = x;
    y.mu = w.apply(x.mu);
    return translate(rs, beta, y);
}

AffineWeylElement affine_compose(const RootSystem& rs, const AffineWeylElement& a,
                                 const AffineWeylElement& b) {
    // (T_{b1} w1)(T_{b2} w2) = T_{b1 + w1 b2} (w1 w2)
    AffineWeylElement out;
    out.beta = a.beta + a.w.apply(b.beta);
    out.w.matrix = a.w.matrix * b.w.matrix;
    out.w.word = a.w.word;
    out.w.word.insert(out.w.word.end(), b.w.word.begin(), b.w.word.end());
    out.w.length = a.w.length + b.w.length; // witness only, not reduced
    (void)rs;
    return out;
}

AlcovePosition alcove_membership(const RootSystem& rs, const Vec& x) {
    bool boundary = false;
    for (std::size_t i = 0; i < rs.rank; ++i) {
        Vec ai(rs.rank, Rat(0));
        ai[i] = Rat(1);
        Rat v = rs.inner(x, ai);
        if (v.sign() < 0) return AlcovePosition::outside;
        if (v.is_zero()) boundary = true;
    }
    Rat t = rs.inner(x, rs.theta);
    if (t > Rat(1)) return AlcovePosition::outside;
    if (t == Rat(1)) boundary = true;
    return boundary ? AlcovePosition::wall : AlcovePosition::inside;
}

bool dominant_level_test(const RootSystem& rs, const Vec& lambda, const Rat& ell) {
    for (std::size_t i = 0; i < rs.rank; ++i) {
        Rat c = rs.coroot_pairing(lambda, i);
        if (c.sign() < 0 || !c.is_integer())
            fail(Error::Kind::invalid_argument, "dominant_level_test: lambda not dominant integral");
    }
    return rs.inner(lambda, rs.theta) <= ell;
}

Rat sl2_central_charge(long ell) { return Rat(3 * ell) / Rat(ell + 2); }

Rat sl2_conformal_weight(long ell, long two_j) {
    return Rat(two_j) * Rat(two_j + 2) / (Rat(4) * Rat(ell + 2));
}

QSeries affine_sl2_character(long ell, long two_j, long order, bool normalized) {
    if (ell < 0 || two_j < 0 || two_j > ell)
        fail(Error::Kind::invalid_argument, "affine_sl2_character: need 0 <= 2j <= l");
    QSeries num = expand_theta(ThetaLabel{two_j + 1, ell + 2}, order + 1, true) -
                  expand_theta(ThetaLabel{-(two_j + 1), ell + 2}, order + 1, true);
    QSeries den = expand_theta(ThetaLabel{1, 2}, order + 1, true) -
                  expand_theta(ThetaLabel{-1, 2}, order + 1, true);
    QSeries ch = num.divide_exact(den);
    ch = ch.truncated(std::min(ch.order(), order));
    if (!normalized) ch = ch.shift(sl2_central_charge(ell) / Rat(24));
    return ch;
}

namespace {

// floor(sqrt(x)) for a nonnegative rational, as a long.
long rat_isqrt_floor(const Rat& x) {
    mpz_class fl = x.floor();
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), fl.get_mpz_t());
    return root.get_si();
}

} // namespace

std::vector<Vec> coroot_shell(const RootSystem& rs, long order) {
    // q-exponent of e^{T_beta w rho_bar - rho_bar} equals
    //   (w rho, beta) + g |beta|^2/2 = (g/2) |beta + w rho / g|^2 - |rho|^2/(2g),
    // so contributions below the truncation have
    //   |beta|^2 <= (sqrt((2/g) order + |rho|^2/g^2) + |rho|/g)^2
    //            <= (4/g) order + 4 |rho|^2 / g^2 =: B2,
    // and each coefficient of beta over the simple coroots is bounded by
    // c_i^2 <= B2 |omega_i|^2 with (omega_i) the dual basis of the coroots.
    const std::size_t r = rs.rank;
    Rat g = rs.dual_coxeter;
    Rat rho2 = rs.inner(rs.rho, rs.rho);
    Rat B2 = Rat(4) * Rat(order) / g + Rat(4) * rho2 / (g * g);
    auto cr = rs.simple_coroots();
    Matrix<Rat> gramc(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) gramc(i, j) = rs.inner(cr[i], cr[j]);
    std::vector<long> radius(r);
    for (std::size_t i = 0; i < r; ++i) {
        // omega_i: solve gramc x = e_i; |omega_i|^2 = x_i.
        std::vector<Rat> rhs(r, Rat(0)), x;
        rhs[i] = Rat(1);
        if (!solve(gramc, rhs, x))
            fail(Error::Kind::invalid_argument, "coroot_shell: degenerate coroot form");
        radius[i] = rat_isqrt_floor(B2 * x[i]) + 1;
    }
    std::vector<Vec> out;
    std::vector<long> c(r);
    for (std::size_t i = 0; i < r; ++i) c[i] = -radius[i];
    for (;;) {
        Vec beta(r, Rat(0));
        for (std::size_t i = 0; i < r; ++i) beta = beta + Rat(c[i]) * cr[i];
        out.push_back(beta);
        std::size_t i = 0;
        while (i < r && c[i] == radius[i]) {
            c[i] = -radius[i];
            ++i;
        }
        if (i == r) break;
        ++c[i];
    }
    return out;
}

QSeries kac_denominator_product_side(const RootSystem& rs, long order) {
    const std::size_t r = rs.rank;
    QSeries s = QSeries::one(order, r);
    // prod (1-q^n)^rank
    for (long n = 1; n <= order; ++n)
        for (std::size_t t = 0; t < r; ++t) {
            QSeries f = QSeries::one(order, r);
            f.coeff_mut(n) += LaurentPoly::constant(r, Rat(-1));
            s = s * f;
        }
    // prod_{a>0} (1 - e^{-a})
    for (const auto& a : rs.positive_roots) {
        QSeries f = QSeries::one(order, r);
        LaurentPoly::Exps e(r);
        for (std::size_t i = 0; i < r; ++i) e[i] = -a[i].to_long();
        f.coeff_mut(0) += LaurentPoly::monomial(r, e, Rat(-1));
        s = s * f;
    }
    // prod_{n>=1, a in Phi} (1 - e^{a} q^n)
    for (long n = 1; n <= order; ++n)
        for (const auto& a : rs.roots) {
            QSeries f = QSeries::one(order, r);
            LaurentPoly::Exps e(r);
            for (std::size_t i = 0; i < r; ++i) e[i] = a[i].to_long();
            f.coeff_mut(n) += LaurentPoly::monomial(r, e, Rat(-1));
            s = s * f;
        }
    return s;
}

QSeries kac_denominator_sum_side(const RootSystem& rs, long order) {
    const std::size_t r = rs.rank;
    auto W = generate_weyl_group(rs, 1u << 20);
    QSeries s(Rat(0), order, r);
    AffineWeight rho_bar{rs.rho, Rat(0), rs.dual_coxeter};
    for (const auto& beta : coroot_shell(rs, order)) {
        for (const auto& w : W) {
            AffineWeight x{w.apply(rs.rho), Rat(0), rs.dual_coxeter};
            AffineWeight y = translate(rs, beta, x);
            // e^{y - rho_bar}: finite part y.mu - rho, q-exponent -(y.k).
            Rat qe = -(y.k - rho_bar.k);
            if (qe.sign() < 0)
                fail(Error::Kind::invalid_argument, "denominator: negative q-exponent");
            if (!qe.is_integer() || qe > Rat(order)) continue;
            Vec fin = y.mu - rs.rho;
            LaurentPoly::Exps e(r);
            for (std::size_t i = 0; i < r; ++i) {
                if (!fin[i].is_integer())
                    fail(Error::Kind::invalid_argument, "denominator: non-integral exponent");
                e[i] = fin[i].to_long();
            }
            s.coeff_mut(qe.to_long()) += LaurentPoly::monomial(r, e, Rat(w.sign()));
        }
    }
    return s;
}

bool kac_denominator_check(const RootSystem& rs, long order) {
    if (rs.rank > 2)
        fail(Error::Kind::unsupported, "kac_denominator_check: rank <= 2 only");
    return kac_denominator_product_side(rs, order)
        .equal_to_order(kac_denominator_sum_side(rs, order));
}

} // namespace lie
