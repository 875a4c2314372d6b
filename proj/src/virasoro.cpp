#include "lie/virasoro.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "lie/affine.hpp"

namespace lie {

CHPoly ch_const(Rat v) { return LaurentPoly::constant(2, std::move(v)); }
CHPoly ch_c() { return LaurentPoly::monomial(2, 0, 1); }
CHPoly ch_h() { return LaurentPoly::monomial(2, 1, 1); }

std::vector<std::vector<long>> partitions_of(long n) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    std::function<void(long, long)> rec = [&](long left, long maxpart) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (long p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    // Recursion already emits reverse-lexicographic order ([n] first).
    return out;
}

namespace {

// Formal state: partition (decreasing) -> polynomial coefficient in (c,h).
using State = std::map<std::vector<long>, CHPoly>;

void state_add(State& s, const std::vector<long>& part, const CHPoly& coeff) {
    if (coeff.is_zero()) return;
    auto [it, fresh] = s.try_emplace(part, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second.is_zero()) s.erase(it);
    }
}

class VirasoroEngine {
public:
    // L_{-k} applied to a canonical monomial, reordered into canonical form.
    State lower_mono(long k, const std::vector<long>& part) {
        auto key = std::make_pair(k, part);
        auto it = lower_memo_.find(key);
        if (it != lower_memo_.end()) return it->second;
        State out;
        if (part.empty() || k >= part.front()) {
            std::vector<long> np;
            np.push_back(k);
            np.insert(np.end(), part.begin(), part.end());
            state_add(out, np, ch_const(Rat(1)));
        } else {
            // L_{-k} L_{-m} = L_{-m} L_{-k} + (m - k) L_{-(k+m)} on the rest.
            long m = part.front();
            std::vector<long> rest(part.begin() + 1, part.end());
            for (const auto& [p2, c2] : lower_mono(k, rest))
                for (const auto& [p3, c3] : lower_mono(m, p2)) state_add(out, p3, c2 * c3);
            for (const auto& [p2, c2] : lower_mono(k + m, rest))
                state_add(out, p2, c2 * ch_const(Rat(m - k)));
        }
        lower_memo_.emplace(key, out);
        return out;
    }

    // L_n (n > 0) applied to a canonical monomial acting on the highest
    // weight vector (L_n xi = 0, L_0 xi = h xi).
    State raise_mono(long n, const std::vector<long>& part) {
        auto key = std::make_pair(n, part);
        auto it = raise_memo_.find(key);
        if (it != raise_memo_.end()) return it->second;
        State out;
        if (part.empty()) {
            // L_n xi = 0
        } else {
            long m = part.front();
            std::vector<long> rest(part.begin() + 1, part.end());
            // L_n L_{-m} = L_{-m} L_n + (n + m) L_{n - m} + delta_{n,m} (c/12)(n^3 - n)
            for (const auto& [p2, c2] : raise_mono(n, rest))
                for (const auto& [p3, c3] : lower_mono(m, p2)) state_add(out, p3, c2 * c3);
            State middle = apply(n - m, rest);
            for (const auto& [p2, c2] : middle) state_add(out, p2, c2 * ch_const(Rat(n + m)));
            if (n == m) {
                CHPoly central = ch_c() * ch_const(Rat(n * n * n - n, 12));
                state_add(out, rest, central);
            }
        }
        raise_memo_.emplace(key, out);
        return out;
    }

    State apply(long n, const std::vector<long>& part) {
        State out;
        if (n > 0) return raise_mono(n, part);
        if (n < 0) return lower_mono(-n, part);
        // L_0 on a level-|part| monomial: (h + level) * monomial.
        long level = 0;
        for (long p : part) level += p;
        state_add(out, part, ch_h() + ch_const(Rat(level)));
        return out;
    }

    State apply(long n, const State& s) {
        State out;
        for (const auto& [part, coeff] : s)
            for (const auto& [p2, c2] : apply(n, part)) state_add(out, p2, coeff * c2);
        return out;
    }

    static State identity_state(const std::vector<long>& part) {
        State s;
        s.emplace(part, ch_const(Rat(1)));
        return s;
    }

    // <L_{-mu} xi, L_{-nu} xi>: apply the parts of mu (largest first, i.e.
    // innermost adjoint factor first) to L_{-nu} xi and read the
    // xi-coefficient.
    CHPoly gram_entry(const std::vector<long>& mu, const std::vector<long>& nu) {
        State s = identity_state(nu);
        for (long part : mu) s = apply(part, s); // mu stored decreasing
        auto it = s.find({});
        return it == s.end() ? CHPoly(2) : it->second;
    }

private:
    std::map<std::pair<long, std::vector<long>>, State> lower_memo_;
    std::map<std::pair<long, std::vector<long>>, State> raise_memo_;
};

VirasoroEngine& engine() {
    static VirasoroEngine e;
    return e;
}

} // namespace

Matrix<CHPoly> gram_matrix_symbolic(long n, long cap) {
    if (n < 0) fail(Error::Kind::invalid_argument, "gram_matrix: negative level");
    if (n > cap) fail(Error::Kind::size_cap, "gram_matrix: level exceeds the configured cap");
    auto parts = partitions_of(n);
    const std::size_t d = parts.size();
    Matrix<CHPoly> g(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            CHPoly e = engine().gram_entry(parts[i], parts[j]);
            g(i, j) = e;
            g(j, i) = e;
        }
    return g;
}

Matrix<Rat> gram_matrix_at(long n, const Rat& c, const Rat& h, long cap) {
    Matrix<CHPoly> g = gram_matrix_symbolic(n, cap);
    Matrix<Rat> out(g.rows(), g.cols());
    std::vector<Rat> pt{c, h};
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) out(i, j) = g(i, j).eval(pt);
    return out;
}

CHPoly phi_pq(long p, long q) {
    // phi_{p,p} = h + (p^2 - 1)(c - 1)/24;
    // phi_{p,q} = (h - (p-q)^2/4)^2 + (h/24)(p^2+q^2-2)(c-1)
    //           + (1/576)(p^2-1)(q^2-1)(c-1)^2 + (1/48)(c-1)(p-q)^2(pq+1).
    CHPoly c = ch_c(), h = ch_h();
    CHPoly cm1 = c - ch_const(Rat(1));
    if (p == q)
        return h + cm1 * ch_const(Rat(p * p - 1, 24));
    CHPoly a = h - ch_const(Rat((p - q) * (p - q), 4));
    CHPoly out = a * a;
    out += h * cm1 * ch_const(Rat(p * p + q * q - 2, 24));
    out += cm1 * cm1 * ch_const(Rat((p * p - 1) * (q * q - 1), 576));
    out += cm1 * ch_const(Rat((p - q) * (p - q) * (p * q + 1), 48));
    return out;
}

KacDeterminant kac_determinant(long n, long cap) {
    KacDeterminant out;
    out.det = bareiss_det(gram_matrix_symbolic(n, cap));
    // C_N from the boson degeneration: the diagonal entry of the partition
    // lambda degenerates to (2h)^{#parts} prod_s m_s! s^{m_s}, so the leading
    // coefficient is prod_lambda 2^{#parts(lambda)} prod_s m_s! s^{m_s}.
    Rat cn(1);
    for (const auto& part : partitions_of(n)) {
        std::map<long, long> mult;
        for (long p : part) ++mult[p];
        Rat diag(1);
        for (const auto& [s, ms] : mult) {
            for (long t = 1; t <= ms; ++t) diag *= Rat(t);
            for (long t = 0; t < ms; ++t) diag *= Rat(s);
        }
        for (std::size_t t = 0; t < part.size(); ++t) diag *= Rat(2);
        cn *= diag;
    }
    out.leading_constant = cn;
    CHPoly f = ch_const(cn);
    auto pcount = partition_counts(n);
    for (long p = 1; p * p <= n; ++p) {
        long e = static_cast<long>(pcount[static_cast<std::size_t>(n - p * p)]);
        CHPoly base = phi_pq(p, p);
        for (long t = 0; t < e; ++t) f *= base;
    }
    for (long p = 1; p <= n; ++p)
        for (long q = 1; q < p; ++q) {
            if (p * q > n) continue;
            long e = static_cast<long>(pcount[static_cast<std::size_t>(n - p * q)]);
            CHPoly base = phi_pq(p, q);
            for (long t = 0; t < e; ++t) f *= base;
        }
    out.factored = f;
    out.identity_holds = (out.det == out.factored);
    // Cross-check C_N against the symbolic leading coefficient in h.
    long deg = 0;
    for (long rs = 1; rs <= n; ++rs) {
        long cnt = 0;
        for (long p = 1; p <= rs; ++p)
            if (rs % p == 0) ++cnt;
        deg += cnt * static_cast<long>(pcount[static_cast<std::size_t>(n - rs)]);
    }
    Rat lead = out.det.coeff({0, deg});
    if (lead != cn) out.identity_holds = false;
    return out;
}

Rat kac_determinant_at(long n, const Rat& c, const Rat& h, long cap) {
    return bareiss_det(gram_matrix_at(n, c, h, cap));
}

Rat discrete_series_c(long m) {
    if (m < 3) fail(Error::Kind::invalid_argument, "discrete_series_c: m >= 3");
    return Rat(1) - Rat(6) / (Rat(m) * Rat(m + 1));
}

Rat h_pq(long m_num, long m_den, long p, long q) {
    Rat m(m_num, m_den);
    Rat v = (m + Rat(1)) * Rat(p) - m * Rat(q);
    return (v * v - Rat(1)) / (Rat(4) * m * (m + Rat(1)));
}

std::vector<DiscreteSeriesEntry> discrete_series(long m) {
    if (m < 3) fail(Error::Kind::invalid_argument, "discrete_series: m >= 3");
    std::vector<DiscreteSeriesEntry> out;
    for (long p = 1; p <= m - 1; ++p)
        for (long q = 1; q <= p; ++q) {
            // (p,q) ~ (m-p, m+1-q): the triangle 1 <= q <= p <= m-1 already
            // holds one representative of each class; keep it.
            out.push_back({p, q, h_pq(m, 1, p, q)});
        }
    return out;
}

std::vector<BranchingTerm> gko_branching(long ell, long two_j, long order) {
    if (two_j < 0 || two_j > ell)
        fail(Error::Kind::invalid_argument, "gko_branching: need 0 <= 2j <= l");
    const long m = ell + 2;
    const long b = m * (m + 1);
    const long r = two_j + 1;
    QSeries eta = expand_eta(order);
    std::vector<BranchingTerm> out;
    for (long two_k = (two_j % 2 == 0 ? 0 : 1); two_k <= ell + 1; two_k += 2) {
        const long s = two_k + 1;
        ThetaLabel ap{r * (m + 1) - s * m, b}, am{r * (m + 1) + s * m, b};
        QSeries num = expand_theta(ap, order, false) - expand_theta(am, order, false);
        QSeries psi = num.divide_exact(eta);
        out.push_back({two_k, psi.truncated(std::min(psi.order(), order))});
    }
    return out;
}

namespace {

// Lift a 0-variable series into the 1-variable (z) coefficient ring.
QSeries lift_to_z(const QSeries& s) {
    QSeries out(s.base(), s.order(), 1);
    for (long k = 0; k <= s.order(); ++k) {
        const LaurentPoly& p = s.coeff(k);
        LaurentPoly q(1);
        for (const auto& [e, c] : p.terms()) {
            (void)e;
            q.add_term({0}, c);
        }
        out.set_coeff(k, q);
    }
    return out;
}

} // namespace

bool gko_branching_check(long ell, long two_j, long order) {
    QSeries lhs = affine_sl2_character(1, 0, order) * affine_sl2_character(ell, two_j, order);
    QSeries rhs(lhs.base(), -1, 1);
    bool first = true;
    for (const auto& term : gko_branching(ell, two_j, order)) {
        QSeries piece = lift_to_z(term.psi) * affine_sl2_character(ell + 1, term.two_k, order);
        if (first) {
            rhs = piece;
            first = false;
        } else {
            rhs = rhs + piece;
        }
    }
    return lhs.equal_to_order(rhs);
}

QSeries feigin_fuchs_character(long m, long p, long q, long order) {
    if (m < 3 || q < 1 || q > p || p > m - 1)
        fail(Error::Kind::invalid_argument, "feigin_fuchs_character: need 1 <= q <= p <= m-1");
    const long b = m * (m + 1);
    ThetaLabel ap{p * (m + 1) - q * m, b}, am{p * (m + 1) + q * m, b};
    QSeries num = expand_theta(ap, order, false) - expand_theta(am, order, false);
    QSeries ch = num.divide_exact(expand_eta(order));
    return ch.truncated(std::min(ch.order(), order));
}

FFRankReport ff_rank_check(long m, long p, long q, long n, long cap) {
    FFRankReport rep;
    Rat c = discrete_series_c(m);
    Rat h = h_pq(m, 1, p, q);
    Matrix<Rat> g = gram_matrix_at(n, c, h, cap);
    rep.gram_rank = rank(g);
    // Unnormalized character coefficient of q^{h+n}: shift by +c/24.
    QSeries ch = feigin_fuchs_character(m, p, q, n + 1).shift(c / Rat(24));
    // Leading exponent must be h.
    if (ch.base() != h) fail(Error::Kind::invalid_argument, "ff_rank_check: character base != h");
    Rat coeff = ch.coeff(n).constant_term();
    rep.coefficient = coeff.to_long();
    rep.rank_matches = (Rat(static_cast<long>(rep.gram_rank)) == coeff);
    // Section-6 bound: q^{-h} ch(q) phi(q) == 1 - q^{rs} - q^{r's'} below M.
    long rs = p * q;
    long rps = (m - p) * (m + 1 - q);
    long M = m * (m + 1) - (m + 1) * p + m * q;
    long ord = M - 1;
    QSeries chM = feigin_fuchs_character(m, p, q, ord).shift(c / Rat(24) - h); // starts at q^0
    QSeries lhs = chM * expand_euler_product(ord);
    QSeries want = QSeries::one(ord, 0);
    if (rs <= ord) want.coeff_mut(rs) += LaurentPoly::constant(0, Rat(-1));
    if (rps <= ord) want.coeff_mut(rps) += LaurentPoly::constant(0, Rat(-1));
    rep.bound_matches = lhs.equal_to_order(want);
    return rep;
}

FqsGeometry fqs_geometry(long p, long q, long n) {
    if (p < q || q < 1) fail(Error::Kind::invalid_argument, "fqs_geometry: need p >= q >= 1");
    FqsGeometry out;
    for (long r = 0; r <= n + 1; ++r)
        for (long s = 0; s <= n + 1; ++s) {
            if (r + s == 0) continue;
            if (r * s > n) continue;
            if ((r == p && s == q) || (r == q && s == p)) continue;
            // x (p-q) + (p+q)/2 = +- [x (r-s) + (r+s)/2]
            long d1 = (p - q) + (s - r);
            if (d1 != 0) {
                Rat x = Rat(r + s - p - q) / Rat(2 * d1);
                if (x.sign() > 0) out.intersections.push_back({r, s, x});
            }
            long d2 = (q - p) + (s - r);
            if (d2 != 0) {
                Rat x = Rat(r + s + p + q) / Rat(2 * d2);
                if (x.sign() > 0) out.intersections.push_back({r, s, x});
            }
        }
    std::sort(out.intersections.begin(), out.intersections.end(),
              [](const Intersection& a, const Intersection& b) {
                  if (a.x != b.x) return a.x > b.x;
                  if (a.r != b.r) return a.r < b.r;
                  return a.s < b.s;
              });
    if (out.intersections.empty())
        fail(Error::Kind::invalid_argument, "fqs_geometry: no intersections found");
    out.first = out.intersections.front();
    out.lemma_k = ((p + 1) * q > n) ? 0 : 1;
    out.lemma_x = Rat(p) + Rat(q) + Rat(out.lemma_k) - Rat(1, 2);
    long er = out.lemma_k == 0 ? q - 1 : q;
    long es = out.lemma_k == 0 ? p : p + 1;
    out.matches_lemma = (out.first.x == out.lemma_x && out.first.r == er && out.first.s == es);
    return out;
}

ExclusionReport exclusion_probe(const Rat& c, const Rat& h, long n) {
    ExclusionReport rep;
    for (long k = 1; k <= n; ++k) {
        Rat d = kac_determinant_at(k, c, h, n);
        if (d.sign() < 0) {
            rep.first_negative_level = k;
            rep.det_value = d;
            return rep;
        }
    }
    return rep;
}

} // namespace lie
