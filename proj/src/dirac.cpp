#include "lie/dirac.hpp"

#include <algorithm>

#include "lie/lattice_algebra.hpp"
#include "lie/weyl.hpp"
#include "lie/characters.hpp"

namespace lie {

namespace {

using CVec = std::vector<CRat>; // coordinates over the lattice basis H_1..H_r, E_a...

Matrix<CRat> kron(const Matrix<CRat>& a, const Matrix<CRat>& b) {
    Matrix<CRat> k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q) {
                    if (b(p, q).is_zero()) continue;
                    k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
                }
        }
    return k;
}

// Complex-linear bracket over lattice-basis coordinates.
CVec bracket_c(const LatticeAlgebra& L, const CVec& x, const CVec& y) {
    const std::size_t r = L.rank();
    const auto& phi = L.norm2_vectors();
    const std::size_t D = L.dim();
    CVec out(D, CRat(0));
    auto root_at = [&](std::size_t p) -> const std::vector<long>& { return phi[p - r]; };
    for (std::size_t p = 0; p < D; ++p) {
        if (x[p].is_zero()) continue;
        for (std::size_t q = 0; q < D; ++q) {
            if (y[q].is_zero()) continue;
            CRat c = x[p] * y[q];
            bool ph = p < r, qh = q < r;
            if (ph && qh) continue;
            if (ph != qh) {
                std::size_t root_idx = ph ? q : p;
                std::size_t cart = ph ? p : q;
                const auto& a = root_at(root_idx);
                std::vector<long> basis_vec(r, 0);
                basis_vec[cart] = 1;
                long v = L.inner(basis_vec, a);
                out[root_idx] += (ph ? c : -c) * CRat(Rat(v));
            } else {
                const auto& a = root_at(p);
                const auto& b = root_at(q);
                std::vector<long> s(r);
                bool zero = true;
                for (std::size_t j = 0; j < r; ++j) {
                    s[j] = a[j] + b[j];
                    if (s[j]) zero = false;
                }
                if (zero) {
                    for (std::size_t j = 0; j < r; ++j) out[j] -= c * CRat(Rat(a[j]));
                } else {
                    // locate s in phi
                    for (std::size_t k = 0; k < phi.size(); ++k)
                        if (phi[k] == s) {
                            out[r + k] += c * CRat(Rat(L.epsilon(a, b)));
                            break;
                        }
                }
            }
        }
    }
    return out;
}

// Complex bilinear invariant form on coordinates:
// B(H_i, H_j) = G_ij, B(E_a, E_{-a}) = -1, B(H, E) = 0.
CRat bform(const LatticeAlgebra& L, const CVec& x, const CVec& y) {
    const std::size_t r = L.rank();
    const auto& phi = L.norm2_vectors();
    CRat s(0);
    for (std::size_t i = 0; i < r; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < r; ++j) {
            if (y[j].is_zero()) continue;
            std::vector<long> ei(r, 0), ej(r, 0);
            ei[i] = 1;
            ej[j] = 1;
            s += x[i] * y[j] * CRat(Rat(L.inner(ei, ej)));
        }
    }
    for (std::size_t k = 0; k < phi.size(); ++k) {
        if (x[r + k].is_zero()) continue;
        std::vector<long> neg(phi[k].size());
        for (std::size_t j = 0; j < neg.size(); ++j) neg[j] = -phi[k][j];
        for (std::size_t l = 0; l < phi.size(); ++l)
            if (phi[l] == neg) {
                s -= x[r + k] * y[r + l];
                break;
            }
    }
    return s;
}

// Doubled real form K2 = -2 B, real on the compact frame.
Rat k2form(const LatticeAlgebra& L, const CVec& x, const CVec& y) {
    CRat v = bform(L, x, y) * CRat(Rat(-2));
    if (!v.im.is_zero()) fail(Error::Kind::invalid_argument, "k2form: non-real pairing");
    return v.re;
}

long find_four_squares(long n, long out[4]) {
    for (long a = 0; a * a <= n; ++a)
        for (long b = a; a * a + b * b <= n; ++b)
            for (long c = b; a * a + b * b + c * c <= n; ++c) {
                long rem = n - a * a - b * b - c * c;
                long d = 0;
                while (d * d < rem) ++d;
                if (d * d == rem) {
                    out[0] = a; out[1] = b; out[2] = c; out[3] = d;
                    return 4;
                }
            }
    fail(Error::Kind::invalid_argument, "four squares: impossible"); // Lagrange says never
}

} // namespace

std::vector<std::vector<Rat>> rational_isometric_embedding(const Matrix<Rat>& g) {
    const std::size_t r = g.rows();
    // Gram-Schmidt over Q: v_k = sum_{j<k} c_j v_j + w_k, where the residual
    // w_k lives in a fresh block of at most four coordinates realizing its
    // rational norm as a sum of four squares.
    std::vector<std::vector<Rat>> vecs(r);
    std::size_t width = 0;
    for (std::size_t k = 0; k < r; ++k) {
        // Solve <v_k, v_j> = g(k, j) against the already-built vectors; the
        // residual norm is g(k,k) - x.x with x the projected part.
        std::vector<Rat> rhs(k);
        for (std::size_t j = 0; j < k; ++j) rhs[j] = g(k, j);
        std::vector<Rat> c;
        if (k > 0) {
            std::vector<std::size_t> idx(k);
            for (std::size_t t = 0; t < k; ++t) idx[t] = t;
            Matrix<Rat> lead = g.submatrix(idx, idx);
            if (!solve(lead, rhs, c))
                fail(Error::Kind::invalid_argument, "embedding: singular leading block");
        }
        Rat xx(0);
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) xx += c[a] * c[b] * g(a, b);
        Rat res = g(k, k) - xx;
        if (res.sign() < 0) fail(Error::Kind::invalid_argument, "embedding: not positive definite");
        std::vector<Rat> v(width, Rat(0));
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t t = 0; t < vecs[a].size(); ++t) v[t] += c[a] * vecs[a][t];
        if (!res.is_zero()) {
            // res = p/q = (p q)/q^2; p q = a^2+b^2+c^2+d^2.
            mpz_class pq = res.num() * res.den();
            if (!pq.fits_slong_p()) fail(Error::Kind::size_cap, "embedding: residual too large");
            long sq[4];
            find_four_squares(pq.get_si(), sq);
            Rat inv_q = Rat(1) / Rat(res.den());
            for (int t = 0; t < 4; ++t) {
                if (sq[t] == 0) continue;
                v.push_back(Rat(sq[t]) * inv_q);
                ++width;
            }
        }
        vecs[k] = std::move(v);
    }
    for (auto& v : vecs) v.resize(width, Rat(0));
    // Verify exactly.
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            Rat dot(0);
            for (std::size_t t = 0; t < width; ++t) dot += vecs[i][t] * vecs[j][t];
            if (dot != g(i, j))
                fail(Error::Kind::invalid_argument, "embedding: verification failed");
        }
    return vecs;
}

bool strange_formula_check(const RootSystem& rs) {
    Rat lhs = rs.inner(rs.rho, rs.rho);
    Rat rhs = rs.dual_coxeter * Rat(static_cast<long>(rs.dim_g())) / Rat(12);
    return lhs == rhs;
}

LaurentPoly expected_kernel_character(const RootSystem& rs, const Vec& lambda) {
    auto W = generate_weyl_group(rs, 1u << 20);
    LaurentPoly out(rs.rank);
    Vec lr = lambda + rs.rho;
    for (const auto& w : W)
        out.add_term(weight_exponent(rs, w.apply(lr)), Rat(w.sign()));
    return out;
}

DiracOperator build_dirac(const std::string& label, const Vec& lambda, std::size_t dim_cap) {
    if (label != "A1" && label != "A2")
        fail(Error::Kind::unsupported,
             "build_dirac: implemented for the simply-laced rank <= 2 types A1, A2");
    DiracOperator D;
    D.rs = root_system(label);
    const RootSystem& rs = D.rs;
    const std::size_t r = rs.rank;

    // Lattice model on the simple-root basis (integral Gram for A-types).
    std::vector<std::vector<long>> gram(r, std::vector<long>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) gram[i][j] = rs.gram(i, j).to_long();
    LatticeAlgebra lat(gram);
    const auto& phi = lat.norm2_vectors();
    const std::size_t D0 = lat.dim();

    D.mod = build_irrep(rs, lambda, dim_cap);
    const std::size_t dv = D.mod.dim();
    const std::size_t p = rs.positive_roots.size();
    D.cliff_m = build_clifford(2 * p);
    D.wm_dim = D.cliff_m.sdim;

    // pi of the lattice basis elements on V.
    std::vector<Matrix<CRat>> pi(D0, Matrix<CRat>(dv, dv));
    auto to_c = [&](const Matrix<Rat>& m) {
        Matrix<CRat> out(m.rows(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = CRat(m(i, j));
        return out;
    };
    for (std::size_t j = 0; j < r; ++j) {
        Matrix<CRat> h(dv, dv);
        Vec ej(r, Rat(0));
        ej[j] = Rat(1);
        for (std::size_t k = 0; k < dv; ++k) h(k, k) = CRat(rs.inner(D.mod.weights[k], ej));
        pi[j] = std::move(h);
    }
    auto phi_index = [&](const std::vector<long>& root) {
        for (std::size_t k = 0; k < phi.size(); ++k)
            if (phi[k] == root) return k;
        fail(Error::Kind::invalid_argument, "build_dirac: root not in lattice");
    };
    auto root_to_long = [&](const Vec& a) {
        std::vector<long> v(r);
        for (std::size_t i = 0; i < r; ++i) v[i] = a[i].to_long();
        return v;
    };
    // Positive-root operators by ascending height, then negatives.
    {
        std::vector<Vec> order = rs.positive_roots; // already height-sorted
        std::vector<Matrix<CRat>> epos(order.size()), eneg(order.size());
        for (std::size_t k = 0; k < order.size(); ++k) {
            const Vec& a = order[k];
            if (rs.height(a) == Rat(1)) {
                std::size_t i = 0;
                while (a[i].is_zero()) ++i;
                epos[k] = to_c(D.mod.E[i].dense());
                eneg[k] = to_c(D.mod.F[i].dense()) * CRat(Rat(-1));
            } else {
                // split a = a_i + rest with rest a positive root
                std::size_t i = 0, krest = 0;
                bool found = false;
                for (i = 0; i < r && !found; ++i) {
                    Vec rest = a;
                    rest[i] -= Rat(1);
                    for (std::size_t t = 0; t < order.size() && !found; ++t)
                        if (order[t] == rest) {
                            krest = t;
                            found = true;
                        }
                    if (found) break;
                }
                if (!found) fail(Error::Kind::invalid_argument, "build_dirac: root chain broken");
                std::vector<long> ai(r, 0);
                ai[i] = 1;
                CRat eps(Rat(lat.epsilon(ai, root_to_long(order[krest]))));
                Vec simple(r, Rat(0));
                simple[i] = Rat(1);
                std::size_t si = i;
                Matrix<CRat> Ei = to_c(D.mod.E[si].dense());
                // pi(E_{-a_i}) = -F_i; eps(-a, -b) = eps(a, b).
                Matrix<CRat> Eni = to_c(D.mod.F[si].dense()) * CRat(Rat(-1));
                epos[k] = commutator(Ei, epos[krest]) * eps;
                eneg[k] = commutator(Eni, eneg[krest]) * eps;
            }
        }
        for (std::size_t k = 0; k < order.size(); ++k) {
            pi[r + phi_index(root_to_long(order[k]))] = epos[k];
            std::vector<long> neg = root_to_long(order[k]);
            for (auto& t : neg) t = -t;
            pi[r + phi_index(neg)] = eneg[k];
        }
    }
    // Verify the representation against the lattice structure constants.
    {
        std::vector<CVec> basis(D0);
        for (std::size_t k = 0; k < D0; ++k) {
            basis[k].assign(D0, CRat(0));
            basis[k][k] = CRat(Rat(1));
        }
        for (std::size_t a = 0; a < D0; ++a)
            for (std::size_t b = 0; b < D0; ++b) {
                CVec br = bracket_c(lat, basis[a], basis[b]);
                Matrix<CRat> expect(dv, dv);
                for (std::size_t k = 0; k < D0; ++k)
                    if (!br[k].is_zero()) expect += pi[k] * br[k];
                if (commutator(pi[a], pi[b]) != expect)
                    fail(Error::Kind::invalid_argument,
                         "build_dirac: representation violates structure constants");
            }
    }

    // Frames: m-frame Z_0..Z_{2p-1}; Cartan basis T_A = i H_A.
    std::vector<CVec> frame_m(2 * p, CVec(D0, CRat(0)));
    for (std::size_t a = 0; a < p; ++a) {
        std::vector<long> pos = root_to_long(rs.positive_roots[a]);
        std::vector<long> neg = pos;
        for (auto& t : neg) t = -t;
        std::size_t ip = r + phi_index(pos), in = r + phi_index(neg);
        frame_m[2 * a][ip] = CRat(Rat(1, 2));
        frame_m[2 * a][in] = CRat(Rat(1, 2));
        frame_m[2 * a + 1][ip] = CRat(Rat(0), Rat(1, 2));
        frame_m[2 * a + 1][in] = CRat(Rat(0), Rat(-1, 2));
    }
    std::vector<CVec> frame_t(r, CVec(D0, CRat(0)));
    for (std::size_t A = 0; A < r; ++A) frame_t[A][A] = CRat::i();

    // Sanity: m-frame orthonormal under K2.
    for (std::size_t a = 0; a < 2 * p; ++a)
        for (std::size_t b = 0; b < 2 * p; ++b)
            if (k2form(lat, frame_m[a], frame_m[b]) != Rat(a == b ? 1 : 0))
                fail(Error::Kind::invalid_argument, "build_dirac: frame not orthonormal");

    D.k2h = Matrix<Rat>(r, r);
    for (std::size_t A = 0; A < r; ++A)
        for (std::size_t B = 0; B < r; ++B) D.k2h(A, B) = k2form(lat, frame_t[A], frame_t[B]);
    D.k2h_inv = Matrix<Rat>(r, r);
    for (std::size_t c0 = 0; c0 < r; ++c0) {
        std::vector<Rat> rhs(r, Rat(0)), x;
        rhs[c0] = Rat(1);
        if (!solve(D.k2h, rhs, x)) fail(Error::Kind::invalid_argument, "build_dirac: singular k2h");
        for (std::size_t r0 = 0; r0 < r; ++r0) D.k2h_inv(r0, c0) = x[r0];
    }

    // Cartan Clifford via rational isometric embedding of k2h.
    auto emb = rational_isometric_embedding(D.k2h);
    std::size_t he = emb.empty() ? 0 : emb[0].size();
    D.cliff_h = build_clifford(he == 0 ? 1 : he);
    D.wh_dim = D.cliff_h.sdim;
    const std::size_t wm = D.wm_dim, wh = D.wh_dim, W = wm * wh;
    if (dv * W > dim_cap)
        fail(Error::Kind::size_cap, "build_dirac: total space exceeds cap");

    Matrix<CRat> Iv = Matrix<CRat>::identity(dv);
    Matrix<CRat> Im = Matrix<CRat>::identity(wm);
    Matrix<CRat> Ih = Matrix<CRat>::identity(wh);
    D.gamma_m = D.cliff_m.gamma;

    // c on W = W_m (x) W_h for x in g given by mixed-frame coordinates.
    auto ch_of_cartan = [&](std::size_t A) {
        std::vector<CRat> v(D.cliff_h.dim_v, CRat(0));
        for (std::size_t t = 0; t < he; ++t) v[t] = CRat(emb[A][t]);
        return D.cliff_h.c(v);
    };
    std::vector<Matrix<CRat>> ch_cartan(r);
    for (std::size_t A = 0; A < r; ++A) ch_cartan[A] = ch_of_cartan(A);

    auto coords_of = [&](const CVec& x) {
        // x = sum_a m_a Z_a + sum_A h_A T_A: m_a = K2(x, Z_a) may be complex
        // for complexified x, so use the bilinear -2B pairing directly.
        std::vector<CRat> mc(2 * p), hc(r);
        for (std::size_t a = 0; a < 2 * p; ++a)
            mc[a] = bform(lat, x, frame_m[a]) * CRat(Rat(-2));
        std::vector<CRat> rhs(r);
        for (std::size_t B = 0; B < r; ++B) rhs[B] = bform(lat, x, frame_t[B]) * CRat(Rat(-2));
        // hc = k2h^{-1} rhs
        for (std::size_t A = 0; A < r; ++A) {
            CRat s(0);
            for (std::size_t B = 0; B < r; ++B) s += CRat(D.k2h_inv(A, B)) * rhs[B];
            hc[A] = s;
        }
        return std::pair{mc, hc};
    };
    auto cW = [&](const CVec& x) {
        auto [mc, hc] = coords_of(x);
        Matrix<CRat> cm(wm, wm);
        for (std::size_t a = 0; a < 2 * p; ++a)
            if (!mc[a].is_zero()) cm += D.cliff_m.gen[a] * mc[a];
        Matrix<CRat> chh(wh, wh);
        for (std::size_t A = 0; A < r; ++A)
            if (!hc[A].is_zero()) chh += ch_cartan[A] * hc[A];
        return kron(cm, Ih) + kron(D.gamma_m, chh);
    };
    auto cm_only = [&](std::size_t a) { return D.cliff_m.gen[a]; };

    // s_g(X) on W: (1/4)[ sum_a c(ad X Z_a) c(Z_a)
    //                    + sum_{A,B} k2h^{-1}_{AB} c(ad X T_A) c(T_B) ].
    auto s_g = [&](const CVec& x) {
        Matrix<CRat> s(W, W);
        for (std::size_t a = 0; a < 2 * p; ++a) {
            CVec ad = bracket_c(lat, x, frame_m[a]);
            s += cW(ad) * kron(cm_only(a), Ih);
        }
        for (std::size_t A = 0; A < r; ++A) {
            CVec ad = bracket_c(lat, x, frame_t[A]);
            bool zero = std::all_of(ad.begin(), ad.end(), [](const CRat& v) { return v.is_zero(); });
            if (zero) continue;
            Matrix<CRat> cad = cW(ad);
            for (std::size_t B = 0; B < r; ++B) {
                if (D.k2h_inv(A, B).is_zero()) continue;
                s += cad * kron(D.gamma_m, ch_cartan[B]) * CRat(D.k2h_inv(A, B));
            }
        }
        return s * CRat(Rat(1, 4));
    };
    // s_m(X) on W_m alone, using the m-compression of ad X.
    auto s_m = [&](const CVec& x) {
        Matrix<CRat> s(wm, wm);
        for (std::size_t a = 0; a < 2 * p; ++a) {
            CVec ad = bracket_c(lat, x, frame_m[a]);
            // compress to m
            Matrix<CRat> cm(wm, wm);
            for (std::size_t c0 = 0; c0 < 2 * p; ++c0) {
                CRat coef = bform(lat, ad, frame_m[c0]) * CRat(Rat(-2));
                if (!coef.is_zero()) cm += D.cliff_m.gen[c0] * coef;
            }
            s += cm * D.cliff_m.gen[a];
        }
        return s * CRat(Rat(1, 4));
    };

    auto pi_of = [&](const CVec& x) {
        Matrix<CRat> m(dv, dv);
        for (std::size_t k = 0; k < D0; ++k)
            if (!x[k].is_zero()) m += pi[k] * x[k];
        return m;
    };

    // Q on V (x) W_m.
    {
        Matrix<CRat> Q(dv * wm, dv * wm);
        Matrix<CRat> Iwm = Matrix<CRat>::identity(wm);
        for (std::size_t a = 0; a < 2 * p; ++a) {
            Q += kron(pi_of(frame_m[a]), D.cliff_m.gen[a]);
            Q += kron(Iv, s_m(frame_m[a]) * D.cliff_m.gen[a]) * CRat(Rat(1, 3));
        }
        D.Q = std::move(Q);
    }
    // Q_g and Q_h on V (x) W.
    {
        Matrix<CRat> Qg(dv * W, dv * W), Qh(dv * W, dv * W), Q0(W, W);
        for (std::size_t a = 0; a < 2 * p; ++a) {
            Matrix<CRat> ca = kron(cm_only(a), Ih);
            Matrix<CRat> sa = s_g(frame_m[a]);
            Qg += kron(pi_of(frame_m[a]), ca);
            Qg += kron(Iv, sa * ca) * CRat(Rat(1, 3));
            Q0 += sa * ca;
        }
        for (std::size_t A = 0; A < r; ++A) {
            Matrix<CRat> sa = s_g(frame_t[A]);
            Matrix<CRat> sma = s_m(frame_t[A]);
            Matrix<CRat> pa = pi_of(frame_t[A]);
            for (std::size_t B = 0; B < r; ++B) {
                if (D.k2h_inv(A, B).is_zero()) continue;
                Matrix<CRat> cb = kron(D.gamma_m, ch_cartan[B]);
                CRat w(D.k2h_inv(A, B));
                Qg += kron(pa, cb) * w;
                Qg += kron(Iv, sa * cb) * (w * CRat(Rat(1, 3)));
                Q0 += sa * cb * w;
                Qh += kron(pa, cb) * w;
                Qh += kron(Iv, kron(sma, Ih) * cb) * w;
            }
        }
        D.Qg = std::move(Qg);
        D.Qh = std::move(Qh);
        D.Q0 = std::move(Q0);
    }
    // Frame data for supersymmetry-relation tests.
    for (std::size_t a = 0; a < 2 * p; ++a) {
        D.s_frame.push_back(s_g(frame_m[a]));
        D.c_frame.push_back(kron(cm_only(a), Ih));
    }
    for (std::size_t A = 0; A < r; ++A) {
        D.s_frame.push_back(s_g(frame_t[A]));
        D.c_frame.push_back(kron(D.gamma_m, ch_cartan[A]));
    }

    // W_m weights: in the exterior model used here the empty wedge is the
    // lowest vector, so the subset I carries weight -rho + sum_{a in I} a_a.
    // Parity is counted from the top vector (weight +rho even), matching the
    // convention that fixes the sign of the kernel super-character.
    D.wm_weights.resize(wm);
    D.wm_parity.resize(wm);
    for (std::size_t I = 0; I < wm; ++I) {
        Vec w = -rs.rho;
        std::size_t occupied = 0;
        for (std::size_t a = 0; a < p; ++a)
            if (I & (1u << a)) {
                w = w + rs.positive_roots[a];
                ++occupied;
            }
        D.wm_weights[I] = w;
        D.wm_parity[I] = ((p - occupied) % 2 == 0) ? 1 : -1;
    }
    return D;
}

KernelReport dirac_kernel(const DiracOperator& D) {
    const std::size_t dv = D.mod.dim(), wm = D.wm_dim;
    // Group basis states by total weight, split by parity, and count the
    // kernel of the odd-to-even / even-to-odd blocks.
    std::map<Vec, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> blocks;
    for (std::size_t k = 0; k < dv; ++k)
        for (std::size_t I = 0; I < wm; ++I) {
            Vec w = D.mod.weights[k] + D.wm_weights[I];
            std::size_t idx = k * wm + I;
            if (D.wm_parity[I] > 0) blocks[w].first.push_back(idx);
            else blocks[w].second.push_back(idx);
        }
    KernelReport rep;
    rep.super_character = LaurentPoly(D.rs.rank);
    for (const auto& [w, pair] : blocks) {
        const auto& even = pair.first;
        const auto& odd = pair.second;
        // Q maps even -> odd and odd -> even within the weight block.
        Matrix<CRat> A(odd.size(), even.size()); // Q|even
        for (std::size_t i = 0; i < odd.size(); ++i)
            for (std::size_t j = 0; j < even.size(); ++j) A(i, j) = D.Q(odd[i], even[j]);
        Matrix<CRat> B(even.size(), odd.size()); // Q|odd
        for (std::size_t i = 0; i < even.size(); ++i)
            for (std::size_t j = 0; j < odd.size(); ++j) B(i, j) = D.Q(even[i], odd[j]);
        std::size_t ke = even.size() - rank(A);
        std::size_t ko = odd.size() - rank(B);
        rep.dim += ke + ko;
        long net = static_cast<long>(ke) - static_cast<long>(ko);
        if (net != 0)
            rep.super_character.add_term(weight_exponent(D.rs, w), Rat(net));
    }
    return rep;
}

} // namespace lie
