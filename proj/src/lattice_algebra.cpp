#include "lie/lattice_algebra.hpp"

#include <algorithm>
#include <functional>

#include "lie/error.hpp"

namespace lie {

namespace {

// Enumerates all integer vectors with x^T G x = 2 for positive-definite G,
// by exact rational Cholesky plus bounded back-substitution.
std::vector<std::vector<long>> enumerate_norm2(const std::vector<std::vector<long>>& g) {
    const std::size_t n = g.size();
    Matrix<Rat> a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = Rat(g[i][j]);
    // G = L D L^T with unit lower-triangular L.
    Matrix<Rat> L = Matrix<Rat>::identity(n);
    std::vector<Rat> D(n);
    Matrix<Rat> w = a;
    for (std::size_t k = 0; k < n; ++k) {
        D[k] = w(k, k);
        if (D[k].sign() <= 0) fail(Error::Kind::invalid_argument, "lattice Gram not positive definite");
        for (std::size_t i = k + 1; i < n; ++i) {
            L(i, k) = w(i, k) / D[k];
            for (std::size_t j = k; j < n; ++j) w(i, j) -= L(i, k) * w(k, j);
        }
    }
    // x^T G x = sum_k D_k (x_k + sum_{i>k} L_ik x_i)^2; enumerate from the
    // last coordinate down.
    std::vector<std::vector<long>> out;
    std::vector<long> x(n, 0);
    std::function<void(std::size_t, Rat)> rec = [&](std::size_t kk, Rat budget) {
        // kk counts down; coordinate index k = kk-1.
        if (kk == 0) {
            if (budget.is_zero()) {
                bool nonzero = std::any_of(x.begin(), x.end(), [](long v) { return v != 0; });
                if (nonzero) out.push_back(x);
            }
            return;
        }
        std::size_t k = kk - 1;
        // center t = sum_{i>k} L_ik... note L column k entries L(i,k) for i>k
        Rat t(0);
        for (std::size_t i = k + 1; i < n; ++i) t += L(i, k) * Rat(x[i]);
        // D_k (x_k + t)^2 <= budget
        Rat bound2 = budget / D[k]; // (x_k + t)^2 <= bound2
        // conservative integer range around -t
        long lo = (-t).floor().get_si() - 2, hi = (-t).floor().get_si() + 2;
        // widen by integer sqrt bound
        mpz_class b2z = bound2.floor();
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), b2z.get_mpz_t());
        long wdt = root.get_si() + 1;
        lo -= wdt;
        hi += wdt;
        for (long v = lo; v <= hi; ++v) {
            Rat u = Rat(v) + t;
            Rat used = D[k] * u * u;
            if (used > budget) continue;
            x[k] = v;
            rec(k, budget - used);
        }
        x[k] = 0;
    };
    rec(n, Rat(2));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

LatticeAlgebra::LatticeAlgebra(std::vector<std::vector<long>> gram)
    : rank_(gram.size()), gram_(std::move(gram)) {
    for (std::size_t i = 0; i < rank_; ++i) {
        if (gram_[i].size() != rank_) fail(Error::Kind::invalid_argument, "lattice Gram not square");
        if (gram_[i][i] % 2 != 0) fail(Error::Kind::invalid_argument, "lattice not even");
        for (std::size_t j = 0; j < rank_; ++j)
            if (gram_[i][j] != gram_[j][i]) fail(Error::Kind::invalid_argument, "lattice Gram not symmetric");
    }
    phi_ = enumerate_norm2(gram_); // also rejects indefinite input
    for (std::size_t k = 0; k < phi_.size(); ++k) phi_index_[phi_[k]] = k;
    // epsilon exponent form: b(a_i,a_i) = |a_i|^2/2, b(a_i,a_j) = (a_i,a_j)
    // for i<j, 0 for i>j.
    bmat_.assign(rank_, std::vector<long>(rank_, 0));
    for (std::size_t i = 0; i < rank_; ++i) {
        bmat_[i][i] = gram_[i][i] / 2;
        for (std::size_t j = i + 1; j < rank_; ++j) bmat_[i][j] = gram_[i][j];
    }
}

long LatticeAlgebra::inner(const std::vector<long>& a, const std::vector<long>& b) const {
    long s = 0;
    for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t j = 0; j < rank_; ++j) s += a[i] * gram_[i][j] * b[j];
    return s;
}

int LatticeAlgebra::epsilon(const std::vector<long>& a, const std::vector<long>& b) const {
    long s = 0;
    for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t j = 0; j < rank_; ++j) s += a[i] * bmat_[i][j] * b[j];
    return (s % 2 + 2) % 2 == 0 ? 1 : -1;
}

std::size_t LatticeAlgebra::root_index(const std::vector<long>& a) const {
    auto it = phi_index_.find(a);
    return it == phi_index_.end() ? static_cast<std::size_t>(-1) : it->second;
}

LatticeAlgebra::Elt LatticeAlgebra::basis(std::size_t k) const {
    Elt e(dim(), Rat(0));
    e.at(k) = Rat(1);
    return e;
}

LatticeAlgebra::Elt LatticeAlgebra::bracket(const Elt& x, const Elt& y) const {
    Elt out(dim(), Rat(0));
    auto add_cartan = [&](const std::vector<long>& a, const Rat& c) {
        for (std::size_t i = 0; i < rank_; ++i) out[i] += c * Rat(a[i]);
    };
    for (std::size_t p = 0; p < dim(); ++p) {
        if (x[p].is_zero()) continue;
        for (std::size_t q = 0; q < dim(); ++q) {
            if (y[q].is_zero()) continue;
            Rat c = x[p] * y[q];
            bool ph = p < rank_, qh = q < rank_;
            if (ph && qh) continue; // [H,H'] = 0
            if (ph && !qh) {
                const auto& b = phi_[q - rank_];
                // [H_p, E_b] = (a_p, b) E_b
                long v = 0;
                for (std::size_t j = 0; j < rank_; ++j) v += gram_[p][j] * b[j];
                out[q] += c * Rat(v);
            } else if (!ph && qh) {
                const auto& a = phi_[p - rank_];
                long v = 0;
                for (std::size_t j = 0; j < rank_; ++j) v += gram_[q][j] * a[j];
                out[p] -= c * Rat(v);
            } else {
                const auto& a = phi_[p - rank_];
                const auto& b = phi_[q - rank_];
                std::vector<long> s(rank_);
                bool zero = true;
                for (std::size_t j = 0; j < rank_; ++j) {
                    s[j] = a[j] + b[j];
                    if (s[j] != 0) zero = false;
                }
                if (zero) {
                    // [E_a, E_{-a}] = -a
                    add_cartan(a, -c);
                } else {
                    std::size_t idx = root_index(s);
                    if (idx != static_cast<std::size_t>(-1))
                        out[rank_ + idx] += c * Rat(epsilon(a, b));
                }
            }
        }
    }
    return out;
}

LatticeAlgebra::Elt LatticeAlgebra::star(const Elt& x) const {
    // Conjugate-linear adjoint map: H* = H on the real Cartan coordinates,
    // E_a* = -E_{-a}; the compact form is {X : X* = -X} and
    // ad(X*) = ad(X)* holds for the stored hermitian form.
    Elt out(dim(), Rat(0));
    for (std::size_t i = 0; i < rank_; ++i) out[i] = x[i];
    for (std::size_t k = 0; k < phi_.size(); ++k) {
        if (x[rank_ + k].is_zero()) continue;
        std::vector<long> neg(rank_);
        for (std::size_t j = 0; j < rank_; ++j) neg[j] = -phi_[k][j];
        out[rank_ + root_index(neg)] = -x[rank_ + k];
    }
    return out;
}

Rat LatticeAlgebra::form(const Elt& x, const Elt& y) const {
    Rat s(0);
    for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t j = 0; j < rank_; ++j) s += x[i] * Rat(gram_[i][j]) * y[j];
    for (std::size_t k = rank_; k < dim(); ++k) s += x[k] * y[k];
    return s;
}

LatticeAlgebra::Report LatticeAlgebra::verify() const {
    Report rep;
    rep.dim = dim();
    rep.num_roots = phi_.size();
    const std::size_t d = dim();

    rep.antisymmetric = true;
    std::vector<Elt> bas(d);
    for (std::size_t k = 0; k < d; ++k) bas[k] = basis(k);
    std::vector<std::vector<Elt>> br(d, std::vector<Elt>(d));
    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q) br[p][q] = bracket(bas[p], bas[q]);
    for (std::size_t p = 0; p < d && rep.antisymmetric; ++p)
        for (std::size_t q = 0; q < d; ++q) {
            Elt s = br[p][q];
            for (std::size_t k = 0; k < d; ++k) s[k] += br[q][p][k];
            if (std::any_of(s.begin(), s.end(), [](const Rat& v) { return !v.is_zero(); })) {
                rep.antisymmetric = false;
                break;
            }
        }

    rep.jacobi = true;
    for (std::size_t p = 0; p < d && rep.jacobi; ++p)
        for (std::size_t q = p; q < d && rep.jacobi; ++q)
            for (std::size_t r = q; r < d; ++r) {
                Elt s = bracket(br[p][q], bas[r]);
                Elt t = bracket(br[q][r], bas[p]);
                Elt u = bracket(br[r][p], bas[q]);
                bool ok = true;
                for (std::size_t k = 0; k < d; ++k)
                    if (!(s[k] + t[k] + u[k]).is_zero()) { ok = false; break; }
                if (!ok) { rep.jacobi = false; break; }
            }

    // Simplicity: Phi spans V and any two roots are connected through
    // nonorthogonality.
    {
        Matrix<Rat> span(phi_.size(), rank_);
        for (std::size_t k = 0; k < phi_.size(); ++k)
            for (std::size_t j = 0; j < rank_; ++j) span(k, j) = Rat(phi_[k][j]);
        bool spans = lie::rank(span) == rank_;
        bool connected = true;
        if (!phi_.empty()) {
            std::vector<bool> seen(phi_.size(), false);
            std::vector<std::size_t> stack{0};
            seen[0] = true;
            while (!stack.empty()) {
                auto i = stack.back();
                stack.pop_back();
                for (std::size_t j = 0; j < phi_.size(); ++j)
                    if (!seen[j] && inner(phi_[i], phi_[j]) != 0) {
                        seen[j] = true;
                        stack.push_back(j);
                    }
            }
            connected = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
        } else {
            connected = false;
        }
        rep.simple = spans && connected;
    }

    // ad(X*) = ad(X)* on a sample of basis elements, w.r.t. the stored form.
    rep.star_invariance_sample = true;
    for (std::size_t p = 0; p < d && rep.star_invariance_sample; p += (d > 12 ? 5 : 1)) {
        Elt xs = star(bas[p]);
        for (std::size_t a = 0; a < d && rep.star_invariance_sample; ++a)
            for (std::size_t b = 0; b < d; ++b) {
                // (ad(X) e_a, e_b) == (e_a, ad(X*) e_b)
                Rat lhs = form(br[p][a], bas[b]);
                Rat rhs = form(bas[a], bracket(xs, bas[b]));
                if (lhs != rhs) { rep.star_invariance_sample = false; break; }
            }
    }
    return rep;
}

} // namespace lie
