#include "lie/weight_module.hpp"

#include <algorithm>

#include "lie/characters.hpp"

namespace lie {

std::map<std::size_t, Rat> SparseOp::apply(const std::map<std::size_t, Rat>& x) const {
    std::map<std::size_t, Rat> y;
    for (const auto& [col, xc] : x) {
        for (const auto& [row, v] : cols[col]) {
            auto [it, fresh] = y.try_emplace(row, v * xc);
            if (!fresh) {
                it->second += v * xc;
                if (it->second.is_zero()) y.erase(it);
            }
        }
    }
    return y;
}

Matrix<Rat> SparseOp::dense() const {
    Matrix<Rat> m(dim(), dim());
    for (std::size_t c = 0; c < dim(); ++c)
        for (const auto& [r, v] : cols[c]) m(r, c) = v;
    return m;
}

std::map<std::vector<Rat>, std::size_t> WeightModule::weight_multiset() const {
    std::map<std::vector<Rat>, std::size_t> out;
    for (const auto& w : weights) ++out[w];
    return out;
}

Matrix<Rat> WeightModule::gram_dense() const {
    Matrix<Rat> g(dim(), dim());
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (std::size_t i = 0; i < blocks[b].size(); ++i)
            for (std::size_t j = 0; j < blocks[b].size(); ++j)
                g(blocks[b][i], blocks[b][j]) = gram_blocks[b](i, j);
    return g;
}

SparseOp WeightModule::gram_adjoint(const SparseOp& a) const {
    // <A x, y> = <x, A* y>  =>  A* = G^{-1} A^T G, solved blockwise.
    Matrix<Rat> g = gram_dense();
    Matrix<Rat> ad = a.dense();
    Matrix<Rat> m = ad.transpose() * g; // A^T G
    // Solve G X = m  giving X = G^{-1} A^T G.
    const std::size_t n = dim();
    SparseOp out(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<Rat> rhs(n);
        for (std::size_t r = 0; r < n; ++r) rhs[r] = m(r, c);
        std::vector<Rat> x;
        if (!solve(g, rhs, x))
            fail(Error::Kind::invalid_argument, "gram_adjoint: singular Gram");
        for (std::size_t r = 0; r < n; ++r) out.add(r, c, x[r]);
    }
    return out;
}

SparseOp WeightModule::raising_op(const Vec& alpha) const {
    // Simple root?
    for (std::size_t i = 0; i < rs.rank; ++i) {
        Vec ei(rs.rank, Rat(0));
        ei[i] = Rat(1);
        if (alpha == ei) return E[i];
    }
    // Find i with alpha - a_i a positive root; recurse.
    for (std::size_t i = 0; i < rs.rank; ++i) {
        Vec rest = alpha;
        rest[i] -= Rat(1);
        bool nonneg = std::all_of(rest.begin(), rest.end(), [](const Rat& c) { return c.sign() >= 0; });
        if (!nonneg || !rs.is_root(rest)) continue;
        SparseOp lower = raising_op(rest);
        // [E_i, E_rest] as sparse composition.
        SparseOp out(dim());
        for (std::size_t c = 0; c < dim(); ++c) {
            std::map<std::size_t, Rat> x{{c, Rat(1)}};
            auto a = E[i].apply(lower.apply(x));
            auto b = lower.apply(E[i].apply(x));
            for (const auto& [r, v] : a) out.add(r, c, v);
            for (const auto& [r, v] : b) out.add(r, c, -v);
        }
        return out;
    }
    fail(Error::Kind::invalid_argument, "raising_op: not a positive root");
}

Matrix<Rat> WeightModule::casimir_matrix() const {
    const std::size_t n = dim();
    Matrix<Rat> cas(n, n);
    // Cartan contribution: sum_{ij} (B^{-1})_{ij} H_i H_j with
    // B_ij = (a_i^vee, a_j^vee); H_i diagonal with <mu, a_i^vee>.
    const std::size_t r = rs.rank;
    Matrix<Rat> B(r, r);
    auto cr = rs.simple_coroots();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) B(i, j) = rs.inner(cr[i], cr[j]);
    // Invert B.
    Matrix<Rat> Binv(r, r);
    for (std::size_t c = 0; c < r; ++c) {
        std::vector<Rat> rhs(r, Rat(0));
        rhs[c] = Rat(1);
        std::vector<Rat> x;
        if (!solve(B, rhs, x)) fail(Error::Kind::invalid_argument, "degenerate coroot form");
        for (std::size_t rr = 0; rr < r; ++rr) Binv(rr, c) = x[rr];
    }
    for (std::size_t k = 0; k < n; ++k) {
        Rat v(0);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                v += Binv(i, j) * h_eigenvalue(k, i) * h_eigenvalue(k, j);
        cas(k, k) += v;
    }
    // Root contributions: for each positive root, E F + F E over the dual
    // pairing kappa = K(E_alpha, F_alpha) extracted from [E, F] acting on a
    // weight vector with (mu, alpha) != 0.
    for (const auto& alpha : rs.positive_roots) {
        SparseOp e = raising_op(alpha);
        SparseOp f = gram_adjoint(e);
        Matrix<Rat> ed = e.dense(), fd = f.dense();
        Matrix<Rat> comm = ed * fd - fd * ed;
        // kappa from any basis vector with (weight, alpha) != 0.
        Rat kappa(0);
        bool found = false;
        for (std::size_t k = 0; k < n && !found; ++k) {
            Rat pa = rs.inner(weights[k], alpha);
            if (pa.is_zero()) continue;
            kappa = comm(k, k) / pa;
            found = true;
        }
        if (!found || kappa.is_zero()) continue; // root acts trivially
        Matrix<Rat> anti = ed * fd + fd * ed;
        anti *= Rat(1) / kappa;
        cas += anti;
    }
    return cas;
}

Rat casimir_scalar(const RootSystem& rs, const Vec& lambda) {
    Vec lr = lambda + rs.rho;
    return rs.inner(lr, lr) - rs.inner(rs.rho, rs.rho);
}

WeightModule build_irrep(const RootSystem& rs, const Vec& lambda, std::size_t dim_cap) {
    // Dominance and integrality.
    for (std::size_t i = 0; i < rs.rank; ++i) {
        Rat c = rs.coroot_pairing(lambda, i);
        if (c.sign() < 0 || !c.is_integer())
            fail(Error::Kind::invalid_argument, "build_irrep: weight not dominant integral");
    }
    {
        Rat d = weyl_dimension(rs, lambda);
        if (d > Rat(static_cast<long>(dim_cap)))
            fail(Error::Kind::size_cap, "build_irrep: predicted dimension exceeds cap");
    }

    WeightModule M;
    M.rs = rs;
    M.highest_weight = lambda;
    const std::size_t r = rs.rank;
    if (r > 8) fail(Error::Kind::size_cap, "build_irrep: rank above 8 not supported");
    M.E.assign(r, SparseOp(0));
    M.F.assign(r, SparseOp(0));

    auto grow_ops = [&](std::size_t n) {
        for (auto& op : M.E) op.cols.resize(n);
        for (auto& op : M.F) op.cols.resize(n);
    };

    M.weights.push_back(lambda);
    M.level.push_back(0);
    grow_ops(1);
    M.block_weights.push_back(lambda);
    M.blocks.push_back({0});
    {
        Matrix<Rat> g(1, 1);
        g(0, 0) = Rat(1);
        M.gram_blocks.push_back(g);
    }

    // Gram lookup helper over finished blocks.
    auto pairing = [&](const std::map<std::size_t, Rat>& x,
                       const std::map<std::size_t, Rat>& y) {
        Rat s(0);
        for (const auto& [i, xi] : x)
            for (const auto& [j, yj] : y) {
                if (M.weights[i] != M.weights[j]) continue;
                // find block of weight
                for (std::size_t b = 0; b < M.block_weights.size(); ++b) {
                    if (M.block_weights[b] != M.weights[i]) continue;
                    const auto& idx = M.blocks[b];
                    std::size_t pi = idx.size(), pj = idx.size();
                    for (std::size_t t = 0; t < idx.size(); ++t) {
                        if (idx[t] == i) pi = t;
                        if (idx[t] == j) pj = t;
                    }
                    s += xi * yj * M.gram_blocks[b](pi, pj);
                    break;
                }
            }
        return s;
    };

    std::vector<std::size_t> prev_level{0};
    std::size_t depth = 0;
    while (!prev_level.empty()) {
        ++depth;
        // Candidates: (i, b) for b in prev level; group by weight.
        struct Cand {
            std::size_t i, b;          // candidate F_i applied to basis b
            std::map<std::size_t, Rat> e_img[8]; // E_j images (level depth-1 combos)
        };
        std::map<Vec, std::vector<Cand>> groups;
        for (std::size_t b : prev_level)
            for (std::size_t i = 0; i < r; ++i) {
                Cand c{i, b, {}};
                // E_j (F_i b) = F_i (E_j b) + delta_ij <wt(b), a_i^vee> b
                for (std::size_t j = 0; j < r; ++j) {
                    std::map<std::size_t, Rat> x{{b, Rat(1)}};
                    auto ejb = M.E[j].apply(x);
                    auto img = M.F[i].apply(ejb);
                    if (i == j) {
                        Rat hv = rs.coroot_pairing(M.weights[b], i);
                        auto [it, fresh] = img.try_emplace(b, hv);
                        if (!fresh) {
                            it->second += hv;
                            if (it->second.is_zero()) img.erase(it);
                        }
                    }
                    c.e_img[j] = std::move(img);
                }
                Vec w = M.weights[b];
                w[c.i] -= Rat(1); // subtract alpha_i
                groups[std::move(w)].push_back(std::move(c));
            }

        std::vector<std::size_t> new_level;
        for (auto& [mu, cands] : groups) {
            const std::size_t t = cands.size();
            // Candidate Gram via <F_i b, c'> = <b, E_i c'>.
            Matrix<Rat> G(t, t);
            for (std::size_t p = 0; p < t; ++p)
                for (std::size_t q = 0; q < t; ++q) {
                    std::map<std::size_t, Rat> bp{{cands[p].b, Rat(1)}};
                    G(p, q) = pairing(bp, cands[q].e_img[cands[p].i]);
                }
            // Select independent candidates: pivot columns of the Gram.
            Matrix<Rat> Gc = G;
            std::vector<std::size_t> piv;
            row_reduce(Gc, &piv);
            if (piv.empty()) continue;

            const std::size_t base = M.weights.size();
            grow_ops(base + piv.size());
            for (std::size_t s0 = 0; s0 < piv.size(); ++s0) {
                M.weights.push_back(mu);
                M.level.push_back(depth);
                new_level.push_back(base + s0);
            }
            if (M.weights.size() > dim_cap)
                fail(Error::Kind::size_cap, "build_irrep: dimension cap exceeded");

            // Gram block of the selected candidates.
            Matrix<Rat> Gsel = G.submatrix(piv, piv);
            M.block_weights.push_back(mu);
            std::vector<std::size_t> idx;
            for (std::size_t s0 = 0; s0 < piv.size(); ++s0) idx.push_back(base + s0);
            M.blocks.push_back(idx);
            M.gram_blocks.push_back(Gsel);

            // F action for every candidate: selected ones are unit vectors,
            // others are the Gram projection onto the selected span.
            for (std::size_t p = 0; p < t; ++p) {
                std::vector<Rat> coeff(piv.size(), Rat(0));
                bool selected = false;
                for (std::size_t s0 = 0; s0 < piv.size(); ++s0)
                    if (piv[s0] == p) {
                        coeff[s0] = Rat(1);
                        selected = true;
                        break;
                    }
                if (!selected) {
                    std::vector<Rat> rhs(piv.size());
                    for (std::size_t s0 = 0; s0 < piv.size(); ++s0) rhs[s0] = G(piv[s0], p);
                    std::vector<Rat> x;
                    if (!solve(Gsel, rhs, x))
                        fail(Error::Kind::invalid_argument, "build_irrep: singular selected Gram");
                    coeff = std::move(x);
                }
                for (std::size_t s0 = 0; s0 < piv.size(); ++s0)
                    M.F[cands[p].i].add(base + s0, cands[p].b, coeff[s0]);
            }
            // E action on the selected new basis vectors.
            for (std::size_t s0 = 0; s0 < piv.size(); ++s0) {
                const Cand& c = cands[piv[s0]];
                for (std::size_t j = 0; j < r; ++j)
                    for (const auto& [row, v] : c.e_img[j]) M.E[j].add(row, base + s0, v);
            }
        }
        prev_level = std::move(new_level);
    }

    // Cross-check against the Weyl dimension formula.
    Rat wd = weyl_dimension(rs, lambda);
    if (wd != Rat(static_cast<long>(M.dim())))
        fail(Error::Kind::invalid_argument, "build_irrep: dimension mismatch with Weyl formula");
    return M;
}

} // namespace lie
