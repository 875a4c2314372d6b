#include "lie/fock.hpp"

#include "lie/sparse.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <type_traits>

namespace lie {

namespace {

std::vector<long> boson_key(const FockSpace::BosonState& s) {
    std::vector<long> k;
    for (std::size_t f = 0; f < s.occ.size(); ++f)
        for (const auto& [n, c] : s.occ[f]) {
            k.push_back(static_cast<long>(f));
            k.push_back(n);
            k.push_back(c);
        }
    return k;
}

std::vector<long> fermion_key(const FockSpace::FermionState& s) {
    std::vector<long> k{static_cast<long>(s.zm)};
    for (std::size_t f = 0; f < s.occ.size(); ++f)
        for (long n : s.occ[f]) {
            k.push_back(static_cast<long>(f));
            k.push_back(n);
        }
    return k;
}

} // namespace

std::vector<std::size_t> FockSpace::level_dims() const {
    std::vector<std::size_t> d(static_cast<std::size_t>(cutoff) + 1, 0);
    for (std::size_t k = 0; k < dim(); ++k) ++d[static_cast<std::size_t>(energy_of(k))];
    return d;
}

std::vector<Rat> FockSpace::gram_diagonal() const {
    std::vector<Rat> g(dim(), Rat(1));
    if (kind == FockKind::boson)
        for (std::size_t k = 0; k < dim(); ++k) {
            Rat v(1);
            for (const auto& occ : bstates[k].occ)
                for (const auto& [n, c] : occ) {
                    for (long t = 1; t <= c; ++t) v *= Rat(t); // k!
                    for (long t = 0; t < c; ++t) v *= Rat(n);  // n^k
                }
            g[k] = v;
        }
    return g;
}

FockSpace build_fock(FockKind kind, std::size_t fields, long cutoff, std::vector<Rat> mu) {
    if (cutoff < 0) fail(Error::Kind::invalid_argument, "build_fock: cutoff >= 0");
    if (fields == 0) fail(Error::Kind::invalid_argument, "build_fock: need at least one field");
    FockSpace F;
    F.kind = kind;
    F.fields = fields;
    F.cutoff = cutoff;
    if (kind == FockKind::boson) {
        if (mu.empty()) mu.assign(fields, Rat(0));
        if (mu.size() != fields) fail(Error::Kind::invalid_argument, "build_fock: mu arity");
        F.mu = std::move(mu);
        // Enumerate multi-partitions with total energy <= cutoff.
        FockSpace::BosonState cur;
        cur.occ.assign(fields, {});
        std::function<void(std::size_t, long, long)> rec = [&](std::size_t f, long minmode, long left) {
            F.bstates.push_back(cur);
            F.bstates.back().energy = cutoff - left;
            for (std::size_t g0 = f; g0 < fields; ++g0) {
                long start = (g0 == f) ? minmode : 1;
                for (long n = start; n <= left; ++n) {
                    ++cur.occ[g0][n];
                    rec(g0, n, left - n);
                    if (--cur.occ[g0][n] == 0) cur.occ[g0].erase(n);
                }
            }
        };
        rec(0, 1, cutoff);
        // Deduplicate: the recursion above can revisit (field, mode) paths;
        // rebuild through the canonical index map.
        std::vector<FockSpace::BosonState> uniq;
        for (auto& s : F.bstates) {
            auto key = boson_key(s);
            if (F.index.emplace(key, uniq.size()).second) uniq.push_back(std::move(s));
        }
        F.bstates = std::move(uniq);
        std::sort(F.bstates.begin(), F.bstates.end(),
                  [](const auto& a, const auto& b) {
                      if (a.energy != b.energy) return a.energy < b.energy;
                      return boson_key(a) < boson_key(b);
                  });
        F.index.clear();
        for (std::size_t k = 0; k < F.bstates.size(); ++k) F.index[boson_key(F.bstates[k])] = k;
    } else {
        if (fields > 2)
            fail(Error::Kind::unsupported,
                 "build_fock: fermion zero modes implemented for one or two fields");
        F.zm_dim = fields == 1 ? 1 : 2;
        if (fields == 1) {
            Matrix<Rat> c1(1, 1);
            c1(0, 0) = Rat(1);
            F.zm_clifford = {c1};
        } else {
            Matrix<Rat> c1(2, 2), c2(2, 2);
            c1(0, 0) = Rat(1);
            c1(1, 1) = Rat(-1);
            c2(0, 1) = Rat(1);
            c2(1, 0) = Rat(1);
            F.zm_clifford = {c1, c2};
        }
        // Strict subsets of modes per field, energy <= cutoff, tensor zm.
        std::vector<FockSpace::FermionState> partial;
        FockSpace::FermionState cur;
        cur.occ.assign(fields, {});
        std::function<void(std::size_t, long, long)> rec = [&](std::size_t f, long minmode, long left) {
            partial.push_back(cur);
            partial.back().energy = cutoff - left;
            for (std::size_t g0 = f; g0 < fields; ++g0) {
                long start = (g0 == f) ? minmode : 1;
                for (long n = start; n <= left; ++n) {
                    if (cur.occ[g0].count(n)) continue;
                    cur.occ[g0].insert(n);
                    rec(g0, n + 1, left - n);
                    cur.occ[g0].erase(n);
                }
            }
        };
        rec(0, 1, cutoff);
        for (auto& s : partial)
            for (std::size_t z = 0; z < F.zm_dim; ++z) {
                FockSpace::FermionState t = s;
                t.zm = z;
                F.fstates.push_back(std::move(t));
            }
        std::sort(F.fstates.begin(), F.fstates.end(),
                  [](const auto& a, const auto& b) {
                      if (a.energy != b.energy) return a.energy < b.energy;
                      return fermion_key(a) < fermion_key(b);
                  });
        // Dedup guard (the recursion is already canonical for sets).
        std::vector<FockSpace::FermionState> uniq;
        for (auto& s : F.fstates) {
            auto key = fermion_key(s);
            if (F.index.emplace(key, uniq.size()).second) uniq.push_back(std::move(s));
        }
        F.fstates = std::move(uniq);
        F.index.clear();
        for (std::size_t k = 0; k < F.fstates.size(); ++k) F.index[fermion_key(F.fstates[k])] = k;
    }
    return F;
}

namespace {

SparseMat<Rat> boson_mode_sparse(const FockSpace& F, std::size_t field, long n) {
    if (F.kind != FockKind::boson) fail(Error::Kind::invalid_argument, "boson_mode: wrong kind");
    const std::size_t d = F.dim();
    SparseMat<Rat> m(d);
    if (n == 0) {
        for (std::size_t k = 0; k < d; ++k) m.add(k, k, F.mu[field]);
        return m;
    }
    for (std::size_t k = 0; k < d; ++k) {
        FockSpace::BosonState s = F.bstates[k];
        if (n < 0) {
            // creation: multiply by z_{field,-n}
            long mode = -n;
            if (s.energy + mode > F.cutoff) continue;
            ++s.occ[field][mode];
            s.energy += mode;
            m.add(F.index.at(boson_key(s)), k, Rat(1));
        } else {
            // annihilation: n * d/dz
            auto it = s.occ[field].find(n);
            if (it == s.occ[field].end()) continue;
            long count = it->second;
            if (--it->second == 0) s.occ[field].erase(it);
            s.energy -= n;
            m.add(F.index.at(boson_key(s)), k, Rat(n) * Rat(count));
        }
    }
    return m;
}

} // namespace

Matrix<Rat> boson_mode(const FockSpace& F, std::size_t field, long n) {
    return boson_mode_sparse(F, field, n).dense();
}

namespace {

SparseMat<Rat2> fermion_mode_sparse(const FockSpace& F, std::size_t field, long n) {
    if (F.kind != FockKind::fermion) fail(Error::Kind::invalid_argument, "fermion_mode: wrong kind");
    const std::size_t d = F.dim();
    SparseMat<Rat2> m(d);
    auto parity_before = [&](const FockSpace::FermionState& s, std::size_t f0, long mode) {
        // occupied (field, mode) pairs ordered by (field, mode); count those
        // strictly before (f0, mode).
        long cnt = 0;
        for (std::size_t f = 0; f < s.occ.size(); ++f)
            for (long t : s.occ[f]) {
                if (f < f0 || (f == f0 && t < mode)) ++cnt;
            }
        return cnt % 2 == 0 ? 1 : -1;
    };
    for (std::size_t k = 0; k < d; ++k) {
        FockSpace::FermionState s = F.fstates[k];
        if (n == 0) {
            // psi(0) = c_field / sqrt(2) acting on the zero-mode factor,
            // with the graded sign past all nonzero-mode fermions.
            long total = 0;
            for (const auto& o : s.occ) total += static_cast<long>(o.size());
            Rat2 sgn = (total % 2 == 0) ? Rat2(1) : Rat2(-1);
            const Matrix<Rat>& c = F.zm_clifford[field];
            for (std::size_t z = 0; z < F.zm_dim; ++z) {
                if (c(z, s.zm).is_zero()) continue;
                FockSpace::FermionState t = s;
                t.zm = z;
                m.add(F.index.at(fermion_key(t)), k, sgn * Rat2::inv_sqrt2() * Rat2(c(z, s.zm)));
            }
        } else if (n < 0) {
            long mode = -n;
            if (s.occ[field].count(mode)) continue;
            if (s.energy + mode > F.cutoff) continue;
            int sgn = parity_before(s, field, mode);
            s.occ[field].insert(mode);
            s.energy += mode;
            m.add(F.index.at(fermion_key(s)), k, Rat2(Rat(sgn)));
        } else {
            if (!s.occ[field].count(n)) continue;
            int sgn = parity_before(s, field, n);
            s.occ[field].erase(n);
            s.energy -= n;
            m.add(F.index.at(fermion_key(s)), k, Rat2(Rat(sgn)));
        }
    }
    return m;
}

} // namespace

Matrix<Rat2> fermion_mode(const FockSpace& F, std::size_t field, long n) {
    return fermion_mode_sparse(F, field, n).dense();
}

namespace {

SparseMat<Rat> boson_virasoro_sparse(const FockSpace& F, long m) {
    const std::size_t d = F.dim();
    SparseMat<Rat> L(d);
    if (m == 0) {
        Rat zero_part(0);
        for (const auto& mu : F.mu) zero_part += mu * mu / Rat(2);
        for (std::size_t k = 0; k < d; ++k) L.add(k, k, zero_part + Rat(F.bstates[k].energy));
        return L;
    }
    if (std::labs(m) > F.cutoff) fail(Error::Kind::truncation, "boson_virasoro: |m| beyond cutoff");
    for (std::size_t i = 0; i < F.fields; ++i) {
        for (long j = -(F.cutoff + std::labs(m)); j <= F.cutoff + std::labs(m); ++j) {
            long a = -j, b = j + m;
            // normal order: creation (negative) left of annihilation
            if (a > 0 && b < 0) std::swap(a, b); // [A(a),A(b)] = 0 since a+b = m != 0
            SparseMat<Rat> term = boson_mode_sparse(F, i, a) * boson_mode_sparse(F, i, b);
            term *= Rat(1, 2);
            L += term;
        }
    }
    return L;
}

} // namespace

Matrix<Rat> boson_virasoro(const FockSpace& F, long m) {
    return boson_virasoro_sparse(F, m).dense();
}

namespace {

SparseMat<Rat2> fermion_virasoro_sparse(const FockSpace& F, long m) {
    const std::size_t d = F.dim();
    SparseMat<Rat2> L(d);
    if (m == 0) {
        Rat2 zero_part(Rat(static_cast<long>(F.fields), 16));
        for (std::size_t k = 0; k < d; ++k) L.add(k, k, zero_part + Rat2(Rat(F.fstates[k].energy)));
        return L;
    }
    if (std::labs(m) > F.cutoff) fail(Error::Kind::truncation, "fermion_virasoro: |m| beyond cutoff");
    for (std::size_t i = 0; i < F.fields; ++i) {
        for (long j = -(F.cutoff + std::labs(m)); j <= F.cutoff + std::labs(m); ++j) {
            if (j == 0) continue; // coefficient j/2 vanishes
            long a = -j, b = j + m;
            Rat coeff(j, 2);
            // normal order: creation < zero mode < annihilation; swapping
            // any distinct anticommuting pair (a + b = m != 0) costs a sign.
            auto rank_of = [](long x) { return x < 0 ? 0 : (x == 0 ? 1 : 2); };
            if (rank_of(a) > rank_of(b)) {
                std::swap(a, b);
                coeff = -coeff;
            }
            SparseMat<Rat2> term = fermion_mode_sparse(F, i, a) * fermion_mode_sparse(F, i, b);
            term *= Rat2(coeff);
            L += term;
        }
    }
    return L;
}

} // namespace

Matrix<Rat2> fermion_virasoro(const FockSpace& F, long m) {
    return fermion_virasoro_sparse(F, m).dense();
}

long safe_energy(const FockSpace& F, long m, long n) {
    long lo = std::min({0L, m, n, m + n});
    return F.cutoff + lo;
}

VirasoroCheck verify_virasoro(const FockSpace& F, long m, long n, long depth) {
    if (depth + std::labs(m) + std::labs(n) > F.cutoff)
        fail(Error::Kind::truncation, "verify_virasoro: depth + |m| + |n| must be <= cutoff");
    VirasoroCheck rep;
    Rat c = F.kind == FockKind::boson ? Rat(static_cast<long>(F.fields))
                                      : Rat(static_cast<long>(F.fields), 2);
    rep.expected_central = (m + n == 0) ? c * Rat(m * m * m - m) / Rat(12) : Rat(0);

    auto run = [&](auto mode_virasoro) {
        auto Lm = mode_virasoro(F, m);
        using TT = std::decay_t<decltype(Lm.at(0, 0))>;
        auto Ln = mode_virasoro(F, n);
        auto Lmn = mode_virasoro(F, m + n);
        auto comm = Lm * Ln;
        comm -= Ln * Lm;
        auto rhs = Lmn;
        rhs *= TT(Rat(m - n));
        // Measured central term from the vacuum column (lowest-energy state
        // comes first after sorting).
        std::size_t vac = 0;
        TT measured = comm.at(vac, vac) - rhs.at(vac, vac);
        // Compare columns of states with energy <= depth.
        bool pass = true;
        for (std::size_t k = 0; k < F.dim() && pass; ++k) {
            if (F.energy_of(k) > depth) continue;
            ++rep.subspace_dim;
            auto want_col = rhs.cols[k];
            if (m + n == 0 && !rep.expected_central.is_zero()) {
                auto [it, fresh] = want_col.try_emplace(k, TT(rep.expected_central));
                if (!fresh) {
                    it->second += TT(rep.expected_central);
                    if (it->second.is_zero()) want_col.erase(it);
                }
            }
            if (comm.cols[k] != want_col) pass = false;
        }
        rep.pass = pass;
        return measured;
    };

    if (F.kind == FockKind::boson) {
        Rat measured = run([](const FockSpace& f, long k) { return boson_virasoro_sparse(f, k); });
        rep.measured_central = measured;
    } else {
        Rat2 measured = run([](const FockSpace& f, long k) { return fermion_virasoro_sparse(f, k); });
        if (!measured.is_rational())
            fail(Error::Kind::invalid_argument, "verify_virasoro: irrational central term");
        rep.measured_central = measured.a;
    }
    if (m + n == 0 && m * m * m - m != 0) {
        rep.central_charge = rep.measured_central * Rat(12) / Rat(m * m * m - m);
        rep.charge_defined = true;
    }
    return rep;
}

QSeries fock_character(const FockSpace& F) {
    Rat c = F.kind == FockKind::boson ? Rat(static_cast<long>(F.fields))
                                      : Rat(static_cast<long>(F.fields), 2);
    Rat h0 = F.kind == FockKind::boson ? Rat(0) : Rat(static_cast<long>(F.fields), 16);
    QSeries s(h0 - c / Rat(24), F.cutoff, 0);
    auto d = F.level_dims();
    for (long k = 0; k <= F.cutoff; ++k)
        s.set_coeff(k, LaurentPoly::constant(0, Rat(static_cast<long>(d[static_cast<std::size_t>(k)]))));
    return s;
}

} // namespace lie
