#include <doctest.h>

#include "lie/fock.hpp"

using namespace lie;

TEST_CASE("boson Fock: level dimensions are partition counts") {
    FockSpace f = build_fock(FockKind::boson, 1, 4);
    CHECK(f.level_dims() == std::vector<std::size_t>{1, 1, 2, 3, 5});
    FockSpace f2 = build_fock(FockKind::boson, 2, 4);
    CHECK(f2.level_dims() == std::vector<std::size_t>{1, 2, 5, 10, 20});
    FockSpace f0 = build_fock(FockKind::boson, 1, 0);
    CHECK(f0.dim() == 1);
}

TEST_CASE("fermion Fock: level dimensions from prod(1+q^n)") {
    FockSpace f = build_fock(FockKind::fermion, 1, 4);
    // strict partitions: 1, 1, 1, 2, 2
    CHECK(f.level_dims() == std::vector<std::size_t>{1, 1, 1, 2, 2});
    FockSpace f2 = build_fock(FockKind::fermion, 2, 3);
    // W is 2-dimensional for two fields: 2 * coefficients of prod(1+q^n)^2
    CHECK(f2.level_dims() == std::vector<std::size_t>{2, 4, 6, 12});
    CHECK_THROWS_AS(build_fock(FockKind::fermion, 3, 2), Error);
}

TEST_CASE("boson norms: ||prod A(-n)^k Omega||^2 = prod k! n^k") {
    FockSpace f = build_fock(FockKind::boson, 1, 6);
    auto g = f.gram_diagonal();
    for (std::size_t k = 0; k < f.dim(); ++k) {
        Rat want(1);
        for (const auto& [n, c] : f.bstates[k].occ[0]) {
            for (long t = 1; t <= c; ++t) want *= Rat(t);
            for (long t = 0; t < c; ++t) want *= Rat(n);
        }
        CHECK(g[k] == want);
    }
    // A(-2)^3 Omega: 3! * 2^3 = 48
    FockSpace::BosonState s;
    s.occ.assign(1, {{2, 3}});
    Rat norm(1);
    for (long t = 1; t <= 3; ++t) norm *= Rat(t);
    for (long t = 0; t < 3; ++t) norm *= Rat(2);
    CHECK(norm == Rat(48));
}

TEST_CASE("boson modes: commutation and adjoints on the safe subspace") {
    FockSpace f = build_fock(FockKind::boson, 2, 6);
    auto gram = f.gram_diagonal();
    for (long m : {1L, 2L, -1L}) {
        for (long n : {-1L, -2L, 2L}) {
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) {
                    auto A = boson_mode(f, i, m), B = boson_mode(f, j, n);
                    auto comm = A * B - B * A;
                    long safe = safe_energy(f, m, n);
                    for (std::size_t col = 0; col < f.dim(); ++col) {
                        if (f.energy_of(col) > safe) continue;
                        for (std::size_t row = 0; row < f.dim(); ++row) {
                            Rat want(0);
                            if (i == j && m + n == 0 && row == col) want = Rat(m);
                            CHECK(comm(row, col) == want);
                        }
                    }
                }
        }
    }
    // adjoint w.r.t. the diagonal Gram: <A(n)x, y> = <x, A(-n)y>
    auto A1 = boson_mode(f, 0, 1), Am1 = boson_mode(f, 0, -1);
    for (std::size_t x = 0; x < f.dim(); ++x)
        for (std::size_t y = 0; y < f.dim(); ++y) {
            if (f.energy_of(x) > 5 || f.energy_of(y) > 5) continue;
            CHECK(A1(y, x) * gram[y] == Am1(x, y) * gram[x]);
        }
}

TEST_CASE("fermion modes: anticommutation and zero modes") {
    for (std::size_t fields : {1u, 2u}) {
        FockSpace f = build_fock(FockKind::fermion, fields, 5);
        CAPTURE(fields);
        for (long m : {0L, 1L, 2L, -1L})
            for (long n : {0L, -1L, -2L, 1L})
                for (std::size_t i = 0; i < fields; ++i)
                    for (std::size_t j = 0; j < fields; ++j) {
                        auto A = fermion_mode(f, i, m), B = fermion_mode(f, j, n);
                        auto ac = A * B + B * A;
                        long safe = safe_energy(f, m, n);
                        for (std::size_t col = 0; col < f.dim(); ++col) {
                            if (f.energy_of(col) > safe) continue;
                            for (std::size_t row = 0; row < f.dim(); ++row) {
                                Rat2 want(0);
                                if (i == j && m + n == 0 && row == col) want = Rat2(1);
                                CHECK(ac(row, col) == want);
                            }
                        }
                    }
    }
}

TEST_CASE("boson ladder: D = A*A has integer spectrum and n! pairings") {
    // single mode m = 2 inside cutoff 8; xi_n = A(-2)^n Omega.
    FockSpace f = build_fock(FockKind::boson, 1, 8);
    auto up = boson_mode(f, 0, -2), down = boson_mode(f, 0, 2);
    // D/2 = A^* A / 2 counts the occupation of mode 2.
    auto D = up * down;
    for (std::size_t k = 0; k < f.dim(); ++k) {
        auto it = f.bstates[k].occ[0].find(2);
        long occ = it == f.bstates[k].occ[0].end() ? 0 : it->second;
        CHECK(D(k, k) == Rat(2 * occ));
    }
    // <xi_n, xi_n> = n! <xi_0,xi_0> with the 2-scaled pairing: norms are
    // n! 2^n, so the scaled pairing divides by 2^n.
    auto gram = f.gram_diagonal();
    FockSpace::BosonState s;
    s.occ.assign(1, {});
    for (long n = 1; n <= 4; ++n) {
        s.occ[0][2] = n;
        std::vector<long> key;
        key = {0, 2, n};
        std::size_t idx = f.index.at(key);
        Rat fact(1);
        for (long t = 1; t <= n; ++t) fact *= Rat(t);
        Rat scaled = gram[idx];
        for (long t = 0; t < n; ++t) scaled /= Rat(2);
        CHECK(scaled == fact);
    }
}

TEST_CASE("Virasoro brackets: boson examples") {
    FockSpace f = build_fock(FockKind::boson, 1, 6);
    // [L_0, A(n)] = -n A(n) on the safe subspace
    auto L0 = boson_virasoro(f, 0);
    for (long n : {1L, -1L, 2L}) {
        auto A = boson_mode(f, 0, n);
        auto comm = L0 * A - A * L0;
        auto want = A * Rat(-n);
        for (std::size_t col = 0; col < f.dim(); ++col) {
            if (f.energy_of(col) > f.cutoff - std::labs(n)) continue;
            for (std::size_t row = 0; row < f.dim(); ++row)
                CHECK(comm(row, col) == want(row, col));
        }
    }
    // m = 1, n = -1: central term 0
    auto r = verify_virasoro(f, 1, -1, 3);
    CHECK(r.pass);
    CHECK(r.measured_central == Rat(0));
    // m = 3, n = -3, M = 1: central term (1/12)(27-3) = 2
    auto r2 = verify_virasoro(f, 3, -3, 0);
    CHECK(r2.pass);
    CHECK(r2.measured_central == Rat(2));
    CHECK(r2.charge_defined);
    CHECK(r2.central_charge == Rat(1));
    // m = 2, n = -2: <[L2,L-2]Omega,Omega> = 4<L0 Omega,Omega> + 1/2
    auto r3 = verify_virasoro(f, 2, -2, 2);
    CHECK(r3.pass);
    CHECK(r3.measured_central == Rat(1, 2));
}

TEST_CASE("Virasoro brackets: boson with zero modes") {
    FockSpace f = build_fock(FockKind::boson, 1, 5, {Rat(1, 2)});
    auto L0 = boson_virasoro(f, 0);
    CHECK(L0(0, 0) == Rat(1, 8)); // mu^2/2
    auto r = verify_virasoro(f, 2, -2, 1);
    CHECK(r.pass);
    CHECK(r.measured_central == Rat(1, 2));
}

TEST_CASE("Virasoro brackets: fermion examples") {
    FockSpace f = build_fock(FockKind::fermion, 1, 6);
    // L_0 includes N/16
    auto L0 = fermion_virasoro(f, 0);
    CHECK(L0(0, 0) == Rat2(Rat(1, 16)));
    // [L_k, psi(n)] = -(n + k/2) psi(n+k)
    for (long k : {1L, 2L, -1L})
        for (long n : {1L, -1L, 0L, 2L}) {
            auto Lk = fermion_virasoro(f, k);
            auto P = fermion_mode(f, 0, n);
            auto Pk = fermion_mode(f, 0, n + k);
            auto comm = Lk * P - P * Lk;
            auto want = Pk * Rat2(Rat(-(2 * n + k), 2));
            long safe = f.cutoff - std::labs(k) - std::labs(n) - std::labs(n + k);
            for (std::size_t col = 0; col < f.dim(); ++col) {
                if (f.energy_of(col) > safe) continue;
                for (std::size_t row = 0; row < f.dim(); ++row)
                    CHECK(comm(row, col) == want(row, col));
            }
        }
    // central charge 1/2: [L2, L-2] central term (1/24)(8-2) = ... c/12 * 6
    auto r = verify_virasoro(f, 2, -2, 2);
    CHECK(r.pass);
    CHECK(r.charge_defined);
    CHECK(r.central_charge == Rat(1, 2));
}

TEST_CASE("fermion N=2: central charge 1") {
    FockSpace f = build_fock(FockKind::fermion, 2, 5);
    auto r = verify_virasoro(f, 2, -2, 1);
    CHECK(r.pass);
    CHECK(r.central_charge == Rat(1));
}

TEST_CASE("characters match closed forms") {
    FockSpace b = build_fock(FockKind::boson, 1, 8);
    QSeries ch = fock_character(b);
    QSeries want = expand_inverse_euler(8).shift(Rat(-1, 24));
    CHECK(ch.equal_to_order(want));
    CHECK(ch.base() == Rat(-1, 24));
}

TEST_CASE("truncation-violating request is a typed error") {
    FockSpace f = build_fock(FockKind::boson, 1, 4);
    CHECK_THROWS_AS(verify_virasoro(f, 2, -2, 3), Error);
}

TEST_CASE("fermion character closed form") {
    // N = 1 Ramond: q^{1/16 - 1/48} prod (1 + q^n)
    FockSpace f = build_fock(FockKind::fermion, 1, 8);
    QSeries ch = fock_character(f);
    CHECK(ch.base() == Rat(1, 16) - Rat(1, 48));
    QSeries want = QSeries::one(8, 0);
    for (long n = 1; n <= 8; ++n) {
        QSeries g = QSeries::one(8, 0);
        g.coeff_mut(n) += LaurentPoly::constant(0, Rat(1));
        want = want * g;
    }
    CHECK(ch.equal_to_order(want.shift(ch.base())));
}
