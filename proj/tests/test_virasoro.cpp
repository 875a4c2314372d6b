#include <doctest.h>

#include <algorithm>
#include <set>

#include "lie/virasoro.hpp"

using namespace lie;

TEST_CASE("partitions in reverse lexicographic order") {
    auto p2 = partitions_of(2);
    REQUIRE(p2.size() == 2);
    CHECK(p2[0] == std::vector<long>{2});
    CHECK(p2[1] == std::vector<long>{1, 1});
    auto p4 = partitions_of(4);
    CHECK(p4.size() == 5);
    CHECK(p4[0] == std::vector<long>{4});
    CHECK(p4[4] == std::vector<long>{1, 1, 1, 1});
    CHECK(partitions_of(8).size() == 22);
}

TEST_CASE("Gram matrices at low level match the printed values") {
    // det_0 = 1
    auto g0 = gram_matrix_symbolic(0);
    CHECK(g0.rows() == 1);
    CHECK(g0(0, 0) == ch_const(Rat(1)));
    // det_1 = 2h
    auto g1 = gram_matrix_symbolic(1);
    CHECK(g1(0, 0) == ch_h() * ch_const(Rat(2)));
    // level 2 in basis {L_{-2}, L_{-1}^2}:
    auto g2 = gram_matrix_symbolic(2);
    CHECK(g2(0, 0) == ch_h() * ch_const(Rat(4)) + ch_c() * ch_const(Rat(1, 2)));
    CHECK(g2(0, 1) == ch_h() * ch_const(Rat(6)));
    CHECK(g2(1, 0) == g2(0, 1));
    CHECK(g2(1, 1) == ch_h() * ch_h() * ch_const(Rat(8)) + ch_h() * ch_const(Rat(4)));
}

TEST_CASE("Kac determinant N=2 equals the printed factored form") {
    auto kd = kac_determinant(2);
    CHECK(kd.identity_holds);
    // det_2 = 2h (16h^2 + 2hc - 10h + c)
    CHPoly h = ch_h(), c = ch_c();
    CHPoly want = (h * ch_const(Rat(2))) *
                  (h * h * ch_const(Rat(16)) + h * c * ch_const(Rat(2)) +
                   h * ch_const(Rat(-10)) + c);
    CHECK(kd.det == want);
}

TEST_CASE("Kac determinant identity for N <= 5 with derived positive constant") {
    for (long n = 0; n <= 5; ++n) {
        auto kd = kac_determinant(n);
        CAPTURE(n);
        CHECK(kd.identity_holds);
        CHECK(kd.leading_constant.sign() > 0);
    }
}

TEST_CASE("determinant degree in h") {
    // degree = sum over pairs (r,s) with rs <= N of P(N - rs), which equals
    // the total number of parts over all partitions of N.
    // N = 3: pairs (1,1),(1,2),(2,1),(1,3),(3,1): P(2) + 2 P(1) + 2 P(0) = 6,
    // the part count of {(3), (2,1), (1,1,1)}.
    auto kd = kac_determinant(3);
    long deg = 0;
    for (const auto& [e, coeff] : kd.det.terms()) {
        (void)coeff;
        deg = std::max(deg, e[1]);
    }
    CHECK(deg == 6);
}

TEST_CASE("dual-path evaluation at pseudo-random points") {
    unsigned long state = 2026;
    auto next = [&]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<long>((state >> 33) % 19) - 9;
    };
    for (long n = 1; n <= 5; ++n) {
        auto kd = kac_determinant(n);
        for (int t = 0; t < 10; ++t) {
            Rat c(next(), 7), h(next(), 5);
            Rat direct = kac_determinant_at(n, c, h);
            CHECK(direct == kd.det.eval({c, h}));
            CHECK(direct == kd.factored.eval({c, h}));
        }
    }
}

TEST_CASE("h_{p,q} duality and discrete series values") {
    // h_{p,q}^{(m)} = h_{m-p, m+1-q}^{(m)}
    for (long m = 3; m <= 5; ++m)
        for (long p = 1; p < m; ++p)
            for (long q = 1; q <= p; ++q)
                CHECK(h_pq(m, 1, p, q) == h_pq(m, 1, m - p, m + 1 - q));
    CHECK(discrete_series_c(3) == Rat(1, 2));
    auto m3 = discrete_series(3);
    REQUIRE(m3.size() == 3);
    std::set<Rat> h3;
    for (const auto& e : m3) h3.insert(e.h);
    CHECK(h3 == std::set<Rat>{Rat(0), Rat(1, 16), Rat(1, 2)});
    // h_{1,1} = 0 always
    for (long m = 3; m <= 7; ++m) CHECK(h_pq(m, 1, 1, 1) == Rat(0));
    // m = 4: c = 7/10, six values; h_{3,1} = 3/2 and h_{2,1} = 7/16
    CHECK(discrete_series_c(4) == Rat(7, 10));
    auto m4 = discrete_series(4);
    CHECK(m4.size() == 6);
    CHECK(h_pq(4, 1, 3, 1) == Rat(3, 2));
    CHECK(h_pq(4, 1, 2, 1) == Rat(7, 16));
}

TEST_CASE("GKO branching: coefficients and identity") {
    // l = 1, j = 0: coset c = 1/2; psi_0 has leading exponent -c/24 + h_{1,1}
    auto terms = gko_branching(1, 0, 12);
    REQUIRE(terms.size() == 2);
    CHECK(terms[0].two_k == 0);
    CHECK(terms[0].psi.base() == Rat(-1, 48)); // h=0, c=1/2
    CHECK(terms[1].two_k == 2);
    CHECK(terms[1].psi.base() == Rat(1, 2) - Rat(1, 48));
    for (const auto& t : terms)
        for (long k = 0; k <= t.psi.order(); ++k) {
            Rat v = t.psi.coeff(k).constant_term();
            CHECK(v.is_integer());
            CHECK(v.sign() >= 0);
        }
    CHECK(gko_branching_check(1, 0, 12));
    CHECK(gko_branching_check(1, 1, 12));
    CHECK(gko_branching_check(2, 1, 10));
    CHECK(gko_branching_check(3, 2, 8));
}

TEST_CASE("Feigin-Fuchs characters and rank oracle") {
    // m=3, (1,1): vacuum of the Ising model; level-1 coefficient 0
    auto r11 = ff_rank_check(3, 1, 1, 1);
    CHECK(r11.rank_matches);
    CHECK(r11.gram_rank == 0);
    CHECK(r11.coefficient == 0);
    CHECK(r11.bound_matches);
    // m=3, (2,2): h = 1/16; ranks match for N <= 4
    for (long n = 1; n <= 4; ++n) {
        auto r = ff_rank_check(3, 2, 2, n);
        CAPTURE(n);
        CHECK(r.rank_matches);
        CHECK(r.bound_matches);
    }
    // nonnegative integer coefficients
    QSeries ch = feigin_fuchs_character(4, 3, 2, 20);
    for (long k = 0; k <= ch.order(); ++k) {
        Rat v = ch.coeff(k).constant_term();
        CHECK(v.is_integer());
        CHECK(v.sign() >= 0);
    }
}

TEST_CASE("Gram positive semidefinite on the discrete series") {
    for (long m = 3; m <= 4; ++m) {
        Rat c = discrete_series_c(m);
        for (const auto& e : discrete_series(m))
            for (long n = 1; n <= 3; ++n) {
                CAPTURE(m);
                CAPTURE(e.p);
                CAPTURE(e.q);
                CHECK(is_positive_semidefinite(gram_matrix_at(n, c, e.h)));
            }
    }
}

TEST_CASE("FQS geometry: first intersections") {
    // C^+_{2,1} at its own level: first intersection at x = 5/2 with the
    // boundary curve (0,2)
    auto g = fqs_geometry(2, 1, 2);
    CHECK(g.first.x == Rat(5, 2));
    CHECK(g.lemma_k == 0);
    CHECK(g.matches_lemma);
    // k = 1 branch: (2,2) at N = 6 meets C^-_{3,2} at x = 9/2
    auto g2 = fqs_geometry(2, 2, 6);
    CHECK(g2.lemma_k == 1);
    CHECK(g2.first.x == Rat(9, 2));
    CHECK(g2.first.r == 2);
    CHECK(g2.first.s == 3);
    CHECK(g2.matches_lemma);
    // C^+_{N,1} meets no real curve of level <= N at positive x
    for (long n = 2; n <= 6; ++n) {
        auto gg = fqs_geometry(n, 1, n);
        for (const auto& t : gg.intersections)
            if (t.r >= 1 && t.s >= 1) CHECK(t.x < gg.lemma_x);
    }
}

TEST_CASE("exclusion probe: between discrete-series points dets go negative") {
    // Points exactly on a curve C_{p,q} have det_n = 0 for n >= pq (the Kac
    // factor vanishes), so the probe samples the chord midpoint between the
    // consecutive unitary points (c^{(3)}, h^{(3)}) and (c^{(4)}, h^{(4)}).
    Rat c = (discrete_series_c(3) + discrete_series_c(4)) / Rat(2);
    Rat h = (h_pq(3, 1, 2, 1) + h_pq(4, 1, 2, 1)) / Rat(2);
    CHECK(c == Rat(3, 5));
    CHECK(h == Rat(15, 32));
    auto rep = exclusion_probe(c, h, 6);
    REQUIRE(rep.first_negative_level.has_value());
    CHECK(*rep.first_negative_level <= 2 * 1 + 2);
    CHECK(rep.det_value.sign() < 0);
    // on the discrete series nothing is negative
    auto ok = exclusion_probe(discrete_series_c(3), Rat(1, 16), 6);
    CHECK(!ok.first_negative_level.has_value());
    // exactly on the curve between unitary points: all determinant signs
    // degenerate to zero, the probe stays honest and reports inconclusive
    Rat cm = Rat(1) - Rat(6) / (Rat(7, 2) * Rat(9, 2));
    Rat hm = h_pq(7, 2, 2, 1);
    auto on_curve = exclusion_probe(cm, hm, 5);
    CHECK(!on_curve.first_negative_level.has_value());
}
