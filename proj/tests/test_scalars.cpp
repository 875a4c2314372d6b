#include <doctest.h>

#include "lie/gaussian.hpp"
#include "lie/laurent.hpp"
#include "lie/matrix.hpp"
#include "lie/rational.hpp"
#include "lie/sqrt2.hpp"

using namespace lie;

TEST_CASE("rationals: canonical form and parsing") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(1, -2) == Rat(-1, 2));
    CHECK(Rat(-6, -4).str() == "3/2");
    CHECK(Rat::parse("7/21") == Rat(1, 3));
    CHECK(Rat::parse("-5") == Rat(-5));
    CHECK(Rat(7).str() == "7");
    CHECK(Rat(22, 7).str() == "22/7");
    CHECK(Rat(-9, 4).floor() == -3);
    CHECK(frac_part(Rat(-9, 4)) == Rat(3, 4));
    CHECK_THROWS_AS(Rat::parse("1/0"), Error);
}

TEST_CASE("gaussian rationals: field ops") {
    CRat i = CRat::i();
    CHECK(i * i == CRat(Rat(-1)));
    CRat z(Rat(3, 2), Rat(-1, 3));
    CHECK(z * z.conj() == CRat(z.norm2()));
    CHECK((z / z) == CRat(1));
    CHECK((CRat(1) + i) * (CRat(1) - i) == CRat(2));
}

TEST_CASE("Q(sqrt2): field ops") {
    Rat2 s = Rat2::sqrt2();
    CHECK(s * s == Rat2(2));
    CHECK(Rat2::inv_sqrt2() * s == Rat2(1));
    Rat2 x(Rat(1), Rat(2));
    CHECK((x / x) == Rat2(1));
    CHECK((x * x.conj()).is_rational());
}

TEST_CASE("matrix: rank, kernel, determinant, psd") {
    Matrix<Rat> m(3, 3);
    long vals[3][3] = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = Rat(vals[i][j]);
    CHECK(bareiss_det(m) == Rat(4));
    CHECK(rank(m) == 3);
    CHECK(is_positive_definite(m));
    CHECK(is_positive_semidefinite(m));

    Matrix<Rat> s(2, 2);
    s(0, 0) = Rat(1);
    s(0, 1) = s(1, 0) = Rat(1);
    s(1, 1) = Rat(1);
    CHECK(is_positive_semidefinite(s));
    CHECK(!is_positive_definite(s));
    s(1, 1) = Rat(0);
    CHECK(!is_positive_semidefinite(s));

    Matrix<Rat> k(2, 3);
    k(0, 0) = Rat(1);
    k(0, 1) = Rat(2);
    k(0, 2) = Rat(3);
    k(1, 0) = Rat(2);
    k(1, 1) = Rat(4);
    k(1, 2) = Rat(6);
    auto basis = kernel_basis(k);
    CHECK(basis.size() == 2);
    for (const auto& v : basis) {
        auto img = k.apply(v);
        for (const auto& x : img) CHECK(x.is_zero());
    }
}

TEST_CASE("laurent: arithmetic and exact division") {
    // (z - z^{-1}) * (z + z^{-1}) = z^2 - z^{-2}
    LaurentPoly a(1), b(1);
    a.add_term({1}, Rat(1));
    a.add_term({-1}, Rat(-1));
    b.add_term({1}, Rat(1));
    b.add_term({-1}, Rat(1));
    LaurentPoly p = a * b;
    LaurentPoly want(1);
    want.add_term({2}, Rat(1));
    want.add_term({-2}, Rat(-1));
    CHECK(p == want);
    CHECK(p.divide_exact(a) == b);
    CHECK(p.divide_exact(b) == a);
    // Character of sl2 V_2: (z^3 - z^-3)/(z - z^-1) = z^2 + 1 + z^-2.
    LaurentPoly num(1);
    num.add_term({3}, Rat(1));
    num.add_term({-3}, Rat(-1));
    LaurentPoly q = num.divide_exact(a);
    CHECK(q.coeff({2}) == Rat(1));
    CHECK(q.coeff({0}) == Rat(1));
    CHECK(q.coeff({-2}) == Rat(1));
    CHECK(q.size() == 3);
    // Inexact division detected.
    LaurentPoly bad(1);
    bad.add_term({2}, Rat(1));
    CHECK_THROWS_AS(bad.divide_exact(a), Error);
    // Multivariate: (x+y)(x-y) / (x+y).
    LaurentPoly x(2), y(2);
    x.add_term({1, 0}, Rat(1));
    y.add_term({0, 1}, Rat(1));
    CHECK(((x + y) * (x - y)).divide_exact(x + y) == (x - y));
}

TEST_CASE("laurent: ring axioms on pseudo-random triples") {
    unsigned long state = 12345;
    auto next = [&]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return (state >> 33);
    };
    for (int trial = 0; trial < 20; ++trial) {
        LaurentPoly f[3] = {LaurentPoly(2), LaurentPoly(2), LaurentPoly(2)};
        for (auto& p : f)
            for (int t = 0; t < 4; ++t) {
                long e1 = static_cast<long>(next() % 7) - 3;
                long e2 = static_cast<long>(next() % 7) - 3;
                long c = static_cast<long>(next() % 9) - 4;
                p.add_term({e1, e2}, Rat(c));
            }
        CHECK((f[0] * f[1]) * f[2] == f[0] * (f[1] * f[2]));
        CHECK(f[0] * (f[1] + f[2]) == f[0] * f[1] + f[0] * f[2]);
        CHECK(f[0] * f[1] == f[1] * f[0]);
    }
}
