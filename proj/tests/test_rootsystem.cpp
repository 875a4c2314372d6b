#include <doctest.h>

#include <algorithm>

#include "lie/rootsystem.hpp"

using namespace lie;

TEST_CASE("A1: roots, rho, dual Coxeter") {
    RootSystem rs = root_system("A1");
    CHECK(rs.roots.size() == 2);
    CHECK(rs.rho == Vec{Rat(1, 2)});
    CHECK(rs.dual_coxeter == Rat(2));
    CHECK(rs.norm2(rs.theta) == Rat(2));
    CHECK(rs.inner(rs.rho, rs.rho) == Rat(1, 2));
}

TEST_CASE("A2: roots and data") {
    RootSystem rs = root_system("A2");
    CHECK(rs.roots.size() == 6);
    CHECK(rs.theta == Vec{Rat(1), Rat(1)});
    CHECK(rs.dual_coxeter == Rat(3));
    for (const auto& a : rs.roots) CHECK(rs.norm2(a) == Rat(2));
    CHECK(rs.inner(rs.rho, rs.rho) == Rat(2));
}

TEST_CASE("G2: closure from the Cartan matrix") {
    RootSystem rs = root_system("G2");
    CHECK(rs.roots.size() == 12);
    Rat longest(0), shortest(0);
    for (const auto& a : rs.roots) {
        Rat n = rs.norm2(a);
        if (longest.is_zero() || n > longest) longest = n;
        if (shortest.is_zero() || n < shortest) shortest = n;
    }
    CHECK(longest == Rat(2));
    CHECK(longest / shortest == Rat(3));
    CHECK(rs.dual_coxeter == Rat(4));
}

TEST_CASE("root system axioms across registered types") {
    for (const char* label : {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"}) {
        RootSystem rs = root_system(label);
        CAPTURE(label);
        for (const auto& a : rs.roots) {
            CHECK(rs.is_root(-a));
            for (const auto& b : rs.roots) {
                Rat n = Rat(2) * rs.inner(a, b) / rs.norm2(a);
                CHECK(n.is_integer());
                CHECK(rs.is_root(rs.reflect(a, b)));
            }
            for (const auto& b : rs.roots) {
                if (b == a || b == -a) continue;
                bool prop = true;
                Rat ratio(0);
                for (std::size_t i = 0; i < rs.rank && prop; ++i) {
                    if (a[i].is_zero() != b[i].is_zero()) prop = false;
                    else if (!a[i].is_zero()) {
                        Rat t = b[i] / a[i];
                        if (ratio.is_zero()) ratio = t;
                        else if (t != ratio) prop = false;
                    }
                }
                CHECK(!prop);
            }
        }
        for (const auto& d : rs.theta) CHECK(d >= Rat(1));
        for (std::size_t i = 0; i < rs.rank; ++i)
            CHECK(rs.coroot_pairing(rs.rho, i) == Rat(1));
        CHECK(rs.positive_roots.size() * 2 == rs.roots.size());
    }
}

TEST_CASE("extended Cartan eigen-equation sum_j m_ij d_j = 2 d_i") {
    for (const char* label : {"A2", "B3", "C2", "D4", "G2", "F4"}) {
        RootSystem rs = root_system(label);
        CAPTURE(label);
        const std::size_t r = rs.rank;
        std::vector<Rat> d(r + 1);
        d[0] = Rat(1);
        for (std::size_t i = 0; i < r; ++i) d[i + 1] = rs.theta[i];
        std::vector<Vec> simple(r + 1);
        simple[0] = -rs.theta;
        for (std::size_t i = 0; i < r; ++i) {
            Vec e(r, Rat(0));
            e[i] = Rat(1);
            simple[i + 1] = e;
        }
        for (std::size_t i = 0; i <= r; ++i) {
            Rat acc(0);
            for (std::size_t j = 0; j <= r; ++j) {
                Rat nij = Rat(2) * rs.inner(simple[i], simple[j]) / rs.norm2(simple[i]);
                Rat mij = (i == j ? Rat(2) : Rat(0)) - nij;
                acc += mij * d[j];
            }
            CHECK(acc == Rat(2) * d[i]);
        }
    }
}

TEST_CASE("non-finite type input rejected") {
    CartanMatrix c;
    c.n = {{2, -2}, {-2, 2}};
    CHECK_THROWS_AS(build_root_system(c, {Rat(2), Rat(2)}), Error);
}

TEST_CASE("inconsistent lengths rejected") {
    CartanMatrix c = cartan_by_label("B2");
    CHECK_THROWS_AS(build_root_system(c, {Rat(2), Rat(2)}), Error);
}
