#include <doctest.h>

#include <algorithm>
#include <set>

#include "lie/weyl.hpp"

using namespace lie;

TEST_CASE("Weyl group orders and longest elements") {
    struct Want {
        const char* label;
        std::size_t order, longest;
    } wants[] = {{"A1", 2, 1}, {"A2", 6, 3}, {"B2", 8, 4}, {"G2", 12, 6}, {"A3", 24, 6}};
    for (const auto& w : wants) {
        RootSystem rs = root_system(w.label);
        auto W = generate_weyl_group(rs, 4096);
        CAPTURE(w.label);
        CHECK(W.size() == w.order);
        std::size_t longest = 0;
        for (const auto& e : W) longest = std::max(longest, e.length);
        CHECK(longest == w.longest);
    }
}

TEST_CASE("max_size overflow is a typed error") {
    RootSystem rs = root_system("B2");
    CHECK_THROWS_AS(generate_weyl_group(rs, 4), Error);
}

TEST_CASE("length equals inversion count; sign is a character") {
    for (const char* label : {"A2", "B2", "G2"}) {
        RootSystem rs = root_system(label);
        auto W = generate_weyl_group(rs, 4096);
        CAPTURE(label);
        for (const auto& w : W) {
            CHECK(w.length == inversion_count(rs, w));
            CHECK(w.length == w.word.size());
            CHECK(Rat(w.sign()) == bareiss_det(w.matrix));
        }
    }
}

TEST_CASE("rho identities") {
    for (const char* label : {"A1", "A2", "B2", "G2", "A3", "B3"}) {
        RootSystem rs = root_system(label);
        CAPTURE(label);
        for (std::size_t i = 0; i < rs.rank; ++i) {
            Vec d = rs.rho - rs.simple_reflect(i, rs.rho);
            Vec ai(rs.rank, Rat(0));
            ai[i] = Rat(1);
            CHECK(d == ai);
        }
        auto W = generate_weyl_group(rs, 4096);
        for (const auto& w : W) {
            const WeylElement* winv = nullptr;
            for (const auto& u : W)
                if (u.matrix * w.matrix == Matrix<Rat>::identity(rs.rank)) {
                    winv = &u;
                    break;
                }
            REQUIRE(winv != nullptr);
            Vec sum(rs.rank, Rat(0));
            for (const auto& a : rs.positive_roots) {
                Vec im = winv->apply(a);
                bool neg = std::all_of(im.begin(), im.end(),
                                       [](const Rat& c) { return c.sign() <= 0; });
                if (neg) sum = sum + a;
            }
            CHECK(rs.rho - w.apply(rs.rho) == sum);
        }
    }
}

TEST_CASE("simple reflections permute the other positive roots") {
    for (const char* label : {"A2", "B2", "G2"}) {
        RootSystem rs = root_system(label);
        for (std::size_t i = 0; i < rs.rank; ++i) {
            Vec ai(rs.rank, Rat(0));
            ai[i] = Rat(1);
            std::set<Vec> others;
            for (const auto& a : rs.positive_roots)
                if (a != ai) others.insert(a);
            std::set<Vec> images;
            for (const auto& a : others) images.insert(rs.simple_reflect(i, a));
            CHECK(others == images);
        }
    }
}

TEST_CASE("to_dominant: examples") {
    RootSystem a1 = root_system("A1");
    Vec neg = a1.weight_from_fw({-3});
    auto [dom, sigma] = to_dominant(a1, neg);
    CHECK(dom == a1.weight_from_fw({3}));
    CHECK(sigma.apply(neg) == dom);
    CHECK(sigma.length == 1);

    RootSystem a2 = root_system("A2");
    Vec lam = a2.weight_from_fw({2, 1});
    auto [d2, s2] = to_dominant(a2, lam);
    CHECK(d2 == lam);
    CHECK(s2.length == 0);

    auto W = generate_weyl_group(a2, 64);
    for (const auto& w : W) {
        Vec x = w.apply(a2.rho);
        auto [d, s] = to_dominant(a2, x);
        CHECK(d == a2.rho);
        CHECK(s.apply(x) == a2.rho);
        if (w.length > 0) CHECK(x != a2.rho);
    }
}

TEST_CASE("orbits") {
    RootSystem a2 = root_system("A2");
    CHECK(weyl_orbit(a2, a2.fundamental_weights[0]).size() == 3);
    CHECK(weyl_orbit(a2, a2.rho).size() == 6);
    Vec zero(2, Rat(0));
    CHECK(weyl_orbit(a2, zero).size() == 1);
    std::set<Vec> orb;
    for (std::size_t i = 0; i < a2.rank; ++i) {
        Vec ai(2, Rat(0));
        ai[i] = Rat(1);
        for (const auto& v : weyl_orbit(a2, ai)) orb.insert(v);
    }
    CHECK(orb.size() == a2.roots.size());
}
