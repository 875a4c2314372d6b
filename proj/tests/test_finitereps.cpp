#include <doctest.h>

#include <set>

#include "lie/characters.hpp"
#include "lie/weight_module.hpp"
#include "lie/weyl.hpp"

using namespace lie;

TEST_CASE("sl2 modules: the classical matrices") {
    RootSystem rs = root_system("A1");
    for (long d = 0; d <= 4; ++d) {
        WeightModule M = build_irrep(rs, rs.weight_from_fw({d}), 512);
        CAPTURE(d);
        CHECK(M.dim() == static_cast<std::size_t>(d + 1));
        // H v_j = (d - 2j) v_j ordered by level
        for (long j = 0; j <= d; ++j)
            CHECK(M.h_eigenvalue(static_cast<std::size_t>(j), 0) == Rat(d - 2 * j));
        // In the monomial basis v_j ~ F^j v_0 (no factorial), F v_j = v_{j+1}
        // and E v_j = j (d + 1 - j) v_{j-1}; the Shapovalov norms are
        // ||v_j||^2 = j! d!/(d-j)!. Check the commutation relation instead,
        // which is basis independent:
        auto E = M.E[0].dense(), F = M.F[0].dense();
        Matrix<Rat> H(M.dim(), M.dim());
        for (std::size_t k = 0; k < M.dim(); ++k) H(k, k) = M.h_eigenvalue(k, 0);
        CHECK(commutator(E, F) == H);
        CHECK(commutator(H, E) == E * Rat(2));
        CHECK(commutator(H, F) == F * Rat(-2));
        // in the factorial-normalized basis v_j = F^j v0 / j! one has
        // E v_j = (d+1-j) v_{j-1}, i.e. E F^j v0 = j(d+1-j) F^{j-1} v0.
        for (long j = 1; j <= d; ++j) {
            std::map<std::size_t, Rat> x{{static_cast<std::size_t>(j), Rat(1)}};
            auto img = M.E[0].apply(x);
            REQUIRE(img.size() == 1);
            CHECK(img.begin()->second == Rat(j) * Rat(d + 1 - j));
        }
    }
}

TEST_CASE("A2 small modules") {
    RootSystem rs = root_system("A2");
    WeightModule f = build_irrep(rs, rs.fundamental_weights[0], 64);
    CHECK(f.dim() == 3);
    WeightModule adj = build_irrep(rs, rs.rho, 64);
    CHECK(adj.dim() == 8);
    // weights of the adjoint = roots plus 0 with multiplicity 2
    auto mult = adj.weight_multiset();
    Vec zero(2, Rat(0));
    CHECK(mult.at(zero) == 2);
    for (const auto& a : rs.roots) CHECK(mult.at(a) == 1);
}

TEST_CASE("Casimir scalar values") {
    RootSystem a1 = root_system("A1");
    for (long d = 0; d <= 5; ++d)
        CHECK(casimir_scalar(a1, a1.weight_from_fw({d})) == Rat(d * d + 2 * d, 2));
    RootSystem a2 = root_system("A2");
    Vec zero(2, Rat(0));
    CHECK(casimir_scalar(a2, zero) == Rat(0));
    // adjoint module: (theta+rho)^2 - rho^2 = 2 + 2(rho,theta) = 2g
    CHECK(casimir_scalar(a2, a2.theta) == Rat(2) * a2.dual_coxeter);
}

TEST_CASE("Casimir matrix is the predicted scalar") {
    for (const char* label : {"A1", "A2", "B2"}) {
        RootSystem rs = root_system(label);
        std::vector<std::vector<long>> lams;
        if (rs.rank == 1) lams = {{1}, {3}};
        else lams = {{1, 0}, {1, 1}};
        for (const auto& lm : lams) {
            Vec lambda = rs.weight_from_fw(lm);
            WeightModule M = build_irrep(rs, lambda, 512);
            Matrix<Rat> cas = M.casimir_matrix();
            Rat want = casimir_scalar(rs, lambda);
            CAPTURE(label);
            for (std::size_t i = 0; i < M.dim(); ++i)
                for (std::size_t j = 0; j < M.dim(); ++j)
                    CHECK(cas(i, j) == (i == j ? want : Rat(0)));
        }
    }
}

TEST_CASE("Weyl character formula: sl2 and trivial cases") {
    RootSystem a1 = root_system("A1");
    for (long d = 0; d <= 5; ++d) {
        LaurentPoly ch = weyl_character(a1, a1.weight_from_fw({d}));
        CHECK(character_dimension(ch) == Rat(d + 1));
        for (long j = 0; j <= d; ++j) CHECK(ch.coeff({d - 2 * j}) == Rat(1));
    }
    RootSystem g2 = root_system("G2");
    Vec zero(2, Rat(0));
    CHECK(weyl_character(g2, zero) == LaurentPoly::constant(2, Rat(1)));
}

TEST_CASE("A2 fundamental character") {
    RootSystem rs = root_system("A2");
    LaurentPoly ch = weyl_character(rs, rs.fundamental_weights[0]);
    // e^{l1} + e^{l1 - a1} + e^{l1 - a1 - a2}
    Vec l1 = rs.fundamental_weights[0];
    Vec a1(2, Rat(0)), a2(2, Rat(0));
    a1[0] = Rat(1);
    a2[1] = Rat(1);
    CHECK(ch.coeff(weight_exponent(rs, l1)) == Rat(1));
    CHECK(ch.coeff(weight_exponent(rs, l1 - a1)) == Rat(1));
    CHECK(ch.coeff(weight_exponent(rs, l1 - a1 - a2)) == Rat(1));
    CHECK(ch.size() == 3);
}

TEST_CASE("Weyl dimension formula") {
    RootSystem a2 = root_system("A2");
    CHECK(weyl_dimension(a2, a2.rho) == Rat(8));
    Vec zero(2, Rat(0));
    CHECK(weyl_dimension(a2, zero) == Rat(1));
    // G2 with the first simple root long: lambda_1 is the adjoint weight.
    RootSystem g2 = root_system("G2");
    CHECK(g2.fundamental_weights[0] == g2.theta);
    CHECK(weyl_dimension(g2, g2.fundamental_weights[0]) == Rat(14));
    CHECK(weyl_dimension(g2, g2.fundamental_weights[1]) == Rat(7));
}

TEST_CASE("denominator formula rank <= 3") {
    for (const char* label : {"A1", "A2", "B2", "G2", "A3", "B3", "C3"})
        CHECK(weyl_denominator_check(root_system(label)));
}

TEST_CASE("sl2 Clebsch-Gordan") {
    RootSystem a1 = root_system("A1");
    for (long r = 0; r <= 3; ++r)
        for (long s = 0; s <= r; ++s) {
            auto dec = tensor_decompose(a1, a1.weight_from_fw({r}), a1.weight_from_fw({s}));
            // V_r (x) V_s = V_{r-s} + V_{r-s+2} + ... + V_{r+s}
            CHECK(dec.size() == static_cast<std::size_t>(s + 1));
            std::set<long> found;
            for (const auto& t : dec) {
                CHECK(t.multiplicity == 1);
                found.insert(weight_exponent(a1, t.highest_weight)[0]);
            }
            for (long d = r - s; d <= r + s; d += 2) CHECK(found.count(d) == 1);
        }
}

TEST_CASE("A2 tensor example") {
    RootSystem a2 = root_system("A2");
    // 3 (x) 3bar = 8 + 1
    auto dec = tensor_decompose(a2, a2.fundamental_weights[0], a2.fundamental_weights[1]);
    CHECK(dec.size() == 2);
    Rat total(0);
    for (const auto& t : dec) total += Rat(t.multiplicity) * weyl_dimension(a2, t.highest_weight);
    CHECK(total == Rat(9));
}

TEST_CASE("oracle equivalence: module weights match the character, rank <= 2, height <= 3") {
    for (const char* label : {"A1", "A2", "B2", "G2"}) {
        RootSystem rs = root_system(label);
        std::vector<std::vector<long>> lams;
        if (rs.rank == 1)
            for (long a = 0; a <= 3; ++a) lams.push_back({a});
        else
            for (long a = 0; a <= 3; ++a)
                for (long b = 0; a + b <= 3; ++b) lams.push_back({a, b});
        for (const auto& lm : lams) {
            Vec lambda = rs.weight_from_fw(lm);
            if (weyl_dimension(rs, lambda) > Rat(300)) continue;
            WeightModule M = build_irrep(rs, lambda, 300);
            LaurentPoly ch = weyl_character(rs, lambda);
            CAPTURE(label);
            auto mult = M.weight_multiset();
            Rat total(0);
            for (const auto& [w, m] : mult) {
                CHECK(ch.coeff(weight_exponent(rs, w)) == Rat(static_cast<long>(m)));
                total += Rat(static_cast<long>(m));
            }
            CHECK(total == character_dimension(ch));
            // Freudenthal: |mu + rho|^2 <= |lambda + rho|^2, equality iff mu = lambda
            for (const auto& [w, m] : mult) {
                Rat lhs = rs.inner(w + rs.rho, w + rs.rho);
                Rat rhs = rs.inner(lambda + rs.rho, lambda + rs.rho);
                CHECK(lhs <= rhs);
                if (lhs == rhs) CHECK(w == lambda);
            }
            // unitarity: Gram blocks positive definite
            for (const auto& g : M.gram_blocks) CHECK(is_positive_definite(g));
        }
    }
}

TEST_CASE("build_irrep rejects bad input") {
    RootSystem a2 = root_system("A2");
    CHECK_THROWS_AS(build_irrep(a2, a2.weight_from_fw({-1, 0}), 100), Error);
    CHECK_THROWS_AS(build_irrep(a2, a2.rho, 4), Error); // cap
}
