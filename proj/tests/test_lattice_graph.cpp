#include <doctest.h>

#include "lie/graph_classify.hpp"
#include "lie/lattice_algebra.hpp"
#include "lie/rootsystem.hpp"

using namespace lie;

namespace {

std::vector<std::vector<long>> root_lattice_gram(const char* label) {
    RootSystem rs = root_system(label);
    std::vector<std::vector<long>> g(rs.rank, std::vector<long>(rs.rank));
    for (std::size_t i = 0; i < rs.rank; ++i)
        for (std::size_t j = 0; j < rs.rank; ++j) g[i][j] = rs.gram(i, j).to_long();
    return g;
}

} // namespace

TEST_CASE("lattice algebra: A1 is sl2") {
    std::vector<std::vector<long>> g_a1{{2}};
    LatticeAlgebra L(g_a1);
    CHECK(L.norm2_vectors().size() == 2);
    CHECK(L.dim() == 3);
    auto rep = L.verify();
    CHECK(rep.antisymmetric);
    CHECK(rep.jacobi);
    CHECK(rep.simple);
    CHECK(rep.star_invariance_sample);
}

TEST_CASE("lattice algebra: A2 root lattice gives the 8-dimensional simple algebra") {
    LatticeAlgebra L(root_lattice_gram("A2"));
    CHECK(L.dim() == 8);
    auto rep = L.verify();
    CHECK(rep.jacobi);
    CHECK(rep.simple);
}

TEST_CASE("lattice algebra: D4 root lattice") {
    LatticeAlgebra L(root_lattice_gram("D4"));
    CHECK(L.norm2_vectors().size() == 24);
    CHECK(L.dim() == 28);
    auto rep = L.verify();
    CHECK(rep.antisymmetric);
    CHECK(rep.jacobi);
    CHECK(rep.simple);
}

TEST_CASE("lattice algebra: epsilon bilinear identities") {
    LatticeAlgebra L(root_lattice_gram("A2"));
    const auto& phi = L.norm2_vectors();
    for (const auto& a : phi)
        for (const auto& b : phi) {
            long ip = L.inner(a, b);
            int lhs = L.epsilon(a, b) * L.epsilon(b, a);
            int rhs = (ip % 2 + 2) % 2 == 0 ? 1 : -1;
            CHECK(lhs == rhs);
        }
    for (const auto& a : phi) {
        int want = (L.inner(a, a) / 2) % 2 == 0 ? 1 : -1;
        CHECK(L.epsilon(a, a) == want);
    }
}

TEST_CASE("lattice algebra: invalid input rejected") {
    std::vector<std::vector<long>> odd{{1}}, indef{{-2}}, nonsym{{2, 0}, {1, 2}};
    CHECK_THROWS_AS(LatticeAlgebra{odd}, Error);
    CHECK_THROWS_AS(LatticeAlgebra{indef}, Error);
    CHECK_THROWS_AS(LatticeAlgebra{nonsym}, Error);
}

TEST_CASE("dim g - rank matches |Phi| for A and D types") {
    for (const char* label : {"A1", "A2", "A3", "D4"}) {
        RootSystem rs = root_system(label);
        LatticeAlgebra L(root_lattice_gram(label));
        CHECK(L.norm2_vectors().size() == rs.roots.size());
        CHECK(L.dim() == rs.dim_g());
    }
}

TEST_CASE("classify: 4-cycle is A3~1 with unit marks") {
    MultiGraph g = MultiGraph::from_incidence({
        {0, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}});
    auto c = classify_graph(g);
    CHECK(c.radius == GraphClassification::Radius::equal);
    REQUIRE(c.label.has_value());
    CHECK(*c.label == "A3~1");
    CHECK(c.marks == std::vector<long>{1, 1, 1, 1});
}

TEST_CASE("classify: path on 3 nodes is finite A3") {
    MultiGraph g = MultiGraph::from_incidence({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
    auto c = classify_graph(g);
    CHECK(c.radius == GraphClassification::Radius::less);
    REQUIRE(c.label.has_value());
    CHECK(*c.label == "A3");
}

TEST_CASE("classify: star with 4 leaves is D4~1") {
    MultiGraph g = MultiGraph::from_incidence({{0, 1, 1, 1, 1},
                                               {1, 0, 0, 0, 0},
                                               {1, 0, 0, 0, 0},
                                               {1, 0, 0, 0, 0},
                                               {1, 0, 0, 0, 0}});
    auto c = classify_graph(g);
    CHECK(c.radius == GraphClassification::Radius::equal);
    REQUIRE(c.label.has_value());
    CHECK(*c.label == "D4~1");
    CHECK(c.marks == std::vector<long>{2, 1, 1, 1, 1});
}

TEST_CASE("classify: twisted diagrams and radius > 2") {
    auto c1 = classify_graph(MultiGraph::from_incidence({{0, 1}, {4, 0}}));
    CHECK(c1.radius == GraphClassification::Radius::equal);
    REQUIRE(c1.label.has_value());
    CHECK(*c1.label == "A2~2");

    auto c2 = classify_graph(MultiGraph::from_incidence({{0, 2}, {2, 0}}));
    REQUIRE(c2.label.has_value());
    CHECK(*c2.label == "A1~1");

    auto c3 = classify_graph(MultiGraph::from_incidence({{0, 3}, {2, 0}}));
    CHECK(c3.radius == GraphClassification::Radius::greater);

    // G2~1 vs D4~3: same undirected shape, different direction of the
    // triple bond.
    auto g2 = classify_graph(MultiGraph::from_incidence({{0, 1, 0}, {1, 0, 1}, {0, 3, 0}}));
    REQUIRE(g2.label.has_value());
    CHECK(*g2.label == "G2~1");
    CHECK(g2.marks == std::vector<long>{1, 2, 3});
    auto d43 = classify_graph(MultiGraph::from_incidence({{0, 1, 0}, {1, 0, 3}, {0, 1, 0}}));
    REQUIRE(d43.label.has_value());
    CHECK(*d43.label == "D4~3");
    CHECK(d43.marks == std::vector<long>{1, 2, 1});

    CHECK_THROWS_AS(classify_graph(MultiGraph::from_incidence({{0, 0}, {0, 0}})), Error);
}

TEST_CASE("affine registry members all have spectral radius exactly 2") {
    for (const auto& entry : affine_diagram_registry(9)) {
        CAPTURE(entry.label);
        auto c = classify_graph(entry.graph);
        CHECK(c.radius == GraphClassification::Radius::equal);
        REQUIRE(c.label.has_value());
        CHECK(*c.label == entry.label);
    }
}

TEST_CASE("finite registry members all have spectral radius < 2") {
    for (const auto& entry : finite_diagram_registry(8)) {
        CAPTURE(entry.label);
        auto c = classify_graph(entry.graph);
        CHECK(c.radius == GraphClassification::Radius::less);
        REQUIRE(c.label.has_value());
        CHECK(*c.label == entry.label);
    }
}
