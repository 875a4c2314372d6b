#include "lie/cartan.hpp"

#include <algorithm>

#include "lie/error.hpp"
#include "lie/rootsystem.hpp"

namespace lie {

void CartanMatrix::validate() const {
    const std::size_t r = rank();
    for (std::size_t i = 0; i < r; ++i) {
        if (n[i].size() != r) fail(Error::Kind::invalid_argument, "Cartan matrix not square");
        if (n[i][i] != 2) fail(Error::Kind::invalid_argument, "Cartan diagonal must be 2");
        for (std::size_t j = 0; j < r; ++j) {
            if (i == j) continue;
            if (n[i][j] > 0) fail(Error::Kind::invalid_argument, "Cartan off-diagonal must be <= 0");
            if ((n[i][j] == 0) != (n[j][i] == 0))
                fail(Error::Kind::invalid_argument, "Cartan zero pattern must be symmetric");
        }
    }
}

std::vector<Rat> CartanMatrix::default_lengths() const {
    validate();
    const std::size_t r = rank();
    std::vector<Rat> d(r, Rat(0));
    // Propagate length ratios d_j = d_i * n_ij / n_ji along edges.
    for (std::size_t seed = 0; seed < r; ++seed) {
        if (!d[seed].is_zero()) continue;
        d[seed] = Rat(1);
        std::vector<std::size_t> stack{seed};
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < r; ++j) {
                if (i == j || n[i][j] == 0) continue;
                Rat dj = d[i] * Rat(n[i][j]) / Rat(n[j][i]);
                if (d[j].is_zero()) {
                    d[j] = dj;
                    stack.push_back(j);
                } else if (d[j] != dj) {
                    fail(Error::Kind::invalid_argument, "Cartan matrix not symmetrizable");
                }
            }
        }
    }
    Rat longest = d[0];
    for (const auto& x : d) longest = std::max(longest, x);
    for (auto& x : d) x = x * Rat(2) / longest;
    return d;
}

namespace {

CartanMatrix path_matrix(std::size_t r) {
    CartanMatrix c;
    c.n.assign(r, std::vector<long>(r, 0));
    for (std::size_t i = 0; i < r; ++i) {
        c.n[i][i] = 2;
        if (i + 1 < r) c.n[i][i + 1] = c.n[i + 1][i] = -1;
    }
    return c;
}

} // namespace

CartanMatrix cartan_by_label(const std::string& label) {
    if (label.size() < 2) fail(Error::Kind::invalid_argument, "bad type label '" + label + "'");
    char fam = label[0];
    std::size_t r = 0;
    try {
        r = static_cast<std::size_t>(std::stoul(label.substr(1)));
    } catch (...) {
        fail(Error::Kind::invalid_argument, "bad type label '" + label + "'");
    }
    if (r == 0 || r > 8) fail(Error::Kind::invalid_argument, "rank out of range in '" + label + "'");
    CartanMatrix c = path_matrix(r);
    switch (fam) {
        case 'A':
            return c;
        case 'B': // short last root: n_{r,r-1} = -2
            if (r < 2) break;
            c.n[r - 1][r - 2] = -2;
            return c;
        case 'C': // long last root: n_{r-1,r} = -2
            if (r < 2) break;
            c.n[r - 2][r - 1] = -2;
            return c;
        case 'D':
            if (r < 3) break;
            c.n[r - 1][r - 2] = c.n[r - 2][r - 1] = 0;
            c.n[r - 1][r - 3] = c.n[r - 3][r - 1] = -1;
            return c;
        case 'E': {
            if (r < 6 || r > 8) break;
            // Path 1-2-...-(r-1) with node r attached to node 3 from the end
            // of the long arm; Bourbaki numbering is immaterial here.
            c = path_matrix(r);
            c.n[r - 1][r - 2] = c.n[r - 2][r - 1] = 0;
            c.n[r - 1][r - 4] = c.n[r - 4][r - 1] = -1;
            return c;
        }
        case 'F':
            if (r != 4) break;
            c.n[2][1] = -2; // third root short
            return c;
        case 'G':
            if (r != 2) break;
            c.n[1][0] = -3; // second root short
            return c;
        default:
            break;
    }
    fail(Error::Kind::invalid_argument, "unknown type label '" + label + "'");
}

void MultiGraph::validate() const {
    const std::size_t k = nodes();
    for (std::size_t i = 0; i < k; ++i) {
        if (m[i].size() != k) fail(Error::Kind::invalid_argument, "incidence matrix not square");
        if (m[i][i] != 0) fail(Error::Kind::invalid_argument, "loops not allowed");
        for (std::size_t j = 0; j < k; ++j) {
            if (m[i][j] < 0) fail(Error::Kind::invalid_argument, "negative multiplicity");
            if ((m[i][j] == 0) != (m[j][i] == 0))
                fail(Error::Kind::invalid_argument, "support must be symmetric");
        }
    }
}

bool MultiGraph::connected() const {
    const std::size_t k = nodes();
    if (k == 0) return false;
    std::vector<bool> seen(k, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        std::size_t i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < k; ++j)
            if (m[i][j] != 0 && !seen[j]) {
                seen[j] = true;
                stack.push_back(j);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

MultiGraph MultiGraph::from_incidence(std::vector<std::vector<long>> mm) {
    MultiGraph g{std::move(mm)};
    g.validate();
    return g;
}

MultiGraph MultiGraph::from_cartan(const std::vector<std::vector<long>>& n) {
    const std::size_t k = n.size();
    std::vector<std::vector<long>> mm(k, std::vector<long>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            mm[i][j] = (i == j ? 2 : 0) - n[i][j];
    return from_incidence(std::move(mm));
}

namespace {

// Extended Cartan matrix of a finite type: adjoin a_0 = -theta.
std::vector<std::vector<long>> extended_cartan(const std::string& label) {
    RootSystem rs = root_system(label);
    const std::size_t r = rs.rank;
    Vec a0 = -rs.theta;
    std::vector<std::vector<long>> n(r + 1, std::vector<long>(r + 1, 0));
    n[0][0] = 2;
    for (std::size_t i = 0; i < r; ++i) {
        Vec ai(r, Rat(0));
        ai[i] = Rat(1);
        n[i + 1][i + 1] = 2;
        // n_0j = 2(a_0, a_j)/(a_0,a_0) with (a_0,a_0) = 2
        n[0][i + 1] = rs.inner(a0, ai).to_long();
        // n_j0 = 2(a_j, a_0)/(a_j,a_j)
        Rat v = Rat(2) * rs.inner(ai, a0) / rs.inner(ai, ai);
        n[i + 1][0] = v.to_long();
        for (std::size_t j = 0; j < r; ++j) n[i + 1][j + 1] = rs.cartan.n[i][j];
    }
    return n;
}

MultiGraph path_graph_with_bonds(std::size_t k, const std::vector<std::array<long, 2>>& bonds) {
    std::vector<std::vector<long>> m(k, std::vector<long>(k, 0));
    for (std::size_t i = 0; i + 1 < k; ++i) {
        m[i][i + 1] = bonds[i][0];
        m[i + 1][i] = bonds[i][1];
    }
    return MultiGraph::from_incidence(std::move(m));
}

} // namespace

std::vector<DiagramEntry> affine_diagram_registry(std::size_t max_nodes) {
    std::vector<DiagramEntry> out;
    auto add = [&](const std::string& label, MultiGraph g) {
        if (g.nodes() <= max_nodes) out.push_back({label, std::move(g)});
    };

    // A1^(1): double bond both ways.
    add("A1~1", MultiGraph::from_incidence({{0, 2}, {2, 0}}));
    // A_n^(1), n >= 2: cycle on n+1 nodes.
    for (std::size_t n = 2; n + 1 <= max_nodes; ++n) {
        std::size_t k = n + 1;
        std::vector<std::vector<long>> m(k, std::vector<long>(k, 0));
        for (std::size_t i = 0; i < k; ++i) {
            m[i][(i + 1) % k] = 1;
            m[(i + 1) % k][i] = 1;
        }
        add("A" + std::to_string(n) + "~1", MultiGraph::from_incidence(std::move(m)));
    }
    // Untwisted B,C,D,E,F,G from extended Cartan matrices.
    for (std::size_t n = 3; n + 1 <= max_nodes && n <= 8; ++n)
        add("B" + std::to_string(n) + "~1", MultiGraph::from_cartan(extended_cartan("B" + std::to_string(n))));
    for (std::size_t n = 2; n + 1 <= max_nodes && n <= 8; ++n)
        add("C" + std::to_string(n) + "~1", MultiGraph::from_cartan(extended_cartan("C" + std::to_string(n))));
    for (std::size_t n = 4; n + 1 <= max_nodes && n <= 8; ++n)
        add("D" + std::to_string(n) + "~1", MultiGraph::from_cartan(extended_cartan("D" + std::to_string(n))));
    for (std::size_t n = 6; n <= 8; ++n)
        if (n + 1 <= max_nodes)
            add("E" + std::to_string(n) + "~1", MultiGraph::from_cartan(extended_cartan("E" + std::to_string(n))));
    if (5 <= max_nodes) add("F4~1", MultiGraph::from_cartan(extended_cartan("F4")));
    if (3 <= max_nodes) add("G2~1", MultiGraph::from_cartan(extended_cartan("G2")));

    // Twisted families, incidence fixed by the Perron eigenvector marks.
    // A2^(2): marks (1,2).
    add("A2~2", MultiGraph::from_incidence({{0, 1}, {4, 0}}));
    // A_{2n}^(2), n >= 2: path, marks (1,2,...,2): bonds (1,2),1,...,1,(1,2).
    for (std::size_t n = 2; n + 1 <= max_nodes; ++n) {
        std::size_t k = n + 1;
        std::vector<std::array<long, 2>> bonds(k - 1, {1, 1});
        bonds.front() = {1, 2};
        bonds.back() = {1, 2};
        if (k == 3) bonds = {{1, 2}, {1, 2}};
        add("A" + std::to_string(2 * n) + "~2", path_graph_with_bonds(k, bonds));
    }
    // A_{2n-1}^(2), n >= 3: fork (nodes 0,1 -> 2), path, last bond (2,1).
    for (std::size_t n = 3; n + 1 <= max_nodes; ++n) {
        std::size_t k = n + 1;
        std::vector<std::vector<long>> m(k, std::vector<long>(k, 0));
        m[0][2] = m[2][0] = 1;
        m[1][2] = m[2][1] = 1;
        for (std::size_t i = 2; i + 1 < k; ++i) m[i][i + 1] = m[i + 1][i] = 1;
        m[k - 2][k - 1] = 2;
        m[k - 1][k - 2] = 1;
        add("A" + std::to_string(2 * n - 1) + "~2", MultiGraph::from_incidence(std::move(m)));
    }
    // D_{n+1}^(2) on n+1 nodes, all marks 1: arrows point outward at both ends.
    for (std::size_t n = 2; n + 1 <= max_nodes; ++n) {
        std::size_t k = n + 1;
        std::vector<std::array<long, 2>> bonds(k - 1, {1, 1});
        bonds.front() = {2, 1};
        bonds.back() = {1, 2};
        if (k == 2) continue; // degenerate
        add("D" + std::to_string(n + 1) + "~2", path_graph_with_bonds(k, bonds));
    }
    // E6^(2): path on 5, marks (1,2,3,2,1); second bond carries (1,2).
    if (5 <= max_nodes)
        add("E6~2", path_graph_with_bonds(5, {{1, 1}, {1, 2}, {1, 1}, {1, 1}}));
    // D4^(3): path on 3, marks (1,2,1); second bond carries (3,1).
    add("D4~3", path_graph_with_bonds(3, {{1, 1}, {3, 1}}));
    return out;
}

std::vector<DiagramEntry> finite_diagram_registry(std::size_t max_nodes) {
    std::vector<DiagramEntry> out;
    auto add = [&](const std::string& label) {
        CartanMatrix c = cartan_by_label(label);
        if (c.rank() <= max_nodes) out.push_back({label, MultiGraph::from_cartan(c.n)});
    };
    for (std::size_t n = 1; n <= 8 && n <= max_nodes; ++n) add("A" + std::to_string(n));
    for (std::size_t n = 2; n <= 8 && n <= max_nodes; ++n) add("B" + std::to_string(n));
    for (std::size_t n = 3; n <= 8 && n <= max_nodes; ++n) add("C" + std::to_string(n));
    for (std::size_t n = 4; n <= 8 && n <= max_nodes; ++n) add("D" + std::to_string(n));
    for (std::size_t n = 6; n <= 8 && n <= max_nodes; ++n) add("E" + std::to_string(n));
    if (4 <= max_nodes) add("F4");
    if (2 <= max_nodes) add("G2");
    return out;
}

} // namespace lie
