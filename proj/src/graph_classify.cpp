#include "lie/graph_classify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "lie/error.hpp"
#include "lie/matrix.hpp"

namespace lie {

namespace {

Matrix<Rat> two_i_minus_m(const std::vector<std::vector<long>>& m) {
    const std::size_t n = m.size();
    Matrix<Rat> a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = Rat((i == j ? 2 : 0) - m[i][j]);
    return a;
}

} // namespace

bool spectral_radius_less_than_two(const MultiGraph& g) {
    Matrix<Rat> a = two_i_minus_m(g.m);
    for (std::size_t k = 1; k <= g.nodes(); ++k) {
        std::vector<std::size_t> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        if (bareiss_det(a.submatrix(idx, idx)).sign() <= 0) return false;
    }
    return true;
}

bool spectral_radius_at_most_two(const std::vector<std::vector<long>>& m) {
    Matrix<Rat> a = two_i_minus_m(m);
    const std::size_t n = m.size();
    // All principal minors nonnegative <=> 2I - M is a (possibly singular)
    // M-matrix <=> r(M) <= 2. Subset enumeration; intended for n <= ~6.
    for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1ul << i)) idx.push_back(i);
        if (bareiss_det(a.submatrix(idx, idx)).sign() < 0) return false;
    }
    return true;
}

bool graphs_isomorphic(const MultiGraph& a, const MultiGraph& b) {
    const std::size_t n = a.nodes();
    if (b.nodes() != n) return false;
    // Node invariant: sorted multiset of (out,in) multiplicities.
    auto profile = [](const MultiGraph& g, std::size_t i) {
        std::vector<std::pair<long, long>> p;
        for (std::size_t j = 0; j < g.nodes(); ++j)
            if (g.m[i][j] || g.m[j][i]) p.emplace_back(g.m[i][j], g.m[j][i]);
        std::sort(p.begin(), p.end());
        return p;
    };
    std::vector<std::vector<std::pair<long, long>>> pa(n), pb(n);
    for (std::size_t i = 0; i < n; ++i) {
        pa[i] = profile(a, i);
        pb[i] = profile(b, i);
    }
    {
        auto sa = pa, sb = pb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<long> map(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == n) return true;
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j] || pa[i] != pb[j]) continue;
            bool ok = true;
            for (std::size_t k = 0; k < i && ok; ++k)
                if (a.m[i][k] != b.m[j][static_cast<std::size_t>(map[k])] ||
                    a.m[k][i] != b.m[static_cast<std::size_t>(map[k])][j])
                    ok = false;
            if (!ok) continue;
            map[i] = static_cast<long>(j);
            used[j] = true;
            if (rec(i + 1)) return true;
            used[j] = false;
            map[i] = -1;
        }
        return false;
    };
    return rec(0);
}

GraphClassification classify_graph(const MultiGraph& g) {
    g.validate();
    if (!g.connected()) fail(Error::Kind::invalid_argument, "classify_graph: disconnected input");
    GraphClassification out;

    if (spectral_radius_less_than_two(g)) {
        out.radius = GraphClassification::Radius::less;
        for (const auto& entry : finite_diagram_registry(g.nodes()))
            if (entry.graph.nodes() == g.nodes() && graphs_isomorphic(g, entry.graph)) {
                out.label = entry.label;
                break;
            }
        return out;
    }

    // Eigenvalue-2 test: kernel of M - 2I containing a strictly positive
    // vector. For irreducible nonnegative M that vector certifies r(M) = 2.
    Matrix<Rat> a = two_i_minus_m(g.m);
    auto ker = kernel_basis(a * Rat(-1));
    for (const auto& v : ker) {
        int sgn = 0;
        bool uniform = true;
        for (const auto& x : v) {
            if (x.is_zero()) { uniform = false; break; }
            if (sgn == 0) sgn = x.sign();
            else if (x.sign() != sgn) { uniform = false; break; }
        }
        if (!uniform) continue;
        out.radius = GraphClassification::Radius::equal;
        // Normalize to the smallest positive integer vector.
        mpz_class lcm_den(1);
        for (const auto& x : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.den().get_mpz_t());
        std::vector<mpz_class> ints;
        mpz_class gcd_all(0);
        for (const auto& x : v) {
            mpz_class t = x.num() * (lcm_den / x.den());
            if (sgn < 0) t = -t;
            ints.push_back(t);
            mpz_gcd(gcd_all.get_mpz_t(), gcd_all.get_mpz_t(), t.get_mpz_t());
        }
        for (auto& t : ints) out.marks.push_back(mpz_class(t / gcd_all).get_si());
        for (const auto& entry : affine_diagram_registry(g.nodes()))
            if (entry.graph.nodes() == g.nodes() && graphs_isomorphic(g, entry.graph)) {
                out.label = entry.label;
                break;
            }
        return out;
    }
    out.radius = GraphClassification::Radius::greater;
    return out;
}

} // namespace lie
