#include "lie/rootsystem.hpp"

#include <algorithm>
#include <set>

namespace lie {

Vec operator+(const Vec& a, const Vec& b) {
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec operator*(const Rat& s, const Vec& a) {
    Vec r(a);
    for (auto& x : r) x *= s;
    return r;
}

Vec operator-(const Vec& a) {
    Vec r(a);
    for (auto& x : r) x = -x;
    return r;
}

Rat RootSystem::inner(const Vec& a, const Vec& b) const {
    Rat s(0);
    for (std::size_t i = 0; i < rank; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < rank; ++j) {
            if (b[j].is_zero()) continue;
            s += a[i] * gram(i, j) * b[j];
        }
    }
    return s;
}

Rat RootSystem::coroot_pairing(const Vec& x, std::size_t i) const {
    Rat num(0);
    for (std::size_t j = 0; j < rank; ++j)
        if (!x[j].is_zero()) num += x[j] * gram(j, i);
    return Rat(2) * num / gram(i, i);
}

Vec RootSystem::simple_reflect(std::size_t i, const Vec& x) const {
    Vec r(x);
    r[i] -= coroot_pairing(x, i);
    return r;
}

Vec RootSystem::reflect(const Vec& alpha, const Vec& x) const {
    Rat n2 = norm2(alpha);
    if (n2.is_zero()) fail(Error::Kind::invalid_argument, "reflect: isotropic vector");
    Rat c = Rat(2) * inner(x, alpha) / n2;
    return x - c * alpha;
}

bool RootSystem::is_root(const Vec& x) const {
    return std::find(roots.begin(), roots.end(), x) != roots.end();
}

bool RootSystem::is_dominant(const Vec& x) const {
    for (std::size_t i = 0; i < rank; ++i)
        if (coroot_pairing(x, i).sign() < 0) return false;
    return true;
}

Vec RootSystem::weight_from_fw(const std::vector<long>& m) const {
    if (m.size() != rank) fail(Error::Kind::invalid_argument, "weight_from_fw: arity");
    Vec x(rank, Rat(0));
    for (std::size_t i = 0; i < rank; ++i)
        x = x + Rat(m[i]) * fundamental_weights[i];
    return x;
}

std::vector<Rat> RootSystem::fw_coords(const Vec& x) const {
    std::vector<Rat> c(rank);
    for (std::size_t i = 0; i < rank; ++i) c[i] = coroot_pairing(x, i);
    return c;
}

Rat RootSystem::height(const Vec& x) const {
    Rat h(0);
    for (const auto& c : x) h += c;
    return h;
}

Vec RootSystem::coroot(const Vec& alpha) const {
    return (Rat(2) / norm2(alpha)) * alpha;
}

std::vector<Vec> RootSystem::simple_coroots() const {
    std::vector<Vec> out;
    for (std::size_t i = 0; i < rank; ++i) {
        Vec a(rank, Rat(0));
        a[i] = Rat(1);
        out.push_back(coroot(a));
    }
    return out;
}

RootSystem build_root_system(const CartanMatrix& cartan, const std::vector<Rat>& lengths) {
    cartan.validate();
    const std::size_t r = cartan.rank();
    if (lengths.size() != r) fail(Error::Kind::invalid_argument, "lengths arity mismatch");
    for (const auto& d : lengths)
        if (d.sign() <= 0) fail(Error::Kind::invalid_argument, "lengths must be positive");
    // Consistency n_ij (a_i,a_i) = n_ji (a_j,a_j).
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            if (Rat(cartan.n[i][j]) * lengths[i] != Rat(cartan.n[j][i]) * lengths[j])
                fail(Error::Kind::invalid_argument, "lengths inconsistent with Cartan matrix");

    RootSystem rs;
    rs.rank = r;
    rs.cartan = cartan;
    rs.gram = Matrix<Rat>(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            rs.gram(i, j) = Rat(cartan.n[i][j]) * lengths[i] / Rat(2);

    // Close the simple roots under simple reflections.
    const Rat height_bound = Rat(static_cast<long>(30 * r));
    std::set<std::vector<Rat>> seen;
    std::vector<Vec> frontier;
    for (std::size_t i = 0; i < r; ++i) {
        Vec a(r, Rat(0));
        a[i] = Rat(1);
        seen.insert(a);
        seen.insert(-a);
        frontier.push_back(a);
        frontier.push_back(-a);
    }
    while (!frontier.empty()) {
        std::vector<Vec> next;
        for (const auto& b : frontier)
            for (std::size_t i = 0; i < r; ++i) {
                Vec c = rs.simple_reflect(i, b);
                if (rs.height(c).abs() > height_bound)
                    fail(Error::Kind::non_finite_type,
                         "root closure exceeded the finite-type height bound");
                if (seen.insert(c).second) next.push_back(c);
            }
        frontier = std::move(next);
    }
    rs.roots.assign(seen.begin(), seen.end());

    // Highest root: unique root of maximal height.
    const Vec* best = nullptr;
    for (const auto& a : rs.roots)
        if (!best || rs.height(a) > rs.height(*best)) best = &a;
    rs.theta = *best;

    // Rescale the form so (theta, theta) = 2.
    Rat t2 = rs.norm2(rs.theta);
    Rat scale = Rat(2) / t2;
    rs.gram *= scale;

    for (const auto& a : rs.roots) {
        bool pos = true;
        for (const auto& c : a)
            if (c.sign() < 0) { pos = false; break; }
        if (pos) rs.positive_roots.push_back(a);
    }
    std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
              [&](const Vec& a, const Vec& b) {
                  Rat ha = rs.height(a), hb = rs.height(b);
                  if (ha != hb) return ha < hb;
                  return a < b;
              });

    rs.rho.assign(r, Rat(0));
    for (const auto& a : rs.positive_roots) rs.rho = rs.rho + a;
    rs.rho = Rat(1, 2) * rs.rho;

    // Fundamental weights: solve <lambda_i, a_j^vee> = delta_ij.
    Matrix<Rat> sys(r, r);
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t j = 0; j < r; ++j)
            sys(j, k) = Rat(2) * rs.gram(k, j) / rs.gram(j, j);
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<Rat> rhs(r, Rat(0));
        rhs[i] = Rat(1);
        std::vector<Rat> x;
        if (!solve(sys, rhs, x))
            fail(Error::Kind::invalid_argument, "degenerate Cartan form");
        rs.fundamental_weights.push_back(std::move(x));
    }

    // rho = sum of fundamental weights (also a consistency check).
    Vec rho2(r, Rat(0));
    for (const auto& l : rs.fundamental_weights) rho2 = rho2 + l;
    if (rho2 != rs.rho)
        fail(Error::Kind::invalid_argument, "internal: rho mismatch with fundamental weights");

    rs.dual_coxeter = Rat(1) + rs.inner(rs.rho, rs.theta);
    return rs;
}

RootSystem root_system(const std::string& label) {
    CartanMatrix c = cartan_by_label(label);
    return build_root_system(c, c.default_lengths());
}

} // namespace lie
