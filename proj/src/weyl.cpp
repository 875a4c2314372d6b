#include "lie/weyl.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lie {

namespace {

Matrix<Rat> simple_reflection_matrix(const RootSystem& rs, std::size_t i) {
    const std::size_t r = rs.rank;
    Matrix<Rat> m(r, r);
    for (std::size_t j = 0; j < r; ++j) {
        Vec ej(r, Rat(0));
        ej[j] = Rat(1);
        Vec im = rs.simple_reflect(i, ej);
        for (std::size_t k = 0; k < r; ++k) m(k, j) = im[k];
    }
    return m;
}

std::vector<std::vector<Rat>> matrix_key(const Matrix<Rat>& m) {
    std::vector<std::vector<Rat>> k(m.rows(), std::vector<Rat>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) k[i][j] = m(i, j);
    return k;
}

} // namespace

std::vector<WeylElement> generate_weyl_group(const RootSystem& rs, std::size_t max_size) {
    std::vector<Matrix<Rat>> gens;
    for (std::size_t i = 0; i < rs.rank; ++i) gens.push_back(simple_reflection_matrix(rs, i));

    std::vector<WeylElement> out;
    WeylElement id{Matrix<Rat>::identity(rs.rank), {}, 0};
    std::set<std::vector<std::vector<Rat>>> seen;
    seen.insert(matrix_key(id.matrix));
    out.push_back(id);
    std::size_t frontier_begin = 0;
    while (frontier_begin < out.size()) {
        std::size_t frontier_end = out.size();
        for (std::size_t k = frontier_begin; k < frontier_end; ++k)
            for (std::size_t i = 0; i < rs.rank; ++i) {
                WeylElement w;
                w.matrix = gens[i] * out[k].matrix; // sigma_i after out[k]
                if (!seen.insert(matrix_key(w.matrix)).second) continue;
                w.word = out[k].word;
                w.word.insert(w.word.begin(), i); // sigma = sigma_i * prior
                w.length = out[k].length + 1;
                out.push_back(std::move(w));
                if (out.size() > max_size)
                    fail(Error::Kind::size_cap, "Weyl group exceeds max_size");
            }
        frontier_begin = frontier_end;
    }
    return out;
}

std::pair<Vec, WeylElement> to_dominant(const RootSystem& rs, const Vec& weight) {
    Vec x = weight;
    WeylElement sigma{Matrix<Rat>::identity(rs.rank), {}, 0};
    for (;;) {
        std::size_t worst = rs.rank;
        Rat worst_val(0);
        for (std::size_t i = 0; i < rs.rank; ++i) {
            Rat c = rs.coroot_pairing(x, i);
            if (c.sign() < 0 && (worst == rs.rank || c < worst_val)) {
                worst = i;
                worst_val = c;
            }
        }
        if (worst == rs.rank) break;
        x = rs.simple_reflect(worst, x);
        sigma.matrix = simple_reflection_matrix(rs, worst) * sigma.matrix;
        sigma.word.insert(sigma.word.begin(), worst);
        sigma.length += 1; // word stays reduced along a length descent
    }
    return {x, sigma};
}

std::vector<Vec> weyl_orbit(const RootSystem& rs, const Vec& weight) {
    std::set<Vec> seen{weight};
    std::vector<Vec> frontier{weight};
    while (!frontier.empty()) {
        std::vector<Vec> next;
        for (const auto& v : frontier)
            for (std::size_t i = 0; i < rs.rank; ++i) {
                Vec u = rs.simple_reflect(i, v);
                if (seen.insert(u).second) next.push_back(u);
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

std::size_t inversion_count(const RootSystem& rs, const WeylElement& w) {
    std::size_t n = 0;
    for (const auto& a : rs.positive_roots) {
        Vec im = w.apply(a);
        bool neg = true;
        for (const auto& c : im)
            if (c.sign() > 0) { neg = false; break; }
        if (neg) ++n;
    }
    return n;
}

} // namespace lie
