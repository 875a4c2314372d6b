#include "lie/matrix.hpp"

namespace lie {

bool is_positive_semidefinite(Matrix<Rat> m) {
    if (m.rows() != m.cols()) fail(Error::Kind::invalid_argument, "psd: not square");
    std::size_t n = m.rows();
    std::vector<std::size_t> act(n);
    for (std::size_t i = 0; i < n; ++i) act[i] = i;

    while (!act.empty()) {
        std::size_t pivot = act.size();
        for (std::size_t a = 0; a < act.size(); ++a) {
            const Rat& d = m(act[a], act[a]);
            if (d.sign() < 0) return false;
            if (d.sign() > 0 && pivot == act.size()) pivot = a;
        }
        if (pivot == act.size()) {
            // All active diagonal entries vanish: PSD forces the whole block to vanish.
            for (auto i : act)
                for (auto j : act)
                    if (!m(i, j).is_zero()) return false;
            return true;
        }
        std::size_t p = act[pivot];
        Rat d = m(p, p);
        std::vector<std::size_t> rest;
        rest.reserve(act.size() - 1);
        for (auto i : act)
            if (i != p) rest.push_back(i);
        for (auto i : rest)
            for (auto j : rest) m(i, j) -= m(i, p) * m(p, j) / d;
        act = std::move(rest);
    }
    return true;
}

bool is_positive_definite(const Matrix<Rat>& m) {
    if (m.rows() != m.cols()) fail(Error::Kind::invalid_argument, "pd: not square");
    for (std::size_t k = 1; k <= m.rows(); ++k) {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        if (bareiss_det(m.submatrix(idx, idx)).sign() <= 0) return false;
    }
    return true;
}

} // namespace lie
