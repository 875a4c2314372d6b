#include "lie/clifford.hpp"

#include "lie/error.hpp"

namespace lie {

namespace {

// Exterior algebra over C^n: basis = subsets of {0..n-1} encoded as bitmasks.
// e(v_k): wedge in front position order with sign (-1)^{#{j<k : j in I}}.
void creation_matrix(std::size_t n, std::size_t k, Matrix<CRat>& out) {
    const std::size_t d = 1u << n;
    out = Matrix<CRat>(d, d);
    for (std::size_t I = 0; I < d; ++I) {
        if (I & (1u << k)) continue;
        int sign = 1;
        for (std::size_t j = 0; j < k; ++j)
            if (I & (1u << j)) sign = -sign;
        out(I | (1u << k), I) = CRat(Rat(sign));
    }
}

} // namespace

CliffordModel build_clifford(std::size_t dim_v) {
    if (dim_v < 1) fail(Error::Kind::invalid_argument, "build_clifford: dim >= 1");
    CliffordModel M;
    M.dim_v = dim_v;
    const std::size_t n = dim_v / 2;
    const std::size_t d = 1u << n;
    M.sdim = d;
    std::vector<Matrix<CRat>> e(n), edag(n);
    for (std::size_t k = 0; k < n; ++k) {
        creation_matrix(n, k, e[k]);
        edag[k] = e[k].transpose(); // real entries: conjugate transpose
    }
    for (std::size_t k = 0; k < n; ++k) {
        M.gen.push_back(e[k] + edag[k]);
        M.gen.push_back((e[k] - edag[k]) * CRat::i());
    }
    // gamma = i^n c(e_0)...c(e_{2n-1})
    Matrix<CRat> g = Matrix<CRat>::identity(d);
    for (std::size_t k = 0; k < 2 * n; ++k) g = g * M.gen[k];
    CRat in(1);
    for (std::size_t k = 0; k < n; ++k) in *= CRat::i();
    M.gamma = g * in;
    if (dim_v % 2 == 1) M.gen.push_back(M.gamma); // c(e_{2n}) = i^n c(e_0)...c(e_{2n-1})
    return M;
}

bool CliffordModel::verify_relations() const {
    const std::size_t d = sdim;
    for (std::size_t a = 0; a < gen.size(); ++a) {
        // self-adjoint: conjugate transpose equals itself
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (gen[a](i, j) != gen[a](j, i).conj()) return false;
        for (std::size_t b = 0; b < gen.size(); ++b) {
            Matrix<CRat> ac = anticommutator(gen[a], gen[b]);
            Matrix<CRat> expect = Matrix<CRat>::identity(d) * CRat(Rat(a == b ? 2 : 0));
            if (ac != expect) return false;
        }
    }
    return true;
}

bool CliffordModel::verify_grading() const {
    if (gamma * gamma != Matrix<CRat>::identity(sdim)) return false;
    const std::size_t even = 2 * (dim_v / 2);
    for (std::size_t k = 0; k < even; ++k)
        if (gamma * gen[k] * gamma != -gen[k]) return false;
    return true;
}

std::size_t CliffordModel::commutant_dimension() const {
    const std::size_t d = sdim;
    // Unknown X (d x d) with X c_k - c_k X = 0 for all k.
    Matrix<CRat> sys(gen.size() * d * d, d * d);
    for (std::size_t g0 = 0; g0 < gen.size(); ++g0)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                std::size_t row = (g0 * d + i) * d + j;
                // (X c - c X)_{ij} = sum_k X_{ik} c_{kj} - c_{ik} X_{kj}
                for (std::size_t k = 0; k < d; ++k) {
                    sys(row, i * d + k) += gen[g0](k, j);
                    sys(row, k * d + j) -= gen[g0](i, k);
                }
            }
    return d * d - rank(sys);
}

Matrix<CRat> CliffordModel::c(const std::vector<CRat>& x) const {
    if (x.size() != dim_v) fail(Error::Kind::invalid_argument, "CliffordModel::c arity");
    Matrix<CRat> m(sdim, sdim);
    for (std::size_t k = 0; k < dim_v; ++k) {
        if (x[k].is_zero()) continue;
        m += gen[k] * x[k];
    }
    return m;
}

Matrix<CRat> CliffordModel::quantize(const Matrix<Rat>& a) const {
    if (a.rows() != dim_v || a.cols() != dim_v)
        fail(Error::Kind::invalid_argument, "quantize: shape mismatch");
    for (std::size_t i = 0; i < dim_v; ++i)
        for (std::size_t j = 0; j < dim_v; ++j)
            if (a(i, j) != -a(j, i))
                fail(Error::Kind::invalid_argument, "quantize: matrix not antisymmetric");
    Matrix<CRat> s(sdim, sdim);
    for (std::size_t k = 0; k < dim_v; ++k) {
        std::vector<CRat> col(dim_v);
        for (std::size_t i = 0; i < dim_v; ++i) col[i] = CRat(a(i, k));
        s += c(col) * gen[k];
    }
    return s * CRat(Rat(1, 4));
}

Matrix<CRat> CliffordModel::central_element() const {
    if (dim_v % 2 == 0) fail(Error::Kind::invalid_argument, "central_element: even dimension");
    Matrix<CRat> z = gen[dim_v - 1];
    for (std::size_t k = 0; k + 1 < dim_v; ++k) z = z * gen[k];
    return z;
}

} // namespace lie
