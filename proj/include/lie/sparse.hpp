#pragma once

#include <map>
#include <vector>

#include "lie/matrix.hpp"

namespace lie {

// Column-sparse square matrix over an exact scalar; the oscillator layer
// lives here because its operators have O(1) entries per column.
template <typename T>
struct SparseMat {
    std::size_t n = 0;
    std::vector<std::map<std::size_t, T>> cols;

    explicit SparseMat(std::size_t size = 0) : n(size), cols(size) {}

    void add(std::size_t row, std::size_t col, const T& v) {
        if (v.is_zero()) return;
        auto [it, fresh] = cols[col].try_emplace(row, v);
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero()) cols[col].erase(it);
        }
    }

    SparseMat& operator+=(const SparseMat& o) {
        for (std::size_t c = 0; c < n; ++c)
            for (const auto& [r, v] : o.cols[c]) add(r, c, v);
        return *this;
    }
    SparseMat& operator-=(const SparseMat& o) {
        for (std::size_t c = 0; c < n; ++c)
            for (const auto& [r, v] : o.cols[c]) add(r, c, -v);
        return *this;
    }
    SparseMat& operator*=(const T& s) {
        if (s.is_zero()) {
            for (auto& c : cols) c.clear();
            return *this;
        }
        for (auto& c : cols)
            for (auto& [r, v] : c) v *= s;
        return *this;
    }

    friend SparseMat operator*(const SparseMat& a, const SparseMat& b) {
        SparseMat p(a.n);
        for (std::size_t c = 0; c < b.n; ++c)
            for (const auto& [k, bv] : b.cols[c]) {
                for (const auto& [r, av] : a.cols[k]) p.add(r, c, av * bv);
            }
        return p;
    }

    Matrix<T> dense() const {
        Matrix<T> m(n, n);
        for (std::size_t c = 0; c < n; ++c)
            for (const auto& [r, v] : cols[c]) m(r, c) = v;
        return m;
    }

    T at(std::size_t r, std::size_t c) const {
        auto it = cols[c].find(r);
        return it == cols[c].end() ? T(0) : it->second;
    }
};

} // namespace lie
