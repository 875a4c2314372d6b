#pragma once

#include <vector>

#include "lie/matrix.hpp"
#include "lie/rootsystem.hpp"

namespace lie {

// Element of the finite Weyl group, acting on simple-root coordinates.
struct WeylElement {
    Matrix<Rat> matrix;          // action on h* in simple-root coordinates
    std::vector<std::size_t> word; // reduced word in simple reflections
    std::size_t length = 0;

    int sign() const { return length % 2 == 0 ? 1 : -1; }
    Vec apply(const Vec& v) const { return matrix.apply(v); }
};

// Breadth-first closure of the simple reflections; each element carries a
// reduced word. Errors with Kind::size_cap if the group exceeds max_size.
std::vector<WeylElement> generate_weyl_group(const RootSystem& rs, std::size_t max_size);

// Unique dominant representative and a witness sigma with sigma(weight)
// dominant, found by repeatedly reflecting the most negative simple
// coordinate (ties: lowest index).
std::pair<Vec, WeylElement> to_dominant(const RootSystem& rs, const Vec& weight);

// Full Weyl orbit.
std::vector<Vec> weyl_orbit(const RootSystem& rs, const Vec& weight);

// |{alpha > 0 : sigma(alpha) < 0}|, the geometric length.
std::size_t inversion_count(const RootSystem& rs, const WeylElement& w);

} // namespace lie
