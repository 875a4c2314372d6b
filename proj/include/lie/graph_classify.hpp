#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lie/cartan.hpp"
#include "lie/rational.hpp"

namespace lie {

// Exact Perron-Frobenius status of a connected multigraph relative to 2:
//   less    — spectral radius < 2 (matches a finite Dynkin diagram)
//   equal   — spectral radius = 2 (matches an affine diagram; the
//             positive integer eigenvector is reported)
//   greater — spectral radius > 2
struct GraphClassification {
    enum class Radius { less, equal, greater } radius;
    std::optional<std::string> label;      // diagram label when matched
    std::vector<long> marks;               // positive integer eigenvector when radius == equal
};

GraphClassification classify_graph(const MultiGraph& g);

// Exact tests, exposed for reuse:
// all leading principal minors of 2I - M positive <=> radius < 2.
bool spectral_radius_less_than_two(const MultiGraph& g);
// all principal minors of 2I - M nonnegative <=> radius <= 2 (any support).
bool spectral_radius_at_most_two(const std::vector<std::vector<long>>& m);

// Directed multigraph isomorphism by backtracking (node counts <= 10).
bool graphs_isomorphic(const MultiGraph& a, const MultiGraph& b);

} // namespace lie
