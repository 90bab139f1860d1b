#pragma once

#include <optional>
#include <vector>

#include "hirsch/rational.hpp"

namespace hirsch {

using RatMatrix = std::vector<RatVec>;  // row-major

// Solves the square system A x = b exactly. Returns nullopt when A is
// singular.
std::optional<RatVec> solve_square(RatMatrix a, RatVec b);

// Rank of an arbitrary rational matrix (Gaussian elimination).
int matrix_rank(RatMatrix a);

// Exact inverse of a square matrix; nullopt when singular.
std::optional<RatMatrix> invert(RatMatrix a);

// Affine rank of a point set: dimension of its affine hull. Empty set has
// affine rank -1, a single point 0.
int affine_rank(const std::vector<RatVec>& points);

}  // namespace hirsch
