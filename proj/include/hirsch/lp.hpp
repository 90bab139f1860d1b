#pragma once

#include <optional>

#include "hirsch/linalg.hpp"

namespace hirsch {

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpResult {
    LpStatus status;
    Rational value;  // objective at optimum (valid when Optimal)
    RatVec x;        // optimizer / feasible point (valid when Optimal)
};

// Exact rational simplex: maximize c.x subject to A x <= b with x free.
// Two-phase dictionary method with Bland's rule, so it terminates on every
// input. Intended for the small systems this library produces (a handful of
// variables, a few dozen constraints).
LpResult solve_lp(const RatMatrix& a, const RatVec& b, const RatVec& c);

// Phase-1 only: a feasible point of {x : A x <= b}, or nullopt.
std::optional<RatVec> lp_feasible_point(const RatMatrix& a, const RatVec& b);

}  // namespace hirsch
