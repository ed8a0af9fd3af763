// feasibility.hpp — exact rational linear feasibility by Fourier–Motzkin
//
// Part of luna, a toolkit for Luna spherical systems.
// Licensed under the Apache License, Version 2.0 (see LICENSE file).

#pragma once

#include <optional>
#include <vector>

#include "luna/rational.hpp"

namespace luna {

// A constraint sum_j coef[j] * x_j >= rhs with integer data.
struct LinearConstraint {
    std::vector<long long> coef;
    long long rhs = 0;
};

// Decides feasibility of a system of non-strict linear inequalities over the
// rationals and, when feasible, returns one solution. Variables are
// eliminated in ascending index order; back-substitution picks the value with
// the smallest denominator in the admissible interval (integers first), so
// the returned point is deterministic.
std::optional<std::vector<Rat>> feasible_point(
    const std::vector<LinearConstraint>& constraints, int nvars);

} // namespace luna
