#pragma once

// Exact rational feasibility for {x >= 0 : A x = b} by phase-one simplex
// with Bland's rule (no cycling, so it always terminates).

#include "ehrkit/numeric.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace ehrkit {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// Decides whether A x = b has a solution with x >= 0. A has one row per
/// entry of b; all rows must have equal length.
inline bool nonnegative_solution_exists(RationalMatrix a, RationalVector b) {
    const std::size_t rows = b.size();
    if (a.size() != rows) {
        throw std::invalid_argument("nonnegative_solution_exists: row count mismatch");
    }
    if (rows == 0) {
        return true;
    }
    const std::size_t cols = a.front().size();
    for (const auto& row : a) {
        if (row.size() != cols) {
            throw std::invalid_argument("nonnegative_solution_exists: ragged matrix");
        }
    }
    for (std::size_t i = 0; i < rows; ++i) {
        if (b[i] < 0) {
            for (auto& x : a[i]) x = -x;
            b[i] = -b[i];
        }
    }

    // Tableau columns: originals, one artificial per row, then the rhs.
    const std::size_t width = cols + rows + 1;
    const std::size_t rhs = width - 1;
    RationalMatrix tableau(rows, RationalVector(width, Rational(0)));
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) tableau[i][j] = a[i][j];
        tableau[i][cols + i] = 1;
        tableau[i][rhs] = b[i];
        basis[i] = cols + i;
    }
    // Reduced costs of "minimize sum of artificials"; objective[rhs] is -value.
    RationalVector objective(width, Rational(0));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) objective[j] -= tableau[i][j];
        objective[rhs] -= tableau[i][rhs];
    }

    for (;;) {
        std::optional<std::size_t> entering;
        for (std::size_t j = 0; j + 1 < width; ++j) {
            if (objective[j] < 0) {
                entering = j;
                break;
            }
        }
        if (!entering) break;
        const std::size_t q = *entering;

        std::optional<std::size_t> leaving;
        Rational best_ratio;
        for (std::size_t i = 0; i < rows; ++i) {
            if (tableau[i][q] <= 0) continue;
            Rational ratio = tableau[i][rhs] / tableau[i][q];
            if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[*leaving])) {
                leaving = i;
                best_ratio = std::move(ratio);
            }
        }
        // Phase one is bounded below by zero, so an entering column always has a pivot.
        if (!leaving) {
            throw std::logic_error("phase-one simplex: unbounded direction");
        }
        const std::size_t p = *leaving;

        const Rational pivot = tableau[p][q];
        for (auto& x : tableau[p]) x /= pivot;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == p || tableau[i][q] == 0) continue;
            const Rational factor = tableau[i][q];
            for (std::size_t j = 0; j < width; ++j) tableau[i][j] -= factor * tableau[p][j];
        }
        const Rational factor = objective[q];
        for (std::size_t j = 0; j < width; ++j) objective[j] -= factor * tableau[p][j];
        basis[p] = q;
    }
    return objective[rhs] == 0;
}

/// True iff target = sum_g lambda_g * g + sum_r mu_r * r with lambda, mu >= 0
/// and sum lambda = 1: target lies in conv(generators) + cone(rays).
/// Exact; generators must be nonempty.
inline bool lp_feasible(const RationalVector& target, const std::vector<RationalVector>& generators,
                        const std::vector<RationalVector>& rays = {}) {
    if (generators.empty()) {
        throw std::invalid_argument("lp_feasible: no generators");
    }
    const std::size_t dim = target.size();
    const std::size_t cols = generators.size() + rays.size();
    RationalMatrix a(dim + 1, RationalVector(cols, Rational(0)));
    RationalVector b(dim + 1, Rational(0));
    std::size_t column = 0;
    for (const auto& g : generators) {
        if (g.size() != dim) throw std::invalid_argument("lp_feasible: generator dimension mismatch");
        for (std::size_t i = 0; i < dim; ++i) a[i][column] = g[i];
        a[dim][column] = 1;
        ++column;
    }
    for (const auto& r : rays) {
        if (r.size() != dim) throw std::invalid_argument("lp_feasible: ray dimension mismatch");
        for (std::size_t i = 0; i < dim; ++i) a[i][column] = r[i];
        ++column;
    }
    for (std::size_t i = 0; i < dim; ++i) b[i] = target[i];
    b[dim] = 1;
    return nonnegative_solution_exists(std::move(a), std::move(b));
}

} // namespace ehrkit
