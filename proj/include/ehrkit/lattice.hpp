#pragma once

// Brute-force integer-point counting over half-open H-polytopes inside a box,
// and exact interpolation of Ehrhart polynomials from the counts. This is
// the independent check for the closed forms in ehrhart.hpp.

#include "ehrkit/ehrhart.hpp"
#include "ehrkit/numeric.hpp"
#include "ehrkit/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace ehrkit {

enum class Relation { less_equal, less, equal, greater_equal, greater };

/// coeffs . x  (relation)  bound
struct LinearConstraint {
    std::vector<Rational> coeffs;
    Rational bound;
    Relation relation = Relation::less_equal;
};

/// Region {x in Z^dim : 0 <= x_i <= box_upper[i], all constraints hold}.
/// The t-dilate scales the box and every bound by t; strict relations stay
/// strict, so the t = 0 dilate is the origin if it satisfies the scaled
/// constraints and empty otherwise.
struct HPolytope {
    std::string label;
    std::size_t dim = 0;
    std::vector<unsigned> box_upper;
    std::vector<LinearConstraint> constraints;
};

struct CountOptions {
    /// Maximum number of candidate points prod(t * box_upper[i] + 1).
    std::uint64_t budget = 1'000'000'000;
    /// Workers splitting the outermost coordinate.
    unsigned jobs = 1;
};

/// Sample values i(P, 0), i(P, 1), ...
using CountSeries = std::vector<Natural>;

namespace detail {

inline LinearConstraint coordinate_sum(std::size_t dim, Relation relation, const Rational& bound) {
    return {std::vector<Rational>(dim, Rational(1)), bound, relation};
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

// A constraint scaled to integer coefficients: lo <= coeffs . x <= hi.
struct IntegerRow {
    std::vector<std::int64_t> coeffs;
    bool has_lo = false;
    bool has_hi = false;
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    // Extremes of coeffs[i..] . x[i..] over the box, indexed by i (size dim+1).
    std::vector<std::int64_t> suffix_min;
    std::vector<std::int64_t> suffix_max;

    bool admits(std::int64_t partial, std::size_t next) const {
        if (has_hi && partial + suffix_min[next] > hi) return false;
        if (has_lo && partial + suffix_max[next] < lo) return false;
        return true;
    }
};

class DilateEnumerator {
public:
    DilateEnumerator(const HPolytope& p, unsigned t, std::uint64_t budget) : dim_(p.dim) {
        if (p.box_upper.size() != p.dim) {
            throw std::invalid_argument(p.label + ": box has " + std::to_string(p.box_upper.size()) +
                                        " bounds for dimension " + std::to_string(p.dim));
        }
        Integer candidates = 1;
        upper_.reserve(dim_);
        for (unsigned u : p.box_upper) {
            const Integer side = Integer(u) * t;
            if (side > std::numeric_limits<std::int32_t>::max()) {
                throw budget_exceeded(p.label + " at t=" + std::to_string(t) + ": box side too large");
            }
            upper_.push_back(static_cast<std::int64_t>(side));
            candidates *= side + 1;
        }
        if (candidates > budget) {
            throw budget_exceeded(p.label + " at t=" + std::to_string(t) + " needs " + candidates.str() +
                                  " candidate points, budget is " + std::to_string(budget));
        }
        for (const auto& c : p.constraints) {
            rows_.push_back(scale_row(p, c, t));
        }
    }

    std::uint64_t count(unsigned offset, unsigned stride) const {
        std::vector<std::int64_t> sums(rows_.size(), 0);
        if (dim_ == 0) {
            return satisfied(sums) ? 1 : 0;
        }
        return count_level(0, sums, offset, stride);
    }

    template <class Visitor>
    void visit(Visitor&& visitor) const {
        std::vector<std::int64_t> sums(rows_.size(), 0);
        std::vector<std::int64_t> point(dim_, 0);
        if (dim_ == 0) {
            if (satisfied(sums)) visitor(std::span<const std::int64_t>(point));
            return;
        }
        visit_level(0, sums, point, visitor);
    }

    std::size_t dim() const { return dim_; }

private:
    IntegerRow scale_row(const HPolytope& p, const LinearConstraint& c, unsigned t) const {
        if (c.coeffs.size() != dim_) {
            throw std::invalid_argument(p.label + ": constraint has " + std::to_string(c.coeffs.size()) +
                                        " coefficients for dimension " + std::to_string(dim_));
        }
        Integer lcm = denominator(c.bound);
        for (const auto& q : c.coeffs) {
            lcm = boost::multiprecision::lcm(lcm, denominator(q));
        }
        // bound * t, scaled; always integral since lcm clears its denominator
        const Integer bound = numerator(c.bound * lcm) * t;
        std::vector<Integer> coeffs;
        Integer magnitude = abs(bound) + 1;
        for (std::size_t i = 0; i < dim_; ++i) {
            coeffs.push_back(numerator(c.coeffs[i] * lcm));
            magnitude += abs(coeffs.back()) * upper_[i];
        }
        if (magnitude > (Integer(1) << 62)) {
            throw std::overflow_error(p.label + ": constraint magnitudes exceed 64-bit enumeration range");
        }
        IntegerRow row;
        for (const auto& a : coeffs) {
            row.coeffs.push_back(static_cast<std::int64_t>(a));
        }
        const auto b = static_cast<std::int64_t>(bound);
        switch (c.relation) {
        case Relation::less_equal: row.has_hi = true; row.hi = b; break;
        case Relation::less: row.has_hi = true; row.hi = b - 1; break;
        case Relation::equal: row.has_lo = row.has_hi = true; row.lo = row.hi = b; break;
        case Relation::greater_equal: row.has_lo = true; row.lo = b; break;
        case Relation::greater: row.has_lo = true; row.lo = b + 1; break;
        }
        row.suffix_min.assign(dim_ + 1, 0);
        row.suffix_max.assign(dim_ + 1, 0);
        for (std::size_t i = dim_; i-- > 0;) {
            const std::int64_t extreme = row.coeffs[i] * upper_[i];
            row.suffix_min[i] = row.suffix_min[i + 1] + std::min<std::int64_t>(0, extreme);
            row.suffix_max[i] = row.suffix_max[i + 1] + std::max<std::int64_t>(0, extreme);
        }
        return row;
    }

    bool satisfied(const std::vector<std::int64_t>& sums) const {
        for (std::size_t c = 0; c < rows_.size(); ++c) {
            if (!rows_[c].admits(sums[c], dim_)) return false;
        }
        return true;
    }

    // Feasible values of the last coordinate form an interval; count it directly.
    std::uint64_t count_last(const std::vector<std::int64_t>& sums) const {
        const std::size_t i = dim_ - 1;
        std::int64_t first = 0;
        std::int64_t last = upper_[i];
        for (std::size_t c = 0; c < rows_.size() && first <= last; ++c) {
            const auto& row = rows_[c];
            const std::int64_t a = row.coeffs[i];
            const std::int64_t s = sums[c];
            if (a == 0) {
                if ((row.has_hi && s > row.hi) || (row.has_lo && s < row.lo)) return 0;
                continue;
            }
            if (row.has_hi) {
                if (a > 0) last = std::min(last, floor_div(row.hi - s, a));
                else first = std::max(first, ceil_div(row.hi - s, a));
            }
            if (row.has_lo) {
                if (a > 0) first = std::max(first, ceil_div(row.lo - s, a));
                else last = std::min(last, floor_div(row.lo - s, a));
            }
        }
        return first <= last ? static_cast<std::uint64_t>(last - first + 1) : 0;
    }

    // Returns false once a larger value at this level can no longer help.
    bool step(std::size_t level, std::int64_t value, std::vector<std::int64_t>& sums, bool& keep_going) const {
        bool ok = true;
        keep_going = true;
        for (std::size_t c = 0; c < rows_.size(); ++c) {
            const auto& row = rows_[c];
            const std::int64_t a = row.coeffs[level];
            sums[c] += a * value;
            if (!row.admits(sums[c], level + 1)) {
                ok = false;
                // partial sums only move further out of range as value grows
                if ((a > 0 && row.has_hi && sums[c] + row.suffix_min[level + 1] > row.hi) ||
                    (a < 0 && row.has_lo && sums[c] + row.suffix_max[level + 1] < row.lo)) {
                    keep_going = false;
                }
            }
        }
        return ok;
    }

    void undo(std::size_t level, std::int64_t value, std::vector<std::int64_t>& sums) const {
        for (std::size_t c = 0; c < rows_.size(); ++c) {
            sums[c] -= rows_[c].coeffs[level] * value;
        }
    }

    std::uint64_t count_level(std::size_t level, std::vector<std::int64_t>& sums, unsigned offset,
                              unsigned stride) const {
        if (level + 1 == dim_ && stride == 1) {
            return count_last(sums);
        }
        std::uint64_t total = 0;
        for (std::int64_t v = offset; v <= upper_[level]; v += stride) {
            bool keep_going = true;
            const bool ok = step(level, v, sums, keep_going);
            if (ok) {
                total += level + 1 == dim_ ? 1 : count_level(level + 1, sums, 0, 1);
            }
            undo(level, v, sums);
            if (!keep_going) break;
        }
        return total;
    }

    template <class Visitor>
    void visit_level(std::size_t level, std::vector<std::int64_t>& sums, std::vector<std::int64_t>& point,
                     Visitor& visitor) const {
        for (std::int64_t v = 0; v <= upper_[level]; ++v) {
            bool keep_going = true;
            const bool ok = step(level, v, sums, keep_going);
            if (ok) {
                point[level] = v;
                if (level + 1 == dim_) {
                    visitor(std::span<const std::int64_t>(point));
                } else {
                    visit_level(level + 1, sums, point, visitor);
                }
            }
            undo(level, v, sums);
            if (!keep_going) break;
        }
        point[level] = 0;
    }

    std::size_t dim_;
    std::vector<std::int64_t> upper_;
    std::vector<IntegerRow> rows_;
};

} // namespace detail

/// #(t P cap Z^dim). Throws budget_exceeded when the candidate box exceeds
/// options.budget. With jobs > 1 the outermost coordinate is dealt out
/// round-robin; the result does not depend on jobs.
inline Natural count_points(const HPolytope& p, unsigned t, const CountOptions& options = {}) {
    const detail::DilateEnumerator enumerator(p, t, options.budget);
    const unsigned jobs = std::max(1U, options.jobs);
    if (jobs == 1 || p.dim == 0) {
        return Natural(enumerator.count(0, 1));
    }
    std::vector<std::uint64_t> partial(jobs, 0);
    {
        std::vector<std::jthread> workers;
        workers.reserve(jobs);
        for (unsigned w = 0; w < jobs; ++w) {
            workers.emplace_back([&, w] { partial[w] = enumerator.count(w, jobs); });
        }
    }
    Natural total = 0;
    for (auto c : partial) total += c;
    return total;
}

/// Calls visitor(span<const int64_t>) for every integer point of the t-dilate,
/// in lexicographic order. Same budget guard as count_points.
template <class Visitor>
void for_each_point(const HPolytope& p, unsigned t, Visitor&& visitor, const CountOptions& options = {}) {
    const detail::DilateEnumerator enumerator(p, t, options.budget);
    enumerator.visit(visitor);
}

/// Exact membership test of x in the t-dilate, evaluated in rational
/// arithmetic (independent of the enumerator's integer scaling).
inline bool contains(const HPolytope& p, unsigned t, std::span<const std::int64_t> x) {
    if (x.size() != p.dim) return false;
    for (std::size_t i = 0; i < p.dim; ++i) {
        if (x[i] < 0 || Integer(x[i]) > Integer(p.box_upper[i]) * t) return false;
    }
    for (const auto& c : p.constraints) {
        Rational lhs = 0;
        if (std::all_of(c.coeffs.begin(), c.coeffs.end(), [](const Rational& a) { return is_integer(a); })) {
            Integer sum = 0;
            for (std::size_t i = 0; i < p.dim; ++i) sum += numerator(c.coeffs[i]) * x[i];
            lhs = sum;
        } else {
            for (std::size_t i = 0; i < p.dim; ++i) lhs += c.coeffs[i] * x[i];
        }
        const Rational rhs = c.bound * t;
        bool ok = false;
        switch (c.relation) {
        case Relation::less_equal: ok = lhs <= rhs; break;
        case Relation::less: ok = lhs < rhs; break;
        case Relation::equal: ok = lhs == rhs; break;
        case Relation::greater_equal: ok = lhs >= rhs; break;
        case Relation::greater: ok = lhs > rhs; break;
        }
        if (!ok) return false;
    }
    return true;
}

/// Delta_{k,n} in R^n: sum x_i = k.
inline HPolytope build_hypersimplex(unsigned k, unsigned n) {
    require_valid(Family::hypersimplex, k, n);
    return {"hypersimplex(" + std::to_string(k) + "," + std::to_string(n) + ")", n,
            std::vector<unsigned>(n, 1), {detail::coordinate_sum(n, Relation::equal, k)}};
}

/// Delta'_{k,n} in R^{n-1}: k-1 < sum x_i <= k, or sum x_i <= 1 when k = 1
/// (the simplex Delta_{1,n} projected along its last coordinate).
inline HPolytope build_half_open(unsigned k, unsigned n) {
    require_valid(Family::half_open, k, n);
    HPolytope p{"half_open(" + std::to_string(k) + "," + std::to_string(n) + ")", n - 1,
                std::vector<unsigned>(n - 1, 1), {}};
    if (k > 1) {
        p.constraints.push_back(detail::coordinate_sum(n - 1, Relation::greater, k - 1));
    }
    p.constraints.push_back(detail::coordinate_sum(n - 1, Relation::less_equal, k));
    return p;
}

/// P_I(U_{k,n}) in R^n: sum x_i <= k.
inline HPolytope build_independence(unsigned k, unsigned n) {
    require_valid(Family::independence, k, n);
    return {"independence(" + std::to_string(k) + "," + std::to_string(n) + ")", n,
            std::vector<unsigned>(n, 1), {detail::coordinate_sum(n, Relation::less_equal, k)}};
}

inline HPolytope build_polytope(Family f, unsigned k, unsigned n) {
    switch (f) {
    case Family::hypersimplex: return build_hypersimplex(k, n);
    case Family::half_open: return build_half_open(k, n);
    case Family::independence: return build_independence(k, n);
    }
    throw domain_error("unknown family");
}

/// Half-open layer j of an integer point of the t-dilate of P_I(U_{k,n}):
/// t(j-1) < sum x_i <= tj, with the origin assigned to layer 1.
inline unsigned independence_layer(std::span<const std::int64_t> x, unsigned t) {
    const std::int64_t sum = std::accumulate(x.begin(), x.end(), std::int64_t{0});
    if (sum == 0) return 1;
    if (t == 0) {
        throw std::invalid_argument("independence_layer: nonzero point in the t = 0 dilate");
    }
    return static_cast<unsigned>(detail::ceil_div(sum, t));
}

inline CountSeries count_series(const HPolytope& p, unsigned t_max, const CountOptions& options = {}) {
    CountSeries series;
    series.reserve(t_max + 1);
    for (unsigned t = 0; t <= t_max; ++t) {
        series.push_back(count_points(p, t, options));
    }
    return series;
}

/// The unique polynomial of degree <= values.size()-1 through (t, values[t]),
/// built from the Lagrange basis at nodes t = 0..d.
inline Polynomial interpolate(const CountSeries& values) {
    if (values.empty()) {
        throw std::invalid_argument("interpolate: empty series");
    }
    const std::size_t nodes = values.size();
    Polynomial result;
    for (std::size_t i = 0; i < nodes; ++i) {
        if (values[i] == 0) continue;
        Polynomial basis = Polynomial::constant(1);
        Integer scale = 1;
        for (std::size_t j = 0; j < nodes; ++j) {
            if (j == i) continue;
            basis = basis * Polynomial::linear(-Rational(static_cast<long long>(j)));
            scale *= static_cast<long long>(i) - static_cast<long long>(j);
        }
        result += basis * (Rational(values[i]) / scale);
    }
    return result;
}

/// Interpolates counts at t = 0..degree_bound.
inline Polynomial oracle_ehrhart(const HPolytope& p, unsigned degree_bound, const CountOptions& options = {}) {
    return interpolate(count_series(p, degree_bound, options));
}

} // namespace ehrkit
