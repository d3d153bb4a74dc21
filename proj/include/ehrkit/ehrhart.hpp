#pragma once

// Closed-form Ehrhart polynomials of hypersimplices, half-open
// hypersimplices and independence polytopes of uniform matroids.
//
// Parameters follow the (k, n) convention throughout. The half-open
// hypersimplex of (k, n) lives in R^{n-1}:
//     {x in [0,1]^{n-1} : k-1 < sum x_i <= k}   for k >= 2,
// and for k = 1 it is the closed simplex Delta_{1,n}.

#include "ehrkit/combinatorics.hpp"
#include "ehrkit/numeric.hpp"
#include "ehrkit/polynomial.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ehrkit {

enum class Family { hypersimplex, half_open, independence };

inline std::string_view family_name(Family f) {
    switch (f) {
    case Family::hypersimplex: return "hypersimplex";
    case Family::half_open: return "half_open";
    case Family::independence: return "independence";
    }
    return "unknown";
}

/// Accepts "hypersimplex", "half_open", "half-open" and "independence".
inline Family parse_family(std::string_view name) {
    if (name == "hypersimplex") return Family::hypersimplex;
    if (name == "half_open" || name == "half-open") return Family::half_open;
    if (name == "independence") return Family::independence;
    throw domain_error("unknown family \"" + std::string(name) + "\"");
}

/// Throws domain_error unless (k, n) is admissible for the family:
/// 1 <= k <= n-1 for both hypersimplex families, 1 <= k <= n otherwise.
inline void require_valid(Family f, unsigned k, unsigned n) {
    const bool ok = f == Family::independence ? (k >= 1 && k <= n) : (k >= 1 && k + 1 <= n);
    if (!ok) {
        throw domain_error(std::string(family_name(f)) + "(" + std::to_string(k) + "," +
                           std::to_string(n) + ") is outside the valid range");
    }
}

inline bool is_valid(Family f, unsigned k, unsigned n) {
    return f == Family::independence ? (k >= 1 && k <= n) : (k >= 1 && k + 1 <= n);
}

/// Dimension of the polytope, which is also the degree of its Ehrhart polynomial.
inline unsigned dimension(Family f, unsigned n) {
    return f == Family::independence ? n : n - 1;
}

/// Degree-m coefficient of i(Delta_{k,n}, t) for 1 <= m <= n-1:
///     (1/(n-1)!) * sum_{l=0}^{k-1} W(l, n, m+1) * A(m, k-l-1).
inline Rational hypersimplex_coefficient(unsigned k, unsigned n, unsigned m, MemoTable& memo) {
    if (k < 1 || k + 1 > n || m < 1 || m + 1 > n) {
        throw domain_error("hypersimplex_coefficient(" + std::to_string(k) + "," + std::to_string(n) +
                           "," + std::to_string(m) + ") requires 1 <= k <= n-1 and 1 <= m <= n-1");
    }
    const auto eulerian_m = eulerian_row(m);
    Natural sum = 0;
    for (unsigned l = 0; l < k; ++l) {
        const unsigned descents = k - l - 1;
        if (descents >= eulerian_m.size()) {
            continue;
        }
        sum += weighted_lah(l, n, m + 1, memo) * eulerian_m[descents];
    }
    return Rational(sum, factorial(n - 1));
}

inline Rational hypersimplex_coefficient(unsigned k, unsigned n, unsigned m) {
    return hypersimplex_coefficient(k, n, m, shared_memo());
}

/// i(Delta_{k,n}, t), degree n-1, constant term 1.
inline Polynomial hypersimplex_ehrhart(unsigned k, unsigned n, MemoTable& memo) {
    require_valid(Family::hypersimplex, k, n);
    std::vector<Rational> coefficients(n, Rational(0));
    coefficients[0] = 1;
    for (unsigned m = 1; m + 1 <= n; ++m) {
        coefficients[m] = hypersimplex_coefficient(k, n, m, memo);
    }
    return Polynomial(std::move(coefficients));
}

inline Polynomial hypersimplex_ehrhart(unsigned k, unsigned n) {
    return hypersimplex_ehrhart(k, n, shared_memo());
}

/// i(Delta'_{k,n}, t) = i(Delta_{k,n}, t) - i(Delta_{k-1,n-1}, t) for k >= 2,
/// including k = n-1; the simplex Delta_{1,n} for k = 1.
inline Polynomial half_open_ehrhart(unsigned k, unsigned n, MemoTable& memo) {
    require_valid(Family::half_open, k, n);
    if (k == 1) {
        return hypersimplex_ehrhart(1, n, memo);
    }
    return hypersimplex_ehrhart(k, n, memo) - hypersimplex_ehrhart(k - 1, n - 1, memo);
}

inline Polynomial half_open_ehrhart(unsigned k, unsigned n) {
    return half_open_ehrhart(k, n, shared_memo());
}

/// i(P_I(U_{k,n}), t) as the sum of the half-open layers j = 1..k of R^n.
inline Polynomial independence_ehrhart(unsigned k, unsigned n, MemoTable& memo) {
    require_valid(Family::independence, k, n);
    Polynomial total;
    for (unsigned j = 1; j <= k; ++j) {
        total += half_open_ehrhart(j, n + 1, memo);
    }
    return total;
}

inline Polynomial independence_ehrhart(unsigned k, unsigned n) {
    return independence_ehrhart(k, n, shared_memo());
}

inline Polynomial closed_form_ehrhart(Family f, unsigned k, unsigned n, MemoTable& memo) {
    switch (f) {
    case Family::hypersimplex: return hypersimplex_ehrhart(k, n, memo);
    case Family::half_open: return half_open_ehrhart(k, n, memo);
    case Family::independence: return independence_ehrhart(k, n, memo);
    }
    throw domain_error("unknown family");
}

inline Polynomial closed_form_ehrhart(Family f, unsigned k, unsigned n) {
    return closed_form_ehrhart(f, k, n, shared_memo());
}

enum class Sign { negative, zero, positive };

struct CoefficientSign {
    std::size_t degree = 0;
    Sign sign = Sign::zero;

    friend bool operator==(const CoefficientSign&, const CoefficientSign&) = default;
};

/// Sign of every coefficient, degree 0 through deg p.
inline std::vector<CoefficientSign> positivity_report(const Polynomial& p) {
    std::vector<CoefficientSign> report;
    report.reserve(p.degree() + 1);
    for (std::size_t d = 0; d <= p.degree(); ++d) {
        const Rational& c = p.coefficients()[d];
        report.push_back({d, c < 0 ? Sign::negative : (c == 0 ? Sign::zero : Sign::positive)});
    }
    return report;
}

} // namespace ehrkit
