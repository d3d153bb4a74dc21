#include "ehrkit/ehrhart.hpp"
#include "ehrkit/polynomial.hpp"

#include <gtest/gtest.h>

#include <string>
#include <vector>

namespace ehrkit {
namespace {

Polynomial parse_poly(const std::vector<std::string>& coefficients) {
    std::vector<Rational> q;
    for (const auto& c : coefficients) q.push_back(parse_rational(c));
    return Polynomial(q);
}

// prod_{i=1}^{n-1} (t + i) / (n-1)!, expanded factor by factor
Polynomial simplex_binomial(unsigned n) {
    std::vector<Rational> acc{Rational(1)};
    for (unsigned i = 1; i < n; ++i) {
        std::vector<Rational> next(acc.size() + 1, Rational(0));
        for (std::size_t d = 0; d < acc.size(); ++d) {
            next[d] += acc[d] * i;
            next[d + 1] += acc[d];
        }
        acc = next;
    }
    Rational fact = 1;
    for (unsigned i = 2; i < n; ++i) fact *= i;
    for (auto& c : acc) c /= fact;
    return Polynomial(acc);
}

// ---- polynomial arithmetic ----

TEST(Polynomial, EvaluationAndTrimming) {
    const Polynomial p{1, Rational(3, 2), Rational(1, 2)};
    EXPECT_EQ(p(0), 1);
    EXPECT_EQ(p(2), 6);
    EXPECT_EQ(p(Rational(1, 2)), Rational(15, 8));
    EXPECT_EQ(p.degree(), 2U);
    EXPECT_EQ(Polynomial({1, 2, 0, 0}).degree(), 1U);
    EXPECT_TRUE(Polynomial(std::vector<Rational>{}).is_zero());
}

TEST(Polynomial, RingOperations) {
    const Polynomial p{1, Rational(3, 2), Rational(1, 2)};
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ((p - p).degree(), 0U);
    EXPECT_EQ(p + p, p * Rational(2));
    EXPECT_EQ(Rational(2) * p, p * Rational(2));
    EXPECT_EQ(Polynomial::linear(1) * Polynomial::linear(2), Polynomial({2, 3, 1}));
    EXPECT_EQ(power(Polynomial::linear(1), 3), Polynomial({1, 3, 3, 1}));
    EXPECT_EQ(p * Rational(0), Polynomial());
    EXPECT_EQ(p.coefficient(7), 0);
}

TEST(Polynomial, PlainRendering) {
    EXPECT_EQ(to_string(Polynomial{1, Rational(3, 2), Rational(1, 2)}), "1 + 3/2 t + 1/2 t^2");
    EXPECT_EQ(to_string(Polynomial{0, Rational(5, 6), Rational(3, 2), Rational(2, 3)}), "5/6 t + 3/2 t^2 + 2/3 t^3");
    EXPECT_EQ(to_string(Polynomial{1, -1}), "1 - t");
    EXPECT_EQ(to_string(Polynomial{0, 0, -2}), "-2 t^2");
    EXPECT_EQ(to_string(Polynomial()), "0");
}

TEST(Rational, StringRoundTrip) {
    EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
    EXPECT_EQ(to_string(Rational(-6, 4)), "-3/2");
    EXPECT_EQ(to_string(Rational(4, 2)), "2");
    EXPECT_EQ(parse_rational("2/4"), Rational(1, 2));
    EXPECT_EQ(parse_rational("-7"), Rational(-7));
    EXPECT_EQ(parse_rational("+7/3"), Rational(7, 3));
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("x"), std::invalid_argument);
    EXPECT_THROW(parse_rational("1/"), std::invalid_argument);
}

// ---- closed forms: frozen brute-force values ----

TEST(HypersimplexEhrhart, FrozenPolynomials) {
    EXPECT_EQ(hypersimplex_ehrhart(1, 3), parse_poly({"1", "3/2", "1/2"}));
    EXPECT_EQ(hypersimplex_ehrhart(2, 4), parse_poly({"1", "7/3", "2", "2/3"}));
    EXPECT_EQ(hypersimplex_ehrhart(2, 5), parse_poly({"1", "35/12", "85/24", "25/12", "11/24"}));
    EXPECT_EQ(hypersimplex_ehrhart(3, 6), parse_poly({"1", "37/10", "25/4", "23/4", "11/4", "11/20"}));
}

TEST(HypersimplexCoefficient, OctahedronLeadingTerm) {
    EXPECT_EQ(hypersimplex_coefficient(2, 4, 3), Rational(2, 3));
}

TEST(HypersimplexCoefficient, SimplexIsStirlingOverFactorial) {
    for (unsigned n = 2; n <= 10; ++n) {
        const Polynomial expected = simplex_binomial(n);
        for (unsigned m = 1; m < n; ++m) {
            EXPECT_EQ(hypersimplex_coefficient(1, n, m), Rational(stirling_first_unsigned(n, m + 1), factorial(n - 1)));
            EXPECT_EQ(hypersimplex_coefficient(1, n, m), expected.coefficient(m));
        }
    }
}

TEST(HypersimplexCoefficient, DomainErrors) {
    EXPECT_THROW(hypersimplex_coefficient(0, 4, 1), domain_error);
    EXPECT_THROW(hypersimplex_coefficient(4, 4, 1), domain_error);
    EXPECT_THROW(hypersimplex_coefficient(1, 4, 0), domain_error);
    EXPECT_THROW(hypersimplex_coefficient(1, 4, 4), domain_error);
}

TEST(HypersimplexEhrhart, ValueAtOneIsBinomial) {
    for (unsigned n = 2; n <= 12; ++n) {
        for (unsigned k = 1; k < n; ++k) EXPECT_EQ(hypersimplex_ehrhart(k, n)(1), Rational(binomial(n, k)));
    }
}

TEST(HypersimplexEhrhart, ReflectionSymmetry) {
    for (unsigned n = 2; n <= 12; ++n) {
        for (unsigned k = 1; k < n; ++k) EXPECT_EQ(hypersimplex_ehrhart(k, n), hypersimplex_ehrhart(n - k, n));
    }
}

TEST(HypersimplexEhrhart, DomainErrors) {
    EXPECT_THROW(hypersimplex_ehrhart(0, 3), domain_error);
    EXPECT_THROW(hypersimplex_ehrhart(3, 3), domain_error);
    EXPECT_THROW(hypersimplex_ehrhart(1, 1), domain_error);
}

TEST(HypersimplexCoefficient, StrictGrowthAlongDiagonal) {
    for (unsigned n = 4; n <= 12; ++n) {
        for (unsigned k = 2; k + 2 <= n; ++k) {
            for (unsigned m = 1; m + 2 <= n; ++m) {
                EXPECT_GT(hypersimplex_coefficient(k, n, m), hypersimplex_coefficient(k - 1, n - 1, m));
            }
        }
    }
}

TEST(HalfOpenEhrhart, FrozenPolynomials) {
    EXPECT_EQ(half_open_ehrhart(2, 4), parse_poly({"0", "5/6", "3/2", "2/3"}));
    EXPECT_EQ(half_open_ehrhart(2, 5), parse_poly({"0", "13/12", "61/24", "23/12", "11/24"}));
    EXPECT_EQ(half_open_ehrhart(3, 5), parse_poly({"0", "7/12", "37/24", "17/12", "11/24"}));
    // k = n - 1, outside the range of the difference formula's original statement
    EXPECT_EQ(half_open_ehrhart(4, 5), parse_poly({"0", "1/4", "11/24", "1/4", "1/24"}));
}

TEST(HalfOpenEhrhart, KEqualsOneIsTheSimplex) {
    for (unsigned n = 2; n <= 9; ++n) EXPECT_EQ(half_open_ehrhart(1, n), hypersimplex_ehrhart(1, n));
}

TEST(HalfOpenEhrhart, ValuesAtZeroAndOne) {
    EXPECT_EQ(half_open_ehrhart(2, 5)(1), 6);
    for (unsigned n = 3; n <= 12; ++n) {
        for (unsigned k = 2; k < n; ++k) {
            EXPECT_EQ(half_open_ehrhart(k, n)(0), 0);
            // 0/1 points of [0,1]^{n-1} with coordinate sum exactly k
            EXPECT_EQ(half_open_ehrhart(k, n)(1), Rational(binomial(n - 1, k)));
        }
    }
}

TEST(HalfOpenEhrhart, PositiveCoefficients) {
    for (unsigned n = 2; n <= 12; ++n) {
        for (unsigned k = 1; k < n; ++k) {
            const auto report = positivity_report(half_open_ehrhart(k, n));
            ASSERT_EQ(report.size(), n);
            EXPECT_EQ(report[0].sign, k == 1 ? Sign::positive : Sign::zero);
            for (unsigned m = 1; m < n; ++m) EXPECT_EQ(report[m].sign, Sign::positive) << k << "," << n << "," << m;
        }
    }
}

TEST(IndependenceEhrhart, FrozenPolynomials) {
    EXPECT_EQ(independence_ehrhart(1, 3), parse_poly({"1", "11/6", "1", "1/6"}));
    EXPECT_EQ(independence_ehrhart(2, 3), parse_poly({"1", "8/3", "5/2", "5/6"}));
    EXPECT_EQ(independence_ehrhart(2, 4), parse_poly({"1", "19/6", "4", "7/3", "1/2"}));
    EXPECT_EQ(independence_ehrhart(1, 3)(2), 10);
}

TEST(IndependenceEhrhart, FullRankIsTheCube) {
    for (unsigned n = 1; n <= 9; ++n) EXPECT_EQ(independence_ehrhart(n, n), power(Polynomial::linear(1), n));
}

TEST(IndependenceEhrhart, ValueAtOneCountsIndependentSets) {
    for (unsigned n = 1; n <= 12; ++n) {
        Natural independent = 0;
        for (unsigned k = 1; k <= n; ++k) {
            if (k == 1) independent = 1 + binomial(n, 1);
            else independent += binomial(n, k);
            EXPECT_EQ(independence_ehrhart(k, n)(1), Rational(independent));
        }
    }
}

TEST(IndependenceEhrhart, DomainErrors) {
    EXPECT_THROW(independence_ehrhart(0, 3), domain_error);
    EXPECT_THROW(independence_ehrhart(4, 3), domain_error);
    EXPECT_THROW(half_open_ehrhart(5, 5), domain_error);
}

TEST(PositivityReport, Classification) {
    const auto zero = positivity_report(Polynomial());
    ASSERT_EQ(zero.size(), 1U);
    EXPECT_EQ(zero[0], (CoefficientSign{0, Sign::zero}));
    const auto mixed = positivity_report(Polynomial{-1, 0, 2});
    EXPECT_EQ(mixed, (std::vector<CoefficientSign>{{0, Sign::negative}, {1, Sign::zero}, {2, Sign::positive}}));
    for (const auto& c : positivity_report(hypersimplex_ehrhart(2, 5))) EXPECT_EQ(c.sign, Sign::positive);
    const auto half = positivity_report(half_open_ehrhart(3, 6));
    EXPECT_EQ(half[0].sign, Sign::zero);
    for (unsigned d = 1; d <= 5; ++d) EXPECT_EQ(half[d].sign, Sign::positive);
}

TEST(ClosedForms, IntegerValuesOnSmallDilates) {
    for (Family f : {Family::hypersimplex, Family::half_open, Family::independence}) {
        for (unsigned n = 1; n <= 9; ++n) {
            for (unsigned k = 1; k <= n; ++k) {
                if (!is_valid(f, k, n)) continue;
                const auto p = closed_form_ehrhart(f, k, n);
                EXPECT_EQ(p.degree(), dimension(f, n));
                for (unsigned t = 0; t <= 2 * n; ++t) EXPECT_TRUE(is_integer(p(t)));
            }
        }
    }
}

TEST(Family, NamesRoundTrip) {
    EXPECT_EQ(parse_family("half-open"), Family::half_open);
    for (Family f : {Family::hypersimplex, Family::half_open, Family::independence}) {
        EXPECT_EQ(parse_family(family_name(f)), f);
    }
    EXPECT_THROW(parse_family("cube"), domain_error);
}

} // namespace
} // namespace ehrkit
