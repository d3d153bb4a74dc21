#pragma once

// Runs every module invariant up to a size limit and reports one outcome per
// check. Brute-force checks use the lattice counter, the ordered-partition
// enumerator, permutation enumeration and the exact edge LP.

#include "ehrkit/combinatorics.hpp"
#include "ehrkit/ehrhart.hpp"
#include "ehrkit/geometry.hpp"
#include "ehrkit/lattice.hpp"
#include "ehrkit/numeric.hpp"
#include "ehrkit/polynomial.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

namespace ehrkit {

struct VerifyConfig {
    unsigned max_n = 6;
    CountOptions counting;
    GeometryLimits geometry;
};

struct CheckOutcome {
    std::string name;
    std::string scope;
    std::size_t instances = 0;
    bool passed = true;
    std::string counterexample;  // first failing instance
    double seconds = 0;
};

namespace detail {

class CheckRecorder {
public:
    CheckRecorder(std::string name, std::string scope) {
        outcome_.name = std::move(name);
        outcome_.scope = std::move(scope);
    }

    template <class Describe>
    void expect(bool ok, Describe&& describe) {
        ++outcome_.instances;
        if (!ok && outcome_.passed) {
            outcome_.passed = false;
            outcome_.counterexample = describe();
        }
    }

    CheckOutcome finish(std::chrono::steady_clock::time_point start) {
        outcome_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return std::move(outcome_);
    }

private:
    CheckOutcome outcome_;
};

inline std::string params(std::initializer_list<long> values) {
    std::string s = "(";
    bool first = true;
    for (long v : values) {
        if (!first) s += ",";
        s += std::to_string(v);
        first = false;
    }
    return s + ")";
}

inline std::string upto(const char* var, unsigned limit) { return std::string(var) + " <= " + std::to_string(limit); }

// Permutations of {0..m-1} tallied by descent count.
inline std::vector<Natural> descent_histogram(unsigned m) {
    std::vector<Natural> counts(std::max(1U, m), 0);
    std::vector<unsigned> perm(m);
    std::iota(perm.begin(), perm.end(), 0U);
    do {
        unsigned descents = 0;
        for (unsigned i = 0; i + 1 < m; ++i) descents += perm[i] > perm[i + 1] ? 1 : 0;
        counts[descents] += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return counts;
}

} // namespace detail

/// Checks every invariant up to config.max_n. Throws budget_exceeded as soon
/// as a brute-force count would exceed config.counting.budget.
class Verifier {
public:
    explicit Verifier(VerifyConfig config) : config_(std::move(config)) {}

    std::vector<CheckOutcome> run_all(const std::function<void(const CheckOutcome&)>& on_result = {}) {
        using Check = CheckOutcome (Verifier::*)();
        static constexpr Check checks[] = {
            &Verifier::lah_example,          &Verifier::lah_vs_enumeration, &Verifier::lah_row_sums,
            &Verifier::lah_stirling,         &Verifier::lah_growth,         &Verifier::eulerian_identities,
            &Verifier::reflection,           &Verifier::coefficient_growth, &Verifier::half_open_positivity,
            &Verifier::independence_positivity, &Verifier::integral_values, &Verifier::simplex_binomial,
            &Verifier::hypersimplex_oracle,  &Verifier::half_open_oracle,   &Verifier::independence_oracle,
            &Verifier::tiling,               &Verifier::parallel_determinism, &Verifier::edges_unlifted,
            &Verifier::edges_lifted,         &Verifier::lifting_bijection,
        };
        std::vector<CheckOutcome> results;
        for (auto check : checks) {
            results.push_back((this->*check)());
            if (on_result) on_result(results.back());
        }
        return results;
    }

    CheckOutcome lah_example() {
        const auto start = std::chrono::steady_clock::now();
        detail::CheckRecorder r("weighted Lah example W(0,3,2)=W(1,3,2)=3", "fixed");
        r.expect(weighted_lah(0, 3, 2, memo_) == 3, [] { return std::string("W(0,3,2) != 3"); });
        r.expect(weighted_lah(1, 3, 2, memo_) == 3, [] { return std::string("W(1,3,2) != 3"); });
        return r.finish(start);
    }

    CheckOutcome lah_vs_enumeration() {
        const auto start = std::chrono::steady_clock::now();
        const unsigned limit = std::min(config_.max_n, 8U);
        detail::CheckRecorder r("weighted Lah recurrence = partition enumeration", detail::upto("n", limit));
        for (unsigned n = 1; n <= limit; ++n) {
            for (unsigned m = 1; m <= n; ++m) {
                std::map<unsigned, Natural> by_weight;
                for_each_ordered_partition(n, m, [&](const OrderedPartition& p) { by_weight[partition_weight(p)] += 1; });
                for (long l = 0; l <= static_cast<long>(n); ++l) {
                    const Natural expected = by_weight.count(static_cast<unsigned>(l)) ? by_weight[static_cast<unsigned>(l)] : Natural(0);
                    const Natural got = weighted_lah(l, n, m, memo_);
                    r.expect(got == expected, [&] {
                        return "W" + detail::params({l, n, m}) + " = " + got.str() + ", enumeration gives " + expected.str();
                    });
                }
            }
        }
        return r.finish(start);
    }

    CheckOutcome lah_row_sums() {
        const auto start = std::chrono::steady_clock::now();
        const unsigned limit = std::min(config_.max_n, 8U);
        detail::CheckRecorder r("sum_l W(l,n,m) = Lah number", detail::upto("n", limit));
        for (unsigned n = 1; n <= limit; ++n) {
            for (unsigned m = 1; m <= n; ++m) {
                Natural sum = 0;
                for (long l = 0; l <= static_cast<long>(n - m); ++l) sum += weighted_lah(l, n, m, memo_);
                Natural enumerated = 0;
                for_each_ordered_partition(n, m, [&](const OrderedPartition&) { enumerated += 1; });
                r.expect(sum == lah_number(n, m) && enumerated == sum, [&] {
                    return "(n,m)=" + detail::params({n, m}) + ": row sum " + sum.str() + ", Lah " +
                           lah_number(n, m).str() + ", enumerated " + enumerated.str();
                });
            }
        }
        return r.finish(start);
    }

    CheckOutcome lah_stirling() {
        const auto start = std::chrono::steady_clock::now();
        detail::CheckRecorder r("W(0,n,m) = c(n,m)", detail::upto("n", config_.max_n));
        for (unsigned n = 0; n <= config_.max_n; ++n) {
            for (unsigned m = 0; m <= n; ++m) {
                r.expect(weighted_lah(0, n, m, memo_) == stirling_first_unsigned(n, m),
                         [&] { return "(n,m)=" + detail::params({n, m}); });
            }
        }
        return r.finish(start);
    }

    CheckOutcome lah_growth() {
        const auto start = std::chrono::steady_clock::now();
        detail::CheckRecorder r("W(l,n,m) > (n-1) W(l,n-1,m)", "2 <= m <= n, " + detail::upto("n", config_.max_n));
        for (unsigned n = 2; n <= config_.max_n; ++n) {
            for (unsigned m = 2; m <= n; ++m) {
                for (long l = 0; l <= static_cast<long>(n - m); ++l) {
                    const Natural lhs = weighted_lah(l, n, m, memo_);
                    const Natural rhs = Natural(n - 1) * weighted_lah(l, n - 1, m, memo_);
                    r.expect(lhs > rhs, [&] {
                        return "(l,n,m)=" + detail::params({l, n, m}) + ": " + lhs.str() + " <= " + rhs.str();
                    });
                }
            }
        }
        return r.finish(start);
    }

    CheckOutcome eulerian_identities() {
        const auto start = std::chrono::steady_clock::now();
        detail::CheckRecorder r("Eulerian row sums, symmetry and descent counts", detail::upto("m", config_.max_n));
        for (unsigned m = 0; m <= config_.max_n; ++m) {
            const auto row = eulerian_row(m);
            const Natural sum = std::accumulate(row.begin(), row.end(), Natural(0));
            r.expect(sum == factorial(m), [&] { return "row sum of m=" + std::to_string(m); });
            for (unsigned j = 0; m >= 1 && j < m; ++j) {
                r.expect(eulerian(m, j) == eulerian(m, static_cast<long>(m - 1 - j)),
                         [&] { return "symmetry at (m,j)=" + detail::params({m, j}); });
            }
            if (m >= 1 && m <= 8) {
                const auto counts = detail::descent_histogram(m);
                for (unsigned j = 0; j < m; ++j) {
                    r.expect(eulerian(m, j) == counts[j], [&] { return "descent count at (m,j)=" + detail::params({m, j}); });
                }
            }
        }
        return r.finish(start);
    }

    CheckOutcome reflection() {
        const auto start = std::chrono::steady_clock::now();
        detail::CheckRecorder r("i(D_{k,n}) = i(D_{n-k,n})", detail::upto("n", config_.max_n));
        for (unsigned n = 2; n <= config_.max_n; ++n) {
            for (unsigned k = 1; k < n; ++k) {
                r.expect(hypersimplex_ehrhart(k, n, memo_) == hypersimplex_ehrhart(n - k, n, memo_),
                         [&] { return "(k,n)=" + detail::params({k, n}); });
            }
        }
        return r.finish(start);
    }

    CheckOutcome coefficient_growth() {
        const auto start = std::chrono::steady_clock::now();
        detail::CheckRecorder r("e_{k,n,m} > e_{k-1,n-1,m}", "2 <= k <= n-2, " + detail::upto("n", config_.max_n));
        for (unsigned n = 4; n <= config_.max_n; ++n) {
            for (unsigned k = 2; k + 2 <= n; ++k) {
                for (unsigned m = 1; m + 2 <= n; ++m) {
                    const Rational lhs = hypersimplex_coefficient(k, n, m, memo_);
                    const Rational rhs = hypersimplex_coefficient(k - 1, n - 1, m, memo_);
                    r.expect(lhs > rhs, [&] {
                        return "(k,n,m)=" + detail::params({k, n, m}) + ": " + to_string(lhs) + " <= " + to_string(rhs);
                    });
                }
            }
        }
        return r.finish(start);
    }

    CheckOutcome half_open_positivity() {
        const auto start = std::chrono::steady_clock::now();
        detail::CheckRecorder r("half-open: [t^m] > 0 for m >= 1, constant 1 iff k = 1", detail::upto("n", config_.max_n));
        for (unsigned n = 2; n <= config_.max_n; ++n) {
            for (unsigned k = 1; k < n; ++k) {
                const Polynomial p = half_open_ehrhart(k, n, memo_);
                bool ok = p.degree() == n - 1 && p.coefficient(0) == (k == 1 ? 1 : 0);
                for (unsigned m = 1; m < n; ++m) ok = ok && p.coefficient(m) > 0;
                r.expect(ok, [&] { return "(k,n)=" + detail::params({k, n}) + ": " + to_string(p); });
            }
        }
        return r.finish(start);
    }

    CheckOutcome independence_positivity() {
        const auto start = std::chrono::steady_clock::now();
        detail::CheckRecorder r("independence: all coefficients > 0, constant 1", detail::upto("n", config_.max_n));
        for (unsigned n = 1; n <= config_.max_n; ++n) {
            for (unsigned k = 1; k <= n; ++k) {
                const Polynomial p = independence_ehrhart(k, n, memo_);
                bool ok = p.degree() == n && p.coefficient(0) == 1;
                for (unsigned m = 0; m <= n; ++m) ok = ok && p.coefficient(m) > 0;
                r.expect(ok, [&] { return "(k,n)=" + detail::params({k, n}) + ": " + to_string(p); });
            }
        }
        return r.finish(start);
    }

    CheckOutcome integral_values() {
        const auto start = std::chrono::steady_clock::now();
        detail::CheckRecorder r("closed forms take integer values at 0 <= t <= 2n", detail::upto("n", config_.max_n));
        for (Family f : {Family::hypersimplex, Family::half_open, Family::independence}) {
            for (unsigned n = 1; n <= config_.max_n; ++n) {
                for (unsigned k = 1; k <= n; ++k) {
                    if (!is_valid(f, k, n)) continue;
                    const Polynomial p = closed_form_ehrhart(f, k, n, memo_);
                    for (unsigned t = 0; t <= 2 * n; ++t) {
                        const Rational value = p(t);
                        r.expect(is_integer(value) && value >= 0, [&] {
                            return std::string(family_name(f)) + detail::params({k, n}) + " at t=" + std::to_string(t) +
                                   " gives " + to_string(value);
                        });
                    }
                }
            }
        }
        return r.finish(start);
    }

    CheckOutcome simplex_binomial() {
        const auto start = std::chrono::steady_clock::now();
        detail::CheckRecorder r("i(D_{1,n}) = C(t+n-1, n-1)", detail::upto("n", config_.max_n));
        for (unsigned n = 2; n <= config_.max_n; ++n) {
            Polynomial expected = Polynomial::constant(1);
            for (unsigned i = 1; i < n; ++i) expected = expected * Polynomial::linear(i);
            expected *= Rational(1, factorial(n - 1));
            r.expect(hypersimplex_ehrhart(1, n, memo_) == expected, [&] { return "n=" + std::to_string(n); });
        }
        return r.finish(start);
    }

    CheckOutcome hypersimplex_oracle() { return oracle_check(Family::hypersimplex); }
    CheckOutcome half_open_oracle() { return oracle_check(Family::half_open); }
    CheckOutcome independence_oracle() { return oracle_check(Family::independence); }

    CheckOutcome tiling() {
        const auto start = std::chrono::steady_clock::now();
        detail::CheckRecorder r("P_I(U_{k,n}) = disjoint union of half-open layers", detail::upto("n", config_.max_n) + ", t <= n");
        for (unsigned n = 1; n <= config_.max_n; ++n) {
            std::vector<HPolytope> layers;
            for (unsigned j = 1; j <= n; ++j) layers.push_back(build_half_open(j, n + 1));
            for (unsigned k = 1; k <= n; ++k) {
                const HPolytope whole = build_independence(k, n);
                for (unsigned t = 0; t <= n; ++t) {
                    Natural layer_total = 0;
                    for (unsigned j = 1; j <= k; ++j) layer_total += count_points(layers[j - 1], t, config_.counting);
                    const Natural total = count_points(whole, t, config_.counting);
                    r.expect(layer_total == total, [&] {
                        return "(k,n,t)=" + detail::params({k, n, t}) + ": layers " + layer_total.str() + ", polytope " + total.str();
                    });
                    bool disjoint = true;
                    std::string witness;
                    for_each_point(whole, t, [&](std::span<const std::int64_t> x) {
                        if (!disjoint) return;
                        unsigned hits = 0;
                        unsigned hit = 0;
                        for (unsigned j = 1; j <= k; ++j) {
                            if (contains(layers[j - 1], t, x)) { ++hits; hit = j; }
                        }
                        if (hits != 1 || hit != independence_layer(x, t)) {
                            disjoint = false;
                            witness = "point in " + std::to_string(hits) + " layers";
                        }
                    }, config_.counting);
                    r.expect(disjoint, [&] { return "(k,n,t)=" + detail::params({k, n, t}) + ": " + witness; });
                }
            }
        }
        return r.finish(start);
    }

    CheckOutcome parallel_determinism() {
        const auto start = std::chrono::steady_clock::now();
        const unsigned jobs = std::max(2U, config_.counting.jobs);
        detail::CheckRecorder r("count_points independent of worker split", detail::upto("n", config_.max_n));
        for (unsigned n = 2; n <= config_.max_n; ++n) {
            for (Family f : {Family::hypersimplex, Family::half_open, Family::independence}) {
                const unsigned k = n / 2 == 0 ? 1 : n / 2;
                if (!is_valid(f, k, n)) continue;
                const HPolytope p = build_polytope(f, k, n);
                const unsigned t = 3;
                CountOptions serial = config_.counting;
                serial.jobs = 1;
                CountOptions parallel = config_.counting;
                parallel.jobs = jobs;
                const Natural a = count_points(p, t, serial);
                const Natural b = count_points(p, t, parallel);
                r.expect(a == b, [&] { return p.label + " at t=3: " + a.str() + " vs " + b.str(); });
            }
        }
        return r.finish(start);
    }

    CheckOutcome edges_unlifted() {
        const auto start = std::chrono::steady_clock::now();
        const unsigned limit = std::min(config_.max_n, 5U);
        detail::CheckRecorder r("edges of P_I(U_{k,n}) are e_i-e_j or +-e_i", detail::upto("n", limit));
        for (unsigned n = 1; n <= limit; ++n) {
            for (unsigned k = 1; k <= n; ++k) {
                const auto directions = classify_edges(k, n, false, config_.geometry, config_.counting.jobs);
                for (const auto& d : directions) {
                    r.expect(d.kind == DirectionKind::diff || d.kind == DirectionKind::plus || d.kind == DirectionKind::minus,
                             [&] { return "(k,n)=" + detail::params({k, n}) + ": edge direction " + to_string(d); });
                }
                if (k == n) {
                    const std::size_t cube_edges = std::size_t{n} << (n - 1);
                    r.expect(directions.size() == cube_edges, [&] {
                        return "cube n=" + std::to_string(n) + " has " + std::to_string(directions.size()) + " edges";
                    });
                }
            }
        }
        return r.finish(start);
    }

    CheckOutcome edges_lifted() {
        const auto start = std::chrono::steady_clock::now();
        const unsigned limit = std::min(config_.max_n, 5U);
        detail::CheckRecorder r("edges of lifted P_I(U_{k,n}) are (e_i-e_j,0) or (e_i,-1)", detail::upto("n", limit));
        for (unsigned n = 1; n <= limit; ++n) {
            for (unsigned k = 1; k <= n; ++k) {
                for (const auto& d : classify_edges(k, n, true, config_.geometry, config_.counting.jobs)) {
                    r.expect(d.kind == DirectionKind::lifted_diff || d.kind == DirectionKind::lifted_drop,
                             [&] { return "(k,n)=" + detail::params({k, n}) + ": edge direction " + to_string(d); });
                }
            }
        }
        return r.finish(start);
    }

    CheckOutcome lifting_bijection() {
        const auto start = std::chrono::steady_clock::now();
        const unsigned limit = std::min(config_.max_n, 4U);
        detail::CheckRecorder r("lifting preserves the edge set", detail::upto("n", limit));
        for (unsigned n = 1; n <= limit; ++n) {
            for (unsigned k = 1; k <= n; ++k) {
                // both vertex lists share the same order, so edges compare by index
                auto index_pairs = [&](bool lifted) {
                    std::vector<std::pair<std::size_t, std::size_t>> pairs;
                    for (const auto& e : find_edges(enumerate_vertices(k, n, lifted, config_.geometry), lifted,
                                                    config_.geometry, config_.counting.jobs)) {
                        pairs.emplace_back(e.from, e.to);
                    }
                    return pairs;
                };
                r.expect(index_pairs(false) == index_pairs(true), [&] { return "(k,n)=" + detail::params({k, n}); });
            }
        }
        return r.finish(start);
    }

private:
    CheckOutcome oracle_check(Family f) {
        const auto start = std::chrono::steady_clock::now();
        detail::CheckRecorder r(std::string(family_name(f)) + ": closed form = brute-force interpolation (+3 extra nodes)",
                                detail::upto("n", config_.max_n));
        for (unsigned n = 1; n <= config_.max_n; ++n) {
            for (unsigned k = 1; k <= n; ++k) {
                if (!is_valid(f, k, n)) continue;
                const HPolytope p = build_polytope(f, k, n);
                const unsigned d = dimension(f, n);
                const CountSeries series = count_series(p, d + 3, config_.counting);
                const Polynomial interpolated = interpolate(CountSeries(series.begin(), series.begin() + d + 1));
                const Polynomial closed = closed_form_ehrhart(f, k, n, memo_);
                r.expect(interpolated == closed, [&] {
                    return p.label + ": closed " + to_string(closed) + ", oracle " + to_string(interpolated);
                });
                for (unsigned t = d + 1; t <= d + 3; ++t) {
                    r.expect(closed(t) == Rational(series[t]), [&] {
                        return p.label + " at t=" + std::to_string(t) + ": closed " + to_string(closed(t)) + ", count " +
                               series[t].str();
                    });
                }
            }
        }
        return r.finish(start);
    }

    VerifyConfig config_;
    MemoTable memo_;
};

inline void print_outcome(std::ostream& out, const CheckOutcome& c) {
    out << (c.passed ? "PASS" : "FAIL") << "  " << c.name << "  [" << c.scope << ", " << c.instances << " instances]\n";
    if (!c.passed) out << "      counterexample: " << c.counterexample << '\n';
}

} // namespace ehrkit
