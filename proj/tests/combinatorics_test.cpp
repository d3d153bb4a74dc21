#include "ehrkit/combinatorics.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <thread>
#include <vector>

namespace ehrkit {
namespace {

// ---- test-side oracles, independent of the library code paths ----

std::vector<std::vector<unsigned>> all_permutations(unsigned n) {
    std::vector<unsigned> p(n);
    std::iota(p.begin(), p.end(), 1U);
    std::vector<std::vector<unsigned>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

unsigned descents(const std::vector<unsigned>& p) {
    unsigned d = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) d += p[i] > p[i + 1];
    return d;
}

unsigned cycles(const std::vector<unsigned>& p) {
    std::vector<bool> seen(p.size(), false);
    unsigned c = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        ++c;
        for (std::size_t j = i; !seen[j]; j = p[j] - 1) seen[j] = true;
    }
    return c;
}

// Ordered partitions as permutations cut into m consecutive segments, keeping
// only cuts whose segment minima increase (canonical order).
std::vector<OrderedPartition> partitions_by_cutting(unsigned n, unsigned m) {
    std::vector<OrderedPartition> out;
    if (m == 0 || m > n) return out;
    for (const auto& p : all_permutations(n)) {
        std::vector<bool> cut(n - 1, false);
        std::fill(cut.end() - static_cast<long>(m - 1), cut.end(), true);
        do {
            OrderedPartition op{n, {{}}};
            for (unsigned i = 0; i < n; ++i) {
                op.blocks.back().push_back(p[i]);
                if (i + 1 < n && cut[i]) op.blocks.emplace_back();
            }
            bool canonical = true;
            for (std::size_t b = 1; b < op.blocks.size(); ++b) {
                canonical = canonical && *std::min_element(op.blocks[b - 1].begin(), op.blocks[b - 1].end()) <
                                             *std::min_element(op.blocks[b].begin(), op.blocks[b].end());
            }
            if (canonical) out.push_back(op);
        } while (std::next_permutation(cut.begin(), cut.end()));
    }
    return out;
}

unsigned weight_by_definition(const OrderedPartition& p) {
    unsigned w = 0;
    for (const auto& b : p.blocks) {
        for (unsigned x : b) w += x < b[0];
    }
    return w;
}

// ---- factorial / binomial ----

TEST(Factorial, SmallValues) {
    EXPECT_EQ(factorial(0), 1);
    EXPECT_EQ(factorial(1), 1);
    Natural product = 1;
    for (unsigned i = 1; i <= 5; ++i) product *= i;
    EXPECT_EQ(factorial(5), product);
    EXPECT_EQ(factorial(5), 120);
}

TEST(Factorial, NoOverflowPastSixtyFourBits) {
    EXPECT_EQ(factorial(25).str(), "15511210043330985984000000");
}

TEST(Binomial, MatchesSubsetEnumeration) {
    for (unsigned n = 0; n <= 12; ++n) {
        std::vector<Natural> by_size(n + 1, 0);
        for (unsigned mask = 0; mask < (1U << n); ++mask) by_size[static_cast<unsigned>(__builtin_popcount(mask))] += 1;
        for (unsigned j = 0; j <= n; ++j) EXPECT_EQ(binomial(n, j), by_size[j]) << n << "," << j;
    }
    EXPECT_EQ(binomial(4, 2), 6);
}

TEST(Binomial, EdgeCases) {
    EXPECT_EQ(binomial(7, 0), 1);
    EXPECT_EQ(binomial(0, 0), 1);
    EXPECT_EQ(binomial(3, 5), 0);
    EXPECT_EQ(binomial(100, 50).str(), "100891344545564193334812497256");
}

// ---- Eulerian ----

TEST(Eulerian, MatchesDescentEnumeration) {
    for (unsigned m = 1; m <= 7; ++m) {
        std::map<unsigned, Natural> count;
        for (const auto& p : all_permutations(m)) count[descents(p)] += 1;
        for (unsigned j = 0; j < m; ++j) EXPECT_EQ(eulerian(m, j), count[j]) << m << "," << j;
    }
    EXPECT_EQ(eulerian(3, 1), 4);
}

TEST(Eulerian, Conventions) {
    EXPECT_EQ(eulerian(0, 0), 1);
    EXPECT_EQ(eulerian(0, 1), 0);
    EXPECT_EQ(eulerian(4, -1), 0);
    EXPECT_EQ(eulerian(4, 4), 0);
    EXPECT_EQ(eulerian(4, 9), 0);
}

TEST(Eulerian, RowSumAndSymmetry) {
    for (unsigned m = 1; m <= 10; ++m) {
        Natural sum = 0;
        for (long j = 0; j < static_cast<long>(m); ++j) {
            sum += eulerian(m, j);
            EXPECT_EQ(eulerian(m, j), eulerian(m, static_cast<long>(m) - 1 - j));
        }
        EXPECT_EQ(sum, factorial(m));
    }
}

// ---- Stirling ----

TEST(StirlingFirst, MatchesCycleEnumeration) {
    for (unsigned n = 1; n <= 7; ++n) {
        std::map<unsigned, Natural> count;
        for (const auto& p : all_permutations(n)) count[cycles(p)] += 1;
        for (unsigned m = 0; m <= n; ++m) EXPECT_EQ(stirling_first_unsigned(n, m), count[m]) << n << "," << m;
    }
    EXPECT_EQ(stirling_first_unsigned(3, 2), 3);
}

TEST(StirlingFirst, Conventions) {
    EXPECT_EQ(stirling_first_unsigned(0, 0), 1);
    for (unsigned n = 1; n <= 8; ++n) {
        EXPECT_EQ(stirling_first_unsigned(n, n), 1);
        EXPECT_EQ(stirling_first_unsigned(n, 0), 0);
        EXPECT_EQ(stirling_first_unsigned(n, n + 1), 0);
    }
}

// ---- ordered partitions ----

TEST(PartitionWeight, ThreeElementExample) {
    EXPECT_EQ(partition_weight({3, {{1, 2}, {3}}}), 0U);
    EXPECT_EQ(partition_weight({3, {{2, 1}, {3}}}), 1U);
    EXPECT_EQ(partition_weight({3, {{1, 3}, {2}}}), 0U);
    EXPECT_EQ(partition_weight({3, {{3, 1}, {2}}}), 1U);
    EXPECT_EQ(partition_weight({3, {{1}, {2, 3}}}), 0U);
    EXPECT_EQ(partition_weight({3, {{1}, {3, 2}}}), 1U);
    EXPECT_EQ(partition_weight({4, {{1}, {2}, {3}, {4}}}), 0U);
    EXPECT_EQ(partition_weight({4, {{4, 3, 2, 1}}}), 3U);
}

TEST(OrderedPartitions, ExampleCounts) {
    EXPECT_EQ(enumerate_ordered_partitions(3, 2).size(), 6U);
    EXPECT_EQ(enumerate_ordered_partitions(4, 2).size(), 36U);
    for (unsigned n = 1; n <= 6; ++n) EXPECT_EQ(enumerate_ordered_partitions(n, n).size(), 1U);
    EXPECT_TRUE(enumerate_ordered_partitions(3, 4).empty());
    EXPECT_TRUE(enumerate_ordered_partitions(3, 0).empty());
    EXPECT_EQ(enumerate_ordered_partitions(0, 0).size(), 1U);
}

TEST(OrderedPartitions, SameSetAsCuttingOracle) {
    for (unsigned n = 1; n <= 6; ++n) {
        for (unsigned m = 1; m <= n; ++m) {
            const auto generated = enumerate_ordered_partitions(n, m);
            const auto oracle = partitions_by_cutting(n, m);
            std::set<std::vector<std::vector<unsigned>>> a;
            std::set<std::vector<std::vector<unsigned>>> b;
            for (const auto& p : generated) {
                EXPECT_TRUE(is_valid(p));
                a.insert(p.blocks);
            }
            for (const auto& p : oracle) b.insert(p.blocks);
            EXPECT_EQ(a.size(), generated.size()) << "duplicate partition for " << n << "," << m;
            EXPECT_EQ(a, b) << n << "," << m;
        }
    }
}

TEST(OrderedPartitions, ValidityRejectsMalformed) {
    EXPECT_FALSE(is_valid({3, {{1, 2}}}));            // misses 3
    EXPECT_FALSE(is_valid({3, {{1, 2}, {2, 3}}}));    // overlap
    EXPECT_FALSE(is_valid({3, {{3}, {1, 2}}}));       // not canonical
    EXPECT_FALSE(is_valid({3, {{1, 2, 3}, {}}}));     // empty block
    EXPECT_TRUE(is_valid({3, {{2, 1}, {3}}}));
}

// ---- weighted Lah numbers ----

TEST(WeightedLah, SmallExample) {
    MemoTable memo;
    EXPECT_EQ(weighted_lah(0, 3, 2, memo), 3);
    EXPECT_EQ(weighted_lah(1, 3, 2, memo), 3);
}

TEST(WeightedLah, FrozenValues) {
    // brute-force enumeration, computed once outside the library
    EXPECT_EQ(weighted_lah(0, 4, 2), 11);
    EXPECT_EQ(weighted_lah(1, 4, 2), 14);
    EXPECT_EQ(weighted_lah(2, 4, 2), 11);
    EXPECT_EQ(weighted_lah(1, 5, 2), 70);
    EXPECT_EQ(weighted_lah(1, 5, 3), 50);
    EXPECT_EQ(weighted_lah(0, 4, 2), stirling_first_unsigned(4, 2));
}

TEST(WeightedLah, SupportBoundaries) {
    EXPECT_EQ(weighted_lah(0, 0, 0), 1);
    EXPECT_EQ(weighted_lah(1, 0, 0), 0);
    EXPECT_EQ(weighted_lah(0, 3, 0), 0);
    EXPECT_EQ(weighted_lah(0, 3, 4), 0);
    EXPECT_EQ(weighted_lah(-1, 5, 2), 0);
    EXPECT_EQ(weighted_lah(4, 5, 2), 0);   // l > n - m
    EXPECT_EQ(weighted_lah(5, 3, 2), 0);
}

TEST(WeightedLah, MatchesBothEnumerators) {
    MemoTable memo;
    for (unsigned n = 1; n <= 7; ++n) {
        for (unsigned m = 1; m <= n; ++m) {
            std::map<unsigned, Natural> by_weight;
            for (const auto& p : enumerate_ordered_partitions(n, m)) by_weight[partition_weight(p)] += 1;
            std::map<unsigned, Natural> by_cutting;
            if (n <= 6) {
                for (const auto& p : partitions_by_cutting(n, m)) by_cutting[weight_by_definition(p)] += 1;
            }
            for (unsigned l = 0; l <= n; ++l) {
                EXPECT_EQ(weighted_lah(l, n, m, memo), by_weight[l]) << l << "," << n << "," << m;
                if (n <= 6) EXPECT_EQ(by_cutting[l], by_weight[l]);
            }
        }
    }
}

TEST(WeightedLah, RowSumIsLahNumber) {
    for (unsigned n = 1; n <= 10; ++n) {
        for (unsigned m = 1; m <= n; ++m) {
            Natural sum = 0;
            for (long l = 0; l <= static_cast<long>(n); ++l) sum += weighted_lah(l, n, m);
            EXPECT_EQ(sum, lah_number(n, m));
            if (n <= 7) EXPECT_EQ(Natural(enumerate_ordered_partitions(n, m).size()), sum);
        }
    }
}

TEST(WeightedLah, ZeroWeightIsStirling) {
    for (unsigned n = 0; n <= 10; ++n) {
        for (unsigned m = 0; m <= n; ++m) EXPECT_EQ(weighted_lah(0, n, m), stirling_first_unsigned(n, m));
    }
}

TEST(WeightedLah, StrictGrowth) {
    for (unsigned n = 2; n <= 10; ++n) {
        for (unsigned m = 2; m <= n; ++m) {
            for (long l = 0; l <= static_cast<long>(n - m); ++l) {
                EXPECT_GT(weighted_lah(l, n, m), Natural(n - 1) * weighted_lah(l, n - 1, m));
            }
        }
    }
}

TEST(WeightedLah, LargeArgumentsStayExact) {
    // row sum of n = 30 exceeds 64 bits; compare against the Lah number
    Natural sum = 0;
    for (long l = 0; l <= 15; ++l) sum += weighted_lah(l, 30, 15);
    EXPECT_EQ(sum, lah_number(30, 15));
    EXPECT_GT(sum, Natural(std::numeric_limits<std::uint64_t>::max()));
}

TEST(MemoTable, WriteOnce) {
    MemoTable memo;
    EXPECT_EQ(memo.insert({0, 3, 2}, 3), 3);
    EXPECT_EQ(memo.insert({0, 3, 2}, 3), 3);
    EXPECT_THROW(memo.insert({0, 3, 2}, 4), std::logic_error);
    EXPECT_EQ(memo.find({0, 3, 2}), Natural(3));
    EXPECT_FALSE(memo.find({1, 3, 2}).has_value());
}

TEST(MemoTable, ConcurrentFillsAgree) {
    MemoTable shared;
    std::vector<Natural> results(8);
    {
        std::vector<std::jthread> workers;
        for (unsigned w = 0; w < results.size(); ++w) {
            workers.emplace_back([&, w] {
                Natural acc = 0;
                for (unsigned n = 1; n <= 12; ++n) {
                    for (unsigned m = 1; m <= n; ++m) {
                        for (long l = 0; l <= static_cast<long>(n - m); ++l) acc += weighted_lah(l, n, m, shared);
                    }
                }
                results[w] = acc;
            });
        }
    }
    MemoTable fresh;
    Natural expected = 0;
    for (unsigned n = 1; n <= 12; ++n) {
        for (unsigned m = 1; m <= n; ++m) {
            for (long l = 0; l <= static_cast<long>(n - m); ++l) expected += weighted_lah(l, n, m, fresh);
        }
    }
    for (const auto& r : results) EXPECT_EQ(r, expected);
    EXPECT_EQ(shared.size(), fresh.size());
}

} // namespace
} // namespace ehrkit
