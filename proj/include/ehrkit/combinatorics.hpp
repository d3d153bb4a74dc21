#pragma once

// Exact combinatorial number engines: factorials, binomials, Eulerian
// numbers, unsigned Stirling numbers of the first kind, and weighted Lah
// numbers together with the ordered-partition enumerator that serves as
// their brute-force oracle.

#include "ehrkit/numeric.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

namespace ehrkit {

inline Natural factorial(unsigned n) {
    Natural result = 1;
    for (unsigned i = 2; i <= n; ++i) {
        result *= i;
    }
    return result;
}

/// C(n, j); zero when j > n.
inline Natural binomial(unsigned n, unsigned j) {
    if (j > n) {
        return 0;
    }
    j = std::min(j, n - j);
    Natural result = 1;
    for (unsigned i = 1; i <= j; ++i) {
        // exact at every step: result * (n - j + i) is divisible by i
        result = result * (n - j + i) / i;
    }
    return result;
}

/// Row m of the Eulerian triangle: entry j counts permutations of {1..m}
/// with exactly j descents. Row 0 is {1}; row m >= 1 has m entries.
inline std::vector<Natural> eulerian_row(unsigned m) {
    std::vector<Natural> row{1};
    for (unsigned size = 1; size <= m; ++size) {
        std::vector<Natural> next(size, 0);
        for (unsigned j = 0; j < size; ++j) {
            if (j < row.size()) {
                next[j] += Natural(j + 1) * row[j];
            }
            if (j >= 1 && j - 1 < row.size()) {
                next[j] += Natural(size - j) * row[j - 1];
            }
        }
        row = std::move(next);
    }
    return row;
}

/// A(m, j). Out-of-range j (negative, or >= m for m >= 1) gives 0.
inline Natural eulerian(unsigned m, long j) {
    if (j < 0) {
        return 0;
    }
    auto row = eulerian_row(m);
    if (static_cast<unsigned long>(j) >= row.size()) {
        return 0;
    }
    return row[static_cast<std::size_t>(j)];
}

/// c(n, m): permutations of {1..n} with exactly m cycles.
inline Natural stirling_first_unsigned(unsigned n, unsigned m) {
    if (m > n) {
        return 0;
    }
    // row[i] holds c(size, i)
    std::vector<Natural> row{1};
    for (unsigned size = 1; size <= n; ++size) {
        std::vector<Natural> next(size + 1, 0);
        for (unsigned i = 1; i <= size; ++i) {
            next[i] = row[i - 1];
            if (i < row.size()) {
                next[i] += Natural(size - 1) * row[i];
            }
        }
        row = std::move(next);
    }
    return row[m];
}

/// A set partition of {1..n} whose blocks carry a linear order. Blocks are
/// kept in canonical order (sorted by minimum element).
struct OrderedPartition {
    unsigned n = 0;
    std::vector<std::vector<unsigned>> blocks;

    friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;
};

/// Checks disjointness, coverage of {1..n}, nonempty blocks and canonical
/// block order.
inline bool is_valid(const OrderedPartition& p) {
    std::vector<bool> seen(p.n + 1, false);
    unsigned total = 0;
    unsigned previous_min = 0;
    for (const auto& block : p.blocks) {
        if (block.empty()) {
            return false;
        }
        const unsigned block_min = *std::min_element(block.begin(), block.end());
        if (block_min <= previous_min) {
            return false;
        }
        previous_min = block_min;
        for (unsigned x : block) {
            if (x < 1 || x > p.n || seen[x]) {
                return false;
            }
            seen[x] = true;
            ++total;
        }
    }
    return total == p.n;
}

/// Sum over blocks of the number of elements smaller than the block's head.
inline unsigned partition_weight(const OrderedPartition& p) {
    unsigned weight = 0;
    for (const auto& block : p.blocks) {
        const unsigned head = block.front();
        weight += static_cast<unsigned>(
            std::count_if(block.begin(), block.end(), [head](unsigned x) { return x < head; }));
    }
    return weight;
}

namespace detail {

// Elements are placed in increasing order. Element i either opens a new
// block (blocks therefore appear sorted by minimum) or is inserted at any
// position of an existing block, which reaches every linear order once.
inline void place_element(unsigned next, unsigned n, unsigned m, OrderedPartition& current,
                          const std::function<void(const OrderedPartition&)>& visit) {
    const auto open = static_cast<unsigned>(current.blocks.size());
    if (next > n) {
        if (open == m) {
            visit(current);
        }
        return;
    }
    const unsigned remaining = n - next + 1;
    if (open < m) {
        current.blocks.push_back({next});
        place_element(next + 1, n, m, current, visit);
        current.blocks.pop_back();
    }
    // leave enough elements to open the blocks still missing
    if (remaining > m - open) {
        for (unsigned b = 0; b < open; ++b) {
            auto& block = current.blocks[b];
            for (std::size_t pos = 0; pos <= block.size(); ++pos) {
                block.insert(block.begin() + static_cast<std::ptrdiff_t>(pos), next);
                place_element(next + 1, n, m, current, visit);
                block.erase(block.begin() + static_cast<std::ptrdiff_t>(pos));
            }
        }
    }
}

} // namespace detail

/// Streams every partition of {1..n} into exactly m linearly ordered blocks,
/// each once, in canonical form. Nothing is produced when m > n or when
/// m == 0 < n; (0, 0) yields the single empty partition.
inline void for_each_ordered_partition(unsigned n, unsigned m,
                                       const std::function<void(const OrderedPartition&)>& visit) {
    if (m > n || (m == 0 && n > 0)) {
        return;
    }
    OrderedPartition current{n, {}};
    current.blocks.reserve(m);
    detail::place_element(1, n, m, current, visit);
}

inline std::vector<OrderedPartition> enumerate_ordered_partitions(unsigned n, unsigned m) {
    std::vector<OrderedPartition> out;
    for_each_ordered_partition(n, m, [&](const OrderedPartition& p) { out.push_back(p); });
    return out;
}

/// Key of a weighted Lah number W(l, n, m).
struct LahKey {
    long l = 0;
    unsigned n = 0;
    unsigned m = 0;

    friend auto operator<=>(const LahKey&, const LahKey&) = default;
};

/// Write-once memo for weighted Lah numbers. Concurrent readers share the
/// lock; a second insertion for a key must carry the same value.
class MemoTable {
public:
    std::optional<Natural> find(const LahKey& key) const {
        std::shared_lock lock(mutex_);
        auto it = table_.find(key);
        if (it == table_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    /// Returns the stored value. Throws std::logic_error if the key already
    /// holds a different value.
    Natural insert(const LahKey& key, Natural value) {
        std::unique_lock lock(mutex_);
        // try_emplace leaves value untouched when the key is present
        auto [it, inserted] = table_.try_emplace(key, std::move(value));
        if (!inserted && it->second != value) {
            throw std::logic_error("MemoTable: conflicting write for W(" + std::to_string(key.l) +
                                   "," + std::to_string(key.n) + "," + std::to_string(key.m) + ")");
        }
        return it->second;
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return table_.size();
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<LahKey, Natural> table_;
};

/// Process-wide table used by the overloads without an explicit memo.
inline MemoTable& shared_memo() {
    static MemoTable table;
    return table;
}

/// W(l, n, m): partitions of {1..n} into m linearly ordered blocks with
/// weight l. Zero outside l in [0, n-m], m in [1, n]; W(0,0,0) = 1.
///
/// Recurrence on where n sits: either behind the head of some block of a
/// partition of {1..n-1} (n-1 slots, weight unchanged), or at the head of a
/// block with j smaller followers, which contributes weight j.
inline Natural weighted_lah(long l, unsigned n, unsigned m, MemoTable& memo) {
    if (n == 0) {
        return (m == 0 && l == 0) ? 1 : 0;
    }
    if (m == 0 || m > n || l < 0 || l > static_cast<long>(n - m)) {
        return 0;
    }
    const LahKey key{l, n, m};
    if (auto hit = memo.find(key)) {
        return *hit;
    }
    Natural value = Natural(n - 1) * weighted_lah(l, n - 1, m, memo);
    for (unsigned j = 0; j <= n - 1 && static_cast<long>(j) <= l; ++j) {
        value += binomial(n - 1, j) * factorial(j) * weighted_lah(l - j, n - 1 - j, m - 1, memo);
    }
    return memo.insert(key, std::move(value));
}

inline Natural weighted_lah(long l, unsigned n, unsigned m) {
    return weighted_lah(l, n, m, shared_memo());
}

/// Classical (unsigned) Lah number C(n-1, m-1) n! / m!, the row sum of W.
inline Natural lah_number(unsigned n, unsigned m) {
    if (n == 0 && m == 0) {
        return 1;
    }
    if (m == 0 || m > n) {
        return 0;
    }
    return binomial(n - 1, m - 1) * factorial(n) / factorial(m);
}

} // namespace ehrkit
