#pragma once

// Vertices and edges of independence polytopes of uniform matroids and of
// their lifted versions, where the lifted vertex of an independent set I is
// (e_I, k - |I|). Edges are certified one pair at a time with an exact LP.

#include "ehrkit/numeric.hpp"
#include "ehrkit/simplex.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace ehrkit {

using IntVector = std::vector<int>;

struct GeometryLimits {
    unsigned max_n = 6;
    std::size_t max_vertices = 64;
};

/// Indicator vectors of all subsets of {1..n} with at most k elements,
/// ordered by bitmask value (bit i is coordinate i). The lifted variant
/// appends the corank k - |I|.
inline std::vector<IntVector> enumerate_vertices(unsigned k, unsigned n, bool lifted,
                                                 const GeometryLimits& limits = {}) {
    if (k > n) {
        throw domain_error("enumerate_vertices: rank " + std::to_string(k) + " exceeds n = " + std::to_string(n));
    }
    if (n > limits.max_n) {
        throw scale_guard_error("enumerate_vertices: n = " + std::to_string(n) + " exceeds guard " +
                                std::to_string(limits.max_n));
    }
    std::vector<IntVector> vertices;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        const auto ones = static_cast<unsigned>(std::popcount(mask));
        if (ones > k) continue;
        IntVector v(n + (lifted ? 1 : 0), 0);
        for (unsigned i = 0; i < n; ++i) v[i] = (mask >> i) & 1U;
        if (lifted) v[n] = static_cast<int>(k - ones);
        vertices.push_back(std::move(v));
    }
    return vertices;
}

/// Whether the segment [v, w] is an edge of conv(vertices). v and w must be
/// distinct members of vertices.
///
/// [v, w] fails to be an edge exactly when some convex combination of the
/// other vertices lies on the line through v and w. That is an LP over the
/// remaining vertices with +-(w - v) as free directions.
inline bool is_edge(const IntVector& v, const IntVector& w, std::span<const IntVector> vertices,
                    const GeometryLimits& limits = {}) {
    if (vertices.size() > limits.max_vertices) {
        throw scale_guard_error("is_edge: " + std::to_string(vertices.size()) + " vertices exceed guard " +
                                std::to_string(limits.max_vertices));
    }
    if (v == w || v.size() != w.size()) {
        throw std::invalid_argument("is_edge: endpoints must be distinct points of equal dimension");
    }
    const std::size_t dim = v.size();
    std::vector<RationalVector> others;
    bool saw_v = false;
    bool saw_w = false;
    for (const auto& u : vertices) {
        if (u == v) { saw_v = true; continue; }
        if (u == w) { saw_w = true; continue; }
        others.emplace_back(u.begin(), u.end());
    }
    if (!saw_v || !saw_w) {
        throw std::invalid_argument("is_edge: endpoints must belong to the vertex list");
    }
    if (others.empty()) {
        return true;
    }
    RationalVector midpoint(dim);
    RationalVector direction(dim);
    RationalVector opposite(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        midpoint[i] = Rational(v[i] + w[i], 2);
        direction[i] = w[i] - v[i];
        opposite[i] = -direction[i];
    }
    return !lp_feasible(midpoint, others, {direction, opposite});
}

enum class DirectionKind { diff, plus, minus, lifted_diff, lifted_drop, other };

/// Direction of an edge up to the listed families. For diff and lifted_diff
/// the vector is e_i - e_j; plus/minus are +e_i / -e_i; lifted_drop is
/// +-(e_i, -1). Indices are 0-based; j is -1 where unused.
struct EdgeDirection {
    DirectionKind kind = DirectionKind::other;
    int i = -1;
    int j = -1;

    friend bool operator==(const EdgeDirection&, const EdgeDirection&) = default;
};

inline std::string to_string(const EdgeDirection& d) {
    const auto i = std::to_string(d.i + 1);
    const auto j = std::to_string(d.j + 1);
    switch (d.kind) {
    case DirectionKind::diff: return "e" + i + "-e" + j;
    case DirectionKind::plus: return "+e" + i;
    case DirectionKind::minus: return "-e" + i;
    case DirectionKind::lifted_diff: return "(e" + i + "-e" + j + ",0)";
    case DirectionKind::lifted_drop: return "(e" + i + ",-1)";
    case DirectionKind::other: return "other";
    }
    return "other";
}

/// Classifies delta = w - v. In lifted mode the last coordinate is the corank.
inline EdgeDirection classify_direction(std::span<const int> delta, bool lifted) {
    const std::size_t n = lifted ? delta.size() - 1 : delta.size();
    std::vector<int> up;
    std::vector<int> down;
    for (std::size_t i = 0; i < n; ++i) {
        if (delta[i] == 1) up.push_back(static_cast<int>(i));
        else if (delta[i] == -1) down.push_back(static_cast<int>(i));
        else if (delta[i] != 0) return {};
    }
    const int extra = lifted ? delta[n] : 0;
    if (!lifted) {
        if (up.size() == 1 && down.size() == 1) return {DirectionKind::diff, up[0], down[0]};
        if (up.size() == 1 && down.empty()) return {DirectionKind::plus, up[0], -1};
        if (down.size() == 1 && up.empty()) return {DirectionKind::minus, down[0], -1};
        return {};
    }
    if (extra == 0 && up.size() == 1 && down.size() == 1) return {DirectionKind::lifted_diff, up[0], down[0]};
    if (extra == -1 && up.size() == 1 && down.empty()) return {DirectionKind::lifted_drop, up[0], -1};
    if (extra == 1 && down.size() == 1 && up.empty()) return {DirectionKind::lifted_drop, down[0], -1};
    return {};
}

struct Edge {
    std::size_t from = 0;  // index into the vertex list
    std::size_t to = 0;
    EdgeDirection direction;
};

/// All edges of conv(vertices), as index pairs from < to. Pairs are tested
/// independently and split across jobs workers; the output order is fixed.
inline std::vector<Edge> find_edges(const std::vector<IntVector>& vertices, bool lifted,
                                    const GeometryLimits& limits = {}, unsigned jobs = 1) {
    if (vertices.size() > limits.max_vertices) {
        throw scale_guard_error("find_edges: " + std::to_string(vertices.size()) + " vertices exceed guard " +
                                std::to_string(limits.max_vertices));
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < vertices.size(); ++a) {
        for (std::size_t b = a + 1; b < vertices.size(); ++b) pairs.emplace_back(a, b);
    }
    std::vector<char> adjacent(pairs.size(), 0);
    auto work = [&](std::size_t offset, std::size_t stride) {
        for (std::size_t p = offset; p < pairs.size(); p += stride) {
            adjacent[p] = is_edge(vertices[pairs[p].first], vertices[pairs[p].second], vertices, limits) ? 1 : 0;
        }
    };
    jobs = std::max(1U, jobs);
    if (jobs == 1) {
        work(0, 1);
    } else {
        std::vector<std::jthread> workers;
        for (unsigned w = 0; w < jobs; ++w) workers.emplace_back(work, w, jobs);
    }
    std::vector<Edge> edges;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        if (!adjacent[p]) continue;
        const auto& v = vertices[pairs[p].first];
        const auto& w = vertices[pairs[p].second];
        IntVector delta(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) delta[i] = w[i] - v[i];
        edges.push_back({pairs[p].first, pairs[p].second, classify_direction(delta, lifted)});
    }
    return edges;
}

/// Direction classes of every edge of P_I(U_{k,n}) (or of its lifting).
inline std::vector<EdgeDirection> classify_edges(unsigned k, unsigned n, bool lifted,
                                                 const GeometryLimits& limits = {}, unsigned jobs = 1) {
    const auto vertices = enumerate_vertices(k, n, lifted, limits);
    std::vector<EdgeDirection> out;
    for (const auto& e : find_edges(vertices, lifted, limits, jobs)) out.push_back(e.direction);
    return out;
}

} // namespace ehrkit
