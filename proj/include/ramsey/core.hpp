#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ramsey/numeric.hpp"

namespace ramsey {

using vertex = std::int64_t;

inline constexpr int red = 0;
inline constexpr int blue = 1;
inline constexpr int green = 2;

// Sentinel color for sets too small to constrain a coloring (empty or single
// vertex for pairs; up to two vertices for triples).
inline constexpr int any_color = -1;

struct vertex_interval {
    vertex lo = 0;
    vertex hi = 0;

    vertex_interval() = default;
    vertex_interval(vertex l, vertex h) : lo(l), hi(h) {
        if (l > h) throw std::domain_error("vertex_interval: lo > hi");
    }

    std::int64_t size() const { return hi - lo + 1; }
    bool contains(vertex v) const { return lo <= v && v <= hi; }
    bool operator==(const vertex_interval&) const = default;
};

struct clique {
    std::vector<vertex> vertices; // strictly increasing
    int color = any_color;
    std::optional<double> weight;
    std::optional<std::vector<int>> diff_ranks;

    std::int64_t order() const { return static_cast<std::int64_t>(vertices.size()); }
};

namespace detail {

inline void check_vertex_list(const std::vector<vertex>& s) {
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i - 1] >= s[i]) throw std::domain_error("vertex list must be strictly increasing");
}

} // namespace detail

// Complete-graph edge coloring on an inclusive label interval.  Colors are
// stored row-major over the upper triangle, pairs (i, j) with i < j in
// lexicographic order.
struct edge_coloring {
    vertex_interval span;
    int q = 2;
    std::vector<std::uint8_t> colors;

    edge_coloring() = default;
    edge_coloring(vertex_interval s, int q_, std::uint8_t fill = 0) : span(s), q(q_) {
        if (q < 1 || q > 64) throw std::domain_error("edge_coloring: q out of range [1,64]");
        colors.assign(static_cast<std::size_t>(pair_count(span.size())), fill);
    }

    static std::int64_t pair_count(std::int64_t m) { return m * (m - 1) / 2; }

    std::int64_t size() const { return span.size(); }

    std::size_t index(vertex i, vertex j) const {
        if (i > j) std::swap(i, j);
        if (i == j || !span.contains(i) || !span.contains(j))
            throw std::domain_error("edge_coloring: edge labels out of range");
        const std::int64_t m = span.size();
        const std::int64_t r = i - span.lo;
        const std::int64_t c = j - span.lo;
        return static_cast<std::size_t>(r * (2 * m - r - 1) / 2 + (c - r - 1));
    }

    int color(vertex i, vertex j) const { return colors[index(i, j)]; }

    void set_color(vertex i, vertex j, int c) {
        if (c < 0 || c >= q) throw std::domain_error("edge_coloring: color id out of range");
        colors[index(i, j)] = static_cast<std::uint8_t>(c);
    }
};

// Coloring of all 3-element subsets of an inclusive label interval, stored in
// lexicographic order of the sorted triple.
struct triple_coloring {
    vertex_interval span;
    int q = 2;
    std::vector<std::uint8_t> colors;

    triple_coloring() = default;
    triple_coloring(vertex_interval s, int q_, std::uint8_t fill = 0) : span(s), q(q_) {
        if (q < 1 || q > 64) throw std::domain_error("triple_coloring: q out of range [1,64]");
        colors.assign(static_cast<std::size_t>(triple_count(span.size())), fill);
    }

    static std::int64_t triple_count(std::int64_t m) { return m * (m - 1) * (m - 2) / 6; }

    std::int64_t size() const { return span.size(); }

    std::size_t index(vertex a, vertex b, vertex c) const {
        vertex v[3] = {a, b, c};
        std::sort(v, v + 3);
        if (v[0] == v[1] || v[1] == v[2] || !span.contains(v[0]) || !span.contains(v[2]))
            throw std::domain_error("triple_coloring: triple labels out of range");
        const std::int64_t m = span.size();
        const std::int64_t r = v[0] - span.lo;
        const std::int64_t s = v[1] - span.lo;
        const std::int64_t t = v[2] - span.lo;
        // lex rank of (r, s, t), 0-based
        std::int64_t rank = triple_count(m) - triple_count(m - r);
        rank += (m - r - 2) * (m - r - 1) / 2 - (m - s - 1) * (m - s) / 2;
        rank += t - s - 1;
        return static_cast<std::size_t>(rank);
    }

    int color(vertex a, vertex b, vertex c) const { return colors[index(a, b, c)]; }

    void set_color(vertex a, vertex b, vertex c, int col) {
        if (col < 0 || col >= q) throw std::domain_error("triple_coloring: color id out of range");
        colors[index(a, b, c)] = static_cast<std::uint8_t>(col);
    }
};

inline int edge_color(const edge_coloring& c, vertex i, vertex j) { return c.color(i, j); }

// Returns the common color if every pair inside s has it, any_color for sets
// of fewer than two vertices, nullopt otherwise.
inline std::optional<int> is_monochromatic(const edge_coloring& c, const std::vector<vertex>& s) {
    detail::check_vertex_list(s);
    if (s.size() < 2) return any_color;
    const int col = c.color(s[0], s[1]);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (c.color(s[i], s[j]) != col) return std::nullopt;
    return col;
}

inline std::optional<int> is_monochromatic(const triple_coloring& c, const std::vector<vertex>& s) {
    detail::check_vertex_list(s);
    if (s.size() < 3) return any_color;
    const int col = c.color(s[0], s[1], s[2]);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            for (std::size_t k = j + 1; k < s.size(); ++k)
                if (c.color(s[i], s[j], s[k]) != col) return std::nullopt;
    return col;
}

// |S| / |I| as an exact rational; S must be a strictly increasing subset of I.
inline rational density(const std::vector<vertex>& s, const vertex_interval& i) {
    detail::check_vertex_list(s);
    if (!s.empty() && (s.front() < i.lo || s.back() > i.hi))
        throw std::domain_error("density: set not contained in interval");
    return rational(static_cast<std::int64_t>(s.size()), i.size());
}

inline bool verify_clique(const edge_coloring& c, const clique& k) {
    detail::check_vertex_list(k.vertices);
    if (k.vertices.size() < 2) return true;
    for (std::size_t i = 0; i < k.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < k.vertices.size(); ++j)
            if (c.color(k.vertices[i], k.vertices[j]) != k.color) return false;
    return true;
}

} // namespace ramsey
