#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramsey/core.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

// ---- parity-log / second-difference coloring -------------------------------

// color(i,j) = floor(log2(j-i)) mod 2 on [1,n]
inline edge_coloring parity_log_coloring(vertex n) {
    if (n < 2) throw std::domain_error("parity_log_coloring: n >= 2 required");
    edge_coloring c(vertex_interval(1, n), 2);
    for (vertex i = 1; i <= n; ++i)
        for (vertex j = i + 1; j <= n; ++j) c.set_color(i, j, floor_log2(j - i) & 1);
    return c;
}

inline edge_coloring second_diff_coloring(vertex n) { return parity_log_coloring(n); }

// ---- pluggable pair colorers ------------------------------------------------

enum class pair_colorer_kind { random, paley, parity_log, constant };

struct pair_colorer {
    pair_colorer_kind kind = pair_colorer_kind::random;
    int constant_color = 0;
};

namespace detail {

inline std::uint64_t modpow(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    unsigned __int128 r = 1, x = b % m;
    while (e > 0) {
        if (e & 1) r = r * x % m;
        x = x * x % m;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(r);
}

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace detail

// Returns the color function a strategy induces on pairs inside span.  salt
// distinguishes independent uses of one seed (e.g. per-interval colorings).
inline std::function<int(vertex, vertex)> pair_color_fn(const pair_colorer& pc, int q,
                                                        std::uint64_t seed, std::uint64_t salt,
                                                        vertex_interval span) {
    switch (pc.kind) {
    case pair_colorer_kind::random: {
        const std::uint64_t s = splitmix64(seed ^ splitmix64(salt));
        return [s, q](vertex u, vertex v) { return static_cast<int>(hash_edge(s, u, v) % static_cast<std::uint64_t>(q)); };
    }
    case pair_colorer_kind::paley: {
        if (q != 2) throw std::domain_error("paley colorer requires q=2");
        const std::uint64_t p = static_cast<std::uint64_t>(span.size());
        if (!detail::is_prime(p) || p % 4 != 1)
            throw std::domain_error("paley colorer requires |span| prime and = 1 mod 4");
        const vertex lo = span.lo;
        return [p, lo](vertex u, vertex v) {
            std::uint64_t d = static_cast<std::uint64_t>(u > v ? u - v : v - u) % p;
            return detail::modpow(d, (p - 1) / 2, p) == 1 ? 0 : 1;
        };
    }
    case pair_colorer_kind::parity_log:
        return [q](vertex u, vertex v) { return floor_log2(u > v ? u - v : v - u) % q; };
    case pair_colorer_kind::constant: {
        const int c = pc.constant_color;
        if (c < 0 || c >= q) throw std::domain_error("constant colorer: color out of range");
        return [c](vertex, vertex) { return c; };
    }
    }
    throw std::logic_error("pair_color_fn: unreachable");
}

// ---- Rodl interval construction ---------------------------------------------

struct rodl_spec {
    vertex n = 16;
    rational a = 2;
    pair_colorer inner;
    pair_colorer top;
    std::uint64_t seed = 0;
};

namespace detail {

// smallest integer m >= 2^(a^i); exact via m^(den^i) >= 2^(num^i)
inline vertex rodl_boundary(const rational& a, int i) {
    const bigint num = pow_bigint(bigint(boost::multiprecision::numerator(a)), i);
    const bigint den = pow_bigint(bigint(boost::multiprecision::denominator(a)), i);
    const double exponent = num.convert_to<double>() / den.convert_to<double>();
    if (!(exponent < 62.5)) return INT64_MAX;
    auto ge = [&](vertex m) { return m >= 1 && pow_bigint(m, den) >= pow_bigint(2, num); };
    vertex m = std::max<vertex>(2, static_cast<vertex>(std::exp2(exponent)) - 4);
    while (!ge(m)) ++m;
    while (m > 2 && ge(m - 1)) --m;
    return m;
}

} // namespace detail

// Intervals [2^(a^(i-1)), 2^(a^i)) covering [2,n]; the last one is clipped to
// end at n inclusive so the cover has exactly t = ceil(log_a log2 n) parts.
inline std::vector<vertex_interval> rodl_intervals(vertex n, const rational& a) {
    if (n < 4) throw std::domain_error("rodl_intervals: n >= 4 required");
    if (a <= 1) throw std::domain_error("rodl_intervals: growth a > 1 required");
    std::vector<vertex_interval> out;
    vertex lo = 2;
    for (int i = 1;; ++i) {
        const vertex b = detail::rodl_boundary(a, i);
        if (b >= n) {
            out.emplace_back(lo, n);
            break;
        }
        out.emplace_back(lo, b - 1);
        lo = b;
        if (i > 200) throw std::domain_error("rodl_intervals: growth too slow");
    }
    return out;
}

// Functional view of a Rodl coloring: colors computable without materializing
// the full pair array (needed at n = 65536, where the array would not fit).
struct rodl_view {
    rodl_spec spec;
    bool three_color = false;
    std::vector<vertex_interval> intervals;
    std::vector<std::function<int(vertex, vertex)>> inner_fn;
    std::function<int(vertex, vertex)> top_fn;

    int interval_of(vertex v) const {
        for (std::size_t i = 0; i < intervals.size(); ++i)
            if (intervals[i].contains(v)) return static_cast<int>(i);
        throw std::domain_error("rodl_view: vertex outside [2,n]");
    }

    int q() const { return three_color ? 3 : 2; }

    int color(vertex u, vertex v) const {
        const int iu = interval_of(u), iv = interval_of(v);
        if (iu == iv) return inner_fn[static_cast<std::size_t>(iu)](u, v);
        if (three_color) return green;
        return top_fn(iu + 1, iv + 1);
    }
};

inline rodl_view make_rodl_view(const rodl_spec& spec, bool three_color) {
    rodl_view v;
    v.spec = spec;
    v.three_color = three_color;
    v.intervals = rodl_intervals(spec.n, spec.a);
    const int t = static_cast<int>(v.intervals.size());
    for (int i = 0; i < t; ++i)
        v.inner_fn.push_back(pair_color_fn(spec.inner, 2, spec.seed,
                                           0x1000 + static_cast<std::uint64_t>(i),
                                           v.intervals[static_cast<std::size_t>(i)]));
    v.top_fn = pair_color_fn(spec.top, 2, spec.seed, 0x2000, vertex_interval(1, t));
    return v;
}

namespace detail {

inline edge_coloring materialize_rodl(const rodl_spec& spec, bool three_color) {
    const rodl_view view = make_rodl_view(spec, three_color);
    if (spec.n > 8192) throw std::domain_error("rodl coloring: n too large to materialize; use the structural view");
    edge_coloring c(vertex_interval(2, spec.n), view.q());
    for (vertex u = 2; u <= spec.n; ++u)
        for (vertex v = u + 1; v <= spec.n; ++v) c.set_color(u, v, view.color(u, v));
    return c;
}

} // namespace detail

inline edge_coloring rodl_coloring(const rodl_spec& spec) { return detail::materialize_rodl(spec, false); }

inline edge_coloring rodl_three_color(const rodl_spec& spec) { return detail::materialize_rodl(spec, true); }

// ---- product coloring --------------------------------------------------------

// pair (x-part differs ? c1 color : 2 + c2 color) on [1, m1*m2];
// vertex v <-> (x, y) with v-1 = (x-1)*m2 + (y-1)
inline edge_coloring product_coloring(const edge_coloring& c1, const edge_coloring& c2) {
    if (c1.q != 2 || c2.q != 2) throw std::domain_error("product_coloring: factors must be 2-colorings");
    if (c1.span.lo != 1 || c2.span.lo != 1) throw std::domain_error("product_coloring: factors must start at 1");
    const vertex m1 = c1.span.hi, m2 = c2.span.hi;
    edge_coloring c(vertex_interval(1, m1 * m2), 4);
    auto part = [m2](vertex v) { return std::pair<vertex, vertex>((v - 1) / m2 + 1, (v - 1) % m2 + 1); };
    for (vertex u = 1; u <= m1 * m2; ++u)
        for (vertex v = u + 1; v <= m1 * m2; ++v) {
            auto [xu, yu] = part(u);
            auto [xv, yv] = part(v);
            c.set_color(u, v, xu != xv ? c1.color(xu, xv) : 2 + c2.color(yu, yv));
        }
    return c;
}

// K5 with no monochromatic triangle: red on the pentagon, blue on the pentagram
inline edge_coloring pentagon_coloring() {
    edge_coloring c(vertex_interval(1, 5), 2);
    for (vertex i = 1; i <= 5; ++i)
        for (vertex j = i + 1; j <= 5; ++j) {
            vertex d = j - i;
            c.set_color(i, j, (d == 1 || d == 4) ? red : blue);
        }
    return c;
}

// ---- triple colorings ---------------------------------------------------------

inline triple_coloring monotone_diff_triple_coloring(vertex n) {
    if (n < 3) throw std::domain_error("monotone_diff_triple_coloring: n >= 3 required");
    triple_coloring c(vertex_interval(1, n), 2);
    for (vertex a = 1; a <= n; ++a)
        for (vertex b = a + 1; b <= n; ++b)
            for (vertex d = b + 1; d <= n; ++d) c.set_color(a, b, d, (d - b) >= (b - a) ? red : blue);
    return c;
}

enum class triple_colorer_kind { random, constant, monotone_diff };

struct triple_colorer {
    triple_colorer_kind kind = triple_colorer_kind::random;
    int constant_color = 0;
};

struct block_spec {
    std::vector<std::int64_t> sizes; // strictly increasing
    triple_colorer inner;
    std::uint64_t seed = 0;
};

inline std::vector<vertex_interval> block_boundaries(const std::vector<std::int64_t>& sizes) {
    if (sizes.size() < 2) throw std::domain_error("block_spec: at least 2 blocks required");
    std::vector<vertex_interval> out;
    vertex lo = 1;
    std::int64_t prev = 0;
    for (auto s : sizes) {
        if (s <= prev) throw std::domain_error("block_spec: sizes must be strictly increasing");
        prev = s;
        out.emplace_back(lo, lo + s - 1);
        lo += s;
    }
    return out;
}

// two vertices in a lower-indexed block and one higher -> red; two in the
// higher and one lower -> blue; within one block -> inner colorer; three
// distinct blocks -> seeded arbitrary
inline triple_coloring block_triple_coloring(const block_spec& spec) {
    const auto blocks = block_boundaries(spec.sizes);
    const vertex n = blocks.back().hi;
    auto block_of = [&blocks](vertex v) {
        for (std::size_t i = 0; i < blocks.size(); ++i)
            if (blocks[i].contains(v)) return static_cast<int>(i);
        throw std::logic_error("block_of: out of range");
    };
    triple_coloring c(vertex_interval(1, n), 2);
    for (vertex a = 1; a <= n; ++a)
        for (vertex b = a + 1; b <= n; ++b)
            for (vertex d = b + 1; d <= n; ++d) {
                const int ba = block_of(a), bb = block_of(b), bc = block_of(d);
                int col;
                if (ba == bb && bb == bc) {
                    switch (spec.inner.kind) {
                    case triple_colorer_kind::random:
                        col = static_cast<int>(hash_triple(splitmix64(spec.seed ^ 0x31), a, b, d) & 1);
                        break;
                    case triple_colorer_kind::constant:
                        col = spec.inner.constant_color;
                        break;
                    case triple_colorer_kind::monotone_diff:
                        col = (d - b) >= (b - a) ? red : blue;
                        break;
                    default:
                        throw std::logic_error("unreachable");
                    }
                } else if (ba == bb) {
                    col = red; // two in the lower block
                } else if (bb == bc) {
                    col = blue; // two in the higher block
                } else {
                    col = static_cast<int>(hash_triple(splitmix64(spec.seed ^ 0x33), a, b, d) & 1);
                }
                c.set_color(a, b, d, col);
            }
    return c;
}

} // namespace ramsey
