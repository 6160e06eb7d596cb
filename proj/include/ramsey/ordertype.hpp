#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ramsey/clique_engine.hpp"
#include "ramsey/core.hpp"
#include "ramsey/numeric.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

// ---------------------------------------------------------------------------
// Separated pairs.  (T1, T2) is separated when the gap min(T2) - max(T1)
// strictly exceeds the diameter of each part.
// ---------------------------------------------------------------------------

inline bool is_separated(const std::vector<vertex>& t1, const std::vector<vertex>& t2) {
    detail::check_vertex_list(t1);
    detail::check_vertex_list(t2);
    if (t1.empty() || t2.empty()) throw std::domain_error("is_separated: parts must be nonempty");
    if (t1.back() >= t2.front()) throw std::domain_error("is_separated: parts interleave");
    const vertex gap = t2.front() - t1.back();
    return gap > t1.back() - t1.front() && gap > t2.back() - t2.front();
}

struct separated_pair {
    std::vector<vertex> t1, t2;
    vertex_interval i1, i2;
};

namespace detail {

inline void check_subset_of(const std::vector<vertex>& s, const vertex_interval& i,
                            const char* who) {
    check_vertex_list(s);
    if (!s.empty() && (s.front() < i.lo || s.back() > i.hi))
        throw std::domain_error(std::string(who) + ": set not contained in interval");
}

// Restriction of a sorted set to an inclusive interval.
inline std::vector<vertex> restrict_to(const std::vector<vertex>& s, vertex lo, vertex hi) {
    std::vector<vertex> out;
    for (vertex v : s)
        if (lo <= v && v <= hi) out.push_back(v);
    return out;
}

inline std::int64_t count_in(const std::vector<vertex>& s, vertex lo, vertex hi) {
    if (lo > hi) return 0;
    auto l = std::lower_bound(s.begin(), s.end(), lo);
    auto r = std::upper_bound(s.begin(), s.end(), hi);
    return r - l;
}

} // namespace detail

// Lemma "sep" procedure.  Trims a low-density prefix and suffix at threshold
// d_I(S)/2, then splits the hull of the survivor into three near-equal
// intervals and returns the two ends with their restrictions of S.  All four
// guarantees (separation, both densities >= d_I(S)/2, both sizes >= |S|/12)
// are re-checked exactly before returning.
inline separated_pair find_separated_pair(const std::vector<vertex>& s, const vertex_interval& i) {
    detail::check_subset_of(s, i, "find_separated_pair");
    const std::int64_t m = static_cast<std::int64_t>(s.size());
    if (m < 6) throw std::domain_error("find_separated_pair: need |S| >= 6");

    const vertex a = i.lo, b = i.hi;
    const rational half_d = density(s, i) / 2;

    // i1: max x in [a, b] with |S cap [a, x]| / (x - a + 1) <= d/2, else a - 1.
    // Within a stretch of constant prefix count the density decreases as x
    // grows, so it is enough to test the right end of each stretch, scanning
    // from the right.  The stretch right ends are b and the points s_j - 1.
    vertex i1 = a - 1;
    {
        std::vector<vertex> ends;
        ends.push_back(b);
        for (vertex v : s)
            if (v - 1 >= a && v - 1 <= b) ends.push_back(v - 1);
        std::sort(ends.begin(), ends.end());
        ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
        for (auto it = ends.rbegin(); it != ends.rend(); ++it) {
            const vertex x = *it;
            if (rational(detail::count_in(s, a, x), x - a + 1) <= half_d) {
                i1 = x;
                break;
            }
        }
    }

    // i2: min x > i1 with |S cap [x, b]| / (b - x + 1) <= d/2, else b + 1.
    // Suffix density increases within a stretch, so test stretch left ends
    // (i1 + 1 and the points s_j + 1) in increasing order.
    vertex i2 = b + 1;
    {
        std::vector<vertex> starts;
        if (i1 + 1 >= a) starts.push_back(std::max(a, i1 + 1));
        for (vertex v : s)
            if (v + 1 > i1 && v + 1 <= b) starts.push_back(v + 1);
        std::sort(starts.begin(), starts.end());
        starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
        for (vertex x : starts) {
            if (x < a || x > b) continue;
            if (rational(detail::count_in(s, x, b), b - x + 1) <= half_d) {
                i2 = x;
                break;
            }
        }
    }

    const std::vector<vertex> sp = detail::restrict_to(s, i1 + 1, i2 - 1);
    if (static_cast<std::int64_t>(sp.size()) * 2 < m)
        throw std::logic_error("find_separated_pair: trimming removed more than half");

    // Split the hull [min(S'), max(S')] into three intervals of near-equal
    // size; give any remainder to the middle (one extra) or the ends (one
    // extra each), which keeps the ends at least floor(L/3) and the middle
    // large enough to force separation.
    const vertex lo = sp.front(), hi = sp.back();
    const std::int64_t len = hi - lo + 1;
    const std::int64_t base = len / 3, rem = len % 3;
    const std::int64_t l1 = base + (rem == 2 ? 1 : 0);
    const std::int64_t l3 = base + (rem == 2 ? 1 : 0);

    separated_pair out;
    out.i1 = vertex_interval(lo, lo + l1 - 1);
    out.i2 = vertex_interval(hi - l3 + 1, hi);
    out.t1 = detail::restrict_to(s, out.i1.lo, out.i1.hi);
    out.t2 = detail::restrict_to(s, out.i2.lo, out.i2.hi);

    const bool ok = !out.t1.empty() && !out.t2.empty() && is_separated(out.t1, out.t2) &&
                    density(out.t1, out.i1) >= half_d && density(out.t2, out.i2) >= half_d &&
                    12 * out.i1.size() >= m && 12 * out.i2.size() >= m;
    if (!ok) throw std::logic_error("find_separated_pair: postcondition failed");
    return out;
}

// Lemma "shrink" procedure.  Covers J with ceil(|J|/r) windows of size r (the
// last right-aligned) and returns the restriction of S to the first window
// whose density is at least d_J(S)/2, which the counting argument guarantees
// to exist.
inline std::pair<std::vector<vertex>, vertex_interval> shrink(const std::vector<vertex>& s,
                                                              const vertex_interval& j,
                                                              std::int64_t r) {
    detail::check_subset_of(s, j, "shrink");
    if (r < 1 || r > j.size()) throw std::domain_error("shrink: r out of range [1, |J|]");
    const rational half_d = density(s, j) / 2;
    const std::int64_t windows = (j.size() + r - 1) / r;
    for (std::int64_t w = 0; w < windows; ++w) {
        vertex lo = j.lo + w * r;
        if (lo + r - 1 > j.hi) lo = j.hi - r + 1;
        const vertex_interval win(lo, lo + r - 1);
        std::vector<vertex> sub = detail::restrict_to(s, win.lo, win.hi);
        if (density(sub, win) >= half_d) return {std::move(sub), win};
    }
    throw std::logic_error("shrink: no window met the density threshold");
}

// ---------------------------------------------------------------------------
// Type-(phi, eta, r) cliques: consecutive differences fall in half-open
// geometric bands [eta^phi(i) * r, eta^(phi(i)-1) * r).
// ---------------------------------------------------------------------------

struct type_spec {
    std::vector<int> phi; // phi[i-1] = phi(i), injective, values >= 1
    rational eta;         // in (0, 1)
    std::int64_t r = 1;   // >= 1
};

inline void validate_type_spec(const type_spec& ts) {
    if (!(ts.eta > 0 && ts.eta < 1)) throw std::domain_error("type_spec: eta must be in (0,1)");
    if (ts.r < 1) throw std::domain_error("type_spec: r must be positive");
    std::vector<int> seen = ts.phi;
    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 0; i < seen.size(); ++i) {
        if (seen[i] < 1) throw std::domain_error("type_spec: phi values must be >= 1");
        if (i > 0 && seen[i] == seen[i - 1]) throw std::domain_error("type_spec: phi must be injective");
    }
}

inline bool is_type_clique(const std::vector<vertex>& vs, const type_spec& ts) {
    validate_type_spec(ts);
    detail::check_vertex_list(vs);
    if (vs.size() != ts.phi.size() + 1)
        throw std::domain_error("is_type_clique: need |vertices| = |phi| + 1");
    for (std::size_t idx = 0; idx + 1 < vs.size(); ++idx) {
        const rational d = vs[idx + 1] - vs[idx];
        const rational lo = pow_rational(ts.eta, ts.phi[idx]) * ts.r;
        const rational hi = pow_rational(ts.eta, ts.phi[idx] - 1) * ts.r;
        if (!(d >= lo && d < hi)) return false;
    }
    return true;
}

// With h = k and phi the inverse permutation of pi, a type-(phi, eta, r)
// clique is also a clique of order type pi: bands for consecutive ranks are
// disjoint and decreasing, so band membership forces the strict difference
// ordering.
inline type_spec type_spec_from_pi(const std::vector<int>& pi, const rational& eta,
                                   std::int64_t r) {
    check_order_type(pi);
    type_spec ts;
    ts.phi.assign(pi.size(), 0);
    for (std::size_t j = 0; j < pi.size(); ++j)
        ts.phi[static_cast<std::size_t>(pi[j] - 1)] = static_cast<int>(j + 1);
    ts.eta = eta;
    ts.r = r;
    validate_type_spec(ts);
    return ts;
}

// ---------------------------------------------------------------------------
// Heaviness refutation search.  The predicate quantifies over all dense large
// subsets S', so it can only be refuted by exhibiting one bad S', never
// affirmed by search.
// ---------------------------------------------------------------------------

struct heavy_params {
    rational alpha, beta, gamma, delta, p;
};

inline void validate_heavy_params(const heavy_params& hp) {
    for (const rational* x : {&hp.alpha, &hp.beta, &hp.gamma, &hp.delta, &hp.p})
        if (!(*x > 0 && *x < 1))
            throw std::domain_error("heavy_params: all parameters must be in (0,1)");
}

enum class heavy_outcome { refuted, no_refutation_found };

struct heavy_verdict {
    heavy_outcome outcome = heavy_outcome::no_refutation_found;
    std::vector<vertex> counterexample; // refuting S', empty otherwise
    vertex_interval counter_interval;   // its interval J'
    std::int64_t candidates_tried = 0;
    std::int64_t witnesses_found = 0; // candidates where a valid (T1, T2) was exhibited
};

namespace detail {

inline std::int64_t count_color_edges_within(const edge_coloring& c, int color,
                                             const std::vector<vertex>& s) {
    std::int64_t e = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (c.color(s[i], s[j]) == color) ++e;
    return e;
}

inline std::int64_t count_color_edges_across(const edge_coloring& c, int color,
                                             const std::vector<vertex>& t1,
                                             const std::vector<vertex>& t2) {
    std::int64_t e = 0;
    for (vertex u : t1)
        for (vertex v : t2)
            if (c.color(u, v) == color) ++e;
    return e;
}

inline bigint ceil_rational(const rational& x) {
    const bigint num = boost::multiprecision::numerator(x);
    const bigint den = boost::multiprecision::denominator(x);
    bigint q = num / den;
    if (q * den < num) ++q;
    return q;
}

} // namespace detail

// Bounded refutation search for the (alpha, beta, gamma, delta, p)-heaviness
// of the color-`color` graph of `c` with respect to S inside J.  Candidates
// S' come from the whole set, the shrink ladder, the separated-pair parts and
// seeded random subintervals/subsets; a candidate refutes when a counting
// bound shows no separated pair inside it can reach cross density p.
inline heavy_verdict heavy_check(const edge_coloring& c, int color, const std::vector<vertex>& s,
                                 const vertex_interval& j, const heavy_params& hp,
                                 std::int64_t witness_budget, std::uint64_t seed = 0) {
    validate_heavy_params(hp);
    detail::check_subset_of(s, j, "heavy_check");
    if (s.empty()) throw std::domain_error("heavy_check: S must be nonempty");
    if (!c.span.contains(s.front()) || !c.span.contains(s.back()))
        throw std::domain_error("heavy_check: S not contained in the coloring span");
    if (color < 0 || color >= c.q) throw std::domain_error("heavy_check: color out of range");
    if (witness_budget <= 0) throw std::domain_error("heavy_check: budget must be positive");

    const rational d_base = density(s, j);
    const std::int64_t m = static_cast<std::int64_t>(s.size());

    heavy_verdict out;

    // Examines one (S', J') candidate.  Returns true when the search should
    // stop (refutation or exhausted budget).
    auto examine = [&](const std::vector<vertex>& sp, const vertex_interval& jp) -> bool {
        if (out.candidates_tried >= witness_budget) return true;
        if (sp.empty()) return false;
        if (rational(static_cast<std::int64_t>(sp.size())) < hp.gamma * m) return false;
        const rational dp = density(sp, jp);
        if (dp < hp.delta * d_base) return false;
        ++out.candidates_tried;

        // Any valid part has |T_j| >= ceil(alpha * d' * beta * |S'|) and the
        // cross pairs all lie inside S', so fewer than p * t_min^2 edges
        // within S' rule every candidate pair out.
        bigint t_min = detail::ceil_rational(hp.alpha * dp * hp.beta *
                                             static_cast<std::int64_t>(sp.size()));
        if (t_min < 1) t_min = 1;
        const std::int64_t e_within = detail::count_color_edges_within(c, color, sp);
        if (rational(e_within) < hp.p * rational(t_min * t_min)) {
            out.outcome = heavy_outcome::refuted;
            out.counterexample = sp;
            out.counter_interval = jp;
            return true;
        }

        // Not refutable by counting; try to exhibit a witness pair.
        if (sp.size() >= 6) {
            const separated_pair pair = find_separated_pair(sp, vertex_interval(sp.front(), sp.back()));
            const bool fits =
                density(pair.t1, pair.i1) >= hp.alpha * dp &&
                density(pair.t2, pair.i2) >= hp.alpha * dp &&
                rational(pair.i1.size()) >= hp.beta * static_cast<std::int64_t>(sp.size()) &&
                rational(pair.i2.size()) >= hp.beta * static_cast<std::int64_t>(sp.size());
            if (fits) {
                const std::int64_t across = detail::count_color_edges_across(c, color, pair.t1, pair.t2);
                const std::int64_t pairs = static_cast<std::int64_t>(pair.t1.size()) *
                                           static_cast<std::int64_t>(pair.t2.size());
                if (rational(across, pairs) >= hp.p) ++out.witnesses_found;
            }
        }
        return out.candidates_tried >= witness_budget;
    };

    // Deterministic candidates: S in J, S in its hull, the shrink ladder and
    // the separated-pair parts.
    if (examine(s, j)) return out;
    const vertex_interval hull(s.front(), s.back());
    if (examine(s, hull)) return out;
    for (std::int64_t r = j.size() / 2; r >= 1; r /= 2) {
        auto [sub, win] = shrink(s, j, r);
        if (examine(sub, win)) return out;
    }
    if (m >= 6) {
        const separated_pair pair = find_separated_pair(s, hull);
        if (examine(pair.t1, pair.i1)) return out;
        if (examine(pair.t2, pair.i2)) return out;
    }

    // Random candidates: subintervals of J and random subsets, hull interval.
    rng gen(seed);
    while (out.candidates_tried < witness_budget) {
        if (gen.coin()) {
            vertex lo = j.lo + gen.below(static_cast<std::uint64_t>(j.size()));
            vertex hi = j.lo + gen.below(static_cast<std::uint64_t>(j.size()));
            if (lo > hi) std::swap(lo, hi);
            const vertex_interval sub(lo, hi);
            if (examine(detail::restrict_to(s, lo, hi), sub)) return out;
        } else {
            std::vector<vertex> sub;
            for (vertex v : s)
                if (gen.below(4) != 0) sub.push_back(v); // keep each with prob 3/4
            if (sub.empty()) continue;
            if (examine(sub, vertex_interval(sub.front(), sub.back()))) return out;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// R_pi(k; q) at desk scale: least n such that every q-coloring of the
// complete graph on {1..n} contains a monochromatic clique of order type pi.
// Works by depth-first search for an avoiding coloring with first-use color
// canonicalization; a completed search without an avoider certifies the
// property at that n.
// ---------------------------------------------------------------------------

struct rpi_result {
    std::optional<std::int64_t> value;       // least n, when certified
    std::optional<std::int64_t> lower_bound; // greatest n seen with an avoiding coloring
    std::optional<edge_coloring> witness;    // avoiding coloring at lower_bound
    bool inconclusive = false;               // budget exhausted mid-certification
    std::uint64_t nodes = 0;
};

namespace detail {

struct rpi_searcher {
    int q;
    int k;
    const std::vector<int>& pi;
    int order_variant;
    search_budget budget;
    std::uint64_t& nodes;
    std::chrono::steady_clock::time_point start;
    edge_coloring work;
    std::vector<std::pair<vertex, vertex>> edges;
    bool stopped = false;

    rpi_searcher(int q_, int k_, const std::vector<int>& pi_, int variant, search_budget b,
                 std::uint64_t& nodes_, std::int64_t n)
        : q(q_), k(k_), pi(pi_), order_variant(variant), budget(b), nodes(nodes_),
          start(std::chrono::steady_clock::now()), work(vertex_interval(1, n), q_) {
        for (vertex v = 2; v <= n; ++v) {
            if (order_variant == 0)
                for (vertex u = 1; u < v; ++u) edges.emplace_back(u, v);
            else
                for (vertex u = v - 1; u >= 1; --u) edges.emplace_back(u, v);
        }
    }

    bool out_of_budget() {
        if (budget.max_nodes > 0 && nodes >= budget.max_nodes) return true;
        if (budget.max_ms > 0 && (nodes & 1023) == 0) {
            const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - start)
                                .count();
            if (ms >= budget.max_ms) return true;
        }
        return false;
    }

    // True when some monochromatic type-pi clique ends at vertex v (all edges
    // among [1, v] are colored at this point).
    bool clique_at(vertex v) {
        std::vector<vertex> pick(static_cast<std::size_t>(k));
        pick[static_cast<std::size_t>(k - 1)] = v;
        return pick_rest(pick, 0, 1, v - 1);
    }

    bool pick_rest(std::vector<vertex>& pick, int depth, vertex from, vertex to) {
        if (depth == k - 1) {
            return is_monochromatic(work, pick).value_or(-2) >= 0 && is_order_type_clique(pick, pi);
        }
        for (vertex u = from; u + (k - 2 - depth) <= to; ++u) {
            pick[static_cast<std::size_t>(depth)] = u;
            if (pick_rest(pick, depth + 1, u + 1, to)) return true;
        }
        return false;
    }

    // DFS over edge assignments; returns true when an avoiding coloring of
    // the whole graph exists below this point.
    bool avoid(std::size_t idx, int max_used) {
        if (stopped) return false;
        if (idx == edges.size()) return true;
        const auto [u, v] = edges[idx];
        const bool completes = order_variant == 0 ? u == v - 1 : u == 1;
        const int top = std::min(q - 1, max_used + 1);
        for (int col = 0; col <= top; ++col) {
            ++nodes;
            if (out_of_budget()) {
                stopped = true;
                return false;
            }
            work.set_color(u, v, col);
            if (!(completes && clique_at(v)) &&
                avoid(idx + 1, std::max(max_used, col)))
                return true;
            if (stopped) return false;
        }
        return false;
    }
};

} // namespace detail

// Scans n = 2..n_max in order; stops at the first n whose search certifies
// that every q-coloring contains a monochromatic type-pi clique.
inline rpi_result compute_R_pi(int k, int q, const std::vector<int>& pi, std::int64_t n_max,
                               search_budget budget = {}, int order_variant = 0) {
    if (k < 2) throw std::domain_error("compute_R_pi: k must be >= 2");
    if (q < 1 || q > 64) throw std::domain_error("compute_R_pi: q out of range [1,64]");
    if (static_cast<std::int64_t>(pi.size()) != k - 1)
        throw std::domain_error("compute_R_pi: pi must be a permutation of [k-1]");
    check_order_type(pi);
    if (n_max < 2) throw std::domain_error("compute_R_pi: n_max must be >= 2");

    rpi_result out;
    for (std::int64_t n = 2; n <= n_max; ++n) {
        detail::rpi_searcher searcher(q, k, pi, order_variant, budget, out.nodes, n);
        const bool avoider = searcher.avoid(0, -1);
        if (searcher.stopped) {
            out.inconclusive = true;
            return out;
        }
        if (!avoider) {
            out.value = n;
            return out;
        }
        out.lower_bound = n;
        out.witness = searcher.work;
    }
    return out;
}

} // namespace ramsey
