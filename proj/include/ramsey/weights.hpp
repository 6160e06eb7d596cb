#pragma once
// Iterated-log weight functions, the exact f(n) minimax oracle, and exhaustive
// verifiers for the small counterexample colorings.

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "ramsey/clique_engine.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/core.hpp"
#include "ramsey/numeric.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

// ---- weight specs --------------------------------------------------------------

enum class weight_kind { w1, iterated, iterated_eps, custom };

// w1(v) = 1/log2 v; iterated w_s(v) = 1/prod_{j=1..s} log_(2j-1) v;
// iterated_eps w'_s(v) = w_s(v) / (log_(2s-1) v)^eps; custom is a lookup table
struct weight_spec {
    weight_kind kind = weight_kind::w1;
    int level = 1;
    double eps = 1.0;
    std::vector<std::pair<vertex, double>> table; // sorted by vertex
    vertex domain_start = 2;
};

namespace detail {

// least v with log_(m) v > 0 is x_m + 1 where x_1 = 1 and x_{m+1} = 2^{x_m}
inline vertex iterated_log_domain_start(int m) {
    if (m < 1) throw std::domain_error("iterated_log_domain_start: m >= 1 required");
    vertex x = 1;
    for (int i = 2; i <= m; ++i) {
        if (x >= 62) throw std::overflow_error("weight_spec: domain start exceeds the vertex range");
        x = vertex(1) << x;
    }
    return x + 1;
}

} // namespace detail

inline void validate_weight_spec(const weight_spec& spec) {
    switch (spec.kind) {
    case weight_kind::w1:
        return;
    case weight_kind::iterated:
    case weight_kind::iterated_eps:
        if (spec.level < 1) throw std::domain_error("weight_spec: level >= 1 required");
        if (spec.kind == weight_kind::iterated_eps && !(spec.eps > 0))
            throw std::domain_error("weight_spec: eps > 0 required");
        return;
    case weight_kind::custom:
        if (spec.table.empty()) throw std::domain_error("weight_spec: custom table is empty");
        for (std::size_t i = 0; i < spec.table.size(); ++i) {
            if (i > 0 && spec.table[i - 1].first >= spec.table[i].first)
                throw std::domain_error("weight_spec: custom table must be strictly increasing");
            if (!(spec.table[i].second > 0))
                throw std::domain_error("weight_spec: custom weights must be positive");
        }
        return;
    }
    throw std::logic_error("validate_weight_spec: unreachable");
}

inline weight_spec make_w1() { return {}; }

inline weight_spec make_ws(int s) {
    if (s < 1) throw std::domain_error("make_ws: level >= 1 required");
    weight_spec spec;
    spec.kind = weight_kind::iterated;
    spec.level = s;
    spec.domain_start = detail::iterated_log_domain_start(2 * s - 1);
    return spec;
}

inline weight_spec make_wps(int s, double eps) {
    if (s < 1) throw std::domain_error("make_wps: level >= 1 required");
    if (!(eps > 0)) throw std::domain_error("make_wps: eps > 0 required");
    weight_spec spec;
    spec.kind = weight_kind::iterated_eps;
    spec.level = s;
    spec.eps = eps;
    spec.domain_start = detail::iterated_log_domain_start(2 * s - 1);
    return spec;
}

inline weight_spec make_custom_weights(std::vector<std::pair<vertex, double>> table) {
    weight_spec spec;
    spec.kind = weight_kind::custom;
    spec.table = std::move(table);
    validate_weight_spec(spec);
    spec.domain_start = spec.table.front().first;
    return spec;
}

inline double vertex_weight(const weight_spec& spec, vertex v) {
    if (v < spec.domain_start)
        throw std::domain_error("vertex_weight: vertex " + std::to_string(v) +
                                " below domain start " + std::to_string(spec.domain_start));
    switch (spec.kind) {
    case weight_kind::w1:
        return 1.0 / std::log2(static_cast<double>(v));
    case weight_kind::iterated:
    case weight_kind::iterated_eps: {
        double x = static_cast<double>(v);
        double prod = 1.0;
        const int top = 2 * spec.level - 1;
        for (int m = 1; m <= top; ++m) {
            x = std::log2(x);
            if (m % 2 == 1) prod *= x;
        }
        const double w = 1.0 / prod;
        return spec.kind == weight_kind::iterated ? w : w / std::pow(x, spec.eps);
    }
    case weight_kind::custom: {
        const auto it = std::lower_bound(spec.table.begin(), spec.table.end(), v,
                                         [](const auto& e, vertex key) { return e.first < key; });
        if (it == spec.table.end() || it->first != v)
            throw std::domain_error("vertex_weight: vertex " + std::to_string(v) + " not in custom table");
        return it->second;
    }
    }
    throw std::logic_error("vertex_weight: unreachable");
}

inline double set_weight(const weight_spec& spec, const std::vector<vertex>& s) {
    detail::check_vertex_list(s);
    kahan_sum total;
    for (vertex v : s) total.add(vertex_weight(spec, v));
    return total.value();
}

// exact rational value for w1 when every vertex is a power of two
inline std::optional<rational> set_weight_exact(const weight_spec& spec, const std::vector<vertex>& s) {
    if (spec.kind != weight_kind::w1) return std::nullopt;
    detail::check_vertex_list(s);
    rational total = 0;
    for (vertex v : s) {
        if (v < spec.domain_start) throw std::domain_error("set_weight_exact: vertex below domain start");
        if ((v & (v - 1)) != 0) return std::nullopt;
        total += rational(1, floor_log2(v));
    }
    return total;
}

// ---- exact f(n): minimum over q-colorings of the heaviest mono clique -----------

struct f_exact_result {
    double value = 0;
    edge_coloring witness;
    std::uint64_t colorings = 0; // canonical colorings evaluated
};

namespace detail {

inline bigint f_exact_estimate(std::int64_t edges, int q) {
    bigint fact = 1;
    for (int i = 2; i <= q; ++i) fact *= i;
    return (pow_bigint(q, edges) + fact - 1) / fact;
}

// evaluates one full coloring: heaviest mono clique over all colors, singles included
class f_evaluator {
  public:
    f_evaluator(int m, int q, const std::vector<double>& wt) : m_(m), q_(q) {
        if (m < 1 || m > 25) throw std::domain_error("f_exact: vertex count out of range [1,25]");
        std::vector<double> ws(std::size_t(1) << m, 0.0);
        base_ = 0;
        for (int i = 0; i < m; ++i) base_ = std::max(base_, wt[static_cast<std::size_t>(i)]);
        double second = 0;
        for (std::uint32_t mask = 1; mask < ws.size(); ++mask) {
            const int low = std::countr_zero(mask);
            ws[mask] = ws[mask & (mask - 1)] + wt[static_cast<std::size_t>(low)];
            if (std::popcount(mask) == 2) second = std::max(second, ws[mask]);
            if (std::popcount(mask) >= 3) order_.push_back(mask);
        }
        base_ = std::max(base_, second); // singles and pairs are mono under any coloring
        std::sort(order_.begin(), order_.end(),
                  [&ws](std::uint32_t a, std::uint32_t b) { return ws[a] > ws[b]; });
        weights_ = std::move(ws);
        adj_.assign(static_cast<std::size_t>(q) * static_cast<std::size_t>(m), 0);
    }

    void paint(int c, int iu, int iv) {
        adj_[at(c, iu)] |= std::uint32_t(1) << iv;
        adj_[at(c, iv)] |= std::uint32_t(1) << iu;
    }
    void unpaint(int c, int iu, int iv) {
        adj_[at(c, iu)] &= ~(std::uint32_t(1) << iv);
        adj_[at(c, iv)] &= ~(std::uint32_t(1) << iu);
    }

    double value() const {
        double best = base_;
        for (int c = 0; c < q_; ++c) {
            for (std::uint32_t mask : order_) {
                if (weights_[mask] <= best) break;
                if (mono(c, mask)) {
                    best = weights_[mask];
                    break;
                }
            }
        }
        return best;
    }

  private:
    std::size_t at(int c, int i) const {
        return static_cast<std::size_t>(c) * static_cast<std::size_t>(m_) + static_cast<std::size_t>(i);
    }

    bool mono(int c, std::uint32_t mask) const {
        for (std::uint32_t rest = mask; rest;) {
            const int i = std::countr_zero(rest);
            rest &= rest - 1;
            if (mask & ~adj_[at(c, i)] & ~(std::uint32_t(1) << i)) return false;
        }
        return true;
    }

    int m_;
    int q_;
    double base_ = 0;
    std::vector<double> weights_;         // subset weight by mask
    std::vector<std::uint32_t> order_;    // masks of size >= 3, heaviest first
    std::vector<std::uint32_t> adj_;      // per color, per vertex index
};

struct f_shard {
    std::vector<int> prefix; // colors of the first edges in enumeration order
    int max_used = 0;
};

struct f_shard_outcome {
    double value = std::numeric_limits<double>::infinity();
    std::vector<int> colors;
    std::uint64_t leaves = 0;
};

class f_searcher {
  public:
    f_searcher(int m, int q, std::vector<std::pair<int, int>> edges, const std::vector<double>& wt)
        : q_(q), edges_(std::move(edges)), eval_(m, q, wt) {
        cur_.assign(edges_.size(), 0);
    }

    // runs the canonical-coloring DFS below one prefix shard
    f_shard_outcome run(const f_shard& shard) {
        out_ = {};
        for (std::size_t i = 0; i < shard.prefix.size(); ++i) {
            cur_[i] = shard.prefix[i];
            eval_.paint(shard.prefix[i], edges_[i].first, edges_[i].second);
        }
        descend(shard.prefix.size(), shard.max_used);
        for (std::size_t i = 0; i < shard.prefix.size(); ++i)
            eval_.unpaint(shard.prefix[i], edges_[i].first, edges_[i].second);
        return std::move(out_);
    }

  private:
    void descend(std::size_t depth, int max_used) {
        if (depth == edges_.size()) {
            ++out_.leaves;
            const double v = eval_.value();
            if (v < out_.value) {
                out_.value = v;
                out_.colors = cur_;
            }
            return;
        }
        const int limit = std::min(max_used + 1, q_ - 1);
        const auto [iu, iv] = edges_[depth];
        for (int c = 0; c <= limit; ++c) {
            cur_[depth] = c;
            eval_.paint(c, iu, iv);
            descend(depth + 1, std::max(max_used, c));
            eval_.unpaint(c, iu, iv);
        }
    }

    int q_;
    std::vector<std::pair<int, int>> edges_;
    f_evaluator eval_;
    std::vector<int> cur_;
    f_shard_outcome out_;
};

// canonical color prefixes of the first `depth` edges (first-use order)
inline std::vector<f_shard> f_shards(std::size_t depth, int q) {
    std::vector<f_shard> out{{{}, -1}};
    for (std::size_t d = 0; d < depth; ++d) {
        std::vector<f_shard> next;
        for (const auto& s : out) {
            const int limit = std::min(s.max_used + 1, q - 1);
            for (int c = 0; c <= limit; ++c) {
                f_shard t = s;
                t.prefix.push_back(c);
                t.max_used = std::max(t.max_used, c);
                next.push_back(std::move(t));
            }
        }
        out = std::move(next);
    }
    return out;
}

} // namespace detail

// minimum over canonical q-colorings of K_{[2,n]} of the heaviest mono clique,
// singles included; colorings are canonical up to global color permutation
inline f_exact_result f_exact(vertex n, const weight_spec& spec, int q,
                              std::uint64_t budget = 2'000'000, int order_variant = 0,
                              int threads = 1) {
    if (n < 2) throw std::domain_error("f_exact: n >= 2 required");
    if (q < 1 || q > 16) throw std::domain_error("f_exact: q in [1,16] required");
    if (order_variant < 0) throw std::domain_error("f_exact: order variant must be >= 0");
    if (threads < 1) throw std::domain_error("f_exact: threads >= 1 required");
    validate_weight_spec(spec);
    const int m = static_cast<int>(n - 1);
    if (m > 25) throw std::domain_error("f_exact: vertex count out of range [1,25]");

    const std::int64_t edge_count = static_cast<std::int64_t>(m) * (m - 1) / 2;
    const bigint needed = detail::f_exact_estimate(edge_count, q);
    if (needed > budget)
        throw std::runtime_error("f_exact: budget exceeded: about " + needed.str() +
                                 " canonical colorings required, budget " + std::to_string(budget));

    const vertex_interval span(2, n);
    std::vector<double> wt;
    for (vertex v = span.lo; v <= span.hi; ++v) wt.push_back(vertex_weight(spec, v));

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) edges.emplace_back(i, j);
    if (order_variant > 0) {
        rng r(splitmix64(0x5EEDu ^ (static_cast<std::uint64_t>(order_variant) << 8)));
        for (std::size_t i = edges.size(); i > 1; --i)
            std::swap(edges[i - 1], edges[static_cast<std::size_t>(r.below(i))]);
    }

    std::size_t shard_depth = 0;
    if (threads > 1) {
        while (shard_depth < edges.size() && shard_depth < 8 &&
               detail::f_shards(shard_depth, q).size() < static_cast<std::size_t>(4 * threads))
            ++shard_depth;
    }
    const std::vector<detail::f_shard> shards = detail::f_shards(shard_depth, q);

    std::vector<detail::f_shard_outcome> results(shards.size());
    if (threads == 1) {
        detail::f_searcher s(m, q, edges, wt);
        for (std::size_t i = 0; i < shards.size(); ++i) results[i] = s.run(shards[i]);
    } else {
        std::atomic<std::size_t> next{0};
        auto work = [&]() {
            detail::f_searcher s(m, q, edges, wt);
            for (std::size_t i = next.fetch_add(1); i < shards.size(); i = next.fetch_add(1))
                results[i] = s.run(shards[i]);
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    // merge order matches the sequential DFS, so the witness is thread-count independent
    std::size_t best = 0;
    std::uint64_t leaves = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        leaves += results[i].leaves;
        if (results[i].value < results[best].value) best = i;
    }

    edge_coloring witness(span, q);
    for (std::size_t i = 0; i < edges.size(); ++i)
        witness.set_color(span.lo + edges[i].first, span.lo + edges[i].second, results[best].colors[i]);
    return {results[best].value, std::move(witness), leaves};
}

// ---- counterexample verifiers ---------------------------------------------------

struct monotone_diff_report {
    std::int64_t sets_checked = 0;
    std::int64_t violations = 0;
    std::map<int, std::int64_t> by_size;
    std::optional<std::vector<vertex>> first_violation;
};

// every mono set of the monotone-difference coloring must have monotone
// consecutive differences: non-decreasing when red, non-increasing when blue
inline monotone_diff_report verify_monotone_diff_counterexample(vertex n, int max_size) {
    if (n < 3) throw std::domain_error("verify_monotone_diff_counterexample: n >= 3 required");
    const triple_coloring tc = monotone_diff_triple_coloring(n);
    monotone_diff_report rep;
    enumerate_mono_sets(tc, max_size, [&rep](const std::vector<vertex>& s, int color) {
        ++rep.sets_checked;
        ++rep.by_size[static_cast<int>(s.size())];
        bool ok = true;
        for (std::size_t i = 2; ok && i < s.size(); ++i) {
            const vertex d1 = s[i - 1] - s[i - 2];
            const vertex d2 = s[i] - s[i - 1];
            ok = color == red ? d2 >= d1 : d2 <= d1;
        }
        if (!ok) {
            ++rep.violations;
            if (!rep.first_violation) rep.first_violation = s;
        }
    });
    return rep;
}

// forbidden pattern: s3 = a5-a3 strictly the largest second difference and
// s2 = a4-a2, s4 = a6-a4 strictly the two smallest; any tie fails
inline bool is_second_diff_pattern(const std::vector<vertex>& s) {
    if (s.size() != 7) throw std::domain_error("is_second_diff_pattern: exactly 7 vertices required");
    detail::check_vertex_list(s);
    std::array<vertex, 5> sd{};
    for (int i = 0; i < 5; ++i)
        sd[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>(i + 2)] - s[static_cast<std::size_t>(i)];
    for (int i = 0; i < 5; ++i)
        if (i != 2 && sd[static_cast<std::size_t>(i)] >= sd[2]) return false;
    if (sd[1] == sd[3]) return false;
    return std::max(sd[1], sd[3]) < std::min(sd[0], sd[4]);
}

struct second_diff_report {
    std::int64_t cliques_checked = 0; // mono 7-cliques inspected
    std::int64_t matches = 0;
    std::array<std::int64_t, 2> by_color{0, 0};
    std::optional<std::vector<vertex>> first_match;
};

inline second_diff_report verify_second_diff_counterexample(vertex n = 40) {
    if (n < 7) throw std::domain_error("verify_second_diff_counterexample: n >= 7 required");
    if (n > 64) throw std::domain_error("verify_second_diff_counterexample: n <= 64 required");
    const edge_coloring c = second_diff_coloring(n);
    second_diff_report rep;
    for (int color = 0; color < 2; ++color) {
        const bit_graph g = detail::color_graph(c, color);
        std::vector<std::uint64_t> row(static_cast<std::size_t>(g.m));
        for (int i = 0; i < g.m; ++i) row[static_cast<std::size_t>(i)] = g.row(i)[0];
        std::vector<int> cur;
        std::function<void(std::uint64_t)> grow = [&](std::uint64_t cand) {
            while (cand) {
                const int v = std::countr_zero(cand);
                cand &= cand - 1;
                cur.push_back(v);
                if (cur.size() == 7) {
                    std::vector<vertex> verts;
                    for (int i : cur) verts.push_back(c.span.lo + i);
                    ++rep.cliques_checked;
                    ++rep.by_color[static_cast<std::size_t>(color)];
                    if (is_second_diff_pattern(verts)) {
                        ++rep.matches;
                        if (!rep.first_match) rep.first_match = verts;
                    }
                } else {
                    const std::uint64_t next = cand & row[static_cast<std::size_t>(v)];
                    if (cur.size() + static_cast<std::size_t>(std::popcount(next)) >= 7) grow(next);
                }
                cur.pop_back();
            }
        };
        std::uint64_t all = g.m == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << g.m) - 1;
        grow(all);
    }
    return rep;
}

struct block_report {
    int seeds_run = 0;
    std::int64_t sets_checked = 0;
    std::int64_t violations = 0;
    std::optional<std::vector<vertex>> first_violation;
    std::optional<std::uint64_t> first_violation_seed;
};

// mono cliques of the block coloring hold at most one vertex in all but one block
inline block_report verify_block_structure(const block_spec& spec, int max_size, int seeds,
                                           std::int64_t max_total = 24) {
    if (seeds < 1) throw std::domain_error("verify_block_structure: seeds >= 1 required");
    const auto blocks = block_boundaries(spec.sizes);
    if (blocks.back().hi > max_total)
        throw std::domain_error("verify_block_structure: total vertices exceed the cap");
    block_report rep;
    for (int i = 0; i < seeds; ++i) {
        block_spec bs = spec;
        bs.seed = spec.seed + static_cast<std::uint64_t>(i);
        const triple_coloring tc = block_triple_coloring(bs);
        enumerate_mono_sets(tc, max_size, [&rep, &blocks, &bs](const std::vector<vertex>& s, int) {
            ++rep.sets_checked;
            int crowded = 0;
            std::size_t at = 0;
            for (const auto& b : blocks) {
                int count = 0;
                while (at < s.size() && b.contains(s[at])) {
                    ++count;
                    ++at;
                }
                if (count >= 2) ++crowded;
            }
            if (crowded > 1) {
                ++rep.violations;
                if (!rep.first_violation) {
                    rep.first_violation = s;
                    rep.first_violation_seed = bs.seed;
                }
            }
        });
        ++rep.seeds_run;
    }
    return rep;
}

// ---- Rodl three-coloring weight survey ------------------------------------------

struct rodl_interval_best {
    vertex_interval iv{2, 2};
    int color = red;
    double best_weight = 0;
    std::vector<vertex> best_clique;
    bool proved = false;
    std::uint64_t nodes = 0;
};

struct rodl_weight_summary {
    std::vector<vertex_interval> intervals;
    double green_weight = 0; // exact: the heaviest green clique takes each interval's low end
    std::optional<rational> green_weight_exact;
    std::vector<vertex> green_clique;
    std::vector<rodl_interval_best> inner; // one entry per interval and inner color
    double max_weight_found = 0;
    std::vector<vertex> max_clique_found;
    int max_color = green;
    bool all_proved = false;
};

// surveys the heaviest mono cliques of the three-coloring under w1.  Green is
// exact by structure; within-interval searches are exact up to materialize_cap
// vertices and seeded greedy lower bounds beyond it.
inline rodl_weight_summary rodl_weight_report(const rodl_spec& spec, vertex materialize_cap = 4096,
                                              int greedy_trials = 64, search_budget budget = {}) {
    const rodl_view view = make_rodl_view(spec, true);
    rodl_weight_summary out;
    out.intervals = view.intervals;

    // a green clique holds at most one vertex per interval and w1 decreases,
    // so the maximum picks every interval's low endpoint
    kahan_sum green_total;
    rational green_exact = 0;
    bool exact_ok = true;
    for (const auto& iv : view.intervals) {
        out.green_clique.push_back(iv.lo);
        green_total.add(1.0 / std::log2(static_cast<double>(iv.lo)));
        if ((iv.lo & (iv.lo - 1)) == 0)
            green_exact += rational(1, floor_log2(iv.lo));
        else
            exact_ok = false;
    }
    out.green_weight = green_total.value();
    if (exact_ok) out.green_weight_exact = green_exact;
    out.max_weight_found = out.green_weight;
    out.max_clique_found = out.green_clique;
    out.max_color = green;

    bool all_proved = true;
    const weight_spec w1 = make_w1();
    for (std::size_t i = 0; i < view.intervals.size(); ++i) {
        const vertex_interval iv = view.intervals[i];
        if (iv.size() < 2) continue;
        const auto& fn = view.inner_fn[i];
        if (iv.size() <= materialize_cap) {
            edge_coloring sub(iv, 2);
            for (vertex u = iv.lo; u <= iv.hi; ++u)
                for (vertex v = u + 1; v <= iv.hi; ++v) sub.set_color(u, v, fn(u, v));
            std::vector<double> wt;
            for (vertex v = iv.lo; v <= iv.hi; ++v) wt.push_back(vertex_weight(w1, v));
            for (int color = 0; color < 2; ++color) {
                const search_result res = max_weight_mono_clique(sub, color, wt, budget);
                rodl_interval_best entry{iv, color, res.best.weight.value_or(0.0),
                                         res.best.vertices, res.proved, res.nodes};
                all_proved = all_proved && res.proved;
                if (entry.best_weight > out.max_weight_found) {
                    out.max_weight_found = entry.best_weight;
                    out.max_clique_found = entry.best_clique;
                    out.max_color = color;
                }
                out.inner.push_back(std::move(entry));
            }
        } else {
            for (int color = 0; color < 2; ++color) {
                rodl_interval_best entry{iv, color, 0.0, {}, false, 0};
                std::vector<vertex> order;
                for (vertex v = iv.lo; v <= iv.hi; ++v) order.push_back(v);
                for (int trial = 0; trial < greedy_trials; ++trial) {
                    if (trial > 0) {
                        rng r(splitmix64(spec.seed ^ (0x9E3700u + static_cast<std::uint64_t>(trial) * 2 +
                                                      static_cast<std::uint64_t>(color))));
                        for (std::size_t j = order.size(); j > 1; --j)
                            std::swap(order[j - 1], order[static_cast<std::size_t>(r.below(j))]);
                    }
                    std::vector<vertex> cl;
                    for (vertex v : order) {
                        bool ok = true;
                        for (vertex u : cl) {
                            ++entry.nodes;
                            if (fn(std::min(u, v), std::max(u, v)) != color) {
                                ok = false;
                                break;
                            }
                        }
                        if (ok) cl.push_back(v);
                    }
                    std::sort(cl.begin(), cl.end());
                    const double w = set_weight(w1, cl);
                    if (w > entry.best_weight) {
                        entry.best_weight = w;
                        entry.best_clique = cl;
                    }
                }
                all_proved = false;
                if (entry.best_weight > out.max_weight_found) {
                    out.max_weight_found = entry.best_weight;
                    out.max_clique_found = entry.best_clique;
                    out.max_color = color;
                }
                out.inner.push_back(std::move(entry));
            }
        }
    }
    out.all_proved = all_proved;
    return out;
}

} // namespace ramsey
