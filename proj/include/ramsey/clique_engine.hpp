#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ramsey/core.hpp"
#include "ramsey/numeric.hpp"

namespace ramsey {

struct search_budget {
    std::uint64_t max_nodes = 10'000'000;
    std::int64_t max_ms = 0; // 0 = no time limit
};

struct search_result {
    clique best;
    bool proved = false;
    std::uint64_t nodes = 0;
};

struct find_result {
    std::optional<clique> witness;
    bool exhausted = false;
    std::uint64_t nodes = 0;
};

// adjacency bitsets over indices 0..m-1
struct bit_graph {
    int m = 0;
    std::size_t blocks = 0;
    std::vector<std::uint64_t> rows;

    explicit bit_graph(int m_ = 0) { reset(m_); }

    void reset(int m_) {
        m = m_;
        blocks = static_cast<std::size_t>((m + 63) / 64);
        rows.assign(static_cast<std::size_t>(m) * blocks, 0);
    }

    std::uint64_t* row(int i) { return rows.data() + static_cast<std::size_t>(i) * blocks; }
    const std::uint64_t* row(int i) const { return rows.data() + static_cast<std::size_t>(i) * blocks; }

    void add_edge(int i, int j) {
        row(i)[static_cast<std::size_t>(j) / 64] |= 1ull << (j % 64);
        row(j)[static_cast<std::size_t>(i) / 64] |= 1ull << (i % 64);
    }

    bool has_edge(int i, int j) const { return (row(i)[static_cast<std::size_t>(j) / 64] >> (j % 64)) & 1; }
};

namespace detail {

constexpr double weight_guard = 1e-12;

class wclique_searcher {
  public:
    wclique_searcher(const bit_graph& g, const std::vector<double>& w, search_budget budget)
        : g_(g), w_(w), budget_(budget), start_(std::chrono::steady_clock::now()) {
        for (double x : w)
            if (x < 0) throw std::domain_error("clique search: negative weight");
    }

    // best starts as the single heaviest vertex (smallest label on ties)
    void run() {
        const int m = g_.m;
        int seed_v = 0;
        for (int v = 1; v < m; ++v)
            if (w_[static_cast<std::size_t>(v)] > w_[static_cast<std::size_t>(seed_v)] + weight_guard) seed_v = v;
        best_set_ = {seed_v};
        best_w_ = w_[static_cast<std::size_t>(seed_v)];
        std::vector<std::uint64_t> cand(g_.blocks, 0);
        for (int v = 0; v < m; ++v) cand[static_cast<std::size_t>(v) / 64] |= 1ull << (v % 64);
        std::vector<int> cur;
        expand(cand, 0.0, cur);
        proved_ = !stopped_;
    }

    const std::vector<int>& best_set() const { return best_set_; }
    bool proved() const { return proved_; }
    std::uint64_t nodes() const { return nodes_; }

  private:
    bool out_of_budget() {
        if (nodes_ >= budget_.max_nodes) return true;
        if (budget_.max_ms > 0 && (nodes_ & 1023) == 0) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
            if (ms >= budget_.max_ms) return true;
        }
        return false;
    }

    // upper bound: greedy partition of cand into independent classes, summing
    // the heaviest weight of each class
    double greedy_bound(const std::vector<std::uint64_t>& cand) {
        class_bits_.clear();
        class_max_.clear();
        for (std::size_t b = 0; b < g_.blocks; ++b) {
            std::uint64_t bits = cand[b];
            while (bits) {
                const int v = static_cast<int>(b * 64) + std::countr_zero(bits);
                bits &= bits - 1;
                const std::uint64_t* adj = g_.row(v);
                std::size_t placed = class_bits_.size();
                for (std::size_t c = 0; c < class_bits_.size(); ++c) {
                    bool clash = false;
                    const std::uint64_t* cb = class_bits_[c].data();
                    for (std::size_t k = 0; k < g_.blocks; ++k)
                        if (cb[k] & adj[k]) {
                            clash = true;
                            break;
                        }
                    if (!clash) {
                        placed = c;
                        break;
                    }
                }
                if (placed == class_bits_.size()) {
                    class_bits_.emplace_back(g_.blocks, 0);
                    class_max_.push_back(0.0);
                }
                class_bits_[placed][static_cast<std::size_t>(v) / 64] |= 1ull << (v % 64);
                class_max_[placed] = std::max(class_max_[placed], w_[static_cast<std::size_t>(v)]);
            }
        }
        double ub = 0;
        for (double x : class_max_) ub += x;
        return ub;
    }

    void expand(const std::vector<std::uint64_t>& cand, double cw, std::vector<int>& cur) {
        if (stopped_) return;
        ++nodes_;
        if (out_of_budget()) {
            stopped_ = true;
            return;
        }
        std::vector<std::uint64_t> child(g_.blocks);
        for (std::size_t b = 0; b < g_.blocks; ++b) {
            std::uint64_t bits = cand[b];
            while (bits) {
                const int v = static_cast<int>(b * 64) + std::countr_zero(bits);
                bits &= bits - 1;
                const std::uint64_t* adj = g_.row(v);
                bool any = false;
                for (std::size_t k = 0; k < g_.blocks; ++k) {
                    std::uint64_t x = cand[k] & adj[k];
                    // keep only indices greater than v
                    if (k == b) x &= ~((2ull << (v % 64)) - 1);
                    else if (k < b) x = 0;
                    child[k] = x;
                    any |= x != 0;
                }
                const double nw = cw + w_[static_cast<std::size_t>(v)];
                cur.push_back(v);
                if (nw > best_w_ + weight_guard) {
                    best_w_ = nw;
                    best_set_ = cur;
                }
                if (any && nw + greedy_bound(child) >= best_w_ - weight_guard) expand(child, nw, cur);
                cur.pop_back();
                if (stopped_) return;
            }
        }
    }

    const bit_graph& g_;
    const std::vector<double>& w_;
    search_budget budget_;
    std::chrono::steady_clock::time_point start_;
    std::vector<std::vector<std::uint64_t>> class_bits_;
    std::vector<double> class_max_;
    std::vector<int> best_set_;
    double best_w_ = 0;
    bool proved_ = false;
    bool stopped_ = false;
    std::uint64_t nodes_ = 0;
};

inline bit_graph color_graph(const edge_coloring& c, int color) {
    const int m = static_cast<int>(c.span.size());
    bit_graph g(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (c.color(c.span.lo + i, c.span.lo + j) == color) g.add_edge(i, j);
    return g;
}

} // namespace detail

// exact search over an explicit bitset graph; labels[i] names index i
inline search_result max_weight_clique_bits(const bit_graph& g, const std::vector<double>& w,
                                            const std::vector<vertex>& labels, int color,
                                            search_budget budget = {}) {
    if (static_cast<int>(w.size()) != g.m || static_cast<int>(labels.size()) != g.m)
        throw std::domain_error("clique search: weight/label size mismatch");
    if (g.m == 0) throw std::domain_error("clique search: empty vertex set");
    detail::wclique_searcher s(g, w, budget);
    s.run();
    clique out;
    out.color = color;
    kahan_sum total;
    for (int idx : s.best_set()) {
        out.vertices.push_back(labels[static_cast<std::size_t>(idx)]);
        total.add(w[static_cast<std::size_t>(idx)]);
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    out.weight = total.value();
    return {out, s.proved(), s.nodes()};
}

inline search_result max_weight_mono_clique(const edge_coloring& c, int color, const std::vector<double>& w,
                                            search_budget budget = {}) {
    if (color < 0 || color >= c.q) throw std::domain_error("clique search: color id out of range");
    if (w.size() != static_cast<std::size_t>(c.span.size()))
        throw std::domain_error("clique search: one weight per vertex required");
    std::vector<vertex> labels;
    for (vertex v = c.span.lo; v <= c.span.hi; ++v) labels.push_back(v);
    return max_weight_clique_bits(detail::color_graph(c, color), w, labels, color, budget);
}

inline search_result max_mono_clique(const edge_coloring& c, int color, search_budget budget = {}) {
    std::vector<double> unit(static_cast<std::size_t>(c.span.size()), 1.0);
    return max_weight_mono_clique(c, color, unit, budget);
}

// ---- order-type clique search -------------------------------------------------

// pi must be a bijection on {1..k-1}; the clique condition is
// d_{pi(1)} > d_{pi(2)} > ... > d_{pi(k-1)} over consecutive differences d_i
inline void check_order_type(const std::vector<int>& pi) {
    const int k1 = static_cast<int>(pi.size());
    std::vector<bool> seen(static_cast<std::size_t>(k1) + 1, false);
    for (int x : pi) {
        if (x < 1 || x > k1 || seen[static_cast<std::size_t>(x)])
            throw std::domain_error("order type: pi must be a permutation of 1..k-1");
        seen[static_cast<std::size_t>(x)] = true;
    }
}

inline bool is_order_type_clique(const std::vector<vertex>& s, const std::vector<int>& pi) {
    check_order_type(pi);
    if (s.size() != pi.size() + 1) return false;
    detail::check_vertex_list(s);
    std::vector<vertex> d;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) d.push_back(s[i + 1] - s[i]);
    for (std::size_t j = 0; j + 1 < pi.size(); ++j)
        if (d[static_cast<std::size_t>(pi[j] - 1)] <= d[static_cast<std::size_t>(pi[j + 1] - 1)]) return false;
    return true;
}

namespace detail {

// pos[i] = rank of difference i in the decreasing chain (0 = largest)
struct type_searcher {
    type_searcher(const edge_coloring& c_, int color_, int k_, bool square_path_, search_budget budget_)
        : c(c_), color(color_), k(k_), square_path(square_path_), budget(budget_) {}

    const edge_coloring& c;
    int color;
    int k;
    std::vector<int> pos;
    bool square_path = false;
    search_budget budget;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::uint64_t nodes = 0;
    bool stopped = false;
    std::vector<vertex> cur;
    std::vector<vertex> diffs;
    std::optional<std::vector<vertex>> found;

    bool out_of_budget() {
        if (nodes >= budget.max_nodes) return true;
        if (budget.max_ms > 0 && (nodes & 1023) == 0) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
            if (ms >= budget.max_ms) return true;
        }
        return false;
    }

    bool edges_ok(vertex v) const {
        const std::size_t j = cur.size(); // v would be cur[j]
        for (std::size_t i = 0; i < j; ++i) {
            if (square_path && j - i > 2) continue;
            if (c.color(cur[i], v) != color) return false;
        }
        return true;
    }

    // bounds on the next difference d_j implied by already-known differences
    std::pair<vertex, vertex> diff_bounds(std::size_t j) const {
        vertex lb = 1, ub = INT64_MAX;
        for (std::size_t i = 0; i < j; ++i) {
            if (pos[i] > pos[j]) lb = std::max(lb, diffs[i] + 1); // d_j > d_i
            else ub = std::min(ub, diffs[i] - 1);                 // d_j < d_i
        }
        return {lb, ub};
    }

    void dfs() {
        if (stopped || found) return;
        ++nodes;
        if (out_of_budget()) {
            stopped = true;
            return;
        }
        if (static_cast<int>(cur.size()) == k) {
            found = cur;
            return;
        }
        if (cur.empty()) {
            for (vertex v = c.span.lo; v <= c.span.hi && !found && !stopped; ++v) {
                cur.push_back(v);
                dfs();
                cur.pop_back();
            }
            return;
        }
        const std::size_t j = cur.size() - 1; // index of the difference being fixed
        auto [lb, ub] = diff_bounds(j);
        const vertex base = cur.back();
        for (vertex v = base + lb; v <= c.span.hi && v - base <= ub && !found && !stopped; ++v) {
            if (!edges_ok(v)) continue;
            cur.push_back(v);
            diffs.push_back(v - base);
            dfs();
            diffs.pop_back();
            cur.pop_back();
        }
    }
};

} // namespace detail

inline find_result find_type_clique_impl(const edge_coloring& c, int color, const std::vector<int>& pi,
                                         bool square_path, search_budget budget) {
    check_order_type(pi);
    if (pi.empty()) throw std::domain_error("order type: k >= 2 required");
    if (color < 0 || color >= c.q) throw std::domain_error("clique search: color id out of range");
    detail::type_searcher s(c, color, static_cast<int>(pi.size()) + 1, square_path, budget);
    s.pos.resize(pi.size());
    for (std::size_t r = 0; r < pi.size(); ++r) s.pos[static_cast<std::size_t>(pi[r] - 1)] = static_cast<int>(r);
    s.dfs();
    find_result out;
    out.nodes = s.nodes;
    out.exhausted = !s.stopped;
    if (s.found) {
        clique w;
        w.vertices = *s.found;
        w.color = color;
        w.diff_ranks = pi;
        out.witness = w;
    }
    return out;
}

inline find_result find_type_clique(const edge_coloring& c, int color, const std::vector<int>& pi,
                                    search_budget budget = {}) {
    return find_type_clique_impl(c, color, pi, false, budget);
}

// convex: d_1 < d_2 < ... < d_{k-1}, i.e. pi = (k-1, k-2, ..., 1)
inline std::vector<int> convex_order_type(int k) {
    if (k < 2) throw std::domain_error("order type: k >= 2 required");
    std::vector<int> pi;
    for (int i = k - 1; i >= 1; --i) pi.push_back(i);
    return pi;
}

inline find_result find_convex_clique(const edge_coloring& c, int color, int k, search_budget budget = {}) {
    return find_type_clique_impl(c, color, convex_order_type(k), false, budget);
}

// square-path variant: only edges (a_i, a_j) with |j-i| <= 2 must carry the color
inline find_result find_square_path_convex(const edge_coloring& c, int color, int k, search_budget budget = {}) {
    return find_type_clique_impl(c, color, convex_order_type(k), true, budget);
}

// ---- hypergraph monochromatic set enumeration ---------------------------------

// yields every set of size 3..max_size whose triples all share one color
inline void enumerate_mono_sets(const triple_coloring& tc, int max_size,
                                const std::function<void(const std::vector<vertex>&, int)>& emit) {
    if (max_size < 3) throw std::domain_error("enumerate_mono_sets: max_size >= 3 required");
    std::vector<vertex> cur;
    int col = any_color;
    auto compatible = [&](vertex v) {
        if (cur.size() < 2) return true;
        if (cur.size() == 2) return true; // first triple fixes the color
        for (std::size_t i = 0; i < cur.size(); ++i)
            for (std::size_t j = i + 1; j < cur.size(); ++j)
                if (tc.color(cur[i], cur[j], v) != col) return false;
        return true;
    };
    std::function<void(vertex)> extend = [&](vertex from) {
        if (cur.size() >= 3) emit(cur, col);
        if (static_cast<int>(cur.size()) == max_size) return;
        for (vertex v = from; v <= tc.span.hi; ++v) {
            if (!compatible(v)) continue;
            const int saved = col;
            if (cur.size() == 2) col = tc.color(cur[0], cur[1], v);
            cur.push_back(v);
            extend(v + 1);
            cur.pop_back();
            col = saved;
        }
    };
    extend(tc.span.lo);
}

} // namespace ramsey
