#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ramsey/numeric.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

struct drc_params {
    rational p = rational(1, 2);
    std::int64_t s = 2;
    std::int64_t t = 2;
    std::int64_t m = 1;
    std::int64_t n1 = 1;
    std::int64_t n2 = 1;
};

inline void validate_drc_params(const drc_params& d) {
    if (!(d.p > 0 && d.p <= 1)) throw std::domain_error("drc: p in (0,1] required");
    if (d.s < 1 || d.t < 1 || d.m < 0 || d.n1 < 1 || d.n2 < 1)
        throw std::domain_error("drc: s,t >= 1, m >= 0, N1,N2 >= 1 required");
}

// C(N1,s) * (m/N2)^t
inline rational drc_lhs(const drc_params& d) {
    validate_drc_params(d);
    return rational(binomial(d.n1, d.s)) * pow_rational(rational(d.m, d.n2), d.t);
}

// p^t * N1 / 2
inline rational drc_rhs(const drc_params& d) {
    validate_drc_params(d);
    return pow_rational(d.p, d.t) * d.n1 / 2;
}

inline bool drc_feasible(const drc_params& d) { return drc_lhs(d) <= drc_rhs(d); }

// bipartite graph with bitset adjacency rows for side V1 (indices 0..n1-1
// on the left, 0..n2-1 on the right)
struct bipartite_graph {
    std::int64_t n1 = 0;
    std::int64_t n2 = 0;
    std::size_t blocks = 0;
    std::vector<std::uint64_t> rows;

    bipartite_graph(std::int64_t n1_, std::int64_t n2_) : n1(n1_), n2(n2_) {
        if (n1 < 1 || n2 < 1) throw std::domain_error("bipartite_graph: both sides must be nonempty");
        blocks = static_cast<std::size_t>((n2 + 63) / 64);
        rows.assign(static_cast<std::size_t>(n1) * blocks, 0);
    }

    std::uint64_t* row(std::int64_t i) { return rows.data() + static_cast<std::size_t>(i) * blocks; }
    const std::uint64_t* row(std::int64_t i) const { return rows.data() + static_cast<std::size_t>(i) * blocks; }

    void check(std::int64_t i, std::int64_t j) const {
        if (i < 0 || i >= n1 || j < 0 || j >= n2) throw std::domain_error("bipartite_graph: index out of range");
    }

    void add_edge(std::int64_t i, std::int64_t j) {
        check(i, j);
        row(i)[static_cast<std::size_t>(j) / 64] |= 1ull << (j % 64);
    }

    bool adj(std::int64_t i, std::int64_t j) const {
        check(i, j);
        return (row(i)[static_cast<std::size_t>(j) / 64] >> (j % 64)) & 1;
    }

    std::int64_t degree(std::int64_t i) const {
        std::int64_t d = 0;
        for (std::size_t b = 0; b < blocks; ++b) d += std::popcount(row(i)[b]);
        return d;
    }

    std::int64_t edge_count() const {
        std::int64_t e = 0;
        for (std::int64_t i = 0; i < n1; ++i) e += degree(i);
        return e;
    }
};

inline nlohmann::json bipartite_to_json(const bipartite_graph& g) {
    nlohmann::json rows = nlohmann::json::array();
    const std::size_t nibbles = static_cast<std::size_t>((g.n2 + 3) / 4);
    for (std::int64_t i = 0; i < g.n1; ++i) {
        std::string hex;
        for (std::size_t k = nibbles; k-- > 0;) {
            const std::size_t bit = k * 4;
            unsigned val = 0;
            for (unsigned off = 0; off < 4; ++off)
                if (bit + off < static_cast<std::size_t>(g.n2) &&
                    ((g.row(i)[(bit + off) / 64] >> ((bit + off) % 64)) & 1))
                    val |= 1u << off;
            hex.push_back("0123456789abcdef"[val]);
        }
        rows.push_back(hex);
    }
    return nlohmann::json{{"n1", g.n1}, {"n2", g.n2}, {"rows", rows}};
}

inline bipartite_graph bipartite_from_json(const nlohmann::json& j) {
    if (!j.contains("n1") || !j.contains("n2") || !j.contains("rows"))
        throw std::domain_error("bipartite graph json: n1, n2, rows required");
    bipartite_graph g(j.at("n1").get<std::int64_t>(), j.at("n2").get<std::int64_t>());
    const auto& rows = j.at("rows");
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(g.n1))
        throw std::domain_error("bipartite graph json: one row per left vertex required");
    const std::size_t nibbles = static_cast<std::size_t>((g.n2 + 3) / 4);
    for (std::int64_t i = 0; i < g.n1; ++i) {
        const std::string hex = rows[static_cast<std::size_t>(i)].get<std::string>();
        if (hex.size() != nibbles)
            throw std::domain_error("bipartite graph json: row " + std::to_string(i) + " has wrong length");
        for (std::size_t k = 0; k < nibbles; ++k) {
            const char ch = hex[nibbles - 1 - k];
            const char* digits = "0123456789abcdef";
            const char* pos = std::char_traits<char>::find(digits, 16, ch);
            if (!pos) throw std::domain_error("bipartite graph json: row " + std::to_string(i) + " is not hex");
            const unsigned val = static_cast<unsigned>(pos - digits);
            for (unsigned off = 0; off < 4; ++off)
                if (val & (1u << off)) {
                    const std::size_t bit = k * 4 + off;
                    if (bit >= static_cast<std::size_t>(g.n2))
                        throw std::domain_error("bipartite graph json: row " + std::to_string(i) +
                                                " sets a bit past n2");
                    g.add_edge(i, static_cast<std::int64_t>(bit));
                }
        }
    }
    return g;
}

namespace detail {

constexpr std::int64_t drc_subset_budget = 10'000'000;

inline void check_subset_budget(std::int64_t w_size, std::int64_t s) {
    if (binomial(w_size, s) > drc_subset_budget)
        throw std::runtime_error("drc: s-subset enumeration budget exceeded");
}

// visit all index s-subsets of {0..n-1} in lexicographic order
template <typename F>
void for_each_subset(std::int64_t n, std::int64_t s, F&& fn) {
    if (s > n) return;
    std::vector<std::int64_t> idx(static_cast<std::size_t>(s));
    for (std::int64_t i = 0; i < s; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        fn(idx);
        std::int64_t i = s - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - s + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (std::int64_t k = i + 1; k < s; ++k)
            idx[static_cast<std::size_t>(k)] = idx[static_cast<std::size_t>(k - 1)] + 1;
    }
}

inline std::int64_t common_neighbors(const bipartite_graph& g, const std::vector<std::int64_t>& set) {
    if (set.empty()) return g.n2;
    std::vector<std::uint64_t> acc(g.row(set[0]), g.row(set[0]) + g.blocks);
    for (std::size_t i = 1; i < set.size(); ++i)
        for (std::size_t b = 0; b < g.blocks; ++b) acc[b] &= g.row(set[i])[b];
    std::int64_t count = 0;
    for (auto x : acc) count += std::popcount(x);
    return count;
}

} // namespace detail

struct drc_extraction {
    std::vector<std::int64_t> u;        // surviving left vertices
    std::vector<std::int64_t> t_sample; // right vertices drawn with repetition
    std::vector<std::int64_t> w;        // common neighborhood of the sample
    int attempts = 0;
    std::int64_t min_common = -1; // min over s-subsets of u; -1 when |u| < s
    rational threshold;           // p^t * N1 / 2
};

inline void drc_check_preconditions(const bipartite_graph& g, const drc_params& d) {
    validate_drc_params(d);
    if (d.n1 != g.n1 || d.n2 != g.n2) throw std::domain_error("drc: params sized for a different graph");
    if (rational(g.edge_count()) < d.p * d.n1 * d.n2)
        throw std::domain_error("drc: edge density below p");
    if (!drc_feasible(d)) throw std::domain_error("drc: infeasible parameters");
}

inline std::optional<drc_extraction> drc_extract(const bipartite_graph& g, const drc_params& d, rng& gen,
                                                 int max_retries = 20) {
    drc_check_preconditions(g, d);
    const rational threshold = drc_rhs(d);
    for (int attempt = 1; attempt <= max_retries; ++attempt) {
        drc_extraction out;
        out.threshold = threshold;
        out.attempts = attempt;
        for (std::int64_t i = 0; i < d.t; ++i)
            out.t_sample.push_back(static_cast<std::int64_t>(gen.below(static_cast<std::uint64_t>(g.n2))));
        for (std::int64_t v = 0; v < g.n1; ++v) {
            bool all = true;
            for (auto j : out.t_sample)
                if (!g.adj(v, j)) {
                    all = false;
                    break;
                }
            if (all) out.w.push_back(v);
        }
        detail::check_subset_budget(static_cast<std::int64_t>(out.w.size()), d.s);

        // one lexicographic deletion pass: a bad s-subset loses its
        // largest-label member; subsets already broken are skipped
        std::vector<bool> deleted(out.w.size(), false);
        detail::for_each_subset(
            static_cast<std::int64_t>(out.w.size()), d.s, [&](const std::vector<std::int64_t>& idx) {
                for (auto i : idx)
                    if (deleted[static_cast<std::size_t>(i)]) return;
                std::vector<std::int64_t> subset;
                for (auto i : idx) subset.push_back(out.w[static_cast<std::size_t>(i)]);
                if (detail::common_neighbors(g, subset) < d.m) deleted[static_cast<std::size_t>(idx.back())] = true;
            });
        for (std::size_t i = 0; i < out.w.size(); ++i)
            if (!deleted[i]) out.u.push_back(out.w[i]);

        if (rational(static_cast<std::int64_t>(out.u.size())) < threshold) continue;

        // certificate: re-verify every s-subset of u by direct enumeration
        detail::check_subset_budget(static_cast<std::int64_t>(out.u.size()), d.s);
        std::int64_t min_common = -1;
        bool sound = true;
        detail::for_each_subset(static_cast<std::int64_t>(out.u.size()), d.s, [&](const std::vector<std::int64_t>& idx) {
            std::vector<std::int64_t> subset;
            for (auto i : idx) subset.push_back(out.u[static_cast<std::size_t>(i)]);
            const std::int64_t cn = detail::common_neighbors(g, subset);
            if (cn < d.m) sound = false;
            if (min_common < 0 || cn < min_common) min_common = cn;
        });
        if (!sound) throw std::logic_error("drc: deletion pass left a bad subset");
        out.min_common = min_common;
        return out;
    }
    return std::nullopt;
}

struct drc_expectation {
    rational exact;   // sum over V1 of (deg/N2)^t
    rational jensen;  // p^t * N1
    rational density; // edges / (N1*N2)
    double mc_x_minus_y = 0;
    int samples = 0;
    bool jensen_holds = false;
};

inline drc_expectation drc_expectation_report(const bipartite_graph& g, const drc_params& d, int samples,
                                              rng& gen) {
    drc_check_preconditions(g, d);
    drc_expectation rep;
    rep.density = rational(g.edge_count()) / (rational(g.n1) * g.n2);
    rep.jensen = pow_rational(d.p, d.t) * d.n1;
    rep.exact = 0;
    for (std::int64_t v = 0; v < g.n1; ++v) rep.exact += pow_rational(rational(g.degree(v), g.n2), d.t);
    rep.jensen_holds = rep.density < d.p || rep.exact >= rep.jensen;

    kahan_sum acc;
    for (int it = 0; it < samples; ++it) {
        std::vector<std::int64_t> sample;
        for (std::int64_t i = 0; i < d.t; ++i)
            sample.push_back(static_cast<std::int64_t>(gen.below(static_cast<std::uint64_t>(g.n2))));
        std::vector<std::int64_t> w;
        for (std::int64_t v = 0; v < g.n1; ++v) {
            bool all = true;
            for (auto j : sample)
                if (!g.adj(v, j)) {
                    all = false;
                    break;
                }
            if (all) w.push_back(v);
        }
        detail::check_subset_budget(static_cast<std::int64_t>(w.size()), d.s);
        std::int64_t bad = 0;
        detail::for_each_subset(static_cast<std::int64_t>(w.size()), d.s, [&](const std::vector<std::int64_t>& idx) {
            std::vector<std::int64_t> subset;
            for (auto i : idx) subset.push_back(w[static_cast<std::size_t>(i)]);
            if (detail::common_neighbors(g, subset) < d.m) ++bad;
        });
        acc.add(static_cast<double>(static_cast<std::int64_t>(w.size()) - bad));
    }
    rep.samples = samples;
    rep.mc_x_minus_y = samples > 0 ? acc.value() / samples : 0.0;
    return rep;
}

} // namespace ramsey
