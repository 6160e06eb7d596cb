#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramsey/clique_engine.hpp"
#include "ramsey/core.hpp"

namespace ramsey {

// r(s,t) <= C(s+t-2, s-1)
inline bigint erdos_szekeres_bound(std::int64_t s, std::int64_t t) {
    if (s < 2 || t < 2) throw std::domain_error("erdos_szekeres_bound: s,t >= 2 required");
    return binomial(s + t - 2, s - 1);
}

// red weight r_v and blue weight b_v per vertex, plus the scale c
struct weight_pair {
    vertex lo = 1; // label of index 0
    std::vector<double> r;
    std::vector<double> b;
    double c = 1.0;
};

// balance: whichever weight is smaller, the other must reach c*ln(4c/smaller)
inline std::optional<vertex> check_balance(const weight_pair& w) {
    if (w.c <= 0) throw std::domain_error("weight_pair: c > 0 required");
    if (w.r.size() != w.b.size()) throw std::domain_error("weight_pair: r/b size mismatch");
    for (std::size_t i = 0; i < w.r.size(); ++i) {
        const double rv = w.r[i], bv = w.b[i];
        if (rv <= 0 || bv <= 0) return w.lo + static_cast<vertex>(i);
        if (rv <= bv && bv < w.c * std::log(4 * w.c / rv) - 1e-12) return w.lo + static_cast<vertex>(i);
        if (bv <= rv && rv < w.c * std::log(4 * w.c / bv) - 1e-12) return w.lo + static_cast<vertex>(i);
    }
    return std::nullopt;
}

// raise the larger weight where needed so the balance invariant holds
inline void balance_inflate(weight_pair& w) {
    for (std::size_t i = 0; i < w.r.size(); ++i) {
        double& rv = w.r[i];
        double& bv = w.b[i];
        if (rv <= bv) bv = std::max(bv, w.c * std::log(4 * w.c / rv));
        else rv = std::max(rv, w.c * std::log(4 * w.c / bv));
    }
}

struct wr_result {
    clique red_clique;
    clique blue_clique;
    double total = 0;
    std::uint64_t nodes = 0;
};

struct es_report {
    double red_threshold = 0;  // a * ln n
    double blue_threshold = 0; // e^(1/(4a)) * ln n
    clique red_witness;
    clique blue_witness;
    bool red_holds = false;
    bool blue_holds = false;
    bool holds = false;
};

// Lemma check: a red clique of order a*ln(n) or a blue clique of order
// e^(1/(4a))*ln(n) must exist
inline es_report check_lemma_es(const edge_coloring& c, double a, search_budget budget = {}) {
    if (c.q != 2) throw std::domain_error("check_lemma_es: 2-coloring required");
    if (!(a > 0 && a <= 0.25)) throw std::domain_error("check_lemma_es: a in (0, 1/4] required");
    const double n = static_cast<double>(c.span.size());
    es_report rep;
    rep.red_threshold = a * std::log(n);
    rep.blue_threshold = std::exp(1.0 / (4 * a)) * std::log(n);
    auto rr = max_mono_clique(c, red, budget);
    auto rb = max_mono_clique(c, blue, budget);
    if (!rr.proved || !rb.proved) throw std::runtime_error("check_lemma_es: search budget exhausted");
    rep.red_witness = rr.best;
    rep.blue_witness = rb.best;
    rep.red_holds = static_cast<double>(rr.best.vertices.size()) >= rep.red_threshold - 1e-12;
    rep.blue_holds = static_cast<double>(rb.best.vertices.size()) >= rep.blue_threshold - 1e-12;
    rep.holds = rep.red_holds || rep.blue_holds;
    return rep;
}

namespace detail {

struct wr_searcher {
    const edge_coloring& c;
    const weight_pair& w;
    std::uint64_t nodes = 0;

    double rw(vertex v) const { return w.r[static_cast<std::size_t>(v - w.lo)]; }
    double bw(vertex v) const { return w.b[static_cast<std::size_t>(v - w.lo)]; }

    double set_weight(const std::vector<vertex>& s, bool use_red) const {
        kahan_sum k;
        for (auto v : s) k.add(use_red ? rw(v) : bw(v));
        return k.value();
    }

    // returns (red clique K, blue clique L) maximizing r(K) + b(L) along the
    // proof's candidate structure
    std::pair<std::vector<vertex>, std::vector<vertex>> solve(const std::vector<vertex>& s) {
        ++nodes;
        if (s.empty()) return {{}, {}};
        const vertex v = s.front();
        std::vector<vertex> reds, blues;
        for (std::size_t i = 1; i < s.size(); ++i)
            (c.color(v, s[i]) == red ? reds : blues).push_back(s[i]);
        auto [k1, l1] = solve(reds);
        auto [k2, l2] = solve(blues);

        std::vector<std::pair<std::vector<vertex>, std::vector<vertex>>> cands;
        std::vector<vertex> k1v = {v};
        k1v.insert(k1v.end(), k1.begin(), k1.end());
        cands.emplace_back(std::move(k1v), l1);
        std::vector<vertex> l2v = {v};
        l2v.insert(l2v.end(), l2.begin(), l2.end());
        cands.emplace_back(k2, std::move(l2v));
        cands.emplace_back(std::vector<vertex>{v}, std::vector<vertex>{});
        cands.emplace_back(std::vector<vertex>{}, std::vector<vertex>{v});

        std::size_t best = 0;
        double best_total = -1;
        for (std::size_t i = 0; i < cands.size(); ++i) {
            const double total = set_weight(cands[i].first, true) + set_weight(cands[i].second, false);
            if (total > best_total + 1e-12) {
                best_total = total;
                best = i;
            }
        }
        return cands[best];
    }
};

} // namespace detail

inline wr_result weighted_ramsey_solve(const edge_coloring& c, const weight_pair& w) {
    if (c.q != 2) throw std::domain_error("weighted_ramsey_solve: 2-coloring required");
    if (w.lo != c.span.lo || w.r.size() != static_cast<std::size_t>(c.span.size()))
        throw std::domain_error("weighted_ramsey_solve: one weight pair per vertex required");
    if (auto bad = check_balance(w))
        throw std::domain_error("weighted_ramsey_solve: balance violated at vertex " + std::to_string(*bad));
    std::vector<vertex> all;
    for (vertex v = c.span.lo; v <= c.span.hi; ++v) all.push_back(v);
    detail::wr_searcher s{c, w};
    auto [k, l] = s.solve(all);
    std::sort(k.begin(), k.end());
    std::sort(l.begin(), l.end());
    wr_result out;
    out.red_clique.vertices = k;
    out.red_clique.color = red;
    out.red_clique.weight = s.set_weight(k, true);
    out.blue_clique.vertices = l;
    out.blue_clique.color = blue;
    out.blue_clique.weight = s.set_weight(l, false);
    out.total = *out.red_clique.weight + *out.blue_clique.weight;
    out.nodes = s.nodes;
    return out;
}

} // namespace ramsey
