// Acceptance gate: ten pass/fail checks covering the exactly-checkable claims.
// Each criterion prints one line; the exit code is the number of failures.
// Where a criterion demands cross-checking, the reference quantities are
// recomputed here from scratch rather than through the library's own path.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ramsey/cascade.hpp"
#include "ramsey/clique_engine.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/core.hpp"
#include "ramsey/drc.hpp"
#include "ramsey/numeric.hpp"
#include "ramsey/ordertype.hpp"
#include "ramsey/rng.hpp"
#include "ramsey/weighted_ramsey.hpp"
#include "ramsey/weights.hpp"

using namespace ramsey;

namespace {

struct outcome {
    bool ok = true;
    std::string detail;
};

std::ostringstream& fail(outcome& out, std::ostringstream& oss) {
    out.ok = false;
    return oss;
}

// ---------------------------------------------------------------------------
// 1. parity-log coloring on [1, 4^(k-1)] has no convex mono clique of order
//    k+1 (k = 2..5), proven by exhaustion; square-of-path variant for k = 2..4.

outcome criterion_1() {
    outcome out;
    std::ostringstream oss;
    std::uint64_t nodes = 0;
    const search_budget budget{1'000'000'000ull, 0};
    for (int k = 2; k <= 5; ++k) {
        vertex n = 1;
        for (int i = 1; i < k; ++i) n *= 4;
        const edge_coloring c = parity_log_coloring(n);
        for (int col = 0; col < 2; ++col) {
            const find_result r = find_convex_clique(c, col, k + 1, budget);
            nodes += r.nodes;
            if (r.witness || !r.exhausted)
                fail(out, oss) << " convex k=" << k << " color=" << col
                               << (r.witness ? " found a witness" : " not exhausted");
        }
    }
    for (int k = 2; k <= 4; ++k) {
        vertex n = 1;
        for (int i = 1; i < k; ++i) n *= 4;
        const edge_coloring c = parity_log_coloring(n);
        for (int col = 0; col < 2; ++col) {
            const find_result r = find_square_path_convex(c, col, k + 1, budget);
            nodes += r.nodes;
            if (r.witness || !r.exhausted)
                fail(out, oss) << " square-path k=" << k << " color=" << col
                               << (r.witness ? " found a witness" : " not exhausted");
        }
    }
    if (out.ok) oss << "orders 3..6 absent on [1,4^(k-1)], exhausted, " << nodes << " nodes";
    out.detail = oss.str();
    return out;
}

// ---------------------------------------------------------------------------
// 2. on [1,30], every mono set of size 3..6 of the difference-comparison
//    triple coloring has monotone consecutive differences.

outcome criterion_2() {
    outcome out;
    std::ostringstream oss;
    const monotone_diff_report rep = verify_monotone_diff_counterexample(30, 6);
    if (rep.violations != 0 || rep.sets_checked < 1000)
        fail(out, oss) << rep.violations << " violations over " << rep.sets_checked << " sets";
    else
        oss << rep.sets_checked << " mono sets of size 3..6, zero violations";
    out.detail = oss.str();
    return out;
}

// ---------------------------------------------------------------------------
// 3. on [1,40], no mono 7-clique of the parity-log coloring matches the
//    second-difference pattern; the pattern predicate itself is nontrivial.

outcome criterion_3() {
    outcome out;
    std::ostringstream oss;
    if (!is_second_diff_pattern({1, 8, 9, 14, 19, 21, 28}))
        fail(out, oss) << " pattern predicate rejects a matching tuple;";
    const second_diff_report rep = verify_second_diff_counterexample(40);
    if (rep.matches != 0 || rep.cliques_checked == 0)
        fail(out, oss) << " " << rep.matches << " matches over " << rep.cliques_checked
                       << " mono 7-cliques";
    else
        oss << rep.cliques_checked << " mono 7-cliques scanned, zero pattern matches";
    out.detail = oss.str();
    return out;
}

// ---------------------------------------------------------------------------
// 4. block triple colorings: no mono clique puts two vertices in each of two
//    blocks, across >= 3 configurations (total <= 24) and >= 5 seeds each.

outcome criterion_4() {
    outcome out;
    std::ostringstream oss;
    const std::vector<std::vector<std::int64_t>> configs = {{3, 8, 13}, {4, 20}, {2, 5, 17}};
    std::int64_t total_sets = 0;
    for (const auto& sizes : configs) {
        std::int64_t total = 0;
        for (auto s : sizes) total += s;
        if (total > 24) {
            fail(out, oss) << " config exceeds 24 vertices;";
            continue;
        }
        block_spec spec;
        spec.sizes = sizes;
        const block_report rep = verify_block_structure(spec, 6, 5);
        total_sets += rep.sets_checked;
        if (rep.violations != 0 || rep.seeds_run != 5)
            fail(out, oss) << " sizes{" << sizes[0] << ",..} " << rep.violations << " violations;";
    }
    if (out.ok) oss << configs.size() << " configs x 5 seeds, " << total_sets
                    << " mono sets, zero cross-block crowds";
    out.detail = oss.str();
    return out;
}

// ---------------------------------------------------------------------------
// 5. weighted Ramsey solver: over >= 500 seeded random 2-colorings with
//    balanced weights, verified cliques totalling >= c*ln(n) - 1e-9; for
//    n <= 14 the total never beats the exact optimum.

outcome criterion_5() {
    outcome out;
    std::ostringstream oss;
    rng gen(0xACCE5501ull);
    int trials = 0, small_checked = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const vertex n = trial < 80 ? 2 + static_cast<vertex>(gen.below(13))
                                    : 2 + static_cast<vertex>(gen.below(63));
        edge_coloring c(vertex_interval(1, n), 2);
        for (vertex u = 1; u <= n; ++u)
            for (vertex v = u + 1; v <= n; ++v) c.set_color(u, v, gen.coin() ? 1 : 0);

        weight_pair w;
        w.lo = 1;
        const double scales[] = {0.25, 0.5, 1.0, 1.37};
        w.c = scales[gen.below(4)];
        for (vertex v = 1; v <= n; ++v) {
            w.r.push_back(0.3 + 2.2 * gen.unit01());
            w.b.push_back(0.3 + 2.2 * gen.unit01());
        }
        balance_inflate(w);
        if (check_balance(w)) {
            fail(out, oss) << " trial " << trial << ": inflate left an imbalance;";
            continue;
        }

        const wr_result res = weighted_ramsey_solve(c, w);
        const auto rc = is_monochromatic(c, res.red_clique.vertices);
        const auto bc = is_monochromatic(c, res.blue_clique.vertices);
        if (!rc || (*rc != red && *rc != any_color) || !bc || (*bc != blue && *bc != any_color)) {
            fail(out, oss) << " trial " << trial << ": clique not monochromatic;";
            continue;
        }
        kahan_sum total;
        for (auto v : res.red_clique.vertices) total.add(w.r[static_cast<std::size_t>(v - 1)]);
        for (auto v : res.blue_clique.vertices) total.add(w.b[static_cast<std::size_t>(v - 1)]);
        if (std::abs(total.value() - res.total) > 1e-9) {
            fail(out, oss) << " trial " << trial << ": reported total mismatch;";
            continue;
        }
        const double floor_value = w.c * std::log(static_cast<double>(n));
        if (res.total < floor_value - 1e-9) {
            fail(out, oss) << " trial " << trial << ": total " << res.total << " below floor "
                           << floor_value << ";";
            continue;
        }
        if (n <= 14) {
            const search_result opt_r = max_weight_mono_clique(c, red, w.r);
            const search_result opt_b = max_weight_mono_clique(c, blue, w.b);
            if (!opt_r.proved || !opt_b.proved) {
                fail(out, oss) << " trial " << trial << ": optimum not proved;";
                continue;
            }
            const double optimum = opt_r.best.weight.value_or(0) + opt_b.best.weight.value_or(0);
            if (res.total > optimum + 1e-9) {
                fail(out, oss) << " trial " << trial << ": total beats the exact optimum;";
                continue;
            }
            ++small_checked;
        }
        ++trials;
    }
    if (out.ok) oss << trials << " trials met the c*ln(n) floor; " << small_checked
                    << " small trials bounded by the exact optimum";
    out.detail = oss.str();
    return out;
}

// ---------------------------------------------------------------------------
// 6. dependent random choice: feasibility matches a from-scratch rational
//    recomputation; extracted sets verify exhaustively; Jensen floor holds.

bigint binom_ref(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    std::vector<bigint> row(static_cast<std::size_t>(n) + 1, 0);
    row[0] = 1;
    for (std::int64_t i = 1; i <= n; ++i)
        for (std::int64_t j = std::min(i, k); j >= 1; --j) row[j] += row[j - 1];
    return row[static_cast<std::size_t>(k)];
}

rational pow_ref(const rational& base, std::int64_t e) {
    rational r = 1;
    for (std::int64_t i = 0; i < e; ++i) r *= base;
    return r;
}

outcome criterion_6() {
    outcome out;
    std::ostringstream oss;
    rng gen(0xACCE5506ull);

    int matched = 0;
    for (int trial = 0; trial < 100; ++trial) {
        drc_params d;
        d.n1 = 1 + static_cast<std::int64_t>(gen.below(80));
        d.n2 = 1 + static_cast<std::int64_t>(gen.below(80));
        d.s = 1 + static_cast<std::int64_t>(gen.below(4));
        d.t = 1 + static_cast<std::int64_t>(gen.below(5));
        d.m = static_cast<std::int64_t>(gen.below(static_cast<std::uint64_t>(d.n2) + 1));
        d.p = rational(1 + static_cast<std::int64_t>(gen.below(16)), 16);
        const bool lib = drc_feasible(d);
        const rational lhs = rational(binom_ref(d.n1, d.s)) * pow_ref(rational(d.m, d.n2), d.t);
        const rational rhs = pow_ref(d.p, d.t) * d.n1 / 2;
        if (lib != (lhs <= rhs))
            fail(out, oss) << " feasibility mismatch at trial " << trial << ";";
        else
            ++matched;
    }

    int extracts = 0;
    for (int trial = 0; trial < 500 && extracts < 30; ++trial) {
        const std::int64_t n1 = 8 + static_cast<std::int64_t>(gen.below(33));
        const std::int64_t n2 = 8 + static_cast<std::int64_t>(gen.below(33));
        bipartite_graph g(n1, n2);
        std::int64_t edges = 0;
        for (std::int64_t i = 0; i < n1; ++i)
            for (std::int64_t j = 0; j < n2; ++j)
                if (gen.below(100) < 85) {
                    g.add_edge(i, j);
                    ++edges;
                }
        drc_params d;
        d.n1 = n1;
        d.n2 = n2;
        d.s = 2;
        d.t = 1 + static_cast<std::int64_t>(gen.below(2));
        d.m = 1 + static_cast<std::int64_t>(gen.below(2));
        d.p = rational(edges, n1 * n2) * rational(3, 4);
        if (!(d.p > 0) || !drc_feasible(d)) continue;
        rng extract_gen(gen.next());
        const auto res = drc_extract(g, d, extract_gen);
        if (!res) continue;
        if (rational(static_cast<std::int64_t>(res->u.size())) < res->threshold) {
            fail(out, oss) << " extract " << extracts << ": |U| below threshold;";
            continue;
        }
        // exhaustive s-subset verification straight off the adjacency rows
        bool all_good = true;
        const auto& u = res->u;
        for (std::size_t a = 0; a < u.size() && all_good; ++a)
            for (std::size_t b = a + 1; b < u.size() && all_good; ++b) {
                std::int64_t common = 0;
                for (std::int64_t j = 0; j < n2; ++j)
                    if (g.adj(u[a], j) && g.adj(u[b], j)) ++common;
                if (common < d.m) all_good = false;
            }
        if (!all_good)
            fail(out, oss) << " extract " << extracts << ": an s-subset misses m;";
        else
            ++extracts;
    }
    if (extracts < 30) fail(out, oss) << " only " << extracts << " successful extracts;";

    int jensen_checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::int64_t n1 = 1 + static_cast<std::int64_t>(gen.below(64));
        const std::int64_t n2 = 1 + static_cast<std::int64_t>(gen.below(64));
        bipartite_graph g(n1, n2);
        std::int64_t edges = 0;
        const std::uint64_t prob = 20 + gen.below(76);
        for (std::int64_t i = 0; i < n1; ++i)
            for (std::int64_t j = 0; j < n2; ++j)
                if (gen.below(100) < prob) {
                    g.add_edge(i, j);
                    ++edges;
                }
        const rational dens(edges, n1 * n2);
        const std::int64_t t = 1 + static_cast<std::int64_t>(gen.below(4));
        const rational p = dens * rational(1 + static_cast<std::int64_t>(gen.below(16)), 16);
        if (!(dens >= p) || !(p > 0)) continue;
        rational exact = 0;
        for (std::int64_t v = 0; v < n1; ++v) {
            std::int64_t deg = 0;
            for (std::int64_t j = 0; j < n2; ++j)
                if (g.adj(v, j)) ++deg;
            exact += pow_ref(rational(deg, n2), t);
        }
        if (exact < pow_ref(p, t) * n1)
            fail(out, oss) << " Jensen floor fails at trial " << trial << ";";
        else
            ++jensen_checked;
    }
    if (jensen_checked < 50) fail(out, oss) << " only " << jensen_checked << " Jensen cases;";

    if (out.ok) oss << matched << " feasibility matches, " << extracts << " verified extracts, "
                    << jensen_checked << " Jensen floors";
    out.detail = oss.str();
    return out;
}

// ---------------------------------------------------------------------------
// 7. separated pairs and shrink windows: exact rational guarantees over 10^3
//    random instances each.

outcome criterion_7() {
    outcome out;
    std::ostringstream oss;
    rng gen(0xACCE5507ull);
    int sep_ok = 0, shrink_ok = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const vertex lo = 1 + static_cast<vertex>(gen.below(50));
        const std::int64_t len = 12 + static_cast<std::int64_t>(gen.below(89));
        const vertex_interval iv(lo, lo + len - 1);
        std::vector<vertex> s;
        const std::uint64_t prob = 25 + gen.below(56);
        for (vertex v = iv.lo; v <= iv.hi; ++v)
            if (gen.below(100) < prob) s.push_back(v);
        while (s.size() < 6) s = {lo, lo + 1, lo + 3, lo + 5, lo + 8, lo + 11};

        try {
            const separated_pair sp = find_separated_pair(s, iv);
            const rational half_d = density(s, iv) / 2;
            const vertex gap = sp.t2.front() - sp.t1.back();
            const bool separated = gap > sp.t1.back() - sp.t1.front() &&
                                   gap > sp.t2.back() - sp.t2.front();
            const bool dense = density(sp.t1, sp.i1) >= half_d && density(sp.t2, sp.i2) >= half_d;
            const bool wide = sp.i1.size() * 12 >= static_cast<std::int64_t>(s.size()) &&
                              sp.i2.size() * 12 >= static_cast<std::int64_t>(s.size());
            if (separated && dense && wide)
                ++sep_ok;
            else
                fail(out, oss) << " sep trial " << trial << " violates a guarantee;";
        } catch (const std::exception& e) {
            fail(out, oss) << " sep trial " << trial << " threw: " << e.what() << ";";
        }

        try {
            const std::int64_t r = 1 + static_cast<std::int64_t>(gen.below(
                                           static_cast<std::uint64_t>(iv.size())));
            const auto [sub, window] = shrink(s, iv, r);
            bool contained = window.lo >= iv.lo && window.hi <= iv.hi && window.size() <= r;
            std::vector<vertex> expect;
            for (vertex v : s)
                if (window.contains(v)) expect.push_back(v);
            if (contained && sub == expect && density(sub, window) >= density(s, iv) / 2)
                ++shrink_ok;
            else
                fail(out, oss) << " shrink trial " << trial << " violates the guarantee;";
        } catch (const std::exception& e) {
            fail(out, oss) << " shrink trial " << trial << " threw: " << e.what() << ";";
        }
    }
    if (out.ok) oss << sep_ok << " separated pairs and " << shrink_ok
                    << " shrink windows met every exact bound";
    out.detail = oss.str();
    return out;
}

// ---------------------------------------------------------------------------
// 8. parameter cascade closed forms for 2 <= k <= 6, 2 <= q <= 5, by exact
//    integer-exponent equality, plus the log-space chain for Delta.

bool atom_is(const atom_value& av, const rational& coef, const bigint& a, const bigint& b) {
    return av.coef == coef && av.a == a && av.b == b;
}

outcome criterion_8() {
    outcome out;
    std::ostringstream oss;
    int checked = 0;
    for (int k = 2; k <= 6; ++k)
        for (int q = 2; q <= 5; ++q) {
            const cascade_params cp = make_cascade_params(k, q, bigint(1'000'000'000), rational(1, 2));
            bool good = true;
            bigint e_delta_ref = 0;
            for (int i = 0; i < q; ++i) {
                const auto idx = static_cast<std::size_t>(q - i);
                const bigint dexp = 2 * k * pow_bigint(2 * k + 1, i);
                good &= atom_is(cp.delta[idx], 1, dexp, 0);
                good &= atom_is(cp.lambda[idx], 1, dexp, 0);
                good &= i == 0 ? atom_is(cp.alpha[idx], rational(1, 2), 0, 0)
                               : atom_is(cp.alpha[idx], rational(1, 2), pow_bigint(2 * k + 1, i) - 1, 0);
                good &= atom_is(cp.beta[idx], rational(1, 12), 0, pow_bigint(k + 2, i) - 1);
                good &= atom_is(cp.eta[idx], 1, 0, pow_bigint(k + 2, i));
                good &= atom_is(cp.gamma[idx], 1, 0, (k + 1) * pow_bigint(k + 2, i));
                e_delta_ref += 2 * k * pow_bigint(4 * k + 2, i);
            }
            good &= atom_is(cp.big_gamma[static_cast<std::size_t>(q)], 1, 0,
                            pow_bigint(k + 2, q) - 1);
            good &= cp.e_delta == e_delta_ref;
            // Delta >= (eps/8)^((4k+2)^q): with a base below one this is an
            // exponent comparison in log space
            good &= cp.e_delta <= pow_bigint(4 * k + 2, q);
            good &= cp.id_alpha && cp.id_delta && cp.id_beta && cp.id_eta && cp.id_gamma &&
                    cp.id_big_gamma && cp.id_big_delta_product && cp.id_lambda_eq_delta;
            if (good)
                ++checked;
            else
                fail(out, oss) << " closed form mismatch at k=" << k << " q=" << q << ";";
        }
    if (out.ok) oss << checked << " (k,q) pairs match the closed forms; Delta chain exact";
    out.detail = oss.str();
    return out;
}

// ---------------------------------------------------------------------------
// 9. order-type Ramsey desk values, with witnesses agreeing across two
//    independent enumeration orders.

bool witness_avoids(const edge_coloring& c, const std::vector<int>& pi) {
    for (int col = 0; col < c.q; ++col) {
        const find_result r = find_type_clique(c, col, pi, {100'000'000ull, 0});
        if (r.witness || !r.exhausted) return false;
    }
    return true;
}

outcome criterion_9() {
    outcome out;
    std::ostringstream oss;
    for (int q = 1; q <= 3; ++q) {
        const rpi_result r = compute_R_pi(2, q, {1}, 4);
        if (!r.value || *r.value != 2) fail(out, oss) << " R_pi(2;" << q << ") != 2;";
    }
    for (const std::vector<int>& pi : {std::vector<int>{1, 2}, std::vector<int>{2, 1}}) {
        const rpi_result r = compute_R_pi(3, 1, pi, 6);
        if (!r.value || *r.value != 4) {
            fail(out, oss) << " R_pi(3;1) != 4;";
            continue;
        }
        if (!r.witness || !witness_avoids(*r.witness, pi))
            fail(out, oss) << " R_pi(3;1) witness fails to avoid;";
    }
    int agreed = 0;
    for (const std::vector<int>& pi : {std::vector<int>{1, 2}, std::vector<int>{2, 1}}) {
        for (std::int64_t n = 2; n <= 8; ++n) {
            const rpi_result a = compute_R_pi(3, 2, pi, n, {4'000'000'000ull, 0}, 0);
            const rpi_result b = compute_R_pi(3, 2, pi, n, {4'000'000'000ull, 0}, 1);
            if (a.inconclusive || b.inconclusive) {
                fail(out, oss) << " n=" << n << " inconclusive;";
                continue;
            }
            if (a.value != b.value || a.lower_bound != b.lower_bound) {
                fail(out, oss) << " n=" << n << " orders disagree;";
                continue;
            }
            // at desk scale every n <= 8 admits an avoiding coloring; both
            // orders must certify that with a valid witness
            if (a.value || !a.lower_bound || *a.lower_bound != n || !a.witness || !b.witness ||
                !witness_avoids(*a.witness, pi) || !witness_avoids(*b.witness, pi)) {
                fail(out, oss) << " n=" << n << " certification invalid;";
                continue;
            }
            ++agreed;
        }
    }
    if (out.ok) oss << "R_pi(2;q)=2, R_pi(3;1)=4 both orders; " << agreed
                    << " exact k=3 q=2 decisions agree across orders";
    out.detail = oss.str();
    return out;
}

// ---------------------------------------------------------------------------
// 10. f(n) oracle values, monotonicity, traversal independence, and the
//     bounded Rodl survey.

outcome criterion_10() {
    outcome out;
    std::ostringstream oss;
    const weight_spec w1 = make_w1();
    const f_exact_result f2 = f_exact(2, w1, 2);
    if (f2.value != 1.0) fail(out, oss) << " f(2) != 1;";
    const f_exact_result f3 = f_exact(3, w1, 2);
    if (std::abs(f3.value - (1.0 + 1.0 / std::log2(3.0))) > 1e-15)
        fail(out, oss) << " f(3) != 1 + 1/log2(3);";
    double prev = 0;
    for (vertex n = 2; n <= 7; ++n) {
        const f_exact_result a = f_exact(n, w1, 2, 2'000'000, 0);
        const f_exact_result b = f_exact(n, w1, 2, 2'000'000, 1);
        if (a.value != b.value || a.colorings != b.colorings)
            fail(out, oss) << " f(" << n << ") differs across traversal orders;";
        if (a.value < prev) fail(out, oss) << " f(" << n << ") decreased;";
        prev = a.value;
    }
    double worst = 0;
    bool small_proved = true;
    for (vertex n : {vertex(16), vertex(256), vertex(4096), vertex(65536)}) {
        rodl_spec spec;
        spec.n = n;
        const rodl_weight_summary rep = rodl_weight_report(spec, 256, 32, {});
        worst = std::max(worst, rep.max_weight_found);
        if (rep.max_weight_found > 6.0)
            fail(out, oss) << " Rodl weight " << rep.max_weight_found << " above 6 at n=" << n << ";";
        if (n <= 256 && !rep.all_proved) small_proved = false;
        if (!rep.green_weight_exact)
            fail(out, oss) << " green weight not exact at n=" << n << ";";
    }
    if (!small_proved) fail(out, oss) << " small Rodl surveys not fully proved;";
    if (out.ok) oss << "forced values exact, f nondecreasing to n=7, orders agree; Rodl max "
                    << worst << " <= 6 (exact through n=256, best-found beyond)";
    out.detail = oss.str();
    return out;
}

} // namespace

int main() {
    struct entry {
        int id;
        const char* name;
        outcome (*run)();
        double limit_s; // 0 = no stated limit
    };
    const entry entries[] = {
        {1, "convex cliques absent in parity-log intervals", criterion_1, 300},
        {2, "monotone consecutive differences on [1,30]", criterion_2, 0},
        {3, "second-difference pattern absent on [1,40]", criterion_3, 600},
        {4, "block colorings crowd at most one block", criterion_4, 0},
        {5, "weighted Ramsey solver floor and optimality", criterion_5, 0},
        {6, "dependent random choice exact guarantees", criterion_6, 0},
        {7, "separated pair and shrink exact guarantees", criterion_7, 0},
        {8, "parameter cascade closed forms", criterion_8, 0},
        {9, "order-type Ramsey desk values", criterion_9, 0},
        {10, "f(n) oracle and bounded Rodl survey", criterion_10, 0},
    };
    int failures = 0;
    for (const auto& e : entries) {
        const auto t0 = std::chrono::steady_clock::now();
        outcome out = e.run();
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (e.limit_s > 0 && secs > e.limit_s) {
            out.ok = false;
            out.detail += " [exceeded " + std::to_string(e.limit_s) + "s limit]";
        }
        std::printf("%s %2d  %-48s %7.2fs  %s\n", out.ok ? "PASS" : "FAIL", e.id, e.name, secs,
                    out.detail.c_str());
        if (!out.ok) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all 10 criteria passed\n");
    return failures;
}
