#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <vector>

#include "ramsey/drc.hpp"
#include "ramsey/io.hpp"
#include "ramsey/rng.hpp"

using namespace ramsey;

namespace {

bipartite_graph complete_bipartite(std::int64_t n1, std::int64_t n2) {
    bipartite_graph g(n1, n2);
    for (std::int64_t i = 0; i < n1; ++i)
        for (std::int64_t j = 0; j < n2; ++j) g.add_edge(i, j);
    return g;
}

bipartite_graph random_bipartite(std::int64_t n1, std::int64_t n2, double density, std::uint64_t seed) {
    bipartite_graph g(n1, n2);
    rng gen(seed);
    for (std::int64_t i = 0; i < n1; ++i)
        for (std::int64_t j = 0; j < n2; ++j)
            if (gen.unit01() < density) g.add_edge(i, j);
    return g;
}

} // namespace

TEST_CASE("feasibility is exact rational arithmetic") {
    drc_params d{rational(1, 2), 2, 5, 2, 100, 100};
    CHECK(drc_lhs(d) == rational(4950) * pow_rational(rational(1, 50), 5));
    CHECK(drc_rhs(d) == rational(25, 16));
    CHECK(drc_feasible(d));

    // m = N2 makes the left side at least C(N1,s)
    drc_params full{rational(1, 2), 2, 3, 10, 10, 10};
    CHECK(drc_lhs(full) == rational(45));
    CHECK(drc_rhs(full) == rational(10, 16));
    CHECK(!drc_feasible(full));

    drc_params degenerate{rational(1), 1, 1, 0, 4, 7};
    CHECK(drc_lhs(degenerate) == 0);
    CHECK(drc_feasible(degenerate));

    CHECK_THROWS_AS(drc_feasible(drc_params{rational(0), 1, 1, 1, 4, 4}), std::domain_error);
    CHECK_THROWS_AS(drc_feasible(drc_params{rational(3, 2), 1, 1, 1, 4, 4}), std::domain_error);
    CHECK_THROWS_AS(drc_feasible(drc_params{rational(1, 2), 0, 1, 1, 4, 4}), std::domain_error);
    CHECK_THROWS_AS(drc_feasible(drc_params{rational(1, 2), 1, 1, -1, 4, 4}), std::domain_error);
}

TEST_CASE("bipartite json round trip") {
    auto g = random_bipartite(9, 13, 0.4, 5);
    auto j = bipartite_to_json(g);
    CHECK(j.at("n1") == 9);
    CHECK(j.at("n2") == 13);
    CHECK(j.at("rows").size() == 9);
    auto back = bipartite_from_json(j);
    CHECK(back.rows == g.rows);
    CHECK(canonical_json(bipartite_to_json(back)) == canonical_json(j));

    auto bad = j;
    bad["rows"][0] = "zz";
    CHECK_THROWS_AS(bipartite_from_json(bad), std::domain_error);
    auto wrong = j;
    wrong["rows"][0] = std::string(10, '0');
    CHECK_THROWS_AS(bipartite_from_json(wrong), std::domain_error);
    auto high = j;
    high["rows"][2] = "ffff"; // bit 13..15 set past n2
    CHECK_THROWS_AS(bipartite_from_json(high), std::domain_error);
}

TEST_CASE("extraction on a complete bipartite graph") {
    auto g = complete_bipartite(8, 8);
    drc_params d{rational(1), 2, 2, 2, 8, 8};
    REQUIRE(drc_feasible(d));
    rng gen(3);
    auto res = drc_extract(g, d, gen, 5);
    REQUIRE(res.has_value());
    CHECK(res->u == std::vector<std::int64_t>{0, 1, 2, 3, 4, 5, 6, 7});
    CHECK(res->w == res->u);
    CHECK(res->t_sample.size() == 2);
    CHECK(res->min_common == 8);
    CHECK(res->threshold == rational(4));
    CHECK(res->attempts == 1);
}

TEST_CASE("density precondition") {
    bipartite_graph empty(4, 4);
    drc_params d{rational(1, 2), 2, 2, 1, 4, 4};
    rng gen(1);
    CHECK_THROWS_AS(drc_extract(empty, d, gen, 3), std::domain_error);

    auto g = complete_bipartite(4, 4);
    drc_params mismatched{rational(1, 2), 2, 2, 1, 5, 4};
    CHECK_THROWS_AS(drc_extract(g, mismatched, gen, 3), std::domain_error);
}

TEST_CASE("random graph extraction with certificate") {
    auto g = random_bipartite(64, 64, 0.6, 11);
    REQUIRE(rational(g.edge_count()) >= rational(1, 2) * 64 * 64);
    drc_params d{rational(1, 2), 2, 4, 4, 64, 64};
    REQUIRE(drc_feasible(d));
    rng gen(21);
    auto res = drc_extract(g, d, gen, 20);
    REQUIRE(res.has_value());
    CHECK(res->attempts <= 20);
    CHECK(rational(static_cast<std::int64_t>(res->u.size())) >= res->threshold);
    CHECK(res->min_common >= d.m);

    // certificate re-checked here, independently of the library pass
    for (std::size_t a = 0; a < res->u.size(); ++a)
        for (std::size_t b = a + 1; b < res->u.size(); ++b) {
            std::int64_t cn = 0;
            for (std::int64_t j = 0; j < 64; ++j)
                if (g.adj(res->u[a], j) && g.adj(res->u[b], j)) ++cn;
            REQUIRE(cn >= d.m);
        }

    // every u member came from w, and w is the exact common neighborhood
    for (auto v : res->u) CHECK(std::find(res->w.begin(), res->w.end(), v) != res->w.end());
    for (std::int64_t v = 0; v < 64; ++v) {
        bool all = true;
        for (auto j : res->t_sample) all = all && g.adj(v, j);
        const bool in_w = std::find(res->w.begin(), res->w.end(), v) != res->w.end();
        REQUIRE(in_w == all);
    }

    // reproducibility: same seed gives the identical extraction
    rng gen2(21);
    auto res2 = drc_extract(g, d, gen2, 20);
    REQUIRE(res2.has_value());
    CHECK(res2->t_sample == res->t_sample);
    CHECK(res2->w == res->w);
    CHECK(res2->u == res->u);
}

TEST_CASE("expectation report") {
    auto k88 = complete_bipartite(8, 8);
    drc_params d{rational(1), 2, 3, 2, 8, 8};
    rng gen(5);
    auto rep = drc_expectation_report(k88, d, 10, gen);
    CHECK(rep.exact == rational(8));
    CHECK(rep.jensen == rational(8));
    CHECK(rep.jensen_holds);
    CHECK(rep.density == rational(1));
    CHECK(rep.samples == 10);
    CHECK(rep.mc_x_minus_y == 8.0); // every sample has W = V1, no bad pairs

    // biregular: every left degree 4 out of 8, p = 1/2 gives Jensen equality
    bipartite_graph bireg(6, 8);
    for (std::int64_t i = 0; i < 6; ++i)
        for (std::int64_t j = 0; j < 4; ++j) bireg.add_edge(i, (i + j) % 8);
    drc_params bd{rational(1, 2), 2, 3, 1, 6, 8};
    REQUIRE(drc_feasible(bd));
    auto brep = drc_expectation_report(bireg, bd, 4, gen);
    CHECK(brep.exact == brep.jensen);
    CHECK(brep.jensen_holds);

    // random graphs at density above p keep the exact sum above p^t * N1
    for (std::uint64_t seed : {1u, 2u, 3u, 4u}) {
        auto g = random_bipartite(64, 64, 0.58, seed);
        if (rational(g.edge_count()) < rational(1, 2) * 64 * 64) continue;
        drc_params rd{rational(1, 2), 2, 4, 2, 64, 64};
        rng mc(seed);
        auto rrep = drc_expectation_report(g, rd, 8, mc);
        REQUIRE(rrep.exact >= rational(64) / 16);
        REQUIRE(rrep.jensen == rational(64) / 16);
        REQUIRE(rrep.jensen_holds);
    }
}
