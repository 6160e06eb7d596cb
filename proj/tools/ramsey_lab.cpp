// ramsey-lab: command line front end tying the generators, searches, solvers,
// and verifiers into reproducible certificate-emitting runs.
//
// Exit codes: 0 success (including "proved absent"), 2 precondition error,
// 3 budget-inconclusive, 64 usage error.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramsey/cascade.hpp"
#include "ramsey/clique_engine.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/core.hpp"
#include "ramsey/drc.hpp"
#include "ramsey/io.hpp"
#include "ramsey/numeric.hpp"
#include "ramsey/ordertype.hpp"
#include "ramsey/rng.hpp"
#include "ramsey/weighted_ramsey.hpp"
#include "ramsey/weights.hpp"

using nlohmann::json;
using namespace ramsey;

namespace {

constexpr const char* tool_version = "ramsey-lab 1.0.0";
constexpr const char* budget_env = "RAMSEY_LAB_BUDGET";

constexpr int exit_ok = 0;
constexpr int exit_precondition = 2;
constexpr int exit_inconclusive = 3;
constexpr int exit_usage = 64;

struct cli_failure : std::runtime_error {
    int code;
    cli_failure(int code_, const std::string& msg) : std::runtime_error(msg), code(code_) {}
};

struct run_ctx {
    std::string command_line;
    std::uint64_t seed = 0;
    int threads = 1;
    std::uint64_t budget = 10'000'000;
    bool require_proof = false;
    bool json_out = false;
    std::string out_path;
    json input_hashes = json::object();
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
};

// ---- parsing helpers -------------------------------------------------------------

std::vector<std::int64_t> parse_int_list(const std::string& text, const char* what) {
    std::vector<std::int64_t> out;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',') {
            if (cur.empty()) throw cli_failure(exit_precondition, std::string(what) + ": empty entry");
            try {
                out.push_back(std::stoll(cur));
            } catch (const std::exception&) {
                throw cli_failure(exit_precondition, std::string(what) + ": bad integer \"" + cur + "\"");
            }
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        }
    }
    if (out.empty()) throw cli_failure(exit_precondition, std::string(what) + ": empty list");
    return out;
}

// accepts "123", "1e9", and "2^40"
bigint parse_bigint(const std::string& text) {
    const auto bad = [&]() -> cli_failure {
        return cli_failure(exit_precondition, "bad integer \"" + text + "\"");
    };
    if (text.empty()) throw bad();
    const auto caret = text.find('^');
    if (caret != std::string::npos) {
        try {
            return pow_bigint(bigint(text.substr(0, caret)), bigint(text.substr(caret + 1)));
        } catch (const std::exception&) {
            throw bad();
        }
    }
    const auto e = text.find_first_of("eE");
    try {
        if (e == std::string::npos) return bigint(text);
        return bigint(text.substr(0, e)) * pow_bigint(10, bigint(text.substr(e + 1)));
    } catch (const std::exception&) {
        throw bad();
    }
}

// accepts "1/2", "0.5", and "2"
rational parse_rational(const std::string& text) {
    const auto bad = [&]() -> cli_failure {
        return cli_failure(exit_precondition, "bad rational \"" + text + "\"");
    };
    if (text.empty()) throw bad();
    try {
        const auto slash = text.find('/');
        if (slash != std::string::npos)
            return rational(bigint(text.substr(0, slash))) / rational(bigint(text.substr(slash + 1)));
        const auto dot = text.find('.');
        if (dot == std::string::npos) return rational(bigint(text));
        const std::string frac = text.substr(dot + 1);
        const std::string whole = text.substr(0, dot);
        rational r(bigint(whole.empty() || whole == "-" ? whole + "0" : whole));
        if (!frac.empty()) {
            rational f = rational(bigint(frac)) / rational(pow_bigint(10, static_cast<std::int64_t>(frac.size())));
            r += (text[0] == '-') ? -f : f;
        }
        return r;
    } catch (const cli_failure&) {
        throw;
    } catch (const std::exception&) {
        throw bad();
    }
}

std::string rational_str(const rational& r) { return r.str(); }

weight_spec parse_weight_spec(const std::string& name) {
    if (name == "w1") return make_w1();
    if (name == "w2") return make_ws(2);
    if (name.rfind("ws:", 0) == 0) return make_ws(std::stoi(name.substr(3)));
    if (name.rfind("wps:", 0) == 0) {
        const auto rest = name.substr(4);
        const auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw cli_failure(exit_precondition, "weight spec \"" + name + "\": expected wps:<s>:<eps>");
        return make_wps(std::stoi(rest.substr(0, colon)), std::stod(rest.substr(colon + 1)));
    }
    throw cli_failure(exit_precondition, "unknown weight spec \"" + name + "\" (w1, w2, ws:<s>, wps:<s>:<eps>)");
}

std::vector<int> parse_pi(const std::string& text) {
    std::vector<int> pi;
    for (auto v : parse_int_list(text, "--pi")) pi.push_back(static_cast<int>(v));
    return pi;
}

// ---- file loading with first-invalid-entry diagnostics ----------------------------

std::string load_bytes(run_ctx& ctx, const std::string& path) {
    std::string bytes;
    try {
        bytes = read_file(path);
    } catch (const std::exception& e) {
        throw cli_failure(exit_precondition, e.what());
    }
    ctx.input_hashes[path] = digest_string(bytes);
    return bytes;
}

bool looks_binary(const std::string& bytes) {
    return bytes.size() >= 4 && bytes.compare(0, 4, "RLC1") == 0;
}

json parse_json_file(const std::string& path, const std::string& bytes) {
    try {
        return json::parse(bytes);
    } catch (const json::parse_error& e) {
        throw cli_failure(exit_precondition, path + ": " + e.what());
    }
}

void check_color_entries(const std::string& path, const json& j, std::size_t expected, int q) {
    const auto& colors = j.at("colors");
    if (colors.size() != expected)
        throw cli_failure(exit_precondition, path + ": colors has " + std::to_string(colors.size()) +
                                                 " entries, expected " + std::to_string(expected));
    for (std::size_t i = 0; i < colors.size(); ++i) {
        const auto& e = colors[i];
        if (!e.is_number_unsigned() || e.get<std::uint64_t>() >= static_cast<std::uint64_t>(q))
            throw cli_failure(exit_precondition, path + ": colors[" + std::to_string(i) + "] = " +
                                                     e.dump() + " is not a color id below q=" +
                                                     std::to_string(q));
    }
}

edge_coloring load_edge_coloring(run_ctx& ctx, const std::string& path) {
    const std::string bytes = load_bytes(ctx, path);
    try {
        if (looks_binary(bytes))
            return edge_coloring_from_binary(std::vector<std::uint8_t>(bytes.begin(), bytes.end()));
        const json j = parse_json_file(path, bytes);
        if (j.value("kind", "") != "edge")
            throw cli_failure(exit_precondition, path + ": expected kind \"edge\"");
        edge_coloring c(vertex_interval(j.at("lo").get<vertex>(), j.at("hi").get<vertex>()),
                        j.at("q").get<int>());
        check_color_entries(path, j, c.colors.size(), c.q);
        c.colors = j["colors"].get<std::vector<std::uint8_t>>();
        return c;
    } catch (const cli_failure&) {
        throw;
    } catch (const std::exception& e) {
        throw cli_failure(exit_precondition, path + ": " + e.what());
    }
}

triple_coloring load_triple_coloring(run_ctx& ctx, const std::string& path) {
    const std::string bytes = load_bytes(ctx, path);
    try {
        if (looks_binary(bytes))
            return triple_coloring_from_binary(std::vector<std::uint8_t>(bytes.begin(), bytes.end()));
        const json j = parse_json_file(path, bytes);
        if (j.value("kind", "") != "triple")
            throw cli_failure(exit_precondition, path + ": expected kind \"triple\"");
        triple_coloring c(vertex_interval(j.at("lo").get<vertex>(), j.at("hi").get<vertex>()),
                          j.at("q").get<int>());
        check_color_entries(path, j, c.colors.size(), c.q);
        c.colors = j["colors"].get<std::vector<std::uint8_t>>();
        return c;
    } catch (const cli_failure&) {
        throw;
    } catch (const std::exception& e) {
        throw cli_failure(exit_precondition, path + ": " + e.what());
    }
}

// ---- certificate runners: pure functions of (inputs, params) ----------------------

json interval_json(const vertex_interval& iv) { return json::array({iv.lo, iv.hi}); }

json run_gen(const std::string& name, const json& p, std::string* artifact, bool binary) {
    auto finish_edge = [&](const edge_coloring& c) {
        const std::string bytes =
            binary ? [&] {
                const auto b = coloring_to_binary(c);
                return std::string(b.begin(), b.end());
            }()
                   : canonical_json(coloring_to_json(c));
        if (artifact) *artifact = bytes;
        return json{{"kind", "generated-coloring"},
                    {"command", "gen"},
                    {"name", name},
                    {"params", p},
                    {"format", binary ? "binary" : "json"},
                    {"coloring_kind", "edge"},
                    {"lo", c.span.lo},
                    {"hi", c.span.hi},
                    {"q", c.q},
                    {"coloring_digest", digest_string(bytes)}};
    };
    auto finish_triple = [&](const triple_coloring& c) {
        const std::string bytes =
            binary ? [&] {
                const auto b = coloring_to_binary(c);
                return std::string(b.begin(), b.end());
            }()
                   : canonical_json(coloring_to_json(c));
        if (artifact) *artifact = bytes;
        return json{{"kind", "generated-coloring"},
                    {"command", "gen"},
                    {"name", name},
                    {"params", p},
                    {"format", binary ? "binary" : "json"},
                    {"coloring_kind", "triple"},
                    {"lo", c.span.lo},
                    {"hi", c.span.hi},
                    {"q", c.q},
                    {"coloring_digest", digest_string(bytes)}};
    };

    const vertex n = p.value("n", vertex(0));
    if (name == "parity-log") return finish_edge(parity_log_coloring(n));
    if (name == "second-diff") return finish_edge(second_diff_coloring(n));
    if (name == "pentagon") return finish_edge(pentagon_coloring());
    if (name == "random") {
        const int q = p.value("q", 2);
        edge_coloring c(vertex_interval(1, n), q);
        const auto fn = pair_color_fn({pair_colorer_kind::random}, q, p.value("seed", std::uint64_t(0)), 0,
                                      c.span);
        for (vertex u = c.span.lo; u <= c.span.hi; ++u)
            for (vertex v = u + 1; v <= c.span.hi; ++v) c.set_color(u, v, fn(u, v));
        return finish_edge(c);
    }
    if (name == "constant") {
        const int q = p.value("q", 2);
        edge_coloring c(vertex_interval(1, n), q, static_cast<std::uint8_t>(p.value("color", 0)));
        return finish_edge(c);
    }
    if (name == "paley") {
        edge_coloring c(vertex_interval(1, n), 2);
        const auto fn = pair_color_fn({pair_colorer_kind::paley}, 2, 0, 0, c.span);
        for (vertex u = c.span.lo; u <= c.span.hi; ++u)
            for (vertex v = u + 1; v <= c.span.hi; ++v) c.set_color(u, v, fn(u, v));
        return finish_edge(c);
    }
    if (name == "rodl" || name == "rodl3") {
        rodl_spec spec;
        spec.n = n;
        spec.a = parse_rational(p.value("a", "2"));
        spec.seed = p.value("seed", std::uint64_t(0));
        return finish_edge(name == "rodl" ? rodl_coloring(spec) : rodl_three_color(spec));
    }
    if (name == "monotone-diff") return finish_triple(monotone_diff_triple_coloring(n));
    if (name == "block") {
        block_spec spec;
        spec.sizes = p.at("sizes").get<std::vector<std::int64_t>>();
        spec.seed = p.value("seed", std::uint64_t(0));
        const std::string inner = p.value("inner", "random");
        if (inner == "random")
            spec.inner.kind = triple_colorer_kind::random;
        else if (inner == "constant")
            spec.inner.kind = triple_colorer_kind::constant;
        else if (inner == "monotone-diff")
            spec.inner.kind = triple_colorer_kind::monotone_diff;
        else
            throw cli_failure(exit_precondition, "gen block: unknown inner colorer \"" + inner + "\"");
        spec.inner.constant_color = p.value("color", 0);
        return finish_triple(block_triple_coloring(spec));
    }
    throw cli_failure(exit_precondition, "gen: unknown generator \"" + name + "\"");
}

json run_maxclique(const edge_coloring& c, const json& p) {
    const search_result res =
        max_mono_clique(c, p.at("color").get<int>(), {p.at("budget").get<std::uint64_t>(), 0});
    return json{{"kind", "search-result"}, {"command", "maxclique"},
                {"params", p},            {"best", clique_to_json(res.best)},
                {"order", res.best.order()}, {"proved", res.proved},
                {"nodes", res.nodes}};
}

// vertices below the weight's domain are dropped rather than guessed at
json run_wclique(const edge_coloring& c, const json& p) {
    const weight_spec spec = parse_weight_spec(p.at("spec").get<std::string>());
    const vertex lo = std::max(c.span.lo, spec.domain_start);
    if (lo > c.span.hi)
        throw cli_failure(exit_precondition, "wclique: weight domain starts at " +
                                                 std::to_string(spec.domain_start) +
                                                 ", above the coloring span");
    edge_coloring sub(vertex_interval(lo, c.span.hi), c.q);
    for (vertex u = lo; u <= c.span.hi; ++u)
        for (vertex v = u + 1; v <= c.span.hi; ++v) sub.set_color(u, v, c.color(u, v));
    std::vector<double> w;
    for (vertex v = lo; v <= c.span.hi; ++v) w.push_back(vertex_weight(spec, v));
    const search_result res =
        max_weight_mono_clique(sub, p.at("color").get<int>(), w, {p.at("budget").get<std::uint64_t>(), 0});
    return json{{"kind", "search-result"}, {"command", "wclique"},
                {"params", p},            {"span_used", interval_json(sub.span)},
                {"best", clique_to_json(res.best)},
                {"weight", res.best.weight.value_or(0.0)}, {"proved", res.proved},
                {"nodes", res.nodes}};
}

json run_typeclique(const edge_coloring& c, const json& p) {
    std::vector<int> pi;
    for (const auto& v : p.at("pi")) pi.push_back(v.get<int>());
    const int k = p.at("k").get<int>();
    if (k != static_cast<int>(pi.size()) + 1)
        throw cli_failure(exit_precondition, "typeclique: k must equal |pi| + 1");
    const find_result res =
        find_type_clique(c, p.at("color").get<int>(), pi, {p.at("budget").get<std::uint64_t>(), 0});
    json cert{{"kind", "find-result"}, {"command", "typeclique"}, {"params", p},
              {"exhausted", res.exhausted}, {"nodes", res.nodes}};
    cert["witness"] = res.witness ? clique_to_json(*res.witness) : json(nullptr);
    cert["message"] = res.witness    ? "witness found"
                      : res.exhausted ? "none exists, exhausted"
                                      : "not found within budget";
    return cert;
}

json run_convex(const edge_coloring& c, const json& p) {
    const int k = p.at("k").get<int>();
    const bool square = p.value("square_path", false);
    const search_budget budget{p.at("budget").get<std::uint64_t>(), 0};
    const find_result res = square ? find_square_path_convex(c, p.at("color").get<int>(), k, budget)
                                   : find_convex_clique(c, p.at("color").get<int>(), k, budget);
    json cert{{"kind", "find-result"}, {"command", "convex"}, {"params", p},
              {"exhausted", res.exhausted}, {"nodes", res.nodes}};
    cert["witness"] = res.witness ? clique_to_json(*res.witness) : json(nullptr);
    cert["message"] = res.witness    ? "witness found"
                      : res.exhausted ? "none exists, exhausted"
                                      : "not found within budget";
    return cert;
}

json run_monosets(const triple_coloring& tc, const json& p) {
    std::int64_t total = 0;
    std::map<int, std::int64_t> by_size;
    std::map<int, std::int64_t> by_color;
    enumerate_mono_sets(tc, p.at("max_size").get<int>(), [&](const std::vector<vertex>& s, int color) {
        ++total;
        ++by_size[static_cast<int>(s.size())];
        ++by_color[color];
    });
    json sizes = json::object();
    for (const auto& [size, count] : by_size) sizes[std::to_string(size)] = count;
    json colors = json::object();
    for (const auto& [color, count] : by_color) colors[std::to_string(color)] = count;
    return json{{"kind", "mono-sets"}, {"command", "monosets"}, {"params", p},
                {"total", total},      {"by_size", sizes},      {"by_color", colors}};
}

json run_wramsey(const edge_coloring& c, const json& weights, const json& p) {
    weight_pair w;
    w.lo = c.span.lo;
    w.c = p.at("c").get<double>();
    for (vertex v = c.span.lo; v <= c.span.hi; ++v) {
        const std::string key = std::to_string(v);
        if (!weights.contains(key))
            throw cli_failure(exit_precondition, "weights file: missing vertex " + key);
        w.r.push_back(weights.at(key).at("r").get<double>());
        w.b.push_back(weights.at(key).at("b").get<double>());
    }
    if (p.value("inflate", false)) balance_inflate(w);
    const wr_result res = weighted_ramsey_solve(c, w);
    const double floor_value = w.c * std::log(static_cast<double>(c.span.size()));
    return json{{"kind", "wramsey"},
                {"command", "wramsey"},
                {"params", p},
                {"red", clique_to_json(res.red_clique)},
                {"blue", clique_to_json(res.blue_clique)},
                {"total", res.total},
                {"floor", floor_value},
                {"meets_floor", res.total >= floor_value - 1e-9},
                {"nodes", res.nodes}};
}

drc_params drc_params_from_json(const json& p, std::int64_t n1, std::int64_t n2) {
    drc_params d;
    d.p = parse_rational(p.at("p").get<std::string>());
    d.s = p.at("s").get<std::int64_t>();
    d.t = p.at("t").get<std::int64_t>();
    d.m = p.at("m").get<std::int64_t>();
    d.n1 = n1;
    d.n2 = n2;
    return d;
}

json run_drc_extract(const bipartite_graph& g, const json& p) {
    const drc_params d = drc_params_from_json(p, g.n1, g.n2);
    rng gen(p.at("seed").get<std::uint64_t>());
    const auto res = drc_extract(g, d, gen, p.at("retries").get<int>());
    json cert{{"kind", "drc-extract"}, {"command", "drc"}, {"mode", "extract"}, {"params", p},
              {"feasible", drc_feasible(d)},
              {"lhs", rational_str(drc_lhs(d))},
              {"rhs", rational_str(drc_rhs(d))},
              {"found", res.has_value()}};
    if (res) {
        cert["u"] = res->u;
        cert["t_sample"] = res->t_sample;
        cert["w"] = res->w;
        cert["attempts"] = res->attempts;
        cert["min_common"] = res->min_common;
        cert["threshold"] = rational_str(res->threshold);
    }
    return cert;
}

json run_drc_report(const bipartite_graph& g, const json& p) {
    const drc_params d = drc_params_from_json(p, g.n1, g.n2);
    rng gen(p.at("seed").get<std::uint64_t>());
    const drc_expectation rep = drc_expectation_report(g, d, p.at("samples").get<int>(), gen);
    return json{{"kind", "drc-report"}, {"command", "drc"}, {"mode", "report"}, {"params", p},
                {"exact", rational_str(rep.exact)},
                {"jensen", rational_str(rep.jensen)},
                {"density", rational_str(rep.density)},
                {"jensen_holds", rep.jensen_holds},
                {"mc_x_minus_y", rep.mc_x_minus_y},
                {"samples", rep.samples}};
}

json run_sep(const json& p) {
    std::vector<vertex> s;
    for (const auto& v : p.at("set")) s.push_back(v.get<vertex>());
    const vertex_interval iv(p.at("interval")[0].get<vertex>(), p.at("interval")[1].get<vertex>());
    const separated_pair sp = find_separated_pair(s, iv);
    return json{{"kind", "sep"},
                {"command", "sep"},
                {"params", p},
                {"t1", sp.t1},
                {"t2", sp.t2},
                {"i1", interval_json(sp.i1)},
                {"i2", interval_json(sp.i2)},
                {"density", rational_str(density(s, iv))},
                {"d1", rational_str(density(sp.t1, sp.i1))},
                {"d2", rational_str(density(sp.t2, sp.i2))},
                {"separated", is_separated(sp.t1, sp.t2)}};
}

json run_shrink(const json& p) {
    std::vector<vertex> s;
    for (const auto& v : p.at("set")) s.push_back(v.get<vertex>());
    const vertex_interval iv(p.at("interval")[0].get<vertex>(), p.at("interval")[1].get<vertex>());
    const std::int64_t r = p.at("r").get<std::int64_t>();
    const auto [inside, window] = shrink(s, iv, r);
    return json{{"kind", "shrink"},
                {"command", "shrink"},
                {"params", p},
                {"window", interval_json(window)},
                {"density_in", rational_str(density(s, iv))},
                {"density_out", rational_str(density(inside, window))}};
}

json atom_json(const atom_value& a) {
    return json{{"coef", rational_str(a.coef)}, {"a", a.a.str()}, {"b", a.b.str()}};
}

json run_cascade(const json& p) {
    const int k = p.at("k").get<int>();
    const int q = p.at("q").get<int>();
    const bigint n = parse_bigint(p.at("n").get<std::string>());
    const rational pr = parse_rational(p.at("p").get<std::string>());
    const cascade_params cp = make_cascade_params(k, q, n, pr);
    json rows = json::array();
    for (int i = 1; i <= q; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        rows.push_back(json{{"i", i},
                            {"alpha", atom_json(cp.alpha[idx])},
                            {"delta", atom_json(cp.delta[idx])},
                            {"lambda", atom_json(cp.lambda[idx])},
                            {"big_delta", atom_json(cp.big_delta[idx])},
                            {"beta", atom_json(cp.beta[idx])},
                            {"eta", atom_json(cp.eta[idx])},
                            {"gamma", atom_json(cp.gamma[idx])},
                            {"big_gamma", atom_json(cp.big_gamma[idx])},
                            {"kappa", atom_json(cp.kappa[idx])},
                            {"kappa_ge_gamma_n", to_string(cp.kappa_ge_gamma_n[idx])}});
    }
    return json{{"kind", "cascade"},
                {"command", "cascade"},
                {"params", p},
                {"t_lo", cp.t_lo},
                {"t_hi", cp.t_hi},
                {"t_is_integer", cp.t_is_integer},
                {"eps_lo", rational_str(cp.eps_lo)},
                {"eps_hi", rational_str(cp.eps_hi)},
                {"e_delta", cp.e_delta.str()},
                {"rows", rows},
                {"identities",
                 json{{"alpha", cp.id_alpha},
                      {"delta", cp.id_delta},
                      {"beta", cp.id_beta},
                      {"eta", cp.id_eta},
                      {"gamma", cp.id_gamma},
                      {"big_delta_product", cp.id_big_delta_product},
                      {"big_gamma", cp.id_big_gamma},
                      {"lambda_eq_delta", cp.id_lambda_eq_delta}}},
                {"chains",
                 json{{"delta_chain_1", to_string(cp.delta_chain_1)},
                      {"delta_chain_2", to_string(cp.delta_chain_2)},
                      {"delta_ge_k2q", to_string(cp.delta_ge_k2q)},
                      {"gamma_chain_1", to_string(cp.gamma_chain_1)},
                      {"gamma_chain_2", to_string(cp.gamma_chain_2)},
                      {"gamma_ge_k6q", to_string(cp.gamma_ge_k6q)},
                      {"link_eps_pow2", to_string(cp.link_eps_pow2)}}},
                {"link_tail_n_ge_k", cp.link_tail_n_ge_k}};
}

json run_rpi(const json& p) {
    std::vector<int> pi;
    for (const auto& v : p.at("pi")) pi.push_back(v.get<int>());
    const rpi_result res =
        compute_R_pi(p.at("k").get<int>(), p.at("q").get<int>(), pi, p.at("n_max").get<std::int64_t>(),
                     {p.at("budget").get<std::uint64_t>(), 0}, p.at("order").get<int>());
    json cert{{"kind", "rpi"}, {"command", "rpi"}, {"params", p},
              {"inconclusive", res.inconclusive}, {"nodes", res.nodes}};
    cert["value"] = res.value ? json(*res.value) : json(nullptr);
    cert["lower_bound"] = res.lower_bound ? json(*res.lower_bound) : json(nullptr);
    cert["witness"] = res.witness ? coloring_to_json(*res.witness) : json(nullptr);
    cert["message"] = res.value         ? "value certified"
                      : res.inconclusive ? "not certified within budget"
                                         : "no value up to n_max; avoiding coloring exists";
    return cert;
}

json run_fexact(const json& p) {
    const weight_spec spec = parse_weight_spec(p.at("spec").get<std::string>());
    const f_exact_result res =
        f_exact(p.at("n").get<vertex>(), spec, p.at("q").get<int>(), p.at("budget").get<std::uint64_t>(),
                p.at("order").get<int>(), p.at("threads").get<int>());
    return json{{"kind", "fexact"},
                {"command", "fexact"},
                {"params", p},
                {"value", res.value},
                {"colorings", res.colorings},
                {"witness", coloring_to_json(res.witness)}};
}

json run_weight(const json& p) {
    const weight_spec spec = parse_weight_spec(p.at("spec").get<std::string>());
    std::vector<vertex> s;
    for (const auto& v : p.at("set")) s.push_back(v.get<vertex>());
    json per = json::array();
    for (vertex v : s) per.push_back(vertex_weight(spec, v));
    const auto exact = set_weight_exact(spec, s);
    return json{{"kind", "weight"},
                {"command", "weight"},
                {"params", p},
                {"domain_start", spec.domain_start},
                {"per_vertex", per},
                {"total", set_weight(spec, s)},
                {"exact", exact ? json(rational_str(*exact)) : json(nullptr)}};
}

json run_verify_monotone(const json& p) {
    const monotone_diff_report rep =
        verify_monotone_diff_counterexample(p.at("n").get<vertex>(), p.at("max_size").get<int>());
    json sizes = json::object();
    for (const auto& [size, count] : rep.by_size) sizes[std::to_string(size)] = count;
    json cert{{"kind", "verify-monotone-diff"}, {"command", "verify"}, {"mode", "monotone-diff"},
              {"params", p},                    {"sets_checked", rep.sets_checked},
              {"violations", rep.violations},   {"by_size", sizes}};
    cert["first_violation"] = rep.first_violation ? json(*rep.first_violation) : json(nullptr);
    return cert;
}

json run_verify_second_diff(const json& p) {
    const second_diff_report rep = verify_second_diff_counterexample(p.at("n").get<vertex>());
    json cert{{"kind", "verify-second-diff"},
              {"command", "verify"},
              {"mode", "second-diff"},
              {"params", p},
              {"cliques_checked", rep.cliques_checked},
              {"matches", rep.matches},
              {"by_color", json::array({rep.by_color[0], rep.by_color[1]})}};
    cert["first_match"] = rep.first_match ? json(*rep.first_match) : json(nullptr);
    return cert;
}

json run_verify_blocks(const json& p) {
    block_spec spec;
    spec.sizes = p.at("sizes").get<std::vector<std::int64_t>>();
    spec.seed = p.at("seed").get<std::uint64_t>();
    const block_report rep =
        verify_block_structure(spec, p.at("max_size").get<int>(), p.at("seeds").get<int>());
    json cert{{"kind", "verify-blocks"}, {"command", "verify"},        {"mode", "blocks"},
              {"params", p},             {"seeds_run", rep.seeds_run}, {"sets_checked", rep.sets_checked},
              {"violations", rep.violations}};
    cert["first_violation"] = rep.first_violation ? json(*rep.first_violation) : json(nullptr);
    return cert;
}

// ---- certificate re-verification ---------------------------------------------------

json recompute_certificate(run_ctx& ctx, const json& cert, const std::string& coloring_path,
                           const std::string& coloring2_path, const std::string& weights_path,
                           const std::string& graph_path) {
    const std::string command = cert.value("command", "");
    const json p = cert.value("params", json::object());
    auto need = [&](const std::string& path, const char* what) -> const std::string& {
        if (path.empty())
            throw cli_failure(exit_precondition,
                              std::string("verify --certificate: this certificate needs ") + what);
        return path;
    };
    auto check_digest = [&](const std::string& recorded, const std::string& path) {
        const std::string bytes = load_bytes(ctx, path);
        if (digest_string(bytes) != recorded)
            throw cli_failure(exit_precondition,
                              path + ": digest does not match the certificate's recorded input");
    };

    // after the recorded digests are re-checked against the provided files, the
    // inputs block can be reattached so the byte comparison covers it too
    auto with_inputs = [&](json fresh) {
        fresh["inputs"] = cert.at("inputs");
        return fresh;
    };

    if (command == "gen") return run_gen(cert.at("name").get<std::string>(), p, nullptr,
                                         cert.value("format", "json") == "binary");
    if (command == "maxclique" || command == "wclique" || command == "typeclique" ||
        command == "convex" || command == "wramsey") {
        check_digest(cert.at("inputs").at("coloring").get<std::string>(), need(coloring_path, "--coloring"));
        const edge_coloring c = load_edge_coloring(ctx, coloring_path);
        if (command == "maxclique") return with_inputs(run_maxclique(c, p));
        if (command == "wclique") return with_inputs(run_wclique(c, p));
        if (command == "typeclique") return with_inputs(run_typeclique(c, p));
        if (command == "convex") return with_inputs(run_convex(c, p));
        const json weights =
            parse_json_file(weights_path, load_bytes(ctx, need(weights_path, "--weights")));
        if (digest_string(canonical_json(weights)) != cert.at("inputs").at("weights").get<std::string>())
            throw cli_failure(exit_precondition, weights_path + ": digest mismatch");
        return with_inputs(run_wramsey(c, weights, p));
    }
    if (command == "monosets") {
        check_digest(cert.at("inputs").at("coloring").get<std::string>(), need(coloring_path, "--coloring"));
        return with_inputs(run_monosets(load_triple_coloring(ctx, coloring_path), p));
    }
    if (command == "drc") {
        check_digest(cert.at("inputs").at("graph").get<std::string>(), need(graph_path, "--graph"));
        const bipartite_graph g =
            bipartite_from_json(parse_json_file(graph_path, read_file(graph_path)));
        return with_inputs(cert.value("mode", "") == "extract" ? run_drc_extract(g, p)
                                                               : run_drc_report(g, p));
    }
    if (command == "sep") return run_sep(p);
    if (command == "shrink") return run_shrink(p);
    if (command == "cascade") return run_cascade(p);
    if (command == "rpi") return run_rpi(p);
    if (command == "fexact") return run_fexact(p);
    if (command == "weight") return run_weight(p);
    if (command == "verify") {
        const std::string mode = cert.value("mode", "");
        if (mode == "monotone-diff") return run_verify_monotone(p);
        if (mode == "second-diff") return run_verify_second_diff(p);
        if (mode == "blocks") return run_verify_blocks(p);
    }
    (void)coloring2_path;
    throw cli_failure(exit_precondition, "verify --certificate: unknown command \"" + command + "\"");
}

// ---- output ------------------------------------------------------------------------

void print_table(const json& cert) {
    const std::string command = cert.value("command", "");
    std::printf("== %s ==\n", command.c_str());
    if (command == "cascade") {
        std::printf("t in [%lld, %lld], eps in [%s, %s], Delta = (eps/8)^%s\n",
                    cert["t_lo"].get<long long>(), cert["t_hi"].get<long long>(),
                    cert["eps_lo"].get<std::string>().c_str(), cert["eps_hi"].get<std::string>().c_str(),
                    cert["e_delta"].get<std::string>().c_str());
        std::printf("%3s %14s %14s %14s %14s %8s\n", "i", "delta.a", "alpha.a", "beta.b", "gamma.b",
                    "kappa>=Gn");
        for (const auto& row : cert["rows"])
            std::printf("%3d %14s %14s %14s %14s %8s\n", row["i"].get<int>(),
                        row["delta"]["a"].get<std::string>().c_str(),
                        row["alpha"]["a"].get<std::string>().c_str(),
                        row["beta"]["b"].get<std::string>().c_str(),
                        row["gamma"]["b"].get<std::string>().c_str(),
                        row["kappa_ge_gamma_n"].get<std::string>().c_str());
        std::printf("identities:");
        for (const auto& [key, value] : cert["identities"].items())
            std::printf(" %s=%s", key.c_str(), value.get<bool>() ? "true" : "false");
        std::printf("\nchains:");
        for (const auto& [key, value] : cert["chains"].items())
            std::printf(" %s=%s", key.c_str(), value.get<std::string>().c_str());
        std::printf("\nlink_tail_n_ge_k=%s\n", cert["link_tail_n_ge_k"].get<bool>() ? "true" : "false");
        return;
    }
    for (const auto& [key, value] : cert.items()) {
        if (key == "params" || key == "command" || key == "kind" || key == "witness" ||
            key == "rows" || key == "inputs")
            continue;
        std::printf("%s: %s\n", key.c_str(), value.dump().c_str());
    }
    if (cert.contains("witness") && !cert["witness"].is_null() &&
        cert["witness"].value("kind", "") == "clique")
        std::printf("witness: %s\n", cert["witness"].dump().c_str());
}

int emit(run_ctx& ctx, const json& cert, int code) {
    const std::string cert_bytes = canonical_json(cert);
    const double wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - ctx.t0).count();
    json manifest{{"command_line", ctx.command_line},
                  {"seed", ctx.seed},
                  {"input_hashes", ctx.input_hashes},
                  {"tool_version", tool_version},
                  {"wall_ms", wall_ms},
                  {"result_digest", digest_string(cert_bytes)}};
    if (!ctx.out_path.empty()) {
        write_file(ctx.out_path, cert_bytes);
        write_file(ctx.out_path + ".manifest.json", canonical_json(manifest));
    }
    if (ctx.json_out) {
        std::printf("%s\n", canonical_json(json{{"certificate", cert}, {"manifest", manifest}}).c_str());
    } else {
        print_table(cert);
        std::printf("manifest: digest=%s wall=%.1fms%s\n",
                    manifest["result_digest"].get<std::string>().c_str(), wall_ms,
                    ctx.out_path.empty() ? "" : (" out=" + ctx.out_path).c_str());
    }
    return code;
}

// writes the generated coloring to out_path; certificate goes alongside
int emit_gen(run_ctx& ctx, const json& cert, const std::string& artifact) {
    const std::string cert_bytes = canonical_json(cert);
    const double wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - ctx.t0).count();
    json manifest{{"command_line", ctx.command_line},
                  {"seed", ctx.seed},
                  {"input_hashes", ctx.input_hashes},
                  {"tool_version", tool_version},
                  {"wall_ms", wall_ms},
                  {"result_digest", digest_string(cert_bytes)}};
    if (!ctx.out_path.empty()) {
        write_file(ctx.out_path, artifact);
        write_file(ctx.out_path + ".cert.json", cert_bytes);
        write_file(ctx.out_path + ".manifest.json", canonical_json(manifest));
    }
    if (ctx.json_out) {
        std::printf("%s\n", canonical_json(json{{"certificate", cert}, {"manifest", manifest}}).c_str());
    } else {
        print_table(cert);
        std::printf("manifest: digest=%s wall=%.1fms%s\n",
                    manifest["result_digest"].get<std::string>().c_str(), wall_ms,
                    ctx.out_path.empty() ? "" : (" out=" + ctx.out_path).c_str());
    }
    return exit_ok;
}

int code_for_find(const json& cert) {
    if (!cert["witness"].is_null() || cert["exhausted"].get<bool>()) return exit_ok;
    return exit_inconclusive;
}

int code_for_search(const json& cert, bool require_proof) {
    if (require_proof && !cert["proved"].get<bool>()) return exit_inconclusive;
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    run_ctx ctx;
    for (int i = 0; i < argc; ++i) {
        if (i > 0) ctx.command_line += ' ';
        ctx.command_line += argv[i];
    }
    if (const char* env = std::getenv(budget_env)) {
        try {
            ctx.budget = static_cast<std::uint64_t>(std::stoull(env));
        } catch (const std::exception&) {
            std::fprintf(stderr, "%s: bad %s value \"%s\"\n", argv[0], budget_env, env);
            return exit_usage;
        }
    }

    CLI::App app{"ramsey-lab: weighted Ramsey combinatorics workbench"};
    app.set_version_flag("--version", tool_version);
    app.add_option("--seed", ctx.seed, "seed recorded in the manifest and used by seeded commands");
    app.add_option("--threads", ctx.threads, "worker threads (results are thread-count independent)")
        ->check(CLI::Range(1, 256));
    std::uint64_t budget_flag = 0;
    auto* budget_opt = app.add_option("--budget", budget_flag, "node/coloring budget (default from " +
                                                                   std::string(budget_env) + " or 10000000)");
    app.add_flag("--json", ctx.json_out, "print machine-readable JSON only");
    app.add_flag("--require-proof", ctx.require_proof, "exit 3 unless the result is proved optimal");
    app.add_option("-o,--out", ctx.out_path, "output path (coloring for gen, certificate otherwise)");
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a coloring");
    std::string gen_name;
    vertex gen_n = 16;
    int gen_q = 2, gen_color = 0;
    std::string gen_a = "2", gen_sizes, gen_inner = "random";
    bool gen_binary = false;
    gen->add_option("name", gen_name,
                    "parity-log|second-diff|random|constant|paley|pentagon|rodl|rodl3|monotone-diff|block")
        ->required();
    gen->add_option("--n", gen_n, "top vertex label");
    gen->add_option("--q", gen_q, "number of colors");
    gen->add_option("--color", gen_color, "constant color id");
    gen->add_option("--a", gen_a, "rodl growth rate (rational)");
    gen->add_option("--sizes", gen_sizes, "block sizes, e.g. 4,8");
    gen->add_option("--inner", gen_inner, "block inner colorer: random|constant|monotone-diff");
    gen->add_flag("--binary", gen_binary, "write the packed binary format");

    // clique searches over an edge coloring
    std::string cs_path, cs_pi, cs_spec = "w1";
    int cs_color = 0, cs_k = 3;
    bool cs_square = false;
    auto* maxc = app.add_subcommand("maxclique", "largest mono clique of one color");
    maxc->add_option("coloring", cs_path)->required();
    maxc->add_option("--color", cs_color)->required();
    auto* wcl = app.add_subcommand("wclique", "heaviest mono clique of one color");
    wcl->add_option("coloring", cs_path)->required();
    wcl->add_option("--color", cs_color)->required();
    wcl->add_option("--spec", cs_spec, "vertex weights: w1|w2|ws:<s>|wps:<s>:<eps>");
    auto* tyc = app.add_subcommand("typeclique", "mono clique with prescribed difference ranks");
    tyc->add_option("coloring", cs_path)->required();
    tyc->add_option("--color", cs_color)->required();
    tyc->add_option("--pi", cs_pi, "difference ranks, e.g. 3,2,1")->required();
    tyc->add_option("--k", cs_k, "clique order")->required();
    auto* cvx = app.add_subcommand("convex", "convex mono clique search");
    cvx->add_option("coloring", cs_path)->required();
    cvx->add_option("--color", cs_color)->required();
    cvx->add_option("--k", cs_k, "clique order")->required();
    cvx->add_flag("--square-path", cs_square, "square-of-path strengthening");
    auto* mns = app.add_subcommand("monosets", "count mono sets of a triple coloring");
    int mns_max = 4;
    mns->add_option("coloring", cs_path)->required();
    mns->add_option("--max-size", mns_max)->required();

    // wramsey
    auto* wrs = app.add_subcommand("wramsey", "two-weight mono clique pair solver");
    std::string wr_weights;
    double wr_c = 1.0;
    bool wr_inflate = false;
    wrs->add_option("coloring", cs_path)->required();
    wrs->add_option("--weights", wr_weights, "JSON map vertex -> {r, b}")->required();
    wrs->add_option("--c", wr_c, "scale in the c*ln(n) floor");
    wrs->add_flag("--inflate", wr_inflate, "raise weights to meet the balance precondition");

    // drc
    auto* drc = app.add_subcommand("drc", "dependent random choice");
    drc->require_subcommand(1);
    std::string drc_graph, drc_p = "1/2";
    std::int64_t drc_s = 2, drc_t = 2, drc_m = 1, drc_split = 0;
    int drc_retries = 20, drc_samples = 200, drc_color = 0;
    auto add_drc_common = [&](CLI::App* sub) {
        sub->add_option("--graph", drc_graph, "bipartite JSON {n1, n2, rows:[hex]}");
        sub->add_option("--coloring", cs_path, "edge coloring to restrict across a split");
        sub->add_option("--split", drc_split, "last vertex of the left side");
        sub->add_option("--color", drc_color, "color whose edges form the bipartite graph");
        sub->add_option("--p", drc_p, "density parameter (rational)");
        sub->add_option("--s", drc_s);
        sub->add_option("--t", drc_t);
        sub->add_option("--m", drc_m);
    };
    auto* drc_ext = drc->add_subcommand("extract", "sample a set U with large common neighborhoods");
    add_drc_common(drc_ext);
    drc_ext->add_option("--retries", drc_retries);
    auto* drc_rep = drc->add_subcommand("report", "exact expectation versus the Jensen floor");
    add_drc_common(drc_rep);
    drc_rep->add_option("--samples", drc_samples);

    // sep / shrink
    auto* sep = app.add_subcommand("sep", "separated dense pair inside an interval");
    std::string set_text, interval_text;
    sep->add_option("--set", set_text, "vertex list, e.g. 1,4,5,9")->required();
    sep->add_option("--interval", interval_text, "lo,hi (defaults to the hull)");
    auto* shr = app.add_subcommand("shrink", "densest length-r window");
    std::int64_t shr_r = 1;
    shr->add_option("--set", set_text)->required();
    shr->add_option("--interval", interval_text, "lo,hi (defaults to the hull)");
    shr->add_option("--r", shr_r, "window length")->required();

    // cascade
    auto* csc = app.add_subcommand("cascade", "parameter cascade closed forms and chains");
    int csc_k = 3, csc_q = 2;
    std::string csc_n = "65536", csc_p = "0.5";
    csc->add_option("--k", csc_k)->required();
    csc->add_option("--q", csc_q)->required();
    csc->add_option("--n", csc_n, "integer, also accepts 1e9 or 2^40")->required();
    csc->add_option("--p", csc_p, "rational or decimal")->required();

    // rpi
    auto* rpi = app.add_subcommand("rpi", "least n forcing a mono clique of the given type");
    int rpi_k = 3, rpi_q = 1, rpi_order = 0;
    std::int64_t rpi_nmax = 8;
    rpi->add_option("--k", rpi_k)->required();
    rpi->add_option("--q", rpi_q)->required();
    rpi->add_option("--pi", cs_pi, "difference ranks")->required();
    rpi->add_option("--nmax", rpi_nmax)->required();
    rpi->add_option("--order", rpi_order, "enumeration order variant (0 or 1)");

    // fexact
    auto* fex = app.add_subcommand("fexact", "exact minimax mono clique weight on [2,n]");
    vertex fex_n = 5;
    int fex_q = 2, fex_order = 0;
    std::string fex_spec = "w1";
    fex->add_option("--n", fex_n)->required();
    fex->add_option("--q", fex_q);
    fex->add_option("--spec", fex_spec, "w1|wps:<s>:<eps>|...");
    fex->add_option("--order", fex_order, "traversal order variant");

    // weight
    auto* wgt = app.add_subcommand("weight", "evaluate a weight function on a vertex set");
    wgt->add_option("--spec", cs_spec, "w1|w2|ws:<s>|wps:<s>:<eps>");
    wgt->add_option("--set", set_text, "vertex list")->required();

    // verify
    auto* ver = app.add_subcommand("verify", "construction verifiers and certificate re-checks");
    std::string ver_cert, ver_coloring, ver_coloring2, ver_weights, ver_graph;
    ver->add_option("--certificate", ver_cert, "re-run a certificate and compare bytes");
    ver->add_option("--coloring", ver_coloring, "coloring input recorded in the certificate");
    ver->add_option("--coloring2", ver_coloring2, "second coloring input, when applicable");
    ver->add_option("--weights", ver_weights, "weights input recorded in the certificate");
    ver->add_option("--graph", ver_graph, "bipartite input recorded in the certificate");
    vertex ver_n = 30, ver_n2 = 40;
    int ver_max = 6, ver_seeds = 5;
    auto* vmd = ver->add_subcommand("monotone-diff", "mono sets have monotone consecutive differences");
    vmd->add_option("--n", ver_n);
    vmd->add_option("--max-size", ver_max);
    auto* vsd = ver->add_subcommand("second-diff", "no mono 7-clique matches the forbidden pattern");
    vsd->add_option("--n", ver_n2);
    auto* vbl = ver->add_subcommand("blocks", "mono cliques crowd at most one block");
    vbl->add_option("--sizes", gen_sizes, "block sizes, e.g. 4,8")->required();
    vbl->add_option("--max-size", ver_max);
    vbl->add_option("--seeds", ver_seeds);

    // let global flags (-o, --seed, --require-proof, ...) appear after the subcommand
    const std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        for (CLI::App* sub : a->get_subcommands([](const CLI::App*) { return true; })) {
            sub->fallthrough();
            enable_fallthrough(sub);
        }
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }
    if (budget_opt->count() > 0) ctx.budget = budget_flag;

    try {
        if (gen->parsed()) {
            json p{{"n", gen_n}, {"q", gen_q}, {"seed", ctx.seed}};
            if (gen_name == "constant" || gen_name == "block") p["color"] = gen_color;
            if (gen_name == "rodl" || gen_name == "rodl3") p["a"] = gen_a;
            if (gen_name == "block") {
                if (gen_sizes.empty())
                    throw cli_failure(exit_precondition, "gen block: --sizes required");
                p["sizes"] = parse_int_list(gen_sizes, "--sizes");
                p["inner"] = gen_inner;
            }
            std::string artifact;
            const json cert = run_gen(gen_name, p, &artifact, gen_binary);
            return emit_gen(ctx, cert, artifact);
        }
        if (maxc->parsed()) {
            const edge_coloring c = load_edge_coloring(ctx, cs_path);
            json p{{"color", cs_color}, {"budget", ctx.budget}};
            json cert = run_maxclique(c, p);
            cert["inputs"] = json{{"coloring", ctx.input_hashes[cs_path]}};
            return emit(ctx, cert, code_for_search(cert, ctx.require_proof));
        }
        if (wcl->parsed()) {
            const edge_coloring c = load_edge_coloring(ctx, cs_path);
            json p{{"color", cs_color}, {"budget", ctx.budget}, {"spec", cs_spec}};
            json cert = run_wclique(c, p);
            cert["inputs"] = json{{"coloring", ctx.input_hashes[cs_path]}};
            return emit(ctx, cert, code_for_search(cert, ctx.require_proof));
        }
        if (tyc->parsed()) {
            const edge_coloring c = load_edge_coloring(ctx, cs_path);
            json p{{"color", cs_color}, {"budget", ctx.budget}, {"pi", parse_pi(cs_pi)}, {"k", cs_k}};
            json cert = run_typeclique(c, p);
            cert["inputs"] = json{{"coloring", ctx.input_hashes[cs_path]}};
            return emit(ctx, cert, code_for_find(cert));
        }
        if (cvx->parsed()) {
            const edge_coloring c = load_edge_coloring(ctx, cs_path);
            json p{{"color", cs_color}, {"budget", ctx.budget}, {"k", cs_k}, {"square_path", cs_square}};
            json cert = run_convex(c, p);
            cert["inputs"] = json{{"coloring", ctx.input_hashes[cs_path]}};
            return emit(ctx, cert, code_for_find(cert));
        }
        if (mns->parsed()) {
            const triple_coloring tc = load_triple_coloring(ctx, cs_path);
            json p{{"max_size", mns_max}};
            json cert = run_monosets(tc, p);
            cert["inputs"] = json{{"coloring", ctx.input_hashes[cs_path]}};
            return emit(ctx, cert, exit_ok);
        }
        if (wrs->parsed()) {
            const edge_coloring c = load_edge_coloring(ctx, cs_path);
            const json weights = parse_json_file(wr_weights, load_bytes(ctx, wr_weights));
            json p{{"c", wr_c}, {"inflate", wr_inflate}};
            json cert = run_wramsey(c, weights, p);
            cert["inputs"] = json{{"coloring", ctx.input_hashes[cs_path]},
                                  {"weights", digest_string(canonical_json(weights))}};
            return emit(ctx, cert, exit_ok);
        }
        if (drc->parsed()) {
            CLI::App* mode = drc_ext->parsed() ? drc_ext : drc_rep;
            json inputs;
            std::optional<bipartite_graph> g;
            if (!drc_graph.empty()) {
                g.emplace(bipartite_from_json(parse_json_file(drc_graph, load_bytes(ctx, drc_graph))));
                inputs["graph"] = ctx.input_hashes[drc_graph];
            } else if (!cs_path.empty()) {
                const edge_coloring c = load_edge_coloring(ctx, cs_path);
                if (drc_split <= c.span.lo || drc_split >= c.span.hi)
                    throw cli_failure(exit_precondition, "drc: --split must fall inside the span");
                g.emplace(drc_split - c.span.lo + 1, c.span.hi - drc_split);
                for (vertex u = c.span.lo; u <= drc_split; ++u)
                    for (vertex v = drc_split + 1; v <= c.span.hi; ++v)
                        if (c.color(u, v) == drc_color) g->add_edge(u - c.span.lo, v - drc_split - 1);
                // re-verification works from the derived graph, so record its bytes
                const std::string derived = canonical_json(bipartite_to_json(*g));
                inputs["graph"] = digest_string(derived);
            } else {
                throw cli_failure(exit_precondition, "drc: provide --graph or --coloring with --split");
            }
            json p{{"p", drc_p}, {"s", drc_s}, {"t", drc_t}, {"m", drc_m}, {"seed", ctx.seed}};
            json cert;
            int code = exit_ok;
            if (mode == drc_ext) {
                p["retries"] = drc_retries;
                cert = run_drc_extract(*g, p);
                if (!cert["found"].get<bool>()) code = exit_inconclusive;
            } else {
                p["samples"] = drc_samples;
                cert = run_drc_report(*g, p);
            }
            cert["inputs"] = inputs;
            return emit(ctx, cert, code);
        }
        if (sep->parsed() || shr->parsed()) {
            const std::vector<std::int64_t> raw = parse_int_list(set_text, "--set");
            std::vector<vertex> s(raw.begin(), raw.end());
            vertex_interval iv = s.empty() ? vertex_interval(0, 0) : vertex_interval(s.front(), s.back());
            if (!interval_text.empty()) {
                const auto ends = parse_int_list(interval_text, "--interval");
                if (ends.size() != 2) throw cli_failure(exit_precondition, "--interval: expected lo,hi");
                iv = vertex_interval(ends[0], ends[1]);
            }
            json p{{"set", s}, {"interval", interval_json(iv)}};
            if (shr->parsed()) p["r"] = shr_r;
            const json cert = sep->parsed() ? run_sep(p) : run_shrink(p);
            return emit(ctx, cert, exit_ok);
        }
        if (csc->parsed()) {
            json p{{"k", csc_k}, {"q", csc_q}, {"n", csc_n}, {"p", csc_p}};
            return emit(ctx, run_cascade(p), exit_ok);
        }
        if (rpi->parsed()) {
            json p{{"k", rpi_k},       {"q", rpi_q},          {"pi", parse_pi(cs_pi)},
                   {"n_max", rpi_nmax}, {"budget", ctx.budget}, {"order", rpi_order}};
            const json cert = run_rpi(p);
            return emit(ctx, cert, cert["inconclusive"].get<bool>() ? exit_inconclusive : exit_ok);
        }
        if (fex->parsed()) {
            json p{{"n", fex_n},     {"q", fex_q},          {"spec", fex_spec},
                   {"order", fex_order}, {"budget", ctx.budget}, {"threads", ctx.threads}};
            return emit(ctx, run_fexact(p), exit_ok);
        }
        if (wgt->parsed()) {
            const std::vector<std::int64_t> raw = parse_int_list(set_text, "--set");
            json p{{"spec", cs_spec}, {"set", std::vector<vertex>(raw.begin(), raw.end())}};
            return emit(ctx, run_weight(p), exit_ok);
        }
        if (ver->parsed()) {
            if (!ver_cert.empty()) {
                const json stored = parse_json_file(ver_cert, load_bytes(ctx, ver_cert));
                const json fresh =
                    recompute_certificate(ctx, stored, ver_coloring, ver_coloring2, ver_weights, ver_graph);
                const bool match = canonical_json(fresh) == canonical_json(stored);
                json cert{{"kind", "verify-certificate"},
                          {"command", "verify"},
                          {"mode", "certificate"},
                          {"params", json{{"certificate", ver_cert}}},
                          {"recomputed_command", stored.value("command", "")},
                          {"verified", match}};
                if (!match) {
                    cert["recomputed_digest"] = digest_string(canonical_json(fresh));
                    cert["stored_digest"] = digest_string(canonical_json(stored));
                }
                return emit(ctx, cert, match ? exit_ok : exit_precondition);
            }
            if (vmd->parsed()) {
                json p{{"n", ver_n}, {"max_size", ver_max}};
                return emit(ctx, run_verify_monotone(p), exit_ok);
            }
            if (vsd->parsed()) {
                json p{{"n", ver_n2}};
                return emit(ctx, run_verify_second_diff(p), exit_ok);
            }
            if (vbl->parsed()) {
                json p{{"sizes", parse_int_list(gen_sizes, "--sizes")},
                       {"max_size", ver_max},
                       {"seeds", ver_seeds},
                       {"seed", ctx.seed}};
                return emit(ctx, run_verify_blocks(p), exit_ok);
            }
            throw cli_failure(exit_usage, "verify: choose a mode or pass --certificate");
        }
        throw cli_failure(exit_usage, "no subcommand selected");
    } catch (const cli_failure& e) {
        std::fprintf(stderr, "%s: %s\n", argv[0], e.what());
        return e.code;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "%s: %s\n", argv[0], e.what());
        return exit_precondition;
    } catch (const std::overflow_error& e) {
        std::fprintf(stderr, "%s: %s\n", argv[0], e.what());
        return exit_precondition;
    } catch (const std::runtime_error& e) {
        std::fprintf(stderr, "%s: %s\n", argv[0], e.what());
        return std::string(e.what()).find("budget") != std::string::npos ? exit_inconclusive
                                                                         : exit_precondition;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "%s: %s\n", argv[0], e.what());
        return exit_precondition;
    }
}
