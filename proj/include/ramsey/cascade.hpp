#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramsey/numeric.hpp"

namespace ramsey {

// ---------------------------------------------------------------------------
// Exact log-space arithmetic for the parameter cascade.  Every quantity in
// the cascade is a positive rational times integer powers of the two atoms
// eps/8 and Delta/12; since Delta itself is a power of eps/8, values admit a
// canonical normal form coef * (eps/8)^a.  Identities are decided by exact
// normal-form equality and inequalities by exact exponent comparison (the
// sign of log(eps/8) is known: eps <= 1/2 < 8) or, when coefficients differ,
// by directed log2 interval bounds evaluated over the whole eps bracket.
// ---------------------------------------------------------------------------

struct atom_value {
    rational coef = 1; // positive
    bigint a = 0;      // exponent of (eps/8)
    bigint b = 0;      // exponent of (Delta/12)
};

enum class tri { yes, no, undecided };

inline std::string to_string(tri t) {
    switch (t) {
        case tri::yes: return "yes";
        case tri::no: return "no";
        default: return "undecided";
    }
}

inline atom_value av_mul(const atom_value& x, const atom_value& y) {
    return {x.coef * y.coef, x.a + y.a, x.b + y.b};
}

inline atom_value av_scale(const atom_value& x, const rational& c) {
    return {x.coef * c, x.a, x.b};
}

inline atom_value av_pow(const atom_value& x, std::int64_t e) {
    if (e < 0) throw std::domain_error("av_pow: negative exponent");
    return {pow_rational(x.coef, e), x.a * e, x.b * e};
}

namespace detail {

inline constexpr std::int64_t cascade_coef_exponent_cap = 2'000'000;

inline std::int64_t checked_small(const bigint& e, const char* who) {
    if (e < 0 || e > cascade_coef_exponent_cap)
        throw std::overflow_error(std::string(who) + ": exponent exceeds materializable range");
    return e.convert_to<std::int64_t>();
}

} // namespace detail

// Normal form over the single atom eps/8, substituting Delta/12 = (1/12)(eps/8)^E.
inline atom_value av_normalize(const atom_value& x, const bigint& e_delta) {
    if (x.b == 0) return x;
    const std::int64_t b = detail::checked_small(x.b, "av_normalize");
    return {x.coef * pow_rational(rational(1, 12), b), x.a + e_delta * x.b, 0};
}

inline bool av_eq(const atom_value& x, const atom_value& y, const bigint& e_delta) {
    const atom_value nx = av_normalize(x, e_delta);
    const atom_value ny = av_normalize(y, e_delta);
    return nx.coef == ny.coef && nx.a == ny.a;
}

// Materializes coef * (eps/8)^a at a concrete eps; refuses astronomically
// large exponents instead of attempting them.
inline rational av_to_rational(const atom_value& x, const rational& eps, const bigint& e_delta) {
    const atom_value nx = av_normalize(x, e_delta);
    const std::int64_t a = detail::checked_small(nx.a, "av_to_rational");
    return nx.coef * pow_rational(eps / 8, a);
}

// Decides x >= y for every eps in [lo, hi] (both in (0, 1/2]).  Equal
// coefficients reduce to an exact exponent comparison; otherwise sound
// directed log2 bounds decide or report undecided.
inline tri av_cmp_ge(const atom_value& x, const atom_value& y, const bigint& e_delta,
                     const rational& eps_lo, const rational& eps_hi) {
    if (!(eps_lo > 0 && eps_lo <= eps_hi && eps_hi <= rational(1, 2)))
        throw std::domain_error("av_cmp_ge: eps bracket must sit inside (0, 1/2]");
    const atom_value nx = av_normalize(x, e_delta);
    const atom_value ny = av_normalize(y, e_delta);
    if (nx.coef == ny.coef) {
        // log(eps/8) < 0, so smaller exponents give larger values.
        return nx.a <= ny.a ? tri::yes : tri::no;
    }
    const bigint d = nx.a - ny.a;
    const rational r = nx.coef / ny.coef;
    if (d == 0) return r >= 1 ? tri::yes : tri::no;

    constexpr unsigned bits = 96;
    const rational lo8 = log2_bound(eps_lo / 8, bits, false);
    const rational hi8 = log2_bound(eps_hi / 8, bits, true);
    const rational term_min = d >= 0 ? rational(d) * lo8 : rational(d) * hi8;
    const rational term_max = d >= 0 ? rational(d) * hi8 : rational(d) * lo8;
    const rational min_lhs = log2_bound(r, bits, false) + term_min;
    const rational max_lhs = log2_bound(r, bits, true) + term_max;
    if (min_lhs >= 0) return tri::yes;
    if (max_lhs < 0) return tri::no;
    return tri::undecided;
}

// ---------------------------------------------------------------------------
// The cascade itself.  Indices follow the downward recurrences: families are
// stored in vectors of size q+1 with entries 1..q meaningful (index 0 holds
// the Delta_0 = Gamma_0 = 1 initializers).
// ---------------------------------------------------------------------------

struct cascade_params {
    int k = 0, q = 0;
    bigint n;
    rational p;

    std::int64_t t_lo = 0, t_hi = 0; // integer bracket of t = 2 sqrt(k log_{1/p} n)
    bool t_is_integer = false;
    rational eps_lo, eps_hi; // eps = p^t / 2 at the bracket ends

    bigint e_delta; // Delta = (eps/8)^e_delta

    std::vector<atom_value> alpha, delta, lambda, big_delta;
    std::vector<atom_value> beta, eta, gamma, big_gamma;
    std::vector<atom_value> kappa; // worst-case kappa_i, n folded into the coefficient

    // Closed-form identities, exact normal-form equality.
    bool id_alpha = false, id_delta = false, id_beta = false, id_eta = false, id_gamma = false;
    bool id_big_delta_product = false, id_big_gamma = false, id_lambda_eq_delta = false;

    // Inequality chains.
    tri delta_chain_1 = tri::undecided;  // Delta >= (eps/8)^{(4k+2)^q}
    tri delta_chain_2 = tri::undecided;  // (eps/8)^{(4k+2)^q} >= (eps/8)^{(k+2)^{2q}-2}
    tri delta_ge_k2q = tri::undecided;   // Delta >= (eps/8)^{(k+2)^{2q}-2}
    tri gamma_chain_1 = tri::undecided;  // Gamma >= (eps/8)^{(k+2)^{3q}}
    tri gamma_chain_2 = tri::undecided;  // (eps/8)^{(k+2)^{3q}} >= (eps/8)^{k^{6q}}
    tri gamma_ge_k6q = tri::undecided;   // Gamma >= (eps/8)^{k^{6q}}
    std::vector<tri> kappa_ge_gamma_n;   // kappa_i >= Gamma * n, entries 1..q
    tri link_eps_pow2 = tri::undecided;  // (eps/8)^{k^{6q}} >= 2^{-k^{18q}}
    bool link_tail_n_ge_k = false;       // n * 2^{-k^{18q}} >= k, exact
};

inline cascade_params make_cascade_params(int k, int q, const bigint& n, const rational& p) {
    if (k < 2 || q < 2) throw std::domain_error("cascade: need k >= 2 and q >= 2");
    if (n < 2) throw std::domain_error("cascade: need n >= 2");
    if (!(p > 0 && p < 1)) throw std::domain_error("cascade: need p in (0,1)");
    const bigint kq_pow = pow_bigint(k + 2, q);
    if (kq_pow > 200'000)
        throw std::overflow_error("cascade: closed-form exponents exceed materializable range");

    cascade_params cp;
    cp.k = k;
    cp.q = q;
    cp.n = n;
    cp.p = p;

    // t bracket: largest integer T with (1/p)^{T^2} <= n^{4k}.
    const bigint n4k = pow_bigint(n, 4 * k);
    const rational inv_p = rational(1) / p;
    std::int64_t t = 0;
    while (pow_rational(inv_p, (t + 1) * (t + 1)) <= rational(n4k)) {
        ++t;
        if (t > 100'000) throw std::overflow_error("cascade: t bracket search exceeded cap");
    }
    cp.t_lo = t;
    cp.t_is_integer = pow_rational(inv_p, t * t) == rational(n4k);
    cp.t_hi = cp.t_is_integer ? t : t + 1;
    cp.eps_lo = pow_rational(p, cp.t_hi) / 2;
    cp.eps_hi = pow_rational(p, cp.t_lo) / 2;

    const atom_value one{};
    const atom_value eps_atom{rational(8), 1, 0};    // eps = 8 * (eps/8)
    const atom_value delta_atom{rational(12), 0, 1}; // Delta = 12 * (Delta/12)

    // alpha / delta / lambda, downward from alpha_q = 1/2.
    cp.alpha.assign(static_cast<std::size_t>(q + 1), one);
    cp.delta.assign(static_cast<std::size_t>(q + 1), one);
    cp.lambda.assign(static_cast<std::size_t>(q + 1), one);
    cp.alpha[static_cast<std::size_t>(q)] = {rational(1, 2), 0, 0};
    for (int i = q; i >= 1; --i) {
        const auto ui = static_cast<std::size_t>(i);
        const atom_value base = av_scale(av_mul(eps_atom, cp.alpha[ui]), rational(1, 4));
        cp.delta[ui] = av_pow(base, 2 * k);
        cp.lambda[ui] = av_pow(base, 2 * k);
        if (i > 1) cp.alpha[ui - 1] = av_mul(cp.delta[ui], cp.alpha[ui]);
    }

    // Delta_i = delta_i * Delta_{i-1}^2 from Delta_0 = 1; e_delta is the
    // resulting pure (eps/8)-exponent of Delta = Delta_q.
    cp.big_delta.assign(static_cast<std::size_t>(q + 1), one);
    for (int i = 1; i <= q; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        cp.big_delta[ui] = av_mul(cp.delta[ui], av_pow(cp.big_delta[ui - 1], 2));
    }
    if (cp.big_delta[static_cast<std::size_t>(q)].coef != 1 ||
        cp.big_delta[static_cast<std::size_t>(q)].b != 0)
        throw std::logic_error("cascade: Delta did not normalize to a pure power of eps/8");
    cp.e_delta = cp.big_delta[static_cast<std::size_t>(q)].a;

    // beta / eta / gamma, downward from beta_q = 1/12, and Gamma_i upward.
    cp.beta.assign(static_cast<std::size_t>(q + 1), one);
    cp.eta.assign(static_cast<std::size_t>(q + 1), one);
    cp.gamma.assign(static_cast<std::size_t>(q + 1), one);
    cp.big_gamma.assign(static_cast<std::size_t>(q + 1), one);
    cp.beta[static_cast<std::size_t>(q)] = {rational(1, 12), 0, 0};
    for (int i = q; i >= 1; --i) {
        const auto ui = static_cast<std::size_t>(i);
        cp.eta[ui] = av_mul(cp.beta[ui], delta_atom);
        cp.gamma[ui] = av_pow(cp.eta[ui], k + 1);
        if (i > 1) cp.beta[ui - 1] = av_mul(cp.gamma[ui], cp.beta[ui]);
    }
    for (int i = 1; i <= q; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        cp.big_gamma[ui] = av_mul(cp.gamma[ui], cp.big_gamma[ui - 1]);
    }

    // Worst-case kappa_i = delta_i beta_i Delta_{i-1}^2 eta_i^k Gamma_{i-1} n,
    // substituting the cascade lower bounds for the data-dependent density
    // and interval length.
    cp.kappa.assign(static_cast<std::size_t>(q + 1), one);
    for (int i = 1; i <= q; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        atom_value kv = av_mul(cp.delta[ui], cp.beta[ui]);
        kv = av_mul(kv, av_pow(cp.big_delta[ui - 1], 2));
        kv = av_mul(kv, av_pow(cp.eta[ui], k));
        kv = av_mul(kv, cp.big_gamma[ui - 1]);
        cp.kappa[ui] = av_scale(kv, rational(n));
    }

    // Closed forms.
    const bigint E = cp.e_delta;
    bool id_a = true, id_d = true, id_b = true, id_e = true, id_g = true, id_l = true;
    for (int i = 1; i <= q; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        const std::int64_t j = q - i; // closed forms are written for index q - i
        const bigint p2k1 = pow_bigint(2 * k + 1, j);
        const bigint pk2 = pow_bigint(k + 2, j);
        id_d = id_d && av_eq(cp.delta[ui], {rational(1), 2 * k * p2k1, 0}, E);
        id_a = id_a && av_eq(cp.alpha[ui], {rational(1, 2), p2k1 - 1, 0}, E);
        id_b = id_b && av_eq(cp.beta[ui], {rational(1, 12), 0, pk2 - 1}, E);
        id_e = id_e && av_eq(cp.eta[ui], {rational(1), 0, pk2}, E);
        id_g = id_g && av_eq(cp.gamma[ui], {rational(1), 0, (k + 1) * pk2}, E);
        id_l = id_l && av_eq(cp.lambda[ui], cp.delta[ui], E);
    }
    cp.id_alpha = id_a;
    cp.id_delta = id_d;
    cp.id_beta = id_b;
    cp.id_eta = id_e;
    cp.id_gamma = id_g;
    cp.id_lambda_eq_delta = id_l;

    // Delta = prod_{i=0}^{q-1} (eps/8)^{2k(4k+2)^i} with the geometric-sum
    // closed form for the total exponent.
    bigint e_sum = 0;
    for (int i = 0; i < q; ++i) e_sum += 2 * k * pow_bigint(4 * k + 2, i);
    const bigint e_closed = 2 * k * (pow_bigint(4 * k + 2, q) - 1) / (4 * k + 1);
    cp.id_big_delta_product = (E == e_sum) && (E == e_closed);

    // Gamma = (Delta/12)^{(k+2)^q - 1}.
    cp.id_big_gamma =
        av_eq(cp.big_gamma[static_cast<std::size_t>(q)], {rational(1), 0, kq_pow - 1}, E);

    // Inequality chains.
    const atom_value big_gamma_q = cp.big_gamma[static_cast<std::size_t>(q)];
    const bigint p4k2 = pow_bigint(4 * k + 2, q);
    const bigint pk2_2q = pow_bigint(k + 2, 2 * q);
    const bigint pk2_3q = pow_bigint(k + 2, 3 * q);
    const bigint k6q = pow_bigint(k, 6 * q);
    auto cmp = [&](const atom_value& x, const atom_value& y) {
        return av_cmp_ge(x, y, E, cp.eps_lo, cp.eps_hi);
    };
    cp.delta_chain_1 = cmp(cp.big_delta[static_cast<std::size_t>(q)], {rational(1), p4k2, 0});
    cp.delta_chain_2 = cmp({rational(1), p4k2, 0}, {rational(1), pk2_2q - 2, 0});
    cp.delta_ge_k2q = cmp(cp.big_delta[static_cast<std::size_t>(q)], {rational(1), pk2_2q - 2, 0});
    cp.gamma_chain_1 = cmp(big_gamma_q, {rational(1), pk2_3q, 0});
    cp.gamma_chain_2 = cmp({rational(1), pk2_3q, 0}, {rational(1), k6q, 0});
    cp.gamma_ge_k6q = cmp(big_gamma_q, {rational(1), k6q, 0});

    cp.kappa_ge_gamma_n.assign(static_cast<std::size_t>(q + 1), tri::undecided);
    const atom_value gamma_n = av_scale(big_gamma_q, rational(n));
    for (int i = 1; i <= q; ++i)
        cp.kappa_ge_gamma_n[static_cast<std::size_t>(i)] =
            cmp(cp.kappa[static_cast<std::size_t>(i)], gamma_n);

    // (eps/8)^{k^{6q}} >= 2^{-k^{18q}}  iff  log2(8/eps) <= k^{12q}.
    {
        const bigint k12q = pow_bigint(k, 12 * q);
        constexpr unsigned bits = 96;
        const rational ub = -log2_bound(cp.eps_lo / 8, bits, false);
        const rational lb = -log2_bound(cp.eps_hi / 8, bits, true);
        if (ub <= rational(k12q)) cp.link_eps_pow2 = tri::yes;
        else if (lb > rational(k12q)) cp.link_eps_pow2 = tri::no;
        else cp.link_eps_pow2 = tri::undecided;
    }

    // n * 2^{-k^{18q}} >= k  iff  floor(n/k) >= 2^{k^{18q}}, decided on bit
    // length without materializing the power of two.
    {
        const bigint k18q = pow_bigint(k, 18 * q);
        const bigint nk = n / k;
        cp.link_tail_n_ge_k = nk >= 1 && bigint(boost::multiprecision::msb(nk)) >= k18q;
    }

    return cp;
}

// Lemma-style lambda with exponent 2h (the theorem instantiates h = k).
inline atom_value cascade_lambda_h(const cascade_params& cp, int i, int h) {
    if (i < 1 || i > cp.q) throw std::domain_error("cascade_lambda_h: index out of range");
    if (h < 1) throw std::domain_error("cascade_lambda_h: h must be positive");
    const atom_value eps_atom{rational(8), 1, 0};
    const atom_value base =
        av_scale(av_mul(eps_atom, cp.alpha[static_cast<std::size_t>(i)]), rational(1, 4));
    return av_pow(base, 2 * h);
}

} // namespace ramsey
