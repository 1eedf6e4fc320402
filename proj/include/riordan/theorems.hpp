#pragma once

#include <optional>
#include <string>
#include <utility>

#include "riordan/chebyshev.hpp"
#include "riordan/exp_riordan.hpp"
#include "riordan/laurent.hpp"
#include "riordan/riordan_array.hpp"
#include "riordan/standard_series.hpp"

namespace riordan {

// ---------------------------------------------------------------------------
// generalized palindromes: companion construction
// ---------------------------------------------------------------------------

enum class GfKind { ogf, egf };

struct CompanionResult {
    Series g;
    Series f;
    std::optional<Rat> darga_value;  // set when gamma is a generalized palindrome
    std::string path;                // "palindromic shortcut" or "general formula"
};

inline Series solve_gamma_ogf(const LaurentRational& gamma, int order) {
    return solve_fixpoint(
        [&gamma](const Series& g) {
            return add(Series::one(g.order() + 1), shift_up(eval_laurent_rational(gamma, g), 1));
        },
        Series::one(order), order);
}

inline Series solve_gamma_egf(const LaurentRational& gamma, int order) {
    return solve_fixpoint(
        [&gamma](const Series& g) {
            return exp_series(shift_up(eval_laurent_rational(gamma, g), 1).truncated(g.order() + 1));
        },
        Series::one(order), order);
}

// From g = 1 + z gamma(g) (ogf) or g = e^{z gamma(g)} (egf), the unique
// companion making (g, f) a pseudo-involution:
//   ogf: f = z gamma(g) / (g gamma(1/g)),   egf: f = z gamma(g) / gamma(1/g).
// When gamma is a generalized palindrome of darga d this collapses to
// f = z g^{d-1} (ogf) or f = z g^d (egf); both routes are computed and must
// agree.
inline CompanionResult companion_from_gamma(const LaurentRational& gamma, GfKind kind, int order) {
    CompanionResult res{Series::zero(order), Series::zero(order), std::nullopt, "general formula"};
    res.g = kind == GfKind::ogf ? solve_gamma_ogf(gamma, order) : solve_gamma_egf(gamma, order);
    Series num = eval_laurent_rational(gamma, res.g);
    Series rec = eval_laurent_rational(gamma, inverse_unit(res.g));
    Series den = kind == GfKind::ogf ? mul(res.g, rec) : rec;
    res.f = shift_up(div(num, den), 1).truncated(order);
    DargaResult dr = darga(gamma);
    if (dr.is_generalized_palindrome) {
        res.darga_value = dr.darga;
        long d = to_long(dr.darga);
        long e = kind == GfKind::ogf ? d - 1 : d;
        Series shortcut = shift_up(pow_int(res.g, e), 1).truncated(order);
        if (!equal_prefix(res.f, shortcut, shared_order(res.f, shortcut)))
            throw ConstructionCheckFailed("companion_from_gamma: general formula disagrees with z g^" +
                                          std::to_string(e));
        res.f = shortcut;
        res.path = "palindromic shortcut (darga " + dr.darga.str() + ")";
    }
    return res;
}

// ---------------------------------------------------------------------------
// the delta/D pipeline for B-functions (ordinary case)
// ---------------------------------------------------------------------------

// Rewrite a symmetric Laurent polynomial (coeff(e) == coeff(-e)) as a
// polynomial in w via z^j + z^{-j} - 2 = w p_{j-1}(w), where w = (z-1)^2/z.
inline Poly symmetric_laurent_to_w(const LaurentPoly& p) {
    Poly out = Poly::constant(p.coeff(0));
    for (int e = 1; e <= p.max_exp(); ++e) {
        Rat c = p.coeff(e);
        if (c != p.coeff(-e))
            throw NotGeneralizedPalindrome("symmetric_laurent_to_w: asymmetric coefficients at +-" +
                                           std::to_string(e));
        if (c == 0) continue;
        Poly basis = Poly::constant(2) + Poly::z() * p_poly(e - 1);
        out = out + c * basis;
    }
    return out;
}

// delta^2 as a power series in w, defined by delta^2((z-1)^2/z) = gamma^2/z^d.
// gamma^2/z^d has darga 0, so after symmetrizing numerator and denominator it
// is a ratio of polynomials in w.
inline Series delta_squared_from_gamma(const LaurentRational& gamma, int d, int order) {
    if (gamma_at_one(gamma) == 0)
        throw GammaVanishesAtOne("delta_squared_from_gamma: gamma(1) = 0");
    LaurentRational rho = (gamma * gamma) / LaurentRational(LaurentPoly::monomial(d, 1));
    const LaurentPoly& m = rho.den;
    int sigma = m.min_exp() + m.max_exp();
    LaurentPoly den_sym = (m * m.reciprocal()).shifted(-sigma);
    LaurentPoly num_sym = (rho.num * m.reciprocal()).shifted(-sigma);
    Poly pw_den = symmetric_laurent_to_w(den_sym);
    Poly pw_num = symmetric_laurent_to_w(num_sym);
    if (pw_den.coeff(0) == 0)
        throw GammaVanishesAtOne("delta_squared_from_gamma: denominator vanishes at z = 1");
    return div(pw_num.to_series(order), pw_den.to_series(order));
}

struct DResult {
    Series z_d_squared;       // zD^2 = comp. inverse of z/delta^2
    std::optional<Series> d;  // D itself, when its constant is a rational square
};

inline DResult d_from_delta_squared(const Series& delta_sq) {
    if (delta_sq[0] == 0)
        throw GammaVanishesAtOne("d_from_delta_squared: delta^2(0) = 0");
    int n = delta_sq.order();
    Series zd2 = comp_inverse(div(Series::z(n + 1), delta_sq));
    DResult res{zd2, std::nullopt};
    Series d2 = shift_down(zd2, 1);
    if (sqrt_exact(d2[0])) res.d = sqrt_series(d2);
    return res;
}

struct OgfBResult {
    Series z_b_squared;       // z B_h^2, always available
    std::optional<Series> b;  // B_h, when presentable over Q
    Rat darga_value;
    std::string path;
};

// B_h for the companion h = z g^{d-1} of g = 1 + z gamma(g):
// z B_h^2 = (z p_{|d-1|-1}) o (zD^2); B_h = 0 when d = 1.
inline OgfBResult b_function_via_ogf_theorem(const LaurentRational& gamma, int order) {
    DargaResult dr = darga(gamma);
    if (!dr.is_generalized_palindrome)
        throw NotGeneralizedPalindrome("b_function_via_ogf_theorem: gamma has no darga");
    long d = to_long(dr.darga);
    if (d == 1)
        return OgfBResult{Series::zero(order), Series::zero(order), dr.darga, "darga 1, B = 0"};
    int idx = d >= 2 ? static_cast<int>(d) - 2 : static_cast<int>(-d);
    Series delta_sq = delta_squared_from_gamma(gamma, static_cast<int>(d), order + 1);
    Series zd2 = d_from_delta_squared(delta_sq).z_d_squared;
    Series zp = shift_up(p_poly(idx).to_series(zd2.order()), 1);
    Series zb2 = compose(zp, zd2);
    OgfBResult res{zb2.truncated(std::min(order + 1, zb2.order())), std::nullopt, dr.darga,
                   "p_" + std::to_string(idx) + " of zD^2"};
    Series b2 = shift_down(res.z_b_squared, 1);
    if (b2.is_zero_prefix() || sqrt_exact(b2[*b2.valuation()])) res.b = sqrt_series(b2);
    return res;
}

// ---------------------------------------------------------------------------
// exponential case
// ---------------------------------------------------------------------------

struct EgfBResult {
    Series b;                  // B_h with [z^j] = beta_j / (2j+1)!
    std::vector<Rat> beta;     // beta_j = (2j+1)! b_j
    Rat darga_value;
};

// For g = e^{z gamma(g)} with gamma of darga d and h = z g^d:
// eps(z) = gamma(e^z) e^{-dz/2}, zE = comp. inverse of z/eps, and
// b_j = [z^{2j+1}] 2 sinh((d/2) zE).
inline EgfBResult b_function_via_egf_theorem(const LaurentRational& gamma, int order) {
    DargaResult dr = darga(gamma);
    if (!dr.is_generalized_palindrome)
        throw NotGeneralizedPalindrome("b_function_via_egf_theorem: gamma has no darga");
    long d = to_long(dr.darga);
    int m = 2 * order + 2;
    Series ez = exp_series(Series::z(m));
    Series eps = eval_laurent_rational(gamma, ez);
    eps = mul(eps, exp_series(scalar_mul(Rat(-d, 2), Series::z(m))));
    if (eps[0] == 0) throw GammaVanishesAtOne("b_function_via_egf_theorem: gamma(1) = 0");
    Series ze = comp_inverse(div(Series::z(m + 1), eps));
    Series arg = scalar_mul(Rat(d, 2), ze);
    Series y = sub(exp_series(arg), exp_series(negate(arg)));  // 2 sinh
    EgfBResult res{Series::zero(order), {}, dr.darga};
    for (int j = 0; 2 * j + 1 <= y.order(); ++j) {
        if (2 * j <= y.order() && y[2 * j] != 0)
            throw NotGeneralizedPalindrome("b_function_via_egf_theorem: 2 sinh((d/2)zE) not odd");
        if (j <= order) {
            res.b.set(j, y[2 * j + 1]);
            res.beta.push_back(y[2 * j + 1] * Rat(factorial(2 * j + 1)));
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// Twin Powers: (z B_h^2) o z^{2l+1} = (z P_l^2) o (z B_f^2)
// for h = z g^{2l+1} and f = z g(z^{2l+1})
// ---------------------------------------------------------------------------

enum class TwinDirection { bf_to_bh, bh_to_bf };

inline Series z_pl_squared(int l, int order) {
    Poly p = big_p_poly(l);
    return shift_up((p * p).to_series(order), 1).truncated(order);
}

inline Series twin_powers(TwinDirection dir, const Series& known_b, int l) {
    int q = 2 * l + 1;
    if (dir == TwinDirection::bf_to_bh) {
        Series zbf2 = shift_up(mul(known_b, known_b), 1);
        Series r = compose(z_pl_squared(l, zbf2.order()), zbf2);
        for (int n = 0; n <= r.order(); ++n)
            if (r[n] != 0 && n % q != 0)
                throw SupportViolation("twin_powers: exponent " + std::to_string(n) +
                                       " not divisible by " + std::to_string(q));
        Series zbh2(r.order() / q);
        for (int n = 0; n <= zbh2.order(); ++n) zbh2.set(n, r[n * q]);
        return sqrt_series(shift_down(zbh2, 1));
    }
    Series zbh2 = shift_up(mul(known_b, known_b), 1);
    Series aer = aerate_variable(zbh2, q);
    Series inv = comp_inverse(z_pl_squared(l, aer.order()));
    Series zbf2 = compose(inv, aer);
    return sqrt_series(shift_down(zbf2, 1));
}

struct BPair {
    Series z_bh_squared;
    std::optional<Series> bh;
    Series z_bf_squared;
    std::optional<Series> bf;
};

// From zD^2 alone: B_h = D P_l(zD^2) and B_f = z^l D(z^{2l+1}).
inline BPair bh_bf_via_d(const Series& z_d_squared, int l) {
    int n = z_d_squared.order();
    Series zp = shift_up((big_p_poly(l) * big_p_poly(l)).to_series(n), 1);
    Series zbh2 = compose(zp, z_d_squared);
    Series zbf2 = aerate_variable(z_d_squared, 2 * l + 1);
    BPair res{zbh2, std::nullopt, zbf2, std::nullopt};
    Series bh2 = shift_down(zbh2, 1);
    if (bh2.is_zero_prefix() || sqrt_exact(bh2[*bh2.valuation()])) res.bh = sqrt_series(bh2);
    Series bf2 = shift_down(zbf2, 1);
    if (bf2.is_zero_prefix() || sqrt_exact(bf2[*bf2.valuation()])) res.bf = sqrt_series(bf2);
    return res;
}

// ---------------------------------------------------------------------------
// doubled k-ary trees: B for h = z t_k^{k-1} as a Chebyshev-coefficient sum
// ---------------------------------------------------------------------------

// B = sum_{n=0}^{k-2} 2^{n+1} c_{k-2,n} T_k^{(k+n)/2}; empty sum for k = 1
inline Series double_root_b(int k, int order) {
    if (k < 1) throw BadParams("double_root_b: k must be >= 1");
    Series b = Series::zero(order);
    if (k == 1) return b;
    Series tk = kary_tree_series(k, order);
    for (int n = (k % 2 == 0) ? 0 : 1; n <= k - 2; n += 2) {
        Rat c = cheb_coeff(k - 2, n);
        if (c == 0) continue;
        c *= rat_pow(Rat(2), n + 1);
        b = add(b, scalar_mul(c, pow_int(tk, (k + n) / 2)));
    }
    return b;
}

// ---------------------------------------------------------------------------
// quadratic A-sequences: f = z(a + bf + cf^2), t = 1 + (b/a) f, h = zt
// ---------------------------------------------------------------------------

struct QuadResult {
    Series t;
    Series h;
    Series b;  // B_h = b C(acz)
};

inline QuadResult quad_b(const Rat& a, const Rat& b, const Rat& c, int order) {
    if (a == 0) throw BadParams("quad_b: a must be nonzero");
    Series f = solve_fixpoint(
        [&](const Series& x) {
            Series body = add(Series::constant(a, x.order()),
                              add(scalar_mul(b, x), scalar_mul(c, mul(x, x))));
            return shift_up(body, 1);
        },
        Series::zero(order), order);
    Series t = add(Series::one(order), scalar_mul(b / a, f));
    Series h = shift_up(t, 1);
    Series bfun = scalar_mul(b, compose(catalan_series(order), scalar_mul(a * c, Series::z(order))));
    BReport solved = b_function_from_f(h);
    Series direct = solved.b_series();
    if (!solved.clean() ||
        !equal_prefix(direct, bfun, std::min(direct.order(), bfun.order())))
        throw ConstructionCheckFailed("quad_b: extracted B differs from b*C(acz)");
    return QuadResult{t, h, bfun};
}

// ---------------------------------------------------------------------------
// pseudo-inverse and pseudo-conjugation
// ---------------------------------------------------------------------------

// hhat = (-z) o hbar o (-z)
inline Series pseudo_inverse(const Series& h) {
    return negate(negate_variable(comp_inverse(h)));
}

namespace detail {
inline std::pair<Series, Series> conjugate_pair(const Series& g, const Series& f, const Series& h,
                                                int order) {
    Series hhat = pseudo_inverse(h);
    Series gh = compose(g, h);
    Series fh = compose(hhat, compose(f, h));
    int m = std::min(order, shared_order(gh, fh));
    return {gh.truncated(m), fh.truncated(m)};
}
}  // namespace detail

// (g, f) -> (g o h, hhat o f o h); preserves being a pseudo-involution, and
// the result is checked rather than assumed
inline RiordanArray pseudo_conjugate(const RiordanArray& a, const Series& h) {
    auto [gh, fh] = detail::conjugate_pair(a.g, a.f, h, a.order());
    RiordanArray out(gh, fh);
    if (is_pseudo_involution(a, a.order()).pass) {
        PseudoReport rep = is_pseudo_involution(out, out.order());
        if (!rep.pass)
            throw ConstructionCheckFailed("pseudo_conjugate: conjugate failed the check: " + rep.detail);
    }
    return out;
}

inline ExpRiordanArray pseudo_conjugate(const ExpRiordanArray& a, const Series& h) {
    auto [gh, fh] = detail::conjugate_pair(a.g, a.f, h, a.order());
    ExpRiordanArray out(gh, fh);
    if (is_pseudo_involution(a, a.order()).pass) {
        PseudoReport rep = is_pseudo_involution(out, out.order());
        if (!rep.pass)
            throw ConstructionCheckFailed("pseudo_conjugate: conjugate failed the check: " + rep.detail);
    }
    return out;
}

// ---------------------------------------------------------------------------
// q-aeration of a k-Bell pseudo-involution (g, zg^k), p = k/q:
// (g(z^q), z g^p(z^q)), with the inverse relation checked; a pseudo-involution
// whenever q is odd
// ---------------------------------------------------------------------------

inline RiordanArray q_aerate(const Series& g, int k, int q, const Rat& p) {
    if (q < 1 || p * q != k) throw BadParams("q_aerate: need q >= 1 and p*q = k");
    Series gp = pow_rational(g, p);
    RiordanArray out(aerate_variable(g, q), shift_up(aerate_variable(gp, q), 1));
    // mirror = (g(-z^q), z g^p(-z^q)); must be the two-sided inverse
    RiordanArray mirror(aerate_variable(negate_variable(g), q),
                        shift_up(aerate_variable(negate_variable(gp), q), 1));
    RiordanArray prod = multiply(out, mirror);
    int m = prod.order();
    if (!equal_prefix(prod.g, Series::one(m), m) || !equal_prefix(prod.f, Series::z(m), m))
        throw ConstructionCheckFailed("q_aerate: inverse relation fails");
    if (q % 2 == 1) {
        PseudoReport rep = is_pseudo_involution(out, out.order());
        if (!rep.pass) throw ConstructionCheckFailed("q_aerate: " + rep.detail);
    }
    return out;
}

// ---------------------------------------------------------------------------
// the power-sum identity behind the Twin Powers proof
// ---------------------------------------------------------------------------

struct GirardWaringReport {
    bool pass;
    Rat lhs;
    Rat rhs;
};

// sum_j a_{lj} (uv)^{l-j} (u-v)^{2j+1} = u^{2l+1} - v^{2l+1}
inline GirardWaringReport girard_waring_check(int l, const Rat& u, const Rat& v) {
    Rat lhs = 0;
    for (int j = 0; j <= l; ++j)
        lhs += big_p_entry(l, j) * rat_pow(u * v, l - j) * rat_pow(u - v, 2 * j + 1);
    Rat rhs = rat_pow(u, 2 * l + 1) - rat_pow(v, 2 * l + 1);
    return {lhs == rhs, lhs, rhs};
}

// ---------------------------------------------------------------------------
// explicit one-shot formulas for zD^2 and zB_h^2 straight from gamma,
// realized in the shifted variable z = 1 + y (the inner function has a
// double root at y = 0, so its inverse lives in sqrt-chart t with t^2 = x)
// ---------------------------------------------------------------------------

struct ExplicitRoute {
    Series z_d_squared;
    Series z_bh_squared;
};

inline ExplicitRoute zd2_zbh2_explicit(const LaurentRational& gamma, int d, int order) {
    if (gamma_at_one(gamma) == 0) throw GammaVanishesAtOne("zd2_zbh2_explicit: gamma(1) = 0");
    // u(z) = z^{d-1}(z-1)^2 / gamma(z)^2 as a ratio of plain polynomials
    LaurentPoly zm1_sq = (LaurentPoly::z() - LaurentPoly::constant(1)).pow(2);
    LaurentRational u =
        LaurentRational(LaurentPoly::monomial(d - 1, 1) * zm1_sq * (gamma.den * gamma.den),
                        gamma.num * gamma.num);
    int lift = std::max(0, std::max(-u.num.min_exp(), -u.den.min_exp()));
    LaurentPoly nl = u.num.shifted(lift), dl = u.den.shifted(lift);
    auto to_poly = [](const LaurentPoly& p) {
        std::vector<Rat> c(static_cast<size_t>(p.max_exp()) + 1);
        for (int e = std::max(0, p.min_exp()); e <= p.max_exp(); ++e)
            c[static_cast<size_t>(e)] = p.coeff(e);
        return Poly(std::move(c));
    };
    int w = 2 * order + 4;
    Poly shift_1y({1, 1});  // z = 1 + y
    Series num_y = to_poly(nl).substitute(shift_1y).to_series(w);
    Series den_y = to_poly(dl).substitute(shift_1y).to_series(w);
    Series a = div(num_y, den_y);  // valuation 2 in y
    Series s = sqrt_series(a);     // branch with positive leading coefficient
    Series sbar = comp_inverse(s);
    Series zstar = add(Series::one(sbar.order()), sbar);  // in the t-chart, t^2 = x
    auto fold_even = [order](const Series& e, const char* what) {
        Series out(order);
        for (int n = 0; n <= e.order(); ++n) {
            if (n % 2 == 1 && e[n] != 0)
                throw NotGeneralizedPalindrome(std::string(what) + ": odd t-coefficient survives");
            if (n % 2 == 0 && n / 2 <= order) out.set(n / 2, e[n]);
        }
        return out;
    };
    Series zd2_t = div(mul(sbar, sbar), zstar);
    Series zbh2_t =
        sub(add(pow_int(zstar, d - 1), pow_int(zstar, 1 - d)),
            Series::constant(2, zstar.order()));
    return ExplicitRoute{fold_even(zd2_t, "zD^2"), fold_even(zbh2_t, "zB_h^2")};
}

}  // namespace riordan
