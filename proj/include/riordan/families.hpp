#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "riordan/theorems.hpp"

namespace riordan {

enum class ArrayKind { ordinary, exponential };

struct OeisTag {
    std::string id;
    int offset = 0;
    std::string note;  // which series the tag refers to
};

// A catalog entry: a named generating function with its pseudo-involutory
// companion, the defining palindrome when there is one, and the stated
// B-function when one is known in closed form.
struct FamilyInstance {
    std::string name;
    std::vector<std::pair<std::string, Rat>> params;
    ArrayKind kind = ArrayKind::ordinary;
    Series g;
    Series f;
    std::optional<Series> expected_b;
    std::optional<LaurentRational> gamma;
    std::vector<OeisTag> oeis;

    RiordanArray array() const { return RiordanArray(g, f); }
    ExpRiordanArray exp_array() const { return ExpRiordanArray(g, f); }
};

struct FamilyInfo {
    std::string name;
    std::string params;       // signature, e.g. "k (int >= 1)"
    std::string description;
    std::vector<std::string> oeis;
    std::vector<std::string> aliases;
};

using Params = std::map<std::string, Rat>;

namespace detail {

inline Rat get_param(const Params& p, const std::string& key, std::optional<Rat> def = {}) {
    auto it = p.find(key);
    if (it != p.end()) return it->second;
    if (def) return *def;
    throw BadParams("missing parameter '" + key + "'");
}

inline int get_int(const Params& p, const std::string& key, std::optional<int> def = {}) {
    auto it = p.find(key);
    if (it != p.end()) {
        if (!is_integer(it->second)) throw BadParams("parameter '" + key + "' must be an integer");
        return static_cast<int>(to_long(it->second));
    }
    if (def) return *def;
    throw BadParams("missing parameter '" + key + "'");
}

inline LaurentPoly lp_one_plus_z() { return LaurentPoly(0, {1, 1}); }
inline LaurentPoly lp_one_minus_z_plus_z2() { return LaurentPoly(0, {1, -1, 1}); }

// gamma = z^k (1-z+z^2)^n, the two-parameter palindrome behind several families
inline LaurentRational mgen_gamma(int k, int n) {
    LaurentRational q(lp_one_minus_z_plus_z2());
    return LaurentRational(LaurentPoly::monomial(k, 1)) * q.pow(n);
}

// T_j(x) substituted with x -> sign * z^q, as a series prefix
inline Series kary_subst(int j, int power, int q, bool neg, int order) {
    int base = order / q + 2;
    Series t = pow_int(kary_tree_series(j, base), power);
    Series a = aerate_variable(t, q);
    if (neg) a = negate_variable(a);
    return a.truncated(std::min(order, a.order()));
}

}  // namespace detail

inline const std::vector<FamilyInfo>& list_families() {
    static const std::vector<FamilyInfo> table = {
        {"pascal", "", "binomial coefficients, ((1/(1-z), z/(1-z))", {}, {}},
        {"kary", "k (int >= 0), a (rational, default 1)",
         "k-ary trees, (T_k(az), z T_k^{2k-1}(az))", {"A000108", "A000245"}, {}},
        {"catalan", "", "alias of kary k=2", {"A000108", "A000245"}, {}},
        {"central_binomial", "", "(B, zB^2) with B = (1-4z)^{-1/2}", {}, {}},
        {"motzkin", "", "planted Motzkin trees, (mt, z mt)", {"A086246", "A001006"}, {}},
        {"k_motzkin", "k (int >= 1)", "k-colored Motzkin, (1 + kz m_k, z(1 + kz m_k))",
         {"A002212"}, {}},
        {"rna", "", "secondary RNA structures, (g, zg)", {"A004148"}, {}},
        {"schroder", "a (rational, default 1)", "large Schroeder paths, (r(az), z r^2(az))",
         {"A006318", "A001003"}, {}},
        {"gen_schroder", "k (int >= 1)", "generalized Schroeder, (r_k, z r_k^{2k-2})",
         {"A027307"}, {}},
        {"double_root", "k (int >= 1)", "k-ary trees doubled at the root, (t_k, z t_k^{k-1})",
         {"A068875"}, {}},
        {"double_leaf", "k (int >= 1)", "k-ary trees doubled at the leaves, (u_k, z u_k^{k-1})",
         {"A025227"}, {}},
        {"quad", "a, b, c (rationals, a != 0)",
         "f = z(a + bf + cf^2), array (t, zt) with t = 1 + (b/a)f", {"A238113"}, {}},
        {"large_little", "a, b, c (rationals, a+b+c != 0)",
         "g = 1 + z(a + bg + cg^2) with t = 1 + ((b+2c)/(a+b+c))(g-1)", {}, {}},
        {"vk", "k (int)", "generalized Schroeder paths, (v_k, z v_k^k)", {}, {}},
        {"wk", "k (int > 0), d (int)", "1 + z w^{d-1} = (1-z) w^k, array (w, z w^{d-1})", {}, {}},
        {"m_gen", "k (int >= 1), n (int)",
         "g = 1 + z g^k (1-g+g^2)^n, array (g, z g^{2k+2n-1})", {}, {}},
        {"parity_rna", "k (int >= 1)", "modulo-k-matched noncrossing matchings",
         {"A106228", "A038629", "A109081", "A215067"}, {}},
        {"ct_pos", "n (int >= 0)", "(C(z T_n^{n-1}), z C^{2n+1}(z T_n^{n-1}))",
         {"A127632", "A153295", "A153396"}, {}},
        {"ct_neg", "n (int >= 1)", "(1/C(-z T_n^n), z/C^{2n-3}(-z T_n^n))",
         {"A166135", "A347953", "A069271", "A212072"}, {"basketball"}},
        {"f1_aerated", "n (int >= 0)", "Bell-subgroup aeration of ct_pos", {}, {}},
        {"f2_aerated", "n (int >= 2)", "Bell-subgroup aeration of ct_neg", {}, {}},
        {"increasing_trees", "c (rational != 0), d (odd int >= 1)",
         "(d+1)-ary increasing trees by leaves, f = z/(1-cz^d)^{1/d}", {"A007559"}, {}},
        {"fibonacci", "", "(F, (zC) o (F-1))", {"A344623", "A200031"}, {}},
        {"motzkin_companion", "", "(m, (m-1) C(z mt))", {"A001006"}, {}},
        {"two_m_minus_one", "", "(2m-1, (z mt) o (z mt))", {"A348197"}, {}},
        {"two_mt_minus_one", "", "(2mt-1, z(2mt-1)/(1+2z mt))", {"A348189"}, {}},
        {"exp_trees", "", "[T, zT^2] with T = e^{zT} (labeled rooted trees)",
         {"A000272", "A089946"}, {}},
        {"exp_forests", "", "[S, zS] with S = e^{z(1+S)} (2-colored leaves)",
         {"A349562", "A216857", "A038049", "A007106"}, {}},
        {"involutions", "", "[e^{z+z^2/2}, 1-sqrt(1-2z-z^2)]", {"A000085", "A182037"}, {}},
        {"bell", "", "[e^{e^z-1}, log(1/(2-e^z))]", {"A000110", "A000629"}, {}},
        {"bell_marked", "", "[e^{z e^z}, zS]", {"A000248", "A216857"}, {}},
    };
    return table;
}

inline FamilyInstance make_family(const std::string& name_in, const Params& params, int order);

namespace detail {

inline FamilyInstance build_family(const std::string& name, const Params& params, int order) {
    using LR = LaurentRational;
    using LP = LaurentPoly;
    FamilyInstance inst;
    inst.name = name;
    inst.g = Series::one(order);
    inst.f = Series::z(order);

    auto set_params = [&inst](std::initializer_list<std::pair<std::string, Rat>> ps) {
        inst.params.assign(ps.begin(), ps.end());
    };

    if (name == "pascal") {
        inst.g = geometric_series(order);
        inst.f = shift_up(inst.g, 1).truncated(order);
        inst.gamma = LR(LP::z());
        inst.expected_b = Series::one(order);
    } else if (name == "kary") {
        int k = get_int(params, "k");
        Rat a = get_param(params, "a", Rat(1));
        if (k < 0) throw BadParams("kary: k must be >= 0");
        Series base = kary_tree_series(k, order);
        inst.g = a == 1 ? base
                        : solve_fixpoint(
                              [&](const Series& g) {
                                  return add(Series::one(g.order() + 1),
                                             shift_up(scalar_mul(a, pow_int(g, k)), 1));
                              },
                              Series::one(order), order);
        inst.f = shift_up(pow_int(inst.g, 2 * k - 1), 1).truncated(order);
        inst.gamma = LR(LP::monomial(k, a));
        if (a == 1 && k >= 1) inst.expected_b = big_p_poly(k - 1).to_series(order);
        set_params({{"k", Rat(k)}, {"a", a}});
        if (k == 2 && a == 1) inst.oeis = {{"A000108", 0, "g"}, {"A000245", 0, "f"}};
    } else if (name == "central_binomial") {
        inst.g = central_binomial_series(order);
        inst.f = shift_up(pow_int(inst.g, 2), 1).truncated(order);
        inst.gamma = LR(LP::monomial(2, 4), lp_one_plus_z());
    } else if (name == "motzkin") {
        inst.g = planted_motzkin_series(order);
        inst.f = shift_up(inst.g, 1).truncated(order);
        inst.gamma = LR(lp_one_minus_z_plus_z2());
        inst.expected_b = catalan_series(order);
        inst.oeis = {{"A086246", 0, "g"}, {"A001006", 0, "(g-1)/z"}};
    } else if (name == "k_motzkin") {
        int k = get_int(params, "k");
        Series mk = k_motzkin_series(k, order);
        inst.g = add(Series::one(order), shift_up(scalar_mul(k, mk), 1).truncated(order));
        inst.f = shift_up(inst.g, 1).truncated(order);
        if (k != 0)
            inst.gamma = LR(LP::monomial(1, k)) +
                         LR(LP(0, {Rat(1, k), Rat(-2, k), Rat(1, k)}));
        inst.expected_b = scalar_mul(k, catalan_series(order));
        set_params({{"k", Rat(k)}});
        if (k == 3) inst.oeis = {{"A002212", 0, "m_k"}};
    } else if (name == "rna") {
        inst.g = rna_series(order);
        inst.f = shift_up(inst.g, 1).truncated(order);
        inst.oeis = {{"A004148", 0, "g"}};
    } else if (name == "schroder") {
        Rat a = get_param(params, "a", Rat(1));
        inst.g = a == 1 ? schroeder_series(order)
                        : solve_fixpoint(
                              [&](const Series& g) {
                                  return add(Series::one(g.order() + 1),
                                             shift_up(scalar_mul(a, add(g, mul(g, g))), 1));
                              },
                              Series::one(order), order);
        inst.f = shift_up(pow_int(inst.g, 2), 1).truncated(order);
        inst.gamma = LR(LP(1, {a, a}));
        if (a == 1) {
            inst.expected_b = scalar_mul(4, geometric_series(order));
            inst.oeis = {{"A006318", 0, "g"}, {"A001003", 0, "little Schroeder s"}};
        }
        set_params({{"a", a}});
    } else if (name == "gen_schroder") {
        int k = get_int(params, "k");
        if (k < 1) throw BadParams("gen_schroder: k must be >= 1");
        inst.g = gen_schroeder_series(k, order);
        inst.f = shift_up(pow_int(inst.g, 2 * k - 2), 1).truncated(order);
        inst.gamma = LR(LP(k - 1, {1, 1}));
        Series ratio = div(add(Series::one(order), Series::z(order)),
                           sub(Series::one(order), Series::z(order)));
        inst.expected_b = mul(scalar_mul(4, geometric_series(order)), cheb_u(k - 2).eval(ratio));
        set_params({{"k", Rat(k)}});
        if (k == 3) inst.oeis = {{"A027307", 0, "g"}};
    } else if (name == "double_root") {
        int k = get_int(params, "k");
        if (k < 1) throw BadParams("double_root: k must be >= 1");
        inst.g = doubled_root_series(k, order);
        inst.f = shift_up(pow_int(inst.g, k - 1), 1).truncated(order);
        std::vector<Rat> cs(static_cast<size_t>(k) + 1);
        for (int j = 0; j <= k; ++j)
            cs[static_cast<size_t>(j)] = Rat(binomial(k, j)) * rat_pow(Rat(2), 1 - k);
        inst.gamma = LR(LP(0, std::move(cs)));
        inst.expected_b = double_root_b(k, order);
        set_params({{"k", Rat(k)}});
        if (k == 2) inst.oeis = {{"A068875", 0, "g"}};
    } else if (name == "double_leaf") {
        int k = get_int(params, "k");
        if (k < 1) throw BadParams("double_leaf: k must be >= 1");
        inst.g = doubled_leaf_series(k, order);
        inst.f = shift_up(pow_int(inst.g, k - 1), 1).truncated(order);
        LP g0 = LP::constant(1) + LP::monomial(k, 1);
        inst.gamma = LR(g0);
        if (k == 2) {
            inst.expected_b = scalar_mul(
                2, compose(catalan_series(order), scalar_mul(2, Series::z(order))));
            inst.oeis = {{"A025227", 1, "g"}};
        }
        set_params({{"k", Rat(k)}});
    } else if (name == "quad") {
        Rat a = get_param(params, "a"), b = get_param(params, "b"), c = get_param(params, "c");
        QuadResult q = quad_b(a, b, c, order);
        inst.g = q.t;
        inst.f = q.h.truncated(order);
        inst.expected_b = q.b;
        if (b != 0)
            inst.gamma = LR(LP::monomial(1, b)) + LR(LP(0, {a * c / b, -2 * a * c / b, a * c / b}));
        set_params({{"a", a}, {"b", b}, {"c", c}});
        if (a == 2 && b == 3 && c == 1) inst.oeis = {{"A238113", 0, "g"}};
    } else if (name == "large_little") {
        Rat a = get_param(params, "a"), b = get_param(params, "b"), c = get_param(params, "c");
        if (a + b + c == 0) throw BadParams("large_little: a+b+c must be nonzero");
        QuadResult q = quad_b(a + b + c, b + 2 * c, c, order);
        inst.g = q.t;
        inst.f = q.h.truncated(order);
        inst.expected_b = q.b;
        if (b + 2 * c != 0) {
            Rat bb = b + 2 * c, aa = a + b + c;
            inst.gamma = LR(LP::monomial(1, bb)) +
                         LR(LP(0, {aa * c / bb, -2 * aa * c / bb, aa * c / bb}));
        }
        set_params({{"a", a}, {"b", b}, {"c", c}});
    } else if (name == "vk") {
        int k = get_int(params, "k");
        inst.g = v_series(k, order);
        inst.f = shift_up(pow_int(inst.g, k), 1).truncated(order);
        inst.gamma = LR(LP::z() + LP::monomial(k, 1));
        set_params({{"k", Rat(k)}});
    } else if (name == "wk") {
        int k = get_int(params, "k");
        int d = get_int(params, "d");
        if (k < 1) throw BadParams("wk: k must be positive");
        inst.g = w_series(k, d, order);
        inst.f = shift_up(pow_int(inst.g, d - 1), 1).truncated(order);
        std::vector<Rat> den(static_cast<size_t>(k), Rat(1));
        inst.gamma = LR(LP::monomial(d - 1, 1) + LP::monomial(k, 1), LP(0, std::move(den)));
        set_params({{"k", Rat(k)}, {"d", Rat(d)}});
    } else if (name == "m_gen") {
        int k = get_int(params, "k");
        int n = get_int(params, "n");
        if (k < 0 || k + n < 1) throw BadParams("m_gen: need k >= 0 and k+n >= 1");
        inst.g = mgen_series(k, n, order);
        inst.f = shift_up(pow_int(inst.g, 2 * k + 2 * n - 1), 1).truncated(order);
        inst.gamma = mgen_gamma(k, n);
        Series t2n_n = detail::kary_subst(2 * n, n, 1, false, order);
        Series zt = shift_up(detail::kary_subst(2 * n, 2 * n, 1, false, order), 1).truncated(order);
        inst.expected_b = mul(t2n_n, big_p_poly(k + n - 1).eval(zt));
        set_params({{"k", Rat(k)}, {"n", Rat(n)}});
    } else if (name == "parity_rna") {
        int k = get_int(params, "k");
        if (k < 1) throw BadParams("parity_rna: k must be >= 1");
        inst = build_family("m_gen", {{"k", Rat(k - 1)}, {"n", Rat(1)}}, order);
        inst.name = "parity_rna";
        inst.params = {{"k", Rat(k)}};
        if (k == 2)
            inst.oeis = {{"A106228", 0, "g"}, {"A038629", 0, "B"},
                         {"A109081", 0, "G0"}, {"A215067", 0, "interleave"}};
    } else if (name == "ct_pos") {
        int n = get_int(params, "n");
        if (n < 0) throw BadParams("ct_pos: n must be >= 0");
        Series inner = shift_up(detail::kary_subst(n, n - 1, 1, false, order), 1).truncated(order);
        inst.g = compose(catalan_series(order), inner);
        inst.f = shift_up(pow_int(inst.g, 2 * n + 1), 1).truncated(order);
        inst.gamma = mgen_gamma(2 * n, 1 - n);
        Series d = detail::kary_subst(2 * n - 1, n - 1, 1, true, order);
        Series zd2 = shift_up(detail::kary_subst(2 * n - 1, 2 * n - 2, 1, true, order), 1).truncated(order);
        inst.expected_b = mul(d, big_p_poly(n).eval(zd2));
        set_params({{"n", Rat(n)}});
        if (n == 2) inst.oeis = {{"A127632", 0, "g"}};
        if (n == 3) inst.oeis = {{"A153295", 0, "g"}};
        if (n == 4) inst.oeis = {{"A153396", 0, "g"}};
    } else if (name == "ct_neg") {
        int n = get_int(params, "n");
        if (n < 1) throw BadParams("ct_neg: n must be >= 1");
        Series inner = negate(shift_up(detail::kary_subst(n, n, 1, false, order), 1)).truncated(order);
        inst.g = inverse_unit(compose(catalan_series(order), inner));
        inst.f = shift_up(pow_int(inst.g, 2 * n - 3), 1).truncated(order);
        inst.gamma = mgen_gamma(-1, n);
        if (n >= 2) {
            Series d = detail::kary_subst(2 * n, n, 1, false, order);
            Series zd2 = shift_up(detail::kary_subst(2 * n, 2 * n, 1, false, order), 1).truncated(order);
            inst.expected_b = mul(d, big_p_poly(n - 2).eval(zd2));
        }
        set_params({{"n", Rat(n)}});
        if (n == 2) inst.oeis = {{"A166135", 0, "g"}, {"A069271", 0, "B"}};
        if (n == 3) inst.oeis = {{"A347953", 0, "g"}, {"A212072", 1, "B"}};
    } else if (name == "f1_aerated") {
        int n = get_int(params, "n");
        if (n < 0) throw BadParams("f1_aerated: n must be >= 0");
        int q = 2 * n + 1;
        FamilyInstance base = build_family("ct_pos", {{"n", Rat(n)}}, order / q + 2);
        inst.g = aerate_variable(base.g, q).truncated(order);
        inst.f = shift_up(inst.g, 1).truncated(order);
        inst.expected_b =
            shift_up(detail::kary_subst(2 * n - 1, n - 1, q, true, order - n), n).truncated(order);
        set_params({{"n", Rat(n)}});
    } else if (name == "f2_aerated") {
        int n = get_int(params, "n");
        if (n < 2) throw BadParams("f2_aerated: n must be >= 2");
        int q = 2 * n - 3;
        FamilyInstance base = build_family("ct_neg", {{"n", Rat(n)}}, order / q + 2);
        inst.g = aerate_variable(base.g, q).truncated(order);
        inst.f = shift_up(inst.g, 1).truncated(order);
        inst.expected_b =
            shift_up(detail::kary_subst(2 * n, n, q, false, order - (n - 2)), n - 2).truncated(order);
        set_params({{"n", Rat(n)}});
    } else if (name == "increasing_trees") {
        Rat c = get_param(params, "c");
        int d = get_int(params, "d");
        if (d < 1 || d % 2 == 0) throw BadParams("increasing_trees: d must be odd and >= 1");
        if (c == 0) throw BadParams("increasing_trees: c must be nonzero");
        int base_order = order / d + 2;
        Series gbase = pow_rational(
            sub(Series::one(base_order), scalar_mul(c, Series::z(base_order))), Rat(-1, d));
        inst.g = aerate_variable(gbase, d).truncated(order);
        inst.f = shift_up(inst.g, 1).truncated(order);
        int l = (d - 1) / 2;
        Series bh = Series::constant(c, order);
        inst.expected_b = twin_powers(TwinDirection::bh_to_bf, bh, l).truncated(order);
        set_params({{"c", c}, {"d", Rat(d)}});
        if (c == 3 && d == 3) inst.oeis = {{"A007559", 0, "f, EGF view per 3 leaves"}};
    } else if (name == "fibonacci") {
        RiordanArray seed(geometric_series(order), shift_up(geometric_series(order), 1).truncated(order));
        Series h = add(Series::z(order), shift_up(Series::z(order), 1).truncated(order));
        RiordanArray conj = pseudo_conjugate(seed, h);
        inst.g = conj.g;
        inst.f = conj.f;
        Series disc(order);
        disc.set(0, 1);
        if (order >= 1) disc.set(1, -10);
        if (order >= 2) disc.set(2, 5);
        inst.expected_b = shift_down(
            sub(add(Series::one(order), Series::z(order)), sqrt_series(disc)), 1);
        inst.expected_b = scalar_mul(Rat(1, 2), *inst.expected_b);
        inst.oeis = {{"A344623", 0, "f"}, {"A200031", 0, "B"}};
    } else if (name == "motzkin_companion") {
        RiordanArray seed(geometric_series(order), shift_up(geometric_series(order), 1).truncated(order));
        Series h = shift_up(planted_motzkin_series(order), 1).truncated(order);
        RiordanArray conj = pseudo_conjugate(seed, h);
        inst.g = conj.g;
        inst.f = conj.f;
        inst.oeis = {{"A001006", 0, "g"}};
    } else if (name == "two_m_minus_one") {
        Series one = Series::one(order), zz = Series::z(order);
        RiordanArray seed(div(add(one, zz), sub(one, zz)), zz);
        Series h = shift_up(planted_motzkin_series(order), 1).truncated(order);
        RiordanArray conj = pseudo_conjugate(seed, h);
        inst.g = conj.g;
        inst.f = conj.f;
        inst.oeis = {{"A348197", 0, "f"}};
    } else if (name == "two_mt_minus_one") {
        Series t2 = doubled_root_series(2, order);
        RiordanArray seed(t2, shift_up(t2, 1).truncated(order));
        Series h = div(Series::z(order), add(Series::one(order), Series::z(order)));
        RiordanArray conj = pseudo_conjugate(seed, h);
        inst.g = conj.g;
        inst.f = conj.f;
        inst.oeis = {{"A348189", 0, "f"}};
    } else if (name == "exp_trees") {
        inst.kind = ArrayKind::exponential;
        inst.g = labeled_trees_egf(order);
        inst.f = shift_up(pow_int(inst.g, 2), 1).truncated(order);
        inst.gamma = LR(LP::z());
        Series b(order);
        for (int j = 0; j <= order; ++j) b.set(j, Rat(2, factorial(2 * j + 1)));
        inst.expected_b = b;
        inst.oeis = {{"A000272", 0, "g counts"}, {"A089946", 0, "f counts, shifted"}};
    } else if (name == "exp_forests") {
        inst.kind = ArrayKind::exponential;
        inst.g = labeled_trees_2col_egf(order);
        inst.f = shift_up(inst.g, 1).truncated(order);
        inst.gamma = LR(lp_one_plus_z());
        Series b(order);
        for (int j = 0; j <= order; ++j) {
            Rat beta = 2;
            if (j >= 1) {
                beta = 0;
                for (int i = 0; i <= j; ++i)
                    beta += Rat(binomial(2 * j + 2, i)) * rat_pow(Rat(j + 1 - i), 2 * j);
            }
            b.set(j, beta / Rat(factorial(2 * j + 1)));
        }
        inst.expected_b = b;
        inst.oeis = {{"A349562", 0, "g counts"},
                     {"A216857", 1, "f counts"},
                     {"A038049", 1, "f counts"},
                     {"A007106", 1, "beta/2"}};
    } else if (name == "involutions") {
        inst.kind = ArrayKind::exponential;
        ExpRiordanArray seed(exp_series(Series::z(order)), Series::z(order));
        Series h = add(Series::z(order), scalar_mul(Rat(1, 2), shift_up(Series::z(order), 1).truncated(order)));
        ExpRiordanArray conj = pseudo_conjugate(seed, h);
        inst.g = conj.g;
        inst.f = conj.f;
        inst.oeis = {{"A000085", 0, "g counts"}, {"A182037", 1, "f counts"}};
    } else if (name == "bell") {
        inst.kind = ArrayKind::exponential;
        ExpRiordanArray seed(exp_series(Series::z(order)), Series::z(order));
        Series h = sub(exp_series(Series::z(order)), Series::one(order));
        ExpRiordanArray conj = pseudo_conjugate(seed, h);
        inst.g = conj.g;
        inst.f = conj.f;
        inst.oeis = {{"A000110", 0, "g counts"}, {"A000629", 1, "f counts"}};
    } else if (name == "bell_marked") {
        inst.kind = ArrayKind::exponential;
        ExpRiordanArray seed(exp_series(Series::z(order)), Series::z(order));
        Series h = mul(Series::z(order), exp_series(Series::z(order)));
        ExpRiordanArray conj = pseudo_conjugate(seed, h);
        inst.g = conj.g;
        inst.f = conj.f;
        inst.oeis = {{"A000248", 0, "g counts"}, {"A216857", 1, "f counts"}};
    } else {
        throw UnknownFamily("unknown family '" + name + "'");
    }
    return inst;
}

}  // namespace detail

inline FamilyInstance make_family(const std::string& name_in, const Params& params, int order) {
    std::string name = name_in;
    Params p = params;
    if (name == "catalan") {
        name = "kary";
        p["k"] = 2;
        p.emplace("a", Rat(1));
    } else if (name == "basketball") {
        name = "ct_neg";
        p["n"] = 2;
    }
    FamilyInstance inst = detail::build_family(name, p, order);
    inst.name = name_in;

    PseudoReport rep = pseudo_involution_check(inst.g, inst.f, shared_order(inst.g, inst.f));
    if (!rep.pass)
        throw ConstructionCheckFailed("make_family(" + name_in + "): " + rep.detail);
    if (inst.expected_b) {
        BReport br = b_function_from_f(inst.f);
        if (!br.clean())
            throw ConstructionCheckFailed("make_family(" + name_in +
                                          "): B-relation has residuals");
        Series got = br.b_series();
        int m = std::min(got.order(), inst.expected_b->order());
        if (!equal_prefix(got, *inst.expected_b, m))
            throw ConstructionCheckFailed("make_family(" + name_in +
                                          "): extracted B differs from the stated one");
    }
    return inst;
}

}  // namespace riordan
