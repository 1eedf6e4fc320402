#pragma once

#include "riordan/series.hpp"

namespace riordan {

// The named generating functions the catalog and tests keep reaching for.
// Each is solved from its defining functional equation.

// C = 1 + zC^2
inline Series catalan_series(int order) {
    return solve_fixpoint(
        [](const Series& g) { return add(Series::one(g.order() + 1), shift_up(mul(g, g), 1)); },
        Series::one(order), order);
}

// T_k = 1 + z T_k^k for k >= 1; T_k = 1 / T_{1-k}(-z) for k <= 0
inline Series kary_tree_series(int k, int order) {
    if (k <= 0) return inverse_unit(negate_variable(kary_tree_series(1 - k, order)));
    return solve_fixpoint(
        [k](const Series& g) {
            return add(Series::one(g.order() + 1), shift_up(pow_int(g, k), 1));
        },
        Series::one(order), order);
}

// m_k = 1 + k z m_k + z^2 m_k^2 (Motzkin for k = 1)
inline Series k_motzkin_series(int k, int order) {
    return solve_fixpoint(
        [k](const Series& g) {
            return add(Series::one(g.order() + 2),
                       add(shift_up(scalar_mul(k, g), 1), shift_up(mul(g, g), 2)));
        },
        Series::one(order), order);
}

inline Series motzkin_series(int order) { return k_motzkin_series(1, order); }

// mt = 1 + z m, equivalently mt = 1 + z(1 - mt + mt^2)
inline Series planted_motzkin_series(int order) {
    return add(Series::one(order), shift_up(motzkin_series(order), 1)).truncated(order);
}

// r = 1 + z(r + r^2), large Schroeder numbers
inline Series schroeder_series(int order) {
    return solve_fixpoint(
        [](const Series& g) {
            return add(Series::one(g.order() + 1), shift_up(add(g, mul(g, g)), 1));
        },
        Series::one(order), order);
}

// s = 1/(1 - zr), little Schroeder numbers
inline Series schroeder_little_series(int order) {
    Series r = schroeder_series(order);
    return inverse_unit(sub(Series::one(order), shift_up(r, 1).truncated(order)));
}

// r_k = 1 + z(r_k^{k-1} + r_k^k)
inline Series gen_schroeder_series(int k, int order) {
    return solve_fixpoint(
        [k](const Series& g) {
            return add(Series::one(g.order() + 1),
                       shift_up(add(pow_int(g, k - 1), pow_int(g, k)), 1));
        },
        Series::one(order), order);
}

// t_k = 2 T_k - 1, doubled-root k-ary trees
inline Series doubled_root_series(int k, int order) {
    return sub(scalar_mul(2, kary_tree_series(k, order)), Series::one(order));
}

// u_k = 1 + z(1 + u_k^k), doubled-leaf k-ary trees
inline Series doubled_leaf_series(int k, int order) {
    return solve_fixpoint(
        [k](const Series& g) {
            return add(Series::one(g.order() + 1),
                       shift_up(add(Series::one(g.order()), pow_int(g, k)), 1));
        },
        Series::one(order), order);
}

// v_k = 1 + z(v_k + v_k^k) for k >= 1; v_{-k} = 1 / u_{k+1}(-z) for k >= 0
inline Series v_series(int k, int order) {
    if (k < 1) return inverse_unit(negate_variable(doubled_leaf_series(1 - k, order)));
    return solve_fixpoint(
        [k](const Series& g) {
            return add(Series::one(g.order() + 1), shift_up(add(g, pow_int(g, k)), 1));
        },
        Series::one(order), order);
}

// w with 1 + z w^{d-1} = (1-z) w^k, solved as
// w = 1 + z (w^{d-1} + w^k) / (1 + w + ... + w^{k-1}), k > 0
inline Series w_series(int k, int d, int order) {
    return solve_fixpoint(
        [k, d](const Series& g) {
            Series num = add(pow_int(g, d - 1), pow_int(g, k));
            Series den = Series::zero(g.order());
            for (int j = 0; j < k; ++j) den = add(den, pow_int(g, j));
            return add(Series::one(g.order() + 1), shift_up(div(num, den), 1));
        },
        Series::one(order), order);
}

// g = 1 + z g^k (1 - g + g^2)^n, n may be negative
inline Series mgen_series(int k, int n, int order) {
    return solve_fixpoint(
        [k, n](const Series& g) {
            Series q = add(sub(Series::one(g.order()), g), mul(g, g));
            return add(Series::one(g.order() + 1), shift_up(mul(pow_int(g, k), pow_int(q, n)), 1));
        },
        Series::one(order), order);
}

// g = 1 + zg + z^2 g(g-1), secondary RNA structures
inline Series rna_series(int order) {
    return solve_fixpoint(
        [](const Series& g) {
            return add(Series::one(g.order() + 2),
                       add(shift_up(g, 1), shift_up(mul(g, sub(g, Series::one(g.order()))), 2)));
        },
        Series::one(order), order);
}

// central binomial coefficients, (1-4z)^{-1/2}
inline Series central_binomial_series(int order) {
    return pow_rational(sub(Series::one(order), scalar_mul(4, Series::z(order))), Rat(-1, 2));
}

// 1/(1 - z - z^2), Fibonacci numbers
inline Series fibonacci_series(int order) {
    Series den(order);
    den.set(0, 1);
    if (order >= 1) den.set(1, -1);
    if (order >= 2) den.set(2, -1);
    return inverse_unit(den);
}

// T = e^{zT}, rooted labeled trees (EGF, stored as plain coefficients)
inline Series labeled_trees_egf(int order) {
    return solve_fixpoint([](const Series& g) { return exp_series(shift_up(g, 1)); },
                          Series::one(order), order);
}

// S = e^{z(1+S)}, rooted labeled trees with 2-colored leaves
inline Series labeled_trees_2col_egf(int order) {
    return solve_fixpoint(
        [](const Series& g) {
            return exp_series(shift_up(add(Series::one(g.order()), g), 1));
        },
        Series::one(order), order);
}

// 1/(1 - z)
inline Series geometric_series(int order) {
    return inverse_unit(sub(Series::one(order), Series::z(order)));
}

// integer-coefficient view of an EGF prefix: n -> n! * [z^n]
inline Series egf_counts(const Series& a) {
    Series r(a.order());
    Int nf = 1;
    for (int n = 0; n <= a.order(); ++n) {
        if (n > 0) nf *= n;
        r.set(n, a[n] * Rat(nf));
    }
    return r;
}

}  // namespace riordan
