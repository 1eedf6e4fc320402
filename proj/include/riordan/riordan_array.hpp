#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "riordan/series.hpp"
#include "riordan/tri_matrix.hpp"

namespace riordan {

// Ordinary Riordan array (g, f): the k-th column of the realized matrix has
// ordinary generating function g*f^k. Normalization: g(0) = 1, [z^1]f = +-1.
struct RiordanArray {
    Series g;
    Series f;

    RiordanArray(Series g_, Series f_) : g(std::move(g_)), f(std::move(f_)) {
        if (g[0] != 1) throw std::invalid_argument("RiordanArray: g(0) must be 1");
        auto v = f.valuation();
        if (!v || *v != 1 || (f[1] != 1 && f[1] != -1))
            throw std::invalid_argument("RiordanArray: f must have valuation 1 and f'(0) = +-1");
    }

    int order() const { return shared_order(g, f); }
};

// entry (n,k) = [z^n] g*f^k, realized column by column
inline TriMatrix build_matrix_from_gf(const Series& g, const Series& f, int size) {
    if (size > shared_order(g, f) + 1)
        throw InsufficientTruncation("build_matrix: size " + std::to_string(size) +
                                     " exceeds truncation order + 1");
    std::vector<std::vector<Rat>> rows(static_cast<size_t>(size));
    for (int n = 0; n < size; ++n) rows[static_cast<size_t>(n)].resize(static_cast<size_t>(n) + 1);
    Series col = g;
    for (int k = 0; k < size; ++k) {
        for (int n = k; n < size; ++n) rows[static_cast<size_t>(n)][static_cast<size_t>(k)] = col[n];
        if (k + 1 < size) col = mul(col, f);
    }
    return TriMatrix(std::move(rows));
}

inline TriMatrix build_matrix(const RiordanArray& a, int size) {
    return build_matrix_from_gf(a.g, a.f, size);
}

// (g, f) * (G, F) = (g * (G o f), F o f)
inline RiordanArray multiply(const RiordanArray& a, const RiordanArray& b) {
    return RiordanArray(mul(a.g, compose(b.g, a.f)), compose(b.f, a.f));
}

// (g, f)^{-1} = (1 / (g o fbar), fbar)
inline RiordanArray inverse(const RiordanArray& a) {
    Series fbar = comp_inverse(a.f);
    return RiordanArray(inverse_unit(compose(a.g, fbar)), fbar);
}

inline RiordanArray identity_array(int order) {
    return RiordanArray(Series::one(order), Series::z(order));
}

// fundamental action on a column generating function: g * (h o f)
inline Series apply_ftra(const RiordanArray& a, const Series& h) {
    return mul(a.g, compose(h, a.f));
}

// A_f = z / fbar
inline Series a_sequence(const RiordanArray& a) {
    Series fbar = comp_inverse(a.f);
    return div(Series::z(fbar.order() + 1), fbar);
}

// Z = ((g - g(0)) / (z g)) o fbar
inline Series z_sequence(const RiordanArray& a) {
    Series fbar = comp_inverse(a.f);
    Series num = sub(a.g, Series::one(a.g.order()));
    Series zg = shift_up(a.g, 1);
    return compose(div(num, zg), fbar);
}

struct PseudoReport {
    bool pass = false;
    std::optional<int> first_failure;  // order of the first failing coefficient
    std::string detail;
};

// (g, f) is a pseudo-involution iff g * (g o (-f)) = 1 and fbar = -f(-z).
inline PseudoReport pseudo_involution_check(const Series& g, const Series& f, int order) {
    PseudoReport rep;
    if (order > shared_order(g, f))
        throw InsufficientTruncation("pseudo_involution_check: order exceeds truncation");
    auto v = f.valuation();
    if (!v || *v != 1) {
        rep.detail = "f does not have valuation 1";
        rep.first_failure = v ? *v : 0;
        return rep;
    }
    Series lhs = mul(g, compose(g, negate(f)));
    for (int n = 0; n <= std::min(order, lhs.order()); ++n) {
        if (lhs[n] != (n == 0 ? Rat(1) : Rat(0))) {
            rep.first_failure = n;
            rep.detail = "g * (g o (-f)) differs from 1 at order " + std::to_string(n);
            return rep;
        }
    }
    // fbar = -f(-z)  <=>  (-f(-z)) o f = z
    Series cand = negate(negate_variable(f));
    Series comp = compose(cand, f);
    for (int n = 0; n <= std::min(order, comp.order()); ++n) {
        if (comp[n] != (n == 1 ? Rat(1) : Rat(0))) {
            rep.first_failure = n;
            rep.detail = "f is not pseudo-involutory: (-f(-z)) o f differs from z at order " +
                         std::to_string(n);
            return rep;
        }
    }
    rep.pass = true;
    return rep;
}

inline PseudoReport is_pseudo_involution(const RiordanArray& a, int order) {
    return pseudo_involution_check(a.g, a.f, order);
}

// Extracted B-sequence together with the record of which orders of the
// defining relation f - z = (zB) o (zf) were verified. Even orders determine
// b_{(m-2)/2}; odd orders are consistency checks whose failures are recorded
// in residual_orders (a true pseudo-involutory f leaves it empty).
struct BReport {
    std::vector<Rat> b;
    int verified_order = 0;
    std::vector<int> residual_orders;

    bool clean() const { return residual_orders.empty(); }

    Series b_series() const {
        Series s(static_cast<int>(b.size()) - 1);
        for (size_t j = 0; j < b.size(); ++j) s.set(static_cast<int>(j), b[j]);
        return s;
    }
};

inline BReport b_function_from_f(const Series& f) {
    auto v = f.valuation();
    if (!v || *v != 1 || f[1] != 1)
        throw std::invalid_argument("b_function_from_f: need valuation 1 and [z^1]f = 1");
    int n = f.order();
    BReport rep;
    rep.verified_order = n;
    Series w = shift_up(f, 1).truncated(n);  // zf, [z^2] = 1
    Series target = sub(f, Series::z(n));    // f - z
    Series acc = Series::zero(n);
    Series wpow = Series::one(n);
    int jmax = (n - 2) / 2;
    rep.b.reserve(static_cast<size_t>(jmax) + 1);
    for (int m = 2; m <= n; ++m) {
        if (m % 2 == 0) {
            wpow = mul(wpow, w);  // w^{m/2}, valuation m with leading coefficient 1
            Rat bj = target[m] - acc[m];
            rep.b.push_back(bj);
            acc = add(acc, scalar_mul(bj, wpow));
        } else if (target[m] != acc[m]) {
            rep.residual_orders.push_back(m);
        }
    }
    return rep;
}

struct RecurrenceReport {
    bool pass = true;
    std::optional<std::pair<int, int>> first_failure;  // (n+1, k+1) cell that failed
};

// d_{n+1,k+1} = d_{n,k} + sum_j b_j d_{n-j,k+j+1} over all realized entries
inline RecurrenceReport verify_b_recurrence(const TriMatrix& m, std::span<const Rat> b) {
    RecurrenceReport rep;
    for (int n = 0; n + 1 < m.size(); ++n) {
        for (int k = 0; k <= n; ++k) {
            Rat rhs = m.entry(n, k);
            for (int j = 0; n - j >= 0; ++j) {
                if (n - j < k + j + 1) break;  // below the diagonal, all further terms vanish
                if (j >= static_cast<int>(b.size()))
                    throw std::invalid_argument("verify_b_recurrence: b-sequence too short for size");
                rhs += b[static_cast<size_t>(j)] * m.entry(n - j, k + j + 1);
            }
            if (m.entry(n + 1, k + 1) != rhs) {
                rep.pass = false;
                rep.first_failure = {n + 1, k + 1};
                return rep;
            }
        }
    }
    return rep;
}

// k with f = z*g^k to truncation, searched over |k| <= bound
inline std::optional<int> detect_k_bell(const RiordanArray& a, int bound = -1) {
    int n = a.order();
    if (bound < 0) bound = 2 * n;
    Series zs = Series::z(n);
    for (int mag = 0; mag <= bound; ++mag) {
        for (int sign : {1, -1}) {
            int k = sign * mag;
            Series cand = shift_up(pow_int(a.g.truncated(n), k), 1).truncated(n);
            if (equal_prefix(cand, a.f.truncated(n), n)) return k;
            if (mag == 0) break;
        }
    }
    return std::nullopt;
}

}  // namespace riordan
