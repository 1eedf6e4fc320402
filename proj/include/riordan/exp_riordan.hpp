#pragma once

#include <span>
#include <vector>

#include "riordan/riordan_array.hpp"

namespace riordan {

// Exponential Riordan array [g, f]. Both components are stored as ordinary
// coefficient prefixes of the EGF (coefficients of z^n, not of z^n/n!);
// factorials enter only when the matrix is realized.
struct ExpRiordanArray {
    Series g;
    Series f;

    ExpRiordanArray(Series g_, Series f_) : g(std::move(g_)), f(std::move(f_)) {
        if (g[0] != 1) throw std::invalid_argument("ExpRiordanArray: g(0) must be 1");
        auto v = f.valuation();
        if (!v || *v != 1 || (f[1] != 1 && f[1] != -1))
            throw std::invalid_argument("ExpRiordanArray: f must have valuation 1 and f'(0) = +-1");
    }

    int order() const { return shared_order(g, f); }
};

// a_{n,k} = (n!/k!) [z^n] (g f^k)
inline TriMatrix build_exp_matrix(const ExpRiordanArray& e, int size) {
    TriMatrix d = build_matrix_from_gf(e.g, e.f, size);
    for (int n = 0; n < size; ++n) {
        Int nf = factorial(n);
        for (int k = 0; k <= n; ++k)
            d.rows()[static_cast<size_t>(n)][static_cast<size_t>(k)] *= Rat(nf, factorial(k));
    }
    return d;
}

// reduced array, alpha_{n,k} = a_{n,k} / binomial(n,k)
struct ReducedArray {
    TriMatrix alpha;

    int size() const { return alpha.size(); }
    Rat entry(int n, int k) const { return alpha.entry(n, k); }
};

inline ReducedArray reduce(const ExpRiordanArray& e, int size) {
    TriMatrix a = build_exp_matrix(e, size);
    for (int n = 0; n < size; ++n)
        for (int k = 0; k <= n; ++k)
            a.rows()[static_cast<size_t>(n)][static_cast<size_t>(k)] /= Rat(binomial(n, k));
    return ReducedArray{std::move(a)};
}

// beta_j = (2j+1)! b_j where b is the ordinary B-sequence of f
struct BetaReport {
    std::vector<Rat> beta;
    int verified_order = 0;
    std::vector<int> residual_orders;

    bool clean() const { return residual_orders.empty(); }
};

inline BetaReport beta_sequence(const Series& f) {
    BReport b = b_function_from_f(f);
    BetaReport rep;
    rep.verified_order = b.verified_order;
    rep.residual_orders = b.residual_orders;
    rep.beta.reserve(b.b.size());
    for (size_t j = 0; j < b.b.size(); ++j)
        rep.beta.push_back(b.b[j] * Rat(factorial(2 * static_cast<int>(j) + 1)));
    return rep;
}

// alpha_{n+1,k+1} = alpha_{n,k} + sum_j C(n-k, 2j+1) beta_j alpha_{n-j,k+j+1}
inline RecurrenceReport verify_reduced_recurrence(const ReducedArray& r, std::span<const Rat> beta) {
    RecurrenceReport rep;
    for (int n = 0; n + 1 < r.size(); ++n) {
        for (int k = 0; k <= n; ++k) {
            Rat rhs = r.entry(n, k);
            for (int j = 0; n - j >= 0; ++j) {
                if (n - j < k + j + 1) break;
                Int c = binomial(n - k, 2 * j + 1);
                if (c == 0) break;  // 2j+1 > n-k, all further binomials vanish too
                if (j >= static_cast<int>(beta.size()))
                    throw std::invalid_argument("verify_reduced_recurrence: beta too short for size");
                rhs += Rat(c) * beta[static_cast<size_t>(j)] * r.entry(n - j, k + j + 1);
            }
            if (r.entry(n + 1, k + 1) != rhs) {
                rep.pass = false;
                rep.first_failure = {n + 1, k + 1};
                return rep;
            }
        }
    }
    return rep;
}

// same generating-function identities as the ordinary case
inline PseudoReport is_pseudo_involution(const ExpRiordanArray& e, int order) {
    return pseudo_involution_check(e.g, e.f, order);
}

}  // namespace riordan
