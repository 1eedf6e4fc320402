#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <vector>

#include "riordan/errors.hpp"
#include "riordan/rational.hpp"

namespace riordan {

// Truncated formal power series over Rat. A Series knows its coefficients
// for z^0..z^N exactly; nothing is assumed beyond z^N. Every operation
// documents how the truncation order of the result follows from its inputs,
// and never extends precision.
class Series {
public:
    explicit Series(int order) : coeffs_(static_cast<size_t>(order) + 1) {
        if (order < 0) throw std::invalid_argument("Series: negative order");
    }

    static Series zero(int order) { return Series(order); }

    static Series constant(const Rat& c, int order) {
        Series s(order);
        s.coeffs_[0] = c;
        return s;
    }

    static Series one(int order) { return constant(1, order); }

    // the variable z itself
    static Series z(int order) {
        Series s(order);
        if (order >= 1) s.coeffs_[1] = 1;
        return s;
    }

    static Series from_coeffs(std::vector<Rat> coeffs) {
        if (coeffs.empty()) throw std::invalid_argument("Series: empty coefficient list");
        Series s(static_cast<int>(coeffs.size()) - 1);
        s.coeffs_ = std::move(coeffs);
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Rat& operator[](int n) const { return coeffs_[static_cast<size_t>(n)]; }

    void set(int n, Rat v) { coeffs_[static_cast<size_t>(n)] = std::move(v); }

    const std::vector<Rat>& coeffs() const { return coeffs_; }

    // smallest index with nonzero coefficient; nullopt for an all-zero prefix
    std::optional<int> valuation() const {
        for (int n = 0; n <= order(); ++n)
            if (coeffs_[static_cast<size_t>(n)] != 0) return n;
        return std::nullopt;
    }

    bool is_zero_prefix() const { return !valuation().has_value(); }

    Series truncated(int m) const {
        if (m > order()) throw std::invalid_argument("truncated: cannot extend precision");
        Series s(m);
        std::copy_n(coeffs_.begin(), m + 1, s.coeffs_.begin());
        return s;
    }

private:
    std::vector<Rat> coeffs_;
};

inline Rat coefficient(const Series& a, int n) { return n <= a.order() ? a[n] : Rat(0); }

inline bool equal_prefix(const Series& a, const Series& b, int m) {
    if (m > a.order() || m > b.order())
        throw std::invalid_argument("equal_prefix: order exceeds truncation");
    for (int n = 0; n <= m; ++n)
        if (a[n] != b[n]) return false;
    return true;
}

inline int shared_order(const Series& a, const Series& b) { return std::min(a.order(), b.order()); }

// order: min(a.N, b.N)
inline Series add(const Series& a, const Series& b) {
    Series r(shared_order(a, b));
    for (int n = 0; n <= r.order(); ++n) r.set(n, a[n] + b[n]);
    return r;
}

inline Series sub(const Series& a, const Series& b) {
    Series r(shared_order(a, b));
    for (int n = 0; n <= r.order(); ++n) r.set(n, a[n] - b[n]);
    return r;
}

inline Series negate(const Series& a) {
    Series r(a.order());
    for (int n = 0; n <= r.order(); ++n) r.set(n, -a[n]);
    return r;
}

inline Series scalar_mul(const Rat& c, const Series& a) {
    Series r(a.order());
    for (int n = 0; n <= r.order(); ++n) r.set(n, c * a[n]);
    return r;
}

// Cauchy product, order min(a.N, b.N)
inline Series mul(const Series& a, const Series& b) {
    int m = shared_order(a, b);
    Series r(m);
    for (int i = 0; i <= std::min(a.order(), m); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= m && j <= b.order(); ++j) {
            if (b[j] == 0) continue;
            r.set(i + j, r[i + j] + a[i] * b[j]);
        }
    }
    return r;
}

// a/b; requires val(b) <= val(a). order: min(a.N, b.N) - val(b).
inline Series div(const Series& a, const Series& b) {
    auto vb = b.valuation();
    if (!vb) throw DivisionByHigherValuation("div: divisor is zero to truncation order");
    auto va = a.valuation();
    if (va && *va < *vb) throw DivisionByHigherValuation("div: valuation(b) > valuation(a)");
    int m = shared_order(a, b) - *vb;
    if (m < 0) throw DivisionByHigherValuation("div: no coefficients survive truncation");
    Series r(m);
    // long division after cancelling z^val(b)
    const Rat& lead = b[*vb];
    for (int n = 0; n <= m; ++n) {
        Rat s = coefficient(a, n + *vb);
        for (int k = 0; k < n; ++k) s -= r[k] * coefficient(b, n - k + *vb);
        r.set(n, s / lead);
    }
    return r;
}

inline Series inverse_unit(const Series& a) { return div(Series::one(a.order()), a); }

// multiply by z^k (exact reindexing; order grows by k)
inline Series shift_up(const Series& a, int k) {
    Series r(a.order() + k);
    for (int n = 0; n <= a.order(); ++n) r.set(n + k, a[n]);
    return r;
}

// divide by z^k; requires the low-order coefficients to vanish
inline Series shift_down(const Series& a, int k) {
    for (int n = 0; n < std::min(k, a.order() + 1); ++n)
        if (a[n] != 0) throw DivisionByHigherValuation("shift_down: nonzero low-order coefficient");
    if (a.order() < k) throw DivisionByHigherValuation("shift_down: order too small");
    Series r(a.order() - k);
    for (int n = 0; n <= r.order(); ++n) r.set(n, a[n + k]);
    return r;
}

// outer(inner); requires val(inner) >= 1.
// Correct through order min(inner.N, (outer.N+1)*val(inner) - 1): the unknown
// tail of outer enters only at valuation (outer.N+1)*val(inner).
inline Series compose(const Series& outer, const Series& inner) {
    auto vi = inner.valuation();
    if (inner.order() >= 0 && vi && *vi < 1)
        throw NonpositiveInnerValuation("compose: inner constant term must vanish");
    int v = vi ? *vi : inner.order() + 1;
    long correct = std::min<long>(inner.order(), static_cast<long>(outer.order() + 1) * v - 1);
    int m = static_cast<int>(std::min<long>(correct, inner.order()));
    if (m < 0) m = 0;
    Series r = Series::constant(outer[0], m);
    // Horner from the top coefficient down
    int kmax = std::min(outer.order(), v > 0 ? m / v : outer.order());
    Series acc = Series::constant(outer[kmax], m);
    for (int k = kmax - 1; k >= 0; --k) {
        acc = mul(acc, inner.truncated(std::min(m, inner.order())));
        acc.set(0, acc[0] + outer[k]);
    }
    return kmax >= 1 ? acc : r;
}

// compositional inverse: val(f)=1, [z^1]f != 0; result order = f.N
inline Series comp_inverse(const Series& f) {
    if (f.order() < 1 || f[0] != 0 || f[1] == 0)
        throw NotInvertible("comp_inverse: need valuation exactly 1");
    int n = f.order();
    Series g(n);
    g.set(1, Rat(1) / f[1]);
    // powers of f maintained incrementally: fp[k] = f^k
    std::vector<Series> fp;
    fp.push_back(Series::one(n));
    fp.push_back(f);
    for (int m = 2; m <= n; ++m) {
        fp.push_back(mul(fp.back(), f));
        // [z^m] sum_k g_k f^k = 0  =>  g_m f1^m = -(known terms)
        Rat s = 0;
        for (int k = 1; k < m; ++k) s += g[k] * fp[static_cast<size_t>(k)][m];
        g.set(m, -s / fp[static_cast<size_t>(m)][m]);
    }
    return g;
}

// integer exponent; negative exponents need val(a)=0
inline Series pow_int(const Series& a, long k) {
    if (k < 0) {
        if (a[0] == 0) throw DivisionByHigherValuation("pow_int: negative power of non-unit");
        return inverse_unit(pow_int(a, -k));
    }
    Series r = Series::one(a.order());
    Series base = a;
    for (; k; k >>= 1) {
        if (k & 1) r = mul(r, base);
        base = mul(base, base);
    }
    return r;
}

// binomial series a^r for rational r; requires a(0) = 1 unless r is a
// nonnegative integer
inline Series pow_rational(const Series& a, const Rat& r) {
    if (is_integer(r)) return pow_int(a, to_long(r));
    if (a[0] != 1) throw NonUnitConstantTerm("pow_rational: fractional power needs constant term 1");
    int n = a.order();
    Series x = sub(a, Series::one(n));  // valuation >= 1
    Series out = Series::one(n);
    Series p = Series::one(n);
    Rat c = 1;
    for (int j = 1; j <= n; ++j) {
        c = c * (r - (j - 1)) / j;
        p = mul(p, x);
        out = add(out, scalar_mul(c, p));
    }
    return out;
}

// square root with positive leading coefficient; val(a) must be even and the
// leading coefficient a square in Q. order: a.N - val(a)/2.
inline Series sqrt_series(const Series& a) {
    auto v = a.valuation();
    if (!v) return Series::zero(a.order());  // sqrt of the zero prefix
    if (*v % 2 != 0) throw OddValuation("sqrt: odd valuation");
    auto lead = sqrt_exact(a[*v]);
    if (!lead) throw NonSquareLeadingCoefficient("sqrt: leading coefficient " + a[*v].str() +
                                                 " is not a rational square");
    Series body = shift_down(a, *v);
    body = scalar_mul(Rat(1) / body[0], body);
    Series root = scalar_mul(*lead, pow_rational(body, Rat(1, 2)));
    return shift_up(root, *v / 2);
}

// exp(a) with a(0)=0; coefficientwise by b' = a'b
inline Series exp_series(const Series& a) {
    if (a[0] != 0) throw BadConstantTerm("exp: constant term must vanish");
    int m = a.order();
    Series b = Series::one(m);
    for (int n = 1; n <= m; ++n) {
        Rat s = 0;
        for (int k = 1; k <= n; ++k) s += Rat(k) * a[k] * b[n - k];
        b.set(n, s / n);
    }
    return b;
}

// log(a) with a(0)=1; inverse recurrence of exp
inline Series log_series(const Series& a) {
    if (a[0] != 1) throw BadConstantTerm("log: constant term must be 1");
    int m = a.order();
    Series b(m);
    for (int n = 1; n <= m; ++n) {
        Rat s = Rat(n) * a[n];
        for (int k = 1; k < n; ++k) s -= Rat(k) * b[k] * a[n - k];
        b.set(n, s / n);
    }
    return b;
}

// substitute z -> z^q; coefficients between multiples of q are exactly zero,
// so the order extends to q*N + q - 1
inline Series aerate_variable(const Series& a, int q) {
    if (q < 1) throw std::invalid_argument("aerate: q must be >= 1");
    Series r(a.order() * q + q - 1);
    for (int n = 0; n <= a.order(); ++n) r.set(n * q, a[n]);
    return r;
}

// substitute z -> -z
inline Series negate_variable(const Series& a) {
    Series r(a.order());
    for (int n = 0; n <= r.order(); ++n) r.set(n, n % 2 == 0 ? a[n] : -a[n]);
    return r;
}

namespace detail {
inline Series resize(const Series& a, int order) {
    Series s(order);
    for (int n = 0; n <= std::min(order, a.order()); ++n) s.set(n, a[n]);
    return s;
}
}  // namespace detail

// Solve g = update(g) through order N. The update must be a contraction:
// applied to a series correct to order k it yields one correct to order
// >= k+1 (caller asserts; verified a posteriori by the residual check).
// The iteration grows the working order one coefficient per step, which is
// equivalent to N+1 full-order applications for contractions but much
// cheaper; if the residual check fails, the plain full-order iteration from
// the seed is retried before reporting NotContracting.
inline Series solve_fixpoint(const std::function<Series(const Series&)>& update, const Series& seed,
                             int order) {
    Series g = detail::resize(seed, 0);
    for (int w = 1; w <= order; ++w) g = detail::resize(update(detail::resize(g, w)), w);
    Series resid = sub(detail::resize(update(g), order), g);
    if (resid.is_zero_prefix()) return g;
    g = detail::resize(seed, order);
    for (int it = 0; it <= order; ++it) g = detail::resize(update(g), order);
    resid = sub(detail::resize(update(g), order), g);
    if (!resid.is_zero_prefix())
        throw NotContracting("solve_fixpoint: residual nonzero at order " +
                             std::to_string(*resid.valuation()));
    return g;
}

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator-(const Series& a) { return negate(a); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }
inline Series operator*(const Rat& c, const Series& a) { return scalar_mul(c, a); }
inline Series operator/(const Series& a, const Series& b) { return div(a, b); }

inline std::string to_string(const Series& a, int max_terms = -1) {
    std::ostringstream os;
    int shown = 0;
    bool first = true;
    for (int n = 0; n <= a.order(); ++n) {
        if (a[n] == 0) continue;
        if (max_terms >= 0 && shown >= max_terms) {
            os << " + ...";
            break;
        }
        if (!first) os << " + ";
        os << a[n].str();
        if (n >= 1) os << "*z^" << n;
        first = false;
        ++shown;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace riordan
