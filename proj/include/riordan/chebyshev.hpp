#pragma once

#include <vector>

#include "riordan/series.hpp"
#include "riordan/tri_matrix.hpp"

namespace riordan {

// Dense univariate polynomial with exact rational coefficients. Only the
// small amount of algebra the polynomial families need lives here.
class Poly {
public:
    Poly() : c_(1) {}
    explicit Poly(std::vector<Rat> c) : c_(std::move(c)) {
        if (c_.empty()) c_.push_back(0);
        trim();
    }
    static Poly constant(const Rat& v) { return Poly({v}); }
    static Poly z() { return Poly({0, 1}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rat& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
    Rat coeff(int i) const { return i <= degree() ? c_[static_cast<size_t>(i)] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const { return c_.size() == 1 && c_[0] == 0; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Rat& s, const Poly& a) {
        std::vector<Rat> r = a.c_;
        for (auto& x : r) x *= s;
        return Poly(std::move(r));
    }
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Poly substitute(const Poly& inner) const {
        Poly acc = Poly::constant(c_.back());
        for (int i = degree() - 1; i >= 0; --i) acc = acc * inner + Poly::constant(c_[static_cast<size_t>(i)]);
        return acc;
    }

    Rat eval(const Rat& x) const {
        Rat acc = c_.back();
        for (int i = degree() - 1; i >= 0; --i) acc = acc * x + c_[static_cast<size_t>(i)];
        return acc;
    }

    // substitute a series for the variable; requires val(s) >= 1 or a plain
    // Horner evaluation when the constant term is nonzero
    Series eval(const Series& s) const {
        Series acc = Series::constant(c_.back(), s.order());
        for (int i = degree() - 1; i >= 0; --i) {
            acc = mul(acc, s);
            acc.set(0, acc[0] + c_[static_cast<size_t>(i)]);
        }
        return acc;
    }

    Series to_series(int order) const {
        Series s(order);
        for (int i = 0; i <= std::min(order, degree()); ++i) s.set(i, c_[static_cast<size_t>(i)]);
        return s;
    }

private:
    void trim() {
        while (c_.size() > 1 && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

// Chebyshev polynomials of the first kind: T_0 = 1, T_1 = z, T_{n+1} = 2z T_n - T_{n-1}
inline Poly cheb_t(int n) {
    Poly a = Poly::constant(1), b = Poly::z();
    if (n == 0) return a;
    Poly two_z = Poly({0, 2});
    for (int i = 1; i < n; ++i) {
        Poly c = two_z * b - a;
        a = b;
        b = c;
    }
    return b;
}

// Chebyshev polynomials of the second kind: U_0 = 1, U_1 = 2z, same recurrence.
// U_{-1} = 0 by convention.
inline Poly cheb_u(int n) {
    if (n < 0) return Poly();
    Poly a = Poly::constant(1), b = Poly({0, 2});
    if (n == 0) return a;
    Poly two_z = Poly({0, 2});
    for (int i = 1; i < n; ++i) {
        Poly c = two_z * b - a;
        a = b;
        b = c;
    }
    return b;
}

// shifted Chebyshev of the second kind, U*_l(z) = U_l(2z - 1)
inline Poly cheb_u_shifted(int n) { return cheb_u(n).substitute(Poly({-1, 2})); }

// row k holds the coefficients of U_k(z/2):
// c_{k,n} = (-1)^{(k+n)/2} C((k+n)/2, n) for k-n even and nonnegative
inline TriMatrix cheb_coeffs_matrix(int size) {
    std::vector<std::vector<Rat>> rows(static_cast<size_t>(size));
    for (int k = 0; k < size; ++k) {
        rows[static_cast<size_t>(k)].resize(static_cast<size_t>(k) + 1);
        for (int n = k % 2; n <= k; n += 2) {
            int h = (k + n) / 2;
            Rat v = Rat(binomial(h, n));
            if (h % 2 != 0) v = -v;
            rows[static_cast<size_t>(k)][static_cast<size_t>(n)] = v;
        }
    }
    return TriMatrix(std::move(rows));
}

inline Rat cheb_coeff(int k, int n) {
    if (n > k || (k - n) % 2 != 0) return 0;
    int h = (k + n) / 2;
    Rat v = Rat(binomial(h, n));
    return h % 2 == 0 ? v : -v;
}

// p_k(z) = sum_j d_{k,j} z^j with d_{k,j} = ((k+1)/(j+1)) C(k+j+1, 2j+1);
// the polynomials transporting (g + 1/g - 2) to (g^{k+1} + 1/g^{k+1} - 2).
// p_{-1} = 0.
inline Poly p_poly(int k) {
    if (k < 0) return Poly();
    std::vector<Rat> c(static_cast<size_t>(k) + 1);
    for (int j = 0; j <= k; ++j)
        c[static_cast<size_t>(j)] = Rat(k + 1, j + 1) * Rat(binomial(k + j + 1, 2 * j + 1));
    return Poly(std::move(c));
}

// P_l(z) = sum_j a_{lj} z^j with a_{lj} = ((2l+1)/(2j+1)) C(l+j, 2j);
// satisfies P_l = p_l - p_{l-1} and P_l^2 = p_{2l}.
inline Poly big_p_poly(int l) {
    std::vector<Rat> c(static_cast<size_t>(l) + 1);
    for (int j = 0; j <= l; ++j)
        c[static_cast<size_t>(j)] = Rat(2 * l + 1, 2 * j + 1) * Rat(binomial(l + j, 2 * j));
    return Poly(std::move(c));
}

inline Rat big_p_entry(int l, int j) {
    if (j > l) return 0;
    return Rat(2 * l + 1, 2 * j + 1) * Rat(binomial(l + j, 2 * j));
}

}  // namespace riordan
