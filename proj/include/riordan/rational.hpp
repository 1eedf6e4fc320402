#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace riordan {

// Exact arbitrary-precision arithmetic. cpp_rational keeps values in lowest
// terms with a positive denominator, which is exactly the invariant we need.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return rat_den(q) == 1; }

inline Int to_int(const Rat& q) {
    if (!is_integer(q)) throw std::invalid_argument("to_int: not an integer: " + q.str());
    return rat_num(q);
}

inline long to_long(const Rat& q) { return static_cast<long>(to_int(q)); }

// cpp_rational's two-argument constructor insists on a positive denominator
inline Rat make_rat(const Int& n, const Int& d) {
    if (d == 0) throw std::domain_error("make_rat: zero denominator");
    return d < 0 ? Rat(-n, -d) : Rat(n, d);
}

inline Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int binomial(const Int& n, const Int& k) {
    if (k < 0) return 0;
    if (n >= 0 && k > n) return 0;
    Int r = 1;
    for (Int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);  // divides exactly: r is binomial(n, i+1) * (i+1)!
    }
    return r;
}

inline std::optional<Int> sqrt_exact(const Int& n) {
    if (n < 0) return std::nullopt;
    Int r = boost::multiprecision::sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

// Positive square root of a rational, when it is again rational.
inline std::optional<Rat> sqrt_exact(const Rat& q) {
    auto n = sqrt_exact(rat_num(q));
    if (!n) return std::nullopt;
    auto d = sqrt_exact(rat_den(q));
    if (!d) return std::nullopt;
    return Rat(*n, *d);
}

inline Rat rat_pow(const Rat& q, int e) {
    Rat r = 1, base = q;
    int k = e < 0 ? -e : e;
    for (; k; k >>= 1) {
        if (k & 1) r *= base;
        base *= base;
    }
    if (e < 0) {
        if (r == 0) throw std::domain_error("rat_pow: zero to negative power");
        r = Rat(1) / r;
    }
    return r;
}

}  // namespace riordan
