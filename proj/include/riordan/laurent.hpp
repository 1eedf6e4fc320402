#pragma once

#include <vector>

#include "riordan/series.hpp"

namespace riordan {

// Laurent polynomial: finitely many exponents, possibly negative.
class LaurentPoly {
public:
    LaurentPoly() = default;

    LaurentPoly(int min_exp, std::vector<Rat> coeffs) : min_(min_exp), c_(std::move(coeffs)) {
        normalize();
    }

    static LaurentPoly monomial(int e, const Rat& v) { return LaurentPoly(e, {v}); }
    static LaurentPoly constant(const Rat& v) { return monomial(0, v); }
    static LaurentPoly z() { return monomial(1, 1); }

    bool is_zero() const { return c_.empty(); }
    int min_exp() const { return min_; }
    int max_exp() const { return min_ + static_cast<int>(c_.size()) - 1; }

    Rat coeff(int e) const {
        if (is_zero() || e < min_ || e > max_exp()) return 0;
        return c_[static_cast<size_t>(e - min_)];
    }

    // z^{min+max} p(1/z)
    LaurentPoly reciprocal() const {
        if (is_zero()) return {};
        std::vector<Rat> r(c_.rbegin(), c_.rend());
        return LaurentPoly(min_, std::move(r));
    }

    bool is_palindromic() const { return !is_zero() && *this == reciprocal(); }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        int lo = std::min(a.min_, b.min_), hi = std::max(a.max_exp(), b.max_exp());
        std::vector<Rat> r(static_cast<size_t>(hi - lo) + 1);
        for (int e = lo; e <= hi; ++e) r[static_cast<size_t>(e - lo)] = a.coeff(e) + b.coeff(e);
        return LaurentPoly(lo, std::move(r));
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        return a + Rat(-1) * b;
    }

    friend LaurentPoly operator*(const Rat& s, const LaurentPoly& a) {
        if (s == 0 || a.is_zero()) return {};
        std::vector<Rat> r = a.c_;
        for (auto& x : r) x *= s;
        return LaurentPoly(a.min_, std::move(r));
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return LaurentPoly(a.min_ + b.min_, std::move(r));
    }

    LaurentPoly pow(int k) const {
        LaurentPoly r = constant(1);
        for (int i = 0; i < k; ++i) r = r * (*this);
        return r;
    }

    LaurentPoly shifted(int by) const {
        if (is_zero()) return {};
        return LaurentPoly(min_ + by, c_);
    }

    Rat eval_at_one() const {
        Rat s = 0;
        for (const auto& x : c_) s += x;
        return s;
    }

    bool operator==(const LaurentPoly& o) const { return min_ == o.min_ && c_ == o.c_; }

    // exact substitution of a series with nonzero constant term (required by
    // negative exponents), or any series when min_exp >= 0
    Series eval(const Series& s) const {
        int n = s.order();
        if (is_zero()) return Series::zero(n);
        if (min_ < 0 && s[0] == 0)
            throw SingularEvaluation("LaurentPoly::eval: negative exponent at series of positive valuation");
        // Horner on the nonnegative-shift version, then divide by s^{-min}
        Series acc = Series::constant(c_.back(), n);
        for (int i = static_cast<int>(c_.size()) - 2; i >= 0; --i) {
            acc = mul(acc, s);
            acc.set(0, acc[0] + c_[static_cast<size_t>(i)]);
        }
        if (min_ > 0) acc = mul(acc, pow_int(s, min_));
        if (min_ < 0) acc = div(acc, pow_int(s, -min_));
        return acc;
    }

private:
    void normalize() {
        size_t lead = 0;
        while (lead < c_.size() && c_[lead] == 0) ++lead;
        if (lead) {
            c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
            min_ += static_cast<int>(lead);
        }
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
        if (c_.empty()) min_ = 0;
    }

    int min_ = 0;
    std::vector<Rat> c_;
};

// Ratio of two Laurent polynomials. Stored with integer content removed and
// the denominator's lowest coefficient positive.
struct LaurentRational {
    LaurentPoly num;
    LaurentPoly den;

    LaurentRational(LaurentPoly n, LaurentPoly d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw std::invalid_argument("LaurentRational: zero denominator");
        normalize();
    }

    explicit LaurentRational(LaurentPoly n) : LaurentRational(std::move(n), LaurentPoly::constant(1)) {}

    bool is_zero() const { return num.is_zero(); }

    friend LaurentRational operator*(const LaurentRational& a, const LaurentRational& b) {
        return {a.num * b.num, a.den * b.den};
    }
    friend LaurentRational operator/(const LaurentRational& a, const LaurentRational& b) {
        if (b.is_zero()) throw std::invalid_argument("LaurentRational: division by zero");
        return {a.num * b.den, a.den * b.num};
    }
    friend LaurentRational operator+(const LaurentRational& a, const LaurentRational& b) {
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    friend LaurentRational operator-(const LaurentRational& a, const LaurentRational& b) {
        return {a.num * b.den - b.num * a.den, a.den * b.den};
    }
    LaurentRational pow(int k) const {
        if (k >= 0) return {num.pow(k), den.pow(k)};
        return {den.pow(-k), num.pow(-k)};
    }

private:
    void normalize() {
        if (num.is_zero()) {
            den = LaurentPoly::constant(1);
            return;
        }
        Int ln = 1, gn = 0;
        auto fold = [&](const LaurentPoly& p) {
            for (int e = p.min_exp(); e <= p.max_exp(); ++e) {
                Rat c = p.coeff(e);
                if (c == 0) continue;
                ln = boost::multiprecision::lcm(ln, rat_den(c));
                gn = boost::multiprecision::gcd(gn, rat_num(c) < 0 ? Int(-rat_num(c)) : rat_num(c));
            }
        };
        fold(num);
        fold(den);
        Rat scale = gn != 0 ? Rat(ln, gn) : Rat(1);
        if (den.coeff(den.min_exp()) * scale < 0) scale = -scale;
        num = scale * num;
        den = scale * den;
    }
};

struct DargaResult {
    bool is_generalized_palindrome = false;
    Rat darga;  // defined when is_generalized_palindrome
};

// gamma(z)/gamma(1/z) = z^k iff num*rec(den) = den*rec(num); then
// k = (min+max exponents of num) - (min+max exponents of den)
inline DargaResult darga(const LaurentRational& g) {
    if (g.is_zero()) throw std::invalid_argument("darga: zero function");
    DargaResult r;
    if (g.num * g.den.reciprocal() == g.den * g.num.reciprocal()) {
        r.is_generalized_palindrome = true;
        r.darga = Rat((g.num.min_exp() + g.num.max_exp()) - (g.den.min_exp() + g.den.max_exp()));
    }
    return r;
}

// exact substitution num(s)/den(s)
inline Series eval_laurent_rational(const LaurentRational& g, const Series& s) {
    Series n = g.num.eval(s);
    Series d = g.den.eval(s);
    auto vd = d.valuation();
    auto vn = n.valuation();
    if (!vd || (vn && *vd > *vn))
        throw SingularEvaluation("eval_laurent_rational: denominator vanishes to higher order");
    return div(n, d);
}

// the content gcd is already removed, so gamma(1) is a plain rational
inline Rat gamma_at_one(const LaurentRational& g) {
    Rat d = g.den.eval_at_one();
    if (d == 0) throw SingularEvaluation("gamma(1): denominator vanishes at 1");
    return g.num.eval_at_one() / d;
}

}  // namespace riordan
