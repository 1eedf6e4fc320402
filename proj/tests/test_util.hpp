#pragma once

#include <initializer_list>
#include <vector>

#include "riordan/series.hpp"
#include "riordan/tri_matrix.hpp"

namespace riordan::testing {

inline Series ser(std::initializer_list<long> xs) {
    std::vector<Rat> c(xs.begin(), xs.end());
    return Series::from_coeffs(std::move(c));
}

inline Series ser_rat(std::initializer_list<Rat> xs) {
    return Series::from_coeffs(std::vector<Rat>(xs.begin(), xs.end()));
}

inline bool starts_with(const Series& a, std::initializer_list<long> xs) {
    int n = 0;
    for (long x : xs) {
        if (n > a.order() || a[n] != x) return false;
        ++n;
    }
    return true;
}

// small deterministic LCG for property tests, valued in [-max..max]
struct Rng {
    unsigned long long state;
    explicit Rng(unsigned long long seed) : state(seed) {}
    long next(long max) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<long>((state >> 33) % (2 * max + 1)) - max;
    }
    Rat next_rat(long max) {
        long num = next(max);
        long den = 0;
        while (den == 0) den = next(max);
        return make_rat(num, den);
    }
    Series next_series(int order, long max) {
        Series s(order);
        for (int n = 0; n <= order; ++n) s.set(n, Rat(next(max)));
        return s;
    }
};

}  // namespace riordan::testing
