#include "riordan/chebyshev.hpp"

#include <gtest/gtest.h>

#include "riordan/standard_series.hpp"
#include "test_util.hpp"

using namespace riordan;

TEST(Cheb, FirstKindSmall) {
    EXPECT_EQ(cheb_t(0), Poly({1}));
    EXPECT_EQ(cheb_t(1), Poly({0, 1}));
    EXPECT_EQ(cheb_t(2), Poly({-1, 0, 2}));
    EXPECT_EQ(cheb_t(3), Poly({0, -3, 0, 4}));
}

TEST(Cheb, SecondKindSmall) {
    EXPECT_EQ(cheb_u(0), Poly({1}));
    EXPECT_EQ(cheb_u(1), Poly({0, 2}));
    EXPECT_EQ(cheb_u(2), Poly({-1, 0, 4}));
    EXPECT_EQ(cheb_u(-1), Poly());
}

TEST(Cheb, ThreeTermRecurrences) {
    Poly two_z({0, 2});
    for (int n = 2; n <= 9; ++n) {
        EXPECT_EQ(cheb_t(n), two_z * cheb_t(n - 1) - cheb_t(n - 2));
        EXPECT_EQ(cheb_u(n), two_z * cheb_u(n - 1) - cheb_u(n - 2));
    }
}

TEST(Cheb, ShiftedSecondKindIdentity) {
    // 2z * U*_l(z^2) = U_{2l+1}(z)
    for (int l = 0; l <= 6; ++l) {
        Poly us = cheb_u_shifted(l);
        std::vector<Rat> c(static_cast<size_t>(2 * us.degree()) + 1);
        for (int i = 0; i <= us.degree(); ++i) c[static_cast<size_t>(2 * i)] = us[i];
        Poly lhs = Poly({0, 2}) * Poly(std::move(c));
        EXPECT_EQ(lhs, cheb_u(2 * l + 1));
    }
}

TEST(Cheb, CoefficientMatrix) {
    TriMatrix m = cheb_coeffs_matrix(7);
    TriMatrix expect = TriMatrix::from_ints({{1},
                                             {0, 1},
                                             {-1, 0, 1},
                                             {0, -2, 0, 1},
                                             {1, 0, -3, 0, 1},
                                             {0, 3, 0, -4, 0, 1},
                                             {-1, 0, 6, 0, -5, 0, 1}});
    EXPECT_EQ(m, expect);
}

TEST(Cheb, CoefficientMatrixMatchesHalfArgument) {
    // row k lists the coefficients of U_k(z/2)
    for (int k = 0; k <= 8; ++k) {
        Poly uk_half = cheb_u(k).substitute(Poly({0, Rat(1, 2)}));
        for (int n = 0; n <= k; ++n) EXPECT_EQ(uk_half.coeff(n), cheb_coeff(k, n));
    }
}

TEST(PPoly, TableRows) {
    TriMatrix expect = TriMatrix::from_ints(
        {{1}, {4, 1}, {9, 6, 1}, {16, 20, 8, 1}, {25, 50, 35, 10, 1}});
    for (int k = 0; k < 5; ++k) {
        Poly p = p_poly(k);
        for (int j = 0; j <= k; ++j) EXPECT_EQ(p[j], expect.entry(k, j));
    }
}

TEST(PPoly, Degenerate) {
    EXPECT_TRUE(p_poly(-1).is_zero());
    EXPECT_EQ(p_poly(0), Poly({1}));
}

TEST(PPoly, ChebyshevForm) {
    Poly half_shift({1, Rat(1, 2)});  // (z+2)/2
    EXPECT_EQ(p_poly(2), Poly({9, 6, 1}));
    for (int l = 0; l <= 4; ++l) {
        Poly ul = cheb_u(l).substitute(half_shift);
        Poly ulm = cheb_u(l - 1).substitute(half_shift);
        EXPECT_EQ(p_poly(2 * l), (ul + ulm) * (ul + ulm));
        EXPECT_EQ(p_poly(2 * l + 1), Poly({4, 1}) * ul * ul);
    }
}

TEST(PPoly, BasisTransport) {
    // (z p_k) o ((g-1)^2/g) = (g^{k+1}-1)^2 / g^{k+1} at g = C
    Series c = catalan_series(20);
    Series w = div(pow_int(sub(c, Series::one(20)), 2), c);
    for (int k = 0; k <= 4; ++k) {
        Series lhs = mul(w, p_poly(k).eval(w));
        Series rhs = div(pow_int(sub(pow_int(c, k + 1), Series::one(20)), 2), pow_int(c, k + 1));
        EXPECT_TRUE(equal_prefix(lhs, rhs.truncated(lhs.order()), lhs.order()));
    }
}

TEST(BigP, TableRows) {
    TriMatrix expect = TriMatrix::from_ints(
        {{1}, {3, 1}, {5, 5, 1}, {7, 14, 7, 1}, {9, 30, 27, 9, 1}});
    for (int l = 0; l < 5; ++l) {
        Poly p = big_p_poly(l);
        for (int j = 0; j <= l; ++j) EXPECT_EQ(p[j], expect.entry(l, j));
    }
    EXPECT_EQ(big_p_poly(1), Poly({3, 1}));
    EXPECT_EQ(big_p_poly(2), Poly({5, 5, 1}));
}

TEST(BigP, DifferenceAndSquareIdentities) {
    Poly half_shift({1, Rat(1, 2)});
    for (int l = 0; l <= 8; ++l) {
        EXPECT_EQ(big_p_poly(l), p_poly(l) - p_poly(l - 1));
        EXPECT_EQ(big_p_poly(l) * big_p_poly(l), p_poly(2 * l));
        EXPECT_EQ(big_p_poly(l),
                  cheb_u(l).substitute(half_shift) + cheb_u(l - 1).substitute(half_shift));
    }
}
