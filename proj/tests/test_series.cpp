#include "riordan/series.hpp"

#include <gtest/gtest.h>

#include "riordan/standard_series.hpp"
#include "test_util.hpp"

using namespace riordan;
using riordan::testing::Rng;
using riordan::testing::ser;
using riordan::testing::starts_with;

TEST(SeriesAdd, Symmetry) {
    Series a = ser({1, 1});
    Series b = ser({1, -1});
    EXPECT_TRUE(starts_with(add(a, b), {2, 0}));
}

TEST(SeriesAdd, AdditiveInverse) {
    Series c = catalan_series(12);
    EXPECT_TRUE(add(c, negate(c)).is_zero_prefix());
}

TEST(SeriesAdd, GeometricMinusOne) {
    // oracle: long division of 1 by (1-z), minus 1
    Series geo = sub(geometric_series(8), Series::one(8));
    EXPECT_TRUE(starts_with(geo, {0, 1, 1, 1, 1, 1, 1, 1}));
}

TEST(SeriesMul, InversePair) {
    Series one_minus = ser({1, -1});
    Series p = mul(one_minus.truncated(1), geometric_series(10));
    EXPECT_TRUE(starts_with(p, {1, 0}));  // truncation order drops to 1
    Series q = mul(sub(Series::one(10), Series::z(10)), geometric_series(10));
    EXPECT_TRUE(equal_prefix(q, Series::one(10), 10));
}

TEST(SeriesMul, CatalanIdentity) {
    // C*C*z = C - 1, from C = 1 + zC^2
    Series c = catalan_series(16);
    Series lhs = shift_up(mul(c, c), 1).truncated(16);
    EXPECT_TRUE(equal_prefix(lhs, sub(c, Series::one(16)), 16));
}

TEST(SeriesMul, Square) {
    EXPECT_TRUE(starts_with(mul(ser({1, 1, 0}), ser({1, 1, 0})), {1, 2, 1}));
}

TEST(SeriesDiv, Monomial) {
    EXPECT_TRUE(starts_with(div(ser({0, 1, 1}), ser({0, 1, 0})), {1, 1}));
}

TEST(SeriesDiv, CatalanShift) {
    // (C-1)/z = C^2, via the fixpoint oracle for C
    Series c = catalan_series(16);
    Series lhs = div(sub(c, Series::one(16)), Series::z(16));
    EXPECT_TRUE(equal_prefix(lhs, mul(c, c).truncated(lhs.order()), lhs.order()));
}

TEST(SeriesDiv, Fibonacci) {
    EXPECT_TRUE(starts_with(fibonacci_series(9), {1, 1, 2, 3, 5, 8, 13, 21, 34}));
}

TEST(SeriesDiv, HigherValuationThrows) {
    EXPECT_THROW(div(Series::one(4), Series::z(4)), DivisionByHigherValuation);
}

TEST(SeriesCompose, RationalClosedForm) {
    // (z/(1-z)) o (z/(1-z)) = z/(1-2z), rational-function oracle
    Series h = shift_up(geometric_series(10), 1).truncated(10);
    Series hh = compose(h, h);
    Series expect = div(Series::z(11),
                        sub(Series::one(11), scalar_mul(2, Series::z(11))));
    EXPECT_TRUE(equal_prefix(hh, expect.truncated(hh.order()), hh.order()));
}

TEST(SeriesCompose, DoubledLeafCatalan) {
    // (zC) o (z + z^2) = z*u_2 where u_2 = 1 + z(1 + u_2^2); values from the
    // fixpoint oracle
    Series c = catalan_series(24);
    Series inner = add(Series::z(24), shift_up(Series::z(24), 1).truncated(24));
    Series got = compose(shift_up(c, 1).truncated(24), inner);
    EXPECT_TRUE(starts_with(got, {0, 1, 2, 4, 12, 40, 144, 544, 2128, 8544}));
    Series u2 = solve_fixpoint(
        [](const Series& g) {
            return add(Series::one(g.order() + 1),
                       shift_up(add(Series::one(g.order()), mul(g, g)), 1));
        },
        Series::one(20), 20);
    EXPECT_TRUE(equal_prefix(got.truncated(20), shift_up(u2, 1).truncated(20), 20));
}

TEST(SeriesCompose, IdentityInner) {
    Series f = catalan_series(9);
    EXPECT_TRUE(equal_prefix(compose(f, Series::z(9)), f, 9));
}

TEST(SeriesCompose, NonzeroConstantThrows) {
    EXPECT_THROW(compose(catalan_series(4), Series::one(4)), NonpositiveInnerValuation);
}

TEST(SeriesInverse, SchroederPaths) {
    // inverse of z - z^2 is zC
    Series f = sub(Series::z(12), shift_up(Series::z(12), 1).truncated(12));
    Series got = comp_inverse(f);
    Series zc = shift_up(catalan_series(12), 1).truncated(12);
    EXPECT_TRUE(equal_prefix(got, zc, 12));
}

TEST(SeriesInverse, Rational) {
    Series f = shift_up(geometric_series(12), 1).truncated(12);  // z/(1-z)
    Series expect = div(Series::z(13), add(Series::one(13), Series::z(13)));
    EXPECT_TRUE(equal_prefix(comp_inverse(f), expect.truncated(12), 12));
}

TEST(SeriesInverse, IdentityFixpoint) {
    EXPECT_TRUE(equal_prefix(comp_inverse(Series::z(8)), Series::z(8), 8));
}

TEST(SeriesInverse, RoundTripProperty) {
    Rng rng(7);
    for (int trial = 0; trial < 6; ++trial) {
        Series f(10);
        f.set(1, trial % 2 ? Rat(1) : Rat(-1));
        for (int n = 2; n <= 10; ++n) f.set(n, rng.next_rat(6));
        Series fbar = comp_inverse(f);
        EXPECT_TRUE(equal_prefix(compose(fbar, f), Series::z(10), 10));
        EXPECT_TRUE(equal_prefix(compose(f, fbar), Series::z(10), 10));
    }
}

TEST(SeriesPow, BinomialHalf) {
    Series r = pow_rational(add(Series::one(8), Series::z(8)), Rat(1, 2));
    EXPECT_EQ(r[0], Rat(1));
    EXPECT_EQ(r[1], Rat(1, 2));
    EXPECT_EQ(r[2], Rat(-1, 8));
    EXPECT_EQ(r[3], Rat(1, 16));
    EXPECT_EQ(r[4], Rat(-5, 128));
}

TEST(SeriesPow, CatalanSquare) {
    Series c = catalan_series(14);
    Series lhs = pow_rational(c, Rat(2));
    Series rhs = div(sub(c, Series::one(14)), Series::z(14));
    EXPECT_TRUE(equal_prefix(lhs.truncated(rhs.order()), rhs, rhs.order()));
}

TEST(SeriesPow, ZeroExponent) {
    EXPECT_TRUE(equal_prefix(pow_rational(catalan_series(6), Rat(0)), Series::one(6), 6));
}

TEST(SeriesPow, FractionalConsistencyProperty) {
    Rng rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        Series a(8);
        a.set(0, 1);
        for (int n = 1; n <= 8; ++n) a.set(n, rng.next_rat(4));
        Rat r(2, 3);
        Series x = pow_rational(a, r);
        EXPECT_TRUE(equal_prefix(pow_int(x, 3), pow_rational(a, Rat(2)), 8));
    }
}

TEST(SeriesPow, FractionalNeedsUnitConstant) {
    EXPECT_THROW(pow_rational(scalar_mul(2, Series::one(4)), Rat(1, 2)), NonUnitConstantTerm);
}

TEST(SeriesSqrt, FactoredSquare) {
    // sqrt(z^2 (1+z)^2) = z(1+z)
    Series a = pow_int(shift_up(add(Series::one(8), Series::z(8)), 1), 2).truncated(8);
    EXPECT_TRUE(starts_with(sqrt_series(a), {0, 1, 1, 0}));
}

TEST(SeriesSqrt, SquareRoundTrip) {
    Series f = shift_up(pow_int(catalan_series(16), 3), 1).truncated(16);  // zC^3
    Series zf = shift_up(f, 1).truncated(16);
    Series r = sqrt_series(zf);
    EXPECT_TRUE(equal_prefix(mul(r, r), zf.truncated(r.order()), r.order()));
}

TEST(SeriesSqrt, PositiveBranch) {
    Series a = scalar_mul(9, Series::one(6));
    a.set(1, 1);
    EXPECT_EQ(sqrt_series(a)[0], Rat(3));
}

TEST(SeriesSqrt, Errors) {
    EXPECT_THROW(sqrt_series(Series::z(6)), OddValuation);
    EXPECT_THROW(sqrt_series(scalar_mul(2, Series::one(6))), NonSquareLeadingCoefficient);
}

TEST(SeriesExpLog, ExpZ) {
    Series e = exp_series(Series::z(6));
    EXPECT_EQ(e[0], Rat(1));
    EXPECT_EQ(e[1], Rat(1));
    EXPECT_EQ(e[2], Rat(1, 2));
    EXPECT_EQ(e[3], Rat(1, 6));
}

TEST(SeriesExpLog, LogGeometric) {
    Series l = log_series(geometric_series(8));
    EXPECT_EQ(l[1], Rat(1));
    EXPECT_EQ(l[2], Rat(1, 2));
    EXPECT_EQ(l[3], Rat(1, 3));
}

TEST(SeriesExpLog, RoundTrip) {
    Series a = add(Series::one(10), Series::z(10));
    EXPECT_TRUE(equal_prefix(exp_series(log_series(a)), a, 10));
}

TEST(SeriesExpLog, RoundTripProperty) {
    Rng rng(23);
    for (int trial = 0; trial < 5; ++trial) {
        Series a(9);
        a.set(0, 1);
        for (int n = 1; n <= 9; ++n) a.set(n, rng.next_rat(5));
        EXPECT_TRUE(equal_prefix(exp_series(log_series(a)), a, 9));
        Series b(9);
        for (int n = 1; n <= 9; ++n) b.set(n, rng.next_rat(5));
        EXPECT_TRUE(equal_prefix(log_series(exp_series(b)), b, 9));
    }
}

TEST(SeriesExpLog, BadConstant) {
    EXPECT_THROW(exp_series(Series::one(4)), BadConstantTerm);
    EXPECT_THROW(log_series(Series::z(4)), BadConstantTerm);
}

TEST(SolveFixpoint, Catalan) {
    EXPECT_TRUE(starts_with(catalan_series(8), {1, 1, 2, 5, 14, 42, 132, 429}));
}

TEST(SolveFixpoint, PlantedMotzkin) {
    Series mt = solve_fixpoint(
        [](const Series& g) {
            Series body = add(sub(Series::one(g.order()), g), mul(g, g));
            return add(Series::one(g.order() + 1), shift_up(body, 1));
        },
        Series::one(12), 12);
    EXPECT_TRUE(starts_with(mt, {1, 1, 1, 2, 4, 9, 21, 51}));
    // cross-check against mt = 1 + z m
    EXPECT_TRUE(equal_prefix(mt, planted_motzkin_series(12), 12));
}

TEST(SolveFixpoint, LabeledTrees) {
    Series t = labeled_trees_egf(8);
    Series counts = egf_counts(t);
    EXPECT_TRUE(starts_with(counts, {1, 1, 3, 16, 125, 1296}));
}

TEST(SolveFixpoint, ResidualProperty) {
    auto update = [](const Series& g) {
        return add(Series::one(g.order() + 1), shift_up(add(g, mul(g, g)), 1));
    };
    Series r = solve_fixpoint(update, Series::one(15), 15);
    Series resid = sub(update(r).truncated(15), r);
    EXPECT_TRUE(resid.is_zero_prefix());
}

TEST(SolveFixpoint, NotContracting) {
    auto update = [](const Series& g) { return add(Series::one(g.order()), g); };
    EXPECT_THROW(solve_fixpoint(update, Series::zero(6), 6), NotContracting);
}

TEST(SeriesReindex, Aerate) {
    Series c = catalan_series(4);
    Series a = aerate_variable(c, 3);
    EXPECT_EQ(a.order(), 14);
    EXPECT_EQ(a[0], Rat(1));
    EXPECT_EQ(a[3], Rat(1));
    EXPECT_EQ(a[6], Rat(2));
    EXPECT_EQ(a[9], Rat(5));
    EXPECT_EQ(a[7], Rat(0));
}

TEST(SeriesReindex, NegateVariable) {
    Series n = negate_variable(geometric_series(6));
    EXPECT_TRUE(starts_with(n, {1, -1, 1, -1, 1, -1}));
}

TEST(SeriesReindex, Valuation) {
    Series f = shift_up(pow_int(catalan_series(8), 3), 1);
    EXPECT_EQ(f.valuation(), std::optional<int>(1));
    EXPECT_EQ(Series::zero(5).valuation(), std::nullopt);
    EXPECT_EQ(coefficient(catalan_series(8), 4), Rat(14));
}

TEST(SeriesRing, AxiomsProperty) {
    Rng rng(41);
    for (int trial = 0; trial < 6; ++trial) {
        Series a = rng.next_series(7, 5), b = rng.next_series(7, 5), c = rng.next_series(7, 5);
        EXPECT_TRUE(equal_prefix(mul(mul(a, b), c), mul(a, mul(b, c)), 7));
        EXPECT_TRUE(equal_prefix(mul(a, add(b, c)), add(mul(a, b), mul(a, c)), 7));
        EXPECT_TRUE(equal_prefix(add(a, b), add(b, a), 7));
        EXPECT_TRUE(equal_prefix(mul(a, b), mul(b, a), 7));
    }
}

TEST(SeriesTruncation, OrderBookkeeping) {
    Series a(10), b(6);
    EXPECT_EQ(add(a, b).order(), 6);
    EXPECT_EQ(mul(a, b).order(), 6);
    Series f = shift_up(Series::one(5), 1);  // z, order 6
    EXPECT_EQ(div(a, f).order(), 5);
    EXPECT_EQ(aerate_variable(b, 2).order(), 13);
}
