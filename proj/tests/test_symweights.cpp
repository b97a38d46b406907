#include "icalg/verify.hpp"
#include "icalg/weights.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

using namespace icalg;

namespace {

const SymPolyInHBasis kExampleP{{0, 18, Rational(-9, 2), -2, Rational(1, 2)}, 2};

// Sum over all exponent vectors with |l| = k.
Rational h_brute(unsigned k, const std::vector<Rational>& x) {
    Rational total = 0;
    std::vector<unsigned> l(x.size(), 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
        if (i + 1 == x.size()) {
            l[i] = left;
            Rational term = 1;
            for (std::size_t j = 0; j < x.size(); ++j)
                for (unsigned e = 0; e < l[j]; ++e) term *= x[j];
            total += term;
            return;
        }
        for (unsigned a = 0; a <= left; ++a) {
            l[i] = a;
            rec(i + 1, left - a);
        }
    };
    rec(0, k);
    return total;
}

// Number of Gelfand-Tsetlin patterns with integral top row lambda.
long gt_count(const std::vector<long>& top) {
    if (top.size() <= 1) return 1;
    long total = 0;
    std::vector<long> row(top.size() - 1);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == row.size()) {
            total += gt_count(row);
            return;
        }
        for (long v = top[i + 1]; v <= top[i]; ++v) {
            row[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return total;
}

}  // namespace

TEST(Rho, Values) {
    EXPECT_EQ(rho(1), Weight({0}));
    EXPECT_EQ(rho(2), Weight({Rational(1, 2), Rational(-1, 2)}));
    EXPECT_EQ(rho(3), Weight({1, 0, -1}));
    for (std::size_t n = 1; n <= 6; ++n) {
        Weight r = rho(n);
        Rational s = 0;
        for (std::size_t i = 0; i < n; ++i) {
            s += r[i];
            if (i + 1 < n) {
                EXPECT_EQ(r[i] - r[i + 1], 1);
            }
        }
        EXPECT_EQ(s, 0);
    }
}

TEST(Dominance, Examples) {
    EXPECT_TRUE(is_dominant(Weight({Rational(5, 2), Rational(1, 2)})));
    EXPECT_FALSE(is_dominant(Weight({0, 1})));
    EXPECT_TRUE(is_dominant(Weight({Rational(-7, 3)})));
    EXPECT_FALSE(is_dominant(Weight({Rational(1, 2), 0})));
    EXPECT_TRUE(is_dominant(Weight({Rational(1, 3), Rational(1, 3), Rational(-2, 3)})));
}

TEST(WeylDim, Examples) {
    EXPECT_EQ(weyl_dim(Weight({1, 0})), 2);
    for (int k = 0; k < 8; ++k) EXPECT_EQ(weyl_dim(Weight({k, 0})), k + 1);
    EXPECT_EQ(weyl_dim(Weight({Rational(-5, 3)})), 1);
    EXPECT_THROW(weyl_dim(Weight({0, 1})), std::invalid_argument);
}

TEST(WeylDim, GelfandTsetlinCount) {
    for (long a = 0; a <= 4; ++a)
        for (long b = 0; b <= a; ++b)
            for (long c = -2; c <= b; ++c)
                EXPECT_EQ(weyl_dim(Weight({a, b, c})), gt_count({a, b, c})) << a << " " << b << " " << c;
}

TEST(WeylDim, ShiftInvariance) {
    Rng rng(1);
    for (int t = 0; t < 20; ++t) {
        Weight lam({Rational(4), Rational(2), Rational(2), Rational(-1)});
        Rational c = random_rational(rng);
        EXPECT_EQ(weyl_dim(lam + Weight::constant(4, c)), weyl_dim(lam));
        EXPECT_GE(weyl_dim(lam), 1);
    }
}

TEST(FormalDim, SingularWeightsVanish) {
    // (0, 1) has mu + rho = (1/2, 1/2): repeated coordinate.
    EXPECT_TRUE(is_rho_singular(Weight({0, 1})));
    EXPECT_EQ(formal_dim(Weight({0, 1})), 0);
    EXPECT_EQ(formal_dim(Weight({3, 1})), 3);
    EXPECT_FALSE(is_rho_singular(Weight({3, 1})));
}

TEST(CompleteHomogeneous, Examples) {
    EXPECT_EQ(complete_homogeneous(0, {Rational(3), Rational(-2)}), 1);
    EXPECT_EQ(complete_homogeneous(2, {Rational(3), Rational(0)}), 9);
    EXPECT_EQ(complete_homogeneous(2, {Rational(1), Rational(1)}), 3);
}

TEST(CompleteHomogeneous, BruteForce) {
    Rng rng(17);
    for (std::size_t n = 1; n <= 3; ++n)
        for (unsigned k = 0; k <= 6; ++k)
            for (int t = 0; t < 3; ++t) {
                std::vector<Rational> x(n);
                for (auto& v : x) v = random_rational(rng);
                EXPECT_EQ(complete_homogeneous(k, x), h_brute(k, x));
            }
}

TEST(EvalP, ExampleValues) {
    EXPECT_EQ(eval_P(kExampleP, {3, 0}), 0);
    EXPECT_EQ(eval_P(kExampleP, {0, 0}), 0);
    EXPECT_EQ(eval_P(kExampleP, {2, 0}), 10);
    EXPECT_EQ(eval_P(kExampleP, {3, -1}), -5);
    EXPECT_EQ(eval_P(kExampleP, {1, -1}), -4);
    EXPECT_EQ(eval_P(kExampleP, {2, -2}), -10);
    EXPECT_EQ(eval_P(kExampleP, {1, -2}), -16);
    // four corners
    EXPECT_EQ(eval_P(kExampleP, {3, -3}), 0);
    EXPECT_EQ(eval_P(kExampleP, {0, -3}), 0);
}

TEST(EvalP, DirectPolynomial) {
    // P = 18 h1 - 9/2 h2 - 2 h3 + 1/2 h4 written out in two variables.
    auto direct = [](const Rational& a, const Rational& b) -> Rational {
        Rational h1 = a + b, h2 = a * a + a * b + b * b, h3 = a * a * a + a * a * b + a * b * b + b * b * b,
                 h4 = a * a * a * a + a * a * a * b + a * a * b * b + a * b * b * b + b * b * b * b;
        return 18 * h1 - Rational(9, 2) * h2 - 2 * h3 + Rational(1, 2) * h4;
    };
    for (int a = 0; a <= 3; ++a)
        for (int b = -3; b <= 0; ++b) EXPECT_EQ(eval_P(kExampleP, {a, b}), direct(a, b));
}

TEST(EvalP, PermutationInvariance) {
    Rng rng(23);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 1 + static_cast<std::size_t>(t % 4);
        std::vector<Rational> w(7);
        for (auto& c : w) c = random_rational(rng);
        SymPolyInHBasis P(w, n);
        std::vector<Rational> x(n);
        for (auto& v : x) v = random_rational(rng);
        const Rational base = eval_P(P, x);
        std::sort(x.begin(), x.end());
        do {
            EXPECT_EQ(eval_P(P, x), base);
        } while (std::next_permutation(x.begin(), x.end()));
    }
}

TEST(EvalP, RankMismatchThrows) {
    EXPECT_THROW(eval_P(kExampleP, {1, 2, 3}), std::invalid_argument);
}

TEST(EvalP, PlainCoordinates) {
    // P_of shifts by rho before evaluating.
    const Weight lam = minus_rho(Weight({3, 0}));
    EXPECT_EQ(lam, Weight({Rational(5, 2), Rational(1, 2)}));
    EXPECT_EQ(P_of(kExampleP, lam), 0);
}
