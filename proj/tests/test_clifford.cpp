#include "icalg/clifford.hpp"
#include "icalg/verify.hpp"

#include <gtest/gtest.h>

using namespace icalg;

namespace {

using C = CliffordElement;

C scalar(std::size_t n, const Rational& c) { return C::scalar(n, c); }

C random_clifford(Rng& rng, std::size_t n) {
    std::uniform_int_distribution<std::uint32_t> mask(0, (1u << (2 * n)) - 1);
    C out(n);
    for (int t = 0; t < 3; ++t) {
        const auto m = mask(rng);
        C mono = scalar(n, random_rational(rng));
        for (std::size_t g = 0; g < 2 * n; ++g)
            if (m >> g & 1) mono = mono * C::generator(n, g);
        out += mono;
    }
    return out;
}

}  // namespace

TEST(Clifford, Relations) {
    const std::size_t n = 2;
    for (std::size_t a = 0; a < 2 * n; ++a)
        for (std::size_t b = 0; b < 2 * n; ++b) {
            const C ga = C::generator(n, a), gb = C::generator(n, b);
            const bool paired = (a < n) != (b < n) && a % n == b % n;
            EXPECT_EQ(ga * gb + gb * ga, scalar(n, paired ? 2 : 0)) << a << " " << b;
        }
}

TEST(Clifford, Examples) {
    const C x1 = C::x(1, 0), y1 = C::y(1, 0);
    EXPECT_TRUE((x1 * x1).is_zero());
    EXPECT_EQ(y1 * x1, scalar(1, 2) - x1 * y1);
    EXPECT_EQ(x1 * y1 * x1, x1 * 2);
    EXPECT_EQ((x1 * y1) * (x1 * y1), x1 * y1 * 2);
}

TEST(Clifford, Associativity) {
    Rng rng(13);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + static_cast<std::size_t>(t % 3);
        const C a = random_clifford(rng, n), b = random_clifford(rng, n), c = random_clifford(rng, n);
        ASSERT_EQ((a * b) * c, a * (b * c));
    }
}

TEST(Gamma, RankOneDiagonal) {
    EXPECT_EQ(gamma_E(0, 0, 1), scalar(1, Rational(1, 2)) - C::x(1, 0) * C::y(1, 0) * Rational(1, 2));
}

TEST(Gamma, BracketWithGenerator) {
    const std::size_t n = 2;
    EXPECT_EQ(clifford_commutator(gamma_E(0, 1, n), C::y(n, 1)), C::y(n, 0));
    EXPECT_EQ(clifford_commutator(gamma_E(0, 1, n), C::x(n, 0)), C::x(n, 1) * Rational(-1));
    EXPECT_TRUE(clifford_commutator(gamma_E(0, 1, n), C::y(n, 0)).is_zero());
}

TEST(Gamma, LieHomomorphismAndAction) {
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto hom = gamma_lie_hom_check(n);
        const auto act = gamma_action_check(n);
        EXPECT_TRUE(hom.passed) << hom.failure;
        EXPECT_TRUE(act.passed) << act.failure;
        EXPECT_EQ(hom.checked, n * n * n * n);
    }
}

TEST(Gamma, LinearExtensionRejectsHigherDegree) {
    EXPECT_THROW(gamma_linear(UEAElement::gen(0, 0) * UEAElement::gen(0, 0), 1), std::invalid_argument);
    EXPECT_EQ(gamma_linear(UEAElement::scalar(3), 2), scalar(2, 3));
}

TEST(Spin, Action) {
    const std::size_t n = 2;
    const SpinVector u = SpinVector::basis(n, 0);
    EXPECT_EQ(spin_action(C::x(n, 0), u), SpinVector::basis(n, 1));
    EXPECT_TRUE(spin_action(C::y(n, 0), u).is_zero());
    EXPECT_TRUE(spin_action(C::y(n, 1), u).is_zero());
    // y1 x1 u = 2u
    SpinVector two_u(n);
    two_u.add(0, 2);
    EXPECT_EQ(spin_action(C::y(n, 0), SpinVector::basis(n, 1)), two_u);
    EXPECT_TRUE(spin_action(C::x(n, 0), SpinVector::basis(n, 1)).is_zero());
}

TEST(Spin, DiagonalEigenvalues) {
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t i = 0; i < n; ++i) {
            const auto M = spin_matrix(gamma_E(i, i, n));
            for (std::size_t e = 0; e < (std::size_t{1} << n); ++e)
                for (std::size_t r = 0; r < M.size(); ++r) {
                    const Rational expect = r != e ? Rational(0) : Rational(e >> i & 1 ? -1 : 1, 2);
                    EXPECT_EQ(M[r][e], expect);
                }
        }
}

TEST(Spin, Weights) {
    const auto w2 = spin_weights(2);
    ASSERT_EQ(w2.size(), 4u);
    for (const auto& [wt, m] : w2) {
        EXPECT_EQ(m, 1u);
        for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(Rational(abs(wt[i])), Rational(1, 2));
    }
    const auto w1 = spin_weights(1);
    EXPECT_EQ(w1.front().first, Weight({Rational(-1, 2)}));
    EXPECT_EQ(w1.back().first, Weight({Rational(1, 2)}));
}

TEST(Spin, ModuleStructure) {
    // S is a C(V)-module: (ab).s = a.(b.s)
    Rng rng(19);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 1 + static_cast<std::size_t>(t % 3);
        const C a = random_clifford(rng, n), b = random_clifford(rng, n);
        SpinVector s(n);
        s.add(static_cast<SpinVector::Mask>(t % (1 << n)), random_rational(rng));
        s.add(0, 1);
        EXPECT_EQ(spin_action(a * b, s), spin_action(a, spin_action(b, s)));
    }
}

TEST(RankOneGamma, ExpandedForm) {
    const std::vector<Rational> v{Rational(3, 5), Rational(4, 5)};
    const C g = gamma_rank_one(v);
    const C expect = gamma_E(0, 0, 2) * Rational(9, 25) + gamma_E(0, 1, 2) * Rational(12, 25) +
                     gamma_E(1, 0, 2) * Rational(12, 25) + gamma_E(1, 1, 2) * Rational(16, 25);
    EXPECT_EQ(g, expect);
}

TEST(RankOneGamma, SquaresToQuarter) {
    for (const auto& v : rational_unit_vectors()) {
        const C g = gamma_rank_one(v);
        EXPECT_EQ(g * g, scalar(v.size(), Rational(1, 4)));
    }
}

TEST(RankOneGamma, RejectsNonUnitVectors) {
    EXPECT_THROW(gamma_rank_one({Rational(1), Rational(1)}), std::invalid_argument);
    EXPECT_THROW(gamma_rank_one({Rational(1, 2)}), std::invalid_argument);
}

TEST(RankOneGamma, TwistedIdentityInClifford) {
    const std::vector<Rational> samples{0, 1, Rational(-2, 3), Rational(7, 2)};
    for (const auto& v : rational_unit_vectors())
        for (unsigned k = 0; k <= 4; ++k) {
            const auto rep = clifford_twisted_identity_check(Poly::monomial(k), v, samples);
            EXPECT_TRUE(rep.passed) << rep.failure;
        }
    Rng rng(29);
    for (int t = 0; t < 5; ++t) {
        const auto rep = clifford_twisted_identity_check(random_poly(rng, 3), {Rational(5, 13), Rational(12, 13)},
                                                         samples);
        EXPECT_TRUE(rep.passed) << rep.failure;
    }
}
