#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "skein/chebyshev.hpp"
#include "test_support.hpp"

namespace skein {
namespace {

IntPoly poly(std::initializer_list<long> c) {
    std::vector<BigInt> v;
    for (long x : c) v.emplace_back(x);
    return IntPoly(v);
}

// x + x^-1 with x written as A.
LaurentPoly x_plus_inverse() { return LaurentPoly::a_power(1) + LaurentPoly::a_power(-1); }

// Regroups a palindromic Laurent polynomial as sum c_k (x^k + x^-k) plus a
// constant by peeling off the top exponent.
std::map<unsigned, BigInt> regroup(LaurentPoly p) {
    std::map<unsigned, BigInt> out;
    while (!p.is_zero()) {
        const int top = p.max_exponent();
        const BigInt c = p.coeff(top);
        if (top == 0) {
            out[0] = c;
            break;
        }
        out[static_cast<unsigned>(top)] = c;
        p -= LaurentPoly::monomial(c, top) + LaurentPoly::monomial(c, -top);
    }
    return out;
}

TEST(ChebT, Examples) {
    EXPECT_EQ(cheb_T(0), poly({2}));
    EXPECT_EQ(cheb_T(1), poly({0, 1}));
    EXPECT_EQ(cheb_T(2), poly({-2, 0, 1}));
    EXPECT_EQ(cheb_T(5), poly({0, 5, 0, -5, 0, 1}));
}

// T_n(2 cos t) = 2 cos(n t), evaluated in floating point.
TEST(ChebT, TrigonometricOracle) {
    for (unsigned n = 0; n <= 20; ++n) {
        const IntPoly t = cheb_T(n);
        for (double theta : {0.1, 0.7, 1.3, 2.9}) {
            const double x = 2 * std::cos(theta);
            double acc = 0;
            for (auto it = t.coeffs().rbegin(); it != t.coeffs().rend(); ++it) acc = acc * x + it->convert_to<double>();
            EXPECT_NEAR(acc, 2 * std::cos(n * theta), 1e-6) << "n=" << n;
        }
    }
}

TEST(ChebT, SubstitutionIdentity) {
    for (unsigned n = 0; n <= 64; ++n) {
        const LaurentPoly lhs = cheb_T(n).evaluate(x_plus_inverse());
        const int e = static_cast<int>(n);
        const LaurentPoly rhs = LaurentPoly::a_power(e) + LaurentPoly::a_power(-e);
        ASSERT_EQ(lhs, rhs) << "n=" << n;
    }
}

TEST(ChebT, DegreeAndLeadingCoefficient) {
    for (unsigned n = 1; n <= 64; ++n) {
        const IntPoly t = cheb_T(n);
        ASSERT_EQ(t.degree(), static_cast<long>(n));
        ASSERT_EQ(t.coeff(n), 1);
        for (unsigned k = 0; k <= n; ++k)
            if ((n - k) % 2 == 1) ASSERT_EQ(t.coeff(k), 0);
    }
}

TEST(PowerInT, Examples) {
    EXPECT_EQ(power_in_T(1), (std::map<unsigned, BigInt>{{1, 1}}));
    EXPECT_EQ(power_in_T(2), (std::map<unsigned, BigInt>{{2, 1}, {0, 2}}));
    EXPECT_EQ(power_in_T(3), (std::map<unsigned, BigInt>{{3, 1}, {1, 3}}));
    EXPECT_EQ(power_in_T(0), (std::map<unsigned, BigInt>{{0, 1}}));
}

// Brute force: expand (x + 1/x)^n and peel off x^k + x^-k.
TEST(PowerInT, MatchesRegroupedExpansion) {
    for (unsigned n = 1; n <= 40; ++n) ASSERT_EQ(power_in_T(n), regroup(x_plus_inverse().pow(n))) << "n=" << n;
}

// X^n expanded back through T_k reproduces X^n; the constant counts against 1.
TEST(PowerInT, RoundTrip) {
    for (unsigned n = 0; n <= 64; ++n) {
        std::vector<BigInt> acc(n + 1);
        for (const auto& [k, c] : power_in_T(n)) {
            if (k == 0) {
                acc[0] += c;
                continue;
            }
            const IntPoly t = cheb_T(k);
            for (std::size_t i = 0; i < t.coeffs().size(); ++i) acc[i] += c * t.coeffs()[i];
        }
        std::vector<BigInt> expected(n + 1);
        expected[n] = 1;
        ASSERT_EQ(IntPoly(acc), IntPoly(expected)) << "n=" << n;
    }
}

TEST(Binomial, Values) {
    EXPECT_EQ(binomial(5, 2), 10);
    EXPECT_EQ(binomial(64, 32), BigInt("1832624140942590534"));
    EXPECT_EQ(binomial(3, 4), 0);
}

}  // namespace
}  // namespace skein
