#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

namespace skein {
namespace {

SkeinElement S(std::string_view text) { return parse_skein(text, Basis::Standard); }
SkeinElement T(std::string_view text) { return parse_skein(text, Basis::ChebyshevT); }

TEST(ChebyshevOf, Examples) {
    EXPECT_EQ(chebyshev_of({2, -2}), S("(2,-2) - 2 empty"));
    EXPECT_EQ(chebyshev_of({1, -1}), S("(1,-1)"));
    EXPECT_EQ(chebyshev_of({3, 0}), S("(3,0) - 3 (1,0)"));
    EXPECT_EQ(chebyshev_of({-3, 0}), S("(3,0) - 3 (1,0)"));
    EXPECT_EQ(chebyshev_of({0, 0}), S("2 empty"));
}

TEST(BasisChange, Examples) {
    EXPECT_EQ(to_T_basis(S("(2,0)")), T("(2,0) + 2 empty"));
    EXPECT_EQ(from_T_basis(T("(2,0)")), S("(2,0) - 2 empty"));
    EXPECT_EQ(to_T_basis(S("empty")), T("empty"));
    EXPECT_EQ(from_T_basis(T("empty")), S("empty"));
    EXPECT_THROW(to_T_basis(T("(1,0)")), BasisMismatch);
    EXPECT_THROW(from_T_basis(S("(1,0)")), BasisMismatch);
}

TEST(MulT, Examples) {
    EXPECT_EQ(mul_T(T("(1,0)"), T("(0,1)")), T("A (1,-1) + A^-1 (1,1)"));
    EXPECT_EQ(mul_T(T("(1,0)"), T("(1,0)")), T("(2,0) + 2 empty"));
    // det((1,1),(1,-1)) = -2: A^-2 on the difference, A^2 on the sum.
    EXPECT_EQ(mul_T(T("(1,1)"), T("(1,-1)")), T("A^-2 (0,2) + A^2 (2,0)"));
    EXPECT_EQ(mul_T(T("empty"), T("(3,1)")), T("(3,1)"));
    EXPECT_THROW(mul_T(S("(1,0)"), T("(0,1)")), BasisMismatch);
}

TEST(Mul, Examples) {
    EXPECT_EQ(mul(S("(1,0)"), S("(0,1)")), S("A (1,-1) + A^-1 (1,1)"));
    EXPECT_EQ(mul(S("empty"), S("(2,3) + A (1,1)")), S("(2,3) + A (1,1)"));
    EXPECT_EQ(mul(S("(1,0)"), S("(1,0)")), S("(2,0)"));
    EXPECT_EQ(mul(S("(1,1)"), S("(1,-1)")), S("A^-2 (0,2) + A^2 (2,0) + (-2A^-2 - 2A^2) empty"));
    EXPECT_THROW(mul(S("(1,0)"), T("(0,1)")), BasisMismatch);
}

TEST(Mul, NoncommutativityWitness) {
    const SkeinElement xy = mul(S("(1,0)"), S("(0,1)"));
    const SkeinElement yx = mul(S("(0,1)"), S("(1,0)"));
    EXPECT_NE(xy, yx);
    EXPECT_EQ(yx, S("A^-1 (1,-1) + A (1,1)"));
}

TEST(SkeinElement, LinearStructure) {
    SkeinElement x = S("(1,0) + A (0,1)");
    x -= S("(1,0)");
    EXPECT_EQ(x, S("A (0,1)"));
    x += S("-A (0,1)");
    EXPECT_TRUE(x.is_zero());
    EXPECT_EQ(LaurentPoly::a_power(2) * S("(1,0)"), S("A^2 (1,0)"));
    EXPECT_EQ(S("A (1,0)").bar(), S("A^-1 (1,0)"));
}

TEST(SkeinProperty, BasisRoundTrips) {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 500; ++i) {
        const SkeinElement s = testing::random_skein(rng, Basis::Standard);
        const SkeinElement t = testing::random_skein(rng, Basis::ChebyshevT);
        ASSERT_EQ(from_T_basis(to_T_basis(s)), s) << format(s);
        ASSERT_EQ(to_T_basis(from_T_basis(t)), t) << format(t);
    }
}

TEST(SkeinProperty, Associativity) {
    std::mt19937_64 rng(202);
    for (int i = 0; i < 150; ++i) {
        const SkeinElement x = testing::random_skein(rng, Basis::ChebyshevT, 2);
        const SkeinElement y = testing::random_skein(rng, Basis::ChebyshevT, 2);
        const SkeinElement z = testing::random_skein(rng, Basis::ChebyshevT, 2);
        ASSERT_EQ(mul_T(mul_T(x, y), z), mul_T(x, mul_T(y, z))) << format(x) << " | " << format(y) << " | " << format(z);
    }
}

TEST(SkeinProperty, Bilinearity) {
    std::mt19937_64 rng(303);
    for (int i = 0; i < 150; ++i) {
        const SkeinElement x = testing::random_skein(rng, Basis::Standard, 2);
        const SkeinElement y = testing::random_skein(rng, Basis::Standard, 2);
        const SkeinElement z = testing::random_skein(rng, Basis::Standard, 2);
        const LaurentPoly k = testing::random_nonzero_laurent(rng);
        SkeinElement yz = y;
        yz += z;
        SkeinElement expected = mul(x, y);
        expected += mul(x, z);
        ASSERT_EQ(mul(x, yz), expected);
        ASSERT_EQ(mul(k * x, y), k * mul(x, y));
    }
}

// mul_T(y, x) is the A -> A^-1 image of mul_T(x, y).
TEST(SkeinProperty, SwapSymmetry) {
    std::mt19937_64 rng(404);
    for (int i = 0; i < 300; ++i) {
        const SkeinElement x = SkeinElement::basis_element(Basis::ChebyshevT, testing::random_class(rng));
        const SkeinElement y = SkeinElement::basis_element(Basis::ChebyshevT, testing::random_class(rng));
        ASSERT_EQ(mul_T(y, x), mul_T(x, y).bar());
    }
}

// Powers of one class stay in the commutative subalgebra of its direction:
// (1,0)^n = (n,0) in the multicurve basis.
TEST(SkeinProperty, ParallelPowers) {
    SkeinElement acc = S("empty");
    for (long n = 1; n <= 8; ++n) {
        acc = mul(acc, S("(1,0)"));
        ASSERT_EQ(acc, SkeinElement::basis_element(Basis::Standard, UnorientedClass::of({n, 0})));
    }
}

}  // namespace
}  // namespace skein
