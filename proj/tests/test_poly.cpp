#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "grstd/poly.hpp"

namespace grstd {
namespace {

ZMPoly random_poly(std::mt19937_64& gen, const ModulusRef& m, int max_degree) {
  std::uniform_int_distribution<int> deg(-1, max_degree);
  std::vector<Int> c(static_cast<std::size_t>(deg(gen) + 1));
  std::uniform_int_distribution<unsigned long> coeff(0, m->value.get_ui() - 1);
  for (auto& a : c) a = coeff(gen);
  return ZMPoly(m, std::move(c));
}

TEST(Modulus, RejectsNonPrimePowers) {
  EXPECT_THROW(make_modulus(Int(12)), InvalidArgument);
  EXPECT_THROW(make_modulus(Int(1)), InvalidArgument);
  EXPECT_THROW(make_modulus(Int(15), 2), InvalidArgument);
  auto m = make_modulus(Int(4913));
  EXPECT_EQ(m->p, 17);
  EXPECT_EQ(m->exponent, 3u);
}

TEST(ZMPoly, FreshmansDreamModTwo) {
  ZMPoly f(Int(2), {1, 1});
  EXPECT_EQ((f * f).to_string(), "x^2+1");
}

TEST(ZMPoly, StoresLeastNonnegativeResidues) {
  ZMPoly f(Int(289), {1, -3, 0, 1});
  EXPECT_EQ(f.to_string(), "x^3+286x+1");
  EXPECT_EQ(f.to_string_balanced(), "x^3-3x+1");
  EXPECT_EQ(ZMPoly(Int(7), {0, 0, 0}).degree(), -1);
  EXPECT_EQ(ZMPoly(Int(7), {}).to_string(), "0");
}

TEST(ZMPoly, TableOneRootAtPrecisionTwo) {
  // x + 214 mod 289 has root -214 = 75.
  ZMPoly f(Int(289), {1, -3, 0, 1});
  EXPECT_EQ(f.eval(Int(75)), 0);
}

TEST(ZMPoly, LinearFactorDividesGaussPeriodPolynomialModSeven) {
  ZMPoly f(Int(7), {1, 10, 5, -10, 0, 1});
  ZMPoly d(Int(7), {6, 1});
  auto [q, r] = divrem(f, d);
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(q * d, f);
}

TEST(ZMPoly, ModulusMismatchIsAnError) {
  ZMPoly a(Int(9), {1, 1});
  ZMPoly b(Int(27), {1, 1});
  EXPECT_THROW(a + b, InvalidArgument);
  EXPECT_THROW(a * b, InvalidArgument);
  EXPECT_FALSE(a == b);
}

TEST(ZMPoly, DivisionByNonUnitLeadingCoefficient) {
  ZMPoly a(Int(9), {1, 2, 1});
  ZMPoly b(Int(9), {1, 3});
  EXPECT_THROW(divrem(a, b), ArithmeticError);
  EXPECT_THROW(divrem(a, ZMPoly(Int(9), {})), ArithmeticError);
}

TEST(XGcd, CommonFactor) {
  ZMPoly a(Int(5), {-1, 0, 1});
  ZMPoly b(Int(5), {-1, 1});
  XGcd x = xgcd_modp(a, b);
  EXPECT_EQ(x.g, b);
  EXPECT_EQ(x.u * a + x.v * b, x.g);
}

TEST(XGcd, RepeatedFactorOfGaussPeriodPolynomialModSeven) {
  ZMPoly f(Int(7), {1, 10, 5, -10, 0, 1});
  XGcd x = xgcd_modp(f, f.derivative());
  EXPECT_GE(x.g.degree(), 1);
  EXPECT_EQ(x.g, ZMPoly(Int(7), {-3, 1}));
  EXPECT_EQ(x.u * f + x.v * f.derivative(), x.g);
}

TEST(XGcd, CoprimeOverF2) {
  // Oracle: x^3+x+1 has no root in F_2, so no monic divisor of degree 1
  // or 2 (all 6 candidates) divides it; the gcd must be 1.
  ZMPoly a(Int(2), {1, 1, 0, 1});
  ZMPoly b(Int(2), {0, 1, 1});
  XGcd x = xgcd_modp(a, b);
  EXPECT_EQ(x.g, ZMPoly(Int(2), {1}));
  EXPECT_EQ(x.u * a + x.v * b, x.g);
}

TEST(XGcd, CompositeModulusRejected) {
  ZMPoly a(Int(9), {1, 1});
  EXPECT_THROW(xgcd_modp(a, a), InvalidArgument);
}

TEST(LiftCoeffs, Examples) {
  ZMPoly f3(Int(3), {2, 2, 2, 1});
  EXPECT_EQ(lift_coeffs(f3, Int(9)).to_string(), "x^3+2x^2+2x+2");
  EXPECT_TRUE(lift_coeffs(ZMPoly(Int(3), {}), Int(27)).is_zero());
  ZMPoly f2(Int(2), {1, 1, 0, 1});
  EXPECT_EQ(lift_coeffs(f2, Int(4)), ZMPoly(Int(4), {1, -3, 0, 1}));
  EXPECT_EQ(lift_coeffs(f2, Int(4)).degree(), 3);
  EXPECT_THROW(lift_coeffs(f2, Int(9)), InvalidArgument);
}

TEST(Render, Conventions) {
  EXPECT_EQ(ZPoly({1, -3, 0, 1}).to_string(), "x^3-3x+1");
  EXPECT_EQ(ZPoly({-1, 1}).to_string(), "x-1");
  EXPECT_EQ(ZPoly({0, -1}).to_string(), "-x");
  EXPECT_EQ(ZPoly({}).to_string(), "0");
  EXPECT_EQ(ZMPoly(Int(4913), {1659, 4910, 0, 1}).to_string(), "x^3+4910x+1659");
}

class RingAxioms : public ::testing::TestWithParam<long> {};

TEST_P(RingAxioms, RandomTriples) {
  auto m = make_modulus(Int(GetParam()));
  std::mt19937_64 gen(GetParam());
  for (int t = 0; t < 1000; ++t) {
    ZMPoly a = random_poly(gen, m, 8), b = random_poly(gen, m, 8), c = random_poly(gen, m, 8);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a - b) + b, a);
  }
}

TEST_P(RingAxioms, DivremReconstruction) {
  auto m = make_modulus(Int(GetParam()));
  std::mt19937_64 gen(GetParam() + 1);
  std::uniform_int_distribution<unsigned long> unit_pick(1, m->p.get_ui() - 1);
  for (int t = 0; t < 300; ++t) {
    ZMPoly a = random_poly(gen, m, 12);
    ZMPoly b = random_poly(gen, m, 5);
    // Force a unit leading coefficient.
    std::vector<Int> bc = b.coeffs();
    bc.push_back(Int(unit_pick(gen)));
    b = ZMPoly(m, bc);
    auto [q, r] = divrem(a, b);
    ASSERT_EQ(q * b + r, a);
    ASSERT_LT(r.degree(), b.degree());
  }
}

INSTANTIATE_TEST_SUITE_P(Moduli, RingAxioms, ::testing::Values(4L, 27L, 49L, 4913L));

TEST(LiftCoeffs, LiftThenReduceIsIdentity) {
  std::mt19937_64 gen(7);
  for (long p : {2L, 3L, 5L, 17L}) {
    auto fp = make_modulus(Int(p));
    auto big = make_modulus(Int(p), 4);
    for (int t = 0; t < 50; ++t) {
      ZMPoly f = random_poly(gen, fp, 10);
      ASSERT_EQ(reduce(lift_coeffs(f, big), fp), f);
    }
  }
}

}  // namespace
}  // namespace grstd
