#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "grstd/finite_field.hpp"

namespace grstd {
namespace {

ZMPoly fp_poly(long p, std::initializer_list<long> c) { return ZMPoly(Int(p), c); }

ZMPoly multiply_back(const Factorization& fz, const ModulusRef& m) {
  ZMPoly acc = ZMPoly::constant(m, fz.lead);
  for (const auto& f : fz.factors) {
    for (unsigned i = 0; i < f.multiplicity; ++i) acc = acc * f.poly;
  }
  return acc;
}

TEST(FactorModp, GaussPeriodPolynomialModSevenHasDoubleRoot) {
  auto fz = factor_modp(fp_poly(7, {1, 10, 5, -10, 0, 1}));
  ASSERT_EQ(fz.factors.size(), 4u);
  // (x-5)(x-3)^2(x-2)(x-1), sorted by coefficient tuple.
  EXPECT_EQ(fz.factors[0].poly.to_string(), "x+2");
  EXPECT_EQ(fz.factors[1].poly.to_string(), "x+4");
  EXPECT_EQ(fz.factors[1].multiplicity, 2u);
  EXPECT_EQ(fz.factors[2].poly.to_string(), "x+5");
  EXPECT_EQ(fz.factors[3].poly.to_string(), "x+6");
  for (std::size_t i : {0u, 2u, 3u}) EXPECT_EQ(fz.factors[i].multiplicity, 1u);
}

TEST(FactorModp, CubicSplitsModSeventeen) {
  auto fz = factor_modp(fp_poly(17, {1, -3, 0, 1}));
  ASSERT_EQ(fz.factors.size(), 3u);
  EXPECT_EQ(fz.factors[0].poly.to_string(), "x+3");
  EXPECT_EQ(fz.factors[1].poly.to_string(), "x+4");
  EXPECT_EQ(fz.factors[2].poly.to_string(), "x+10");
}

TEST(FactorModp, MonomialPower) {
  auto fz = factor_modp(fp_poly(2, {0, 0, 1}));
  ASSERT_EQ(fz.factors.size(), 1u);
  EXPECT_EQ(fz.factors[0].poly.to_string(), "x");
  EXPECT_EQ(fz.factors[0].multiplicity, 2u);
}

TEST(FactorModp, PthPowerInput) {
  // (x^2+1)^3 * (x+1)^6 over F_3 has zero derivative.
  ZMPoly g = fp_poly(3, {1, 0, 1});
  ZMPoly h = fp_poly(3, {1, 1});
  ZMPoly f = g * g * g * h * h * h * h * h * h;
  auto fz = factor_modp(f);
  ASSERT_EQ(fz.factors.size(), 2u);
  EXPECT_EQ(fz.factors[0].poly, h);
  EXPECT_EQ(fz.factors[0].multiplicity, 6u);
  EXPECT_EQ(fz.factors[1].poly, g);
  EXPECT_EQ(fz.factors[1].multiplicity, 3u);
}

TEST(FactorModp, Errors) {
  EXPECT_THROW(factor_modp(fp_poly(5, {})), InvalidArgument);
  EXPECT_THROW(factor_modp(ZMPoly(Int(25), {1, 1})), InvalidArgument);
  EXPECT_THROW(is_irreducible_modp(fp_poly(5, {3})), InvalidArgument);
}

TEST(IsIrreducible, Examples) {
  EXPECT_TRUE(is_irreducible_modp(fp_poly(3, {2, 2, 2, 1})));
  EXPECT_FALSE(is_irreducible_modp(fp_poly(5, {-1, 0, 1})));
  // Brute force: no root in F_2 and degree 3.
  ZMPoly f = fp_poly(2, {1, 1, 0, 1});
  EXPECT_NE(f.eval(Int(0)), 0);
  EXPECT_NE(f.eval(Int(1)), 0);
  EXPECT_TRUE(is_irreducible_modp(f));
  EXPECT_FALSE(is_irreducible_modp(fp_poly(2, {1, 0, 1})));
}

class RandomFactorization : public ::testing::TestWithParam<long> {};

TEST_P(RandomFactorization, MultipliesBackAndAgreesWithIrreducibility) {
  const long p = GetParam();
  auto m = make_modulus(Int(p));
  std::mt19937_64 gen(1000 + p);
  std::uniform_int_distribution<int> deg(1, 30);
  std::uniform_int_distribution<long> coeff(0, p - 1);
  for (int t = 0; t < 200; ++t) {
    std::vector<Int> c(static_cast<std::size_t>(deg(gen)) + 1);
    for (auto& a : c) a = coeff(gen);
    if (c.back() == 0) c.back() = 1;
    ZMPoly f(m, c);
    auto fz = factor_modp(f, gen());
    ASSERT_EQ(multiply_back(fz, m), f) << f;
    for (const auto& fac : fz.factors) ASSERT_TRUE(is_irreducible_modp(fac.poly)) << fac.poly;
    const bool single = fz.factors.size() == 1 && fz.factors[0].multiplicity == 1;
    ASSERT_EQ(is_irreducible_modp(f), single) << f;
  }
}

INSTANTIATE_TEST_SUITE_P(Primes, RandomFactorization, ::testing::Values(2L, 3L, 5L, 7L, 17L));

TEST(IsIrreducible, CountMatchesNecklaceFormula) {
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    for (std::size_t d = 1;; ++d) {
      const Int size = pow_int(Int(p), d);
      if (size > (1 << 14)) break;
      long expected = 0;
      for (std::uint64_t e = 1; e <= d; ++e) {
        if (d % e == 0) expected += mobius(e) * pow_int(Int(p), d / e).get_si();
      }
      expected /= static_cast<long>(d);
      long found = 0;
      auto m = make_modulus(Int(p));
      for_each_lex_tuple(Int(p), d, [&](const std::vector<Int>& low) {
        std::vector<Int> c = low;
        c.push_back(1);
        if (is_irreducible_modp(ZMPoly(m, c))) ++found;
        return false;
      });
      EXPECT_EQ(found, expected) << "p=" << p << " d=" << d;
    }
  }
}

TEST(CanonicalExtension, SmallestIrreducible) {
  EXPECT_EQ(canonical_extension(Int(2), 1).modulus_poly().to_string(), "x");
  EXPECT_EQ(canonical_extension(Int(2), 2).modulus_poly().to_string(), "x^2+x+1");
  EXPECT_EQ(canonical_extension(Int(3), 2).modulus_poly().to_string(), "x^2+1");
  EXPECT_EQ(canonical_extension(Int(17), 2).modulus_poly().to_string(), "x^2+3");
  EXPECT_THROW(canonical_extension(Int(17), 0), InvalidArgument);
}

TEST(CanonicalExtension, SeventeenSquaredByEnumeration) {
  // Oracle: x^2 + c is reducible iff -c is a square mod 17; x^2 + b x + c
  // with b = 0 comes first in the order, so the first nonsquare -c wins.
  std::set<long> squares;
  for (long a = 0; a < 17; ++a) squares.insert(a * a % 17);
  long first = -1;
  for (long c = 0; c < 17 && first < 0; ++c) {
    if (!squares.count((17 - c) % 17)) first = c;
  }
  EXPECT_EQ(first, 3);
}

TEST(ElementOfOrder, Examples) {
  FFExt f17 = canonical_extension(Int(17), 1);
  EXPECT_TRUE(element_of_order(f17, 1).is_one());
  FFElement g = element_of_order(f17, 16);
  EXPECT_EQ(element_order(g, 16), 16u);
  // 3 is a generator: brute-force order of 3 mod 17.
  long x = 1, order = 0;
  do {
    x = x * 3 % 17;
    ++order;
  } while (x != 1);
  EXPECT_EQ(order, 16);

  FFExt f289 = canonical_extension(Int(17), 2);
  FFElement w = element_of_order(f289, 9);
  EXPECT_TRUE(w.pow(Int(9)).is_one());
  EXPECT_FALSE(w.pow(Int(3)).is_one());
  EXPECT_THROW(element_of_order(f289, 7), InvalidArgument);
}

TEST(ElementOfOrder, ExactOrderForAllDivisors) {
  for (auto [p, d] : std::vector<std::pair<long, std::size_t>>{{2, 6}, {3, 4}, {17, 2}, {7, 4}}) {
    FFExt k = canonical_extension(Int(p), d);
    const std::uint64_t group = Int(k.size() - 1).get_ui();
    for (std::uint64_t M = 1; M <= group; ++M) {
      if (group % M) continue;
      FFElement w = element_of_order(k, M);
      ASSERT_TRUE(w.pow(Int(static_cast<unsigned long>(M))).is_one());
      for (auto q : prime_divisors(M)) {
        ASSERT_FALSE(w.pow(Int(static_cast<unsigned long>(M / q))).is_one()) << p << "^" << d << " M=" << M;
      }
    }
  }
}

TEST(RootsInField, Examples) {
  FFExt f17 = canonical_extension(Int(17), 1);
  auto roots = roots_in_field(fp_poly(17, {1, -3, 0, 1}), f17);
  ASSERT_EQ(roots.size(), 3u);
  EXPECT_EQ(roots[0].coeffs()[0], 7);
  EXPECT_EQ(roots[1].coeffs()[0], 13);
  EXPECT_EQ(roots[2].coeffs()[0], 14);

  FFExt f3 = canonical_extension(Int(3), 1);
  EXPECT_TRUE(roots_in_field(fp_poly(3, {1, 0, 1}), f3).empty());
  EXPECT_THROW(roots_in_field(fp_poly(3, {}), f3), InvalidArgument);
}

TEST(RootsInField, MatchesBruteForceInExtensions) {
  for (auto [p, d] : std::vector<std::pair<long, std::size_t>>{{3, 2}, {2, 4}, {5, 2}, {2, 3}}) {
    FFExt k = canonical_extension(Int(p), d);
    std::mt19937_64 gen(p * 31 + d);
    std::uniform_int_distribution<long> coeff(0, p - 1);
    for (int t = 0; t < 20; ++t) {
      std::vector<Int> c(6);
      for (auto& a : c) a = coeff(gen);
      c.back() = 1;
      ZMPoly f(Int(p), c);
      std::vector<std::vector<Int>> brute;
      for_each_lex_tuple(Int(p), d, [&](const std::vector<Int>& e) {
        FFElement x = k.element(e), acc = k.zero();
        for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = acc * x + k.scalar(f.coeffs()[i]);
        if (acc.is_zero()) brute.push_back(x.coeffs());
        return false;
      });
      auto roots = roots_in_field(f, k);
      ASSERT_EQ(roots.size(), brute.size()) << f;
      for (std::size_t i = 0; i < roots.size(); ++i) ASSERT_EQ(roots[i].coeffs(), brute[i]);
    }
  }
  // x^2 + 1 over F_9: exactly two roots.
  EXPECT_EQ(roots_in_field(fp_poly(3, {1, 0, 1}), canonical_extension(Int(3), 2)).size(), 2u);
}

}  // namespace
}  // namespace grstd
