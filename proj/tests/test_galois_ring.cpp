#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "golden_tables.hpp"
#include "grstd/galois_ring.hpp"

namespace grstd {
namespace {

TEST(PrimePowerPolynomial, SeventeenThreeTable) {
  for (unsigned k = 0; k <= 2; ++k) {
    for (unsigned n = 1; n <= 3; ++n) {
      auto pp = prime_power_polynomial(Int(17), n, 3, k);
      EXPECT_EQ(pp.poly.to_string(), golden::kSeventeenThree[k][n - 1]) << "k=" << k << " n=" << n;
      EXPECT_TRUE(pp.cross_check.ran) << pp.cross_check.detail;
    }
    EXPECT_EQ(prime_power_polynomial(Int(17), 10, 3, k).poly.to_string_balanced(), golden::kSeventeenThree[k][3]);
  }
}

TEST(PrimePowerPolynomial, SevenFiveLowRows) {
  for (unsigned k = 0; k <= 1; ++k) {
    for (unsigned n = 1; n <= 3; ++n) {
      auto pp = prime_power_polynomial(Int(7), n, 5, k);
      EXPECT_EQ(pp.poly.to_string(), golden::kSevenFive[k][n - 1]) << "k=" << k << " n=" << n;
    }
    EXPECT_EQ(prime_power_polynomial(Int(7), 10, 5, k).poly.to_string_balanced(), golden::kSevenFive[k][3]);
  }
}

TEST(PrimePowerPolynomial, SevenFiveLevelZeroUsesCofactorLift) {
  // f_0 mod 7 has a double root at 3, but the distinguished root 1 is simple.
  auto pp = prime_power_polynomial(Int(7), 2, 5, 0);
  EXPECT_TRUE(pp.cross_check.ran);
  EXPECT_NE(pp.cross_check.detail.find("two-factor"), std::string::npos);
}

TEST(PrimePowerPolynomial, TwoThree) {
  auto pp = prime_power_polynomial(Int(2), 2, 3, 1);
  EXPECT_EQ(pp.poly.to_string(), "x^3+x+1");
  EXPECT_EQ(pp.poly.modulus(), 4);
  EXPECT_TRUE(pp.cross_check.ran);
  for (unsigned n = 1; n <= 4; ++n) EXPECT_TRUE(prime_power_polynomial(Int(2), n, 3, 1).cross_check.ran);
}

TEST(PrimePowerPolynomial, CapsAndErrors) {
  BuildOptions tight;
  tight.caps.max_aux_degree = 4;
  EXPECT_THROW(prime_power_polynomial(Int(17), 2, 3, 1, tight), ResourceCapExceeded);
  tight = {};
  tight.caps.max_precision = 3;
  EXPECT_THROW(prime_power_polynomial(Int(17), 4, 3, 1, tight), ResourceCapExceeded);
  EXPECT_THROW(prime_power_polynomial(Int(15), 2, 3, 1), InvalidArgument);
  EXPECT_THROW(prime_power_model(Int(3), 2, 3, 1), InvalidArgument);
  // Without room for the exact minimal polynomial only the Teichmüller route runs.
  BuildOptions small;
  small.caps.max_minpoly_degree = 5;
  auto pp = prime_power_polynomial(Int(17), 2, 3, 2, small);
  EXPECT_FALSE(pp.cross_check.ran);
  EXPECT_EQ(pp.poly.to_string(), golden::kSeventeenThree[2][1]);
}

TEST(GaussPeriodLifts, CubicRecurrenceAtFullPrecision) {
  auto g = gauss_period_lifts(Int(17), 3, 3, 3);
  const QuotientRing& R = *g.aux;
  for (unsigned j = 1; j <= 3; ++j) {
    const auto& e = g.eta[j];
    auto lhs = R.sub(R.mul(R.mul(e, e), e), R.scale(Int(3), e));
    EXPECT_EQ(lhs, g.eta[j - 1]) << "j=" << j;
  }
}

TEST(GaussPeriodLifts, CompositionFormulaModSeventeen) {
  // G_k mod 17 = (x^3 - 3x)^{o k} - 7.
  const ModulusRef f17 = make_modulus(Int(17), 1);
  const ZMPoly t(f17, {Int(0), Int(-3), Int(0), Int(1)});
  ZMPoly comp = ZMPoly::x(f17);
  for (unsigned k = 0; k <= 2; ++k) {
    EXPECT_EQ(prime_power_polynomial(Int(17), 1, 3, k).poly, comp - ZMPoly::constant(f17, 7));
    comp = t.compose(comp);
  }
}

TEST(EpsilonDigits, Examples) {
  auto zero = epsilon_digits(0, 12);
  EXPECT_TRUE(zero.digits.empty());
  auto a = epsilon_digits(1, 6);
  EXPECT_EQ(a.digit(2, 1), 1u);
  EXPECT_EQ(a.digit(3, 1), 2u);
  auto b = epsilon_digits(5, 6);
  EXPECT_EQ(b.digit(2, 1), 1u);
  EXPECT_EQ(b.digit(3, 1), 1u);
  EXPECT_THROW(epsilon_digits(6, 6), InvalidArgument);
}

TEST(EpsilonDigits, DigitsSumToFraction) {
  for (std::uint64_t m : {6u, 12u, 36u, 45u, 60u, 243u, 100u}) {
    for (std::uint64_t i = 0; i < m; ++i) {
      auto e = epsilon_digits(i, m);
      // sum c / r^k as a fraction over m.
      Int num = 0;
      for (const auto& [key, c] : e.digits) {
        EXPECT_LT(c, key.first);
        const std::uint64_t rk = pow_u64(key.first, key.second);
        ASSERT_EQ(m % rk, 0u);
        num += Int(static_cast<unsigned long>(c * (m / rk)));
      }
      EXPECT_EQ(mod(num, Int(static_cast<unsigned long>(m))), Int(static_cast<unsigned long>(i))) << i << "/" << m;
    }
  }
}

TEST(BasisLabels, LowestTerms) {
  EXPECT_EQ(basis_labels(6), (std::vector<std::string>{"0", "1/6", "1/3", "1/2", "2/3", "5/6"}));
  EXPECT_EQ(basis_labels(1), (std::vector<std::string>{"0"}));
}

TEST(StandardModel, Examples) {
  EXPECT_EQ(standard_model(Int(17), 2, 3).defining_poly->to_string(), "x^3+286x+214");
  auto trivial = standard_model(Int(5), 3, 1);
  EXPECT_EQ(trivial.defining_poly->to_string(), "x+124");
  EXPECT_EQ(trivial.m, 1u);
  EXPECT_EQ(standard_model(Int(2), 2, 2).defining_poly->to_string(), "x^2+x+1");
  EXPECT_EQ(standard_model(Int(3), 2, 3).defining_poly->to_string(), golden::kThreeThree[0]);
  EXPECT_THROW(standard_model(Int(4), 2, 3), InvalidArgument);
  BuildOptions tight;
  tight.caps.max_rank = 10;
  EXPECT_THROW(standard_model(Int(2), 1, 11, tight), ResourceCapExceeded);
}

TEST(StandardModel, DeterministicOutput) {
  auto a = standard_model(Int(2), 2, 6), b = standard_model(Int(2), 2, 6);
  EXPECT_EQ(a.constants, b.constants);
  EXPECT_EQ(a.defining_poly, b.defining_poly);
  EXPECT_EQ(a.generator, b.generator);
}

TEST(RingOps, TableRelationAndIdentity) {
  auto model = standard_model(Int(17), 2, 3);
  ModelArithmetic ar(model);
  const RingElement x = ar.element(model.generator);
  // x^3 + 286x + 214 = 0, so x^3 = 3x + 75 mod 289.
  EXPECT_EQ(ar.pow(x, Int(3)), ar.add(ar.scale(Int(3), x), ar.scalar(75)));
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    std::vector<Int> c(3);
    for (auto& v : c) v = static_cast<unsigned long>(rng() % 289);
    const RingElement u = ar.element(c);
    EXPECT_EQ(ar.mul(u, ar.one()), u);
  }
}

TEST(RingOps, InverseOfOnePlusNilpotent) {
  auto model = standard_model(Int(3), 4, 6);
  ModelArithmetic ar(model);
  const Int N = model.modulus();
  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    std::vector<Int> c(model.m);
    for (auto& v : c) v = static_cast<unsigned long>(rng() % 81);
    const RingElement w = ar.element(c);
    const RingElement pw = ar.scale(Int(3), w);
    const RingElement u = ar.add(ar.one(), pw);
    // (1 + z)^{-1} = 1 - z + z^2 - z^3 with z^4 = 0.
    RingElement series = ar.zero(), term = ar.one();
    for (int i = 0; i < 4; ++i) {
      series = i % 2 == 0 ? ar.add(series, term) : ar.sub(series, term);
      term = ar.mul(term, pw);
    }
    EXPECT_EQ(ar.inverse(u), series);
    EXPECT_EQ(ar.mul(ar.inverse(u), u), ar.one());
  }
  EXPECT_THROW(ar.inverse(ar.scalar(3)), ArithmeticError);
  EXPECT_THROW(ar.inverse(ar.zero()), ArithmeticError);
  EXPECT_EQ(ar.pow(ar.add(ar.one(), ar.one()), Int(-1)), ar.inverse(ar.scalar(2)));
}

TEST(VerifyModel, GaloisRingFourTwo) {
  auto model = standard_model(Int(2), 2, 2);
  auto report = verify_model(model);
  EXPECT_TRUE(report.ok());
  ASSERT_NE(report.find("unit_count"), nullptr);
  EXPECT_EQ(report.find("unit_count")->detail, "units=12 expected=12");
  EXPECT_TRUE(report.find("ideal_chain")->passed);
  EXPECT_TRUE(report.find("nonunits_form_pR")->passed);
}

TEST(VerifyModel, CorruptedConstantBreaksAssociativity) {
  auto model = standard_model(Int(2), 2, 3);
  model.a(1, 1, 1) = mod(model.a(1, 1, 1) + 1, model.modulus());
  auto report = verify_model(model);
  EXPECT_FALSE(report.ok());
  EXPECT_FALSE(report.find("associativity_basis")->passed);
}

TEST(VerifyModel, CorruptedRankTwoModelIsNoLongerGaloisRing) {
  // Every commutative rank-2 algebra is associative; the damage shows up in
  // the defining polynomial and the unit count instead.
  auto model = standard_model(Int(2), 2, 2);
  model.a(1, 1, 1) = mod(model.a(1, 1, 1) + 1, model.modulus());
  auto report = verify_model(model);
  EXPECT_FALSE(report.ok());
  EXPECT_TRUE(report.find("associativity_basis")->passed);
  EXPECT_FALSE(report.find("unit_count")->passed);
  EXPECT_FALSE(report.find("defining_poly")->passed);
}

TEST(VerifyModel, SampledOnlyForLargeRing) {
  auto report = verify_model(standard_model(Int(17), 2, 3));
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.find("unit_count"), nullptr);
  EXPECT_EQ(report.find("associativity_sampled")->detail, "10000 random element triples");
}

TEST(VerifyModel, RankSixOverFour) {
  auto report = verify_model(standard_model(Int(2), 2, 6));
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.find("unit_count")->detail, "units=4032 expected=4032");
}

TEST(ResidueField, Examples) {
  EXPECT_EQ(residue_field_model(standard_model(Int(17), 2, 3)).defining_poly->to_string(), "x^3+14x+10");
  EXPECT_EQ(residue_field_model(standard_model(Int(7), 3, 5)).defining_poly->to_string(), "x^5+4x^3+3x^2+2x+6");
  auto fp = residue_field_model(standard_model(Int(11), 2, 1));
  EXPECT_EQ(fp.m, 1u);
  EXPECT_EQ(fp.n, 1u);
}

TEST(TensorCompose, SingleComponentUnchanged) {
  auto a = standard_model(Int(5), 2, 3);
  auto b = tensor_compose({a}, 3);
  EXPECT_EQ(a.constants, b.constants);
  EXPECT_THROW(tensor_compose({a, a}, 9), InvalidArgument);
  EXPECT_THROW(tensor_compose({a, standard_model(Int(7), 2, 2)}, 6), InvalidArgument);
}

// e_i e_j in Z/25[x, y]/(G2(x), G3(y)), each e_i the tensor of its
// component basis elements written in the power bases.
TEST(TensorCompose, AgreesWithBivariateQuotient) {
  const Int N(25);
  auto m2 = standard_model(Int(5), 2, 2), m3 = standard_model(Int(5), 2, 3);
  auto m6 = standard_model(Int(5), 2, 6);
  auto power_coords = [](const ExplicitModel& comp) {
    // Column j of the inverse of the generator-power matrix gives e_j in powers.
    ModelArithmetic ar(comp);
    std::vector<std::vector<Int>> powers;
    RingElement x = ar.one();
    for (std::size_t j = 0; j < comp.m; ++j) {
      powers.push_back(x.coords);
      x = ar.mul(x, ar.element(comp.generator));
    }
    SpanSolver s(powers, comp.modulus(), comp.p);
    std::vector<std::vector<Int>> out;
    for (std::size_t j = 0; j < comp.m; ++j) out.push_back(*s.coordinates(ar.basis(j).coords));
    return out;
  };
  auto b2 = power_coords(m2), b3 = power_coords(m3);
  const QuotientRing R2(*m2.defining_poly), R3(*m3.defining_poly);
  // Bivariate element as a 2 x 3 grid of coefficients of x^a y^b.
  using Grid = std::vector<std::vector<Int>>;
  auto mul = [&](const Grid& u, const Grid& v) {
    Grid w(2, std::vector<Int>(3));
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 2; ++c)
          for (int d = 0; d < 3; ++d) {
            QuotientRing::Elem xa = R2.pow(R2.generator(), static_cast<unsigned long>(a + c));
            QuotientRing::Elem yb = R3.pow(R3.generator(), static_cast<unsigned long>(b + d));
            for (int s = 0; s < 2; ++s)
              for (int t = 0; t < 3; ++t) w[s][t] = mod(w[s][t] + u[a][b] * v[c][d] * xa[s] * yb[t], N);
          }
    return w;
  };
  auto basis = [&](std::size_t i) {
    auto e = epsilon_digits(i, 6);
    const std::size_t j2 = e.digit(2, 1), j3 = e.digit(3, 1);
    Grid g(2, std::vector<Int>(3));
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 3; ++b) g[a][b] = mod(b2[j2][a] * b3[j3][b], N);
    return g;
  };
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      Grid expect(2, std::vector<Int>(3));
      for (std::size_t k = 0; k < 6; ++k) {
        Grid ek = basis(k);
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 3; ++b) expect[a][b] = mod(expect[a][b] + m6.a(i, j, k) * ek[a][b], N);
      }
      EXPECT_EQ(mul(basis(i), basis(j)), expect) << i << "," << j;
    }
  }
  EXPECT_TRUE(verify_model(m6).ok());
}

TEST(TensorCompose, ResidueOfRankSixOverFourIsField) {
  auto model = standard_model(Int(2), 2, 6);
  ASSERT_TRUE(model.defining_poly.has_value());
  auto res = residue_field_model(model);
  auto report = verify_model(res);
  EXPECT_EQ(report.find("unit_count")->detail, "units=63 expected=63");
}

TEST(Coherence, PrecisionAndResidue) {
  for (auto [p, m] : std::vector<std::pair<long, std::uint64_t>>{{17, 3}, {2, 6}, {3, 4}, {7, 5}, {5, 6}}) {
    auto high = standard_model(Int(p), 3, m);
    for (unsigned k = 1; k < 3; ++k) {
      auto low = standard_model(Int(p), k, m);
      auto red = reduce_precision(high, k);
      EXPECT_EQ(red.constants, low.constants) << p << "," << m;
      EXPECT_EQ(red.defining_poly, low.defining_poly);
    }
    EXPECT_EQ(residue_field_model(high).constants, standard_model(Int(p), 1, m).constants);
  }
}

TEST(Independence, OmegaChoiceAndAuxField) {
  for (auto [p, r] : std::vector<std::pair<long, std::uint64_t>>{{17, 3}, {7, 5}}) {
    auto base = prime_power_model(Int(p), 2, r, 1);
    auto g = gauss_period_lifts(Int(p), 2, r, 1);
    const LevelData& lv = g.level;
    FFExt aux = canonical_extension(Int(p), multiplicative_order(Int(p), lv.conductor(lv.l + 1)));
    auto candidates = roots_realizing(aux, lv, 1, g.descriptor, 1000);
    ASSERT_GT(candidates.size(), 1u);
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      BuildOptions o;
      o.omega_choice = c;
      auto other = prime_power_model(Int(p), 2, r, 1, o);
      EXPECT_EQ(other.defining_poly, base.defining_poly);
      EXPECT_EQ(other.constants, base.constants);
    }
    // Other irreducibles of the auxiliary degree.
    int tried = 0;
    for_each_lex_tuple(Int(p), aux.degree(), [&](const std::vector<Int>& low) {
      std::vector<Int> c = low;
      c.push_back(1);
      ZMPoly h(make_modulus(Int(p), 1), c);
      if (h == aux.modulus_poly() || !is_irreducible_modp(h)) return false;
      BuildOptions o;
      o.aux_modulus = h;
      auto other = prime_power_model(Int(p), 2, r, 1, o);
      EXPECT_EQ(other.defining_poly, base.defining_poly);
      EXPECT_EQ(other.constants, base.constants);
      return ++tried >= 3;
    });
    EXPECT_EQ(tried, 3);
  }
}

}  // namespace
}  // namespace grstd
