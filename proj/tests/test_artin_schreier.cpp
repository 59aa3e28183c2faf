#include <gtest/gtest.h>

#include "grstd/artin_schreier.hpp"

namespace grstd {
namespace {

TEST(TowerMinpoly, ThreeAdicTable) {
  EXPECT_EQ(as_tower_minpoly(Int(3), 1).minpoly.to_string(), "x^3+2x^2+2x+2");
  EXPECT_EQ(as_tower_minpoly(Int(3), 2).minpoly.to_string(), "x^9+2x^8+x^7+x^5+x^3+2x+2");
  EXPECT_EQ(as_tower_minpoly(Int(3), 3).minpoly.to_string(),
            "x^27+2x^26+2x^24+x^23+2x^22+2x^21+2x^18+x^16+x^15+2x^14+2x^13+2x^12+x^10+2x^9+x^8+x^7+x^6+2x^5+x^3+x^2+"
            "2x+2");
}

TEST(TowerMinpoly, TwoAdicFirstLevel) { EXPECT_EQ(as_tower_minpoly(Int(2), 1).minpoly.to_string(), "x^2+x+1"); }

TEST(TowerMinpoly, Errors) {
  EXPECT_THROW(as_tower_minpoly(Int(4), 1), InvalidArgument);
  EXPECT_THROW(as_tower_minpoly(Int(3), 0), InvalidArgument);
}

TEST(TowerMinpoly, DegreeIrreducibilityAndRelations) {
  for (long p : {2L, 3L, 5L, 7L}) {
    unsigned kmax = 0;
    while (pow_int(Int(p), kmax + 1) <= 243) ++kmax;
    auto levels = as_tower_levels(Int(p), kmax);
    ASSERT_EQ(levels.size(), kmax);
    for (std::size_t i = 0; i < levels.size(); ++i) {
      const auto& lv = levels[i];
      EXPECT_EQ(Int(lv.minpoly.degree()), pow_int(Int(p), lv.k));
      EXPECT_TRUE(is_irreducible_modp(lv.minpoly));
      QuotientRing ring(lv.minpoly);
      EXPECT_TRUE(ring.is_zero(tower_relation(ring, ring.generator(), lv.previous_generator)));
      if (i > 0) {
        // The previous generator is a root of the previous minimal polynomial.
        QuotientRing::Elem acc = ring.zero();
        const auto& prev = levels[i - 1].minpoly;
        for (std::size_t j = prev.coeffs().size(); j-- > 0;) {
          acc = ring.add(ring.mul(acc, lv.previous_generator), ring.scalar(prev.coeff(j)));
        }
        EXPECT_TRUE(ring.is_zero(acc)) << "p=" << p << " k=" << lv.k;
      } else {
        EXPECT_EQ(lv.previous_generator, ring.one());
      }
    }
  }
}

TEST(GaloisRingPTower, Examples) {
  auto f = galois_ring_p_tower(Int(3), 2, 1);
  EXPECT_EQ(f.modulus(), 9);
  EXPECT_EQ(f.to_string(), "x^3+2x^2+2x+2");
  auto level3 = as_tower_minpoly(Int(3), 3).minpoly.to_string();
  for (unsigned n : {1u, 2u, 5u}) EXPECT_EQ(galois_ring_p_tower(Int(3), n, 3).to_string(), level3);
  auto trivial = galois_ring_p_tower(Int(5), 3, 0);
  EXPECT_EQ(trivial.to_string(), "x+124");
  EXPECT_EQ(trivial.modulus(), 125);
}

}  // namespace
}  // namespace grstd
