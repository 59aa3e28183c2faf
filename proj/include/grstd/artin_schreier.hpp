#ifndef GRSTD_ARTIN_SCHREIER_HPP
#define GRSTD_ARTIN_SCHREIER_HPP

#include <string>
#include <vector>

#include "grstd/error.hpp"
#include "grstd/finite_field.hpp"
#include "grstd/integer.hpp"
#include "grstd/poly.hpp"
#include "grstd/quotient_ring.hpp"

namespace grstd {

/// Level k of the tower F_p = K_0 < K_1 < ... with [K_k : F_p] = p^k, where
/// K_k = K_{k-1}(alpha_k) and alpha_k^p - 1 = alpha_{k-1} (alpha_k + ... + alpha_k^{p-1}),
/// alpha_0 = 1.
struct TowerLevel {
  Int p;
  unsigned k = 0;
  /// Minimal polynomial of alpha_k over F_p.
  ZMPoly minpoly;
  /// alpha_{k-1} written in the basis 1, x, ..., x^{p^k - 1} of F_p[x]/(minpoly).
  QuotientRing::Elem previous_generator;
};

namespace detail {

/// 1 + x + ... + x^{p-1} - 1, the coefficient of y in the tower relation.
inline ZMPoly tower_s(const ModulusRef& m, unsigned long p) {
  std::vector<Int> c(p, Int(1));
  c[0] = 0;
  return ZMPoly(m, c);
}

}  // namespace detail

/// The tower relation f(x, y) = x^p - 1 - y (x + ... + x^{p-1}) evaluated at
/// (a, b) in a quotient ring.
inline QuotientRing::Elem tower_relation(const QuotientRing& ring, const QuotientRing::Elem& a,
                                         const QuotientRing::Elem& b) {
  const unsigned long p = ring.prime().get_ui();
  QuotientRing::Elem s = ring.zero(), power = ring.one();
  for (unsigned long i = 1; i < p; ++i) {
    power = ring.mul(power, a);
    s = ring.add(s, power);
  }
  return ring.sub(ring.sub(ring.mul(power, a), ring.one()), ring.mul(b, s));
}

/// Levels 1..k of the tower. Each minimal polynomial is the resultant
/// Res_y(g_{k-1}(y), f(x, y)); since f is linear in y this is
/// sum_i c_i (x^p - 1)^i S(x)^{D-i} for g_{k-1} = sum_i c_i y^i of degree D.
inline std::vector<TowerLevel> as_tower_levels(const Int& p, unsigned k) {
  if (!is_prime(p)) throw InvalidArgument("as_tower_levels: p = " + p.get_str() + " is not prime");
  if (k < 1) throw InvalidArgument("as_tower_levels: level must be >= 1");
  const unsigned long pu = to_u64(p);
  const ModulusRef fp = make_modulus(p, 1);
  const ZMPoly s = detail::tower_s(fp, pu);
  const ZMPoly a = ZMPoly::monomial(fp, 1, pu) - ZMPoly::constant(fp, 1);
  std::vector<TowerLevel> out;
  ZMPoly g = a - s;
  for (unsigned level_k = 1; level_k <= k; ++level_k) {
    if (level_k > 1) {
      const ZMPoly& prev = out.back().minpoly;
      const std::size_t D = static_cast<std::size_t>(prev.degree());
      std::vector<ZMPoly> apow{ZMPoly::constant(fp, 1)}, spow{ZMPoly::constant(fp, 1)};
      for (std::size_t i = 1; i <= D; ++i) {
        apow.push_back(apow.back() * a);
        spow.push_back(spow.back() * s);
      }
      ZMPoly next(fp);
      for (std::size_t i = 0; i <= D; ++i) {
        if (prev.coeff(i) != 0) next = next + ZMPoly::constant(fp, prev.coeff(i)) * apow[i] * spow[D - i];
      }
      g = next.monic();
    }
    const std::size_t expected = static_cast<std::size_t>(to_u64(pow_int(p, level_k)));
    detail::check_internal(g.degree() == static_cast<int>(expected), "tower polynomial has degree p^k");
    detail::check_internal(is_irreducible_modp(g), "tower polynomial is irreducible");
    QuotientRing ring(g);
    const auto alpha = ring.generator();
    QuotientRing::Elem prev_gen = ring.one();
    if (level_k > 1) {
      QuotientRing::Elem num = ring.sub(ring.pow(alpha, pu), ring.one());
      QuotientRing::Elem den = ring.from_poly(s);
      prev_gen = ring.mul(num, ring.inverse(den));
    }
    detail::check_internal(ring.is_zero(tower_relation(ring, alpha, prev_gen)), "tower relation holds");
    out.push_back({p, level_k, g, prev_gen});
  }
  return out;
}

inline TowerLevel as_tower_minpoly(const Int& p, unsigned k) { return as_tower_levels(p, k).back(); }

/// Defining polynomial of GR(p^n, p^k): the tower polynomial with its
/// digits read in Z/p^n. Level 0 gives x - 1.
inline ZMPoly galois_ring_p_tower(const Int& p, unsigned n, unsigned k) {
  if (n < 1) throw InvalidArgument("galois_ring_p_tower: precision must be >= 1");
  const ModulusRef m = make_modulus(p, n);
  if (k == 0) return ZMPoly(m, {Int(-1), Int(1)});
  return lift_coeffs(as_tower_minpoly(p, k).minpoly, m);
}

}  // namespace grstd

#endif  // GRSTD_ARTIN_SCHREIER_HPP
