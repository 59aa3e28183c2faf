#ifndef GRSTD_GAUSS_PERIODS_HPP
#define GRSTD_GAUSS_PERIODS_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "grstd/error.hpp"
#include "grstd/finite_field.hpp"
#include "grstd/integer.hpp"
#include "grstd/poly.hpp"
#include "grstd/quotient_ring.hpp"

namespace grstd {

/// Default cap on the degree of exactly computed Gauss-period minimal
/// polynomials (3^5).
inline constexpr std::uint64_t kDefaultMinpolyDegreeCap = 243;

/// Cyclotomic bookkeeping for a prime r != p.
///
/// bold_r is r for odd r and 4 for r = 2; the level l is the r-adic
/// valuation of (p^{phi(bold_r)} - 1) / (bold_r^2 / r), and r^l primes of
/// the Delta_r-fixed cyclotomic tower lie above p.
struct LevelData {
  Int p;
  std::uint64_t r = 0;
  std::uint64_t bold_r = 0;
  unsigned l = 0;

  /// bold_r * r^k, the conductor of the Gauss periods of level k.
  std::uint64_t conductor(unsigned k) const { return bold_r * pow_u64(r, k); }
  /// phi(bold_r) = |Delta_r|.
  std::uint64_t delta_order() const { return r == 2 ? 2 : r - 1; }
  /// Number of primes above p: r^l.
  std::uint64_t prime_count() const { return pow_u64(r, l); }
};

inline LevelData level(const Int& p, std::uint64_t r) {
  if (!is_prime(p)) throw InvalidArgument("level: p = " + p.get_str() + " is not prime");
  if (!is_prime(r)) throw InvalidArgument("level: r = " + std::to_string(r) + " is not prime");
  if (p == Int(static_cast<unsigned long>(r))) {
    throw InvalidArgument("level: r = p is the Artin-Schreier case, not a Gauss-period case");
  }
  LevelData lv{p, r, r == 2 ? 4u : r, 0};
  const Int numerator = pow_int(p, lv.delta_order()) - 1;
  const Int denominator(static_cast<unsigned long>(lv.bold_r * lv.bold_r / r));
  detail::check_internal(mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t()) != 0,
                         "bold_r^2/r divides p^phi(bold_r) - 1");
  lv.l = valuation(Int(numerator / denominator), Int(static_cast<unsigned long>(r)));
  return lv;
}

/// The subgroup Delta_r of (Z/M)^*, M = bold_r * r^k, sorted ascending.
inline std::vector<std::uint64_t> delta_exponents(std::uint64_t r, std::uint64_t M) {
  if (!is_prime(r)) throw InvalidArgument("delta_exponents: r is not prime");
  const std::uint64_t bold_r = r == 2 ? 4 : r;
  std::uint64_t rest = M;
  if (rest % bold_r != 0) throw InvalidArgument("delta_exponents: M is not bold_r * r^k");
  rest /= bold_r;
  while (rest % r == 0) rest /= r;
  if (rest != 1) throw InvalidArgument("delta_exponents: M is not bold_r * r^k");
  if (r == 2) return {1, M - 1};
  std::vector<std::uint64_t> out;
  for (std::uint64_t a = 1; a < M; ++a) {
    if (gcd_u64(a, M) == 1 && powmod_u64(a, r - 1, M) == 1) out.push_back(a);
  }
  return out;
}

/// eta_{r,k,i} as a formal sum of zeta_M^e over its exponent orbit.
struct GaussPeriodSymbolic {
  std::uint64_t r = 0;
  unsigned k = 0;
  std::uint64_t i = 0;
  std::uint64_t conductor = 0;
  std::vector<std::uint64_t> exponent_orbit;
};

/// Exponent 1 + i * bold_r * r^{k-1} of the root of unity summed by
/// eta_{r,k,i}; level 0 uses exponent 1.
inline std::uint64_t gauss_period_base_exponent(std::uint64_t r, unsigned k, std::uint64_t i) {
  const std::uint64_t bold_r = r == 2 ? 4 : r;
  if (k == 0) return 1;
  return (1 + i * bold_r * pow_u64(r, k - 1)) % (bold_r * pow_u64(r, k));
}

inline GaussPeriodSymbolic gauss_period_symbolic(std::uint64_t r, unsigned k, std::uint64_t i) {
  const std::uint64_t bold_r = r == 2 ? 4 : r;
  GaussPeriodSymbolic g{r, k, i, bold_r * pow_u64(r, k), {}};
  const std::uint64_t base = gauss_period_base_exponent(r, k, i);
  for (auto e : delta_exponents(r, g.conductor)) g.exponent_orbit.push_back(mulmod_u64(e, base, g.conductor));
  std::sort(g.exponent_orbit.begin(), g.exponent_orbit.end());
  return g;
}

namespace detail {

/// Exact division of a by a monic b over Z.
inline ZPoly divexact_monic(const ZPoly& a, const ZPoly& b) {
  std::vector<Int> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  if (r.size() < bc.size()) return {};
  std::vector<Int> q(r.size() - db);
  for (std::size_t k = r.size(); k-- > db;) {
    q[k - db] = r[k];
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= q[k - db] * bc[j];
  }
  for (std::size_t j = 0; j < db; ++j) check_internal(r[j] == 0, "exact division over Z");
  return ZPoly(std::move(q));
}

}  // namespace detail

/// Phi_M by inclusion-exclusion from the x^d - 1, d | M.
inline ZPoly cyclotomic_polynomial(std::uint64_t M) {
  ZPoly num({1}), den({1});
  for (std::uint64_t d = 1; d <= M; ++d) {
    if (M % d != 0) continue;
    const int mu = mobius(M / d);
    if (mu == 0) continue;
    ZPoly term = ZPoly::monomial(1, d) - ZPoly({1});
    (mu > 0 ? num : den) = (mu > 0 ? num : den) * term;
  }
  return detail::divexact_monic(num, den);
}

/// Minimal polynomial over Q of eta_{r,level,0}, computed exactly.
///
/// The conjugates are the sums over c * Delta_r for coset representatives c
/// of (Z/M)^*/Delta_r. Their product is formed in the group ring Z[Z/M]
/// (= Z[x]/(x^M - 1)); every coefficient is then reduced modulo Phi_M and
/// must come out as a rational integer.
inline ZPoly gauss_period_minpoly_exact(std::uint64_t r, unsigned level_k,
                                        std::uint64_t degree_cap = kDefaultMinpolyDegreeCap) {
  if (!is_prime(r)) throw InvalidArgument("gauss_period_minpoly_exact: r is not prime");
  const std::uint64_t bold_r = r == 2 ? 4 : r;
  const std::uint64_t M = bold_r * pow_u64(r, level_k);
  const auto delta = delta_exponents(r, M);
  const std::uint64_t degree = euler_phi(M) / delta.size();
  if (degree > degree_cap) {
    throw ResourceCapExceeded("exact Gauss-period minimal polynomial of degree " + std::to_string(degree) +
                              " exceeds cap " + std::to_string(degree_cap));
  }

  std::vector<std::vector<std::uint64_t>> conjugates;
  std::vector<bool> covered(M, false);
  for (std::uint64_t c = 1; c < M; ++c) {
    if (covered[c] || gcd_u64(c, M) != 1) continue;
    std::vector<std::uint64_t> orbit;
    for (auto e : delta) {
      const std::uint64_t x = mulmod_u64(c, e, M);
      covered[x] = true;
      orbit.push_back(x);
    }
    conjugates.push_back(std::move(orbit));
  }
  detail::check_internal(conjugates.size() == degree, "coset count equals phi(M)/|Delta|");

  using GroupRingElem = std::vector<Int>;
  std::vector<GroupRingElem> poly{GroupRingElem(M)};
  poly[0][0] = 1;
  for (const auto& orbit : conjugates) {
    std::vector<GroupRingElem> next(poly.size() + 1, GroupRingElem(M));
    for (std::size_t j = 0; j < poly.size(); ++j) {
      const auto& src = poly[j];
      auto& up = next[j + 1];
      for (std::uint64_t a = 0; a < M; ++a) up[a] += src[a];
      auto& here = next[j];
      for (std::uint64_t a = 0; a < M; ++a) {
        if (src[a] == 0) continue;
        for (auto e : orbit) here[(a + e) % M] -= src[a];
      }
    }
    poly = std::move(next);
  }

  const ZPoly phi = cyclotomic_polynomial(M);
  const std::size_t dphi = static_cast<std::size_t>(phi.degree());
  std::vector<Int> out;
  out.reserve(poly.size());
  for (auto& coeff : poly) {
    // Reduce sum coeff[a] x^a modulo the monic Phi_M.
    for (std::size_t k = coeff.size(); k-- > dphi;) {
      if (coeff[k] == 0) continue;
      const Int c = coeff[k];
      for (std::size_t j = 0; j <= dphi; ++j) coeff[k - dphi + j] -= c * phi.coeffs()[j];
    }
    for (std::size_t a = 1; a < dphi && a < coeff.size(); ++a) {
      detail::check_internal(coeff[a] == 0, "Gauss-period minimal polynomial has integer coefficients");
    }
    out.push_back(coeff[0]);
  }
  ZPoly f(std::move(out));
  detail::check_internal(f.is_monic() && f.degree() == static_cast<int>(degree), "minimal polynomial is monic");
  return f;
}

/// Closed form for r = 3: f_k(x) = x^N F_k(1/x), N = 3^{k+1}, where
/// F_k(x) = x^N + sum_{n=0}^{N/2} (-1)^n N/(N-n) C(N-n, n) x^{2n}.
inline ZPoly gauss_period_minpoly_r3_formula(unsigned k) {
  const unsigned long N = pow_u64(3, k + 1);
  std::vector<Int> F(N + 1);
  F[N] = 1;
  for (unsigned long n = 0; n <= N / 2; ++n) {
    Int binom;
    mpz_bin_uiui(binom.get_mpz_t(), N - n, n);
    Int term = Int(static_cast<unsigned long>(N)) * binom;
    detail::check_internal(mpz_divisible_ui_p(term.get_mpz_t(), N - n) != 0, "Dickson coefficient is integral");
    term /= static_cast<unsigned long>(N - n);
    if (n % 2 == 1) term = -term;
    F[2 * n] += term;
  }
  return ZPoly(std::move(F)).reversed();
}

// ---------------------------------------------------------------------------
// Primes above p, encoded by Gauss-period residues.
// ---------------------------------------------------------------------------

/// Residues (a_j), j = i + k r, of eta_{r,k+1,i} modulo one prime above p.
struct IdealDescriptor {
  std::vector<Int> a;

  friend bool operator==(const IdealDescriptor&, const IdealDescriptor&) = default;
  friend bool operator<(const IdealDescriptor& x, const IdealDescriptor& y) { return x.a < y.a; }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t j = 0; j < a.size(); ++j) s += (j ? "," : "") + a[j].get_str();
    return s + ")";
  }
};

/// Value of eta_{r,j,i} in a ring containing zeta, a primitive
/// (bold_r r^j)-th root of unity.
inline QuotientRing::Elem gauss_period_value(const QuotientRing& ring, const QuotientRing::Elem& zeta, std::uint64_t r,
                                             unsigned j, std::uint64_t i) {
  const auto g = gauss_period_symbolic(r, j, i);
  QuotientRing::Elem sum = ring.zero();
  for (auto e : g.exponent_orbit) sum = ring.add(sum, ring.pow(zeta, static_cast<unsigned long>(e)));
  return sum;
}

/// Descriptor of the prime determined by omega, a primitive M_l-th root of
/// unity in a finite field. Every entry must lie in the prime field.
inline IdealDescriptor descriptor_of(const LevelData& lv, const FFElement& omega_l) {
  const QuotientRing& k = omega_l.parent().ring();
  IdealDescriptor out;
  const std::uint64_t Ml = lv.conductor(lv.l);
  for (unsigned level_k = 0; level_k < lv.l; ++level_k) {
    const std::uint64_t M = lv.conductor(level_k + 1);
    const auto zeta = k.pow(omega_l.coeffs(), static_cast<unsigned long>(Ml / M));
    for (std::uint64_t i = 0; i < lv.r; ++i) {
      auto eta = gauss_period_value(k, zeta, lv.r, level_k + 1, i);
      detail::check_internal(k.is_scalar(eta), "Gauss-period residue lies in the prime field");
      out.a.push_back(eta[0]);
    }
  }
  return out;
}

/// All primes above p, sorted lexicographically, each with the first
/// primitive M_l-th root of unity realizing it.
struct IdealEnumeration {
  LevelData level;
  FFExt aux;
  std::vector<IdealDescriptor> descriptors;
  std::vector<FFElement> witnesses;
};

/// Walks omega0^c for c in (Z/M)^* ascending, omega0 = element_of_order(aux, M).
template <typename Visitor>
void for_each_primitive_root(const FFExt& aux, std::uint64_t M, Visitor&& visit) {
  const FFElement omega0 = element_of_order(aux, M);
  for (std::uint64_t c = 1; c < M; ++c) {
    if (gcd_u64(c, M) != 1) continue;
    if (visit(omega0.pow(Int(static_cast<unsigned long>(c))))) return;
  }
}

inline IdealEnumeration enumerate_ideal_descriptors(const Int& p, std::uint64_t r) {
  const LevelData lv = level(p, r);
  const std::uint64_t Ml = lv.conductor(lv.l);
  FFExt aux = canonical_extension(p, multiplicative_order(p, Ml));
  std::vector<std::pair<IdealDescriptor, FFElement>> found;
  std::set<IdealDescriptor> seen;
  for_each_primitive_root(aux, Ml, [&](const FFElement& omega) {
    IdealDescriptor d = descriptor_of(lv, omega);
    if (seen.insert(d).second) found.emplace_back(std::move(d), omega);
    return false;
  });
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  detail::check_internal(found.size() == lv.prime_count(), "exactly r^l primes lie above p");
  IdealEnumeration out{lv, aux, {}, {}};
  for (auto& [d, w] : found) {
    out.descriptors.push_back(std::move(d));
    out.witnesses.push_back(std::move(w));
  }
  return out;
}

/// The standard prime: the lexicographically smallest descriptor, with the
/// root of unity that realizes it pinned for provenance.
struct StandardIdeal {
  LevelData level;
  IdealDescriptor descriptor;
  FFExt aux;
  FFElement omega;
};

inline StandardIdeal select_standard_ideal(const IdealEnumeration& e) {
  if (e.descriptors.empty()) throw InvalidArgument("select_standard_ideal: empty descriptor list");
  return {e.level, e.descriptors.front(), e.aux, e.witnesses.front()};
}

/// Primitive M_{l+k}-th roots of unity omega in aux whose power omega^{r^k}
/// realizes the target descriptor, in the canonical enumeration order. At
/// most `limit` are returned.
inline std::vector<FFElement> roots_realizing(const FFExt& aux, const LevelData& lv, unsigned k,
                                              const IdealDescriptor& target, std::size_t limit) {
  std::vector<FFElement> out;
  const std::uint64_t M = lv.conductor(lv.l + k);
  const Int down(static_cast<unsigned long>(pow_u64(lv.r, k)));
  for_each_primitive_root(aux, M, [&](const FFElement& omega) {
    if (descriptor_of(lv, omega.pow(down)) == target) out.push_back(omega);
    return out.size() >= limit;
  });
  return out;
}

}  // namespace grstd

#endif  // GRSTD_GAUSS_PERIODS_HPP
