#ifndef GRSTD_GALOIS_RING_HPP
#define GRSTD_GALOIS_RING_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grstd/artin_schreier.hpp"
#include "grstd/error.hpp"
#include "grstd/finite_field.hpp"
#include "grstd/gauss_periods.hpp"
#include "grstd/hensel.hpp"
#include "grstd/integer.hpp"
#include "grstd/linalg.hpp"
#include "grstd/model.hpp"
#include "grstd/poly.hpp"
#include "grstd/quotient_ring.hpp"

namespace grstd {

struct Caps {
  std::uint64_t max_rank = 243;
  std::size_t max_aux_degree = 512;
  unsigned max_precision = 16;
  std::uint64_t max_minpoly_degree = kDefaultMinpolyDegreeCap;
};

struct BuildOptions {
  Caps caps;
  std::uint64_t seed = kDefaultSeed;
  /// Replaces the canonical auxiliary field modulus (monic irreducible over
  /// F_p of the right degree) for components with r != p.
  std::optional<ZMPoly> aux_modulus;
  /// Which of the roots of unity realizing the standard prime to use, in
  /// enumeration order.
  std::size_t omega_choice = 0;
  /// Run the Hensel cross-check alongside the Teichmüller construction.
  bool cross_check = true;
};

/// Lifts of the Gauss periods eta_{r,l+j,0}, j = 0..k, to the auxiliary
/// ring Z/p^n[t]/(H), taken at the standard prime.
struct GaussPeriodLifts {
  LevelData level;
  unsigned k = 0;
  IdealDescriptor descriptor;
  std::shared_ptr<const QuotientRing> aux;
  FFElement omega;
  QuotientRing::Elem omega_hat;
  std::vector<QuotientRing::Elem> eta;
};

inline GaussPeriodLifts gauss_period_lifts(const Int& p, unsigned n, std::uint64_t r, unsigned k,
                                           const BuildOptions& opts = {}) {
  const StandardIdeal std_ideal = select_standard_ideal(enumerate_ideal_descriptors(p, r));
  const LevelData& lv = std_ideal.level;
  const std::uint64_t M = lv.conductor(lv.l + k);
  const std::uint64_t d = multiplicative_order(p, M);
  if (d > opts.caps.max_aux_degree) {
    throw ResourceCapExceeded("auxiliary field degree " + std::to_string(d) + " exceeds cap " +
                              std::to_string(opts.caps.max_aux_degree));
  }
  std::optional<FFExt> field;
  if (opts.aux_modulus) {
    if (opts.aux_modulus->modulus() != p || opts.aux_modulus->degree() != static_cast<int>(d)) {
      throw InvalidArgument("auxiliary modulus must be an irreducible of degree " + std::to_string(d) + " over F_" +
                            p.get_str());
    }
    field.emplace(*opts.aux_modulus);
  } else {
    field.emplace(canonical_extension(p, d));
  }
  auto roots = roots_realizing(*field, lv, k, std_ideal.descriptor, opts.omega_choice + 1);
  if (roots.size() <= opts.omega_choice) {
    throw InvalidArgument("omega choice " + std::to_string(opts.omega_choice) + " out of range (" +
                          std::to_string(roots.size()) + " candidates)");
  }
  const FFElement omega = roots[opts.omega_choice];

  auto aux = std::make_shared<const QuotientRing>(lift_coeffs(field->modulus_poly(), make_modulus(p, n)));
  QuotientRing::Elem omega_hat = aux->teichmuller(omega.coeffs());
  detail::check_internal(aux->pow(omega_hat, static_cast<unsigned long>(M)) == aux->one(),
                         "Teichmuller lift is a root of unity");

  std::vector<QuotientRing::Elem> eta;
  for (unsigned j = 0; j <= k; ++j) {
    const auto zeta = aux->pow(omega_hat, static_cast<unsigned long>(pow_u64(r, k - j)));
    eta.push_back(gauss_period_value(*aux, zeta, r, lv.l + j, 0));
  }
  return {lv, k, std_ideal.descriptor, aux, omega, std::move(omega_hat), std::move(eta)};
}

/// Outcome of the Hensel route for one prime-power component.
struct CrossCheck {
  bool ran = false;
  std::string detail;
};

namespace detail {

/// prod_{j < r^k} (x - Frob^j(eta)) with Frob(zeta) = zeta^p on the
/// Teichmüller root of unity omega_hat.
inline ZMPoly frobenius_orbit_product(const GaussPeriodLifts& g) {
  const QuotientRing& R = *g.aux;
  const LevelData& lv = g.level;
  const std::uint64_t M = lv.conductor(lv.l + g.k);
  const std::uint64_t degree = pow_u64(lv.r, g.k);
  const std::uint64_t p = to_u64(R.prime());
  const auto delta = delta_exponents(lv.r, M);
  std::vector<QuotientRing::Elem> poly{R.one()};
  std::uint64_t frob = 1;
  for (std::uint64_t j = 0; j < degree; ++j) {
    QuotientRing::Elem conj = R.zero();
    for (auto e : delta) conj = R.add(conj, R.pow(g.omega_hat, static_cast<unsigned long>(mulmod_u64(e, frob, M))));
    if (j == 0) check_internal(conj == g.eta.back(), "orbit starts at the Gauss period");
    std::vector<QuotientRing::Elem> next(poly.size() + 1, R.zero());
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = R.add(next[i + 1], poly[i]);
      next[i] = R.sub(next[i], R.mul(poly[i], conj));
    }
    poly = std::move(next);
    frob = mulmod_u64(frob, p % M, M);
  }
  std::vector<Int> coeffs;
  for (const auto& c : poly) {
    check_internal(R.is_scalar(c), "Frobenius-orbit product has coefficients in Z/p^n");
    coeffs.push_back(c[0]);
  }
  return ZMPoly(R.base(), coeffs);
}

/// The factor of the exact minimal polynomial attached to the standard
/// prime, lifted by Hensel's lemma. Empty when the route does not apply.
inline std::optional<ZMPoly> distinguished_factor_lift(const GaussPeriodLifts& g, const BuildOptions& opts,
                                                       std::string& why) {
  const QuotientRing& R = *g.aux;
  const Int& p = R.prime();
  ZPoly f;
  try {
    f = gauss_period_minpoly_exact(g.level.r, g.level.l + g.k, opts.caps.max_minpoly_degree);
  } catch (const ResourceCapExceeded& e) {
    why = std::string("skipped: ") + e.what();
    return std::nullopt;
  }
  const ModulusRef fp = make_modulus(p, 1);
  const QuotientRing field = R.reduced(1);
  const QuotientRing::Elem alpha = field.residue(g.eta.back());
  auto fz = factor_modp(ZMPoly(fp, f), opts.seed);
  std::optional<std::size_t> hit;
  for (std::size_t i = 0; i < fz.factors.size(); ++i) {
    const auto& c = fz.factors[i].poly.coeffs();
    QuotientRing::Elem acc = field.zero();
    for (std::size_t j = c.size(); j-- > 0;) acc = field.add(field.mul(acc, alpha), field.scalar(c[j]));
    if (field.is_zero(acc)) {
      check_internal(!hit, "exactly one factor vanishes at the residue of the Gauss period");
      hit = i;
    }
  }
  check_internal(hit.has_value(), "some factor vanishes at the residue of the Gauss period");
  const Factor& g0 = fz.factors[*hit];
  if (g0.multiplicity > 1) {
    why = "skipped: distinguished factor " + g0.poly.to_string() + " has multiplicity " +
          std::to_string(g0.multiplicity) + " mod " + p.get_str();
    return std::nullopt;
  }
  const ZMPoly fN(R.base(), f);
  bool squarefree = true;
  std::vector<ZMPoly> factors;
  for (const auto& fac : fz.factors) {
    squarefree = squarefree && fac.multiplicity == 1;
    factors.push_back(fac.poly);
  }
  if (squarefree) {
    auto lifted = hensel_lift_factors(fN, factors);
    check_internal(check_certificate(lifted.certificate).empty(), "lift certificate verifies");
    why = "hensel: all factors lifted";
    return lifted.factors[*hit];
  }
  // f mod p has repeated factors elsewhere; the distinguished factor is
  // still coprime to its cofactor, so a single two-factor lift applies.
  const ZMPoly h0 = divrem(ZMPoly(fp, f), g0.poly).first;
  SplitRecord rec = hensel_lift_pair(fN, g0.poly, h0);
  why = "hensel: two-factor lift against the cofactor (f mod p not squarefree)";
  return rec.steps.back().g;
}

}  // namespace detail

/// Defining polynomial of GR(p^n, r^k), r != p: the Frobenius-orbit product
/// of the Teichmüller Gauss period, checked against the Hensel lift of the
/// distinguished factor of the exact minimal polynomial when that applies.
struct PrimePowerPolynomial {
  ZMPoly poly;
  GaussPeriodLifts lifts;
  CrossCheck cross_check;
};

inline PrimePowerPolynomial prime_power_polynomial(const Int& p, unsigned n, std::uint64_t r, unsigned k,
                                                   const BuildOptions& opts = {}) {
  if (!is_prime(p)) throw InvalidArgument("p = " + p.get_str() + " is not prime");
  if (!is_prime(r)) throw InvalidArgument("r = " + std::to_string(r) + " is not prime");
  if (n < 1) throw InvalidArgument("precision n must be >= 1");
  if (n > opts.caps.max_precision) {
    throw ResourceCapExceeded("precision " + std::to_string(n) + " exceeds cap " +
                              std::to_string(opts.caps.max_precision));
  }
  GaussPeriodLifts lifts = gauss_period_lifts(p, n, r, k, opts);
  ZMPoly G = detail::frobenius_orbit_product(lifts);
  detail::check_internal(is_irreducible_modp(reduce(G, make_modulus(p, 1))), "defining polynomial is basic irreducible");
  CrossCheck cc;
  if (opts.cross_check) {
    std::string why;
    auto other = detail::distinguished_factor_lift(lifts, opts, why);
    cc.detail = why;
    if (other) {
      cc.ran = true;
      if (*other != G) {
        detail::internal_failure("route disagreement for GR(" + p.get_str() + "^" + std::to_string(n) + ", " +
                                 std::to_string(r) + "^" + std::to_string(k) + "): " + G.to_string() + " vs " +
                                 other->to_string());
      }
    }
  }
  return {std::move(G), std::move(lifts), std::move(cc)};
}

namespace detail {

/// Product basis prod_k y_k^{c_k} of the rank-q^K quotient ring, where
/// y_1, ..., y_K are ring elements and index j = sum_k c_k q^{K-k}.
inline std::vector<QuotientRing::Elem> product_basis(const QuotientRing& ring, std::uint64_t q, unsigned K,
                                                     const std::vector<QuotientRing::Elem>& y) {
  const std::uint64_t m = pow_u64(q, K);
  std::vector<QuotientRing::Elem> out;
  out.reserve(m);
  for (std::uint64_t j = 0; j < m; ++j) {
    QuotientRing::Elem e = ring.one();
    std::uint64_t rest = j;
    for (unsigned k = K; k >= 1; --k) {
      const std::uint64_t c = rest % q;
      rest /= q;
      if (c != 0) e = ring.mul(e, ring.pow(y[k - 1], static_cast<unsigned long>(c)));
    }
    out.push_back(std::move(e));
  }
  return out;
}

inline ExplicitModel model_from_basis(const Int& p, unsigned n, const ZMPoly& G,
                                      const std::vector<QuotientRing::Elem>& basis, Provenance prov) {
  const QuotientRing ring(G);
  const std::uint64_t m = basis.size();
  ExplicitModel out{p, n, m, basis_labels(m), constants_in_basis(ring, basis), G, {}, std::move(prov)};
  SpanSolver solver(basis, ring.characteristic(), ring.prime());
  auto gen = solver.coordinates(ring.generator());
  check_internal(gen.has_value(), "generator lies in the span of the basis");
  out.generator = *gen;
  return out;
}

}  // namespace detail

/// GR(p^n, r^k) for a prime r != p, on the basis
/// eps_{j/r^k} = prod_{i=1}^{k} eta_{r,l+i,0}^{c_i}, j = sum_i c_i r^{k-i}.
/// k = 0 gives the rank-1 ring with defining polynomial x - eta_{r,l,0}.
inline ExplicitModel prime_power_model(const Int& p, unsigned n, std::uint64_t r, unsigned k,
                                       const BuildOptions& opts = {}) {
  if (Int(static_cast<unsigned long>(r)) == p) throw InvalidArgument("prime_power_model needs r != p");
  PrimePowerPolynomial pp = prime_power_polynomial(p, n, r, k, opts);
  const GaussPeriodLifts& g = pp.lifts;
  const QuotientRing& R = *g.aux;

  ComponentProvenance cp{r, k, g.level.l, g.descriptor.a, R.reduced(1).modulus_poly(), g.omega.coeffs(),
                         "teichmuller-orbit"};
  if (opts.cross_check) cp.route += pp.cross_check.ran ? "+hensel" : "";
  Provenance prov{cp.route, {cp}, opts.seed, kVersion, {}};
  if (!pp.cross_check.detail.empty()) prov.notes.push_back(pp.cross_check.detail);

  if (k == 0) {
    detail::check_internal(R.is_scalar(g.eta[0]), "level-l Gauss period lies in Z/p^n");
    return rank_one_model(p, n, g.eta[0][0], std::move(prov));
  }
  // Express eta_{l+i} in the power basis of theta = eta_{l+k}.
  const std::uint64_t m = pow_u64(r, k);
  std::vector<QuotientRing::Elem> powers;
  QuotientRing::Elem x = R.one();
  for (std::uint64_t j = 0; j < m; ++j) {
    powers.push_back(x);
    x = R.mul(x, g.eta.back());
  }
  SpanSolver solver(powers, R.characteristic(), R.prime());
  const QuotientRing model_ring(pp.poly);
  std::vector<QuotientRing::Elem> y;
  for (unsigned i = 1; i <= k; ++i) {
    auto c = solver.coordinates(g.eta[i]);
    detail::check_internal(c.has_value(), "lower Gauss periods are polynomials in the top one");
    y.push_back(*c);
  }
  return detail::model_from_basis(p, n, pp.poly, detail::product_basis(model_ring, r, k, y), std::move(prov));
}

/// GR(p^n, p^k) on the basis prod_i beta_i^{c_i}, where beta_k is the class
/// of x modulo the tower polynomial and beta_{i-1} = (beta_i^p - 1) / (beta_i + ... + beta_i^{p-1}).
inline ExplicitModel p_power_model(const Int& p, unsigned n, unsigned k, const BuildOptions& opts = {}) {
  if (!is_prime(p)) throw InvalidArgument("p = " + p.get_str() + " is not prime");
  if (n < 1) throw InvalidArgument("precision n must be >= 1");
  ComponentProvenance cp{to_u64(p), k, 0, {}, std::nullopt, {}, "artin-schreier"};
  Provenance prov{"artin-schreier", {cp}, opts.seed, kVersion, {}};
  if (k == 0) return rank_one_model(p, n, Int(1), std::move(prov));
  const ZMPoly G = galois_ring_p_tower(p, n, k);
  const QuotientRing ring(G);
  const unsigned long pu = to_u64(p);
  std::vector<QuotientRing::Elem> beta(k);
  beta[k - 1] = ring.generator();
  for (unsigned i = k - 1; i >= 1; --i) {
    const auto& b = beta[i];
    QuotientRing::Elem s = ring.zero(), power = ring.one();
    for (unsigned long e = 1; e < pu; ++e) {
      power = ring.mul(power, b);
      s = ring.add(s, power);
    }
    beta[i - 1] = ring.mul(ring.sub(ring.mul(power, b), ring.one()), ring.inverse(s));
  }
  return detail::model_from_basis(p, n, G, detail::product_basis(ring, pu, k, beta), std::move(prov));
}

/// The standard model of GR(p^n, m).
inline ExplicitModel standard_model(const Int& p, unsigned n, std::uint64_t m, const BuildOptions& opts = {}) {
  if (!is_prime(p)) throw InvalidArgument("p = " + p.get_str() + " is not prime");
  if (n < 1) throw InvalidArgument("precision n must be >= 1");
  if (m < 1) throw InvalidArgument("rank m must be >= 1");
  if (m > opts.caps.max_rank) {
    throw ResourceCapExceeded("rank " + std::to_string(m) + " exceeds cap " + std::to_string(opts.caps.max_rank));
  }
  if (n > opts.caps.max_precision) {
    throw ResourceCapExceeded("precision " + std::to_string(n) + " exceeds cap " +
                              std::to_string(opts.caps.max_precision));
  }
  if (m == 1) {
    Provenance prov{"trivial", {}, opts.seed, kVersion, {}};
    return rank_one_model(p, n, Int(1), std::move(prov));
  }
  std::vector<ExplicitModel> parts;
  for (auto [r, K] : factor_u64(m)) {
    if (Int(static_cast<unsigned long>(r)) == p) {
      parts.push_back(p_power_model(p, n, K, opts));
    } else {
      parts.push_back(prime_power_model(p, n, r, K, opts));
    }
  }
  return tensor_compose(parts, m);
}

}  // namespace grstd

#endif  // GRSTD_GALOIS_RING_HPP
