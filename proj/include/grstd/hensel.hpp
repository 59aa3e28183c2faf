#ifndef GRSTD_HENSEL_HPP
#define GRSTD_HENSEL_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "grstd/error.hpp"
#include "grstd/finite_field.hpp"
#include "grstd/integer.hpp"
#include "grstd/poly.hpp"

namespace grstd {

/// State after one precision-doubling step of a two-factor lift:
/// g h = f and s g + t h = 1 modulo p^precision.
struct LiftStep {
  unsigned precision = 0;
  ZMPoly g, h, s, t;
};

/// One node of the binary split tree: f (at the target precision) is
/// lifted from g0 h0 mod p.
struct SplitRecord {
  ZMPoly f;
  ZMPoly g0, h0;
  std::vector<LiftStep> steps;
};

struct LiftCertificate {
  Int p;
  unsigned source_precision = 1;
  unsigned target_precision = 0;
  ZMPoly input;
  std::vector<ZMPoly> factors_modp;
  std::vector<ZMPoly> lifted;
  std::vector<SplitRecord> splits;
};

struct LiftResult {
  std::vector<ZMPoly> factors;
  LiftCertificate certificate;
};

namespace detail {

inline ModulusRef residue_modulus(const ZMPoly& f) { return make_modulus(f.prime(), 1); }

/// Quadratic two-factor Hensel step (von zur Gathen and Gerhard, Alg. 15.10),
/// with every input already lifted to the new modulus.
inline void hensel_step(const ZMPoly& f, ZMPoly& g, ZMPoly& h, ZMPoly& s, ZMPoly& t) {
  const ZMPoly e = f - g * h;
  auto [q, r] = divrem(s * e, h);
  g = g + t * e + q * g;
  h = h + r;
  const ZMPoly one = ZMPoly::constant(f.modulus_ref(), 1);
  const ZMPoly b = s * g + t * h - one;
  auto [c, d] = divrem(s * b, h);
  s = s - d;
  t = t - t * b - c * g;
}

}  // namespace detail

/// Lifts f = g0 h0 mod p, with g0, h0 monic and coprime, to f = g h mod p^N
/// where N is the precision of f. Records every doubling step.
inline SplitRecord hensel_lift_pair(const ZMPoly& f, const ZMPoly& g0, const ZMPoly& h0) {
  if (!f.is_monic()) throw InvalidArgument("hensel_lift_pair: f must be monic, got " + f.to_string());
  const ModulusRef fp = detail::residue_modulus(f);
  if (g0.modulus() != f.prime() || h0.modulus() != f.prime()) {
    throw InvalidArgument("hensel_lift_pair: factors must be given modulo p = " + f.prime().get_str());
  }
  if (!g0.is_monic() || !h0.is_monic()) throw InvalidArgument("hensel_lift_pair: factors must be monic");
  if (g0 * h0 != reduce(f, fp)) {
    throw InvalidArgument("hensel_lift_pair: product of factors does not match f mod p");
  }
  XGcd x = xgcd_modp(g0, h0);
  if (x.g.degree() != 0) {
    throw ArithmeticError("hensel_lift_pair: factors " + g0.to_string() + " and " + h0.to_string() +
                          " share the factor " + x.g.to_string() + " mod p");
  }
  SplitRecord rec{f, g0, h0, {}};
  ZMPoly g = g0, h = h0, s = x.u, t = x.v;
  rec.steps.push_back({1, g, h, s, t});
  const unsigned N = f.precision();
  for (unsigned prec = 1; prec < N;) {
    prec = std::min(2 * prec, N);
    const ModulusRef m = make_modulus(f.prime(), prec);
    g = lift_coeffs(g, m);
    h = lift_coeffs(h, m);
    s = lift_coeffs(s, m);
    t = lift_coeffs(t, m);
    detail::hensel_step(reduce(f, m), g, h, s, t);
    rec.steps.push_back({prec, g, h, s, t});
  }
  return rec;
}

namespace detail {

inline void lift_tree(const ZMPoly& f, const std::vector<ZMPoly>& factors, std::size_t lo, std::size_t hi,
                      std::vector<ZMPoly>& out, std::vector<SplitRecord>& splits) {
  if (hi - lo == 1) {
    out[lo] = f;
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  const ModulusRef fp = residue_modulus(f);
  ZMPoly g0 = ZMPoly::constant(fp, 1), h0 = ZMPoly::constant(fp, 1);
  for (std::size_t i = lo; i < mid; ++i) g0 = g0 * factors[i];
  for (std::size_t i = mid; i < hi; ++i) h0 = h0 * factors[i];
  SplitRecord rec = hensel_lift_pair(f, g0, h0);
  const ZMPoly g = rec.steps.back().g, h = rec.steps.back().h;
  splits.push_back(std::move(rec));
  lift_tree(g, factors, lo, mid, out, splits);
  lift_tree(h, factors, mid, hi, out, splits);
}

}  // namespace detail

/// Lifts a factorization of f mod p into monic, squarefree, pairwise coprime
/// factors to the precision of f.
inline LiftResult hensel_lift_factors(const ZMPoly& f, const std::vector<ZMPoly>& factors_modp) {
  if (!f.is_monic()) throw InvalidArgument("hensel_lift_factors: f must be monic, got " + f.to_string());
  if (factors_modp.empty()) throw InvalidArgument("hensel_lift_factors: empty factor list");
  const ModulusRef fp = detail::residue_modulus(f);
  ZMPoly prod = ZMPoly::constant(fp, 1);
  for (const auto& g : factors_modp) {
    if (g.modulus() != f.prime()) {
      throw InvalidArgument("hensel_lift_factors: factor " + g.to_string() + " is not given modulo p = " +
                            f.prime().get_str());
    }
    if (!g.is_monic() || g.degree() < 1) {
      throw InvalidArgument("hensel_lift_factors: factor " + g.to_string() + " is not monic of positive degree");
    }
    if (!is_squarefree_modp(g)) {
      throw ArithmeticError("hensel_lift_factors: factor " + g.to_string() +
                            " is not squarefree mod p; a repeated factor has multiplicity > 1 and cannot be lifted");
    }
    prod = prod * ZMPoly(fp, g.coeffs());
  }
  for (std::size_t i = 0; i < factors_modp.size(); ++i) {
    for (std::size_t j = i + 1; j < factors_modp.size(); ++j) {
      ZMPoly common = gcd_modp(factors_modp[i], factors_modp[j]);
      if (common.degree() > 0) {
        throw ArithmeticError("hensel_lift_factors: factors " + factors_modp[i].to_string() + " and " +
                              factors_modp[j].to_string() + " share " + common.to_string() +
                              " mod p; a factor of multiplicity > 1 cannot be lifted");
      }
    }
  }
  if (prod != reduce(f, fp)) {
    throw InvalidArgument("hensel_lift_factors: product of factors " + prod.to_string() + " does not match f mod p " +
                          reduce(f, fp).to_string());
  }
  std::vector<ZMPoly> lifted(factors_modp.size(), ZMPoly(f.modulus_ref()));
  std::vector<SplitRecord> splits;
  detail::lift_tree(f, factors_modp, 0, factors_modp.size(), lifted, splits);
  LiftCertificate cert{f.prime(), 1, f.precision(), f, factors_modp, lifted, std::move(splits)};
  return {std::move(lifted), std::move(cert)};
}

inline LiftResult hensel_lift_factors(const ZPoly& f, const std::vector<ZMPoly>& factors_modp, const Int& p,
                                      unsigned N) {
  return hensel_lift_factors(ZMPoly(make_modulus(p, N), f), factors_modp);
}

/// Checks every congruence recorded in a certificate. Returns an empty
/// string on success, otherwise a description of the first failure.
inline std::string check_certificate(const LiftCertificate& c) {
  if (c.lifted.size() != c.factors_modp.size()) return "factor count mismatch";
  if (c.input.prime() != c.p || c.input.precision() != c.target_precision) return "input precision mismatch";
  const ModulusRef fp = make_modulus(c.p, 1);
  ZMPoly prod = ZMPoly::constant(c.input.modulus_ref(), 1);
  for (std::size_t i = 0; i < c.lifted.size(); ++i) {
    const ZMPoly& g = c.lifted[i];
    if (g.modulus() != c.input.modulus()) return "lifted factor " + std::to_string(i) + " has the wrong modulus";
    if (!g.is_monic()) return "lifted factor " + std::to_string(i) + " is not monic";
    if (reduce(g, fp) != ZMPoly(fp, c.factors_modp[i].coeffs())) {
      return "lifted factor " + std::to_string(i) + " does not reduce to its source factor";
    }
    prod = prod * g;
  }
  if (prod != c.input) return "product of lifted factors differs from the input";
  for (std::size_t k = 0; k < c.splits.size(); ++k) {
    const auto& rec = c.splits[k];
    for (const auto& st : rec.steps) {
      const ModulusRef m = make_modulus(c.p, st.precision);
      const ZMPoly one = ZMPoly::constant(m, 1);
      if (st.g * st.h != reduce(rec.f, m)) return "split " + std::to_string(k) + ": g h != f";
      if (st.s * st.g + st.t * st.h != one) return "split " + std::to_string(k) + ": s g + t h != 1";
    }
  }
  return {};
}

/// Lifts a simple root a0 of f mod p to the root mod p^N congruent to a0,
/// by Newton iteration with precision doubling.
inline Int hensel_lift_root(const ZPoly& f, const Int& a0, const Int& p, unsigned N) {
  if (!is_prime(p)) throw InvalidArgument("hensel_lift_root: p is not prime");
  if (N < 1) throw InvalidArgument("hensel_lift_root: precision must be >= 1");
  Int a = mod(a0, p);
  if (mod(f.eval(a), p) != 0) throw InvalidArgument("hensel_lift_root: a0 is not a root of f mod p");
  const ZPoly df = f.derivative();
  if (mod(df.eval(a), p) == 0) {
    throw ArithmeticError("hensel_lift_root: " + a.get_str() + " is not a simple root mod p (f'(a0) = 0 mod p)");
  }
  for (unsigned prec = 1; prec < N;) {
    prec = std::min(2 * prec, N);
    const Int q = pow_int(p, prec);
    a = mod(a - f.eval(a) * inv_mod(df.eval(a), q), q);
  }
  return a;
}

inline Int hensel_lift_root(const ZMPoly& f, const Int& a0, unsigned N) {
  if (N > f.precision()) throw InvalidArgument("hensel_lift_root: target precision exceeds that of f");
  return hensel_lift_root(f.to_zpoly(), a0, f.prime(), N);
}

/// Factorization of a monic f into monic basic irreducible factors modulo
/// p^N, for f squarefree mod p.
inline std::vector<ZMPoly> padic_factorization(const ZPoly& f, const Int& p, unsigned N,
                                               std::uint64_t seed = kDefaultSeed) {
  if (!f.is_monic()) throw InvalidArgument("padic_factorization: f must be monic, got " + f.to_string());
  if (!is_prime(p)) throw InvalidArgument("padic_factorization: p is not prime");
  const ModulusRef fp = make_modulus(p, 1);
  auto fz = factor_modp(ZMPoly(fp, f), seed);
  std::vector<ZMPoly> factors;
  for (const auto& fac : fz.factors) {
    if (fac.multiplicity > 1) {
      throw ArithmeticError("padic_factorization: " + f.to_string() + " is not squarefree mod " + p.get_str() +
                            ": factor " + fac.poly.to_string() + " has multiplicity " +
                            std::to_string(fac.multiplicity));
    }
    factors.push_back(fac.poly);
  }
  return hensel_lift_factors(f, factors, p, N).factors;
}

}  // namespace grstd

#endif  // GRSTD_HENSEL_HPP
