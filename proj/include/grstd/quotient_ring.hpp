#ifndef GRSTD_QUOTIENT_RING_HPP
#define GRSTD_QUOTIENT_RING_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "grstd/error.hpp"
#include "grstd/integer.hpp"
#include "grstd/poly.hpp"

namespace grstd {

/// Arithmetic in (Z/p^n)[t]/(H) for a monic H of degree d >= 1.
///
/// Elements are plain coefficient vectors of length exactly d with entries
/// in [0, p^n). When H is basic irreducible this is GR(p^n, d); with n = 1
/// it is the finite field F_{p^d}.
class QuotientRing {
 public:
  using Elem = std::vector<Int>;

  explicit QuotientRing(ZMPoly modulus_poly) : h_(std::move(modulus_poly)) {
    if (!h_.is_monic() || h_.degree() < 1) {
      throw InvalidArgument("quotient ring modulus must be monic of positive degree: " + h_.to_string());
    }
    d_ = static_cast<std::size_t>(h_.degree());
  }

  const ZMPoly& modulus_poly() const { return h_; }
  const ModulusRef& base() const { return h_.modulus_ref(); }
  const Int& characteristic() const { return h_.modulus(); }
  const Int& prime() const { return h_.prime(); }
  unsigned precision() const { return h_.precision(); }
  std::size_t degree() const { return d_; }

  Elem zero() const { return Elem(d_); }
  Elem one() const { return scalar(1); }
  Elem scalar(const Int& a) const {
    Elem e(d_);
    e[0] = mod(a, characteristic());
    return e;
  }
  /// Class of t.
  Elem generator() const {
    if (d_ == 1) return scalar(-h_.coeff(0));
    Elem e(d_);
    e[1] = 1;
    return e;
  }

  Elem from_poly(const ZMPoly& f) const {
    ZMPoly r = ZMPoly(base(), f.coeffs()) % h_;
    Elem e(d_);
    for (std::size_t i = 0; i < r.coeffs().size(); ++i) e[i] = r.coeffs()[i];
    return e;
  }
  ZMPoly to_poly(const Elem& a) const { return ZMPoly(base(), a); }

  Elem add(const Elem& a, const Elem& b) const {
    Elem c(d_);
    for (std::size_t i = 0; i < d_; ++i) {
      c[i] = a[i] + b[i];
      if (c[i] >= characteristic()) c[i] -= characteristic();
    }
    return c;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Elem c(d_);
    for (std::size_t i = 0; i < d_; ++i) {
      c[i] = a[i] - b[i];
      if (c[i] < 0) c[i] += characteristic();
    }
    return c;
  }
  Elem neg(const Elem& a) const { return sub(zero(), a); }
  Elem scale(const Int& s, const Elem& a) const {
    Elem c(d_);
    for (std::size_t i = 0; i < d_; ++i) c[i] = mod(s * a[i], characteristic());
    return c;
  }

  Elem mul(const Elem& a, const Elem& b) const {
    const Int& N = characteristic();
    std::vector<Int> prod(2 * d_ - 1);
    for (std::size_t i = 0; i < d_; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < d_; ++j) {
        mpz_addmul(prod[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
      }
    }
    const auto& hc = h_.coeffs();
    for (std::size_t k = prod.size(); k-- > d_;) {
      Int c = mod(prod[k], N);
      if (c == 0) continue;
      for (std::size_t j = 0; j < d_; ++j) mpz_submul(prod[k - d_ + j].get_mpz_t(), c.get_mpz_t(), hc[j].get_mpz_t());
    }
    Elem out(d_);
    for (std::size_t i = 0; i < d_; ++i) out[i] = mod(prod[i], N);
    return out;
  }

  Elem pow(Elem base, const Int& e) const {
    if (e < 0) return pow(inverse(base), Int(-e));
    Elem r = one();
    const unsigned long bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
    for (unsigned long i = bits; i-- > 0;) {
      r = mul(r, r);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, base);
    }
    return r;
  }
  Elem pow(const Elem& base, unsigned long e) const { return pow(base, Int(e)); }

  bool is_zero(const Elem& a) const {
    for (const auto& x : a) {
      if (x != 0) return false;
    }
    return true;
  }
  bool is_scalar(const Elem& a) const {
    for (std::size_t i = 1; i < d_; ++i) {
      if (a[i] != 0) return false;
    }
    return true;
  }

  /// Reduction of an element to F_p[t]/(H mod p).
  Elem residue(const Elem& a) const {
    Elem r(d_);
    for (std::size_t i = 0; i < d_; ++i) r[i] = mod(a[i], prime());
    return r;
  }

  /// The ring with the same H reduced to a smaller precision.
  QuotientRing reduced(unsigned precision) const {
    return QuotientRing(reduce(h_, make_modulus(prime(), precision)));
  }

  /// Inverse of a unit: inverse of the residue in F_p[t]/(H mod p) by the
  /// extended Euclidean algorithm, then Newton steps v <- v(2 - a v).
  /// Throws ArithmeticError when the residue is not invertible.
  Elem inverse(const Elem& a) const {
    auto fp = make_modulus(prime(), 1);
    ZMPoly hp = reduce(h_, fp);
    ZMPoly ap(fp, a);
    XGcd x = xgcd_modp(ap, hp);
    if (x.g.degree() != 0) throw ArithmeticError("element is not a unit (residue shares a factor with the modulus)");
    Elem v(d_);
    ZMPoly u = x.u % hp;
    for (std::size_t i = 0; i < u.coeffs().size(); ++i) v[i] = u.coeffs()[i];
    const Elem two = scalar(2);
    for (unsigned correct = 1; correct < precision(); correct *= 2) v = mul(v, sub(two, mul(a, v)));
    return v;
  }

  /// Teichmüller representative of the residue class of a, for H basic
  /// irreducible: the limit of y <- y^{p^d}, reached after at most n steps.
  Elem teichmuller(const Elem& a) const {
    const Int q = pow_int(prime(), static_cast<unsigned long>(d_));
    Elem y = a;
    for (unsigned i = 0; i <= precision(); ++i) {
      Elem next = pow(y, q);
      if (next == y) return y;
      y = std::move(next);
    }
    detail::internal_failure("Teichmuller iteration did not stabilise");
  }

  std::string to_string(const Elem& a) const { return render_coeffs(a, "t"); }

 private:
  ZMPoly h_;
  std::size_t d_ = 0;
};

}  // namespace grstd

#endif  // GRSTD_QUOTIENT_RING_HPP
