#ifndef GRSTD_POLY_HPP
#define GRSTD_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <ostream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "grstd/error.hpp"
#include "grstd/integer.hpp"

namespace grstd {

/// A validated prime-power modulus p^exponent.
struct Modulus {
  Int p;
  unsigned exponent = 0;
  Int value;

  bool is_prime() const { return exponent == 1; }
};

using ModulusRef = std::shared_ptr<const Modulus>;

inline ModulusRef make_modulus(const Int& p, unsigned exponent) {
  if (!grstd::is_prime(p)) throw InvalidArgument("modulus base " + p.get_str() + " is not prime");
  if (exponent == 0) throw InvalidArgument("modulus exponent must be positive");
  return std::make_shared<const Modulus>(Modulus{p, exponent, pow_int(p, exponent)});
}

inline ModulusRef make_modulus(const Int& value) {
  auto pp = as_prime_power(value);
  if (!pp) throw InvalidArgument("modulus " + value.get_str() + " is not a prime power");
  return std::make_shared<const Modulus>(Modulus{pp->first, pp->second, value});
}

/// Renders a coefficient vector (index i = coefficient of x^i) as
/// "x^3+286x+214": decreasing degree, unit coefficients elided, signs kept.
inline std::string render_coeffs(const std::vector<Int>& c, const std::string& var = "x") {
  std::string out;
  for (std::size_t k = c.size(); k-- > 0;) {
    const Int& a = c[k];
    if (a == 0) continue;
    std::string mag = a < 0 ? Int(-a).get_str() : a.get_str();
    if (a < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (k == 0) {
      out += mag;
      continue;
    }
    if (mag != "1") out += mag;
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

namespace detail {

inline void strip(std::vector<Int>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// ZPoly: dense polynomial over Z.
// ---------------------------------------------------------------------------

class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { detail::strip(c_); }
  ZPoly(std::initializer_list<long> coeffs) {
    for (long a : coeffs) c_.emplace_back(a);
    detail::strip(c_);
  }

  static ZPoly monomial(const Int& a, std::size_t deg) {
    std::vector<Int> c(deg + 1);
    c[deg] = a;
    return ZPoly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
  const Int& lead() const {
    if (c_.empty()) throw InvalidArgument("leading coefficient of zero polynomial");
    return c_.back();
  }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  friend ZPoly operator+(const ZPoly& a, const ZPoly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return ZPoly(std::move(c));
  }
  friend ZPoly operator-(const ZPoly& a, const ZPoly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return ZPoly(std::move(c));
  }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        mpz_addmul(c[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
      }
    }
    return ZPoly(std::move(c));
  }
  friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }

  ZPoly derivative() const {
    std::vector<Int> c;
    for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * static_cast<unsigned long>(i));
    return ZPoly(std::move(c));
  }

  Int eval(const Int& x) const {
    Int acc = 0;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
  }

  /// this(inner(x)).
  ZPoly compose(const ZPoly& inner) const {
    ZPoly acc;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * inner + ZPoly(std::vector<Int>{c_[k]});
    return acc;
  }

  /// x^deg * this(1/x) with deg = degree().
  ZPoly reversed() const {
    std::vector<Int> c(c_.rbegin(), c_.rend());
    return ZPoly(std::move(c));
  }

  std::string to_string() const { return render_coeffs(c_); }

 private:
  std::vector<Int> c_;
};

inline std::ostream& operator<<(std::ostream& os, const ZPoly& f) { return os << f.to_string(); }

// ---------------------------------------------------------------------------
// ZMPoly: dense polynomial over Z/M, M a prime power.
// ---------------------------------------------------------------------------

class ZMPoly {
 public:
  explicit ZMPoly(ModulusRef m) : m_(std::move(m)) {}
  ZMPoly(ModulusRef m, std::vector<Int> coeffs) : m_(std::move(m)), c_(std::move(coeffs)) { normalize(); }
  ZMPoly(const Int& modulus, std::vector<Int> coeffs) : ZMPoly(make_modulus(modulus), std::move(coeffs)) {}
  ZMPoly(const Int& modulus, std::initializer_list<long> coeffs) : m_(make_modulus(modulus)) {
    for (long a : coeffs) c_.emplace_back(a);
    normalize();
  }
  /// Reduction of an integer polynomial.
  ZMPoly(ModulusRef m, const ZPoly& f) : ZMPoly(std::move(m), f.coeffs()) {}

  static ZMPoly constant(ModulusRef m, const Int& a) { return ZMPoly(std::move(m), std::vector<Int>{a}); }
  static ZMPoly monomial(ModulusRef m, const Int& a, std::size_t deg) {
    std::vector<Int> c(deg + 1);
    c[deg] = a;
    return ZMPoly(std::move(m), std::move(c));
  }
  static ZMPoly x(ModulusRef m) { return monomial(std::move(m), 1, 1); }

  const ModulusRef& modulus_ref() const { return m_; }
  const Int& modulus() const { return m_->value; }
  const Int& prime() const { return m_->p; }
  unsigned precision() const { return m_->exponent; }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
  const Int& lead() const {
    if (c_.empty()) throw InvalidArgument("leading coefficient of zero polynomial");
    return c_.back();
  }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  ZMPoly& operator+=(const ZMPoly& b) {
    check_same(b);
    if (c_.size() < b.c_.size()) c_.resize(b.c_.size());
    for (std::size_t i = 0; i < b.c_.size(); ++i) {
      c_[i] += b.c_[i];
      if (c_[i] >= modulus()) c_[i] -= modulus();
    }
    detail::strip(c_);
    return *this;
  }
  ZMPoly& operator-=(const ZMPoly& b) {
    check_same(b);
    if (c_.size() < b.c_.size()) c_.resize(b.c_.size());
    for (std::size_t i = 0; i < b.c_.size(); ++i) {
      c_[i] -= b.c_[i];
      if (c_[i] < 0) c_[i] += modulus();
    }
    detail::strip(c_);
    return *this;
  }
  friend ZMPoly operator+(ZMPoly a, const ZMPoly& b) { return a += b; }
  friend ZMPoly operator-(ZMPoly a, const ZMPoly& b) { return a -= b; }
  friend ZMPoly operator-(const ZMPoly& a) { return ZMPoly(a.m_) - a; }
  friend ZMPoly operator*(const ZMPoly& a, const ZMPoly& b) {
    a.check_same(b);
    if (a.is_zero() || b.is_zero()) return ZMPoly(a.m_);
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        mpz_addmul(c[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
      }
    }
    return ZMPoly(a.m_, std::move(c));
  }
  friend ZMPoly operator*(const Int& s, const ZMPoly& a) {
    std::vector<Int> c(a.c_);
    for (auto& x : c) x *= s;
    return ZMPoly(a.m_, std::move(c));
  }
  /// Equality requires equal moduli; polynomials over different rings are
  /// never equal.
  friend bool operator==(const ZMPoly& a, const ZMPoly& b) {
    return a.modulus() == b.modulus() && a.c_ == b.c_;
  }

  ZMPoly derivative() const {
    std::vector<Int> c;
    for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * static_cast<unsigned long>(i));
    return ZMPoly(m_, std::move(c));
  }

  Int eval(const Int& x) const {
    Int acc = 0;
    for (std::size_t k = c_.size(); k-- > 0;) acc = mod(acc * x + c_[k], modulus());
    return acc;
  }

  ZMPoly compose(const ZMPoly& inner) const {
    check_same(inner);
    ZMPoly acc(m_);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * inner + constant(m_, c_[k]);
    return acc;
  }

  /// Scales by the inverse of the leading coefficient (must be a unit).
  ZMPoly monic() const {
    if (is_zero()) throw InvalidArgument("monic() of zero polynomial");
    const Int inv = inv_mod(lead(), modulus());
    return inv * *this;
  }

  /// Least nonnegative residues, reinterpreted over Z.
  ZPoly to_zpoly() const { return ZPoly(c_); }
  ZPoly to_zpoly_balanced() const {
    std::vector<Int> c;
    for (const auto& a : c_) c.push_back(balanced_mod(a, modulus()));
    return ZPoly(std::move(c));
  }

  std::string to_string() const { return render_coeffs(c_); }
  std::string to_string_balanced() const { return to_zpoly_balanced().to_string(); }

  void check_same(const ZMPoly& b) const {
    if (m_ != b.m_ && modulus() != b.modulus()) {
      throw InvalidArgument("modulus mismatch: " + modulus().get_str() + " vs " + b.modulus().get_str());
    }
  }

 private:
  void normalize() {
    for (auto& a : c_) {
      if (a < 0 || a >= m_->value) a = mod(a, m_->value);
    }
    detail::strip(c_);
  }

  ModulusRef m_;
  std::vector<Int> c_;
};

inline std::ostream& operator<<(std::ostream& os, const ZMPoly& f) { return os << f.to_string(); }

/// Quotient and remainder with a = q*b + r, deg r < deg b. The divisor's
/// leading coefficient must be a unit modulo M.
inline std::pair<ZMPoly, ZMPoly> divrem(const ZMPoly& a, const ZMPoly& b) {
  a.check_same(b);
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  const Int& M = a.modulus();
  if (gcd(b.lead(), M) != 1) {
    throw ArithmeticError("divisor leading coefficient " + b.lead().get_str() + " is not a unit modulo " + M.get_str());
  }
  if (a.degree() < b.degree()) return {ZMPoly(a.modulus_ref()), a};
  const Int lead_inv = inv_mod(b.lead(), M);
  std::vector<Int> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<Int> q(r.size() - db);
  for (std::size_t k = r.size(); k-- > db;) {
    Int c = mod(r[k] * lead_inv, M);
    q[k - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      mpz_submul(r[k - db + j].get_mpz_t(), c.get_mpz_t(), bc[j].get_mpz_t());
    }
    r[k] = 0;
  }
  r.resize(db);
  return {ZMPoly(a.modulus_ref(), std::move(q)), ZMPoly(a.modulus_ref(), std::move(r))};
}

inline ZMPoly operator%(const ZMPoly& a, const ZMPoly& b) { return divrem(a, b).second; }
inline ZMPoly operator/(const ZMPoly& a, const ZMPoly& b) { return divrem(a, b).first; }

/// base^e mod (modpoly), modpoly with unit leading coefficient.
inline ZMPoly pow_mod(ZMPoly base, Int e, const ZMPoly& modpoly) {
  if (e < 0) throw InvalidArgument("negative exponent");
  ZMPoly result = ZMPoly::constant(base.modulus_ref(), 1) % modpoly;
  base = base % modpoly;
  const unsigned long bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
  for (unsigned long i = bits; i-- > 0;) {
    result = (result * result) % modpoly;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * base) % modpoly;
  }
  return result;
}

/// Result of the extended Euclidean algorithm over F_p.
struct XGcd {
  ZMPoly g;
  ZMPoly u;
  ZMPoly v;
};

/// g = gcd(a, b) monic (zero only if both are zero), with g = u*a + v*b.
inline XGcd xgcd_modp(const ZMPoly& a, const ZMPoly& b) {
  a.check_same(b);
  if (!a.modulus_ref()->is_prime()) throw InvalidArgument("xgcd_modp needs a prime modulus, got " + a.modulus().get_str());
  const auto& m = a.modulus_ref();
  ZMPoly r0 = a, r1 = b;
  ZMPoly s0 = ZMPoly::constant(m, 1), s1(m);
  ZMPoly t0(m), t1 = ZMPoly::constant(m, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Int inv = inv_mod(r0.lead(), a.modulus());
  return {inv * r0, inv * s0, inv * t0};
}

inline ZMPoly gcd_modp(const ZMPoly& a, const ZMPoly& b) { return xgcd_modp(a, b).g; }

/// Reduces coefficients into a (possibly smaller) modulus of the same
/// prime; e.g. mod p^N -> mod p^N' with N' <= N.
inline ZMPoly reduce(const ZMPoly& f, const ModulusRef& target) {
  if (target->p != f.prime()) throw InvalidArgument("reduce: different prime");
  if (target->exponent > f.precision()) throw InvalidArgument("reduce: target precision exceeds source precision");
  return ZMPoly(target, f.coeffs());
}

/// Reinterprets each coefficient, taken as its least nonnegative residue,
/// modulo a new power of the same prime.
inline ZMPoly lift_coeffs(const ZMPoly& f, const ModulusRef& target) {
  if (target->p != f.prime()) {
    throw InvalidArgument("lift_coeffs: target prime " + target->p.get_str() + " differs from " + f.prime().get_str());
  }
  return ZMPoly(target, f.coeffs());
}

inline ZMPoly lift_coeffs(const ZMPoly& f, const Int& new_modulus) { return lift_coeffs(f, make_modulus(new_modulus)); }

/// Lexicographic order of monic factors: lower degree first, then the
/// coefficient tuple (c_{d-1}, ..., c_0) compared componentwise.
inline bool lex_less(const ZMPoly& a, const ZMPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t k = a.coeffs().size(); k-- > 0;) {
    if (a.coeff(k) != b.coeff(k)) return a.coeff(k) < b.coeff(k);
  }
  return false;
}

/// Parses the rendering produced by render_coeffs, e.g. "x^3-3x+1"
/// (spaces and '*' between coefficient and variable are accepted).
inline ZPoly parse_zpoly(const std::string& text, char var = 'x') {
  std::string s;
  for (char ch : text) {
    if (ch != ' ' && ch != '*') s.push_back(ch);
  }
  if (s.empty()) throw InvalidArgument("empty polynomial");
  std::vector<Int> c;
  std::size_t i = 0;
  auto digits = [&](std::string& out) {
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') out.push_back(s[i++]);
  };
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    } else if (i != 0) {
      throw InvalidArgument("malformed polynomial \"" + text + "\"");
    }
    std::string coeff, exponent;
    digits(coeff);
    std::size_t deg = 0;
    if (i < s.size() && s[i] == var) {
      ++i;
      deg = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        digits(exponent);
        if (exponent.empty()) throw InvalidArgument("malformed exponent in \"" + text + "\"");
        if (exponent.size() > 6) throw InvalidArgument("exponent too large in \"" + text + "\"");
        deg = std::stoul(exponent);
      }
    } else if (coeff.empty()) {
      throw InvalidArgument("malformed polynomial \"" + text + "\"");
    }
    Int a = coeff.empty() ? Int(1) : Int(coeff);
    if (negative) a = -a;
    if (c.size() <= deg) c.resize(deg + 1);
    c[deg] += a;
  }
  return ZPoly(std::move(c));
}

}  // namespace grstd

#endif  // GRSTD_POLY_HPP
