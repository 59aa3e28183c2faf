#ifndef GRSTD_FINITE_FIELD_HPP
#define GRSTD_FINITE_FIELD_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "grstd/error.hpp"
#include "grstd/integer.hpp"
#include "grstd/poly.hpp"
#include "grstd/quotient_ring.hpp"

namespace grstd {

/// Seed of the pseudorandom stream used for equal-degree splitting. Every
/// call creates its own generator from the seed; results are sorted, so the
/// seed never changes an answer, only the path taken to it.
inline constexpr std::uint64_t kDefaultSeed = 0x6a09e667f3bcc908ULL;

namespace detail {

inline void require_prime_field(const ZMPoly& f, const char* op) {
  if (!f.modulus_ref()->is_prime()) {
    throw InvalidArgument(std::string(op) + " needs a polynomial over F_p, got modulus " + f.modulus().get_str());
  }
}

class CoefficientStream {
 public:
  CoefficientStream(std::uint64_t seed, Int p) : gen_(seed), p_(std::move(p)) {}

  Int next() {
    if (p_.fits_ulong_p()) {
      std::uniform_int_distribution<unsigned long> dist(0, p_.get_ui() - 1);
      return Int(dist(gen_));
    }
    Int acc = 0;
    const unsigned long words = mpz_sizeinbase(p_.get_mpz_t(), 2) / 64 + 2;
    for (unsigned long i = 0; i < words; ++i) acc = (acc << 64) + Int(static_cast<unsigned long>(gen_()));
    return mod(acc, p_);
  }

  std::vector<Int> vector(std::size_t n) {
    std::vector<Int> v(n);
    for (auto& a : v) a = next();
    return v;
  }

 private:
  std::mt19937_64 gen_;
  Int p_;
};

/// x^{p^k} mod f by k successive p-th powers.
inline ZMPoly frobenius_iterate(const ZMPoly& start, unsigned long k, const ZMPoly& f) {
  ZMPoly h = start % f;
  for (unsigned long i = 0; i < k; ++i) h = pow_mod(h, f.prime(), f);
  return h;
}

/// Square-free decomposition over F_p of a monic f: pairs (g, e) with
/// f = prod g^e, each g squarefree, the g pairwise coprime.
inline std::vector<std::pair<ZMPoly, unsigned>> squarefree_decomposition(const ZMPoly& f) {
  const auto& m = f.modulus_ref();
  const ZMPoly one = ZMPoly::constant(m, 1);
  std::vector<std::pair<ZMPoly, unsigned>> out;
  if (f.degree() < 1) return out;
  ZMPoly c = gcd_modp(f, f.derivative());
  ZMPoly w = f / c;
  unsigned i = 1;
  while (!(w == one)) {
    ZMPoly y = gcd_modp(w, c);
    ZMPoly fac = w / y;
    if (fac.degree() > 0) out.emplace_back(fac, i);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    // c is a p-th power: c(x) = sum a_{jp} x^{jp}, and a^{1/p} = a in F_p.
    const unsigned long p = to_u64(f.prime());
    std::vector<Int> root;
    for (std::size_t j = 0; j < c.coeffs().size(); j += p) root.push_back(c.coeffs()[j]);
    for (auto& [g, e] : squarefree_decomposition(ZMPoly(m, root))) out.emplace_back(g, e * static_cast<unsigned>(p));
  }
  return out;
}

/// Distinct-degree factorization of a squarefree monic f: pairs (g, d)
/// where g is the product of all irreducible factors of degree d.
inline std::vector<std::pair<ZMPoly, unsigned>> distinct_degree(ZMPoly f) {
  std::vector<std::pair<ZMPoly, unsigned>> out;
  const auto& m = f.modulus_ref();
  const ZMPoly x = ZMPoly::x(m);
  ZMPoly h = x % f;
  for (unsigned i = 1; f.degree() >= 2 * static_cast<int>(i); ++i) {
    h = pow_mod(h, f.prime(), f);
    ZMPoly g = gcd_modp(f, h - x);
    if (g.degree() > 0) {
      out.emplace_back(g, i);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, static_cast<unsigned>(f.degree()));
  return out;
}

/// Splits a monic squarefree f whose irreducible factors all have degree d.
inline void equal_degree(const ZMPoly& f, unsigned d, CoefficientStream& rng, std::vector<ZMPoly>& out) {
  if (f.degree() == static_cast<int>(d)) {
    out.push_back(f);
    return;
  }
  const auto& m = f.modulus_ref();
  const ZMPoly one = ZMPoly::constant(m, 1);
  const bool char2 = f.prime() == 2;
  const Int half = char2 ? Int(0) : Int((pow_int(f.prime(), d) - 1) / 2);
  for (;;) {
    ZMPoly a(m, rng.vector(static_cast<std::size_t>(f.degree())));
    if (a.degree() < 1) continue;
    ZMPoly b(m);
    if (char2) {
      // Trace a + a^2 + ... + a^{2^{d-1}} takes values in F_2 on every factor.
      ZMPoly t = a;
      b = a;
      for (unsigned i = 1; i < d; ++i) {
        t = (t * t) % f;
        b += t;
      }
    } else {
      b = pow_mod(a, half, f) - one;
    }
    ZMPoly g = gcd_modp(f, b);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace detail

/// One irreducible factor with its multiplicity.
struct Factor {
  ZMPoly poly;
  unsigned multiplicity = 1;
};

/// f = lead * prod factor^multiplicity, factors monic irreducible, sorted.
struct Factorization {
  Int lead;
  std::vector<Factor> factors;
};

/// Irreducibility over F_p by the distinct-degree criterion:
/// x^{p^n} = x mod f and gcd(x^{p^{n/q}} - x, f) = 1 for primes q | n.
/// Shares no code path with factor_modp beyond polynomial arithmetic.
inline bool is_irreducible_modp(const ZMPoly& f) {
  detail::require_prime_field(f, "is_irreducible_modp");
  if (f.degree() < 1) throw InvalidArgument("is_irreducible_modp: constant polynomial");
  if (f.degree() == 1) return true;
  const ZMPoly g = f.monic();
  const unsigned long n = static_cast<unsigned long>(g.degree());
  const ZMPoly x = ZMPoly::x(g.modulus_ref());
  // One pass over h = x^{p^i}. Factors of small degree are looked for first
  // since they reject most reducible inputs after a few steps.
  std::vector<unsigned long> checkpoints;
  for (auto q : prime_divisors(n)) checkpoints.push_back(n / q);
  const unsigned long small = std::min<unsigned long>(n / 2, 8);
  ZMPoly h = x % g;
  for (unsigned long i = 1; i <= n; ++i) {
    h = pow_mod(h, g.prime(), g);
    if (i == n) break;
    const bool check = i <= small || std::find(checkpoints.begin(), checkpoints.end(), i) != checkpoints.end();
    if (check && gcd_modp(g, h - x).degree() != 0) return false;
  }
  return h == x % g;
}

/// Complete factorization over F_p (Cantor-Zassenhaus).
inline Factorization factor_modp(const ZMPoly& f, std::uint64_t seed = kDefaultSeed) {
  detail::require_prime_field(f, "factor_modp");
  if (f.is_zero()) throw InvalidArgument("factor_modp: zero polynomial");
  Factorization out{f.lead(), {}};
  if (f.degree() == 0) return out;
  detail::CoefficientStream rng(seed, f.prime());
  for (auto& [sqf, e] : detail::squarefree_decomposition(f.monic())) {
    for (auto& [g, d] : detail::distinct_degree(sqf)) {
      std::vector<ZMPoly> pieces;
      detail::equal_degree(g, d, rng, pieces);
      for (auto& piece : pieces) out.factors.push_back({std::move(piece), e});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const Factor& a, const Factor& b) {
    if (!(a.poly == b.poly)) return lex_less(a.poly, b.poly);
    return a.multiplicity < b.multiplicity;
  });
  return out;
}

inline bool is_squarefree_modp(const ZMPoly& f) {
  detail::require_prime_field(f, "is_squarefree_modp");
  if (f.degree() < 1) return true;
  return gcd_modp(f, f.derivative()).degree() == 0;
}

// ---------------------------------------------------------------------------
// Explicit finite fields F_p[t]/(modulus).
// ---------------------------------------------------------------------------

class FFElement;

/// The field F_p[t]/(modulus_poly). Cheap to copy (shared immutable state).
class FFExt {
 public:
  explicit FFExt(const ZMPoly& modulus_poly) {
    detail::require_prime_field(modulus_poly, "FFExt");
    if (!modulus_poly.is_monic()) throw InvalidArgument("FFExt modulus must be monic");
    if (!is_irreducible_modp(modulus_poly)) {
      throw InvalidArgument("FFExt modulus " + modulus_poly.to_string() + " is reducible");
    }
    ring_ = std::make_shared<const QuotientRing>(modulus_poly);
  }

  const Int& p() const { return ring_->prime(); }
  std::size_t degree() const { return ring_->degree(); }
  const ZMPoly& modulus_poly() const { return ring_->modulus_poly(); }
  const QuotientRing& ring() const { return *ring_; }
  /// p^d
  Int size() const { return pow_int(p(), degree()); }

  FFElement element(std::vector<Int> coeffs) const;
  FFElement zero() const;
  FFElement one() const;
  FFElement scalar(const Int& a) const;

  friend bool operator==(const FFExt& a, const FFExt& b) { return a.modulus_poly() == b.modulus_poly(); }

 private:
  std::shared_ptr<const QuotientRing> ring_;
};

/// An element of an FFExt; coordinates in the basis 1, t, ..., t^{d-1}.
class FFElement {
 public:
  FFElement(FFExt parent, QuotientRing::Elem coeffs) : parent_(std::move(parent)), c_(std::move(coeffs)) {}

  const FFExt& parent() const { return parent_; }
  const QuotientRing::Elem& coeffs() const { return c_; }
  bool is_zero() const { return parent_.ring().is_zero(c_); }
  bool is_one() const { return c_ == parent_.ring().one(); }
  /// True when the element lies in the prime field.
  bool in_prime_field() const { return parent_.ring().is_scalar(c_); }

  friend FFElement operator+(const FFElement& a, const FFElement& b) {
    return {a.parent_, a.parent_.ring().add(a.c_, b.c_)};
  }
  friend FFElement operator-(const FFElement& a, const FFElement& b) {
    return {a.parent_, a.parent_.ring().sub(a.c_, b.c_)};
  }
  friend FFElement operator*(const FFElement& a, const FFElement& b) {
    return {a.parent_, a.parent_.ring().mul(a.c_, b.c_)};
  }
  friend bool operator==(const FFElement& a, const FFElement& b) { return a.c_ == b.c_; }

  FFElement pow(const Int& e) const { return {parent_, parent_.ring().pow(c_, e)}; }
  FFElement inverse() const {
    if (is_zero()) throw ArithmeticError("inverse of zero in F_q");
    return {parent_, parent_.ring().inverse(c_)};
  }

  std::string to_string() const { return parent_.ring().to_string(c_); }

 private:
  FFExt parent_;
  QuotientRing::Elem c_;
};

inline FFElement FFExt::element(std::vector<Int> coeffs) const {
  coeffs.resize(degree());
  for (auto& a : coeffs) a = mod(a, p());
  return {*this, std::move(coeffs)};
}
inline FFElement FFExt::zero() const { return {*this, ring_->zero()}; }
inline FFElement FFExt::one() const { return {*this, ring_->one()}; }
inline FFElement FFExt::scalar(const Int& a) const { return {*this, ring_->scalar(a)}; }

/// Visits the monic polynomials of degree d over F_p (or, with monic =
/// false, all elements of F_p^d) in lexicographic order of the coefficient
/// tuple (c_{d-1}, ..., c_0). Stops when the visitor returns true.
template <typename Visitor>
bool for_each_lex_tuple(const Int& p, std::size_t d, Visitor&& visit) {
  std::vector<Int> c(d, Int(0));
  for (;;) {
    if (visit(static_cast<const std::vector<Int>&>(c))) return true;
    std::size_t i = 0;
    while (i < d) {
      c[i] += 1;
      if (c[i] < p) break;
      c[i] = 0;
      ++i;
    }
    if (i == d) return false;
  }
}

/// F_{p^d} presented by the lexicographically smallest monic irreducible of
/// degree d.
inline FFExt canonical_extension(const Int& p, std::size_t d) {
  if (d < 1) throw InvalidArgument("canonical_extension: degree must be >= 1");
  if (!is_prime(p)) throw InvalidArgument("canonical_extension: p is not prime");
  static std::mutex cache_mutex;
  static std::map<std::pair<std::string, std::size_t>, FFExt> cache;
  const auto key = std::make_pair(p.get_str(), d);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto fp = make_modulus(p, 1);
  std::optional<ZMPoly> found;
  for_each_lex_tuple(p, d, [&](const std::vector<Int>& low) {
    std::vector<Int> c = low;
    c.push_back(1);
    ZMPoly f(fp, std::move(c));
    if (is_irreducible_modp(f)) {
      found = std::move(f);
      return true;
    }
    return false;
  });
  detail::check_internal(found.has_value(), "an irreducible polynomial of every degree exists");
  FFExt ext(*found);
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.emplace(key, ext);
  return ext;
}

/// First element of exact multiplicative order M, scanning candidates x in
/// lexicographic coefficient order and testing y = x^{(p^d-1)/M}.
inline FFElement element_of_order(const FFExt& ext, std::uint64_t M) {
  const Int group = ext.size() - 1;
  const Int Mi(static_cast<unsigned long>(M));
  if (M == 0 || !mpz_divisible_p(group.get_mpz_t(), Mi.get_mpz_t())) {
    throw InvalidArgument("element_of_order: " + std::to_string(M) + " does not divide " + group.get_str());
  }
  if (M == 1) return ext.one();
  const Int cofactor = group / Mi;
  const auto primes = prime_divisors(M);
  std::optional<FFElement> found;
  for_each_lex_tuple(ext.p(), ext.degree(), [&](const std::vector<Int>& c) {
    FFElement x = ext.element(c);
    if (x.is_zero()) return false;
    FFElement y = x.pow(cofactor);
    for (auto q : primes) {
      if (y.pow(Int(static_cast<unsigned long>(M / q))).is_one()) return false;
    }
    found = std::move(y);
    return true;
  });
  detail::check_internal(found.has_value(), "cyclic group has an element of every order dividing it");
  return *found;
}

/// Exact multiplicative order of a nonzero element, given a multiple of it.
inline std::uint64_t element_order(const FFElement& a, std::uint64_t multiple) {
  if (a.is_zero()) throw InvalidArgument("order of zero");
  std::uint64_t order = multiple;
  for (auto q : prime_divisors(multiple)) {
    while (order % q == 0 && a.pow(Int(static_cast<unsigned long>(order / q))).is_one()) order /= q;
  }
  return order;
}

namespace detail {

/// Minimal polynomial arithmetic over an FFExt, enough for root finding.
class ExtPolyOps {
 public:
  using Elem = QuotientRing::Elem;
  using Poly = std::vector<Elem>;

  explicit ExtPolyOps(const QuotientRing& k) : k_(k) {}

  void strip(Poly& a) const {
    while (!a.empty() && k_.is_zero(a.back())) a.pop_back();
  }
  Poly mul(const Poly& a, const Poly& b) const {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, k_.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (k_.is_zero(a[i])) continue;
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = k_.add(c[i + j], k_.mul(a[i], b[j]));
    }
    strip(c);
    return c;
  }
  Poly add(Poly a, const Poly& b) const {
    if (a.size() < b.size()) a.resize(b.size(), k_.zero());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = k_.add(a[i], b[i]);
    strip(a);
    return a;
  }
  Poly sub(Poly a, const Poly& b) const {
    if (a.size() < b.size()) a.resize(b.size(), k_.zero());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = k_.sub(a[i], b[i]);
    strip(a);
    return a;
  }
  std::pair<Poly, Poly> divrem(Poly a, const Poly& b) const {
    if (a.size() < b.size()) return {{}, a};
    const Elem inv = k_.inverse(b.back());
    const std::size_t db = b.size() - 1;
    Poly q(a.size() - db, k_.zero());
    for (std::size_t k = a.size(); k-- > db;) {
      Elem c = k_.mul(a[k], inv);
      q[k - db] = c;
      if (k_.is_zero(c)) continue;
      for (std::size_t j = 0; j <= db; ++j) a[k - db + j] = k_.sub(a[k - db + j], k_.mul(c, b[j]));
    }
    a.resize(db);
    strip(a);
    strip(q);
    return {q, a};
  }
  Poly rem(const Poly& a, const Poly& b) const { return divrem(a, b).second; }
  Poly monic(const Poly& a) const {
    const Elem inv = k_.inverse(a.back());
    Poly c;
    for (const auto& x : a) c.push_back(k_.mul(x, inv));
    return c;
  }
  Poly gcd(Poly a, Poly b) const {
    while (!b.empty()) {
      Poly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return a.empty() ? a : monic(a);
  }
  Poly powmod(Poly base, const Int& e, const Poly& m) const {
    Poly r{k_.one()};
    base = rem(base, m);
    const unsigned long bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
    for (unsigned long i = bits; i-- > 0;) {
      r = rem(mul(r, r), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, base), m);
    }
    return r;
  }

 private:
  const QuotientRing& k_;
};

}  // namespace detail

/// Roots of f (over F_p) lying in ext, each verified by evaluation, sorted
/// in lexicographic coefficient order.
inline std::vector<FFElement> roots_in_field(const ZMPoly& f, const FFExt& ext, std::uint64_t seed = kDefaultSeed) {
  detail::require_prime_field(f, "roots_in_field");
  if (f.is_zero()) throw InvalidArgument("roots_in_field: zero polynomial");
  if (f.prime() != ext.p()) throw InvalidArgument("roots_in_field: characteristic mismatch");
  const QuotientRing& k = ext.ring();
  detail::ExtPolyOps ops(k);
  using Poly = detail::ExtPolyOps::Poly;
  Poly F;
  for (const auto& a : f.coeffs()) F.push_back(k.scalar(a));
  if (F.size() <= 1) return {};
  F = ops.monic(F);

  // h = gcd(F, X^q - X) collects the distinct roots in F_q.
  const Poly X{k.zero(), k.one()};
  Poly xq = ops.rem(X, F);
  for (std::size_t i = 0; i < ext.degree(); ++i) xq = ops.powmod(xq, ext.p(), F);
  Poly h = ops.gcd(F, ops.sub(xq, X));

  std::vector<Poly> pending{h}, linear;
  detail::CoefficientStream rng(seed, ext.p());
  const bool char2 = ext.p() == 2;
  const Int half = char2 ? Int(0) : Int((ext.size() - 1) / 2);
  while (!pending.empty()) {
    Poly g = std::move(pending.back());
    pending.pop_back();
    if (g.size() <= 1) continue;
    if (g.size() == 2) {
      linear.push_back(std::move(g));
      continue;
    }
    for (;;) {
      Poly split;
      if (char2) {
        // Tr(beta X) = sum_{i<d} (beta X)^{2^i} is F_2-valued on the roots.
        Poly t{k.zero(), rng.vector(ext.degree())};
        Poly acc = t;
        for (std::size_t i = 1; i < ext.degree(); ++i) {
          t = ops.rem(ops.mul(t, t), g);
          acc = ops.add(acc, t);
        }
        split = ops.gcd(g, acc);
      } else {
        Poly shifted{rng.vector(ext.degree()), k.one()};
        Poly b = ops.sub(ops.powmod(shifted, half, g), Poly{k.one()});
        split = ops.gcd(g, b);
      }
      if (split.size() > 1 && split.size() < g.size()) {
        pending.push_back(ops.divrem(g, split).first);
        pending.push_back(std::move(split));
        break;
      }
    }
  }

  std::vector<FFElement> roots;
  for (const auto& lin : linear) {
    FFElement r(ext, k.neg(lin[0]));
    // Horner evaluation as the post-condition check.
    FFElement acc = ext.zero();
    for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = acc * r + ext.scalar(f.coeffs()[i]);
    detail::check_internal(acc.is_zero(), "root_in_field evaluation");
    roots.push_back(std::move(r));
  }
  std::sort(roots.begin(), roots.end(), [](const FFElement& a, const FFElement& b) {
    return std::lexicographical_compare(a.coeffs().rbegin(), a.coeffs().rend(), b.coeffs().rbegin(),
                                        b.coeffs().rend());
  });
  return roots;
}

}  // namespace grstd

#endif  // GRSTD_FINITE_FIELD_HPP
