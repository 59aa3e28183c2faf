#ifndef GRSTD_INTEGER_HPP
#define GRSTD_INTEGER_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grstd/error.hpp"

namespace grstd {

/// Arbitrary-precision signed integer.
using Int = mpz_class;

/// Least nonnegative residue of a modulo m (m > 0).
inline Int mod(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

/// Residue of a modulo m in (-m/2, m/2].
inline Int balanced_mod(const Int& a, const Int& m) {
  Int r = mod(a, m);
  if (2 * r > m) r -= m;
  return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int powmod(const Int& base, const Int& e, const Int& m) {
  Int r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Int gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// Inverse of a modulo m; throws ArithmeticError when gcd(a, m) != 1.
inline Int inv_mod(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw ArithmeticError("no inverse of " + a.get_str() + " modulo " + m.get_str());
  }
  return r;
}

inline bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

inline bool is_prime(std::uint64_t n) { return is_prime(Int(static_cast<unsigned long>(n))); }

inline std::uint64_t to_u64(const Int& a) {
  if (a < 0 || !a.fits_ulong_p()) throw InvalidArgument("integer out of 64-bit range: " + a.get_str());
  return a.get_ui();
}

/// Exponent of the largest power of r dividing x (x != 0, r >= 2).
inline unsigned valuation(Int x, const Int& r) {
  if (x == 0) throw InvalidArgument("valuation of zero");
  unsigned v = 0;
  while (mpz_divisible_p(x.get_mpz_t(), r.get_mpz_t())) {
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), r.get_mpz_t());
    ++v;
  }
  return v;
}

/// Prime factorization by trial division. Only used on small integers
/// (conductors, ranks, group orders of auxiliary fields).
inline std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
    if (n % q != 0) continue;
    unsigned e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    out.emplace_back(q, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (auto& [q, e] : factor_u64(n)) out.push_back(q);
  return out;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (auto q : prime_divisors(n)) r = r / q * (q - 1);
  return r;
}

inline int mobius(std::uint64_t n) {
  int s = 1;
  for (auto& [q, e] : factor_u64(n)) {
    if (e > 1) return 0;
    s = -s;
  }
  return s;
}

inline std::uint64_t pow_u64(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e != 0) {
    if (e & 1) r = mulmod_u64(r, b, m);
    b = mulmod_u64(b, b, m);
    e >>= 1;
  }
  return r;
}

/// Multiplicative order of p modulo m; requires gcd(p, m) = 1.
inline std::uint64_t multiplicative_order(const Int& p, std::uint64_t m) {
  if (m == 1) return 1;
  std::uint64_t pm = mod(p, Int(static_cast<unsigned long>(m))).get_ui();
  if (gcd_u64(pm, m) != 1) throw InvalidArgument("order of a non-unit");
  std::uint64_t order = euler_phi(m);
  for (auto q : prime_divisors(order)) {
    while (order % q == 0 && powmod_u64(pm, order / q, m) == 1) order /= q;
  }
  return order;
}

/// Decomposes m = q^e with q prime, if possible.
inline std::optional<std::pair<Int, unsigned>> as_prime_power(const Int& m) {
  if (m < 2) return std::nullopt;
  if (is_prime(m)) return std::make_pair(m, 1u);
  const unsigned long bits = mpz_sizeinbase(m.get_mpz_t(), 2);
  for (unsigned long e = bits; e >= 2; --e) {
    Int root;
    if (mpz_root(root.get_mpz_t(), m.get_mpz_t(), e) != 0 && is_prime(root)) {
      return std::make_pair(root, static_cast<unsigned>(e));
    }
  }
  return std::nullopt;
}

inline Int parse_int(const std::string& s) {
  Int r;
  if (s.empty() || r.set_str(s, 10) != 0) throw InvalidArgument("not an integer: '" + s + "'");
  return r;
}

}  // namespace grstd

#endif  // GRSTD_INTEGER_HPP
