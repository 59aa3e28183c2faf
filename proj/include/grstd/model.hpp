#ifndef GRSTD_MODEL_HPP
#define GRSTD_MODEL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "grstd/error.hpp"
#include "grstd/finite_field.hpp"
#include "grstd/integer.hpp"
#include "grstd/linalg.hpp"
#include "grstd/poly.hpp"

namespace grstd {

inline constexpr const char* kVersion = "1.0.0";

/// Where one prime-power factor r^k of the rank came from.
struct ComponentProvenance {
  std::uint64_t r = 0;
  unsigned k = 0;
  unsigned l = 0;
  std::vector<Int> descriptor;
  /// Auxiliary field modulus over F_p (absent for r = p).
  std::optional<ZMPoly> aux_modulus;
  /// Coordinates of the pinned root of unity in the auxiliary field.
  std::vector<Int> omega;
  std::string route;
};

struct Provenance {
  std::string route;
  std::vector<ComponentProvenance> components;
  std::uint64_t seed = kDefaultSeed;
  std::string version = kVersion;
  std::vector<std::string> notes;
};

/// A rank-m free Z/p^n-algebra given by structure constants on a basis
/// e_0, ..., e_{m-1} labelled by the fractions i/m, with e_0 = 1.
struct ExplicitModel {
  Int p;
  unsigned n = 0;
  std::uint64_t m = 0;
  std::vector<std::string> basis_labels;
  /// a_{ijk} at index (i m + j) m + k, with e_i e_j = sum_k a_{ijk} e_k.
  std::vector<Int> constants;
  std::optional<ZMPoly> defining_poly;
  /// Coordinates of a root of defining_poly; empty when there is none.
  std::vector<Int> generator;
  Provenance provenance;

  Int modulus() const { return pow_int(p, n); }
  const Int& a(std::size_t i, std::size_t j, std::size_t k) const { return constants[(i * m + j) * m + k]; }
  Int& a(std::size_t i, std::size_t j, std::size_t k) { return constants[(i * m + j) * m + k]; }
};

/// Label "i/m" in lowest terms ("0" for i = 0).
inline std::string basis_label(std::uint64_t i, std::uint64_t m) {
  if (i == 0) return "0";
  const std::uint64_t g = gcd_u64(i, m);
  if (m / g == 1) return std::to_string(i / g);
  return std::to_string(i / g) + "/" + std::to_string(m / g);
}

inline std::vector<std::string> basis_labels(std::uint64_t m) {
  std::vector<std::string> out;
  for (std::uint64_t i = 0; i < m; ++i) out.push_back(basis_label(i, m));
  return out;
}

// ---------------------------------------------------------------------------
// Digits of i/m.
// ---------------------------------------------------------------------------

/// The unique digits c_{r,k} in [0, r) with sum c_{r,k} / r^k = i/m mod Z.
struct EpsilonIndex {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;
  std::map<std::pair<std::uint64_t, unsigned>, std::uint64_t> digits;

  std::uint64_t digit(std::uint64_t r, unsigned k) const {
    auto it = digits.find({r, k});
    return it == digits.end() ? 0 : it->second;
  }
};

/// Position a_r in [0, r^K) of i/m inside the component of rank r^K, i.e.
/// a_r / r^K is the r-primary part of i/m. Works for any divisor q of m
/// coprime to m/q.
inline std::uint64_t component_index(std::uint64_t i, std::uint64_t m, std::uint64_t q) {
  if (q == 1) return 0;
  const std::uint64_t rest = m / q;
  const Int inv = inv_mod(Int(static_cast<unsigned long>(rest % q)), Int(static_cast<unsigned long>(q)));
  return mulmod_u64(i % q, to_u64(inv), q);
}

inline EpsilonIndex epsilon_digits(std::uint64_t i, std::uint64_t m) {
  if (m == 0 || i >= m) throw InvalidArgument("epsilon_digits: need 0 <= i < m");
  EpsilonIndex out{i, m, {}};
  for (auto [r, K] : factor_u64(m)) {
    const std::uint64_t q = pow_u64(r, K);
    std::uint64_t a = component_index(i, m, q);
    for (unsigned k = K; k >= 1; --k) {
      if (a % r != 0) out.digits[{r, k}] = a % r;
      a /= r;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Element arithmetic.
// ---------------------------------------------------------------------------

/// An element of a model, as coordinates in [0, p^n).
struct RingElement {
  std::vector<Int> coords;
  friend bool operator==(const RingElement&, const RingElement&) = default;
};

class ModelArithmetic {
 public:
  explicit ModelArithmetic(const ExplicitModel& model) : model_(model), N_(model.modulus()) {}

  const ExplicitModel& model() const { return model_; }
  const Int& modulus() const { return N_; }
  std::size_t rank() const { return model_.m; }

  RingElement zero() const { return {std::vector<Int>(model_.m)}; }
  RingElement one() const { return basis(0); }
  RingElement basis(std::size_t i) const {
    RingElement e = zero();
    e.coords.at(i) = 1;
    return e;
  }
  RingElement scalar(const Int& c) const {
    RingElement e = zero();
    e.coords[0] = mod(c, N_);
    return e;
  }
  RingElement element(std::vector<Int> coords) const {
    if (coords.size() != model_.m) throw InvalidArgument("element: expected " + std::to_string(model_.m) + " coordinates");
    for (auto& c : coords) c = mod(c, N_);
    return {std::move(coords)};
  }

  RingElement add(const RingElement& u, const RingElement& v) const {
    RingElement w = zero();
    for (std::size_t i = 0; i < model_.m; ++i) w.coords[i] = mod(u.coords[i] + v.coords[i], N_);
    return w;
  }
  RingElement sub(const RingElement& u, const RingElement& v) const {
    RingElement w = zero();
    for (std::size_t i = 0; i < model_.m; ++i) w.coords[i] = mod(u.coords[i] - v.coords[i], N_);
    return w;
  }
  RingElement scale(const Int& s, const RingElement& u) const {
    RingElement w = zero();
    for (std::size_t i = 0; i < model_.m; ++i) w.coords[i] = mod(s * u.coords[i], N_);
    return w;
  }

  RingElement mul(const RingElement& u, const RingElement& v) const {
    const std::size_t m = model_.m;
    std::vector<Int> acc(m);
    Int uv;
    for (std::size_t i = 0; i < m; ++i) {
      if (u.coords[i] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (v.coords[j] == 0) continue;
        uv = u.coords[i] * v.coords[j];
        const Int* row = &model_.constants[(i * m + j) * m];
        for (std::size_t k = 0; k < m; ++k) {
          if (row[k] != 0) mpz_addmul(acc[k].get_mpz_t(), uv.get_mpz_t(), row[k].get_mpz_t());
        }
      }
    }
    for (auto& c : acc) c = mod(c, N_);
    return {std::move(acc)};
  }

  /// Matrix of v -> u v, column j holding u e_j.
  Matrix multiplication_matrix(const RingElement& u, const Int& modulus) const {
    const std::size_t m = model_.m;
    Matrix L(m, std::vector<Int>(m));
    for (std::size_t i = 0; i < m; ++i) {
      if (u.coords[i] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = 0; k < m; ++k) L[k][j] += u.coords[i] * model_.a(i, j, k);
      }
    }
    for (auto& row : L) {
      for (auto& x : row) x = mod(x, modulus);
    }
    return L;
  }

  bool is_unit(const RingElement& u) const {
    return rank_mod_p(multiplication_matrix(u, model_.p), model_.p) == model_.m;
  }

  /// Inverse of a unit: residue inverse by linear algebra mod p, then
  /// Newton steps v <- v (2 - u v).
  RingElement inverse(const RingElement& u) const {
    const std::size_t m = model_.m;
    Matrix L = multiplication_matrix(u, model_.p);
    std::vector<std::vector<Int>> columns(m, std::vector<Int>(m));
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) columns[j][k] = L[k][j];
    }
    std::optional<SpanSolver> solver;
    try {
      solver.emplace(columns, model_.p, model_.p);
    } catch (const ArithmeticError&) {
      throw ArithmeticError("element is a zero divisor: it lies in the maximal ideal p R and has no inverse");
    }
    auto v0 = solver->coordinates(basis(0).coords);
    detail::check_internal(v0.has_value(), "residue inverse exists");
    RingElement v = element(*v0);
    const RingElement two = scalar(2);
    for (unsigned correct = 1; correct < model_.n; correct *= 2) v = mul(v, sub(two, mul(u, v)));
    detail::check_internal(mul(u, v) == one(), "Newton inverse");
    return v;
  }

  RingElement pow(const RingElement& u, const Int& e) const {
    if (e < 0) return pow(inverse(u), Int(-e));
    RingElement r = one();
    const unsigned long bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
    for (unsigned long i = bits; i-- > 0;) {
      r = mul(r, r);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, u);
    }
    return r;
  }

  /// f(u) for f over Z/p^n (or over Z, read mod p^n).
  RingElement evaluate(const std::vector<Int>& coeffs, const RingElement& u) const {
    RingElement acc = zero();
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = add(mul(acc, u), scalar(coeffs[i]));
    return acc;
  }

 private:
  const ExplicitModel& model_;
  Int N_;
};

// ---------------------------------------------------------------------------
// Models from multiplication tables and their combinations.
// ---------------------------------------------------------------------------

/// Structure constants on the basis b_0 = 1, b_1, ..., b_{m-1} of the
/// quotient ring Z/p^n[x]/(G), each b_i given in the power basis.
inline std::vector<Int> constants_in_basis(const QuotientRing& ring, const std::vector<QuotientRing::Elem>& basis) {
  const std::size_t m = basis.size();
  SpanSolver solver(basis, ring.characteristic(), ring.prime());
  std::vector<Int> out(m * m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      auto c = solver.coordinates(ring.mul(basis[i], basis[j]));
      detail::check_internal(c.has_value(), "basis products lie in the span of the basis");
      for (std::size_t k = 0; k < m; ++k) {
        out[(i * m + j) * m + k] = (*c)[k];
        out[(j * m + i) * m + k] = (*c)[k];
      }
    }
  }
  return out;
}

/// The rank-1 model Z/p^n with defining polynomial x - root.
inline ExplicitModel rank_one_model(const Int& p, unsigned n, const Int& root, Provenance prov) {
  const ModulusRef base = make_modulus(p, n);
  ExplicitModel out{p, n, 1, {"0"}, {Int(1)}, ZMPoly(base, {Int(-root), Int(1)}), {mod(root, base->value)},
                    std::move(prov)};
  return out;
}

/// The minimal polynomial of u over Z/p^n when 1, u, ..., u^{m-1} is a basis
/// (checked mod p), otherwise nothing.
inline std::optional<ZMPoly> power_basis_minpoly(const ModelArithmetic& ar, const RingElement& u) {
  const std::size_t m = ar.rank();
  std::vector<std::vector<Int>> powers;
  RingElement x = ar.one();
  for (std::size_t j = 0; j < m; ++j) {
    powers.push_back(x.coords);
    x = ar.mul(x, u);
  }
  std::optional<SpanSolver> solver;
  try {
    solver.emplace(powers, ar.modulus(), ar.model().p);
  } catch (const ArithmeticError&) {
    return std::nullopt;
  }
  auto c = solver->coordinates(x.coords);
  detail::check_internal(c.has_value(), "u^m lies in the span of lower powers");
  std::vector<Int> g(m + 1);
  for (std::size_t j = 0; j < m; ++j) g[j] = -(*c)[j];
  g[m] = 1;
  return ZMPoly(make_modulus(ar.model().p, ar.model().n), g);
}

inline constexpr int kPrimitiveElementRetries = 8;

/// Tensor product of models of pairwise coprime ranks over the same Z/p^n.
/// Basis element i/m corresponds to the tuple of component indices whose
/// fractions sum to i/m mod Z. A defining polynomial is attached when a
/// primitive element sum_c g_c + t prod_c g_c (t = 0, ..., 7) is found.
inline ExplicitModel tensor_compose(const std::vector<ExplicitModel>& components, std::uint64_t m) {
  if (components.empty()) throw InvalidArgument("tensor_compose: no components");
  const Int& p = components[0].p;
  const unsigned n = components[0].n;
  std::uint64_t total = 1;
  for (std::size_t c = 0; c < components.size(); ++c) {
    const auto& comp = components[c];
    if (comp.p != p || comp.n != n) throw InvalidArgument("tensor_compose: components over different rings");
    for (std::size_t c2 = 0; c2 < c; ++c2) {
      if (gcd_u64(components[c2].m, comp.m) != 1) throw InvalidArgument("tensor_compose: ranks are not coprime");
    }
    total *= comp.m;
  }
  if (total != m) throw InvalidArgument("tensor_compose: component ranks do not multiply to m");
  if (components.size() == 1) return components[0];

  const Int N = pow_int(p, n);
  std::vector<std::vector<std::uint64_t>> idx(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    for (const auto& comp : components) idx[i].push_back(component_index(i, m, comp.m));
  }
  // Inverse map from index tuples to i.
  std::map<std::vector<std::uint64_t>, std::uint64_t> position;
  for (std::uint64_t i = 0; i < m; ++i) position[idx[i]] = i;

  ExplicitModel out{p, n, m, basis_labels(m), std::vector<Int>(m * m * m), std::nullopt, {}, {}};
  for (std::uint64_t i = 0; i < m; ++i) {
    for (std::uint64_t j = 0; j < m; ++j) {
      // Expand the product of component rows into the output row.
      std::vector<std::pair<std::vector<std::uint64_t>, Int>> terms{{{}, Int(1)}};
      for (std::size_t c = 0; c < components.size(); ++c) {
        const auto& comp = components[c];
        std::vector<std::pair<std::vector<std::uint64_t>, Int>> next;
        for (std::uint64_t k = 0; k < comp.m; ++k) {
          const Int& a = comp.a(idx[i][c], idx[j][c], k);
          if (a == 0) continue;
          for (const auto& [key, coeff] : terms) {
            auto key2 = key;
            key2.push_back(k);
            next.emplace_back(std::move(key2), mod(coeff * a, N));
          }
        }
        terms = std::move(next);
      }
      for (const auto& [key, coeff] : terms) out.a(i, j, position.at(key)) = coeff;
    }
  }

  out.provenance.route = "tensor";
  for (const auto& comp : components) {
    for (const auto& cp : comp.provenance.components) out.provenance.components.push_back(cp);
    for (const auto& note : comp.provenance.notes) out.provenance.notes.push_back(note);
  }
  out.provenance.seed = components[0].provenance.seed;

  ModelArithmetic ar(out);
  std::vector<RingElement> gens;
  for (std::size_t c = 0; c < components.size(); ++c) {
    const auto& comp = components[c];
    if (comp.generator.empty()) {
      out.provenance.notes.push_back("component without generator; structure constants only");
      return out;
    }
    RingElement g = ar.zero();
    for (std::uint64_t k = 0; k < comp.m; ++k) {
      std::vector<std::uint64_t> key(components.size(), 0);
      key[c] = k;
      g.coords[position.at(key)] = mod(comp.generator[k], N);
    }
    gens.push_back(std::move(g));
  }
  RingElement sum = ar.zero(), prod = ar.one();
  for (const auto& g : gens) {
    sum = ar.add(sum, g);
    prod = ar.mul(prod, g);
  }
  for (int t = 0; t < kPrimitiveElementRetries; ++t) {
    RingElement theta = ar.add(sum, ar.scale(Int(t), prod));
    if (auto g = power_basis_minpoly(ar, theta)) {
      out.defining_poly = std::move(*g);
      out.generator = theta.coords;
      if (t > 0) out.provenance.notes.push_back("primitive element perturbed with t = " + std::to_string(t));
      return out;
    }
  }
  out.provenance.notes.push_back("no primitive element found; structure constants only");
  return out;
}

/// The model with every constant reduced to precision p^k, k <= n.
inline ExplicitModel reduce_precision(const ExplicitModel& model, unsigned k) {
  if (k < 1 || k > model.n) throw InvalidArgument("reduce_precision: need 1 <= k <= n");
  ExplicitModel out = model;
  out.n = k;
  const Int N = pow_int(model.p, k);
  for (auto& c : out.constants) c = mod(c, N);
  for (auto& c : out.generator) c = mod(c, N);
  if (out.defining_poly) out.defining_poly = reduce(*out.defining_poly, make_modulus(model.p, k));
  return out;
}

/// Residue field F_{p^m} of a model.
inline ExplicitModel residue_field_model(const ExplicitModel& model) {
  ExplicitModel out = reduce_precision(model, 1);
  if (out.defining_poly && !is_irreducible_modp(*out.defining_poly)) {
    detail::internal_failure("defining polynomial is reducible modulo p: " + out.defining_poly->to_string());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Verification.
// ---------------------------------------------------------------------------

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
};

struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
  /// Random element triples for the sampled associativity check; 0 picks a
  /// size-dependent default.
  std::size_t samples = 0;
  /// Exhaustive checks run when p^{nm} is at most this bound.
  std::uint64_t exhaustive_limit = 1u << 16;
  /// Associativity is checked on all basis triples up to this rank.
  std::uint64_t exhaustive_basis_rank = 16;
};

namespace detail {

inline std::string triple_string(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

/// Exhaustive unit, ideal and chain checks with word-size arithmetic.
inline void exhaustive_checks(const ExplicitModel& model, VerifyReport& report) {
  const std::size_t m = model.m;
  const std::uint64_t p = to_u64(model.p);
  const std::uint64_t N = to_u64(model.modulus());
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < m; ++i) size *= N;
  std::vector<std::uint64_t> a(model.constants.size()), a_p(model.constants.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] = to_u64(model.constants[i]);
    a_p[i] = a[i] % p;
  }

  auto rank_mod_p_u64 = [&](std::vector<std::uint64_t>& L) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m && rank < m; ++c) {
      std::size_t piv = rank;
      while (piv < m && L[piv * m + c] == 0) ++piv;
      if (piv == m) continue;
      for (std::size_t j = 0; j < m; ++j) std::swap(L[piv * m + j], L[rank * m + j]);
      const std::uint64_t inv = powmod_u64(L[rank * m + c], p - 2 == 0 ? 1 : p - 2, p);
      for (std::size_t r = rank + 1; r < m; ++r) {
        const std::uint64_t f = L[r * m + c] * inv % p;
        if (f == 0) continue;
        for (std::size_t j = c; j < m; ++j) L[r * m + j] = (L[r * m + j] + (p - f) * L[rank * m + j]) % p;
      }
      ++rank;
    }
    return rank;
  };

  std::uint64_t units = 0;
  bool ideal_ok = true;
  std::string ideal_detail;
  std::vector<std::uint64_t> u(m, 0), L(m * m);
  for (std::uint64_t count = 0; count < size; ++count) {
    std::fill(L.begin(), L.end(), 0);
    bool in_pR = true;
    for (std::size_t i = 0; i < m; ++i) {
      const std::uint64_t ui = u[i] % p;
      if (ui == 0) continue;
      in_pR = false;
      for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = 0; k < m; ++k) L[k * m + j] = (L[k * m + j] + ui * a_p[(i * m + j) * m + k]) % p;
      }
    }
    const bool unit = rank_mod_p_u64(L) == m;
    if (unit) ++units;
    if (unit == in_pR && ideal_ok) {
      ideal_ok = false;
      ideal_detail = unit ? "an element of p R is a unit" : "a nonunit lies outside p R";
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (++u[i] < N) break;
      u[i] = 0;
    }
  }
  const Int expected = pow_int(model.p, (model.n - 1) * m) * (pow_int(model.p, m) - 1);
  report.checks.push_back({"unit_count", Int(static_cast<unsigned long>(units)) == expected,
                           "units=" + std::to_string(units) + " expected=" + expected.get_str()});
  report.checks.push_back({"nonunits_form_pR", ideal_ok, ideal_ok ? "nonunits = p R" : ideal_detail});

  bool chain_ok = true;
  std::string chain_detail;
  std::uint64_t scale = 1;
  for (unsigned i = 0; i <= model.n; ++i) {
    std::unordered_set<std::uint64_t> members;
    std::fill(u.begin(), u.end(), 0);
    for (std::uint64_t count = 0; count < size; ++count) {
      std::uint64_t key = 0;
      for (std::size_t j = 0; j < m; ++j) key = key * N + (u[j] * scale) % N;
      members.insert(key);
      for (std::size_t j = 0; j < m; ++j) {
        if (++u[j] < N) break;
        u[j] = 0;
      }
    }
    const Int want = pow_int(model.p, (model.n - i) * m);
    if (Int(static_cast<unsigned long>(members.size())) != want) {
      chain_ok = false;
      chain_detail = "|p^" + std::to_string(i) + " R| = " + std::to_string(members.size()) + ", expected " + want.get_str();
    }
    scale *= p;
  }
  report.checks.push_back(
      {"ideal_chain", chain_ok, chain_ok ? "chain of length " + std::to_string(model.n + 1) : chain_detail});
}

}  // namespace detail

inline VerifyReport verify_model(const ExplicitModel& model, const VerifyOptions& opts = {}) {
  VerifyReport report;
  const std::size_t m = model.m;
  if (!is_prime(model.p) || model.n < 1 || m < 1 || model.constants.size() != m * m * m ||
      model.basis_labels.size() != m) {
    report.checks.push_back({"shape", false, "model fields are inconsistent"});
    return report;
  }
  const Int N = model.modulus();
  bool range_ok = std::all_of(model.constants.begin(), model.constants.end(),
                              [&](const Int& c) { return c >= 0 && c < N; });
  report.checks.push_back({"shape", range_ok, range_ok ? "constants in [0, p^n)" : "constant outside [0, p^n)"});
  if (!range_ok) return report;

  bool labels_ok = model.basis_labels == basis_labels(m);
  report.checks.push_back({"basis_labels", labels_ok, labels_ok ? "i/m in lowest terms" : "unexpected labels"});

  {
    std::string bad;
    for (std::size_t j = 0; j < m && bad.empty(); ++j) {
      for (std::size_t k = 0; k < m && bad.empty(); ++k) {
        const Int want = j == k ? 1 : 0;
        if (model.a(0, j, k) != want || model.a(j, 0, k) != want) bad = "a" + detail::triple_string(0, j, k);
      }
    }
    report.checks.push_back({"identity", bad.empty(), bad.empty() ? "e_0 is the identity" : "fails at " + bad});
  }
  {
    std::string bad;
    for (std::size_t i = 0; i < m && bad.empty(); ++i) {
      for (std::size_t j = i + 1; j < m && bad.empty(); ++j) {
        for (std::size_t k = 0; k < m && bad.empty(); ++k) {
          if (model.a(i, j, k) != model.a(j, i, k)) bad = "a" + detail::triple_string(i, j, k);
        }
      }
    }
    report.checks.push_back({"commutativity", bad.empty(), bad.empty() ? "a_ijk = a_jik" : "fails at " + bad});
  }

  std::mt19937_64 rng(opts.seed);
  {
    // (e_i e_j) e_k = e_i (e_j e_k), compared coefficientwise.
    auto basis_triple_ok = [&](std::size_t i, std::size_t j, std::size_t k) {
      for (std::size_t s = 0; s < m; ++s) {
        Int lhs, rhs;
        for (std::size_t t = 0; t < m; ++t) {
          mpz_addmul(lhs.get_mpz_t(), model.a(i, j, t).get_mpz_t(), model.a(t, k, s).get_mpz_t());
          mpz_addmul(rhs.get_mpz_t(), model.a(j, k, t).get_mpz_t(), model.a(i, t, s).get_mpz_t());
        }
        if (mod(lhs - rhs, N) != 0) return false;
      }
      return true;
    };
    std::string bad;
    const bool exhaustive = m <= opts.exhaustive_basis_rank;
    std::size_t tested = 0;
    if (exhaustive) {
      for (std::size_t i = 0; i < m && bad.empty(); ++i) {
        for (std::size_t j = 0; j < m && bad.empty(); ++j) {
          for (std::size_t k = 0; k < m && bad.empty(); ++k, ++tested) {
            if (!basis_triple_ok(i, j, k)) bad = detail::triple_string(i, j, k);
          }
        }
      }
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, m - 1);
      for (; tested < 2000 && bad.empty(); ++tested) {
        const std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
        if (!basis_triple_ok(i, j, k)) bad = detail::triple_string(i, j, k);
      }
    }
    report.checks.push_back({"associativity_basis", bad.empty(),
                             bad.empty() ? std::string(exhaustive ? "all " : "sampled ") + std::to_string(tested) +
                                               " basis triples"
                                         : "fails on basis triple " + bad});
  }

  ModelArithmetic ar(model);
  auto random_element = [&]() {
    RingElement e = ar.zero();
    for (auto& c : e.coords) {
      Int hi = Int(static_cast<unsigned long>(rng() >> 1)) * Int(static_cast<unsigned long>(rng() >> 1));
      c = mod(hi + Int(static_cast<unsigned long>(rng() >> 1)), N);
    }
    return e;
  };
  {
    std::size_t samples = opts.samples;
    if (samples == 0) {
      const std::uint64_t cube = static_cast<std::uint64_t>(m) * m * m;
      samples = m <= 4 ? 10000 : std::max<std::uint64_t>(32, 270000 / cube);
    }
    std::string bad;
    std::size_t tested = 0;
    for (; tested < samples && bad.empty(); ++tested) {
      const RingElement u = random_element(), v = random_element(), w = random_element();
      if (ar.mul(ar.mul(u, v), w) != ar.mul(u, ar.mul(v, w))) bad = "random triple " + std::to_string(tested);
    }
    report.checks.push_back({"associativity_sampled", bad.empty(),
                             bad.empty() ? std::to_string(tested) + " random element triples" : "fails on " + bad});
  }
  {
    // Additive order of 1 is exactly p^n.
    const bool ok = model.n == 0 ? false : mod(pow_int(model.p, model.n - 1), N) != 0;
    report.checks.push_back({"characteristic", ok, "characteristic p^n = " + N.get_str()});
  }
  if (model.defining_poly) {
    const ZMPoly& g = *model.defining_poly;
    bool ok = g.modulus() == N && g.is_monic() && g.degree() == static_cast<int>(m);
    std::string det = ok ? "" : "not monic of degree m over Z/p^n";
    if (ok && !is_irreducible_modp(reduce(g, make_modulus(model.p, 1)))) {
      ok = false;
      det = "reduction mod p is reducible";
    }
    if (ok) {
      if (model.generator.size() != m) {
        ok = false;
        det = "generator coordinates missing";
      } else {
        const RingElement x = ar.element(model.generator);
        if (!(ar.evaluate(g.coeffs(), x) == ar.zero())) {
          ok = false;
          det = "defining polynomial does not vanish at the generator";
        } else if (!power_basis_minpoly(ar, x)) {
          ok = false;
          det = "powers of the generator are not a basis";
        }
      }
    }
    report.checks.push_back({"defining_poly", ok, ok ? "basic irreducible, vanishes at generator" : det});
  }

  const Int total = pow_int(N, m);
  if (total <= Int(static_cast<unsigned long>(opts.exhaustive_limit))) detail::exhaustive_checks(model, report);
  return report;
}

}  // namespace grstd

#endif  // GRSTD_MODEL_HPP
