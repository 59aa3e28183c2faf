#ifndef GRSTD_TABLE_HPP
#define GRSTD_TABLE_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grstd/artin_schreier.hpp"
#include "grstd/error.hpp"
#include "grstd/galois_ring.hpp"

namespace grstd {

/// Defining polynomials of GR(p^n, r^k) for n = 1..n_max, plus the
/// polynomial at precision p^N in balanced form (absent when r = p).
struct TableRow {
  unsigned k = 0;
  std::vector<ZMPoly> columns;
  std::optional<ZMPoly> padic;
};

struct ModelTable {
  Int p;
  std::uint64_t r = 0;
  unsigned n_max = 0;
  unsigned precision = 0;
  std::vector<TableRow> rows;
};

/// Rows k = 0..k_max for r != p and k = 1..k_max for r = p.
inline ModelTable model_table(const Int& p, std::uint64_t r, unsigned k_max, unsigned n_max, unsigned N,
                              const BuildOptions& opts = {}) {
  if (!is_prime(p)) throw InvalidArgument("p = " + p.get_str() + " is not prime");
  if (!is_prime(r)) throw InvalidArgument("r = " + std::to_string(r) + " is not prime");
  if (n_max < 1) throw InvalidArgument("n_max must be >= 1");
  const bool p_part = Int(static_cast<unsigned long>(r)) == p;
  if (!p_part && N < n_max) throw InvalidArgument("precision N must be >= n_max");
  const unsigned top = std::max(n_max, p_part ? 0u : N);
  if (top > opts.caps.max_precision) {
    throw ResourceCapExceeded("precision " + std::to_string(top) + " exceeds cap " +
                              std::to_string(opts.caps.max_precision));
  }
  ModelTable out{p, r, n_max, p_part ? 0u : N, {}};
  for (unsigned k = p_part ? 1 : 0; k <= k_max; ++k) {
    if (pow_u64(r, k) > opts.caps.max_rank) {
      throw ResourceCapExceeded("rank " + std::to_string(r) + "^" + std::to_string(k) + " exceeds cap " +
                                std::to_string(opts.caps.max_rank));
    }
    TableRow row;
    row.k = k;
    for (unsigned n = 1; n <= n_max; ++n) {
      row.columns.push_back(p_part ? galois_ring_p_tower(p, n, k) : prime_power_polynomial(p, n, r, k, opts).poly);
    }
    if (!p_part) row.padic = prime_power_polynomial(p, N, r, k, opts).poly;
    out.rows.push_back(std::move(row));
  }
  return out;
}

/// One line per row: "k=1 | x^3+14x+10 | ... | x^3-3x+907573721136".
inline std::string render_table(const ModelTable& t) {
  std::string out = "k";
  for (unsigned n = 1; n <= t.n_max; ++n) out += " | n=" + std::to_string(n);
  if (t.precision > 0) out += " | Z_" + t.p.get_str() + " (" + t.p.get_str() + "^" + std::to_string(t.precision) + ")";
  out += "\n";
  for (const auto& row : t.rows) {
    out += "k=" + std::to_string(row.k);
    for (const auto& f : row.columns) out += " | " + f.to_string();
    if (row.padic) out += " | " + row.padic->to_string_balanced();
    out += "\n";
  }
  return out;
}

}  // namespace grstd

#endif  // GRSTD_TABLE_HPP
