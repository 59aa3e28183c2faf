#ifndef GRSTD_COMMANDS_HPP
#define GRSTD_COMMANDS_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "grstd/error.hpp"
#include "grstd/galois_ring.hpp"
#include "grstd/hensel.hpp"
#include "grstd/serialize.hpp"
#include "grstd/table.hpp"

namespace grstd {

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 2,
  kExitVerifyFailed = 3,
  kExitResourceCap = 4,
  kExitInternal = 5,
};

enum class Format { json, text, table };

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "text") return Format::text;
  if (s == "table") return Format::table;
  throw InvalidArgument("unknown format \"" + s + "\" (expected json, text or table)");
}

/// "m:d:n" or "m:d:n:f" (f bounds the exact minimal polynomial degree).
inline Caps parse_caps(const std::string& s) {
  std::vector<std::uint64_t> v;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, ':')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos || part.size() > 18) {
      throw InvalidArgument("malformed caps \"" + s + "\" (expected m:d:n)");
    }
    v.push_back(std::stoull(part));
  }
  if (v.size() != 3 && v.size() != 4) throw InvalidArgument("malformed caps \"" + s + "\" (expected m:d:n)");
  if (v[2] > 1000000) throw InvalidArgument("precision cap too large");
  Caps caps;
  caps.max_rank = v[0];
  caps.max_aux_degree = v[1];
  caps.max_precision = static_cast<unsigned>(v[2]);
  if (v.size() == 4) caps.max_minpoly_degree = v[3];
  return caps;
}

struct CacheChoice {
  std::optional<std::string> dir;
  bool disabled = false;

  std::optional<ModelCache> resolve() const {
    if (disabled) return std::nullopt;
    if (dir) return ModelCache(*dir);
    return ModelCache::from_env();
  }
};

struct ModelCommand {
  ModelRequest request;
  Format format = Format::json;
  CacheChoice cache;
};

/// Serialized model for a request, through the cache when one is configured.
inline std::string model_bytes(const ModelRequest& req, const CacheChoice& choice, std::ostream& log) {
  const auto cache = choice.resolve();
  if (cache) {
    if (auto hit = cache->load(req)) return *hit;
  }
  BuildOptions opts;
  opts.caps = req.caps;
  opts.seed = req.seed;
  const std::string bytes = serialize_model(standard_model(req.p, req.n, req.m, opts));
  if (cache) {
    try {
      cache->store(req, bytes);
    } catch (const std::exception& e) {
      log << "warning: cache not written: " << e.what() << "\n";
    }
  }
  return bytes;
}

/// e_i e_j for i <= j, one product per line.
inline std::string render_products(const ExplicitModel& model) {
  std::string out;
  const std::size_t m = model.m;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      out += "e[" + model.basis_labels[i] + "]*e[" + model.basis_labels[j] + "] =";
      bool any = false;
      for (std::size_t k = 0; k < m; ++k) {
        const Int& a = model.a(i, j, k);
        if (a == 0) continue;
        out += any ? " + " : " ";
        out += (a == 1 ? std::string() : a.get_str() + "*") + "e[" + model.basis_labels[k] + "]";
        any = true;
      }
      if (!any) out += " 0";
      out += "\n";
    }
  }
  return out;
}

inline int cmd_model(const ModelCommand& cmd, std::ostream& out, std::ostream& log) {
  const std::string bytes = model_bytes(cmd.request, cmd.cache, log);
  if (cmd.format == Format::json) {
    out << bytes;
    return kExitOk;
  }
  const ExplicitModel model = parse_model(bytes);
  if (cmd.format == Format::text) {
    if (model.defining_poly) {
      out << model.defining_poly->to_string() << "\n";
    } else {
      out << "no defining polynomial; structure constants:\n" << render_products(model);
    }
    return kExitOk;
  }
  out << "GR(" << model.p << "^" << model.n << ", " << model.m << ")";
  if (model.defining_poly) out << " = Z/" << model.modulus() << "[x]/(" << model.defining_poly->to_string() << ")";
  out << "\n" << render_products(model);
  return kExitOk;
}

struct TableCommand {
  Int p;
  std::uint64_t r = 0;
  unsigned k_max = 0;
  unsigned n_max = 3;
  unsigned precision = 10;
  Format format = Format::text;
  Caps caps;
  std::uint64_t seed = kDefaultSeed;
};

inline int cmd_table(const TableCommand& cmd, std::ostream& out) {
  BuildOptions opts;
  opts.caps = cmd.caps;
  opts.seed = cmd.seed;
  const ModelTable t = model_table(cmd.p, cmd.r, cmd.k_max, cmd.n_max, cmd.precision, opts);
  if (cmd.format != Format::json) {
    out << render_table(t);
    return kExitOk;
  }
  Json j;
  j["p"] = int_to_json(t.p);
  j["r"] = t.r;
  j["precision"] = t.precision;
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json e;
    e["k"] = row.k;
    Json cols = Json::array();
    for (const auto& f : row.columns) cols.push_back(f.to_string());
    e["columns"] = std::move(cols);
    e["padic"] = row.padic ? Json(row.padic->to_string_balanced()) : Json(nullptr);
    rows.push_back(std::move(e));
  }
  j["rows"] = std::move(rows);
  out << j.dump() << "\n";
  return kExitOk;
}

struct VerifyCommand {
  std::optional<std::string> path;
  std::optional<ModelRequest> request;
  Format format = Format::text;
  CacheChoice cache;
  std::uint64_t seed = kDefaultSeed;
  Caps caps;
};

/// verify_model plus the route cross-check for every component r^k with
/// r != p and agreement of the residue field with the model at n = 1.
inline VerifyReport full_report(const ExplicitModel& model, const Caps& caps, std::uint64_t seed) {
  VerifyOptions vo;
  vo.seed = seed;
  VerifyReport report = verify_model(model, vo);
  if (!report.ok()) return report;

  BuildOptions opts;
  opts.caps = caps;
  opts.seed = seed;
  const auto parts = factor_u64(model.m);
  for (auto [r, K] : parts) {
    if (Int(static_cast<unsigned long>(r)) == model.p) continue;
    // Disagreement between the routes raises InternalError.
    const auto pp = prime_power_polynomial(model.p, model.n, r, K, opts);
    bool ok = true;
    std::string det = pp.cross_check.ran ? "orbit product agrees (" + pp.cross_check.detail + ")" : pp.cross_check.detail;
    if (parts.size() == 1 && model.defining_poly && *model.defining_poly != pp.poly) {
      ok = false;
      det = "defining polynomial differs from the constructed " + pp.poly.to_string();
    }
    report.checks.push_back({"route_agreement[" + std::to_string(r) + "^" + std::to_string(K) + "]", ok, det});
  }
  const ExplicitModel residue = reduce_precision(model, 1);
  const ExplicitModel fresh = standard_model(model.p, 1, model.m, opts);
  bool ok = residue.constants == fresh.constants;
  std::string det = ok ? "matches the model at n = 1" : "structure constants differ from the model at n = 1";
  if (ok && residue.defining_poly && fresh.defining_poly && *residue.defining_poly != *fresh.defining_poly) {
    ok = false;
    det = "defining polynomial differs from the model at n = 1";
  }
  if (ok && residue.defining_poly && !is_irreducible_modp(*residue.defining_poly)) {
    ok = false;
    det = "defining polynomial is reducible mod p";
  }
  report.checks.push_back({"residue_coherence", ok, det});
  return report;
}

inline void print_report(const VerifyReport& report, Format format, std::ostream& out) {
  if (format == Format::json) {
    Json j;
    j["ok"] = report.ok();
    Json checks = Json::array();
    for (const auto& c : report.checks) {
      Json e;
      e["name"] = c.name;
      e["passed"] = c.passed;
      e["detail"] = c.detail;
      checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    out << j.dump() << "\n";
    return;
  }
  for (const auto& c : report.checks) out << c.name << ": " << (c.passed ? "PASS" : "FAIL") << " " << c.detail << "\n";
  out << "result: " << (report.ok() ? "PASS" : "FAIL") << "\n";
}

inline int cmd_verify(const VerifyCommand& cmd, std::ostream& out, std::ostream& log) {
  std::string bytes;
  if (cmd.path) {
    bytes = read_file(*cmd.path);
  } else if (cmd.request) {
    bytes = model_bytes(*cmd.request, cmd.cache, log);
  } else {
    throw InvalidArgument("verify needs a file or -p, -n, -m");
  }
  const Json j = parse_json(bytes);
  if (j.is_object() && j.contains("kind") && j.at("kind") == "lift_certificate") {
    const std::string why = check_certificate(certificate_from_json(j));
    VerifyReport report;
    report.checks.push_back({"lift_certificate", why.empty(), why.empty() ? "product and Bezout relations hold" : why});
    print_report(report, cmd.format, out);
    return report.ok() ? kExitOk : kExitVerifyFailed;
  }
  const VerifyReport report = full_report(model_from_json(j), cmd.caps, cmd.seed);
  print_report(report, cmd.format, out);
  return report.ok() ? kExitOk : kExitVerifyFailed;
}

struct LiftCommand {
  Int p;
  unsigned precision = 1;
  std::string poly;
  std::optional<Int> root;
  Format format = Format::text;
  std::optional<std::string> certificate_path;
  std::uint64_t seed = kDefaultSeed;
};

/// p-adic factorization (or a single root) of an integer polynomial.
inline int cmd_lift(const LiftCommand& cmd, std::ostream& out) {
  const ZPoly f = parse_zpoly(cmd.poly);
  if (cmd.root) {
    const Int a = hensel_lift_root(f, *cmd.root, cmd.p, cmd.precision);
    out << a << "\n";
    return kExitOk;
  }
  if (!is_prime(cmd.p)) throw InvalidArgument("p = " + cmd.p.get_str() + " is not prime");
  if (cmd.precision < 1) throw InvalidArgument("precision must be >= 1");
  const ModulusRef fp = make_modulus(cmd.p, 1);
  const ZMPoly fbar(fp, f);
  if (fbar.degree() != f.degree() || !fbar.is_monic()) throw InvalidArgument("polynomial must be monic");
  std::vector<ZMPoly> factors;
  for (const auto& fac : factor_modp(fbar, cmd.seed).factors) {
    for (unsigned i = 0; i < fac.multiplicity; ++i) factors.push_back(fac.poly);
  }
  const LiftResult res = hensel_lift_factors(f, factors, cmd.p, cmd.precision);
  const Json cert = certificate_to_json(res.certificate);
  if (cmd.certificate_path) write_file_atomic(*cmd.certificate_path, cert.dump() + "\n");
  if (cmd.format == Format::json) {
    out << cert.dump() << "\n";
  } else {
    for (const auto& g : res.factors) out << g.to_string_balanced() << "\n";
  }
  return kExitOk;
}

/// Maps library exceptions to exit codes.
template <class F>
int run_guarded(F&& body, std::ostream& err) {
  try {
    return body();
  } catch (const ResourceCapExceeded& e) {
    err << "error: resource cap exceeded: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace grstd

#endif  // GRSTD_COMMANDS_HPP
