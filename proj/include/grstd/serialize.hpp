#ifndef GRSTD_SERIALIZE_HPP
#define GRSTD_SERIALIZE_HPP

#include <openssl/evp.h>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "json.hpp"

#include "grstd/error.hpp"
#include "grstd/galois_ring.hpp"
#include "grstd/hensel.hpp"
#include "grstd/model.hpp"

namespace grstd {

using Json = nlohmann::ordered_json;

inline constexpr const char* kCacheDirEnv = "GRSTD_CACHE_DIR";

// ---------------------------------------------------------------------------
// Integers: JSON numbers inside the int64 range, decimal strings outside.
// ---------------------------------------------------------------------------

inline Json int_to_json(const Int& a) {
  if (mpz_fits_slong_p(a.get_mpz_t())) return Json(static_cast<std::int64_t>(a.get_si()));
  return Json(a.get_str());
}

inline Int int_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Int(std::to_string(j.get<std::uint64_t>()));
    return Int(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    Int out;
    if (s.empty() || out.set_str(s, 10) != 0) throw InvalidArgument("malformed integer \"" + s + "\"");
    return out;
  }
  throw InvalidArgument("expected an integer, got " + j.dump());
}

inline Json ints_to_json(const std::vector<Int>& v) {
  Json out = Json::array();
  for (const auto& a : v) out.push_back(int_to_json(a));
  return out;
}

inline std::vector<Int> ints_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("expected an array of integers");
  std::vector<Int> out;
  for (const auto& e : j) out.push_back(int_from_json(e));
  return out;
}

namespace detail {

inline const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw InvalidArgument(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

inline std::uint64_t u64_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_unsigned()) throw InvalidArgument(std::string("field \"") + name + "\" must be a nonnegative integer");
  return v.get<std::uint64_t>();
}

inline Json poly_to_json(const ZMPoly& f) { return ints_to_json(f.coeffs()); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Models.
// ---------------------------------------------------------------------------

inline Json model_to_json(const ExplicitModel& model) {
  const std::size_t m = model.m;
  Json out;
  out["p"] = int_to_json(model.p);
  out["n"] = model.n;
  out["m"] = model.m;
  out["basis"] = model.basis_labels;
  out["defining_poly"] = model.defining_poly ? detail::poly_to_json(*model.defining_poly) : Json(nullptr);
  out["generator"] = model.generator.empty() ? Json(nullptr) : ints_to_json(model.generator);
  Json sc = Json::array();
  for (std::size_t i = 0; i < m; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m; ++j) {
      Json cell = Json::array();
      for (std::size_t k = 0; k < m; ++k) cell.push_back(int_to_json(model.a(i, j, k)));
      row.push_back(std::move(cell));
    }
    sc.push_back(std::move(row));
  }
  out["structure_constants"] = std::move(sc);

  Json prov;
  prov["route"] = model.provenance.route;
  Json comps = Json::array();
  for (const auto& c : model.provenance.components) {
    Json e;
    e["r"] = c.r;
    e["k"] = c.k;
    e["l"] = c.l;
    e["descriptor"] = ints_to_json(c.descriptor);
    e["aux_modulus"] = c.aux_modulus ? detail::poly_to_json(*c.aux_modulus) : Json(nullptr);
    e["omega"] = ints_to_json(c.omega);
    comps.push_back(std::move(e));
  }
  prov["r_components"] = std::move(comps);
  prov["seed"] = model.provenance.seed;
  prov["version"] = model.provenance.version;
  prov["notes"] = model.provenance.notes;
  out["provenance"] = std::move(prov);
  return out;
}

/// Canonical serialized form: compact JSON followed by a newline.
inline std::string serialize_model(const ExplicitModel& model) { return model_to_json(model).dump() + "\n"; }

inline ExplicitModel model_from_json(const Json& j) {
  using detail::field;
  ExplicitModel out;
  out.p = int_from_json(field(j, "p"));
  if (!is_prime(out.p)) throw InvalidArgument("p = " + out.p.get_str() + " is not prime");
  const std::uint64_t n = detail::u64_field(j, "n");
  if (n < 1 || n > std::numeric_limits<unsigned>::max()) throw InvalidArgument("n out of range");
  out.n = static_cast<unsigned>(n);
  out.m = detail::u64_field(j, "m");
  if (out.m < 1) throw InvalidArgument("m must be at least 1");
  const std::size_t m = out.m;
  const Json& basis = field(j, "basis");
  if (!basis.is_array() || basis.size() != m) throw InvalidArgument("basis must list m labels");
  for (const auto& b : basis) {
    if (!b.is_string()) throw InvalidArgument("basis labels must be strings");
    out.basis_labels.push_back(b.get<std::string>());
  }
  const ModulusRef base = make_modulus(out.p, out.n);
  const Json& dp = field(j, "defining_poly");
  if (!dp.is_null()) out.defining_poly = ZMPoly(base, ints_from_json(dp));
  if (j.contains("generator") && !j.at("generator").is_null()) out.generator = ints_from_json(j.at("generator"));

  const Json& sc = field(j, "structure_constants");
  if (!sc.is_array() || sc.size() != m) throw InvalidArgument("structure_constants must be an m x m x m array");
  out.constants.resize(m * m * m);
  for (std::size_t i = 0; i < m; ++i) {
    if (!sc[i].is_array() || sc[i].size() != m) throw InvalidArgument("structure_constants must be an m x m x m array");
    for (std::size_t jj = 0; jj < m; ++jj) {
      const auto& cell = sc[i][jj];
      if (!cell.is_array() || cell.size() != m) {
        throw InvalidArgument("structure_constants must be an m x m x m array");
      }
      for (std::size_t k = 0; k < m; ++k) out.a(i, jj, k) = int_from_json(cell[k]);
    }
  }

  const Json& prov = field(j, "provenance");
  out.provenance.route = field(prov, "route").get<std::string>();
  for (const auto& e : field(prov, "r_components")) {
    ComponentProvenance c;
    c.r = detail::u64_field(e, "r");
    if (e.contains("k")) c.k = static_cast<unsigned>(detail::u64_field(e, "k"));
    c.l = static_cast<unsigned>(detail::u64_field(e, "l"));
    c.descriptor = ints_from_json(field(e, "descriptor"));
    const Json& aux = field(e, "aux_modulus");
    if (!aux.is_null()) c.aux_modulus = ZMPoly(make_modulus(out.p, 1), ints_from_json(aux));
    c.omega = ints_from_json(field(e, "omega"));
    c.route = out.provenance.route;
    out.provenance.components.push_back(std::move(c));
  }
  out.provenance.seed = detail::u64_field(prov, "seed");
  out.provenance.version = field(prov, "version").get<std::string>();
  if (prov.contains("notes")) {
    for (const auto& note : prov.at("notes")) out.provenance.notes.push_back(note.get<std::string>());
  }
  return out;
}

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
}

inline ExplicitModel parse_model(const std::string& text) { return model_from_json(parse_json(text)); }

// ---------------------------------------------------------------------------
// Lift certificates.
// ---------------------------------------------------------------------------

inline Json certificate_to_json(const LiftCertificate& cert) {
  auto polys = [](const std::vector<ZMPoly>& v) {
    Json out = Json::array();
    for (const auto& f : v) out.push_back(detail::poly_to_json(f));
    return out;
  };
  Json out;
  out["kind"] = "lift_certificate";
  out["p"] = int_to_json(cert.p);
  out["source_precision"] = cert.source_precision;
  out["target_precision"] = cert.target_precision;
  out["input"] = detail::poly_to_json(cert.input);
  out["factors_modp"] = polys(cert.factors_modp);
  out["lifted"] = polys(cert.lifted);
  Json splits = Json::array();
  for (const auto& s : cert.splits) {
    Json e;
    e["f"] = detail::poly_to_json(s.f);
    e["g0"] = detail::poly_to_json(s.g0);
    e["h0"] = detail::poly_to_json(s.h0);
    Json steps = Json::array();
    for (const auto& st : s.steps) {
      Json step;
      step["precision"] = st.precision;
      step["g"] = detail::poly_to_json(st.g);
      step["h"] = detail::poly_to_json(st.h);
      step["s"] = detail::poly_to_json(st.s);
      step["t"] = detail::poly_to_json(st.t);
      steps.push_back(std::move(step));
    }
    e["steps"] = std::move(steps);
    splits.push_back(std::move(e));
  }
  out["splits"] = std::move(splits);
  return out;
}

inline LiftCertificate certificate_from_json(const Json& j) {
  using detail::field;
  if (field(j, "kind") != "lift_certificate") throw InvalidArgument("not a lift certificate");
  const Int p = int_from_json(field(j, "p"));
  if (!is_prime(p)) throw InvalidArgument("p = " + p.get_str() + " is not prime");
  const auto N = static_cast<unsigned>(detail::u64_field(j, "target_precision"));
  if (N < 1) throw InvalidArgument("target precision must be at least 1");
  const ModulusRef top = make_modulus(p, N);
  const ModulusRef low = make_modulus(p, 1);
  auto polys = [&](const Json& a, const ModulusRef& md) {
    std::vector<ZMPoly> out;
    for (const auto& f : a) out.emplace_back(md, ints_from_json(f));
    return out;
  };
  std::vector<SplitRecord> splits;
  for (const auto& e : field(j, "splits")) {
    SplitRecord s{ZMPoly(top, ints_from_json(field(e, "f"))), ZMPoly(low, ints_from_json(field(e, "g0"))),
                  ZMPoly(low, ints_from_json(field(e, "h0"))), {}};
    for (const auto& st : field(e, "steps")) {
      const auto prec = static_cast<unsigned>(detail::u64_field(st, "precision"));
      const ModulusRef md = make_modulus(p, prec);
      s.steps.push_back({prec, ZMPoly(md, ints_from_json(field(st, "g"))), ZMPoly(md, ints_from_json(field(st, "h"))),
                         ZMPoly(md, ints_from_json(field(st, "s"))), ZMPoly(md, ints_from_json(field(st, "t")))});
    }
    splits.push_back(std::move(s));
  }
  return LiftCertificate{p,
                         static_cast<unsigned>(detail::u64_field(j, "source_precision")),
                         N,
                         ZMPoly(top, ints_from_json(field(j, "input"))),
                         polys(field(j, "factors_modp"), low),
                         polys(field(j, "lifted"), top),
                         std::move(splits)};
}

// ---------------------------------------------------------------------------
// Hashing and the model cache.
// ---------------------------------------------------------------------------

inline std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    detail::internal_failure("SHA-256 digest failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 15]);
  }
  return out;
}

/// Everything that determines the serialized model.
struct ModelRequest {
  Int p;
  unsigned n = 1;
  std::uint64_t m = 1;
  Caps caps;
  std::uint64_t seed = kDefaultSeed;

  std::string canonical() const {
    Json j;
    j["p"] = p.get_str();
    j["n"] = n;
    j["m"] = m;
    j["caps"] = {caps.max_rank, caps.max_aux_degree, caps.max_precision, caps.max_minpoly_degree};
    j["seed"] = seed;
    j["version"] = kVersion;
    return j.dump();
  }
  std::string key() const { return sha256_hex(canonical()); }
};

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Writes via a temporary file in the same directory and a rename, so that
/// readers never see a partial file.
inline void write_file_atomic(const std::filesystem::path& path, const std::string& data) {
  std::random_device rd;
  const auto tmp = path.parent_path() /
                   (path.filename().string() + ".tmp." + std::to_string(::getpid()) + "." + std::to_string(rd()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidArgument("cannot write " + tmp.string());
    out << data;
    out.flush();
    if (!out) throw InvalidArgument("short write to " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw InvalidArgument("cannot rename into " + path.string() + ": " + ec.message());
  }
}

/// Content-addressed store of serialized models. Each entry is
/// <key>.json plus <key>.sha256 holding the digest of the JSON bytes.
class ModelCache {
 public:
  explicit ModelCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  /// The cache named by the environment, if any.
  static std::optional<ModelCache> from_env() {
    const char* d = std::getenv(kCacheDirEnv);
    if (d == nullptr || *d == '\0') return std::nullopt;
    return ModelCache(d);
  }

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path entry_path(const ModelRequest& req) const { return dir_ / (req.key() + ".json"); }
  std::filesystem::path digest_path(const ModelRequest& req) const { return dir_ / (req.key() + ".sha256"); }

  /// The cached bytes when present and matching their recorded digest.
  std::optional<std::string> load(const ModelRequest& req) const {
    std::error_code ec;
    if (!std::filesystem::exists(entry_path(req), ec) || !std::filesystem::exists(digest_path(req), ec)) {
      return std::nullopt;
    }
    std::string data, digest;
    try {
      data = read_file(entry_path(req));
      digest = read_file(digest_path(req));
    } catch (const InvalidArgument&) {
      return std::nullopt;
    }
    while (!digest.empty() && (digest.back() == '\n' || digest.back() == ' ')) digest.pop_back();
    if (sha256_hex(data) != digest) return std::nullopt;
    return data;
  }

  void store(const ModelRequest& req, const std::string& data) const {
    std::filesystem::create_directories(dir_);
    write_file_atomic(entry_path(req), data);
    write_file_atomic(digest_path(req), sha256_hex(data) + "\n");
  }

 private:
  std::filesystem::path dir_;
};

}  // namespace grstd

#endif  // GRSTD_SERIALIZE_HPP
