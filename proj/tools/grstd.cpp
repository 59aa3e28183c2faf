// grstd: standard models of Galois rings GR(p^n, m).
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "grstd/commands.hpp"

namespace {

struct Common {
  std::string format;
  std::string caps;
  std::uint64_t seed = grstd::kDefaultSeed;
  std::optional<std::string> cache_dir;
  bool no_cache = false;

  grstd::Caps parsed_caps() const { return caps.empty() ? grstd::Caps{} : grstd::parse_caps(caps); }
  grstd::CacheChoice cache() const { return {cache_dir, no_cache}; }
};

void add_common(CLI::App* cmd, Common& c, const std::string& default_format, bool with_cache) {
  c.format = default_format;
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "text", "table"}));
  cmd->add_option("--caps", c.caps, "Resource caps m:d:n (rank, auxiliary degree, precision)");
  cmd->add_option("--seed", c.seed, "Seed for randomized factoring and sampling");
  if (with_cache) {
    auto* dir = cmd->add_option("--cache", c.cache_dir, "Cache directory (default: $GRSTD_CACHE_DIR)");
    cmd->add_flag("--no-cache", c.no_cache, "Bypass the cache")->excludes(dir);
  }
}

grstd::Int parse_int(const std::string& s, const char* what) {
  grstd::Int out;
  if (s.empty() || out.set_str(s, 10) != 0) throw grstd::InvalidArgument(std::string("malformed ") + what + " \"" + s + "\"");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Standard models of Galois rings GR(p^n, m)"};
  app.require_subcommand(1);
  app.set_version_flag("--version", grstd::kVersion);

  std::string p_text;
  unsigned n = 1;
  std::uint64_t m = 1;

  Common model_opts;
  auto* model = app.add_subcommand("model", "Emit the standard model of GR(p^n, m)");
  model->add_option("-p", p_text, "Prime p")->required();
  model->add_option("-n", n, "Precision exponent n")->required();
  model->add_option("-m", m, "Rank m")->required();
  add_common(model, model_opts, "json", true);

  Common table_opts;
  std::uint64_t r = 0;
  unsigned k_max = 0, n_max = 3, precision = 10;
  auto* table = app.add_subcommand("table", "Defining polynomials of GR(p^n, r^k) for k <= kmax, n <= nmax");
  table->add_option("-p", p_text, "Prime p")->required();
  table->add_option("-r", r, "Prime r")->required();
  table->add_option("--kmax", k_max, "Largest k")->required();
  table->add_option("--nmax", n_max, "Largest precision exponent n")->capture_default_str();
  table->add_option("--precision", precision, "Precision N of the p-adic column")->capture_default_str();
  add_common(table, table_opts, "text", false);

  Common verify_opts;
  std::optional<std::string> verify_path;
  std::optional<std::string> vp;
  std::optional<unsigned> vn;
  std::optional<std::uint64_t> vm;
  auto* verify = app.add_subcommand("verify", "Check a serialized model or certificate, or a freshly built model");
  verify->add_option("file", verify_path, "Model JSON or lift certificate")->check(CLI::ExistingFile);
  auto* vpo = verify->add_option("-p", vp, "Prime p");
  auto* vno = verify->add_option("-n", vn, "Precision exponent n");
  auto* vmo = verify->add_option("-m", vm, "Rank m");
  vpo->needs(vno)->needs(vmo);
  add_common(verify, verify_opts, "text", true);

  Common lift_opts;
  std::string poly;
  unsigned lift_precision = 1;
  std::optional<std::string> root, certificate;
  auto* lift = app.add_subcommand("lift", "Hensel-lift the factorization mod p of a monic integer polynomial");
  lift->add_option("-p", p_text, "Prime p")->required();
  lift->add_option("--poly", poly, "Polynomial, e.g. x^3-3x+1")->required();
  lift->add_option("--precision", lift_precision, "Target precision N")->required();
  lift->add_option("--root", root, "Lift only this simple root mod p");
  lift->add_option("--certificate", certificate, "Write the lift certificate to this file");
  add_common(lift, lift_opts, "text", false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : grstd::kExitInvalidInput;
  }

  return grstd::run_guarded(
      [&]() -> int {
        if (model->parsed()) {
          grstd::ModelCommand cmd;
          cmd.request = {parse_int(p_text, "prime"), n, m, model_opts.parsed_caps(), model_opts.seed};
          cmd.format = grstd::parse_format(model_opts.format);
          cmd.cache = model_opts.cache();
          return grstd::cmd_model(cmd, std::cout, std::cerr);
        }
        if (table->parsed()) {
          grstd::TableCommand cmd;
          cmd.p = parse_int(p_text, "prime");
          cmd.r = r;
          cmd.k_max = k_max;
          cmd.n_max = n_max;
          cmd.precision = precision;
          cmd.format = grstd::parse_format(table_opts.format);
          cmd.caps = table_opts.parsed_caps();
          cmd.seed = table_opts.seed;
          return grstd::cmd_table(cmd, std::cout);
        }
        if (verify->parsed()) {
          grstd::VerifyCommand cmd;
          cmd.path = verify_path;
          if (vp) {
            if (verify_path) throw grstd::InvalidArgument("give either a file or -p, -n, -m");
            cmd.request = grstd::ModelRequest{parse_int(*vp, "prime"), *vn, *vm, verify_opts.parsed_caps(),
                                              verify_opts.seed};
          }
          cmd.format = grstd::parse_format(verify_opts.format);
          cmd.cache = verify_opts.cache();
          cmd.seed = verify_opts.seed;
          cmd.caps = verify_opts.parsed_caps();
          return grstd::cmd_verify(cmd, std::cout, std::cerr);
        }
        grstd::LiftCommand cmd;
        cmd.p = parse_int(p_text, "prime");
        cmd.precision = lift_precision;
        cmd.poly = poly;
        if (root) cmd.root = parse_int(*root, "root");
        cmd.format = grstd::parse_format(lift_opts.format);
        cmd.certificate_path = certificate;
        cmd.seed = lift_opts.seed;
        return grstd::cmd_lift(cmd, std::cout);
      },
      std::cerr);
}
