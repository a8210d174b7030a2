#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include "lenstorsion/errors.hpp"
#include "lenstorsion/lens_space.hpp"
#include "lenstorsion/spectral.hpp"
#include "lenstorsion/torsion.hpp"
#include "lenstorsion/verification.hpp"

namespace lenstorsion::cli {

namespace {

enum class Format { json, csv, text };

struct RunConfig {
  int n = 1;
  std::int64_t mu = 1;
  std::vector<std::int64_t> nu;
  std::int64_t u = 0;
  std::vector<std::int64_t> us;
  double s = 0.0;
  int pmax = 64;
  int qmax = 64;
  std::string format_name;  // empty: subcommand default
  Format format = Format::text;
  std::string output;
  std::uint64_t seed = 0;
  int grid_mu = 8;
  int grid_n = 2;
  int samples = 100;
};

std::string num(double x) { return fmt::format("{:.17g}", x); }

std::string int_list(const std::vector<std::int64_t>& xs) { return fmt::format("{}", fmt::join(xs, ",")); }

LensSpace make_lens(const RunConfig& cfg) {
  std::vector<std::int64_t> nu = cfg.nu;
  if (nu.empty()) nu.assign(static_cast<std::size_t>(std::max(cfg.n, 0)) + 1, 1);
  return LensSpace(cfg.n, cfg.mu, std::move(nu));
}

std::vector<std::int64_t> bundle_characters(const RunConfig& cfg) {
  return cfg.us.empty() ? std::vector<std::int64_t>{cfg.u} : cfg.us;
}

struct Sink {
  explicit Sink(const RunConfig& cfg) {
    if (!cfg.output.empty()) {
      file.open(cfg.output);
      if (!file) throw DomainError("cannot open output file " + cfg.output);
    }
  }
  std::ostream& stream(std::ostream& fallback) { return file.is_open() ? file : fallback; }
  std::ofstream file;
};

int cmd_kappa(const RunConfig& cfg, std::ostream& os) {
  const LensSpace lens = make_lens(cfg);
  const std::int64_t u = reduce_mod(cfg.u, lens.mu());
  const ZetaValue closed = kappa_closed(lens, u, cfg.s);

  std::optional<KappaDirect> direct;
  if (cfg.s >= lens.n() + 2) direct = kappa_direct(lens, u, cfg.s, cfg.pmax, cfg.qmax);

  const double closed_value = closed.value.real();
  const double discrepancy = direct ? std::abs(direct->value - closed_value) : 0.0;
  const bool agrees = !direct || discrepancy <= direct->tail + 1e-8;

  switch (cfg.format) {
    case Format::json: {
      os << "{\"n\": " << lens.n() << ", \"mu\": " << lens.mu() << ", \"nu\": ["
         << int_list({lens.nu().begin(), lens.nu().end()}) << "], \"u\": " << u
         << ", \"s\": " << num(cfg.s) << ", \"kappa_closed\": " << num(closed_value)
         << ", \"kappa_closed_err\": " << num(closed.err);
      if (direct) {
        os << ", \"kappa_direct\": " << num(direct->value) << ", \"tail\": " << num(direct->tail)
           << ", \"discrepancy\": " << num(discrepancy)
           << ", \"converged\": " << (direct->converged ? "true" : "false");
      }
      os << "}\n";
      break;
    }
    case Format::csv: {
      os << "n,mu,u,s,kappa_closed,kappa_closed_err,kappa_direct,tail,discrepancy\n";
      os << lens.n() << ',' << lens.mu() << ',' << u << ',' << num(cfg.s) << ','
         << num(closed_value) << ',' << num(closed.err) << ','
         << (direct ? num(direct->value) : "") << ',' << (direct ? num(direct->tail) : "") << ','
         << (direct ? num(discrepancy) : "") << '\n';
      break;
    }
    case Format::text: {
      os << "kappa closed form : " << num(closed_value) << "  (err " << num(closed.err) << ")\n";
      if (direct) {
        os << "kappa direct sum  : " << num(direct->value) << "  (pmax " << cfg.pmax << ", qmax "
           << cfg.qmax << ")\n"
           << "tail estimate     : " << num(direct->tail) << '\n'
           << "discrepancy       : " << num(discrepancy) << '\n';
      } else {
        os << "direct sum skipped: needs s >= n + 2\n";
      }
      break;
    }
  }
  if (direct && !direct->converged) return kConvergenceWarning;
  return agrees ? kSuccess : kVerificationFailed;
}

void write_report_json(std::ostream& os, const LensSpace& lens, const std::vector<std::int64_t>& us,
                       const TorsionReport& r) {
  os << "{\"n\": " << lens.n() << ", \"mu\": " << lens.mu() << ", \"nu\": ["
     << int_list({lens.nu().begin(), lens.nu().end()}) << "], \"us\": [" << int_list(us)
     << "], \"kappa0\": " << num(r.kappa0) << ", \"kappa_prime0\": " << num(r.kappa_prime0)
     << ", \"T_contact\": " << num(r.contact) << ", \"T_ray_singer\": " << num(r.ray_singer)
     << ", \"dim_H0\": " << r.dim_h0 << ", \"ratio_check\": " << num(r.ratio_check) << "}";
}

constexpr const char* kReportHeader = "kappa0,kappa_prime0,T_contact,T_ray_singer,dim_H0,ratio_check";

void write_report_csv_fields(std::ostream& os, const TorsionReport& r) {
  os << num(r.kappa0) << ',' << num(r.kappa_prime0) << ',' << num(r.contact) << ','
     << num(r.ray_singer) << ',' << r.dim_h0 << ',' << num(r.ratio_check);
}

int cmd_torsion(const RunConfig& cfg, std::ostream& os) {
  const LensSpace lens = make_lens(cfg);
  const FlatBundle bundle(bundle_characters(cfg), lens.mu());
  const std::vector<std::int64_t> us(bundle.characters().begin(), bundle.characters().end());
  const TorsionReport r = torsion_report(lens, bundle);
  switch (cfg.format) {
    case Format::json:
      write_report_json(os, lens, us, r);
      os << '\n';
      break;
    case Format::csv:
      os << "n,mu,nu,us," << kReportHeader << '\n';
      os << lens.n() << ',' << lens.mu() << ",\"" << int_list({lens.nu().begin(), lens.nu().end()})
         << "\",\"" << int_list(us) << "\",";
      write_report_csv_fields(os, r);
      os << '\n';
      break;
    case Format::text:
      os << "lens space        : n = " << lens.n() << ", mu = " << lens.mu() << ", nu = ("
         << int_list({lens.nu().begin(), lens.nu().end()}) << ")\n"
         << "bundle characters : (" << int_list(us) << ")\n"
         << "kappa(0)          : " << num(r.kappa0) << '\n'
         << "kappa'(0)         : " << num(r.kappa_prime0) << '\n'
         << "contact torsion   : " << num(r.contact) << '\n'
         << "Ray-Singer torsion: " << num(r.ray_singer) << '\n'
         << "dim H^0           : " << r.dim_h0 << '\n'
         << "ratio check       : " << num(r.ratio_check) << '\n';
      break;
  }
  return std::abs(r.ratio_check - 1.0) <= 1e-9 ? kSuccess : kVerificationFailed;
}

int cmd_table(const RunConfig& cfg, std::ostream& os) {
  const LensSpace lens = make_lens(cfg);
  bool ok = true;
  if (cfg.format == Format::json) os << "[";
  if (cfg.format == Format::csv) os << "u," << kReportHeader << '\n';
  for (std::int64_t u = 0; u < lens.mu(); ++u) {
    const TorsionReport r = torsion_report(lens, FlatBundle({u}, lens.mu()));
    ok = ok && std::abs(r.ratio_check - 1.0) <= 1e-9;
    switch (cfg.format) {
      case Format::json:
        if (u > 0) os << ", ";
        write_report_json(os, lens, {u}, r);
        break;
      case Format::csv:
        os << u << ',';
        write_report_csv_fields(os, r);
        os << '\n';
        break;
      case Format::text:
        os << fmt::format("u = {:>3}  kappa'(0) = {:>24}  T_contact = {:>24}  T_RS = {:>24}  ratio = {}\n",
                          u, num(r.kappa_prime0), num(r.contact), num(r.ray_singer),
                          num(r.ratio_check));
        break;
    }
  }
  if (cfg.format == Format::json) os << "]\n";
  return ok ? kSuccess : kVerificationFailed;
}

int cmd_verify(const RunConfig& cfg, std::ostream& os) {
  LedgerConfig ledger;
  ledger.seed = cfg.seed;
  ledger.max_mu = cfg.grid_mu;
  ledger.max_n = cfg.grid_n;
  ledger.samples = cfg.samples;
  if (ledger.max_mu < 1 || ledger.max_n < 1 || ledger.samples < 1) {
    throw DomainError("verify: grid sizes and sample count must be positive");
  }
  const auto results = run_identity_ledger(ledger);
  bool all = true;
  if (cfg.format == Format::json) os << "[";
  if (cfg.format == Format::csv) os << "check,passed,max_residual,tolerance,cases\n";
  for (std::size_t k = 0; k < results.size(); ++k) {
    const CheckResult& r = results[k];
    all = all && r.passed;
    switch (cfg.format) {
      case Format::json:
        os << (k ? ", " : "") << "{\"check\": \"" << r.name << "\", \"passed\": "
           << (r.passed ? "true" : "false") << ", \"max_residual\": " << num(r.max_residual)
           << ", \"tolerance\": " << num(r.tolerance) << ", \"cases\": " << r.cases << "}";
        break;
      case Format::csv:
        os << r.name << ',' << (r.passed ? 1 : 0) << ',' << num(r.max_residual) << ','
           << num(r.tolerance) << ',' << r.cases << '\n';
        break;
      case Format::text:
        os << fmt::format("{} {:<30} max residual {:>12.3e}  tolerance {:>8.1e}  cases {}\n",
                          r.passed ? "PASS" : "FAIL", r.name, r.max_residual, r.tolerance, r.cases);
        break;
    }
  }
  if (cfg.format == Format::json) os << "]\n";
  if (cfg.format == Format::text) os << (all ? "all identities hold\n" : "some identities FAILED\n");
  return all ? kSuccess : kVerificationFailed;
}

void add_lens_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--n", cfg.n, "Complex dimension parameter: K = S^{2n+1} / Gamma")->capture_default_str();
  sub->add_option("--mu", cfg.mu, "Order of the cyclic group Gamma")->capture_default_str();
  sub->add_option("--nu", cfg.nu, "Rotation weights nu_1..nu_{n+1}, comma separated (default all 1)")
      ->delimiter(',');
}

void add_format_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format_name, "Output format: json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--output,-o", cfg.output, "Write output to this file instead of stdout");
}

Format resolve_format(const std::string& name, Format fallback) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "text") return Format::text;
  return fallback;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Contact and Ray-Singer analytic torsion of lens spaces"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* kappa = app.add_subcommand("kappa", "Contact torsion function kappa(s): closed form and direct spectral sum");
  add_lens_options(kappa, cfg);
  kappa->add_option("--u", cfg.u, "Character u of the flat line bundle E_u")->capture_default_str();
  kappa->add_option("--s", cfg.s, "Real argument s")->required();
  kappa->add_option("--pmax", cfg.pmax, "Truncation in p for the direct sum")->capture_default_str();
  kappa->add_option("--qmax", cfg.qmax, "Truncation in q for the direct sum")->capture_default_str();

  auto* torsion = app.add_subcommand("torsion", "Contact and Ray-Singer torsion of a flat bundle");
  auto* table = app.add_subcommand("table", "Torsion report for every character u = 0..mu-1");
  for (auto* sub : {torsion, table}) {
    add_lens_options(sub, cfg);
  }
  torsion->add_option("--u", cfg.u, "Character of a rank-one bundle")->capture_default_str();
  torsion->add_option("--us", cfg.us, "Characters u_1..u_r of a diagonal flat bundle, comma separated")
      ->delimiter(',');

  auto* verify = app.add_subcommand("verify", "Run the identity ledger over a seeded grid");
  verify->add_option("--seed", cfg.seed, "Seed for the SplitMix64 generator")->capture_default_str();
  verify->add_option("--grid-mu", cfg.grid_mu, "Largest mu in the lens space grid")->capture_default_str();
  verify->add_option("--grid-n", cfg.grid_n, "Largest n in the lens space grid")->capture_default_str();
  verify->add_option("--samples", cfg.samples, "Random points per randomized identity")->capture_default_str();

  for (auto* sub : {kappa, torsion, table, verify}) add_format_options(sub, cfg);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }

  cfg.format = resolve_format(cfg.format_name, table->parsed() ? Format::csv : Format::text);

  try {
    Sink sink(cfg);
    std::ostream& os = sink.stream(out);
    if (kappa->parsed()) return cmd_kappa(cfg, os);
    if (torsion->parsed()) return cmd_torsion(cfg, os);
    if (table->parsed()) return cmd_table(cfg, os);
    return cmd_verify(cfg, os);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    err << "verification failure: " << e.what() << '\n';
    return kVerificationFailed;
  }
}

}  // namespace lenstorsion::cli
