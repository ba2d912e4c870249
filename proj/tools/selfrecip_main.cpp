// Command-line surface of the selfrecip library.
//
//   selfrecip eigenfun   -- sample a generalized eigenfunction E(t, a) or a
//                           chain member e(t, tau) onto a log grid (CSV)
//   selfrecip decompose  -- split a sampled function into its two
//                           eigenspace components plus chain densities
//   selfrecip verify     -- run a named verification suite, emit the JSON
//                           report
//
// Every run writes a JSON manifest listing the command, its configuration,
// every file it emitted, and a residual-summary map; the residual values in
// a manifest equal the ones in the corresponding report exactly (same
// doubles, same serialization).  All data outputs are deterministic:
// identical flags and inputs produce byte-identical CSV files and
// byte-identical JSON up to the wall_time_s field of verification reports.
//
// Exit codes: 0 success / all checks pass; 1 verification failure;
// 2 usage or parse error; 3 numerical contract violation.
//
// SELFRECIP_TOL (environment): positive multiplier applied to the default
// tolerances -- every verification check tolerance, and the synthesis
// contract tolerances (path_tol, edge_tol) used by decompose.

#include <cmath>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "selfrecip/eigenchain.hpp"
#include "selfrecip/io.hpp"
#include "selfrecip/verification.hpp"

namespace sr = selfrecip;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitContract = 3;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- flag parsing helpers ---------------------------------------------------

sr::Family parse_family(const std::string& s) {
  if (s == "cosine") return sr::Family::cosine;
  if (s == "sine") return sr::Family::sine;
  throw usage_error("--family must be 'cosine' or 'sine', got '" + s + "'");
}

sr::Sign parse_sign(const std::string& s) {
  if (s == "plus") return sr::Sign::plus;
  if (s == "minus") return sr::Sign::minus;
  throw usage_error("--sign must be 'plus' or 'minus', got '" + s + "'");
}

double parse_number(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw usage_error(std::string(what) + ": cannot parse '" + s + "' as a number");
  }
}

// --grid LO:HI:N
sr::RadialGrid parse_grid(const std::string& spec) {
  const std::size_t c1 = spec.find(':');
  const std::size_t c2 = c1 == std::string::npos ? std::string::npos : spec.find(':', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos || spec.find(':', c2 + 1) != std::string::npos)
    throw usage_error("--grid expects LO:HI:N, got '" + spec + "'");
  const double lo = parse_number(spec.substr(0, c1), "--grid LO");
  const double hi = parse_number(spec.substr(c1 + 1, c2 - c1 - 1), "--grid HI");
  const double nd = parse_number(spec.substr(c2 + 1), "--grid N");
  const int n = static_cast<int>(nd);
  if (static_cast<double>(n) != nd) throw usage_error("--grid N must be an integer");
  try {
    return sr::make_radial_grid(lo, hi, n);
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }
}

// --a RE or RE,IM
sr::complex parse_complex(const std::string& s) {
  const std::size_t comma = s.find(',');
  if (comma == std::string::npos) return sr::complex{parse_number(s, "--a"), 0.0};
  return sr::complex{parse_number(s.substr(0, comma), "--a (real part)"),
                     parse_number(s.substr(comma + 1), "--a (imaginary part)")};
}

double tolerance_scale_from_env() {
  const char* raw = std::getenv("SELFRECIP_TOL");
  if (raw == nullptr || *raw == '\0') return 1.0;
  const double v = parse_number(raw, "SELFRECIP_TOL");
  if (!(v > 0.0) || !std::isfinite(v))
    throw usage_error("SELFRECIP_TOL must be a positive finite number");
  return v;
}

// --- output helpers ---------------------------------------------------------

json grid_json(const sr::RadialGrid& g) {
  return json{{"t_lo", g.t_lo()}, {"t_hi", g.t_hi()}, {"count", g.count}};
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw sr::io_error("cannot open '" + path + "' for writing");
  out << j.dump(2) << '\n';
  if (!out) throw sr::io_error("failed writing '" + path + "'");
}

std::string manifest_path_for(const std::string& output) {
  const std::filesystem::path p(output);
  std::filesystem::path m = p;
  m.replace_extension();
  m += ".manifest.json";
  return m.string();
}

json make_manifest(const std::string& command, json config, std::vector<std::string> inputs,
                   std::vector<std::string> outputs, json residuals) {
  return json{{"command", command},
              {"config", std::move(config)},
              {"inputs", std::move(inputs)},
              {"outputs", std::move(outputs)},
              {"residuals", std::move(residuals)}};
}

// --- eigenfun ----------------------------------------------------------------

struct EigenfunOptions {
  std::string family;
  std::string sign;
  std::optional<std::string> a;
  std::optional<double> tau;
  std::string grid = "1e-6:1e6:2048";
  std::string output = "eigenfun.csv";
};

int run_eigenfun(const EigenfunOptions& opt) {
  const sr::Family family = parse_family(opt.family);
  const sr::Sign sign = parse_sign(opt.sign);
  if (opt.a.has_value() == opt.tau.has_value())
    throw usage_error("eigenfun needs exactly one of --a (strip point) or --tau (chain member)");
  const sr::RadialGrid grid = parse_grid(opt.grid);

  std::vector<sr::complex> values(static_cast<std::size_t>(grid.count));
  json config{{"family", opt.family}, {"sign", opt.sign}};
  if (opt.a) {
    sr::StripPoint a{parse_complex(*opt.a)};  // rejects points outside the strip
    for (int j = 0; j < grid.count; ++j)
      values[static_cast<std::size_t>(j)] = sr::evaluate_E(family, sign, a, grid.node(j));
    config["a"] = json{{"re", a.value().real()}, {"im", a.value().imag()}};
  } else {
    if (!(*opt.tau >= 0.0) || !std::isfinite(*opt.tau))
      throw usage_error("--tau must be a finite nonnegative number");
    // tau = 0 is the admissible boundary member, so bypass the stored-chain
    // factory (which requires tau > 0) and hand the evaluator the coordinate.
    const sr::ChainCoordinate coord{family, sign, *opt.tau};
    for (int j = 0; j < grid.count; ++j)
      values[static_cast<std::size_t>(j)] = sr::complex{sr::evaluate_e(coord, grid.node(j)), 0.0};
    config["tau"] = *opt.tau;
  }
  config["grid"] = grid_json(grid);

  sr::write_radial_csv(opt.output, sr::GridFunction{grid, std::move(values)});
  const std::string manifest_path = manifest_path_for(opt.output);
  write_json_file(manifest_path,
                  make_manifest("eigenfun", std::move(config), {},
                                {opt.output, manifest_path}, json::object()));
  std::cout << "wrote " << opt.output << " and " << manifest_path << '\n';
  return kExitPass;
}

// --- decompose ----------------------------------------------------------------

struct DecomposeOptions {
  std::string input;
  std::string family;
  std::string out_dir = ".";
  double tau_max = 30.0;
  int tau_count = 1601;
};

sr::GridFunction read_input_function(const std::string& path) {
  const std::string ext = std::filesystem::path(path).extension().string();
  if (ext == ".csv") return sr::read_radial_csv(path);
  if (ext == ".json") {
    std::ifstream in(path);
    if (!in) throw sr::io_error("cannot open '" + path + "' for reading");
    json j;
    try {
      j = json::parse(in);
    } catch (const json::parse_error& e) {
      throw sr::io_error("'" + path + "': " + e.what());
    }
    if (!j.is_object() || !j.contains("t") || !j.contains("re"))
      throw sr::io_error("'" + path + "': expected an object with arrays 't', 're' (and optional 'im')");
    try {
      const std::vector<double> t = j.at("t").get<std::vector<double>>();
      const std::vector<double> re = j.at("re").get<std::vector<double>>();
      std::vector<double> im(t.size(), 0.0);
      if (j.contains("im")) im = j.at("im").get<std::vector<double>>();
      if (re.size() != t.size() || im.size() != t.size())
        throw sr::io_error("'" + path + "': 't', 're', 'im' must have equal lengths");
      std::vector<sr::complex> values(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) values[i] = sr::complex{re[i], im[i]};
      return sr::grid_function_from_samples(t, std::move(values));
    } catch (const json::exception& e) {
      throw sr::io_error("'" + path + "': " + e.what());
    }
  }
  throw usage_error("--input must be a .csv or .json file, got '" + path + "'");
}

int run_decompose(const DecomposeOptions& opt, double tol_scale) {
  const sr::Family family = parse_family(opt.family);
  const sr::GridFunction x = read_input_function(opt.input);

  sr::ChainConfig config;
  config.tau_max = opt.tau_max;
  config.tau_count = opt.tau_count;
  config.path_tol *= tol_scale;
  config.edge_tol *= tol_scale;
  if (!(config.tau_max > 0.0) || !std::isfinite(config.tau_max))
    throw usage_error("--tau-max must be positive and finite");
  if (config.tau_count < 8) throw usage_error("--tau-count must be at least 8");

  const sr::ChainDecomposition dec = sr::decompose(x, family, config);

  // Residual summary.  The eigen checks reuse the transform with a loose
  // absolute-tail guard: eigenspace pieces of slowly decaying inputs fall
  // off like t^{-1/2}/polylog at the grid edge, which the strict default
  // guard would reject even though the transform itself is accurate.
  const double nx = sr::l2_norm(x);
  const double np = sr::l2_norm(dec.plus_part);
  const double nm = sr::l2_norm(dec.minus_part);
  json residuals = json::object();
  if (nx > 0.0) {
    sr::GridFunction sum = dec.plus_part;
    for (std::size_t j = 0; j < sum.values.size(); ++j)
      sum.values[j] += dec.minus_part.values[j] - x.values[j];
    residuals["completeness"] = sr::l2_norm(sum) / nx;
    residuals["norm_resolution"] = std::abs(nx * nx - np * np - nm * nm) / (nx * nx);
    residuals["orthogonality"] =
        std::abs(sr::inner_product(dec.plus_part, dec.minus_part)) / (nx * nx);
    sr::TransformConfig loose;
    loose.tol = 1e6;
    residuals["eigen_residual_plus"] =
        sr::eigen_residual(dec.plus_part, family, sr::Sign::plus, loose);
    residuals["eigen_residual_minus"] =
        sr::eigen_residual(dec.minus_part, family, sr::Sign::minus, loose);
    residuals["x_plus_rel_l2"] = np / nx;
    residuals["x_minus_rel_l2"] = nm / nx;
  }

  std::filesystem::create_directories(opt.out_dir);
  const auto out = [&](const char* name) {
    return (std::filesystem::path(opt.out_dir) / name).string();
  };
  const std::string xp = out("x_plus.csv"), xm = out("x_minus.csv");
  const std::string dp = out("density_plus.csv"), dm = out("density_minus.csv");
  const std::string mp = out("manifest.json");
  sr::write_radial_csv(xp, dec.plus_part);
  sr::write_radial_csv(xm, dec.minus_part);
  sr::write_tau_csv(dp, dec.density_plus);
  sr::write_tau_csv(dm, dec.density_minus);

  json config_json{{"family", opt.family},
                   {"tau_max", config.tau_max},
                   {"tau_count", config.tau_count},
                   {"mellin_count", config.mellin_count},
                   {"path_tol", config.path_tol},
                   {"edge_tol", config.edge_tol},
                   {"grid", grid_json(x.grid)}};
  write_json_file(mp, make_manifest("decompose", std::move(config_json), {opt.input},
                                    {xp, xm, dp, dm, mp}, residuals));
  std::cout << "wrote " << xp << ", " << xm << ", " << dp << ", " << dm << ", " << mp << '\n';
  return kExitPass;
}

// --- verify -------------------------------------------------------------------

struct VerifyOptions {
  std::string suite;
  std::string report = "verify_report.json";
};

int run_verify(const VerifyOptions& opt, double tol_scale) {
  sr::VerificationReport report;
  try {
    report = sr::run_verification_suite(opt.suite, tol_scale);
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }

  json checks = json::array();
  json residuals = json::object();
  for (const sr::VerificationCheck& c : report.checks) {
    checks.push_back(json{
        {"name", c.name}, {"residual", c.residual}, {"tol", c.tol}, {"pass", c.pass}});
    residuals[c.name] = c.residual;
  }
  const json report_json{{"suite", report.suite},
                         {"checks", std::move(checks)},
                         {"wall_time_s", report.wall_time_s}};

  write_json_file(opt.report, report_json);
  const std::string manifest_path = manifest_path_for(opt.report);
  write_json_file(manifest_path,
                  make_manifest("verify", json{{"suite", opt.suite}, {"tol_scale", tol_scale}},
                                {}, {opt.report, manifest_path}, std::move(residuals)));

  std::cout << report_json.dump(2) << '\n';
  return report.all_pass ? kExitPass : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eigenfunction machinery of the half-line cosine/sine transforms"};
  app.require_subcommand(1);

  EigenfunOptions ef;
  CLI::App* eigenfun = app.add_subcommand(
      "eigenfun", "sample a generalized eigenfunction E(t,a) or chain member e(t,tau) to CSV");
  eigenfun->add_option("--family", ef.family, "transform family: cosine | sine")->required();
  eigenfun->add_option("--sign", ef.sign, "eigenvalue sign: plus | minus")->required();
  std::string a_raw;
  eigenfun->add_option("--a", a_raw, "strip point RE or RE,IM (generalized eigenfunction)");
  double tau_raw = 0.0;
  CLI::Option* tau_opt = eigenfun->add_option("--tau", tau_raw, "chain coordinate tau >= 0");
  eigenfun->add_option("--grid", ef.grid, "log grid LO:HI:N")->capture_default_str();
  eigenfun->add_option("--output", ef.output, "CSV output path")->capture_default_str();

  DecomposeOptions dc;
  CLI::App* decompose = app.add_subcommand(
      "decompose", "split a sampled function into its two eigenspace components");
  decompose->add_option("--input", dc.input, "input samples (.csv with t,re,im or .json)")
      ->required();
  decompose->add_option("--family", dc.family, "transform family: cosine | sine")->required();
  decompose->add_option("--out-dir", dc.out_dir, "output directory")->capture_default_str();
  decompose->add_option("--tau-max", dc.tau_max, "chain density window [0, tau_max]")
      ->capture_default_str();
  decompose->add_option("--tau-count", dc.tau_count, "chain density sample count")
      ->capture_default_str();

  VerifyOptions vf;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify
      ->add_option("--suite", vf.suite,
                   "suite: gamma | lemma1 | transforms | mellin | chains | all")
      ->required();
  verify->add_option("--report", vf.report, "JSON report path")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    const double tol_scale = tolerance_scale_from_env();
    if (eigenfun->parsed()) {
      if (!a_raw.empty()) ef.a = a_raw;
      if (tau_opt->count() > 0) ef.tau = tau_raw;
      return run_eigenfun(ef);
    }
    if (decompose->parsed()) return run_decompose(dc, tol_scale);
    return run_verify(vf, tol_scale);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const sr::io_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const sr::numeric_contract_error& e) {
    std::cerr << "numerical contract violation: " << e.what() << '\n';
    return kExitContract;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitContract;
  }
}
