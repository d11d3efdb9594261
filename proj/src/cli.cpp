#include "cftv/cli.hpp"

#include "cftv/closed_forms.hpp"
#include "cftv/ensembles.hpp"
#include "cftv/identities.hpp"
#include "cftv/report.hpp"
#include "cftv/symmetric.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

namespace cftv {

namespace {

constexpr int kMaxTableWeight = 8;
constexpr int kMaxTableM = 4;
constexpr std::int64_t kMaxSampleCount = 10'000'000;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Writes `text` to `path`, or to `out` when the path is empty.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ConfigError("cannot open output file '" + path + "'");
  file << text;
}

std::string csv_quote(const std::string& s) {
  return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::vector<std::string> names;
  int N = 0, n = 0, m = 0;
  std::string lambda, mu, variant, preset = "default", out;
  std::int64_t samples = 0;
  std::uint64_t seed = kDefaultSeed;
  double z = kDefaultZ;
  int cutoff = 30;
  int shards = 0;
  std::vector<std::string> scalars;
  bool lambda_set = false, mu_set = false;
};

CheckConfig build_config(const VerifyArgs& a) {
  CheckConfig c;
  c.variant = a.variant;
  c.N = a.N;
  c.n = a.n;
  c.m = a.m;
  try {
    if (a.lambda_set) c.lambda = Partition::parse(a.lambda);
    if (a.mu_set) c.mu = Partition::parse(a.mu);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  c.preset = a.preset;
  c.samples = a.samples;
  c.seed = a.seed;
  c.z_threshold = a.z;
  c.series_cutoff = a.cutoff;
  c.shards = a.shards;
  for (const auto& kv : a.scalars) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw ConfigError("--scalar expects key=value, got '" + kv + "'");
    try {
      std::size_t used = 0;
      const std::string value = kv.substr(eq + 1);
      c.scalars[kv.substr(0, eq)] = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw ConfigError("--scalar value is not a number in '" + kv + "'");
    }
  }
  if (c.N < 0 || c.n < 0 || c.m < 0) throw ConfigError("dimensions must be positive");
  if (c.samples < 0 || (c.samples > 0 && c.samples < 100)) throw ConfigError("--samples must be at least 100");
  if (!(c.z_threshold > 0)) throw ConfigError("--z must be positive");
  if (c.preset != "default" && c.preset != "zero" && c.preset != "identity")
    throw ConfigError("unknown preset '" + c.preset + "'");
  return c;
}

nlohmann::json config_json(const CheckConfig& c, const std::vector<std::string>& names) {
  nlohmann::json j;
  j["checks"] = names;
  j["variant"] = c.variant;
  j["N"] = c.N;
  j["n"] = c.n;
  j["m"] = c.m;
  if (c.lambda) j["lambda"] = c.lambda->to_string();
  if (c.mu) j["mu"] = c.mu->to_string();
  j["preset"] = c.preset;
  j["samples"] = c.samples > 0 ? c.samples : default_samples();
  j["seed"] = c.seed;
  j["second_seed"] = second_seed(c.seed);
  j["z_threshold"] = c.z_threshold;
  j["series_cutoff"] = c.series_cutoff;
  nlohmann::json scalars = nlohmann::json::object();
  for (const auto& [k, v] : c.scalars) scalars[k] = v;
  j["scalars"] = scalars;
  return j;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> names = args.names;
  if (names.empty())
    for (const auto& info : check_registry()) names.push_back(info.name);
  for (const auto& name : names)
    if (!find_check(name)) throw ConfigError("unknown check '" + name + "'");
  const CheckConfig config = build_config(args);

  Report report;
  report.timestamp = utc_timestamp();
  report.config = config_json(config, names);
  try {
    report.results = run_suite(names, config);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  } catch (const std::domain_error& e) {
    throw ConfigError(e.what());
  }
  emit(args.out, to_json(report).dump(2) + "\n", out);
  for (const auto& r : report.results)
    err << (r.pass() ? "PASS " : "FAIL ") << r.name << "  z=" << fmt(r.comparison.z) << "\n";
  return report.pass() ? kExitPass : kExitCheckFailed;
}

// ---- sample ---------------------------------------------------------------

struct SampleArgs {
  std::string ensemble;
  int N = 0, n = 0, m = 0, a = -1, b = -1;
  std::int64_t count = 10;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
};

void matrix_header(std::ostringstream& os, int rows, int cols) {
  bool first = true;
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j) {
      os << (first ? "" : ",") << "re_" << i << "_" << j << ",im_" << i << "_" << j;
      first = false;
    }
  os << "\n";
}

void matrix_row(std::ostringstream& os, const CMatrix& a) {
  bool first = true;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      os << (first ? "" : ",") << fmt(a(i, j).real()) << "," << fmt(a(i, j).imag());
      first = false;
    }
  os << "\n";
}

void radial_header(std::ostringstream& os, int m) {
  for (int i = 1; i <= m; ++i) os << (i > 1 ? "," : "") << "x_" << i;
  os << "\n";
}

void radial_row(std::ostringstream& os, const RadialSample& x) {
  for (Eigen::Index i = 0; i < x.size(); ++i) os << (i ? "," : "") << fmt(x[i]);
  os << "\n";
}

int cmd_sample(const SampleArgs& a, std::ostream& out) {
  if (a.count < 1 || a.count > kMaxSampleCount) throw ConfigError("--count must lie in [1, 10^7]");
  SeededRng rng(a.seed, 0);
  std::ostringstream os;
  os.precision(17);
  const std::string& e = a.ensemble;
  try {
    if (e == "haar" || e == "su") {
      if (a.N < 1) throw ConfigError("--N must be positive");
      matrix_header(os, a.N, a.N);
      for (std::int64_t i = 0; i < a.count; ++i)
        matrix_row(os, e == "haar" ? sample_haar_unitary(a.N, rng) : sample_special_unitary(a.N, rng));
    } else if (e == "truncation" || e == "fermionic") {
      const int n = a.n > 0 ? a.n : a.N;
      const int m = a.m > 0 ? a.m : 1;
      if (e == "truncation" && (a.N < 1 || n > a.N)) throw ConfigError("truncation needs n <= N");
      if (m > n) throw ConfigError("need m <= n");
      radial_header(os, m);
      for (std::int64_t i = 0; i < a.count; ++i)
        radial_row(os, e == "truncation" ? sample_truncation_radial(a.N, n, m, rng)
                                         : sample_fermionic_radial(a.N, n, m, rng));
    } else if (e == "jacobi-radial") {
      if (a.a < 0 || a.b < 0 || a.m < 1) throw ConfigError("jacobi-radial needs --a >= 0, --b >= 0, --m >= 1");
      radial_header(os, a.m);
      for (std::int64_t i = 0; i < a.count; ++i) radial_row(os, sample_jacobi_radial(a.a, a.b, a.m, rng));
    } else if (e == "boundary") {
      if (a.m < 1 || a.N < 1 || 2 * a.m <= a.N || a.m >= a.N) throw ConfigError("boundary needs N < 2m < 2N");
      matrix_header(os, a.m, a.m);
      for (std::int64_t i = 0; i < a.count; ++i) matrix_row(os, sample_boundary_truncation(a.N, a.m, rng));
    } else {
      throw ConfigError("unknown ensemble '" + e + "'");
    }
  } catch (const std::invalid_argument& ex) {
    throw ConfigError(ex.what());
  }
  emit(a.out, os.str(), out);
  return kExitPass;
}

// ---- table ----------------------------------------------------------------

struct TableArgs {
  std::string kind;
  std::string lambda;
  bool lambda_set = false;
  int max_weight = 4;
  int n = 0, m = 0, N = 0;
  std::string p = "1", q = "1", a = "1";
  std::string route = "product";
  std::string format = "csv";
  std::string out;
};

Rational parse_param(const std::string& name, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw ConfigError("--" + name + " is not a rational number: '" + text + "'");
  }
}

int cmd_table(const TableArgs& a, std::ostream& out) {
  static const std::vector<std::string> kinds{"weyl", "selberg-b", "selberg-f", "hua-b", "hua-f", "exp-coeff"};
  if (std::find(kinds.begin(), kinds.end(), a.kind) == kinds.end()) throw ConfigError("unknown table '" + a.kind + "'");
  if (a.max_weight < 0 || a.max_weight > kMaxTableWeight) throw ConfigError("--max-weight must lie in [0, 8]");

  const bool needs_m = a.kind != "weyl" && a.kind != "exp-coeff";
  const int m = a.m;
  if (needs_m && (m < 1 || m > kMaxTableM)) throw ConfigError("--m must lie in [1, 4]");
  if (a.kind == "weyl" && (a.n < 0 || a.n > 64)) throw ConfigError("--n must lie in [0, 64]");

  std::vector<Partition> lambdas;
  if (a.lambda_set) {
    try {
      lambdas.push_back(Partition::parse(a.lambda));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    if (lambdas.back().weight() > kMaxTableWeight) throw ConfigError("|lambda| must be <= 8");
  } else {
    lambdas = enumerate_partitions(a.max_weight, needs_m ? m : kMaxTableWeight);
  }
  for (const auto& l : lambdas)
    if (needs_m && l.length() > m) throw ConfigError("length(lambda) exceeds m");

  Derivation route = Derivation::product_form;
  if (a.route == "gram") route = Derivation::gram_determinant;
  else if (a.route == "reduced") route = Derivation::reduced_gram;
  else if (a.route != "product") throw ConfigError("--route must be product, gram or reduced");

  std::vector<std::string> columns{"lambda"};
  if (a.kind == "weyl") columns.push_back("n");
  if (needs_m) columns.push_back("m");
  if (a.kind == "selberg-b" || a.kind == "selberg-f") {
    columns.push_back("p");
    columns.push_back("q");
  }
  if (a.kind == "hua-b" || a.kind == "hua-f") columns.push_back("a");
  columns.push_back("value");

  const Rational p = parse_param("p", a.p), q = parse_param("q", a.q), aa = parse_param("a", a.a);
  std::vector<std::vector<std::string>> rows;
  for (const auto& l : lambdas) {
    std::vector<std::string> row{l.to_string()};
    std::string value;
    try {
      if (a.kind == "weyl") {
        row.push_back(std::to_string(a.n));
        value = to_string(weyl_dimension(l, a.n));
      } else if (a.kind == "exp-coeff") {
        value = to_string(exp_coeff(l));
      } else if (a.kind == "selberg-b" || a.kind == "selberg-f") {
        row.push_back(std::to_string(m));
        row.push_back(to_string(p));
        row.push_back(to_string(q));
        const double pd = to_double(p), qd = to_double(q);
        const auto v = a.kind == "selberg-b" ? schur_selberg_bosonic(l, pd, qd, m, route)
                                             : schur_selberg_fermionic(l, pd, qd, m, route);
        value = v.exact ? to_string(*v.exact) : fmt(v.value);
      } else {
        row.push_back(std::to_string(m));
        row.push_back(to_string(aa));
        value = to_string(a.kind == "hua-b" ? hua_coeff_bosonic(l, aa, m) : hua_coeff_fermionic(l, aa, m));
      }
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    } catch (const std::domain_error& e) {
      throw ConfigError(e.what());
    }
    row.push_back(value);
    rows.push_back(std::move(row));
  }

  std::ostringstream os;
  if (a.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& row : rows) {
      nlohmann::json entry;
      for (std::size_t c = 0; c < columns.size(); ++c) entry[columns[c]] = row[c];
      j.push_back(entry);
    }
    os << j.dump(2) << "\n";
  } else if (a.format == "csv") {
    for (std::size_t c = 0; c < columns.size(); ++c) os << (c ? "," : "") << columns[c];
    os << "\n";
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_quote(row[c]);
      os << "\n";
    }
  } else {
    throw ConfigError("--format must be csv or json");
  }
  emit(a.out, os.str(), out);
  return kExitPass;
}

int cmd_list(std::ostream& out) {
  for (const auto& info : check_registry()) out << info.name << "\t" << info.tag << "\t" << info.regime << "\n";
  return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monte Carlo and exact verification of unitary-group integral identities", "cftv"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "List registered checks with their regimes");

  VerifyArgs v;
  auto* verify = app.add_subcommand("verify", "Run checks at two seeds and write a JSON report");
  verify->add_option("checks", v.names, "Check names (default: all)");
  verify->add_option("--N", v.N, "Group dimension N");
  verify->add_option("--n", v.n, "Truncation rows n");
  verify->add_option("--m", v.m, "Truncation columns m");
  auto* lambda_opt = verify->add_option("--lambda", v.lambda, "Partition, e.g. 2,1");
  auto* mu_opt = verify->add_option("--mu", v.mu, "Second partition for orthogonality checks");
  verify->add_option("--variant", v.variant, "Check variant");
  verify->add_option("--preset", v.preset, "Matrix preset: default, zero or identity");
  verify->add_option("--samples", v.samples, "Monte Carlo samples per estimate");
  verify->add_option("--seed", v.seed, "Base seed");
  verify->add_option("--z", v.z, "z-score threshold");
  verify->add_option("--cutoff", v.cutoff, "Series cutoff K");
  verify->add_option("--shards", v.shards, "Worker threads (0: hardware)");
  verify->add_option("--scalar", v.scalars, "Named scalar parameter key=value (repeatable)")->allow_extra_args(false);
  verify->add_option("--out", v.out, "Report path (default: stdout)");

  SampleArgs s;
  auto* sample = app.add_subcommand("sample", "Write ensemble samples as CSV");
  sample->add_option("ensemble", s.ensemble, "haar | su | truncation | jacobi-radial | fermionic | boundary")->required();
  sample->add_option("--N", s.N, "Group dimension N");
  sample->add_option("--n", s.n, "Truncation rows n");
  sample->add_option("--m", s.m, "Truncation columns m");
  sample->add_option("--a", s.a, "Jacobi exponent a");
  sample->add_option("--b", s.b, "Jacobi exponent b");
  sample->add_option("--count", s.count, "Number of samples");
  sample->add_option("--seed", s.seed, "Seed");
  sample->add_option("--out", s.out, "CSV path (default: stdout)");

  TableArgs t;
  auto* table = app.add_subcommand("table", "Tabulate exact closed-form values");
  table->add_option("kind", t.kind, "weyl | selberg-b | selberg-f | hua-b | hua-f | exp-coeff")->required();
  auto* table_lambda = table->add_option("--lambda", t.lambda, "Partition (default: all up to --max-weight)");
  table->add_option("--max-weight", t.max_weight, "Largest |lambda| in the grid");
  table->add_option("--n", t.n, "Dimension for weyl");
  table->add_option("--m", t.m, "Number of variables m");
  table->add_option("--p", t.p, "Selberg exponent p");
  table->add_option("--q", t.q, "Selberg exponent q");
  table->add_option("--a", t.a, "Hua exponent a");
  table->add_option("--route", t.route, "product | gram | reduced");
  table->add_option("--format", t.format, "csv | json");
  table->add_option("--out", t.out, "Output path (default: stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  }

  try {
    if (list->parsed()) return cmd_list(out);
    if (verify->parsed()) {
      v.lambda_set = lambda_opt->count() > 0;
      v.mu_set = mu_opt->count() > 0;
      return cmd_verify(v, out, err);
    }
    if (sample->parsed()) return cmd_sample(s, out);
    if (table->parsed()) {
      t.lambda_set = table_lambda->count() > 0;
      return cmd_table(t, out);
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return kExitConfigError;
}

}  // namespace cftv
