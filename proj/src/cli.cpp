#include "relexp/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "relexp/error.hpp"
#include "relexp/radint.hpp"
#include "relexp/verify.hpp"

namespace relexp::cli {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

namespace {

std::string format_short(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 3);
  return std::string(buf, res.ptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

// Alpha resolution: flag, then RELEXP_ALPHA, then the built-in default.
std::optional<double> resolve_alpha(const CLI::Option* flag, double flag_value, std::string& error) {
  if (flag->count() > 0) return flag_value;
  const char* env = std::getenv("RELEXP_ALPHA");
  if (!env || !*env) return kDefaultAlpha;
  double v = 0.0;
  const char* end = env + std::char_traits<char>::length(env);
  const auto res = std::from_chars(env, end, v);
  if (res.ec != std::errc() || res.ptr != end) {
    error = std::string("RELEXP_ALPHA is not a number: ") + env;
    return std::nullopt;
  }
  return v;
}

const std::vector<std::string>& method_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v{"all"};
    for (Method m : kAllMethods) v.emplace_back(to_string(m));
    return v;
  }();
  return names;
}

std::vector<Method> select_methods(const std::vector<std::string>& names, bool& all) {
  all = names.empty() || std::find(names.begin(), names.end(), "all") != names.end();
  if (all) return {std::begin(kAllMethods), std::end(kAllMethods)};
  std::vector<Method> out;
  for (Method m : kAllMethods)  // enum order, duplicates collapsed
    if (std::find(names.begin(), names.end(), to_string(m)) != names.end()) out.push_back(m);
  return out;
}

// Errors that mean "this method does not apply here" rather than bad input.
bool is_skip(const Error& e) {
  return e.kind() == ErrorKind::NotApplicable || e.kind() == ErrorKind::UnsupportedPower ||
         e.kind() == ErrorKind::PoleInClosedForm;
}

std::string skip_reason(const Error& e, Method m) {
  switch (e.kind()) {
    case ErrorKind::PoleInClosedForm:
    case ErrorKind::InvalidOrbital: return e.what();
    case ErrorKind::NotApplicable: return "n_r != 0";
    case ErrorKind::UnsupportedPower:
      return m == Method::ClosedForm ? "no closed form for this k" : "|k| above supported cap";
    case ErrorKind::ConvergenceViolation: return "k+2*gamma <= -1";
    default: return std::string(to_string(e.kind())) + ": " + e.what();
  }
}

// ---- compute ------------------------------------------------------------------

struct ComputeArgs {
  double Z = 0.0;
  int n = 0;
  int kappa = 0;
  int k = 0;
  std::vector<std::string> methods{"all"};
  double alpha = kDefaultAlpha;
  std::string format = "text";
  double tol = 1e-9;
};

int cmd_compute(const ComputeArgs& a, std::ostream& out, std::ostream& err) {
  const MomentRequest req{{a.Z, a.n, a.kappa, a.alpha}, a.k};
  DiracParams p{};
  try {
    p = derive(req.orbital);
    expval_oracle(req);  // surfaces convergence and power-cap violations up front
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  bool all = false;
  const std::vector<Method> methods = select_methods(a.methods, all);
  struct Record {
    Method method;
    std::optional<double> value;
    std::string reason;
  };
  std::vector<Record> records;
  std::vector<double> values;
  for (Method m : methods) {
    try {
      const double v = expval(req, m).value;
      records.push_back({m, v, {}});
      values.push_back(v);
    } catch (const Error& e) {
      if (!all || !is_skip(e)) {
        err << "error: method " << to_string(m) << ": " << e.what() << '\n';
        return kExitUsage;
      }
      records.push_back({m, std::nullopt, skip_reason(e, m)});
    }
  }
  const double dev = max_relative_deviation(values);
  const bool ok = dev <= a.tol;

  if (a.format == "json") {
    ordered_json j;
    j["params"] = {{"Z", a.Z}, {"n", a.n}, {"kappa", a.kappa}, {"k", a.k}, {"alpha", a.alpha},
                   {"n_r", p.n_r}, {"gamma", p.gamma}, {"N", p.N_app}};
    j["results"] = ordered_json::array();
    j["skipped"] = ordered_json::array();
    for (const auto& r : records) {
      if (r.value)
        j["results"].push_back({{"method", to_string(r.method)}, {"value", *r.value}});
      else
        j["skipped"].push_back({{"method", to_string(r.method)}, {"reason", r.reason}});
    }
    j["max_rel_dev"] = dev;
    j["tol"] = a.tol;
    out << j.dump(2) << '\n';
  } else if (a.format == "csv") {
    out << "Z,n,kappa,k,alpha,method,value,skip_reason,max_rel_dev\n";
    for (const auto& r : records) {
      out << format_double(a.Z) << ',' << a.n << ',' << a.kappa << ',' << a.k << ','
          << format_double(a.alpha) << ',' << to_string(r.method) << ','
          << (r.value ? format_double(*r.value) : "") << ',' << csv_field(r.reason) << ','
          << format_double(dev) << '\n';
    }
  } else {
    out << "Z=" << format_double(a.Z) << " n=" << a.n << " kappa=" << a.kappa << " k=" << a.k
        << " alpha=" << format_double(a.alpha) << '\n'
        << "n_r=" << p.n_r << " gamma=" << format_double(p.gamma) << " N=" << format_double(p.N_app)
        << '\n';
    for (const auto& r : records) {
      std::string name(to_string(r.method));
      name.resize(12, ' ');
      out << "  " << name << (r.value ? format_double(*r.value) : "skipped (" + r.reason + ")") << '\n';
    }
    out << "max_rel_dev " << format_double(dev) << (ok ? " <= " : " > ") << "tol "
        << format_double(a.tol) << '\n';
  }
  return ok ? kExitOk : kExitTolerance;
}

// ---- table --------------------------------------------------------------------

struct TableArgs {
  std::vector<double> Z;
  int n_max = 2;
  std::vector<int> k;
  std::vector<std::string> methods{"all"};
  double alpha = kDefaultAlpha;
  std::string format = "csv";
  std::string out_path;
  int threads = 1;
};

struct Row {
  double Z;
  int n, kappa, k;
  std::optional<DiracParams> params;
  Method method;
  std::optional<double> value, rel_dev;
  std::string reason;
};

std::vector<Row> evaluate_tuple(double Z, int n, int kappa, int k, double alpha,
                                const std::vector<Method>& methods) {
  const MomentRequest req{{Z, n, kappa, alpha}, k};
  std::optional<DiracParams> params;
  std::string orbital_error;
  try {
    params = derive(req.orbital);
  } catch (const Error& e) {
    orbital_error = e.what();
  }
  std::optional<double> oracle;
  if (params) {
    try {
      oracle = expval_oracle(req).value;
    } catch (const Error&) {
    }
  }
  std::vector<Row> rows;
  for (Method m : methods) {
    Row r{Z, n, kappa, k, params, m, std::nullopt, std::nullopt, {}};
    if (!params) {
      r.reason = orbital_error;
    } else {
      try {
        r.value = expval(req, m).value;
        if (oracle) r.rel_dev = std::fabs(*r.value - *oracle) / std::fabs(*oracle);
      } catch (const Error& e) {
        r.reason = skip_reason(e, m);
      }
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

void write_table(const std::vector<Row>& rows, const std::string& format, std::ostream& os) {
  auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string(); };
  if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json j;
      j["Z"] = r.Z;
      j["n"] = r.n;
      j["kappa"] = r.kappa;
      j["n_r"] = r.params ? ordered_json(r.params->n_r) : ordered_json(nullptr);
      j["gamma"] = r.params ? ordered_json(r.params->gamma) : ordered_json(nullptr);
      j["N"] = r.params ? ordered_json(r.params->N_app) : ordered_json(nullptr);
      j["k"] = r.k;
      j["method"] = to_string(r.method);
      j["value"] = r.value ? ordered_json(*r.value) : ordered_json(nullptr);
      j["rel_dev_vs_oracle"] = r.rel_dev ? ordered_json(*r.rel_dev) : ordered_json(nullptr);
      j["skip_reason"] = r.reason;
      arr.push_back(std::move(j));
    }
    os << arr.dump(2) << '\n';
    return;
  }
  os << "Z,n,kappa,n_r,gamma,N,k,method,value,rel_dev_vs_oracle,skip_reason\n";
  for (const auto& r : rows) {
    os << format_double(r.Z) << ',' << r.n << ',' << r.kappa << ','
       << (r.params ? std::to_string(r.params->n_r) : "") << ','
       << (r.params ? format_double(r.params->gamma) : "") << ','
       << (r.params ? format_double(r.params->N_app) : "") << ',' << r.k << ','
       << to_string(r.method) << ',' << opt(r.value) << ',' << opt(r.rel_dev) << ','
       << csv_field(r.reason) << '\n';
  }
}

int cmd_table(TableArgs a, std::ostream& out, std::ostream& err) {
  std::sort(a.Z.begin(), a.Z.end());
  a.Z.erase(std::unique(a.Z.begin(), a.Z.end()), a.Z.end());
  std::sort(a.k.begin(), a.k.end());
  a.k.erase(std::unique(a.k.begin(), a.k.end()), a.k.end());
  bool all = false;
  const std::vector<Method> methods = select_methods(a.methods, all);

  struct Tuple {
    double Z;
    int n, kappa, k;
  };
  std::vector<Tuple> tuples;
  for (double Z : a.Z)
    for (int n = 1; n <= a.n_max; ++n)
      for (int kappa = -n; kappa < n; ++kappa)
        if (kappa != 0)
          for (int k : a.k) tuples.push_back({Z, n, kappa, k});

  // Each worker fills its own slots; output order never depends on scheduling.
  std::vector<std::vector<Row>> slots(tuples.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < tuples.size(); i = next++) {
      const Tuple& t = tuples[i];
      slots[i] = evaluate_tuple(t.Z, t.n, t.kappa, t.k, a.alpha, methods);
    }
  };
  const int nthreads = std::max(1, std::min<int>(a.threads, static_cast<int>(tuples.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < nthreads; ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  std::vector<Row> rows;
  for (auto& s : slots)
    for (auto& r : s) rows.push_back(std::move(r));

  if (a.out_path.empty()) {
    write_table(rows, a.format, out);
    return out ? kExitOk : kExitUsage;
  }
  std::ofstream file(a.out_path, std::ios::binary);
  if (!file) {
    err << "error: cannot open " << a.out_path << " for writing\n";
    return kExitUsage;
  }
  write_table(rows, a.format, file);
  file.close();
  if (!file) {
    err << "error: write to " << a.out_path << " failed\n";
    return kExitUsage;
  }
  return kExitOk;
}

// ---- verify -------------------------------------------------------------------

int cmd_verify(const VerifyOptions& opts, std::ostream& out) {
  int failed = 0;
  for (const SuiteResult& s : run_verification(opts)) {
    if (!s.passed()) ++failed;
    out << (s.passed() ? "PASS " : "FAIL ") << s.name << '\n';
    for (const CheckResult& c : s.checks) {
      out << "  [" << (c.passed() ? "ok" : "FAIL") << "] " << c.name << ": worst=" << format_short(c.worst)
          << " tol=" << format_short(c.tol) << " cases=" << c.cases;
      if (!c.where.empty()) out << " (" << c.where << ')';
      out << '\n';
    }
  }
  if (failed == 0)
    out << "verify: all suites passed\n";
  else
    out << "verify: " << failed << " suite(s) failed\n";
  return failed == 0 ? kExitOk : kExitTolerance;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Radial expectation values <r^k> of hydrogenic Dirac orbitals", "relexp"};
  app.require_subcommand(1);

  ComputeArgs ca;
  double compute_alpha = kDefaultAlpha;
  auto* compute = app.add_subcommand("compute", "evaluate <r^k> for one orbital with one or more methods");
  compute->add_option("--Z", ca.Z, "nuclear charge")->required();
  compute->add_option("--n", ca.n, "principal quantum number")->required();
  compute->add_option("--kappa", ca.kappa, "relativistic angular quantum number")->required();
  compute->add_option("--k", ca.k, "power of r")->required();
  compute->add_option("--method", ca.methods, "method name or 'all' (repeatable)")
      ->check(CLI::IsMember(method_names()))
      ->capture_default_str();
  auto* compute_alpha_opt =
      compute->add_option("--alpha", compute_alpha, "fine-structure constant (overrides RELEXP_ALPHA)");
  compute->add_option("--format", ca.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  compute->add_option("--tol", ca.tol, "maximum relative deviation between methods")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  TableArgs ta;
  double table_alpha = kDefaultAlpha;
  auto* table = app.add_subcommand("table", "evaluate a grid of orbitals and powers");
  table->add_option("--Z", ta.Z, "nuclear charges")->required()->expected(1, -1);
  table->add_option("--n-max", ta.n_max, "largest principal quantum number")
      ->check(CLI::Range(1, 50))
      ->capture_default_str();
  table->add_option("--k", ta.k, "powers of r")->required()->expected(1, -1);
  table->add_option("--method", ta.methods, "method names or 'all'")
      ->check(CLI::IsMember(method_names()))
      ->capture_default_str();
  auto* table_alpha_opt =
      table->add_option("--alpha", table_alpha, "fine-structure constant (overrides RELEXP_ALPHA)");
  table->add_option("--format", ta.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  table->add_option("--out", ta.out_path, "output file (default: stdout)");
  table->add_option("--threads", ta.threads, "worker threads")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "run the invariant suites");
  verify->add_option("--max-n", vo.max_n, "largest principal quantum number in the grids")
      ->check(CLI::Range(1, 10))
      ->capture_default_str();
  verify->add_option("--tol", vo.route_tol, "route-agreement tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--seed", vo.seed, "seed for the random samples")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << "\nrun with --help for usage\n";
    return kExitUsage;
  }

  std::string alpha_error;
  if (compute->parsed()) {
    const auto alpha = resolve_alpha(compute_alpha_opt, compute_alpha, alpha_error);
    if (!alpha) {
      err << "error: " << alpha_error << '\n';
      return kExitUsage;
    }
    ca.alpha = *alpha;
    return cmd_compute(ca, out, err);
  }
  if (table->parsed()) {
    const auto alpha = resolve_alpha(table_alpha_opt, table_alpha, alpha_error);
    if (!alpha) {
      err << "error: " << alpha_error << '\n';
      return kExitUsage;
    }
    ta.alpha = *alpha;
    return cmd_table(std::move(ta), out, err);
  }
  return cmd_verify(vo, out);
}

}  // namespace relexp::cli
