#include "fekete/cli.hpp"

#include "fekete/convergence.hpp"
#include "fekete/energy.hpp"
#include "fekete/errors.hpp"
#include "fekete/jacobi.hpp"
#include "fekete/kernels.hpp"
#include "fekete/minimize.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <memory>
#include <sstream>

namespace fekete::cli {

namespace {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Output tables

struct Cell {
  enum class Type { empty, text, integer, real } type = Type::empty;
  std::string text;    // printed form for text and real cells
  double number = 0;   // JSON value of a real cell in standard precision
  long long integer = 0;
  bool extended = false;
};

Cell text_cell(std::string s) {
  Cell c;
  c.type = Cell::Type::text;
  c.text = std::move(s);
  return c;
}

Cell int_cell(long long v) {
  Cell c;
  c.type = Cell::Type::integer;
  c.integer = v;
  c.text = std::to_string(v);
  return c;
}

template <class Real>
Cell real_cell(const Real& v) {
  Cell c;
  c.type = Cell::Type::real;
  c.text = format_real(v);
  c.number = static_cast<double>(v);
  c.extended = !std::is_same_v<Real, double>;
  return c;
}

Cell bool_cell(bool v) { return text_cell(v ? "true" : "false"); }

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

void write_csv(const Table& t, std::ostream& out) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    out << (i ? "," : "") << csv_field(t.columns[i]);
  }
  out << "\r\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << csv_field(row[i].text);
    }
    out << "\r\n";
  }
}

Json cell_json(const Cell& c) {
  switch (c.type) {
    case Cell::Type::empty:
      return nullptr;
    case Cell::Type::text:
      if (c.text == "true") return true;
      if (c.text == "false") return false;
      return c.text;
    case Cell::Type::integer:
      return c.integer;
    case Cell::Type::real:
      if (c.extended || !std::isfinite(c.number)) return c.text;
      return c.number;
  }
  return nullptr;
}

void write_json(const Table& t, std::ostream& out) {
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json obj = Json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = cell_json(row[i]);
    rows.push_back(std::move(obj));
  }
  out << rows.dump(2) << "\n";
}

void write_table(const Table& t, Format format, std::ostream& out) {
  if (format == Format::csv) {
    write_csv(t, out);
  } else {
    write_json(t, out);
  }
}

// ---------------------------------------------------------------------------
// Commands

bool is_fekete_kind(const std::string& kind) { return kind == "fekete"; }

template <class Real>
Problem<Real> make_problem(const RunConfig& cfg, ExpansionKind kind) {
  Problem<Real> problem;
  problem.kind = kind;
  problem.p = Real(cfg.p);
  problem.q = Real(cfg.q);
  problem.a = Real(cfg.a);
  problem.b = Real(cfg.b);
  return problem;
}

ExpansionKind expansion_kind_for(const RunConfig& cfg) {
  ExpansionKind kind = parse_kind(cfg.kind.empty() ? "interval" : cfg.kind);
  if (kind == ExpansionKind::interval_E0 && (cfg.a != -1 || cfg.b != 1)) {
    kind = ExpansionKind::general_interval_E0;
  }
  return kind;
}

template <class Real>
Table cmd_exact(const RunConfig& cfg) {
  Table t;
  const std::string kind = cfg.kind.empty() ? "potential" : cfg.kind;
  if (kind == "interval") {
    const IntervalSpec<Real> interval{Real(cfg.a), Real(cfg.b)};
    t.columns = {"N", "a", "b", "E0", "log_Delta"};
    t.rows.resize(cfg.degrees.size());
    kernels::for_each_row(cfg.degrees.size(), [&](std::size_t i) {
      const int N = cfg.degrees[i];
      const Real e0 = interval_energy_exact(interval, N);
      const Real log_delta = rescale_energy(EnergyKind::interval, -discriminant_N_log<Real>(N),
                                            interval.scale(), N, Real(1), Real(1));
      t.rows[i] = {int_cell(N), real_cell(interval.a()), real_cell(interval.b()), real_cell(e0),
                   real_cell(Real(-log_delta))};
    });
  } else if (kind == "potential") {
    const Real p(cfg.p);
    const Real q(cfg.q);
    t.columns = {"n", "p", "q", "potential", "elliptic_E0", "log_Delta_pq"};
    t.rows.resize(cfg.degrees.size());
    kernels::for_each_row(cfg.degrees.size(), [&](std::size_t i) {
      const int n = cfg.degrees[i];
      Cell elliptic;  // the elliptic energy needs at least two points
      if (n >= 2) elliptic = real_cell(elliptic_log_energy_exact(n, p, q));
      t.rows[i] = {int_cell(n), real_cell(p), real_cell(q),
                   real_cell(potential_energy_exact(n, p, q)), elliptic,
                   real_cell(pq_discriminant_log(n, p, q))};
    });
  } else {
    throw UsageError("exact: --kind must be 'potential' or 'interval'");
  }
  return t;
}

template <class Real>
void cmd_coeffs(const RunConfig& cfg, std::ostream& out) {
  const auto problem = make_problem<Real>(cfg, expansion_kind_for(cfg));
  const auto e = build_expansion(problem, cfg.order);
  if (cfg.format == Format::json) {
    out << expansion_to_json(e) << "\n";
    return;
  }
  Table t;
  t.columns = {"term", "value"};
  if (e.leading.n2logn != 0) t.rows.push_back({text_cell("n2logn"), real_cell(e.leading.n2logn)});
  t.rows.push_back({text_cell("n2"), real_cell(e.leading.n2)});
  t.rows.push_back({text_cell("nlogn"), real_cell(e.leading.nlogn)});
  t.rows.push_back({text_cell("n"), real_cell(e.leading.n)});
  t.rows.push_back({text_cell("logn"), real_cell(e.leading.logn)});
  t.rows.push_back({text_cell("const"), real_cell(e.leading.constant)});
  for (int m = 1; m <= e.order(); ++m) {
    t.rows.push_back({text_cell("tail" + std::to_string(m)), real_cell(e.tail[m - 1])});
  }
  write_csv(t, out);
}

template <class Real>
Table cmd_table(const RunConfig& cfg) {
  const auto problem = make_problem<Real>(cfg, expansion_kind_for(cfg));
  const auto table = convergence_table(problem, std::span<const int>(cfg.degrees), cfg.order);
  Table t;
  t.columns = {"n", "M_prime", "exact", "truncated", "error"};
  for (std::size_t i = 0; i < table.ns.size(); ++i) {
    for (int k = 0; k <= cfg.order; ++k) {
      const auto kk = static_cast<std::size_t>(k);
      t.rows.push_back({int_cell(table.ns[i]), int_cell(k), real_cell(table.exact[i]),
                        real_cell(table.truncated[i][kk]), real_cell(table.errors[i][kk])});
    }
  }
  return t;
}

template <class Real>
Table cmd_zeros(const RunConfig& cfg) {
  const auto params = JacobiParams<Real>::from_charges(Real(cfg.p), Real(cfg.q));
  std::vector<ZeroSet<Real>> sets(cfg.degrees.size());
  kernels::for_each_row(cfg.degrees.size(),
                        [&](std::size_t i) { sets[i] = zeros(cfg.degrees[i], params); });
  Table t;
  t.columns = {"n", "alpha", "beta", "k", "x"};
  for (const auto& set : sets) {
    for (std::size_t k = 0; k < set.points.size(); ++k) {
      t.rows.push_back({int_cell(set.n), real_cell(params.alpha()), real_cell(params.beta()),
                        int_cell(static_cast<long long>(k) + 1), real_cell(set.points[k])});
    }
  }
  return t;
}

template <class Real>
std::vector<SolveReport<Real>> solve_all(const RunConfig& cfg, bool fekete) {
  std::vector<SolveReport<Real>> reports(cfg.degrees.size());
  const Real tol(cfg.tol);
  kernels::for_each_row(cfg.degrees.size(), [&](std::size_t i) {
    reports[i] = fekete ? fekete_maximize<Real>(cfg.degrees[i], tol)
                        : minimize_potential<Real>(cfg.degrees[i], Real(cfg.p), Real(cfg.q), tol);
  });
  return reports;
}

template <class Real>
Table cmd_minimize(const RunConfig& cfg) {
  const bool fekete = is_fekete_kind(cfg.kind);
  if (!fekete && !cfg.kind.empty() && cfg.kind != "potential") {
    throw UsageError("minimize: --kind must be 'potential' or 'fekete'");
  }
  const auto reports = solve_all<Real>(cfg, fekete);
  Table t;
  t.columns = {fekete ? "N" : "n", "k", "x", "iterations", "converged", "grad_norm", "energy"};
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    for (std::size_t k = 0; k < r.points.points.size(); ++k) {
      t.rows.push_back({int_cell(cfg.degrees[i]), int_cell(static_cast<long long>(k) + 1),
                        real_cell(r.points.points[k]), int_cell(r.iterations),
                        bool_cell(r.converged), real_cell(r.grad_norm), real_cell(r.energy)});
    }
  }
  return t;
}

constexpr double kZeroDeviationTolerance = 1e-8;

template <class Real>
bool verify_minimize(const RunConfig& cfg, Table& t) {
  const auto reports = solve_all<Real>(cfg, false);
  const auto params = JacobiParams<Real>::from_charges(Real(cfg.p), Real(cfg.q));
  t.columns = {"record", "n", "max_zero_deviation", "iterations", "converged", "status"};
  bool ok = true;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    using std::abs;
    const auto z = zeros(cfg.degrees[i], params);
    Real dev = 0;
    for (std::size_t k = 0; k < z.points.size(); ++k) {
      dev = std::max<Real>(dev, abs(z.points[k] - reports[i].points.points[k]));
    }
    const bool pass = reports[i].converged && dev <= Real(kZeroDeviationTolerance);
    ok = ok && pass;
    t.rows.push_back({text_cell("point"), int_cell(cfg.degrees[i]), real_cell(dev),
                      int_cell(reports[i].iterations), bool_cell(reports[i].converged),
                      text_cell(pass ? "pass" : "fail")});
  }
  return ok;
}

template <class Real>
bool verify_expansion(const RunConfig& cfg, Table& t) {
  using std::abs;
  const auto problem = make_problem<Real>(cfg, expansion_kind_for(cfg));
  const auto table = convergence_table(problem, std::span<const int>(cfg.degrees), cfg.order);
  t.columns = {"record", "n", "M_prime", "exact", "truncated", "error",
               "slope", "expected_slope", "status"};
  const Cell none;
  std::vector<double> ns(table.ns.begin(), table.ns.end());
  for (std::size_t i = 0; i < table.ns.size(); ++i) {
    for (int k = 0; k <= cfg.order; ++k) {
      const auto kk = static_cast<std::size_t>(k);
      const bool noisy = abs(table.errors[i][kk]) <= noise_floor(table.exact[i]);
      t.rows.push_back({text_cell("point"), int_cell(table.ns[i]), int_cell(k),
                        real_cell(table.exact[i]), real_cell(table.truncated[i][kk]),
                        real_cell(table.errors[i][kk]), none, none,
                        text_cell(noisy ? "noise" : "ok")});
    }
  }
  bool ok = true;
  for (int k = 0; k <= cfg.order; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    std::vector<double> err(ns.size());
    std::unique_ptr<bool[]> skip(new bool[ns.size()]);
    for (std::size_t i = 0; i < ns.size(); ++i) {
      err[i] = static_cast<double>(table.errors[i][kk]);
      skip[i] = abs(table.errors[i][kk]) <= noise_floor(table.exact[i]);
    }
    const auto fit = fit_loglog_slope(ns, err, std::span<const bool>(skip.get(), ns.size()));
    const double expected = -(k + 1);
    std::string status;
    Cell slope;
    if (fit.points_used < 2) {
      status = "insufficient";
    } else {
      slope = real_cell(fit.slope);
      const bool pass = std::abs(fit.slope - expected) <= cfg.slope_tol;
      status = pass ? "pass" : "fail";
      ok = ok && pass;
    }
    t.rows.push_back({text_cell("slope"), none, int_cell(k), none, none, none, slope,
                      real_cell(expected), text_cell(status)});
  }
  for (std::size_t i = 0; i < table.ns.size(); ++i) {
    const int best = optimal_truncation(std::span<const Real>(table.errors[i]));
    t.rows.push_back({text_cell("optimal"), int_cell(table.ns[i]), int_cell(best),
                      real_cell(table.exact[i]),
                      real_cell(table.truncated[i][static_cast<std::size_t>(best)]),
                      real_cell(table.errors[i][static_cast<std::size_t>(best)]), none, none,
                      text_cell("ok")});
  }
  return ok;
}

template <class Real>
ExitCode dispatch(const RunConfig& cfg, std::ostream& out) {
  switch (cfg.command) {
    case Command::exact:
      write_table(cmd_exact<Real>(cfg), cfg.format, out);
      return ExitCode::success;
    case Command::coeffs:
      cmd_coeffs<Real>(cfg, out);
      return ExitCode::success;
    case Command::table:
      write_table(cmd_table<Real>(cfg), cfg.format, out);
      return ExitCode::success;
    case Command::zeros:
      write_table(cmd_zeros<Real>(cfg), cfg.format, out);
      return ExitCode::success;
    case Command::minimize:
      write_table(cmd_minimize<Real>(cfg), cfg.format, out);
      return ExitCode::success;
    case Command::verify: {
      Table t;
      const bool ok = cfg.kind == "minimize" ? verify_minimize<Real>(cfg, t)
                                             : verify_expansion<Real>(cfg, t);
      write_table(t, cfg.format, out);
      return ok ? ExitCode::success : ExitCode::verification_failure;
    }
  }
  return ExitCode::usage_error;
}

int parse_int(const std::string& s) {
  int v = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (s.empty() || ec != std::errc() || ptr != last) {
    throw UsageError("invalid integer '" + s + "' in range");
  }
  return v;
}

struct ParsedArgs {
  RunConfig cfg;
  std::string help;  // non-empty when help was requested
};

ParsedArgs parse_impl(int argc, const char* const* argv) {
  ParsedArgs parsed;
  RunConfig& cfg = parsed.cfg;
  CLI::App app{"Exact energies, asymptotic expansions and verification for Fekete points",
               "fekete"};
  app.require_subcommand(1);

  std::string range;
  std::optional<double> p, q, alpha, beta;
  std::string precision;
  std::string format = "csv";

  const std::map<std::string, Command> commands{
      {"exact", Command::exact},   {"coeffs", Command::coeffs},
      {"table", Command::table},   {"zeros", Command::zeros},
      {"minimize", Command::minimize}, {"verify", Command::verify}};
  const std::map<std::string, std::string> descriptions{
      {"exact", "exact minimal energies and discriminants (--kind potential|interval)"},
      {"coeffs", "asymptotic expansion coefficients"},
      {"table", "exact value against each truncation of the expansion"},
      {"zeros", "zeros of the Jacobi polynomial"},
      {"minimize", "direct energy minimisation (--kind potential|fekete)"},
      {"verify", "truncation-error slopes, or --kind minimize for the zeros check"}};

  std::vector<CLI::App*> subs;
  for (const auto& [name, command] : commands) {
    auto* sub = app.add_subcommand(name, descriptions.at(name));
    subs.push_back(sub);
    const bool needs_range = command != Command::coeffs;
    auto* r = sub->add_option("--n,--N", range, "degree(s): a..b or comma list");
    if (needs_range) r->required();
    sub->add_option("--kind", cfg.kind, "quantity to compute");
    sub->add_option("--p", p, "endpoint charge at +1");
    sub->add_option("--q", q, "endpoint charge at -1");
    sub->add_option("--alpha", alpha, "Jacobi exponent at +1 (alpha = 2p-1)");
    sub->add_option("--beta", beta, "Jacobi exponent at -1 (beta = 2q-1)");
    sub->add_option("--a", cfg.a, "left end of the interval");
    sub->add_option("--b", cfg.b, "right end of the interval");
    sub->add_option("--order,--M", cfg.order, "number of tail coefficients");
    sub->add_option("--precision", precision, "std or ext")->envname("FEKETE_PRECISION");
    sub->add_option("--format", format, "csv or json");
    sub->add_option("--out", cfg.out_path, "output file (default: standard output)");
    sub->add_option("--tol", cfg.tol, "solver tolerance on the gradient max-norm");
    sub->add_option("--slope-tol", cfg.slope_tol, "allowed deviation of fitted slopes");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    parsed.help = app.help();
    for (auto* sub : subs) {
      if (sub->parsed()) parsed.help = sub->help();
    }
    return parsed;
  } catch (const CLI::CallForAllHelp&) {
    parsed.help = app.help("", CLI::AppFormatMode::All);
    return parsed;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  for (auto* sub : subs) {
    if (sub->parsed()) cfg.command = commands.at(sub->get_name());
  }

  if (!range.empty() || cfg.command != Command::coeffs) cfg.degrees = parse_range(range);

  const bool pq = p || q;
  const bool ab = alpha || beta;
  if (pq && ab) throw UsageError("give either --p/--q or --alpha/--beta, not both");
  if (ab) {
    cfg.p = (alpha.value_or(1.0) + 1) / 2;
    cfg.q = (beta.value_or(1.0) + 1) / 2;
  } else {
    cfg.p = p.value_or(1.0);
    cfg.q = q.value_or(1.0);
  }
  if (!(cfg.p > 0) || !(cfg.q > 0)) {
    throw UsageError("charges must be positive (alpha, beta > -1)");
  }
  if (!(cfg.b > cfg.a)) throw UsageError("interval requires b > a");
  if (!(cfg.tol > 0)) throw UsageError("--tol must be positive");
  if (!(cfg.slope_tol > 0)) throw UsageError("--slope-tol must be positive");

  if (!precision.empty()) {
    try {
      cfg.precision = parse_precision(precision);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (format == "csv") {
    cfg.format = Format::csv;
  } else if (format == "json") {
    cfg.format = Format::json;
  } else {
    throw UsageError("--format must be csv or json");
  }

  const int capacity = cfg.precision == Precision::standard ? max_expansion_order<double>()
                                                            : max_expansion_order<quad>();
  if (cfg.order < 0 || cfg.order > capacity) {
    throw UsageError("--order must lie in [0, " + std::to_string(capacity) + "] at " +
                     std::string(to_string(cfg.precision)) + " precision");
  }
  return parsed;
}

}  // namespace

std::vector<int> parse_range(const std::string& text) {
  if (text.empty()) throw UsageError("empty range");
  std::vector<int> values;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      values.push_back(parse_int(item));
      continue;
    }
    const int lo = parse_int(item.substr(0, dots));
    const int hi = parse_int(item.substr(dots + 2));
    if (hi < lo) throw UsageError("empty range '" + item + "'");
    if (static_cast<long long>(hi) - lo > 1000000) throw UsageError("range too long");
    for (int v = lo; v <= hi; ++v) values.push_back(v);
  }
  if (values.empty() || text.back() == ',') throw UsageError("empty item in range '" + text + "'");
  return values;
}

ExpansionKind parse_kind(const std::string& name) {
  static const std::map<std::string, ExpansionKind> aliases{
      {"lambda", ExpansionKind::log_lambda},
      {"P1", ExpansionKind::log_P1},
      {"D", ExpansionKind::log_D},
      {"discriminant", ExpansionKind::log_D},
      {"elliptic", ExpansionKind::elliptic_E0},
      {"interval", ExpansionKind::interval_E0},
      {"general_interval", ExpansionKind::general_interval_E0}};
  if (const auto it = aliases.find(name); it != aliases.end()) return it->second;
  try {
    return parse_expansion_kind(name);
  } catch (const std::invalid_argument&) {
    throw UsageError("unknown --kind '" + name + "'");
  }
}

RunConfig parse_args(int argc, const char* const* argv) {
  auto parsed = parse_impl(argc, argv);
  if (!parsed.help.empty()) throw UsageError("help requested");
  return parsed.cfg;
}

ExitCode execute(const RunConfig& cfg, std::ostream& out) {
  std::ostringstream buffer;
  buffer.imbue(std::locale::classic());
  const ExitCode code = cfg.precision == Precision::standard ? dispatch<double>(cfg, buffer)
                                                             : dispatch<quad>(cfg, buffer);
  if (cfg.out_path) {
    std::ofstream file(*cfg.out_path, std::ios::binary);
    if (!file) throw UsageError("cannot open output file '" + *cfg.out_path + "'");
    file << buffer.str();
    if (!file) throw NumericError("failed writing '" + *cfg.out_path + "'");
  } else {
    out << buffer.str();
  }
  return code;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    const auto parsed = parse_impl(argc, argv);
    if (!parsed.help.empty()) {
      out << parsed.help;
      return static_cast<int>(ExitCode::success);
    }
    return static_cast<int>(execute(parsed.cfg, out));
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
  } catch (const CapacityError& e) {
    err << "usage error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::verification_failure);
  }
  return static_cast<int>(ExitCode::usage_error);
}

}  // namespace fekete::cli
