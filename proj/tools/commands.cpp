#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "acceptance.hpp"
#include "smoothbound/bertrand.hpp"
#include "smoothbound/dickman.hpp"
#include "smoothbound/errors.hpp"
#include "smoothbound/iterlog_bounds.hpp"
#include "smoothbound/primes.hpp"
#include "smoothbound/recursion_pq.hpp"
#include "smoothbound/simplex_bounds.hpp"
#include "smoothbound/smooth_exact.hpp"

namespace smoothbound::cli {
namespace {

using nlohmann::json;

constexpr const char* kSchema = "v1";
constexpr const char* kTableEnv = "SMOOTHBOUND_TABLE_LIMIT";

std::string number(double v) {
  if (std::isnan(v)) return "null";
  if (std::isinf(v)) return v > 0 ? "1e999" : "-1e999";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// JSON with every float printed to 17 significant digits.
void write_json(std::ostream& os, const json& j) {
  switch (j.type()) {
    case json::value_t::object: {
      os << '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ',';
        first = false;
        os << json(it.key()).dump() << ':';
        write_json(os, it.value());
      }
      os << '}';
      break;
    }
    case json::value_t::array: {
      os << '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ',';
        write_json(os, j[i]);
      }
      os << ']';
      break;
    }
    case json::value_t::number_float:
      os << number(j.get<double>());
      break;
    default:
      os << j.dump();
  }
}

void emit(std::ostream& out, const json& j) {
  write_json(out, j);
  out << '\n';
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }
  std::string text() const {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f s", seconds());
    return buf;
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Flag, then environment, then the caller's automatic choice.
std::uint64_t resolve_table_limit(std::optional<std::uint64_t> flag, std::uint64_t automatic) {
  if (flag) return *flag;
  if (const char* env = std::getenv(kTableEnv); env && *env) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v < 2) {
      throw DomainError(std::string(kTableEnv) + " must be an integer >= 2, got '" + env + "'");
    }
    return v;
  }
  return std::max<std::uint64_t>(automatic, 2);
}

std::uint64_t as_integer(double v, const char* what) {
  if (!(v >= 1.0) || v != std::floor(v) || v > 1.8e19) {
    throw DomainError(std::string(what) + " must be a positive integer");
  }
  return static_cast<std::uint64_t>(v);
}

Convention parse_convention(const std::string& s) {
  if (s == "inclusive") return Convention::kInclusive;
  if (s == "strict") return Convention::kStrict;
  return Convention::kFromTwo;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + '"';
}

std::string csv_number(std::optional<double> v) { return v ? number(*v) : ""; }

// ---------------------------------------------------------------------------

struct PsiArgs {
  double x = 0;
  double y = 0;
  std::string method = "recursive";
  std::string convention = "inclusive";
  std::optional<std::uint64_t> table_limit;
};

int cmd_psi(const PsiArgs& a, std::ostream& out, std::ostream& err) {
  const SmoothQuery q{as_integer(a.x, "--x"), a.y, parse_convention(a.convention)};
  const bool naive = a.method == "naive";
  const double reach = naive ? double(q.x) : std::min(double(q.x), a.y);
  const auto limit = resolve_table_limit(a.table_limit, static_cast<std::uint64_t>(reach) + 1);
  Timer timer;
  const PrimeTable table(limit);
  const auto psi = naive ? psi_naive(table, q) : psi_recursive(table, q);
  err << "psi: " << timer.text() << '\n';
  emit(out, json{{"psi", psi},
                 {"x", q.x},
                 {"y", a.y},
                 {"method", a.method},
                 {"convention", a.convention},
                 {"table_limit", limit}});
  return kOk;
}

// ---------------------------------------------------------------------------

struct BoundsArgs {
  std::vector<double> xs;
  std::vector<double> ys;
  std::string evaluator = "iterlog";
  double a_lower = 0.0;
  double a_upper = 5.0;
  bool slack = true;
  double theta = 0.5;
  double nu = 2.5;
  double beta = 0.4;
  double exact_limit = 1e10;
  std::optional<std::uint64_t> table_limit;
};

struct BoundsRow {
  double x = 0;
  double y = 0;
  std::optional<double> u, exact, lower, upper, a_emp;
  std::string lower_domain, upper_domain;
  std::string status = "ok";
};

std::string domain_flag(const auto& check) {
  try {
    check();
    return "in";
  } catch (const DomainError&) {
    return "out";
  }
}

int cmd_bounds(BoundsArgs a, std::ostream& out, std::ostream& err) {
  std::sort(a.xs.begin(), a.xs.end());
  std::sort(a.ys.begin(), a.ys.end());
  a.xs.erase(std::unique(a.xs.begin(), a.xs.end()), a.xs.end());
  a.ys.erase(std::unique(a.ys.begin(), a.ys.end()), a.ys.end());

  double reach = 2;
  for (double x : a.xs) {
    for (double y : a.ys) {
      if (x <= a.exact_limit) reach = std::max(reach, std::min(x, y));
    }
  }
  if (a.evaluator == "simplex") {
    for (double y : a.ys) reach = std::max(reach, y);
  }
  const auto limit = resolve_table_limit(a.table_limit, static_cast<std::uint64_t>(reach) + 1);
  Timer timer;
  const PrimeTable table(limit);

  std::vector<BoundsRow> rows;
  for (double x : a.xs) {
    for (double y : a.ys) {
      BoundsRow row{x, y};
      std::vector<std::string> notes;
      try {
        if (x <= a.exact_limit && x == std::floor(x) && x >= 1) {
          const auto psi = psi_recursive(table, {static_cast<std::uint64_t>(x), y});
          row.exact = std::log(static_cast<double>(psi) / x);
        }
      } catch (const std::exception& e) {
        notes.push_back(std::string("exact: ") + e.what());
      }
      try {
        const auto q = XYQuery::from_values(x, y);
        row.u = q.u();
        if (a.evaluator == "simplex") {
          const auto s = build_reduced(table, as_integer(x, "x"), y, WeightMode::kExact);
          row.lower = psi_lower(s, LowerForm::kExactK).log() - std::log(x);
          row.upper = psi_upper(s, UpperForm::kExactK).log() - std::log(x);
        } else {
          row.lower = ln_psi_lower_bound_formula(q, a.a_lower);
          row.upper = ln_psi_upper_bound_formula(q, a.a_upper, a.slack);
        }
        row.lower_domain = domain_flag([&] { ln_psi_lower_bound(q, a.a_lower, a.theta); });
        row.upper_domain =
            domain_flag([&] { ln_psi_upper_bound(q, a.a_upper, a.slack, a.nu, a.beta); });
        if (row.exact) row.a_emp = empirical_a_from_log(q, *row.exact + q.ln_x());
      } catch (const std::exception& e) {
        notes.push_back(std::string("bounds: ") + e.what());
      }
      if (!notes.empty()) {
        std::string joined;
        for (const auto& n : notes) joined += (joined.empty() ? "" : "; ") + n;
        row.status = joined;
      }
      rows.push_back(std::move(row));
    }
  }
  err << "bounds: " << rows.size() << " rows, " << timer.text() << '\n';

  out << "schema,x,y,u,exact_ln_psi_over_x,lower,upper,empirical_a,lower_domain,upper_domain,status\r\n";
  for (const auto& r : rows) {
    out << kSchema << ',' << number(r.x) << ',' << number(r.y) << ',' << csv_number(r.u) << ','
        << csv_number(r.exact) << ',' << csv_number(r.lower) << ',' << csv_number(r.upper) << ','
        << csv_number(r.a_emp) << ',' << r.lower_domain << ',' << r.upper_domain << ','
        << csv_field(r.status) << "\r\n";
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct RhoArgs {
  double u = 0;
  double step = 1e-3;
  double max_u = 100;
};

int cmd_rho(const RhoArgs& a, std::ostream& out, std::ostream& err) {
  Timer timer;
  const RhoSolver solver(a.step, std::max(a.max_u, 2.0));
  json j{{"u", a.u}, {"rho", solver.rho(a.u)}, {"ln_rho", solver.ln_rho(a.u)}, {"step", a.step}};
  if (a.u > 0) j["asymptote_ul"] = rho_asymptote(a.u, RhoAsymptote::kUL);
  if (a.u > std::exp(1.0)) j["asymptote_ul2"] = rho_asymptote(a.u, RhoAsymptote::kUL2);
  err << "rho: " << timer.text() << '\n';
  emit(out, j);
  return kOk;
}

// ---------------------------------------------------------------------------

struct BertrandArgs {
  double gamma = 1.5;
  std::uint64_t lo = 10;
  std::uint64_t hi = 1000000;
  std::optional<std::uint64_t> table_limit;
};

int cmd_bertrand(const BertrandArgs& a, std::ostream& out, std::ostream& err) {
  if (!(a.gamma > 1.0)) throw DomainError("--gamma must exceed 1");
  // The first prime above hi is below 2 hi + 2.
  const auto limit = resolve_table_limit(a.table_limit, 2 * a.hi + 2);
  Timer timer;
  const PrimeTable table(limit);
  const auto report = scan(table, a.lo, a.hi, a.gamma);
  err << "bertrand: " << timer.text() << '\n';
  emit(out, json{{"gamma", a.gamma},
                 {"lo", a.lo},
                 {"hi", a.hi},
                 {"checked", report.checked},
                 {"failures", report.failures}});
  return kOk;
}

// ---------------------------------------------------------------------------

struct RecursionArgs {
  double c = 5;
  double M = 10;
  std::string problem = "both";
  std::size_t memo_budget = std::size_t{1} << 24;
  BoundParams params;
};

int cmd_recursion(const RecursionArgs& a, std::ostream& out, std::ostream& err) {
  Timer timer;
  const AuxProblem p{a.c, a.M};
  const RecursionOptions opt{a.memo_budget};
  json j{{"c", a.c}, {"M", a.M}};
  if (a.problem != "Q") j["ln_F"] = f_cm(p, opt).log();
  if (a.problem != "P") j["ln_G"] = g_cm(p, opt).log();
  if (a.M > std::exp(1.0) && a.c > std::exp(1.0)) {
    j["lower_exponent"] = lower_bound_exponent(a.c, a.M, a.params);
    j["upper_exponent"] = upper_bound_exponent(a.c, a.M, a.params, false);
    j["upper_exponent_slack"] = upper_bound_exponent(a.c, a.M, a.params, true);
  }
  const auto h = h_max_closed(a.c, a.M, a.params.gamma, a.params.a);
  j["h_max"] = json{{"maximum", h.maximum}, {"z0", h.z0}, {"t0", h.t0}, {"f_gamma", h.f_gamma}};
  if (a.c > 2 && a.M > std::exp(1.0)) {
    const auto s = descent_step(a.c, a.M, a.params, DescentForm::kLog1);
    j["descent"] = json{{"c_next", s.c_next}, {"M_next", s.M_next}, {"gamma0", s.gamma0}, {"t0", s.t0}};
  }
  err << "recursion: " << timer.text() << '\n';
  emit(out, j);
  return kOk;
}

// ---------------------------------------------------------------------------

int cmd_verify(const std::string& scale, std::ostream& out, std::ostream& err) {
  const auto results = acceptance::run_acceptance(scale == "desk" ? acceptance::Scale::kDesk
                                                                  : acceptance::Scale::kSmoke);
  json criteria = json::array();
  json failed = json::array();
  for (const auto& r : results) {
    criteria.push_back(json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    if (!r.passed) failed.push_back(r.name);
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.3f s", r.seconds);
    err << (r.passed ? "PASS " : "FAIL ") << r.id << ' ' << r.name << ' ' << secs << '\n';
  }
  const bool all = failed.empty();
  emit(out, json{{"scale", scale}, {"passed", all}, {"failed", failed}, {"criteria", criteria}});
  return all ? kOk : kFailedCriteria;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Smooth-number counts, bounds and numerical checks"};
  app.require_subcommand(1);

  PsiArgs psi;
  auto* c_psi = app.add_subcommand("psi", "Exact count of y-smooth integers up to x (JSON)");
  c_psi->add_option("--x", psi.x, "Upper end x (integer)")->required();
  c_psi->add_option("--y", psi.y, "Smoothness bound y >= 2")->required();
  c_psi->add_option("--method", psi.method)->check(CLI::IsMember({"naive", "recursive"}));
  c_psi->add_option("--convention", psi.convention)
      ->check(CLI::IsMember({"inclusive", "strict", "from-two"}));
  c_psi->add_option("--table-limit", psi.table_limit, "Sieve limit (overrides " + std::string(kTableEnv) + ")");

  BoundsArgs bounds;
  auto* c_bounds = app.add_subcommand("bounds", "Bound formulas against exact counts over a grid (CSV)");
  c_bounds->add_option("--x", bounds.xs, "x values")->required();
  c_bounds->add_option("--y", bounds.ys, "y values")->required();
  c_bounds->add_option("--evaluator", bounds.evaluator)->check(CLI::IsMember({"iterlog", "simplex"}));
  c_bounds->add_option("--a-lower", bounds.a_lower);
  c_bounds->add_option("--a-upper", bounds.a_upper);
  c_bounds->add_flag("--slack,!--no-slack", bounds.slack, "Add the ln y ln u slack to the upper bound");
  c_bounds->add_option("--theta", bounds.theta, "Lower-domain parameter");
  c_bounds->add_option("--nu", bounds.nu, "Upper-domain parameter");
  c_bounds->add_option("--beta", bounds.beta, "Upper-domain parameter");
  c_bounds->add_option("--exact-limit", bounds.exact_limit, "Largest x for which exact psi is computed");
  c_bounds->add_option("--table-limit", bounds.table_limit);

  RhoArgs rho;
  auto* c_rho = app.add_subcommand("rho", "Dickman rho and its asymptotic forms (JSON)");
  c_rho->add_option("--u", rho.u)->required();
  c_rho->add_option("--step", rho.step);
  c_rho->add_option("--max-u", rho.max_u);

  BertrandArgs bert;
  auto* c_bert = app.add_subcommand("bertrand", "Every y in [lo, hi] without a prime in (y, gamma y) (JSON)");
  c_bert->add_option("--gamma", bert.gamma);
  c_bert->add_option("--lo", bert.lo);
  c_bert->add_option("--hi", bert.hi);
  c_bert->add_option("--table-limit", bert.table_limit);

  RecursionArgs rec;
  auto* c_rec = app.add_subcommand("recursion", "F(c, M), G(c, M) and the iteration kernel (JSON)");
  c_rec->add_option("--c", rec.c)->required();
  c_rec->add_option("--M", rec.M)->required();
  c_rec->add_option("--problem", rec.problem)->check(CLI::IsMember({"P", "Q", "both"}));
  c_rec->add_option("--memo-budget", rec.memo_budget);
  c_rec->add_option("--a", rec.params.a);
  c_rec->add_option("--alpha", rec.params.alpha);
  c_rec->add_option("--a-upper", rec.params.a_upper);
  c_rec->add_option("--gamma", rec.params.gamma);

  std::string scale = "smoke";
  auto* c_verify = app.add_subcommand("verify", "Run the acceptance checks (JSON summary)");
  c_verify->add_option("--scale", scale)->check(CLI::IsMember({"smoke", "desk"}));

  std::vector<std::string> rev(argv.rbegin(), argv.rend());
  if (!rev.empty()) rev.pop_back();
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kUsage;
  }

  try {
    if (*c_psi) return cmd_psi(psi, out, err);
    if (*c_bounds) return cmd_bounds(bounds, out, err);
    if (*c_rho) return cmd_rho(rho, out, err);
    if (*c_bert) return cmd_bertrand(bert, out, err);
    if (*c_rec) return cmd_recursion(rec, out, err);
    if (*c_verify) return cmd_verify(scale, out, err);
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const std::bad_alloc&) {
    err << "resource limit: out of memory\n";
    return kResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace smoothbound::cli
