#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>

#include "schurext/errors.hpp"
#include "schurext/guard.hpp"
#include "schurext/json_io.hpp"
#include "schurext/resolutions.hpp"
#include "schurext/series.hpp"
#include "schurext/speccomplex.hpp"
#include "suites.hpp"

namespace schurext::cli {

using comb::Partition;
using lin::Ring;

namespace {

struct UsageError : Error {
  using Error::Error;
};

enum class Format { table, json, csv };

struct Common {
  std::string ring;
  int p = 0;
  bool json = false;
  std::string format = "table";
  int unsafe_degree = 0;

  Format output() const {
    if (json) return Format::json;
    if (format == "json") return Format::json;
    if (format == "csv") return Format::csv;
    return Format::table;
  }

  // Explicit ring choice, or nullopt when neither --ring nor --p was given.
  std::optional<Ring> selected_ring() const {
    if (p && !lin::is_prime(static_cast<unsigned long long>(p)))
      throw UsageError("--p " + std::to_string(p) + " is not prime");
    if (ring == "int") {
      if (p) throw UsageError("--p is meaningless with --ring int");
      return Ring::integers();
    }
    if (ring == "gf") {
      if (!p) throw UsageError("--ring gf needs --p");
      return Ring::prime_field(p);
    }
    if (p) return Ring::prime_field(p);
    return std::nullopt;
  }

  int prime(const std::string& command) const {
    auto r = selected_ring();
    if (!r) throw UsageError(command + " needs --p");
    if (!r->is_field()) throw UsageError(command + " is defined over prime fields only; use --ring gf --p <prime>");
    return static_cast<int>(r->p());
  }
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--ring", c.ring, "Coefficient ring")->check(CLI::IsMember({"int", "gf"}));
  sub->add_option("--p", c.p, "Prime for the finite field");
  sub->add_flag("--json", c.json, "Shorthand for --format json");
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
  sub->add_option("--unsafe-degree", c.unsafe_degree, "Raise the enumeration guards to this degree")
      ->check(CLI::PositiveNumber);
}

class GuardScope {
 public:
  explicit GuardScope(int unsafe) : saved_(degree_guard()) {
    if (unsafe) set_degree_guard({unsafe, std::max(unsafe, saved_.combinat_degree)});
  }
  ~GuardScope() { set_degree_guard(saved_); }
  GuardScope(const GuardScope&) = delete;
  GuardScope& operator=(const GuardScope&) = delete;

 private:
  DegreeGuard saved_;
};

char sep(Format f) { return f == Format::csv ? ',' : '\t'; }

// ---- ext ------------------------------------------------------------------

struct ExtArgs {
  std::string source, target_weyl, target;
  std::vector<std::string> schur_pair;
};

void print_ext(const spec::ExtTable& t, Format f, std::ostream& out) {
  if (f == Format::json) {
    out << json(t).dump(2) << '\n';
    return;
  }
  if (f == Format::table) {
    out << "# Ext^j(" << t.source << "," << t.target << ") over " << t.ring.name() << '\n';
    for (auto& r : t.rewrites) out << "# rewrite: " << r << '\n';
  }
  const bool field = t.ring.is_field();
  out << 'j' << sep(f) << (field ? "dim" : "group") << '\n';
  for (auto& [j, g] : t.entries) out << j << sep(f) << (field ? std::to_string(g.dimension()) : g.to_string()) << '\n';
}

void cmd_ext(const Common& c, const ExtArgs& a, std::ostream& out) {
  const Ring ring = c.selected_ring().value_or(Ring::integers());
  const bool pair = !a.schur_pair.empty();
  const bool hook_query = !a.source.empty();
  if (pair == hook_query) throw UsageError("ext needs either --source with a target, or --schur-pair");
  spec::ExtTable t;
  if (pair) {
    if (!a.target.empty() || !a.target_weyl.empty()) throw UsageError("--schur-pair takes no --target");
    t = spec::ext_schur_query(Partition::parse(a.schur_pair[0]), Partition::parse(a.schur_pair[1]), ring);
  } else {
    if (a.target.empty() == a.target_weyl.empty()) throw UsageError("give exactly one of --target-weyl and --target");
    const auto p = a.target.empty() ? poly::weyl(Partition::parse(a.target_weyl)) : poly::FunctorExpr::parse(a.target);
    t = spec::ext_from_hook(Partition::parse(a.source), p, ring);
  }
  print_ext(t, c.output(), out);
}

// ---- stable-coh -----------------------------------------------------------

struct StableArgs {
  std::string mu, functor;
};

void cmd_stable(const Common& c, const StableArgs& a, std::ostream& out) {
  if (c.ring == "int") throw UsageError("stable-coh is defined over prime fields only");
  const int p = c.prime("stable-coh");
  if (a.mu.empty() == a.functor.empty()) throw UsageError("stable-coh needs exactly one of --mu and --functor");
  const auto dims = a.mu.empty() ? spec::stable_coh_dims(poly::FunctorExpr::parse(a.functor), p)
                                 : spec::stable_coh_dims(Partition::parse(a.mu), p);
  std::map<int, std::size_t> nonzero;
  for (auto& [j, v] : dims)
    if (v) nonzero[j] = v;
  const Format f = c.output();
  const std::string what = a.mu.empty() ? poly::FunctorExpr::parse(a.functor).to_string()
                                        : "S(" + Partition::parse(a.mu).to_string() + ")";
  if (f == Format::json) {
    json j{{"p", p}, {"dims", dims_to_json(nonzero)}};
    if (a.mu.empty())
      j["functor"] = what;
    else
      j["mu"] = Partition::parse(a.mu).to_string();
    out << j.dump(2) << '\n';
    return;
  }
  if (f == Format::table) out << "# H^j_st(" << what << ") over F_" << p << '\n';
  out << 'j' << sep(f) << "dim" << '\n';
  for (auto& [j, v] : nonzero) out << j << sep(f) << v << '\n';
}

// ---- series ---------------------------------------------------------------

struct SeriesArgs {
  std::string kind = "E";
  std::string method = "closed";
  long long k = -1;
  int tmax = 8, umax = 16;
  std::string ext_case, lambda, mu;
};

void cmd_series(const Common& c, const SeriesArgs& a, std::ostream& out) {
  const int p = c.prime("series");
  const Format f = c.output();
  if (!a.ext_case.empty()) {
    if (a.lambda.empty() || a.mu.empty()) throw UsageError("--case needs --lambda and --mu");
    const auto ec = series::parse_case(a.ext_case);
    const Partition l = Partition::parse(a.lambda), m = Partition::parse(a.mu);
    std::map<int, std::size_t> dims;
    for (int j = 0; j <= l.size(); ++j) {
      const Integer v = series::ext_dim_formula(ec, l, m, j, p);
      if (v != 0) dims[j] = static_cast<std::size_t>(v);
    }
    if (f == Format::json) {
      out << json{{"case", series::case_name(ec)}, {"lambda", l}, {"mu", m}, {"p", p}, {"dims", dims_to_json(dims)}}
                 .dump(2)
          << '\n';
      return;
    }
    if (f == Format::table)
      out << "# dim Ext^j(S(" << l.to_string() << "),S(" << m.to_string() << ")) at p=" << p << " by the "
          << series::case_name(ec) << " formula\n";
    out << 'j' << sep(f) << "dim" << '\n';
    for (auto& [j, v] : dims) out << j << sep(f) << v << '\n';
    return;
  }
  if (a.tmax < 0 || a.umax < 0) throw UsageError("--tmax and --umax must be nonnegative");
  const auto method = a.method == "recursive" ? series::Method::recursive : series::Method::closed;
  series::BiPoly s;
  std::string name;
  if (a.kind == "A") {
    s = series::a_series(p, a.tmax, a.umax);
    name = "A(t,u)";
  } else {
    if (a.k < 0) throw UsageError("series --kind " + a.kind + " needs --k");
    s = a.kind == "N" ? series::n_series(static_cast<int>(a.k), p, a.tmax, a.umax)
                      : series::e_series(a.k, p, a.tmax, a.umax, method);
    name = a.kind + "_" + std::to_string(a.k) + "(t,u)";
  }
  if (f == Format::json) {
    json j = s;
    j["kind"] = a.kind;
    j["p"] = p;
    if (a.kind != "A") j["k"] = a.k;
    out << j.dump(2) << '\n';
    return;
  }
  if (f == Format::table)
    out << "# " << name << " at p=" << p << ", t^0..t^" << a.tmax << ", u^0..u^" << a.umax << '\n';
  std::vector<std::pair<std::pair<int, int>, Integer>> terms(s.coeffs().begin(), s.coeffs().end());
  std::sort(terms.begin(), terms.end(), [](auto& x, auto& y) {
    return std::pair(x.first.second, x.first.first) < std::pair(y.first.second, y.first.first);
  });
  out << "u" << sep(f) << "t" << sep(f) << "coeff" << '\n';
  for (auto& [key, v] : terms) out << key.second << sep(f) << key.first << sep(f) << to_string(v) << '\n';
}

// ---- resolution -----------------------------------------------------------

struct ResolutionArgs {
  std::string mu;
  std::string flavor = "divided";
};

void cmd_resolution(const Common& c, const ResolutionArgs& a, std::ostream& out) {
  const Partition mu = Partition::parse(a.mu);
  const auto shape =
      a.flavor == "exterior" ? res::schur_resolution_shape(mu) : res::weyl_resolution_shape(mu);
  const Format f = c.output();
  if (f == Format::json) {
    out << json(shape).dump(2) << '\n';
    return;
  }
  if (f == Format::csv) {
    out << "degree,summand\n";
    for (auto& [deg, t] : shape.terms)
      for (auto& lam : t) out << deg << ",\"" << lam.to_string() << "\"\n";
    return;
  }
  out << "# resolution of " << (shape.flavor == res::Flavor::divided ? "W(" : "S(") << mu.to_string() << ") by "
      << (shape.flavor == res::Flavor::divided ? "D^lambda" : "L^lambda") << '\n';
  out << "degree\tsummands\n";
  for (auto& [deg, t] : shape.terms) {
    out << deg << '\t';
    for (std::size_t i = 0; i < t.size(); ++i) out << (i ? " " : "") << t[i].to_string();
    out << '\n';
  }
  out << "count\t" << res::summand_count(shape) << '\n';
  out << "length\t" << shape.length() << '\n';
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  int max_degree = 5;
};

int cmd_verify(const Common& c, const VerifyArgs& a, std::ostream& out) {
  if (a.max_degree < 1) throw UsageError("--max-degree must be positive");
  check_complex_degree(a.max_degree + 2, "verify --max-degree");
  SuiteOptions opt;
  opt.max_degree = a.max_degree;
  if (c.ring == "int")
    opt.rings = {Ring::integers()};
  else if (c.ring == "gf")
    opt.rings = {c.selected_ring().value()};
  else
    opt.rings = {Ring::integers(), Ring::prime_field(c.p ? c.prime("verify") : 2)};
  const Format f = c.output();
  if (f != Format::json) opt.progress = [&out](const std::string& s) { out << "# " << s << '\n' << std::flush; };
  const auto reports = run_suite(a.suite, opt);
  bool ok = true;
  for (auto& r : reports) ok = ok && r.ok();
  if (f == Format::json) {
    out << json{{"ok", ok}, {"suites", reports}}.dump(2) << '\n';
  } else {
    out << "suite" << sep(f) << "cases" << sep(f) << "failures" << sep(f) << "status" << '\n';
    for (auto& r : reports)
      out << r.name << sep(f) << r.cases << sep(f) << r.failures.size() << sep(f) << (r.ok() ? "PASS" : "FAIL") << '\n';
    for (auto& r : reports)
      for (auto& msg : r.failures) out << "failure" << sep(f) << r.name << sep(f) << msg << '\n';
  }
  return ok ? exit_ok : exit_failure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Ext groups between Weyl and Schur functors"};
  app.name("schurext");
  app.require_subcommand(1);

  Common common;
  ExtArgs ext;
  StableArgs stable;
  SeriesArgs ser;
  ResolutionArgs resol;
  VerifyArgs ver;

  auto* ext_cmd = app.add_subcommand("ext", "Ext table from a hook-source Weyl module or a Schur pair");
  add_common(ext_cmd, common);
  ext_cmd->add_option("--source", ext.source, "Hook partition mu of the source W(mu)");
  ext_cmd->add_option("--target-weyl", ext.target_weyl, "Partition of the target Weyl module");
  ext_cmd->add_option("--target", ext.target, "Target functor, e.g. D(2)*L(3)");
  ext_cmd->add_option("--schur-pair", ext.schur_pair, "Ext^j(S(lambda),S(mu))")->expected(2);

  auto* st_cmd = app.add_subcommand("stable-coh", "Stable cohomology dimensions over F_p");
  add_common(st_cmd, common);
  st_cmd->add_option("--mu", stable.mu, "Partition mu of S(mu)");
  st_cmd->add_option("--functor", stable.functor, "Functor expression");

  auto* se_cmd = app.add_subcommand("series", "Power series E_k, N_b, A, or formula dimensions");
  add_common(se_cmd, common);
  se_cmd->add_option("--kind", ser.kind, "Series kind")->check(CLI::IsMember({"E", "N", "A"}));
  se_cmd->add_option("--k", ser.k, "Index k of E_k (b of N_b)");
  se_cmd->add_option("--method", ser.method, "Evaluation method")->check(CLI::IsMember({"closed", "recursive"}));
  se_cmd->add_option("--tmax", ser.tmax, "Largest t exponent kept");
  se_cmd->add_option("--umax", ser.umax, "Largest u exponent kept");
  se_cmd->add_option("--case", ser.ext_case, "Formula case: two_row, two_column or hook");
  se_cmd->add_option("--lambda", ser.lambda, "First partition for --case");
  se_cmd->add_option("--mu", ser.mu, "Second partition for --case");

  auto* re_cmd = app.add_subcommand("resolution", "Summands of the short resolution of W(mu) or S(mu)");
  add_common(re_cmd, common);
  re_cmd->add_option("--mu", resol.mu, "Partition mu")->required();
  re_cmd->add_option("--flavor", resol.flavor, "divided (W) or exterior (S)")
      ->check(CLI::IsMember({"divided", "exterior"}));

  auto* ve_cmd = app.add_subcommand("verify", "Run verification suites");
  add_common(ve_cmd, common);
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  ve_cmd->add_option("--suite", ver.suite, "Suite name")->check(CLI::IsMember(suites));
  ve_cmd->add_option("--max-degree", ver.max_degree, "Largest degree enumerated");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    GuardScope guard(common.unsafe_degree);
    if (*ext_cmd) cmd_ext(common, ext, out);
    if (*st_cmd) cmd_stable(common, stable, out);
    if (*se_cmd) cmd_series(common, ser, out);
    if (*re_cmd) cmd_resolution(common, resol, out);
    if (*ve_cmd) return cmd_verify(common, ver, out);
    return exit_ok;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return exit_usage;
  } catch (const GuardError& e) {
    err << "guard: " << e.what() << '\n';
    return exit_guard;
  } catch (const NoHookRoute& e) {
    err << "unsupported: " << e.what() << '\n';
    return exit_unsupported;
  } catch (const DomainError& e) {
    err << "unsupported: " << e.what() << '\n';
    return exit_unsupported;
  } catch (const ShapeMismatch& e) {
    err << "unsupported: " << e.what() << '\n';
    return exit_unsupported;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_failure;
  }
}

}  // namespace schurext::cli
