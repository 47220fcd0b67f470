#include "suites.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "schurext/combinat.hpp"
#include "schurext/errors.hpp"
#include "schurext/guard.hpp"
#include "schurext/polyfun.hpp"
#include "schurext/series.hpp"
#include "schurext/speccomplex.hpp"
#include "schurext/twistedkoszul.hpp"

namespace schurext::cli {

using comb::Partition;
using comb::Weight;
using lin::IntegerMatrix;
using lin::Ring;
using poly::FunctorExpr;

namespace {

void say(const SuiteOptions& opt, const std::string& line) {
  if (opt.progress) opt.progress(line);
}

std::vector<Ring> fields_of(const SuiteOptions& opt) {
  std::vector<Ring> out;
  for (auto& r : opt.rings)
    if (r.is_field()) out.push_back(r);
  return out;
}

std::string dims_string(const std::map<int, std::size_t>& dims) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto& [j, v] : dims)
    if (v) {
      os << (first ? "" : ", ") << j << ':' << v;
      first = false;
    }
  os << '}';
  return os.str();
}

std::size_t dim_at(const std::map<int, std::size_t>& dims, int j) {
  auto it = dims.find(j);
  return it == dims.end() ? 0 : it->second;
}

std::vector<Partition> hooks_of(int d) {
  std::vector<Partition> out;
  for (int b = 0; b < d; ++b) out.push_back(comb::hook(d - b, b));
  return out;
}

// Functors of degree d used by the structural suites.
std::vector<FunctorExpr> test_functors(int d) {
  std::vector<FunctorExpr> out = {poly::divided(d), poly::exterior(d), poly::symmetric(d)};
  for (auto& lam : comb::partitions_of(d))
    if (lam.length() > 1 && lam[0] > 1) out.push_back(poly::weyl(lam));
  for (int i = 1; i < d; ++i) out.push_back(poly::divided(i) * poly::exterior(d - i));
  if (d >= 3) out.push_back(poly::exterior(1) * poly::weyl(Partition({d - 2, 1})));
  return out;
}

}  // namespace

CheckReport suite_invariance(const SuiteOptions& opt) {
  CheckReport rep{"invariance", 0, {}, {}};
  for (auto& ring : opt.rings) {
    std::map<std::pair<Partition, Partition>, spec::ExtTable> cache;
    auto table = [&](const Partition& l, const Partition& m) -> const spec::ExtTable& {
      auto key = std::pair(l, m);
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, spec::ext_schur_query(l, m, ring)).first;
      return it->second;
    };
    for (int d = 2; d <= opt.max_degree; ++d) {
      say(opt, "invariance d=" + std::to_string(d) + " over " + ring.name());
      for (auto& lam : hooks_of(d))
        for (auto& mu : hooks_of(d)) {
          if (lam[0] < 2 || mu[0] < 2) continue;
          const Partition lam2 = comb::hook(lam[0] - 1, lam.length()), mu2 = comb::hook(mu[0] - 1, mu.length());
          const auto& t1 = table(lam, mu);
          const auto& t2 = table(lam2, mu2);
          rep.expect(t1.same_groups(t2), "Ext(S(" + lam.to_string() + "),S(" + mu.to_string() + ")) != Ext(S(" +
                                             lam2.to_string() + "),S(" + mu2.to_string() + ")) over " + ring.name());
        }
    }
  }
  return rep;
}

CheckReport suite_duality(const SuiteOptions& opt) {
  CheckReport rep{"duality", 0, {}, {}};
  for (auto& ring : fields_of(opt))
    for (int m = 1; m <= opt.max_degree; ++m)
      for (int n = 0; n <= m && m + n <= opt.max_degree; ++n) {
        std::vector<int> two(n, 2), one(m - n, 1);
        two.insert(two.end(), one.begin(), one.end());
        const Partition lam(two), hk = comb::hook(n + 1, m - n);
        say(opt, "duality m=" + std::to_string(m) + " n=" + std::to_string(n) + " over " + ring.name());
        const auto left = spec::ext_schur_query(lam, Partition(std::vector<int>(m + n, 1)), ring).dimensions();
        const auto right = spec::ext_schur_query(hk, Partition(std::vector<int>(m + 1, 1)), ring).dimensions();
        bool ok = true;
        for (auto& [j, v] : left) ok = ok && v == dim_at(right, n - j);
        for (auto& [k, v] : right) ok = ok && v == dim_at(left, n - k);
        rep.expect(ok, "m=" + std::to_string(m) + " n=" + std::to_string(n) + " over " + ring.name() + ": " +
                           dims_string(left) + " vs flipped " + dims_string(right));
      }
  return rep;
}

CheckReport suite_periodicity(const SuiteOptions& opt) {
  CheckReport rep{"periodicity", 0, {}, {}};
  const int cap = std::min(opt.max_degree + 2, degree_guard().complex_degree);
  for (auto& ring : fields_of(opt)) {
    const int p = static_cast<int>(ring.p());
    for (int d = 1; d <= cap; ++d)
      for (auto& mu : comb::partitions_of(d)) {
        int q = 1;
        while (q <= mu.size() - mu.length()) q *= p;
        if (d + q > cap) continue;
        const Partition muq = comb::append_ones(mu, q);
        say(opt, "periodicity " + mu.to_string() + " -> " + muq.to_string() + " at p=" + std::to_string(p));
        const auto a = spec::stable_coh_dims(mu, p), b = spec::stable_coh_dims(muq, p);
        bool ok = true;
        for (auto& [j, v] : a) ok = ok && v == dim_at(b, j + q);
        for (auto& [k, v] : b) ok = ok && (k >= q || v == 0);
        rep.expect(ok, mu.to_string() + " " + dims_string(a) + " vs " + muq.to_string() + " " + dims_string(b) +
                           " at p=" + std::to_string(p));
      }
  }
  return rep;
}

CheckReport suite_twisted(const SuiteOptions& opt) {
  CheckReport rep{"twisted", 0, {}, {}};
  const int d = opt.max_degree;
  auto run = [&](const std::string& what, auto&& fn) {
    say(opt, "twisted " + what);
    rep.merge(fn());
  };
  run("phi-upsilon", [&] { return koszul::check_phi_upsilon(d, 4); });
  run("phi-boundary", [&] { return koszul::check_phi_boundary(d, 4); });
  run("upsilon-via-psi", [&] { return koszul::check_upsilon_via_psi(d, 4); });
  run("upsilon-squared", [&] { return koszul::check_upsilon_squared(d, 4); });
  run("eta-psi", [&] { return koszul::check_eta_psi(d, 4); });
  run("sigma-multiplicity", [&] { return koszul::check_sigma_multiplicity(std::min(d, 5), 6); });
  run("divided-powers", [&] { return koszul::check_divided_powers(3, d); });
  run("theta", [&] { return koszul::check_theta(d); });
  run("quasi-isomorphisms", [&] { return koszul::check_quasi_isomorphisms(d, opt.rings); });
  return rep;
}

CheckReport suite_blocks(const SuiteOptions& opt) {
  CheckReport rep{"blocks", 0, {}, {}};
  std::vector<int> primes;
  for (auto& r : fields_of(opt)) primes.push_back(static_cast<int>(r.p()));
  if (primes.empty()) primes = {2, 3, 5};
  const int t_window = 40;
  for (int p : primes) {
    say(opt, "blocks two-row pairs d<=20 at p=" + std::to_string(p));
    for (int d = 0; d <= 20; ++d)
      for (int A = (d + 1) / 2; A <= d; ++A)
        for (int a = (d + 1) / 2; a <= A; ++a) {
          const Partition lam({A, d - A}), mu({a, d - a});
          const auto e = series::e_series(2 * a - d, p, t_window, A - a);
          bool nonzero = false;
          for (int j = 0; j <= t_window; ++j) nonzero = nonzero || e.coeff(j, A - a) != 0;
          rep.expect(nonzero == series::gl2_same_block(lam, mu, p),
                     "block criterion disagrees with the series for " + lam.to_string() + " / " + mu.to_string() +
                         " at p=" + std::to_string(p));
        }
    say(opt, "blocks hook nonvanishing m<=20 at p=" + std::to_string(p));
    for (int m = 0; m <= 20; ++m)
      for (int n = 0; n <= m; ++n) {
        bool nonzero = false;
        for (auto& c : series::h_polynomial(n + 1, m - n, p, t_window)) nonzero = nonzero || c != 0;
        rep.expect(nonzero == series::hook_nonvanishing(n, m, p),
                   "nonvanishing criterion disagrees with H for n=" + std::to_string(n) + " m=" + std::to_string(m) +
                       " at p=" + std::to_string(p));
      }
  }
  const Partition l({7}), m({5, 2});
  bool all_zero = true;
  for (int j = 0; j <= 7; ++j) all_zero = all_zero && series::ext_dim_formula(series::ExtCase::two_row, l, m, j, 2) == 0;
  rep.expect(!series::gl2_same_block(l, m, 2) && all_zero, "(7)/(5,2) at p=2 should be in different blocks");
  return rep;
}

CheckReport check_simplicial_identities(int max_degree, int max_length) {
  CheckReport rep{"simplicial identities", 0, {}, {}};
  auto same = [&](const IntegerMatrix& x, const IntegerMatrix& y, const Weight& wx, const Weight& wy,
                  const std::string& what) { rep.expect(wx == wy && x == y, what); };
  for (int d = 1; d <= max_degree; ++d)
    for (auto& f : test_functors(d)) {
      const std::string fname = f.to_string();
      for (int n = 1; n + 2 <= max_length; ++n)
        for (auto& w : comb::enumerate_weights(d, n, false, 0))
          for (int j = 1; j <= n + 1; ++j)
            for (int i = 0; i < j; ++i) {
              const Weight wi = poly::generize_weight(w, i), wj1 = poly::generize_weight(w, j - 1);
              const IntegerMatrix lhs = poly::generization_matrix(f, wi, j) * poly::generization_matrix(f, w, i);
              const IntegerMatrix rhs = poly::generization_matrix(f, wj1, i) * poly::generization_matrix(f, w, j - 1);
              same(lhs, rhs, poly::generize_weight(wi, j), poly::generize_weight(wj1, i),
                   fname + " gen " + std::to_string(j) + "," + std::to_string(i) + " at " + comb::weight_to_string(w));
            }
      for (int len = 3; len <= max_length; ++len)
        for (auto& w : comb::enumerate_weights(d, len, false, 0))
          for (int j = 1; j <= len - 2; ++j)
            for (int i = 1; i <= j; ++i) {
              const Weight wi = poly::specialize_weight(w, i), wj = poly::specialize_weight(w, j + 1);
              const IntegerMatrix lhs = poly::specialization_matrix(f, wi, j) * poly::specialization_matrix(f, w, i);
              const IntegerMatrix rhs = poly::specialization_matrix(f, wj, i) * poly::specialization_matrix(f, w, j + 1);
              same(lhs, rhs, poly::specialize_weight(wi, j), poly::specialize_weight(wj, i),
                   fname + " spec " + std::to_string(j) + "," + std::to_string(i) + " at " + comb::weight_to_string(w));
            }
      for (int n = 1; n + 1 <= max_length; ++n)
        for (auto& w : comb::enumerate_weights(d, n, false, 0))
          for (int j = 1; j <= n; ++j)
            for (int i = 0; i <= n; ++i) {
              const Weight wi = poly::generize_weight(w, i);
              const IntegerMatrix lhs = poly::specialization_matrix(f, wi, j) * poly::generization_matrix(f, w, i);
              const Weight wl = poly::specialize_weight(wi, j);
              const std::string what =
                  fname + " mixed " + std::to_string(j) + "," + std::to_string(i) + " at " + comb::weight_to_string(w);
              if (i == j - 1 || i == j) {
                same(lhs, IntegerMatrix::identity(poly::weight_space_rank(f, w)), wl, w, what);
              } else if (i < j - 1) {
                const Weight ws = poly::specialize_weight(w, j - 1);
                same(lhs, poly::generization_matrix(f, ws, i) * poly::specialization_matrix(f, w, j - 1), wl,
                     poly::generize_weight(ws, i), what);
              } else {
                const Weight ws = poly::specialize_weight(w, j);
                same(lhs, poly::generization_matrix(f, ws, i - 1) * poly::specialization_matrix(f, w, j), wl,
                     poly::generize_weight(ws, i - 1), what);
              }
            }
    }
  return rep;
}

CheckReport check_boundary_squared(int max_degree) {
  CheckReport rep{"boundary squared", 0, {}, {}};
  for (int d = 1; d <= max_degree; ++d)
    for (auto& f : test_functors(d))
      for (int a = 1; a <= d; ++a)
        for (auto v : {spec::Variant::full, spec::Variant::graded, spec::Variant::extended, spec::Variant::degenerate}) {
          spec::FilteredFamily fam{f, a, v, 1, d + 2};
          rep.expect(lin::validate_complex(spec::build_complex(fam)),
                     f.to_string() + " a=" + std::to_string(a) + " " + spec::variant_name(v));
        }
  return rep;
}

CheckReport suite_simplicial(const SuiteOptions& opt) {
  CheckReport rep{"simplicial", 0, {}, {}};
  say(opt, "simplicial identities");
  rep.merge(check_simplicial_identities(opt.max_degree));
  say(opt, "simplicial boundary squared");
  rep.merge(check_boundary_squared(opt.max_degree));
  return rep;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"invariance", "duality", "periodicity",
                                                 "twisted",    "blocks",  "simplicial"};
  return names;
}

std::vector<CheckReport> run_suite(const std::string& name, const SuiteOptions& opt) {
  using Fn = CheckReport (*)(const SuiteOptions&);
  static const std::map<std::string, Fn> table = {
      {"invariance", suite_invariance}, {"duality", suite_duality}, {"periodicity", suite_periodicity},
      {"twisted", suite_twisted},       {"blocks", suite_blocks},   {"simplicial", suite_simplicial}};
  std::vector<CheckReport> out;
  if (name == "all") {
    for (auto& n : suite_names()) out.push_back(table.at(n)(opt));
    return out;
  }
  auto it = table.find(name);
  if (it == table.end()) throw ParseError("unknown suite '" + name + "'");
  out.push_back(it->second(opt));
  return out;
}

}  // namespace schurext::cli
