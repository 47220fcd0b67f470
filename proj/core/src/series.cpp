#include "schurext/series.hpp"
#include "schurext/errors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace schurext::series {

BiPoly::BiPoly(int t_max, int u_max) : t_max_(t_max), u_max_(u_max) {
  if (t_max < 0 || u_max < 0) throw DomainError("series window must be nonnegative");
}

BiPoly BiPoly::one(int t_max, int u_max) { return monomial(0, 0, 1, t_max, u_max); }

BiPoly BiPoly::monomial(int i, int j, const Integer& c, int t_max, int u_max) {
  BiPoly out(t_max, u_max);
  out.add(i, j, c);
  return out;
}

Integer BiPoly::coeff(int i, int j) const {
  auto it = coeffs_.find({i, j});
  return it == coeffs_.end() ? Integer(0) : it->second;
}

void BiPoly::add(int i, int j, const Integer& c) {
  if (i < 0 || j < 0 || i > t_max_ || j > u_max_ || c == 0) return;
  auto& v = coeffs_[{i, j}];
  v += c;
  if (v < 0) throw DomainError("series coefficient became negative");
  if (v == 0) coeffs_.erase({i, j});
}

BiPoly BiPoly::truncated(int t_max, int u_max) const {
  BiPoly out(std::min(t_max, t_max_), std::min(u_max, u_max_));
  for (auto& [k, c] : coeffs_) out.add(k.first, k.second, c);
  return out;
}

BiPoly BiPoly::substitute_u_power(int m, int u_max) const {
  if (m < 1) throw DomainError("u-substitution exponent must be positive");
  BiPoly out(t_max_, u_max);
  for (auto& [k, c] : coeffs_) {
    const long long j = static_cast<long long>(k.second) * m;
    if (j <= u_max) out.add(k.first, static_cast<int>(j), c);
  }
  return out;
}

std::vector<Integer> BiPoly::u_slice(int j) const {
  std::vector<Integer> out(t_max_ + 1);
  for (auto& [k, c] : coeffs_)
    if (k.second == j) out[k.first] = c;
  return out;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  BiPoly out(std::min(a.t_max_, b.t_max_), std::min(a.u_max_, b.u_max_));
  for (auto& [k, c] : a.coeffs_) out.add(k.first, k.second, c);
  for (auto& [k, c] : b.coeffs_) out.add(k.first, k.second, c);
  return out;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out(std::min(a.t_max_, b.t_max_), std::min(a.u_max_, b.u_max_));
  for (auto& [ka, ca] : a.coeffs_)
    for (auto& [kb, cb] : b.coeffs_) {
      const int i = ka.first + kb.first, j = ka.second + kb.second;
      if (i <= out.t_max_ && j <= out.u_max_) out.add(i, j, ca * cb);
    }
  return out;
}

bool BiPoly::agrees_with(const BiPoly& o) const {
  const int tm = std::min(t_max_, o.t_max_), um = std::min(u_max_, o.u_max_);
  return truncated(tm, um).coeffs_ == o.truncated(tm, um).coeffs_;
}

std::string BiPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::vector<std::pair<std::pair<int, int>, Integer>> terms(coeffs_.begin(), coeffs_.end());
  std::sort(terms.begin(), terms.end(), [](auto& x, auto& y) {
    return std::pair(x.first.second, x.first.first) < std::pair(y.first.second, y.first.first);
  });
  std::ostringstream os;
  bool first = true;
  for (auto& [k, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << schurext::to_string(c) << " * t^" << k.first << " * u^" << k.second;
  }
  return os.str();
}

namespace {

void check_prime(int p) {
  if (p < 2 || !lin::is_prime(static_cast<unsigned long long>(p))) throw DomainError(std::to_string(p) + " is not prime");
}

// (1 + t v) / (1 - t^2 v) with v = u^step.
BiPoly a_factor(long long step, int t_max, int u_max) {
  BiPoly geo(t_max, u_max);
  for (long long j = 0; 2 * j <= t_max && j * step <= u_max; ++j) geo.add(static_cast<int>(2 * j), static_cast<int>(j * step), 1);
  BiPoly num = BiPoly::one(t_max, u_max) + BiPoly::monomial(1, static_cast<int>(step), 1, t_max, u_max);
  return num * geo;
}

BiPoly closed_form(long long k, int p, int t_max, int u_max) {
  BiPoly out(t_max, u_max);
  const auto digits = comb::padic_digits(k, p);
  const BiPoly a = a_series(p, t_max, u_max);
  long long pw = 1;
  for (int i = 0;; ++i, pw *= p) {
    const long long lo = comb::kbar(k, i - 1, p), hi = comb::kbar(k, i, p);
    if (i >= static_cast<int>(digits.size()) && lo > u_max) break;
    const int ki = i < static_cast<int>(digits.size()) ? digits[i] : 0;
    if (ki == p - 1) continue;
    if (lo > u_max) continue;
    BiPoly lead(t_max, u_max);
    lead.add(0, static_cast<int>(lo), 1);
    if (hi <= u_max) lead.add(1, static_cast<int>(hi), 1);
    const BiPoly sub = pw > u_max ? BiPoly::one(t_max, u_max) : a.substitute_u_power(static_cast<int>(pw), u_max);
    out = out + lead * sub;
  }
  return out;
}

BiPoly recursive_form(long long k, int p, int t_max, int u_max) {
  const BiPoly a = a_series(p, t_max, u_max);
  std::map<std::pair<long long, int>, BiPoly> memo;
  std::function<BiPoly(long long, int)> rec = [&](long long kk, int window) -> BiPoly {
    if (window < 0) return BiPoly(t_max, 0);
    auto key = std::pair(kk, window);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const long long l = kk / p;
    const int k0 = static_cast<int>(kk % p);
    BiPoly out(t_max, window);
    if (k0 == p - 1) {
      out = rec(l, window / p).substitute_u_power(p, window);
    } else {
      const int r = p - 1 - k0;
      BiPoly shifted(t_max, window);
      if (window >= r) {
        const BiPoly inner = rec(l, (window - r) / p).substitute_u_power(p, window);
        shifted = BiPoly::monomial(0, r, 1, t_max, window) * inner;
      }
      BiPoly lead = BiPoly::one(t_max, window) + BiPoly::monomial(1, r, 1, t_max, window);
      out = shifted + lead * a.truncated(t_max, window);
    }
    memo.emplace(key, out);
    return out;
  };
  return rec(k, u_max);
}

}  // namespace

BiPoly a_series(int p, int t_max, int u_max) {
  check_prime(p);
  BiPoly out = BiPoly::one(t_max, u_max);
  for (long long pw = p; pw <= u_max; pw *= p) out = out * a_factor(pw, t_max, u_max);
  return out;
}

BiPoly e_series(long long k, int p, int t_max, int u_max, Method method) {
  check_prime(p);
  if (k < 0) throw DomainError("E_k needs k >= 0");
  if (t_max < 0 || u_max < 0) throw DomainError("series window must be nonnegative");
  return method == Method::closed ? closed_form(k, p, t_max, u_max) : recursive_form(k, p, t_max, u_max);
}

BiPoly n_series(int b, int p, int t_max, int u_max) {
  if (b < 0) throw DomainError("N_b needs b >= 0");
  const BiPoly e = e_series(b, p, t_max, u_max);
  return BiPoly::monomial(1, b + 1, 1, t_max, u_max) * e;
}

std::string case_name(ExtCase c) {
  switch (c) {
    case ExtCase::two_row:
      return "two_row";
    case ExtCase::two_column:
      return "two_column";
    case ExtCase::hook:
      return "hook";
  }
  return {};
}

ExtCase parse_case(const std::string& s) {
  if (s == "two_row" || s == "two-row") return ExtCase::two_row;
  if (s == "two_column" || s == "two-column") return ExtCase::two_column;
  if (s == "hook") return ExtCase::hook;
  throw ParseError("unknown Ext case '" + s + "' (expected two_row, two_column or hook)");
}

namespace {

Integer coefficient(long long k, int p, int ti, int uj) {
  if (ti < 0 || uj < 0) return 0;
  return e_series(k, p, ti, uj).coeff(ti, uj);
}

}  // namespace

Integer ext_dim_formula(ExtCase c, const Partition& lambda, const Partition& mu, int j, int p) {
  check_prime(p);
  if (lambda.size() != mu.size()) throw ShapeMismatch("|lambda| != |mu|");
  if (j < 0) return 0;
  switch (c) {
    case ExtCase::two_row:
    case ExtCase::two_column: {
      const Partition l = c == ExtCase::two_row ? lambda : mu.conjugate();
      const Partition m = c == ExtCase::two_row ? mu : lambda.conjugate();
      if (l.length() > 2 || m.length() > 2)
        throw ShapeMismatch(c == ExtCase::two_row ? "two_row case needs partitions with at most two rows"
                                                  : "two_column case needs partitions with at most two columns");
      const int A = l[0], a = m[0], b = m[1];
      if (A < a) return 0;
      return coefficient(a - b, p, j, A - a);
    }
    case ExtCase::hook: {
      if (!lambda.is_hook() || !mu.is_hook()) throw ShapeMismatch("hook case needs hook partitions");
      const int A = lambda[0], B = lambda.length() - 1, a = mu[0];
      if (A < a) return 0;
      return coefficient(a + B - 1, p, A - a - j, A - a);
    }
  }
  return 0;
}

std::vector<Integer> e_polynomial(int m, int n, int p, int t_max) {
  if (n < 0 || m < n) throw DomainError("E_{m,n} needs m >= n >= 0");
  return e_series(m - n, p, t_max, n).u_slice(n);
}

std::vector<Integer> h_polynomial(int a, int b, int p, int t_max) {
  if (a < 1 || b < 0) throw DomainError("H_{a,b} needs a >= 1 and b >= 0");
  std::vector<Integer> out(t_max + 1);
  if (t_max < b + 1) return out;
  const auto e = e_polynomial(a - 1 + b, a - 1, p, t_max - b - 1);
  for (std::size_t i = 0; i < e.size(); ++i) out[i + b + 1] = e[i];
  return out;
}

long long p_part(long long x, int p) {
  long long q = 1;
  for (int v = comb::padic_valuation(x, p); v > 0; --v) q *= p;
  return q;
}

bool hook_nonvanishing(int n, int m, int p) {
  check_prime(p);
  if (n < 0 || m < n) throw DomainError("hook_nonvanishing needs m >= n >= 0");
  const long long pq = p * p_part(m - n + 1, p);
  return n % pq == 0 || (m + 1) % pq == 0;
}

bool gl2_same_block(const Partition& lambda, const Partition& mu, int p) {
  check_prime(p);
  if (lambda.size() != mu.size()) throw ShapeMismatch("|lambda| != |mu|");
  if (lambda.length() > 2 || mu.length() > 2) throw ShapeMismatch("GL_2 weights have at most two rows");
  Partition l = lambda, m = mu;
  if (l[0] < m[0]) std::swap(l, m);
  const long long A = l[0], B = l[1], a = m[0], b = m[1];
  const long long q = p_part(a - b + 1, p);
  if (p_part(A - B + 1, p) != q) return false;
  const long long pq = p * q;
  auto cong = [pq](long long x, long long y) { return ((x - y) % pq + pq) % pq == 0; };
  return (cong(A, a) && cong(B, b)) || (cong(A - 1, b - 2) && cong(B - 2, a - 1));
}

}  // namespace schurext::series
