#include "schurext/resolutions.hpp"
#include "schurext/errors.hpp"
#include "schurext/guard.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

namespace schurext::res {

std::string flavor_name(Flavor f) { return f == Flavor::divided ? "divided" : "exterior"; }

int ResolutionShape::length() const {
  int len = 0;
  for (auto& [deg, t] : terms)
    if (!t.empty()) len = std::max(len, deg);
  return len;
}

std::size_t summand_count(const ResolutionShape& shape) {
  std::size_t n = 0;
  for (auto& [deg, t] : shape.terms) n += t.size();
  return n;
}

namespace {

using Terms = std::map<int, std::vector<Partition>>;

std::mutex g_res_mutex;
std::map<Partition, Terms> g_res;

Terms recipe(const Partition& mu) {
  {
    std::lock_guard lock(g_res_mutex);
    if (auto it = g_res.find(mu); it != g_res.end()) return it->second;
  }
  Terms out;
  if (mu.length() <= 1) {
    out[0].push_back(mu);
  } else {
    const int first = mu[0];
    const Partition rest = mu.tail();
    for (auto& [deg, t] : recipe(rest))
      for (auto& lam : t) {
        std::vector<int> parts = lam.parts();
        parts.push_back(first);
        std::sort(parts.begin(), parts.end(), std::greater<>());
        out[deg].push_back(Partition(parts));
      }
    for (auto& gamma : comb::pieri_strips(first, rest)) {
      if (gamma == mu) continue;
      for (auto& [deg, t] : recipe(gamma)) out[deg + 1].insert(out[deg + 1].end(), t.begin(), t.end());
    }
  }
  for (auto& [deg, t] : out) std::sort(t.begin(), t.end(), std::greater<>());
  std::lock_guard lock(g_res_mutex);
  g_res.emplace(mu, out);
  return out;
}

}  // namespace

ResolutionShape weyl_resolution_shape(const Partition& mu) {
  check_combinat_degree(mu.size(), "weyl_resolution_shape");
  return {mu, Flavor::divided, recipe(mu)};
}

ResolutionShape schur_resolution_shape(const Partition& mu) {
  check_combinat_degree(mu.size(), "schur_resolution_shape");
  return {mu, Flavor::exterior, recipe(mu.conjugate())};
}

// ---- symmetric polynomials --------------------------------------------------

SymPoly SymPoly::constant(int nvars, const Integer& c) {
  SymPoly p(nvars);
  p.add(Exponent(nvars, 0), c);
  return p;
}

Integer SymPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

void SymPoly::add(const Exponent& e, const Integer& c) {
  if (static_cast<int>(e.size()) != nvars_) throw ShapeMismatch("exponent length differs from variable count");
  if (c == 0) return;
  auto& v = terms_[e];
  v += c;
  if (v == 0) terms_.erase(e);
}

SymPoly SymPoly::complete(int k, int nvars) {
  SymPoly p(nvars);
  if (k < 0) return p;
  if (nvars == 0) return k == 0 ? constant(0, 1) : p;
  for (auto& w : comb::enumerate_weights(k, nvars, false, 0)) p.add(w, 1);
  return p;
}

SymPoly SymPoly::elementary(int k, int nvars) {
  SymPoly p(nvars);
  if (k < 0 || k > nvars) return p;
  Exponent e(nvars, 0);
  std::function<void(int, int)> rec = [&](int from, int left) {
    if (!left) {
      p.add(e, 1);
      return;
    }
    for (int i = from; i < nvars; ++i) {
      e[i] = 1;
      rec(i + 1, left - 1);
      e[i] = 0;
    }
  };
  rec(0, k);
  return p;
}

SymPoly SymPoly::schur(const Partition& lambda, int nvars) {
  SymPoly p(nvars);
  if (lambda.length() > nvars) return p;
  if (nvars == 0) return constant(0, 1);
  for (auto& w : comb::enumerate_weights(lambda.size(), nvars, false, 0)) p.add(w, comb::kostka_number(lambda, w));
  return p;
}

bool SymPoly::is_symmetric() const {
  for (int i = 0; i + 1 < nvars_; ++i)
    for (auto& [e, c] : terms_) {
      Exponent f = e;
      std::swap(f[i], f[i + 1]);
      if (coeff(f) != c) return false;
    }
  return true;
}

SymPoly operator+(const SymPoly& a, const SymPoly& b) {
  if (a.nvars_ != b.nvars_) throw ShapeMismatch("polynomials in different numbers of variables");
  SymPoly out = a;
  for (auto& [e, c] : b.terms_) out.add(e, c);
  return out;
}

SymPoly operator-(const SymPoly& a, const SymPoly& b) {
  if (a.nvars_ != b.nvars_) throw ShapeMismatch("polynomials in different numbers of variables");
  SymPoly out = a;
  for (auto& [e, c] : b.terms_) out.add(e, -c);
  return out;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  if (a.nvars_ != b.nvars_) throw ShapeMismatch("polynomials in different numbers of variables");
  SymPoly out(a.nvars_);
  SymPoly::Exponent e(a.nvars_);
  for (auto& [ea, ca] : a.terms_)
    for (auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add(e, ca * cb);
    }
  return out;
}

SymPoly product_character(const Partition& lambda, Flavor flavor, int nvars) {
  SymPoly out = SymPoly::constant(nvars, 1);
  for (int part : lambda.parts())
    out = out * (flavor == Flavor::divided ? SymPoly::complete(part, nvars) : SymPoly::elementary(part, nvars));
  return out;
}

bool euler_check(const ResolutionShape& shape) {
  const int v = shape.target.size();
  SymPoly sum(v);
  for (auto& [deg, t] : shape.terms)
    for (auto& lam : t) {
      const SymPoly c = product_character(lam, shape.flavor, v);
      sum = deg % 2 ? sum - c : sum + c;
    }
  return sum == SymPoly::schur(shape.target, v);
}

}  // namespace schurext::res
