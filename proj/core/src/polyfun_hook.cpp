#include "polyfun_internal.hpp"
#include "schurext/errors.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>

namespace schurext::poly {

void add_term(HookElement& x, const TableauMonomial& m, const Integer& c) {
  if (c == 0) return;
  auto& v = x[m];
  v += c;
  if (v == 0) x.erase(m);
}

std::vector<TableauMonomial> hook_ambient_monomials(int a, int b, const Weight& w) {
  if (a < 0 || b < 0) throw DomainError("hook degrees must be nonnegative");
  if (comb::weight_size(w) != a + b) return {};
  const int n = static_cast<int>(w.size());
  std::vector<TableauMonomial> out;
  std::vector<int> beta;
  std::function<void(int)> rec = [&](int k) {
    if (static_cast<int>(beta.size()) == b) {
      TableauMonomial m{w, beta};
      for (int x : beta) --m.alpha[x - 1];
      out.push_back(m);
      return;
    }
    for (int j = k; j < n; ++j) {
      if (!w[j]) continue;
      beta.push_back(j + 1);
      rec(j + 1);
      beta.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TableauMonomial> hook_standard_basis(int a, int b, const Weight& w) {
  std::vector<TableauMonomial> out;
  for (auto& m : hook_ambient_monomials(a, b, w))
    if (m.is_standard() && a > 0) out.push_back(m);
  std::sort(out.begin(), out.end(), [](const TableauMonomial& x, const TableauMonomial& y) {
    return comb::reading_word(x.tableau()) < comb::reading_word(y.tableau());
  });
  return out;
}

namespace {

// e_beta ^ e_i as a sorted index list; sign 0 when i already occurs.
int wedge_in(std::vector<int>& beta, int i) {
  int after = 0;
  for (int x : beta) {
    if (x == i) return 0;
    if (x > i) ++after;
  }
  beta.insert(std::upper_bound(beta.begin(), beta.end(), i), i);
  return after % 2 ? -1 : 1;
}

struct HookData {
  std::vector<TableauMonomial> basis;
  std::map<TableauMonomial, std::size_t> index;
  std::once_flag generic_built;
  std::vector<TableauMonomial> ambient;
  std::map<TableauMonomial, std::size_t> ambient_index;
  lin::LatticeSolver solver;
};

std::mutex g_hook_mutex;
std::map<std::tuple<int, int, Weight>, std::shared_ptr<HookData>> g_hook;

std::shared_ptr<HookData> hook_data(int a, int b, const Weight& w) {
  std::lock_guard lock(g_hook_mutex);
  auto& slot = g_hook[{a, b, w}];
  if (!slot) {
    slot = std::make_shared<HookData>();
    slot->basis = hook_standard_basis(a, b, w);
    for (std::size_t i = 0; i < slot->basis.size(); ++i) slot->index[slot->basis[i]] = i;
  }
  return slot;
}

}  // namespace

HookElement upsilon(const HookElement& x) {
  HookElement out;
  for (auto& [m, c] : x)
    for (int i = 0; i < m.n(); ++i) {
      if (!m.alpha[i]) continue;
      TableauMonomial t = m;
      --t.alpha[i];
      int s = wedge_in(t.beta, i + 1);
      if (s) add_term(out, t, c * s);
    }
  return out;
}

HookElement push_monomials(const HookElement& x, const std::vector<int>& target, int len) {
  HookElement out;
  for (auto& [m, c] : x) {
    if (static_cast<int>(target.size()) != m.n()) throw ShapeMismatch("position map length does not match monomial");
    TableauMonomial t{push_weight(m.alpha, target, len), {}};
    bool zero = false;
    for (int b : m.beta) {
      int v = target[b - 1] + 1;
      if (!t.beta.empty() && t.beta.back() == v) {
        zero = true;
        break;
      }
      t.beta.push_back(v);
    }
    if (zero) continue;
    add_term(out, t, c * detail::merge_coefficient(m.alpha, target, len));
  }
  return out;
}

std::vector<Integer> hook_reduce_explicit(const HookElement& x, int a, int b, const Weight& w) {
  auto data = hook_data(a, b, w);
  std::vector<Integer> out(data->basis.size());
  HookElement work = x;
  // Each rewrite raises beta_1, so the loop terminates.
  while (!work.empty()) {
    auto it = work.begin();
    TableauMonomial m = it->first;
    Integer c = it->second;
    work.erase(it);
    if (m.weight() != w || static_cast<int>(m.beta.size()) != b || comb::weight_size(m.alpha) != a)
      throw ShapeMismatch("monomial " + m.to_string() + " is not in the expected weight space");
    if (auto pos = data->index.find(m); pos != data->index.end()) {
      out[pos->second] += c;
      continue;
    }
    if (m.beta.empty() || a == 0) continue;  // zero in the quotient
    const int b1 = m.beta[0];
    Weight ap = m.alpha;
    ++ap[b1 - 1];
    std::vector<int> rest(m.beta.begin() + 1, m.beta.end());
    const int sign = b % 2 ? -1 : 1;
    for (int i = 0; i < m.n(); ++i) {
      if (!m.alpha[i] || i + 1 == b1) continue;
      TableauMonomial t{ap, rest};
      --t.alpha[i];
      int s = wedge_in(t.beta, i + 1);
      if (s) add_term(work, t, c * sign * s);
    }
  }
  return out;
}

std::vector<Integer> hook_reduce(const HookElement& x, int a, int b, const Weight& w) {
  auto data = hook_data(a, b, w);
  std::call_once(data->generic_built, [&] {
    data->ambient = hook_ambient_monomials(a, b, w);
    for (std::size_t i = 0; i < data->ambient.size(); ++i) data->ambient_index[data->ambient[i]] = i;
    const std::size_t amb = data->ambient.size();
    IntegerMatrix rel(amb, 0);
    if (b > 0) {
      auto src = hook_ambient_monomials(a + 1, b - 1, w);
      rel = IntegerMatrix(amb, src.size());
      for (std::size_t j = 0; j < src.size(); ++j)
        for (auto& [m, c] : upsilon(HookElement{{src[j], 1}})) rel.set(data->ambient_index.at(m), j, c);
    }
    IntegerMatrix rel_basis = lin::Submodule(rel, Ring::integers()).canonical().transpose();
    IntegerMatrix std_cols(amb, data->basis.size());
    for (std::size_t j = 0; j < data->basis.size(); ++j) std_cols.set(data->ambient_index.at(data->basis[j]), j, 1);
    data->solver = lin::LatticeSolver(lin::hstack(std_cols, rel_basis));
  });
  std::vector<Integer> v(data->ambient.size());
  for (auto& [m, c] : x) {
    auto it = data->ambient_index.find(m);
    if (it == data->ambient_index.end())
      throw ShapeMismatch("monomial " + m.to_string() + " is not in the expected weight space");
    v[it->second] += c;
  }
  if (a == 0) return {};
  auto sol = data->solver.solve(std::move(v));
  if (!sol) throw SolveFailure("element is not in the span of the hook presentation");
  return std::vector<Integer>(sol->begin(), sol->begin() + data->basis.size());
}

namespace detail {

IntegerMatrix hook_monotone(int a, int b, const Weight& w, const std::vector<int>& target, int len) {
  auto src = hook_data(a, b, w);
  const Weight w2 = push_weight(w, target, len);
  auto dst = hook_data(a, b, w2);
  IntegerMatrix m(dst->basis.size(), src->basis.size());
  for (std::size_t c = 0; c < src->basis.size(); ++c) {
    auto col = hook_reduce_explicit(push_monomials(HookElement{{src->basis[c], 1}}, target, len), a, b, w2);
    for (std::size_t r = 0; r < col.size(); ++r)
      if (col[r] != 0) m.set(r, c, col[r]);
  }
  return m;
}

void clear_hook_caches() {
  std::lock_guard lock(g_hook_mutex);
  g_hook.clear();
}

}  // namespace detail

}  // namespace schurext::poly
