#include "polyfun_internal.hpp"
#include "schurext/errors.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <shared_mutex>

namespace schurext::poly {

namespace {

// Sorts `v` in place; returns the permutation sign, or 0 on a repeated entry.
int sort_sign(std::vector<int>& v) {
  int sign = 1;
  for (std::size_t i = 1; i < v.size(); ++i)
    for (std::size_t j = i; j > 0 && v[j - 1] >= v[j]; --j) {
      if (v[j - 1] == v[j]) return 0;
      std::swap(v[j - 1], v[j]);
      sign = -sign;
    }
  return sign;
}

struct BoxData {
  Partition lambda;
  Weight w;
  std::vector<Tableau> basis;
  std::map<Tableau, std::size_t> basis_index;

  std::once_flag built;
  std::map<std::vector<int>, std::size_t> key_index;
  std::vector<std::vector<int>> keys;
  IntegerMatrix coords;
  lin::LatticeSolver solver;

  std::mutex memo_mutex;
  std::map<Tableau, std::vector<Integer>> memo;

  void build() {
    std::call_once(built, [this] {
      std::vector<std::map<std::vector<int>, Integer>> images;
      for (auto& t : basis) {
        images.push_back(box_image(lambda, t));
        for (auto& [k, c] : images.back())
          if (key_index.emplace(k, 0).second) keys.push_back(k);
      }
      std::sort(keys.begin(), keys.end());
      for (std::size_t i = 0; i < keys.size(); ++i) key_index[keys[i]] = i;
      coords = IntegerMatrix(keys.size(), basis.size());
      for (std::size_t c = 0; c < images.size(); ++c)
        for (auto& [k, v] : images[c]) coords.set(key_index[k], c, v);
      solver = lin::LatticeSolver(coords);
    });
  }
};

std::shared_mutex g_box_mutex;
std::map<std::pair<Partition, Weight>, std::shared_ptr<BoxData>> g_box;

std::shared_ptr<BoxData> box_data(const Partition& lambda, const Weight& w) {
  auto key = std::make_pair(lambda, w);
  {
    std::shared_lock lock(g_box_mutex);
    auto it = g_box.find(key);
    if (it != g_box.end()) return it->second;
  }
  auto d = std::make_shared<BoxData>();
  d->lambda = lambda;
  d->w = w;
  d->basis = comb::semistandard_tableaux(lambda, w);
  for (std::size_t i = 0; i < d->basis.size(); ++i) d->basis_index[d->basis[i]] = i;
  std::unique_lock lock(g_box_mutex);
  return g_box.emplace(key, d).first->second;
}

Weight content(const Tableau& t, int n) {
  Weight w(n, 0);
  for (auto& row : t)
    for (int x : row) {
      if (x < 1 || x > n) throw DomainError("tableau entry out of range");
      ++w[x - 1];
    }
  return w;
}

}  // namespace

std::map<std::vector<int>, Integer> box_image(const Partition& lambda, const Tableau& rows) {
  if (static_cast<int>(rows.size()) != lambda.length()) throw ShapeMismatch("row tableau does not match shape");
  std::vector<std::vector<std::vector<int>>> perms(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != lambda[r]) throw ShapeMismatch("row tableau does not match shape");
    std::vector<int> v = rows[r];
    std::sort(v.begin(), v.end());
    do perms[r].push_back(v);
    while (std::next_permutation(v.begin(), v.end()));
  }
  const Partition conj = lambda.conjugate();
  std::map<std::vector<int>, Integer> out;
  std::vector<const std::vector<int>*> choice(rows.size());
  std::function<void(std::size_t)> rec = [&](std::size_t r) {
    if (r == rows.size()) {
      std::vector<int> key;
      int sign = 1;
      for (int j = 0; j < conj.length(); ++j) {
        std::vector<int> col;
        for (int i = 0; i < conj[j]; ++i) col.push_back((*choice[i])[j]);
        int s = sort_sign(col);
        if (!s) return;
        sign *= s;
        key.insert(key.end(), col.begin(), col.end());
      }
      auto& c = out[key];
      c += sign;
      if (c == 0) out.erase(key);
      return;
    }
    for (auto& p : perms[r]) {
      choice[r] = &p;
      rec(r + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<Tableau> row_tableaux(const Partition& lambda, const Weight& w) {
  if (lambda.size() != comb::weight_size(w)) throw DomainError("shape and content sizes differ");
  std::vector<Tableau> out;
  Tableau t(lambda.length());
  Weight left = w;
  std::function<void(int)> rec = [&](int r) {
    if (r == lambda.length()) {
      out.push_back(t);
      return;
    }
    std::vector<Weight> choices;
    // multisets of size lambda_r drawn from `left`
    std::vector<int> cur(left.size(), 0);
    std::function<void(std::size_t, int)> pick = [&](std::size_t k, int need) {
      if (k == left.size()) {
        if (!need) choices.push_back(cur);
        return;
      }
      for (int v = std::min(need, left[k]); v >= 0; --v) {
        cur[k] = v;
        pick(k + 1, need - v);
      }
      cur[k] = 0;
    };
    pick(0, lambda[r]);
    for (auto& c : choices) {
      t[r].clear();
      for (std::size_t k = 0; k < c.size(); ++k) {
        t[r].insert(t[r].end(), c[k], static_cast<int>(k) + 1);
        left[k] -= c[k];
      }
      rec(r + 1);
      for (std::size_t k = 0; k < c.size(); ++k) left[k] += c[k];
    }
    t[r].clear();
  };
  rec(0);
  std::sort(out.begin(), out.end(),
            [](const Tableau& a, const Tableau& b) { return comb::reading_word(a) < comb::reading_word(b); });
  return out;
}

std::vector<Integer> box_straighten(const Partition& lambda, const Tableau& rows, int n) {
  const Weight w = content(rows, n);
  auto d = box_data(lambda, w);
  Tableau sorted = rows;
  for (auto& r : sorted) std::sort(r.begin(), r.end());
  if (auto it = d->basis_index.find(sorted); it != d->basis_index.end()) {
    std::vector<Integer> e(d->basis.size());
    e[it->second] = 1;
    return e;
  }
  {
    std::lock_guard lock(d->memo_mutex);
    if (auto it = d->memo.find(sorted); it != d->memo.end()) return it->second;
  }
  d->build();
  std::vector<Integer> v(d->keys.size());
  for (auto& [k, c] : box_image(lambda, sorted)) {
    auto it = d->key_index.find(k);
    if (it == d->key_index.end())
      throw SolveFailure("box image of " + comb::tableau_to_string(sorted) + " leaves the Weyl lattice");
    v[it->second] = c;
  }
  auto sol = d->solver.solve(std::move(v));
  if (!sol) throw SolveFailure("box image of " + comb::tableau_to_string(sorted) + " is not in the Weyl lattice");
  std::lock_guard lock(d->memo_mutex);
  return d->memo.emplace(sorted, *sol).first->second;
}

namespace detail {

std::vector<Tableau> weyl_basis(const Partition& lambda, const Weight& w) {
  return box_data(lambda, w)->basis;
}

IntegerMatrix box_monotone(const Partition& lambda, const Weight& w, const std::vector<int>& target, int len) {
  auto src = box_data(lambda, w);
  const Weight w2 = push_weight(w, target, len);
  auto dst = box_data(lambda, w2);
  IntegerMatrix m(dst->basis.size(), src->basis.size());
  for (std::size_t c = 0; c < src->basis.size(); ++c) {
    const Tableau& t = src->basis[c];
    Tableau img = t;
    Integer coef = 1;
    for (auto& row : img) {
      Weight rw(w.size(), 0);
      for (int& x : row) {
        ++rw[x - 1];
        x = target[x - 1] + 1;
      }
      coef *= merge_coefficient(rw, target, len);
    }
    auto col = box_straighten(lambda, img, len);
    for (std::size_t r = 0; r < col.size(); ++r)
      if (col[r] != 0) m.set(r, c, coef * col[r]);
  }
  return m;
}

void box_ambient(const Partition& lambda, const Weight& w, IntegerMatrix& coords,
                 std::vector<std::vector<int>>& keys) {
  auto d = box_data(lambda, w);
  d->build();
  coords = d->coords;
  keys = d->keys;
}

void clear_weyl_caches() {
  std::unique_lock lock(g_box_mutex);
  g_box.clear();
}

}  // namespace detail

}  // namespace schurext::poly
