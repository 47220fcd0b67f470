#include "schurext/errors.hpp"
#include "schurext/exactlin.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace schurext::lin {

namespace {

using Dense = std::vector<std::vector<Integer>>;

Integer iabs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

void row_axpy(std::vector<Integer>& dst, const std::vector<Integer>& src, const Integer& q) {
  for (std::size_t j = 0; j < dst.size(); ++j)
    if (src[j] != 0) dst[j] -= q * src[j];
}

// Turns a list of nonzero diagonal entries into a divisibility chain.
void to_divisibility_chain(std::vector<Integer>& d) {
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (d[j] % d[i] == 0) continue;
      Integer g = boost::multiprecision::gcd(d[i], d[j]);
      Integer l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
}

}  // namespace

std::vector<Integer> smith_normal_form(const IntegerMatrix& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<std::map<std::size_t, Integer>> a(nr);
  std::vector<std::set<std::size_t>> col_rows(nc);
  for (std::size_t i = 0; i < nr; ++i) {
    a[i] = m.row(i);
    for (auto& [j, v] : a[i]) col_rows[j].insert(i);
  }
  std::set<std::size_t> alive;
  for (std::size_t i = 0; i < nr; ++i)
    if (!a[i].empty()) alive.insert(i);

  auto set_entry = [&](std::size_t i, std::size_t j, Integer v) {
    if (v == 0) {
      if (a[i].erase(j)) col_rows[j].erase(i);
    } else {
      auto [it, fresh] = a[i].try_emplace(j, v);
      if (fresh)
        col_rows[j].insert(i);
      else
        it->second = std::move(v);
    }
  };
  // row_i -= q * row_r
  auto row_op = [&](std::size_t i, std::size_t r, const Integer& q) {
    for (auto& [j, v] : a[r]) {
      auto it = a[i].find(j);
      if (it == a[i].end()) {
        a[i].emplace(j, -q * v);
        col_rows[j].insert(i);
      } else {
        it->second -= q * v;
        if (it->second == 0) {
          a[i].erase(it);
          col_rows[j].erase(i);
        }
      }
    }
  };

  std::vector<Integer> diag;
  while (true) {
    std::size_t pr = nr, pc = nc;
    Integer best;
    for (std::size_t i : alive) {
      for (auto& [j, v] : a[i]) {
        Integer av = iabs(v);
        if (pr == nr || av < best) {
          best = av;
          pr = i;
          pc = j;
          if (best == 1) break;
        }
      }
      if (best == 1) break;
    }
    if (pr == nr) break;

    for (bool changed = true; changed;) {
      changed = false;
      const Integer piv = a[pr].at(pc);
      std::vector<std::size_t> others;
      for (std::size_t i : col_rows[pc])
        if (i != pr) others.push_back(i);
      for (std::size_t i : others) {
        Integer q = a[i].at(pc) / piv;
        if (q != 0) row_op(i, pr, q);
        if (a[i].count(pc)) {
          pr = i;
          changed = true;
          break;
        }
      }
      if (changed) continue;
      // Column pc is now zero outside row pr; column operations touch row pr only.
      std::vector<std::pair<std::size_t, Integer>> rest;
      for (auto& [j, v] : a[pr])
        if (j != pc) rest.emplace_back(j, v);
      for (auto& [j, v] : rest) {
        Integer r = v - (v / piv) * piv;
        set_entry(pr, j, r);
        if (r != 0) {
          pc = j;
          changed = true;
          break;
        }
      }
    }
    diag.push_back(iabs(a[pr].at(pc)));
    set_entry(pr, pc, 0);
    alive.erase(pr);
    for (auto it = alive.begin(); it != alive.end();) it = a[*it].empty() ? alive.erase(it) : std::next(it);
  }
  std::sort(diag.begin(), diag.end());
  to_divisibility_chain(diag);
  diag.resize(std::min(nr, nc), Integer(0));
  return diag;
}

SmithDecomposition smith_decomposition(const IntegerMatrix& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  Dense a = m.dense();
  Dense u = IntegerMatrix::identity(nr).dense();
  Dense v = IntegerMatrix::identity(nc).dense();

  auto swap_cols = [&](Dense& x, std::size_t c1, std::size_t c2) {
    for (auto& row : x) std::swap(row[c1], row[c2]);
  };
  auto col_axpy = [&](Dense& x, std::size_t dst, std::size_t src, const Integer& q) {
    for (auto& row : x) row[dst] -= q * row[src];
  };

  const std::size_t r = std::min(nr, nc);
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < r; ++t) {
    std::size_t bi = nr, bj = nc;
    for (std::size_t i = t; i < nr; ++i)
      for (std::size_t j = t; j < nc; ++j)
        if (a[i][j] != 0 && (bi == nr || iabs(a[i][j]) < iabs(a[bi][bj]))) bi = i, bj = j;
    if (bi == nr) break;
    std::swap(a[t], a[bi]);
    std::swap(u[t], u[bi]);
    swap_cols(a, t, bj);
    swap_cols(v, t, bj);

    while (true) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < nr; ++i) {
        if (a[i][t] == 0) continue;
        Integer q = a[i][t] / a[t][t];
        row_axpy(a[i], a[t], q);
        row_axpy(u[i], u[t], q);
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          std::swap(u[t], u[i]);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < nc; ++j) {
        if (a[t][j] == 0) continue;
        Integer q = a[t][j] / a[t][t];
        col_axpy(a, j, t, q);
        col_axpy(v, j, t, q);
        if (a[t][j] != 0) {
          swap_cols(a, t, j);
          swap_cols(v, t, j);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Pivot isolated; enforce divisibility of the remaining block.
      std::size_t fi = nr;
      for (std::size_t i = t + 1; i < nr && fi == nr; ++i)
        for (std::size_t j = t + 1; j < nc; ++j)
          if (a[i][j] % a[t][t] != 0) {
            fi = i;
            break;
          }
      if (fi == nr) break;
      row_axpy(a[t], a[fi], Integer(-1));
      row_axpy(u[t], u[fi], Integer(-1));
    }
    if (a[t][t] < 0) {
      for (auto& x : a[t]) x = -x;
      for (auto& x : u[t]) x = -x;
    }
    diag.push_back(a[t][t]);
  }
  diag.resize(r, Integer(0));
  return {diag, IntegerMatrix::from_dense(u, nr), IntegerMatrix::from_dense(v, nc)};
}

HermiteDecomposition hermite_decomposition(const IntegerMatrix& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  Dense a = m.dense();
  Dense u = IntegerMatrix::identity(nr).dense();
  HermiteDecomposition out;
  std::size_t r = 0;
  for (std::size_t j = 0; j < nc && r < nr; ++j) {
    while (true) {
      std::size_t best = nr;
      for (std::size_t i = r; i < nr; ++i)
        if (a[i][j] != 0 && (best == nr || iabs(a[i][j]) < iabs(a[best][j]))) best = i;
      if (best == nr) break;
      std::swap(a[r], a[best]);
      std::swap(u[r], u[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < nr; ++i) {
        if (a[i][j] == 0) continue;
        Integer q = a[i][j] / a[r][j];
        row_axpy(a[i], a[r], q);
        row_axpy(u[i], u[r], q);
        if (a[i][j] != 0) clean = false;
      }
      if (clean) break;
    }
    if (a[r][j] == 0) continue;
    if (a[r][j] < 0) {
      for (auto& x : a[r]) x = -x;
      for (auto& x : u[r]) x = -x;
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (a[i][j] == 0) continue;
      Integer q = floor_div(a[i][j], a[r][j]);
      if (q != 0) {
        row_axpy(a[i], a[r], q);
        row_axpy(u[i], u[r], q);
      }
    }
    out.pivots.push_back(j);
    ++r;
  }
  out.rank = r;
  out.h = IntegerMatrix::from_dense(a, nc);
  out.u = IntegerMatrix::from_dense(u, nr);
  return out;
}

IntegerMatrix hermite_normal_form(const IntegerMatrix& m) {
  auto hd = hermite_decomposition(m);
  return hd.h.row_range(0, hd.rank);
}

namespace {

using ModRows = std::vector<std::vector<std::uint64_t>>;

ModRows to_mod(const IntegerMatrix& m, unsigned p) {
  ModRows a(m.rows(), std::vector<std::uint64_t>(m.cols(), 0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (auto& [j, v] : m.row(i)) {
      Integer r = v % p;
      if (r < 0) r += p;
      a[i][j] = static_cast<std::uint64_t>(r);
    }
  return a;
}

std::uint64_t inv_mod(std::uint64_t x, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  while (e) {
    if (e & 1) r = r * x % p;
    x = x * x % p;
    e >>= 1;
  }
  return r;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref_mod(ModRows& a, std::size_t nc, std::uint64_t p) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t j = 0; j < nc && r < a.size(); ++j) {
    std::size_t s = r;
    while (s < a.size() && a[s][j] == 0) ++s;
    if (s == a.size()) continue;
    std::swap(a[r], a[s]);
    std::uint64_t inv = inv_mod(a[r][j], p);
    for (auto& x : a[r]) x = x * inv % p;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][j] == 0) continue;
      std::uint64_t f = a[i][j];
      for (std::size_t k = j; k < nc; ++k)
        if (a[r][k]) a[i][k] = (a[i][k] + (p - f) * a[r][k]) % p;
    }
    piv.push_back(j);
    ++r;
  }
  return piv;
}

}  // namespace

std::size_t rank_mod_p(const IntegerMatrix& m, unsigned p) {
  // Eliminate along the shorter side.
  ModRows a = m.rows() <= m.cols() ? to_mod(m, p) : to_mod(m.transpose(), p);
  std::size_t nc = a.empty() ? 0 : a[0].size();
  std::size_t r = 0;
  for (std::size_t j = 0; j < nc && r < a.size(); ++j) {
    std::size_t s = r;
    while (s < a.size() && a[s][j] == 0) ++s;
    if (s == a.size()) continue;
    std::swap(a[r], a[s]);
    std::uint64_t inv = inv_mod(a[r][j], p);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][j] == 0) continue;
      std::uint64_t f = a[i][j] * inv % p;
      for (std::size_t k = j; k < nc; ++k)
        if (a[r][k]) a[i][k] = (a[i][k] + (p - f) * a[r][k]) % p;
    }
    ++r;
  }
  return r;
}

std::size_t rank_over(const IntegerMatrix& m, const Ring& ring) {
  if (ring.is_field()) return rank_mod_p(m, ring.p());
  std::size_t r = 0;
  for (auto& d : smith_normal_form(m))
    if (d != 0) ++r;
  return r;
}

IntegerMatrix kernel_basis(const IntegerMatrix& m, const Ring& ring) {
  const std::size_t n = m.cols();
  if (!ring.is_field()) {
    auto hd = hermite_decomposition(m.transpose());
    IntegerMatrix k(n, n - hd.rank);
    for (std::size_t c = hd.rank; c < n; ++c)
      for (auto& [j, v] : hd.u.row(c)) k.set(j, c - hd.rank, v);
    return k;
  }
  const std::uint64_t p = ring.p();
  ModRows a = to_mod(m, ring.p());
  auto piv = rref_mod(a, n, p);
  std::vector<bool> is_piv(n, false);
  for (auto j : piv) is_piv[j] = true;
  IntegerMatrix k(n, n - piv.size());
  std::size_t c = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    k.set(f, c, 1);
    for (std::size_t r = 0; r < piv.size(); ++r)
      if (a[r][f]) k.set(piv[r], c, Integer((p - a[r][f]) % p));
    ++c;
  }
  return k;
}

LatticeSolver::LatticeSolver(const IntegerMatrix& basis) : ambient_(basis.rows()), rank_(basis.cols()) {
  auto hd = hermite_decomposition(basis.transpose());
  if (hd.rank != rank_) throw DomainError("lattice basis columns are not independent");
  h_.resize(rank_);
  for (std::size_t k = 0; k < rank_; ++k) {
    h_[k].assign(ambient_, Integer(0));
    for (auto& [j, v] : hd.h.row(k)) h_[k][j] = v;
  }
  pivots_ = hd.pivots;
  ut_ = hd.u.transpose();
}

std::optional<std::vector<Integer>> LatticeSolver::solve(std::vector<Integer> v) const {
  if (v.size() != ambient_) throw ShapeMismatch("lattice solve: ambient length mismatch");
  std::vector<Integer> y(rank_);
  for (std::size_t k = 0; k < rank_; ++k) {
    const auto p = pivots_[k];
    if (v[p] == 0) continue;
    if (v[p] % h_[k][p] != 0) return std::nullopt;
    y[k] = v[p] / h_[k][p];
    row_axpy(v, h_[k], y[k]);
  }
  for (auto& x : v)
    if (x != 0) return std::nullopt;
  return ut_.apply(y);
}

namespace {

IntegerMatrix canonical_rows(const IntegerMatrix& gens, std::size_t ambient, const Ring& ring) {
  IntegerMatrix rows = gens.transpose();
  if (!ring.is_field()) {
    if (rows.rows() == 0) return IntegerMatrix(0, ambient);
    return hermite_normal_form(rows);
  }
  ModRows a = to_mod(rows, ring.p());
  auto piv = rref_mod(a, ambient, ring.p());
  IntegerMatrix c(piv.size(), ambient);
  for (std::size_t r = 0; r < piv.size(); ++r)
    for (std::size_t j = 0; j < ambient; ++j)
      if (a[r][j]) c.set(r, j, Integer(a[r][j]));
  return c;
}

}  // namespace

Submodule::Submodule(std::size_t ambient, const Ring& ring)
    : ambient_(ambient), ring_(ring), gens_(ambient, 0), canon_(0, ambient) {}

Submodule::Submodule(const IntegerMatrix& generators, const Ring& ring)
    : ambient_(generators.rows()), ring_(ring) {
  canon_ = canonical_rows(generators, ambient_, ring_);
  gens_ = canon_.transpose();
}

Submodule Submodule::whole(std::size_t n, const Ring& ring) { return Submodule(IntegerMatrix::identity(n), ring); }

Submodule Submodule::kernel(const IntegerMatrix& f, const Ring& ring) {
  return Submodule(kernel_basis(f, ring), ring);
}

Submodule Submodule::image(const IntegerMatrix& f, const Ring& ring) { return Submodule(f, ring); }

Submodule Submodule::operator+(const Submodule& o) const {
  if (o.ambient_ != ambient_) throw ShapeMismatch("submodule sum: ambient mismatch");
  return Submodule(hstack(gens_, o.gens_), ring_);
}

Submodule Submodule::intersect(const Submodule& o) const {
  if (o.ambient_ != ambient_) throw ShapeMismatch("submodule intersection: ambient mismatch");
  IntegerMatrix k = kernel_basis(hstack(gens_, o.gens_.scaled(-1)), ring_);
  return Submodule(gens_ * k.row_range(0, gens_.cols()), ring_);
}

Submodule Submodule::mapped(const IntegerMatrix& f) const {
  if (f.cols() != ambient_) throw ShapeMismatch("submodule image: shape mismatch");
  return Submodule(f * gens_, ring_);
}

Submodule Submodule::preimage(const IntegerMatrix& f) const {
  if (f.rows() != ambient_) throw ShapeMismatch("submodule preimage: shape mismatch");
  IntegerMatrix k = kernel_basis(hstack(f, gens_.scaled(-1)), ring_);
  return Submodule(k.row_range(0, f.cols()), ring_);
}

bool Submodule::operator==(const Submodule& o) const {
  return ambient_ == o.ambient_ && canon_ == o.canon_;
}

bool Submodule::contains(const Submodule& o) const { return (*this + o) == *this; }

}  // namespace schurext::lin
