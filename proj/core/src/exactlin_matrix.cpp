#include "schurext/errors.hpp"
#include "schurext/exactlin.hpp"
#include "schurext/guard.hpp"

#include <atomic>
#include <sstream>

namespace schurext {

std::string to_string(const Integer& x) { return x.str(); }

namespace {
std::atomic<int> g_complex_degree{8};
std::atomic<int> g_combinat_degree{12};
}  // namespace

DegreeGuard degree_guard() { return {g_complex_degree.load(), g_combinat_degree.load()}; }

void set_degree_guard(const DegreeGuard& g) {
  g_complex_degree = g.complex_degree;
  g_combinat_degree = g.combinat_degree;
}

void check_complex_degree(int d, const std::string& what) {
  int lim = g_complex_degree.load();
  if (d > lim)
    throw GuardError(what + ": degree " + std::to_string(d) + " exceeds complex guard " + std::to_string(lim));
}

void check_combinat_degree(int d, const std::string& what) {
  int lim = g_combinat_degree.load();
  if (d > lim)
    throw GuardError(what + ": degree " + std::to_string(d) + " exceeds combinatorics guard " +
                     std::to_string(lim));
}

}  // namespace schurext

namespace schurext::lin {

bool is_prime(unsigned long long n) {
  if (n < 2) return false;
  for (unsigned long long q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

Ring Ring::prime_field(unsigned p) {
  if (!is_prime(p)) throw DomainError("not a prime: " + std::to_string(p));
  Ring r;
  r.p_ = p;
  return r;
}

Integer Ring::reduce(const Integer& x) const {
  if (!p_) return x;
  Integer r = x % p_;
  if (r < 0) r += p_;
  return r;
}

std::string Ring::name() const { return p_ ? "F_" + std::to_string(p_) : "Z"; }

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace(i, 1);
  return m;
}

IntegerMatrix IntegerMatrix::from_dense(const std::vector<std::vector<Integer>>& a, std::size_t cols) {
  std::size_t c = a.empty() ? cols : a[0].size();
  IntegerMatrix m(a.size(), c);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != c) throw ShapeMismatch("ragged dense matrix");
    for (std::size_t j = 0; j < c; ++j)
      if (a[i][j] != 0) m.data_[i].emplace(j, a[i][j]);
  }
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<std::vector<Integer>> a;
  for (auto& r : rows) {
    a.emplace_back();
    for (long long x : r) a.back().emplace_back(x);
  }
  return from_dense(a);
}

std::size_t IntegerMatrix::nnz() const {
  std::size_t n = 0;
  for (auto& r : data_) n += r.size();
  return n;
}

Integer IntegerMatrix::at(std::size_t r, std::size_t c) const {
  auto it = data_.at(r).find(c);
  return it == data_[r].end() ? Integer(0) : it->second;
}

void IntegerMatrix::set(std::size_t r, std::size_t c, const Integer& v) {
  if (r >= rows_ || c >= cols_) throw ShapeMismatch("matrix index out of range");
  if (v == 0)
    data_[r].erase(c);
  else
    data_[r][c] = v;
}

void IntegerMatrix::add(std::size_t r, std::size_t c, const Integer& v) {
  if (r >= rows_ || c >= cols_) throw ShapeMismatch("matrix index out of range");
  if (v == 0) return;
  auto [it, fresh] = data_[r].try_emplace(c, v);
  if (!fresh) {
    it->second += v;
    if (it->second == 0) data_[r].erase(it);
  }
}

void IntegerMatrix::add_block(std::size_t r0, std::size_t c0, const IntegerMatrix& b, const Integer& scale) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw ShapeMismatch("block does not fit");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (auto& [j, v] : b.data_[i]) add(r0 + i, c0 + j, v * scale);
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (auto& [j, v] : data_[i]) t.data_[j].emplace(i, v);
  return t;
}

IntegerMatrix IntegerMatrix::reduced(const Ring& ring) const {
  if (!ring.is_field()) return *this;
  IntegerMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (auto& [j, v] : data_[i]) {
      Integer r = ring.reduce(v);
      if (r != 0) m.data_[i].emplace(j, r);
    }
  return m;
}

IntegerMatrix IntegerMatrix::scaled(const Integer& s) const {
  if (s == 0) return IntegerMatrix(rows_, cols_);
  IntegerMatrix m = *this;
  for (auto& r : m.data_)
    for (auto& [j, v] : r) v *= s;
  return m;
}

IntegerMatrix IntegerMatrix::column_range(std::size_t c0, std::size_t c1) const {
  IntegerMatrix m(rows_, c1 - c0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (auto it = data_[i].lower_bound(c0); it != data_[i].end() && it->first < c1; ++it)
      m.data_[i].emplace(it->first - c0, it->second);
  return m;
}

IntegerMatrix IntegerMatrix::row_range(std::size_t r0, std::size_t r1) const {
  IntegerMatrix m(r1 - r0, cols_);
  for (std::size_t i = r0; i < r1; ++i) m.data_[i - r0] = data_[i];
  return m;
}

std::vector<Integer> IntegerMatrix::column(std::size_t c) const {
  std::vector<Integer> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, c);
  return v;
}

std::vector<std::vector<Integer>> IntegerMatrix::dense() const {
  std::vector<std::vector<Integer>> a(rows_, std::vector<Integer>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (auto& [j, v] : data_[i]) a[i][j] = v;
  return a;
}

std::vector<Integer> IntegerMatrix::apply(const std::vector<Integer>& v) const {
  if (v.size() != cols_) throw ShapeMismatch("vector length does not match columns");
  std::vector<Integer> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (auto& [j, x] : data_[i]) out[i] += x * v[j];
  return out;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) throw ShapeMismatch("product shape mismatch");
  IntegerMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    auto& out = c.data_[i];
    for (auto& [k, x] : a.data_[i])
      for (auto& [j, y] : b.data_[k]) out[j] += x * y;
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return c;
}

IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeMismatch("sum shape mismatch");
  IntegerMatrix c = a;
  c.add_block(0, 0, b);
  return c;
}

IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeMismatch("difference shape mismatch");
  IntegerMatrix c = a;
  c.add_block(0, 0, b, -1);
  return c;
}

bool IntegerMatrix::operator==(const IntegerMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::string IntegerMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

IntegerMatrix hstack(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.rows() != b.rows()) throw ShapeMismatch("hstack row mismatch");
  IntegerMatrix m(a.rows(), a.cols() + b.cols());
  m.add_block(0, 0, a);
  m.add_block(0, a.cols(), b);
  return m;
}

IntegerMatrix vstack(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.cols()) throw ShapeMismatch("vstack column mismatch");
  IntegerMatrix m(a.rows() + b.rows(), a.cols());
  m.add_block(0, 0, a);
  m.add_block(a.rows(), 0, b);
  return m;
}

bool equal_over(const IntegerMatrix& a, const IntegerMatrix& b, const Ring& ring) {
  return a.reduced(ring) == b.reduced(ring);
}

}  // namespace schurext::lin
