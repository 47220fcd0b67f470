#include "schurext/combinat.hpp"
#include "schurext/errors.hpp"
#include "schurext/guard.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

namespace schurext::comb {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition has a non-positive interior part");
    if (i && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.empty()) throw ParseError("empty partition");
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string item;
  auto number = [&](const std::string& t) {
    if (t.empty() || t.size() > 6 || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(c); }))
      throw ParseError("bad partition token '" + t + "' in \"" + std::string(text) + "\"");
    return std::stoi(t);
  };
  while (std::getline(ss, item, ',')) {
    auto caret = item.find('^');
    int v = number(item.substr(0, caret));
    int e = caret == std::string::npos ? 1 : number(item.substr(caret + 1));
    if (e > 10000) throw ParseError("exponent too large in \"" + std::string(text) + "\"");
    parts.insert(parts.end(), e, v);
  }
  if (!s.empty() && s.back() == ',') throw ParseError("trailing comma in \"" + std::string(text) + "\"");
  try {
    return Partition(parts);
  } catch (const DomainError& e) {
    throw ParseError(std::string(e.what()) + ": \"" + std::string(text) + "\"");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : parts_[0], 0);
  for (int r : parts_)
    for (int j = 0; j < r; ++j) ++c[j];
  return Partition(c);
}

bool Partition::is_hook() const {
  if (parts_.empty()) return false;
  for (std::size_t i = 1; i < parts_.size(); ++i)
    if (parts_[i] != 1) return false;
  return true;
}

std::vector<int> Partition::padded(int len) const {
  if (length() > len) throw DomainError("partition " + to_string() + " has more than " + std::to_string(len) + " rows");
  std::vector<int> v = parts_;
  v.resize(len, 0);
  return v;
}

Partition Partition::tail() const {
  if (parts_.empty()) return {};
  return Partition(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
  return s;
}

Partition hook(int a, int b) {
  if (a < 1 || b < 0) throw DomainError("hook needs a >= 1, b >= 0");
  std::vector<int> v{a};
  v.insert(v.end(), b, 1);
  return Partition(v);
}

Partition append_ones(const Partition& mu, int q) {
  std::vector<int> v = mu.parts();
  v.insert(v.end(), q, 1);
  return Partition(v);
}

int weight_size(const Weight& w) { return std::accumulate(w.begin(), w.end(), 0); }

std::string weight_to_string(const Weight& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

std::string tableau_to_string(const Tableau& t) {
  std::string s = "[";
  for (std::size_t r = 0; r < t.size(); ++r) {
    s += r ? ",[" : "[";
    for (std::size_t c = 0; c < t[r].size(); ++c) s += (c ? "," : "") + std::to_string(t[r][c]);
    s += "]";
  }
  return s + "]";
}

std::vector<int> reading_word(const Tableau& t) {
  std::vector<int> w;
  for (auto& row : t) w.insert(w.end(), row.begin(), row.end());
  return w;
}

std::vector<Weight> enumerate_weights(int d, int n, bool full_support, int min_first) {
  std::vector<Weight> out;
  if (n <= 0) {
    if (d == 0 && n == 0 && min_first <= 0) out.emplace_back();
    return out;
  }
  const int lo = full_support ? 1 : 0;
  Weight cur(n);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n - 1) {
      if (left < lo || (pos == 0 && left < min_first)) return;
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    const int reserve = lo * (n - pos - 1);
    const int floor = pos == 0 ? std::max(lo, min_first) : lo;
    for (int v = left - reserve; v >= floor; --v) {
      cur[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, d);
  return out;
}

std::vector<Partition> partitions_of(int d) {
  check_combinat_degree(d, "partitions_of");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxp) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int v = std::min(left, maxp); v >= 1; --v) {
      cur.push_back(v);
      rec(left - v, v);
      cur.pop_back();
    }
  };
  rec(d, d);
  return out;
}

std::vector<Partition> pieri_strips(int a, const Partition& nu) {
  if (a < 0) throw DomainError("pieri_strips needs a >= 0");
  check_combinat_degree(nu.size() + a, "pieri_strips");
  const int len = nu.length() + 1;
  std::vector<int> gamma(len);
  std::vector<Partition> out;
  // Row i may grow up to nu[i-1]; the first row is unbounded.
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == len) {
      if (left == 0) out.emplace_back(gamma);
      return;
    }
    const int cap = i == 0 ? nu[0] + left : std::min(nu[i - 1], nu[i] + left);
    for (int g = cap; g >= nu[i]; --g) {
      gamma[i] = g;
      rec(i + 1, left - (g - nu[i]));
    }
  };
  rec(0, a);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<int> padic_digits(long long k, int p) {
  if (k < 0 || p < 2) throw DomainError("padic_digits needs k >= 0 and p >= 2");
  std::vector<int> d;
  while (k > 0) {
    d.push_back(static_cast<int>(k % p));
    k /= p;
  }
  return d;
}

long long kbar(long long k, int i, int p) {
  if (i < -1) throw DomainError("kbar index must be >= -1");
  auto d = padic_digits(k, p);
  long long s = 0, pw = 1;
  for (int j = 0; j <= i; ++j) {
    int kj = j < static_cast<int>(d.size()) ? d[j] : 0;
    s += (p - 1 - kj) * pw;
    pw *= p;
  }
  return s;
}

int padic_valuation(long long x, int p) {
  if (x == 0) throw DomainError("valuation of zero");
  if (x < 0) x = -x;
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

int OrderedSetPartition::ground_size() const {
  int n = 0;
  for (auto& b : blocks) n += static_cast<int>(b.size());
  return n;
}

std::vector<int> OrderedSetPartition::minima() const {
  std::vector<int> m;
  for (auto& b : blocks) m.push_back(b.empty() ? 0 : *std::min_element(b.begin(), b.end()));
  return m;
}

bool OrderedSetPartition::valid() const {
  const int n = ground_size();
  std::vector<int> seen(n + 1, 0);
  for (auto& b : blocks) {
    if (b.empty()) return false;
    for (int x : b) {
      if (x < 1 || x > n || seen[x]) return false;
      seen[x] = 1;
    }
  }
  return true;
}

std::string OrderedSetPartition::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    s += k ? ",{" : "{";
    for (std::size_t j = 0; j < blocks[k].size(); ++j) s += (j ? "," : "") + std::to_string(blocks[k][j]);
    s += "}";
  }
  return s + ")";
}

bool in_par(const OrderedSetPartition& p, const Weight& d) {
  if (!p.valid() || p.blocks.size() != d.size()) return false;
  auto m = p.minima();
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (static_cast<int>(p.blocks[k].size()) > d[k]) return false;
    if (k && m[k - 1] > m[k]) return false;
  }
  return true;
}

std::vector<OrderedSetPartition> ordered_partitions(const Weight& d, int n_ground) {
  const int n = static_cast<int>(d.size());
  for (int x : d)
    if (x <= 0) throw DomainError("ordered_partitions needs a weight with positive entries");
  if (n_ground < n) throw DomainError("ordered_partitions needs N >= n");
  std::vector<OrderedSetPartition> out;
  OrderedSetPartition cur;
  std::function<void(int)> rec = [&](int x) {
    const int opened = static_cast<int>(cur.blocks.size());
    if (x > n_ground) {
      if (opened == n) out.push_back(cur);
      return;
    }
    if (n_ground - x + 1 < n - opened) return;
    if (opened < n) {
      cur.blocks.push_back({x});
      rec(x + 1);
      cur.blocks.pop_back();
    }
    for (int k = 0; k < opened; ++k) {
      if (static_cast<int>(cur.blocks[k].size()) >= d[k]) continue;
      cur.blocks[k].push_back(x);
      rec(x + 1);
      cur.blocks[k].pop_back();
    }
  };
  rec(1);
  return out;
}

std::vector<Tableau> semistandard_tableaux(const Partition& lambda, const Weight& w) {
  if (lambda.size() != weight_size(w)) throw DomainError("shape and content sizes differ");
  check_combinat_degree(lambda.size(), "semistandard_tableaux");
  const int rows = lambda.length();
  std::vector<Tableau> out;
  Tableau t(rows);
  std::vector<int> shape(rows, 0);
  // Place the letters v = 1, 2, ... as horizontal strips.
  std::function<void(std::size_t)> place = [&](std::size_t v) {
    if (v == w.size()) {
      out.push_back(t);
      return;
    }
    std::vector<int> add(rows, 0);
    std::function<void(int, int)> strip = [&](int r, int left) {
      if (r == rows) {
        if (left) return;
        for (int i = 0; i < rows; ++i) {
          shape[i] += add[i];
          t[i].insert(t[i].end(), add[i], static_cast<int>(v) + 1);
        }
        place(v + 1);
        for (int i = 0; i < rows; ++i) {
          shape[i] -= add[i];
          t[i].resize(shape[i]);
        }
        return;
      }
      // Row r can extend up to lambda_r and up to the old length of row r-1.
      int cap = lambda[r] - shape[r];
      if (r > 0) cap = std::min(cap, shape[r - 1] - shape[r]);
      for (int k = std::min(cap, left); k >= 0; --k) {
        add[r] = k;
        strip(r + 1, left - k);
      }
      add[r] = 0;
    };
    strip(0, w[v]);
  };
  place(0);
  std::sort(out.begin(), out.end(),
            [](const Tableau& a, const Tableau& b) { return reading_word(a) < reading_word(b); });
  return out;
}

Integer kostka_number(const Partition& lambda, const Weight& w) {
  return Integer(semistandard_tableaux(lambda, w).size());
}

Integer binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace schurext::comb
