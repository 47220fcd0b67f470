#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "schurext/exactlin.hpp"

namespace schurext::comb {

class Partition {
 public:
  Partition() = default;
  // Trailing zeros are dropped; parts must be weakly decreasing and >= 0.
  explicit Partition(std::vector<int> parts);

  // "2^3,1^2" -> (2,2,2,1,1). Optional surrounding parentheses.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;
  bool is_hook() const;
  // (A, B, ...) padded with zeros to `len` entries; used where (A, 0) matters.
  std::vector<int> padded(int len) const;
  // mu-bar: first row removed.
  Partition tail() const;

  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

Partition hook(int a, int b);  // (a, 1^b)
Partition append_ones(const Partition& mu, int q);

using Weight = std::vector<int>;
using Tableau = std::vector<std::vector<int>>;

int weight_size(const Weight& w);
std::string weight_to_string(const Weight& w);
std::string tableau_to_string(const Tableau& t);
std::vector<int> reading_word(const Tableau& t);

// All weights of size d and length n, optionally with positive entries only,
// with first entry >= min_first, lexicographically decreasing.
std::vector<Weight> enumerate_weights(int d, int n, bool full_support, int min_first);

std::vector<Partition> partitions_of(int d);

// Partitions gamma containing nu with gamma/nu a horizontal a-strip,
// lexicographically decreasing.
std::vector<Partition> pieri_strips(int a, const Partition& nu);

std::vector<int> padic_digits(long long k, int p);
long long kbar(long long k, int i, int p);
int padic_valuation(long long x, int p);

struct OrderedSetPartition {
  std::vector<std::vector<int>> blocks;

  int ground_size() const;
  std::vector<int> minima() const;
  bool valid() const;
  std::string to_string() const;
  auto operator<=>(const OrderedSetPartition&) const = default;
};

bool in_par(const OrderedSetPartition& p, const Weight& d);
// Members of Par(d;N). Elements are placed in increasing order, trying a new
// block before joining existing blocks.
std::vector<OrderedSetPartition> ordered_partitions(const Weight& d, int n_ground);

// Semistandard tableaux of shape lambda and content w, by row-reading word.
std::vector<Tableau> semistandard_tableaux(const Partition& lambda, const Weight& w);
Integer kostka_number(const Partition& lambda, const Weight& w);

Integer binomial(long long n, long long k);

}  // namespace schurext::comb
