#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "schurext/combinat.hpp"
#include "schurext/errors.hpp"
#include "schurext/guard.hpp"
#include "schurext/resolutions.hpp"

using namespace schurext;
using comb::OrderedSetPartition;
using comb::Partition;
using comb::Tableau;
using comb::Weight;

namespace {

Partition P(const char* s) { return Partition::parse(s); }

// Partition counts by the standard coin recurrence.
long long partition_count(int n) {
  std::vector<long long> c(n + 1, 0);
  c[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int s = part; s <= n; ++s) c[s] += c[s - part];
  return c[n];
}

// Horizontal strips by adding boxes one column position at a time.
std::set<Partition> brute_strips(int a, const Partition& nu) {
  std::set<Partition> out;
  const int rows = nu.length() + 1;
  std::vector<int> g(rows);
  std::function<void(int, int)> rec = [&](int r, int left) {
    if (r == rows) {
      if (left == 0) out.insert(Partition(g));
      return;
    }
    const int lo = nu[r], hi = r == 0 ? nu[0] + left : std::min(nu[r - 1], nu[r] + left);
    for (int v = lo; v <= hi; ++v) {
      if (r > 0 && v > g[r - 1]) break;
      g[r] = v;
      rec(r + 1, left - (v - lo));
    }
  };
  rec(0, a);
  return out;
}

// All fillings of the shape with the given content that are semistandard.
long long brute_kostka(const Partition& lambda, const Weight& w) {
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda[r]; ++c) cells.emplace_back(r, c);
  std::vector<int> letters;
  for (std::size_t i = 0; i < w.size(); ++i) letters.insert(letters.end(), w[i], static_cast<int>(i) + 1);
  if (letters.size() != cells.size()) return 0;
  long long count = 0;
  std::sort(letters.begin(), letters.end());
  do {
    std::map<std::pair<int, int>, int> t;
    for (std::size_t k = 0; k < cells.size(); ++k) t[cells[k]] = letters[k];
    bool ok = true;
    for (auto& [rc, v] : t) {
      auto right = t.find({rc.first, rc.second + 1});
      auto below = t.find({rc.first + 1, rc.second});
      if (right != t.end() && right->second < v) ok = false;
      if (below != t.end() && below->second <= v) ok = false;
    }
    count += ok;
  } while (std::next_permutation(letters.begin(), letters.end()));
  return count;
}

// Ordered set partitions of [N] into n nonempty blocks with increasing minima and |I_k| <= d_k.
std::set<OrderedSetPartition> brute_par(const Weight& d, int N) {
  std::set<OrderedSetPartition> out;
  const int n = static_cast<int>(d.size());
  std::vector<int> assign(N, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == N) {
      OrderedSetPartition p;
      p.blocks.assign(n, {});
      for (int e = 0; e < N; ++e) p.blocks[assign[e]].push_back(e + 1);
      for (int k = 0; k < n; ++k)
        if (p.blocks[k].empty() || static_cast<int>(p.blocks[k].size()) > d[k]) return;
      for (int k = 0; k + 1 < n; ++k)
        if (p.blocks[k][0] > p.blocks[k + 1][0]) return;
      out.insert(p);
      return;
    }
    for (int k = 0; k < n; ++k) {
      assign[i] = k;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

TEST(Partition, Parsing) {
  EXPECT_EQ(P("2^3,1^2").parts(), (std::vector<int>{2, 2, 2, 1, 1}));
  EXPECT_EQ(P("5,1^3").parts(), (std::vector<int>{5, 1, 1, 1}));
  EXPECT_EQ(P("(2,1)").parts(), (std::vector<int>{2, 1}));
  EXPECT_EQ(P("11,0").parts(), (std::vector<int>{11}));
  EXPECT_EQ(P("1^8").size(), 8);
  EXPECT_THROW(P("1,2"), ParseError);
  EXPECT_THROW(P("2,x"), ParseError);
  EXPECT_THROW(P("2^"), ParseError);
  EXPECT_EQ(P("3,2,2").to_string(), "3,2,2");
}

TEST(Partition, ConjugationIsAnInvolution) {
  for (int d = 0; d <= 12; ++d) {
    const auto parts = comb::partitions_of(d);
    EXPECT_EQ(static_cast<long long>(parts.size()), partition_count(d)) << d;
    for (auto& lam : parts) {
      EXPECT_EQ(lam.conjugate().conjugate(), lam);
      EXPECT_EQ(lam.conjugate().size(), d);
    }
  }
  EXPECT_EQ(P("4,2,1").conjugate(), P("3,2,1,1"));
}

TEST(Partition, HooksAndViews) {
  EXPECT_TRUE(P("5,1,1,1").is_hook());
  EXPECT_FALSE(P("2,2").is_hook());
  EXPECT_EQ(comb::hook(3, 2), P("3,1,1"));
  EXPECT_EQ(P("7").padded(2), (std::vector<int>{7, 0}));
  EXPECT_EQ(P("3,2,1").tail(), P("2,1"));
  EXPECT_EQ(P("2")[5], 0);
}

TEST(Combinat, AppendOnes) {
  EXPECT_EQ(comb::append_ones(P("2"), 2), P("2,1,1"));
  EXPECT_EQ(comb::append_ones(P("3,2"), 0), P("3,2"));
  EXPECT_EQ(comb::append_ones(P("3,2"), 3), P("3,2,1,1,1"));
}

TEST(Combinat, PieriStripsExamples) {
  EXPECT_EQ(comb::pieri_strips(2, P("2,2")), (std::vector<Partition>{P("4,2"), P("3,2,1"), P("2,2,2")}));
  EXPECT_EQ(comb::pieri_strips(0, P("3,1")), (std::vector<Partition>{P("3,1")}));
  EXPECT_EQ(comb::pieri_strips(4, P("1,1")), (std::vector<Partition>{P("5,1"), P("4,1,1")}));
}

TEST(Combinat, PieriStripsMatchBruteForce) {
  for (int d = 0; d <= 6; ++d)
    for (auto& nu : comb::partitions_of(d))
      for (int a = 0; a + d <= 8; ++a) {
        const auto got = comb::pieri_strips(a, nu);
        EXPECT_TRUE(std::is_sorted(got.begin(), got.end(), std::greater<>()));
        EXPECT_EQ(std::set<Partition>(got.begin(), got.end()), brute_strips(a, nu)) << a << " " << nu.to_string();
      }
}

TEST(Combinat, PieriRuleAgainstSymmetricPolynomials) {
  for (int d = 1; d <= 5; ++d)
    for (auto& nu : comb::partitions_of(d))
      for (int a = 1; a + d <= 8; ++a) {
        const int v = nu.length() + 1;
        res::SymPoly rhs(v);
        for (auto& g : comb::pieri_strips(a, nu)) rhs = rhs + res::SymPoly::schur(g, v);
        EXPECT_EQ(res::SymPoly::complete(a, v) * res::SymPoly::schur(nu, v), rhs) << a << " " << nu.to_string();
      }
}

TEST(Combinat, Kbar) {
  EXPECT_EQ(comb::kbar(3, 1, 2), 0);
  EXPECT_EQ(comb::kbar(3, 2, 2), 4);
  EXPECT_EQ(comb::kbar(3, 3, 2), 12);
  EXPECT_EQ(comb::kbar(3, -1, 2), 0);
  for (int p : {2, 3, 5})
    for (int i = 0; i <= 4; ++i) {
      long long pw = 1;
      for (int r = 0; r <= i; ++r) pw *= p;
      EXPECT_EQ(comb::kbar(0, i, p), pw - 1);
    }
}

TEST(Combinat, KbarMonotoneAndDigitsReconstruct) {
  for (int p : {2, 3, 5, 7})
    for (long long k = 0; k <= 300; ++k) {
      const auto digits = comb::padic_digits(k, p);
      long long back = 0, pw = 1;
      for (int dgt : digits) {
        EXPECT_LT(dgt, p);
        back += dgt * pw;
        pw *= p;
      }
      EXPECT_EQ(back, k);
      for (int i = 0; i <= 6; ++i) {
        EXPECT_LE(comb::kbar(k, i - 1, p), comb::kbar(k, i, p));
        long long q = 1;
        for (int r = 0; r <= i; ++r) q *= p;
        EXPECT_EQ(((comb::kbar(k, i, p) + k + 1) % q + q) % q, 0) << k << " " << i << " " << p;
      }
    }
}

TEST(Combinat, PadicValuation) {
  EXPECT_EQ(comb::padic_valuation(12, 2), 2);
  EXPECT_EQ(comb::padic_valuation(7, 2), 0);
  EXPECT_EQ(comb::padic_valuation(54, 3), 3);
}

TEST(Combinat, OrderedPartitionsExamples) {
  const auto got = comb::ordered_partitions({3, 1}, 4);
  const std::set<OrderedSetPartition> expect = {
      {{{1, 3, 4}, {2}}}, {{{1, 2, 4}, {3}}}, {{{1, 2, 3}, {4}}}};
  EXPECT_EQ(std::set<OrderedSetPartition>(got.begin(), got.end()), expect);
  EXPECT_EQ(got.size(), 3u);
  const auto ones = comb::ordered_partitions({1, 1, 1, 1}, 4);
  ASSERT_EQ(ones.size(), 1u);
  EXPECT_EQ(ones[0].blocks, (std::vector<std::vector<int>>{{1}, {2}, {3}, {4}}));
  const auto two = comb::ordered_partitions({2}, 2);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0].blocks, (std::vector<std::vector<int>>{{1, 2}}));
}

TEST(Combinat, OrderedPartitionsMatchBruteForce) {
  for (int d = 1; d <= 5; ++d)
    for (int n = 1; n <= d; ++n)
      for (auto& w : comb::enumerate_weights(d, n, true, 1))
        for (int N = n; N <= 6; ++N) {
          const auto got = comb::ordered_partitions(w, N);
          const std::set<OrderedSetPartition> s(got.begin(), got.end());
          EXPECT_EQ(s.size(), got.size());
          EXPECT_EQ(s, brute_par(w, N)) << comb::weight_to_string(w) << " N=" << N;
          for (auto& p : got) EXPECT_TRUE(comb::in_par(p, w));
        }
}

TEST(Combinat, KostkaExamples) {
  EXPECT_EQ(comb::kostka_number(P("2,1"), {1, 1, 1}), 2);
  EXPECT_EQ(comb::kostka_number(P("4"), {1, 0, 3}), 1);
  EXPECT_EQ(comb::kostka_number(P("2,2"), {1, 1, 1, 1}), 2);
}

TEST(Combinat, KostkaMatchesBruteForce) {
  for (int d = 1; d <= 5; ++d)
    for (auto& lam : comb::partitions_of(d))
      for (int n = 1; n <= 4; ++n)
        for (auto& w : comb::enumerate_weights(d, n, false, 0)) {
          EXPECT_EQ(comb::kostka_number(lam, w), brute_kostka(lam, w)) << lam.to_string() << comb::weight_to_string(w);
          const auto tabs = comb::semistandard_tableaux(lam, w);
          EXPECT_EQ(static_cast<long long>(tabs.size()), brute_kostka(lam, w));
          for (std::size_t k = 1; k < tabs.size(); ++k) EXPECT_LT(comb::reading_word(tabs[k - 1]), comb::reading_word(tabs[k]));
        }
}

TEST(Combinat, EnumerateWeights) {
  EXPECT_EQ(comb::enumerate_weights(4, 3, true, 2), (std::vector<Weight>{{2, 1, 1}}));
  EXPECT_EQ(comb::enumerate_weights(4, 4, true, 1), (std::vector<Weight>{{1, 1, 1, 1}}));
  EXPECT_EQ(comb::enumerate_weights(3, 2, true, 1), (std::vector<Weight>{{2, 1}, {1, 2}}));
  const auto all = comb::enumerate_weights(5, 3, false, 0);
  EXPECT_EQ(all.size(), 21u);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end(), std::greater<>()));
}

TEST(Combinat, Binomial) {
  EXPECT_EQ(comb::binomial(5, 2), 10);
  EXPECT_EQ(comb::binomial(4, 0), 1);
  EXPECT_EQ(comb::binomial(3, 5), 0);
}

TEST(Combinat, Guard) {
  EXPECT_THROW(comb::partitions_of(13), GuardError);
  const auto saved = degree_guard();
  set_degree_guard({saved.complex_degree, 13});
  EXPECT_EQ(comb::partitions_of(13).size(), 101u);
  set_degree_guard(saved);
}
