#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "schurext/errors.hpp"
#include "schurext/exactlin.hpp"
#include "schurext/twistedkoszul.hpp"

using namespace schurext;
using lin::ChainComplex;
using lin::IntegerMatrix;
using lin::Ring;

namespace {

Integer det(std::vector<std::vector<Integer>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Integer out = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Integer>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(row);
    }
    const Integer term = a[0][c] * det(minor);
    out += c % 2 ? Integer(-term) : term;
  }
  return out;
}

Integer gcd(Integer a, Integer b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Integer t = a % b;
    a = b;
    b = t;
  }
  return a;
}

void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

// gcd of all k x k minors
Integer determinantal_divisor(const std::vector<std::vector<Integer>>& a, std::size_t k) {
  std::vector<std::vector<std::size_t>> rs, cs;
  subsets(a.size(), k, rs);
  subsets(a.empty() ? 0 : a[0].size(), k, cs);
  Integer g = 0;
  for (auto& r : rs)
    for (auto& c : cs) {
      std::vector<std::vector<Integer>> m;
      for (auto i : r) {
        std::vector<Integer> row;
        for (auto j : c) row.push_back(a[i][j]);
        m.push_back(row);
      }
      g = gcd(g, det(m));
    }
  return g;
}

ChainComplex z121(const Ring& ring) {
  return ChainComplex(ring, 2, 4, {{2, 1}, {3, 2}, {4, 1}},
                      {{4, IntegerMatrix::from_rows({{3}, {3}})}, {3, IntegerMatrix::from_rows({{-2, 2}})}});
}

}  // namespace

TEST(SmithNormalForm, SmallExamples) {
  EXPECT_EQ(lin::smith_normal_form(IntegerMatrix::from_rows({{2}})), (std::vector<Integer>{2}));
  EXPECT_EQ(lin::smith_normal_form(IntegerMatrix::identity(3)), (std::vector<Integer>{1, 1, 1}));
  EXPECT_EQ(lin::smith_normal_form(IntegerMatrix::from_rows({{2, 0}, {0, 3}})), (std::vector<Integer>{1, 6}));
  EXPECT_EQ(lin::smith_normal_form(IntegerMatrix::from_rows({{0, 0}, {0, 0}, {0, 0}})),
            (std::vector<Integer>{0, 0}));
}

TEST(SmithNormalForm, MatchesDeterminantalDivisors) {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> entry(-6, 6), dim(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const int r = dim(rng), c = dim(rng);
    std::vector<std::vector<Integer>> a(r, std::vector<Integer>(c));
    for (auto& row : a)
      for (auto& x : row) x = trial % 3 == 0 ? Integer(entry(rng) * 2) : Integer(entry(rng));
    const auto snf = lin::smith_normal_form(IntegerMatrix::from_dense(a));
    ASSERT_EQ(snf.size(), static_cast<std::size_t>(std::min(r, c)));
    Integer prod = 1;
    for (std::size_t k = 1; k <= snf.size(); ++k) {
      prod *= snf[k - 1];
      EXPECT_EQ(prod, determinantal_divisor(a, k)) << "trial " << trial << " k=" << k;
      if (k > 1 && snf[k - 1] != 0) EXPECT_EQ(snf[k - 1] % snf[k - 2], 0);
    }
  }
}

TEST(SmithNormalForm, DecompositionIsUnimodular) {
  const auto m = IntegerMatrix::from_rows({{4, 6, 2}, {2, 8, 0}, {6, 2, 4}});
  const auto s = lin::smith_decomposition(m);
  const auto d = s.u * m * s.v;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(d.at(i, j), i == j ? s.diagonal[i] : Integer(0));
  EXPECT_EQ(abs(det(s.u.dense())), 1);
  EXPECT_EQ(abs(det(s.v.dense())), 1);
}

TEST(HermiteForm, TransformReproducesForm) {
  const auto m = IntegerMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  const auto h = lin::hermite_decomposition(m);
  EXPECT_EQ(h.u * m, h.h);
  EXPECT_EQ(abs(det(h.u.dense())), 1);
  EXPECT_EQ(h.rank, 3u);
}

TEST(Kernel, BasisIsAnnihilated) {
  const auto m = IntegerMatrix::from_rows({{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}});
  for (auto ring : {Ring::integers(), Ring::prime_field(2), Ring::prime_field(3)}) {
    const auto k = lin::kernel_basis(m, ring);
    EXPECT_TRUE((m * k).reduced(ring).is_zero());
    EXPECT_EQ(k.cols() + lin::rank_over(m, ring), 4u);
  }
  EXPECT_EQ(lin::rank_mod_p(IntegerMatrix::from_rows({{2, 0}, {0, 3}}), 2), 1u);
}

TEST(LatticeSolver, SolvesInsideTheLatticeOnly) {
  lin::LatticeSolver s(IntegerMatrix::from_rows({{2, 0}, {0, 3}, {0, 0}}));
  auto x = s.solve({4, 9, 0});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], 2);
  EXPECT_EQ((*x)[1], 3);
  EXPECT_FALSE(s.solve({1, 0, 0}));
  EXPECT_FALSE(s.solve({0, 0, 1}));
}

TEST(Homology, Z121OverIntegers) {
  const auto c = z121(Ring::integers());
  ASSERT_TRUE(lin::validate_complex(c));
  EXPECT_TRUE(lin::homology(c, 4).is_zero());
  EXPECT_EQ(lin::homology(c, 3).free_rank, 0u);
  EXPECT_EQ(lin::homology(c, 3).invariant_factors, (std::vector<Integer>{3}));
  EXPECT_EQ(lin::homology(c, 2).invariant_factors, (std::vector<Integer>{2}));
  EXPECT_EQ(lin::homology(c, 3).to_string(), "Z/3");
  EXPECT_TRUE(lin::homology(c, 7).is_zero());
}

TEST(Homology, Z121OverF2) {
  const auto c = z121(Ring::prime_field(2));
  EXPECT_EQ(lin::homology(c, 4).dimension(), 0u);
  EXPECT_EQ(lin::homology(c, 3).dimension(), 1u);
  EXPECT_EQ(lin::homology(c, 2).dimension(), 1u);
  const auto c3 = z121(Ring::prime_field(3));
  EXPECT_EQ(lin::homology(c3, 3).dimension(), 1u);
  EXPECT_EQ(lin::homology(c3, 2).dimension(), 0u);
}

TEST(Homology, ZeroDifferentials) {
  ChainComplex c(Ring::integers(), 0, 2, {{0, 2}, {1, 3}, {2, 1}}, {});
  for (int n = 0; n <= 2; ++n) EXPECT_EQ(lin::homology(c, n).free_rank, c.rank(n));
}

TEST(Complex, Validation) {
  ChainComplex single(Ring::integers(), 5, 5, {{5, 3}}, {});
  EXPECT_TRUE(lin::validate_complex(single));
  ChainComplex bad(Ring::integers(), 1, 3, {{1, 1}, {2, 1}, {3, 1}},
                   {{3, IntegerMatrix::from_rows({{1}})}, {2, IntegerMatrix::from_rows({{1}})}});
  EXPECT_FALSE(lin::validate_complex(bad));
  EXPECT_THROW(lin::homology(bad, 2), MalformedComplex);
  EXPECT_THROW(ChainComplex(Ring::integers(), 1, 2, {{1, 1}, {2, 2}}, {{2, IntegerMatrix::from_rows({{1}})}}),
               ShapeMismatch);
}

TEST(Complex, ReductionModP) {
  const auto c = z121(Ring::integers()).over(Ring::prime_field(3));
  EXPECT_EQ(c.diff(4).at(0, 0), 0);
  EXPECT_EQ(c.diff(3).at(0, 0), 1);
}

TEST(MappingCone, IdentityIsAcyclic) {
  for (auto ring : {Ring::integers(), Ring::prime_field(2)}) {
    const auto c = z121(ring);
    const auto id = lin::identity_map(c);
    EXPECT_TRUE(id.is_chain_map());
    EXPECT_TRUE(lin::is_acyclic(lin::mapping_cone(id)));
  }
}

TEST(MappingCone, ZeroMapGivesDirectSum) {
  const auto c = z121(Ring::integers());
  std::map<int, IntegerMatrix> blocks;
  for (int n = 2; n <= 4; ++n) blocks[n] = IntegerMatrix(c.rank(n), c.rank(n));
  const lin::ChainMap zero(c, c, 0, blocks);
  ASSERT_TRUE(zero.is_chain_map());
  const auto cone = lin::mapping_cone(zero);
  auto order = [](const lin::HomologyGroup& h) {
    Integer o = 1;
    for (auto& t : h.invariant_factors) o *= t;
    return o;
  };
  for (int n = cone.lo(); n <= cone.hi(); ++n) {
    const auto h = lin::homology(cone, n);
    const auto below = lin::homology(c, n - 1), here = lin::homology(c, n);
    EXPECT_EQ(h.free_rank, below.free_rank + here.free_rank) << n;
    EXPECT_EQ(order(h), order(below) * order(here)) << n;
  }
  EXPECT_EQ(lin::homology(cone, 3).to_string(), "Z/6");
  for (unsigned p : {2u, 3u}) {
    const auto cp = cone.over(Ring::prime_field(p));
    const auto c0 = c.over(Ring::prime_field(p));
    for (int n = cone.lo(); n <= cone.hi(); ++n)
      EXPECT_EQ(lin::homology(cp, n).dimension(), lin::homology(c0, n - 1).dimension() + lin::homology(c0, n).dimension());
  }
}

TEST(MappingCone, PhiBInstanceIsAcyclic) {
  const auto f = koszul::phiB_chain_map(4, 1, 1);
  ASSERT_TRUE(f.is_chain_map());
  EXPECT_TRUE(lin::is_acyclic(lin::mapping_cone(f)));
  for (int n = -2; n <= 6; ++n)
    EXPECT_EQ(lin::homology(f.source(), n), lin::homology(f.target(), n + f.shift())) << n;
}

TEST(ChainMap, ComposeAndInvariant) {
  const auto c = z121(Ring::integers());
  const auto id = lin::identity_map(c);
  const auto twice = lin::compose(id, id);
  EXPECT_TRUE(twice.is_chain_map());
  for (int n = 2; n <= 4; ++n) EXPECT_EQ(twice.block(n), IntegerMatrix::identity(c.rank(n)));
  std::map<int, IntegerMatrix> blocks;
  blocks[3] = IntegerMatrix::from_rows({{1, 0}, {0, 0}});
  blocks[2] = IntegerMatrix(1, 1);
  blocks[4] = IntegerMatrix(1, 1);
  EXPECT_FALSE(lin::ChainMap(c, c, 0, blocks).is_chain_map());
}

TEST(Ring, Basics) {
  EXPECT_THROW(Ring::prime_field(4), DomainError);
  EXPECT_EQ(Ring::prime_field(5).reduce(-1), 4);
  EXPECT_EQ(Ring::integers().reduce(-7), -7);
  EXPECT_TRUE(lin::is_prime(101));
  EXPECT_FALSE(lin::is_prime(1));
  EXPECT_EQ(Ring::prime_field(3).name(), "F_3");
}
