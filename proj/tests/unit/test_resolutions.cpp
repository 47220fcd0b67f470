#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "schurext/errors.hpp"
#include "schurext/resolutions.hpp"

using namespace schurext;
using comb::Partition;
using res::Flavor;
using res::ResolutionShape;
using res::SymPoly;

namespace {

Partition P(const char* s) { return Partition::parse(s); }

std::vector<Partition> sorted(std::vector<Partition> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<Partition> parts(std::initializer_list<const char*> xs) {
  std::vector<Partition> out;
  for (auto x : xs) out.push_back(P(x));
  return sorted(out);
}

// Number of matrices with the given row and column sums; entries bounded by `cap` (0/1 when cap = 1).
long long count_matrices(std::vector<int> rows, std::vector<int> cols, int cap) {
  std::function<long long(std::size_t, std::vector<int>&)> go = [&](std::size_t r, std::vector<int>& rest) -> long long {
    if (r == rows.size()) return std::all_of(rest.begin(), rest.end(), [](int c) { return c == 0; }) ? 1 : 0;
    long long total = 0;
    std::function<void(std::size_t, int)> fill = [&](std::size_t c, int left) {
      if (c == rest.size()) {
        if (left == 0) total += go(r + 1, rest);
        return;
      }
      for (int v = 0; v <= std::min({left, rest[c], cap}); ++v) {
        rest[c] -= v;
        fill(c + 1, left - v);
        rest[c] += v;
      }
    };
    fill(0, rows[r]);
    return total;
  };
  return go(0, cols);
}

// Alternating character of the shape at monomial w, against the Kostka number of the target.
bool brute_euler(const ResolutionShape& shape, const Partition& target_char) {
  const int d = target_char.size();
  const int cap = shape.flavor == Flavor::divided ? d : 1;
  for (auto& w : comb::partitions_of(d)) {
    long long chi = 0;
    for (auto& [deg, summands] : shape.terms)
      for (auto& lam : summands) chi += (deg % 2 ? -1 : 1) * count_matrices(lam.parts(), w.parts(), cap);
    if (Integer(chi) != comb::kostka_number(target_char, w.parts())) return false;
  }
  return true;
}

}  // namespace

TEST(Resolutions, WeylTwoTwoTwo) {
  const auto s = res::weyl_resolution_shape(P("2,2,2"));
  EXPECT_EQ(s.length(), 4);
  EXPECT_EQ(res::summand_count(s), 20u);
  EXPECT_EQ(sorted(s.terms.at(0)), parts({"2,2,2"}));
  EXPECT_EQ(sorted(s.terms.at(1)), parts({"4,2", "4,2", "3,2,1", "3,2,1"}));
  EXPECT_EQ(sorted(s.terms.at(2)), parts({"6", "5,1", "5,1", "4,2", "4,2", "3,3", "4,1,1"}));
  EXPECT_EQ(sorted(s.terms.at(3)), parts({"6", "6", "6", "5,1", "5,1", "4,2"}));
  EXPECT_EQ(sorted(s.terms.at(4)), parts({"6", "6"}));
  EXPECT_TRUE(res::euler_check(s));
}

TEST(Resolutions, SmallShapes) {
  const auto s = res::weyl_resolution_shape(P("2,2"));
  EXPECT_EQ(sorted(s.terms.at(0)), parts({"2,2"}));
  EXPECT_EQ(sorted(s.terms.at(1)), parts({"3,1", "4"}));
  EXPECT_EQ(sorted(s.terms.at(2)), parts({"4"}));
  EXPECT_EQ(res::summand_count(s), 4u);
  for (int d = 1; d <= 6; ++d) {
    const auto r = res::weyl_resolution_shape(Partition({d}));
    EXPECT_EQ(r.length(), 0);
    EXPECT_EQ(res::summand_count(r), 1u);
    const auto e = res::schur_resolution_shape(Partition(std::vector<int>(d, 1)));
    EXPECT_EQ(e.length(), 0);
    EXPECT_EQ(e.terms.at(0), std::vector<Partition>{Partition({d})});
    EXPECT_EQ(e.flavor, Flavor::exterior);
  }
  EXPECT_EQ(res::schur_resolution_shape(P("3,1")).terms.at(0), std::vector<Partition>{P("2,1,1")});
  EXPECT_LE(res::schur_resolution_shape(P("2,2,2")).length(), 3);
  EXPECT_THROW(res::weyl_resolution_shape(P("13")), GuardError);
  EXPECT_EQ(res::flavor_name(Flavor::exterior), "exterior");
}

TEST(Resolutions, BoundsAndStructure) {
  for (int d = 1; d <= 8; ++d)
    for (auto& mu : comb::partitions_of(d)) {
      const auto w = res::weyl_resolution_shape(mu);
      EXPECT_LE(w.length(), d - mu[0]) << mu.to_string();
      EXPECT_EQ(w.terms.at(0), std::vector<Partition>{mu});
      EXPECT_EQ(w.target, mu);
      for (auto& [deg, summands] : w.terms)
        for (auto& lam : summands) {
          EXPECT_EQ(lam.size(), d);
          EXPECT_GE(lam[0], mu[0]) << mu.to_string();
        }
      const auto e = res::schur_resolution_shape(mu);
      EXPECT_LE(e.length(), d - mu.length()) << mu.to_string();
      EXPECT_EQ(e.terms.at(0), std::vector<Partition>{mu.conjugate()});
    }
}

TEST(Resolutions, DegreeOneFromPieriStrips) {
  for (int d = 2; d <= 8; ++d)
    for (auto& mu : comb::partitions_of(d)) {
      if (mu.length() < 2) continue;
      const auto w = res::weyl_resolution_shape(mu);
      const auto bar = mu.tail();
      std::vector<Partition> expect;
      auto inner = res::weyl_resolution_shape(bar);
      for (auto& lam : inner.terms[1]) {
        std::vector<int> v{mu[0]};
        for (int x : lam.parts()) v.push_back(x);
        std::sort(v.rbegin(), v.rend());
        expect.push_back(Partition(v));
      }
      for (auto& g : comb::pieri_strips(mu[0], bar))
        if (g != mu) expect.push_back(g);
      const auto got = w.terms.count(1) ? w.terms.at(1) : std::vector<Partition>{};
      EXPECT_EQ(sorted(got), sorted(expect)) << mu.to_string();
    }
}

TEST(Resolutions, EulerCharacteristic) {
  for (int d = 1; d <= 7; ++d)
    for (auto& mu : comb::partitions_of(d)) {
      const auto w = res::weyl_resolution_shape(mu);
      EXPECT_TRUE(res::euler_check(w)) << mu.to_string();
      EXPECT_TRUE(brute_euler(w, mu)) << mu.to_string();
      const auto e = res::schur_resolution_shape(mu);
      EXPECT_TRUE(res::euler_check(e)) << mu.to_string();
      EXPECT_TRUE(brute_euler(e, mu)) << mu.to_string();
    }
}

TEST(Resolutions, EulerCheckRejectsWrongShape) {
  auto s = res::weyl_resolution_shape(P("2,2"));
  s.terms[2].push_back(P("4"));
  EXPECT_FALSE(res::euler_check(s));
  EXPECT_FALSE(brute_euler(s, P("2,2")));
}

TEST(SymPoly, Basics) {
  const auto h2 = SymPoly::complete(2, 3);
  EXPECT_EQ(h2.terms().size(), 6u);
  EXPECT_TRUE(h2.is_symmetric());
  const auto e2 = SymPoly::elementary(2, 3);
  EXPECT_EQ(e2.terms().size(), 3u);
  EXPECT_EQ(SymPoly::schur(P("2,2"), 3), h2 * h2 - SymPoly::complete(3, 3) * SymPoly::complete(1, 3));
  EXPECT_EQ(SymPoly::schur(P("1,1"), 3), e2);
  EXPECT_EQ(SymPoly::schur(P("2,1"), 3).coeff({1, 1, 1}), 2);
  SymPoly x(2);
  x.add({1, 0}, 1);
  EXPECT_FALSE(x.is_symmetric());
  EXPECT_EQ(res::product_character(P("2,1"), Flavor::exterior, 3), e2 * SymPoly::elementary(1, 3));
  EXPECT_EQ(SymPoly::constant(2, 5).coeff({0, 0}), 5);
}
