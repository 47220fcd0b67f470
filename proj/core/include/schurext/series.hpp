#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "schurext/combinat.hpp"
#include "schurext/exactlin.hpp"

namespace schurext::series {

using comb::Partition;

// Truncated power series in t and u with nonnegative integer coefficients.
class BiPoly {
 public:
  BiPoly() = default;
  BiPoly(int t_max, int u_max);

  static BiPoly one(int t_max, int u_max);
  // c * t^i * u^j, dropped when outside the window.
  static BiPoly monomial(int i, int j, const Integer& c, int t_max, int u_max);

  int t_max() const { return t_max_; }
  int u_max() const { return u_max_; }
  const std::map<std::pair<int, int>, Integer>& coeffs() const { return coeffs_; }

  Integer coeff(int i, int j) const;
  void add(int i, int j, const Integer& c);
  bool is_zero() const { return coeffs_.empty(); }

  // Same series on the smaller window.
  BiPoly truncated(int t_max, int u_max) const;
  // f(t, u^m), kept on the window (t_max, u_max).
  BiPoly substitute_u_power(int m, int u_max) const;
  // Coefficient of u^j as a polynomial in t.
  std::vector<Integer> u_slice(int j) const;

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  // Equality of all data inside the common window.
  bool agrees_with(const BiPoly& o) const;
  bool operator==(const BiPoly& o) const = default;

  // Sorted monomial list "c * t^i * u^j + ...".
  std::string to_string() const;

 private:
  int t_max_ = 0;
  int u_max_ = 0;
  std::map<std::pair<int, int>, Integer> coeffs_;
};

enum class Method { closed, recursive };

BiPoly a_series(int p, int t_max, int u_max);
BiPoly e_series(long long k, int p, int t_max, int u_max, Method method = Method::closed);
// t u^{b+1} E_b(t,u).
BiPoly n_series(int b, int p, int t_max, int u_max);

enum class ExtCase { two_row, two_column, hook };
std::string case_name(ExtCase c);
ExtCase parse_case(const std::string& s);

// dim Ext^j(S_lambda, S_mu) over a field of characteristic p.
Integer ext_dim_formula(ExtCase c, const Partition& lambda, const Partition& mu, int j, int p);

// Coefficients of t^0..t^{t_max} in E_{m,n}(t) and H_{a,b}(t).
std::vector<Integer> e_polynomial(int m, int n, int p, int t_max);
std::vector<Integer> h_polynomial(int a, int b, int p, int t_max);

// The divisibility criterion for H_{n+1,m-n}(t) != 0; meaningful for m > n.
bool hook_nonvanishing(int n, int m, int p);

// Block criterion for lambda = (A,B), mu = (a,b) as GL_2 weights.
bool gl2_same_block(const Partition& lambda, const Partition& mu, int p);

// Largest power of p dividing x.
long long p_part(long long x, int p);

}  // namespace schurext::series
