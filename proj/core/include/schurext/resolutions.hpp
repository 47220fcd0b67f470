#pragma once

#include <map>
#include <string>
#include <vector>

#include "schurext/combinat.hpp"

namespace schurext::res {

using comb::Partition;

enum class Flavor { divided, exterior };
std::string flavor_name(Flavor f);

// Summands of a short resolution by tensor products of divided (or exterior) powers.
struct ResolutionShape {
  Partition target;
  Flavor flavor = Flavor::divided;
  // degree -> summands, each a partition naming D^lambda (resp. L^lambda), sorted decreasingly
  std::map<int, std::vector<Partition>> terms;

  int length() const;
  bool operator==(const ResolutionShape& o) const = default;
};

ResolutionShape weyl_resolution_shape(const Partition& mu);
ResolutionShape schur_resolution_shape(const Partition& mu);
std::size_t summand_count(const ResolutionShape& shape);

// Polynomial with integer coefficients in a fixed number of variables.
class SymPoly {
 public:
  using Exponent = std::vector<int>;

  SymPoly() = default;
  explicit SymPoly(int nvars) : nvars_(nvars) {}

  static SymPoly constant(int nvars, const Integer& c);
  static SymPoly complete(int k, int nvars);    // h_k
  static SymPoly elementary(int k, int nvars);  // e_k
  static SymPoly schur(const Partition& lambda, int nvars);

  int nvars() const { return nvars_; }
  const std::map<Exponent, Integer>& terms() const { return terms_; }
  Integer coeff(const Exponent& e) const;
  void add(const Exponent& e, const Integer& c);
  bool is_symmetric() const;

  friend SymPoly operator+(const SymPoly& a, const SymPoly& b);
  friend SymPoly operator-(const SymPoly& a, const SymPoly& b);
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  bool operator==(const SymPoly& o) const = default;

 private:
  int nvars_ = 0;
  std::map<Exponent, Integer> terms_;
};

// h_lambda (divided) or e_lambda (exterior) in nvars variables.
SymPoly product_character(const Partition& lambda, Flavor flavor, int nvars);

// Alternating sum of term characters equals s_target.
bool euler_check(const ResolutionShape& shape);

}  // namespace schurext::res
