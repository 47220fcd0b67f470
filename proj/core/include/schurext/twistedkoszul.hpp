#pragma once

#include <string>
#include <vector>

#include "schurext/polyfun.hpp"
#include "schurext/report.hpp"
#include "schurext/speccomplex.hpp"

namespace schurext::koszul {

using comb::OrderedSetPartition;
using comb::Weight;
using lin::ChainMap;
using lin::Ring;
using poly::HookElement;
using poly::TableauMonomial;

// Formal integer combination of e^alpha (x) e_beta in (D^A (x) L^B)(k^n).
struct AmbientElement {
  int A = 0;
  int B = 0;
  int n = 0;
  HookElement terms;

  static AmbientElement zero(int A, int B, int n) { return {A, B, n, {}}; }
  static AmbientElement monomial(const TableauMonomial& m, const Integer& c = 1);
  // Adds c * e^alpha (x) (e_{beta_1} ^ ... ^ e_{beta_k}) with beta in any order.
  void add(const Weight& alpha, const std::vector<int>& beta, const Integer& c);
  void add(const AmbientElement& o, const Integer& c = 1);

  bool is_zero() const { return terms.empty(); }
  std::string to_string() const;
  bool operator==(const AmbientElement& o) const = default;
};

AmbientElement operator+(const AmbientElement& x, const AmbientElement& y);
AmbientElement operator-(const AmbientElement& x, const AmbientElement& y);
AmbientElement operator*(const Integer& c, const AmbientElement& x);

AmbientElement contraction_eta(int j, const AmbientElement& x);
AmbientElement wedge(const AmbientElement& x, int j);  // x ^ e_j
AmbientElement koszul_upsilon(const AmbientElement& x);
AmbientElement specialize(const AmbientElement& x, int i);  // psi_i : k^n -> k^{n-1}
AmbientElement generize(const AmbientElement& x, int s);    // psi^s : k^n -> k^{n+1}
AmbientElement boundary(const AmbientElement& x);           // sum (-1)^{i-1} psi_i
AmbientElement phi(const AmbientElement& x);
// The double sum rewriting of Upsilon through psi_i psi^s.
AmbientElement upsilon_via_psi(const AmbientElement& x);
AmbientElement full_support_part(const AmbientElement& x);

// All monomials of (D^A (x) L^B)(k^n).
std::vector<TableauMonomial> ambient_monomials(int A, int B, int n);

struct SignedBlockData {
  Weight alpha;
  std::vector<int> beta;
  int sgn = 1;
  TableauMonomial m;
};
SignedBlockData signed_block_data(const Weight& d, const OrderedSetPartition& I);

// Phi^[B](e^d) in (D^{|d|-B} (x) L^B)(k^{n+B}).
AmbientElement phi_divided(int B, const Weight& d);

// k is 1-based; requires |I_k| < d_k and i_k <= s <= N.
OrderedSetPartition sigma_ks(const OrderedSetPartition& I, const Weight& d, int k, int s);
struct SigmaPreimage {
  int k = 0;
  int s = 0;
  OrderedSetPartition I;
};
std::vector<SigmaPreimage> sigma_preimages(const OrderedSetPartition& J, const Weight& d);

// Terminal test and Theta_[B] on a standard monomial of W_(A,1^B) at k^{n+B}.
bool is_terminal(int B, const TableauMonomial& m);
AmbientElement theta_retraction(int B, const TableauMonomial& m);

// F^a(W_(A,1^B)) -> F^{a-1}_{.+1}(W_(A-1,1^{B+1})), for 2 <= a.
ChainMap phi_chain_map(int A, int B, int a, const Ring& ring = Ring::integers());
// F^{a+B}(W_(d)) -> F^a_{.+B}(W_(A,1^B)), A = d - B, a = A - delta; graded variant on grF.
ChainMap phiB_chain_map(int d, int delta, int B, const Ring& ring = Ring::integers(), bool graded = false);
// grF^a_{.+B}(W_(A,1^B)) -> grF^{a+B}(W_(d)).
ChainMap theta_chain_map(int d, int delta, int B, const Ring& ring = Ring::integers());

// Exhaustive identity checks over the stated ranges.
CheckReport check_phi_upsilon(int max_degree = 6, int max_n = 4);
CheckReport check_phi_boundary(int max_degree = 6, int max_n = 4);
CheckReport check_upsilon_via_psi(int max_degree = 6, int max_n = 4);
CheckReport check_eta_psi(int max_degree = 6, int max_n = 4);
CheckReport check_upsilon_squared(int max_degree = 6, int max_n = 4);
CheckReport check_sigma_multiplicity(int max_degree = 5, int max_ground = 6);
CheckReport check_divided_powers(int max_B = 3, int max_d = 6);
CheckReport check_theta(int max_d = 6);
CheckReport check_quasi_isomorphisms(int max_d = 6, const std::vector<Ring>& rings = {Ring::integers()});

}  // namespace schurext::koszul
