#pragma once

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "schurext/combinat.hpp"
#include "schurext/exactlin.hpp"

namespace schurext::poly {

using comb::Partition;
using comb::Tableau;
using comb::Weight;
using lin::IntegerMatrix;
using lin::Ring;

enum class AtomKind { divided, exterior, symmetric, weyl, schur };

struct Atom {
  AtomKind kind = AtomKind::divided;
  int a = 0;         // degree for D, L, S
  Partition lambda;  // shape for W, Schur

  int degree() const;
  std::string to_string() const;
  auto operator<=>(const Atom&) const = default;
};

class FunctorExpr {
 public:
  FunctorExpr() = default;
  explicit FunctorExpr(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {}

  // Grammar: atoms D(a), L(a), S(a), W(partition), Schur(partition) joined by '*'.
  static FunctorExpr parse(std::string_view text);

  const std::vector<Atom>& atoms() const { return atoms_; }
  int degree() const;
  bool has_schur() const;
  std::string to_string() const;

  friend FunctorExpr operator*(const FunctorExpr& a, const FunctorExpr& b);
  auto operator<=>(const FunctorExpr&) const = default;

 private:
  std::vector<Atom> atoms_;
};

FunctorExpr divided(int a);
FunctorExpr exterior(int a);
FunctorExpr symmetric(int a);
FunctorExpr weyl(const Partition& lambda);
FunctorExpr schur(const Partition& lambda);

FunctorExpr kuhn_dual(const FunctorExpr& f);

// e^alpha (x) e_beta in (D^A (x) L^B)(k^n); beta holds 1-based indices.
struct TableauMonomial {
  Weight alpha;
  std::vector<int> beta;

  int n() const { return static_cast<int>(alpha.size()); }
  Weight weight() const;
  bool is_standard() const;  // min supp(alpha) < beta_1
  Tableau tableau() const;   // first row from alpha, first column below it from beta
  std::string to_string() const;
  auto operator<=>(const TableauMonomial&) const = default;
};

enum class WeylModel { box, hook, automatic };

// Selects how Weyl atoms of hook shape are realized; non-hooks always use the
// box model. Both give the same ordered standard-tableau basis.
void set_weyl_model(WeylModel m);
WeylModel weyl_model();

struct WeightSpace {
  FunctorExpr functor;
  Weight weight;
  Ring ring;
  std::vector<std::string> labels;
  // For a single Weyl atom: columns are the basis vectors inside the ambient
  // exterior-tensor model, rows indexed by `ambient_keys`.
  IntegerMatrix ambient_coordinates;
  std::vector<std::vector<int>> ambient_keys;

  std::size_t rank() const { return labels.size(); }
};

WeightSpace weight_space(const FunctorExpr& f, const Weight& w, const Ring& ring = Ring::integers());
std::size_t weight_space_rank(const FunctorExpr& f, const Weight& w);

// Image weight of w under the position map `target` (0-based) into `len` slots.
Weight push_weight(const Weight& w, const std::vector<int>& target, int len);

// Matrix of P(f) : P_w -> P_{f(w)} for a weakly increasing position map.
IntegerMatrix monotone_matrix(const FunctorExpr& f, const Weight& w, const std::vector<int>& target, int len,
                              const Ring& ring = Ring::integers());

std::vector<int> specialization_positions(int len, int i);  // psi_i on length len+1
std::vector<int> generization_positions(int len, int i);    // psi^i on length len

// psi_i : P_w -> P_{psi_i(w)}, w of length n+1, 1 <= i <= n.
IntegerMatrix specialization_matrix(const FunctorExpr& f, const Weight& w, int i, const Ring& ring = Ring::integers());
// psi^i : P_w -> P_{psi^i(w)}, w of length n, 0 <= i <= n.
IntegerMatrix generization_matrix(const FunctorExpr& f, const Weight& w, int i, const Ring& ring = Ring::integers());

Weight specialize_weight(const Weight& w, int i);
Weight generize_weight(const Weight& w, int i);

// ---- hook presentation ---------------------------------------------------

using HookElement = std::map<TableauMonomial, Integer>;

void add_term(HookElement& x, const TableauMonomial& m, const Integer& c);

// Standard monomials of W_(A,1^B) at weight w, ordered by reading word.
std::vector<TableauMonomial> hook_standard_basis(int a, int b, const Weight& w);
// Coordinates of x modulo im(Upsilon) in the standard basis at weight w,
// by linear algebra on the cokernel presentation.
std::vector<Integer> hook_reduce(const HookElement& x, int a, int b, const Weight& w);
// Same result via the explicit one-step straightening rule; used for the psi action.
std::vector<Integer> hook_reduce_explicit(const HookElement& x, int a, int b, const Weight& w);

// (D^A (x) L^B)(k^n) basis monomials at weight w.
std::vector<TableauMonomial> hook_ambient_monomials(int a, int b, const Weight& w);

// Koszul map Upsilon(x) = sum_i eta_i(x) ^ e_i.
HookElement upsilon(const HookElement& x);

// Applies a weakly increasing position map to a combination of monomials.
HookElement push_monomials(const HookElement& x, const std::vector<int>& target, int len);

// ---- box model -------------------------------------------------------------

// Ambient vector of the box map image of a row tableau (rows weakly increasing).
std::map<std::vector<int>, Integer> box_image(const Partition& lambda, const Tableau& rows);
// Coordinates of box_image(rows) in the standard basis at the tableau's content.
std::vector<Integer> box_straighten(const Partition& lambda, const Tableau& rows, int n);

// Row tableaux of shape lambda and content w (all elements of the D^lambda basis).
std::vector<Tableau> row_tableaux(const Partition& lambda, const Weight& w);

void clear_caches();

}  // namespace schurext::poly
