#pragma once

#include <map>
#include <string>
#include <vector>

#include "schurext/polyfun.hpp"
#include "schurext/report.hpp"

namespace schurext::spec {

using comb::Partition;
using comb::Weight;
using lin::ChainComplex;
using lin::HomologyGroup;
using lin::Ring;
using poly::FunctorExpr;

enum class Variant { full, graded, extended, degenerate };

std::string variant_name(Variant v);

struct FilteredFamily {
  FunctorExpr functor;
  int a = 1;
  Variant variant = Variant::full;
  // Degree window, required for the extended and degenerate variants.
  int window_lo = 1;
  int window_hi = 0;
};

// Weights indexing term n, in canonical (lexicographically decreasing) order.
std::vector<Weight> family_weights(const FilteredFamily& fam, int n);
// Degree range the complex is built on.
std::pair<int, int> family_degrees(const FilteredFamily& fam);

ChainComplex build_complex(const FilteredFamily& fam, const Ring& ring = Ring::integers());

// Offset of each weight's block inside term n.
struct TermLayout {
  std::vector<Weight> weights;
  std::vector<std::size_t> offsets;
  std::size_t rank = 0;
  std::size_t offset_of(const Weight& w) const;  // throws if absent
};
TermLayout term_layout(const FilteredFamily& fam, int n);

// P^(a)(k^.)^full: term n is the sum of P_{(a,d)} over full-support d of length n.
ChainComplex shifted_weight_complex(const FunctorExpr& p, int a, const Ring& ring = Ring::integers());

struct ExtTable {
  Ring ring;
  std::string source;
  std::string target;
  std::map<int, HomologyGroup> entries;
  std::vector<std::string> rewrites;

  HomologyGroup at(int j) const;
  std::map<int, std::size_t> dimensions() const;
  // Entries only; descriptions and rewrite chains are ignored.
  bool same_groups(const ExtTable& o) const;
  bool operator==(const ExtTable& o) const = default;
};

// Ext^i(W_mu, P) for a hook mu = (a,1^b), as H_{b+1-i}(F^a(P)).
ExtTable ext_from_hook(const Partition& mu, const FunctorExpr& p, const Ring& ring = Ring::integers());

// Ext^j(S_lambda, S_mu), rewritten to a hook-source Weyl computation.
ExtTable ext_schur_query(const Partition& lambda, const Partition& mu, const Ring& ring = Ring::integers());

// dim H^j_st(S_mu) over F_p for j = 0..|mu|.
std::map<int, std::size_t> stable_coh_dims(const Partition& mu, int p);
// Same for a functor P, computed from F^1 of its Kuhn dual.
std::map<int, std::size_t> stable_coh_dims(const FunctorExpr& p, int prime);

// Exactness of 0 -> F^{a+1} -> F^a -> grF^a -> 0 and of its homology sequence.
CheckReport verify_les(const FunctorExpr& p, int a, const Ring& ring = Ring::integers());

// F^a-hat = F^a + D^a on the window, closure of D^a, and acyclicity of D^a inside it.
CheckReport degenerate_split_check(const FunctorExpr& p, int a, int window_lo, int window_hi,
                                   const Ring& ring = Ring::integers());

}  // namespace schurext::spec
