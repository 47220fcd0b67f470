#include "schurext/speccomplex.hpp"
#include "schurext/errors.hpp"
#include "schurext/guard.hpp"

#include <algorithm>

namespace schurext::spec {

using lin::IntegerMatrix;

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::full:
      return "full";
    case Variant::graded:
      return "graded";
    case Variant::extended:
      return "extended";
    case Variant::degenerate:
      return "degenerate";
  }
  return {};
}

namespace {

void check_family(const FilteredFamily& fam) {
  if (fam.functor.has_schur()) throw DomainError("Schur atoms must be rewritten by kuhn_dual before evaluation");
  const int d = fam.functor.degree();
  check_complex_degree(d, "build_complex");
  if (fam.a < 1 || fam.a > d) throw DomainError("filtration level must satisfy 1 <= a <= degree");
  if ((fam.variant == Variant::extended || fam.variant == Variant::degenerate) && fam.window_hi < fam.window_lo)
    throw DomainError("extended and degenerate complexes need a finite window");
  if (fam.window_lo < 1 && (fam.variant == Variant::extended || fam.variant == Variant::degenerate))
    throw DomainError("window must start at degree >= 1");
}

bool has_zero(const Weight& w) { return std::find(w.begin(), w.end(), 0) != w.end(); }

ChainComplex assemble(const std::map<int, TermLayout>& terms, int lo, int hi, const FunctorExpr& f, int psi_offset,
                      const Ring& ring) {
  std::map<int, std::size_t> ranks;
  std::map<int, IntegerMatrix> diffs;
  std::map<int, std::vector<std::string>> labels;
  for (int n = lo; n <= hi; ++n) {
    const TermLayout& t = terms.at(n);
    ranks[n] = t.rank;
    auto& lab = labels[n];
    for (auto& w : t.weights)
      for (auto& l : poly::weight_space(f, w).labels) lab.push_back(comb::weight_to_string(w) + ":" + l);
  }
  for (int n = lo + 1; n <= hi; ++n) {
    const TermLayout& src = terms.at(n);
    const TermLayout& dst = terms.at(n - 1);
    std::map<Weight, std::size_t> index;
    for (std::size_t k = 0; k < dst.weights.size(); ++k) index[dst.weights[k]] = dst.offsets[k];
    IntegerMatrix m(dst.rank, src.rank);
    for (std::size_t k = 0; k < src.weights.size(); ++k) {
      const Weight& w = src.weights[k];
      const int len = static_cast<int>(w.size());
      for (int i = 1; i + psi_offset <= len - 1; ++i) {
        const int j = i + psi_offset;
        auto it = index.find(poly::specialize_weight(w, j));
        if (it == index.end()) continue;
        m.add_block(it->second, src.offsets[k], poly::specialization_matrix(f, w, j), i % 2 ? 1 : -1);
      }
    }
    diffs[n] = std::move(m);
  }
  return ChainComplex(ring, lo, hi, ranks, diffs, labels);
}

TermLayout layout_of(const FunctorExpr& f, std::vector<Weight> weights) {
  TermLayout t;
  t.weights = std::move(weights);
  for (auto& w : t.weights) {
    t.offsets.push_back(t.rank);
    t.rank += poly::weight_space_rank(f, w);
  }
  return t;
}

}  // namespace

std::size_t TermLayout::offset_of(const Weight& w) const {
  auto it = std::find(weights.begin(), weights.end(), w);
  if (it == weights.end()) throw DomainError("weight " + comb::weight_to_string(w) + " is not in this term");
  return offsets[it - weights.begin()];
}

std::pair<int, int> family_degrees(const FilteredFamily& fam) {
  if (fam.variant == Variant::extended || fam.variant == Variant::degenerate) return {fam.window_lo, fam.window_hi};
  return {1, fam.functor.degree() - fam.a + 1};
}

std::vector<Weight> family_weights(const FilteredFamily& fam, int n) {
  check_family(fam);
  const int d = fam.functor.degree();
  std::vector<Weight> out;
  switch (fam.variant) {
    case Variant::full:
      return comb::enumerate_weights(d, n, true, fam.a);
    case Variant::graded:
      for (auto& w : comb::enumerate_weights(d, n, true, fam.a))
        if (w[0] == fam.a) out.push_back(w);
      return out;
    case Variant::extended:
    case Variant::degenerate:
      for (auto& w : comb::enumerate_weights(d, n, false, fam.a)) {
        if (w.back() == 0) continue;
        if (fam.variant == Variant::degenerate && !has_zero(w)) continue;
        out.push_back(w);
      }
      return out;
  }
  return out;
}

TermLayout term_layout(const FilteredFamily& fam, int n) { return layout_of(fam.functor, family_weights(fam, n)); }

ChainComplex build_complex(const FilteredFamily& fam, const Ring& ring) {
  check_family(fam);
  auto [lo, hi] = family_degrees(fam);
  std::map<int, TermLayout> terms;
  for (int n = lo; n <= hi; ++n) terms[n] = term_layout(fam, n);
  return assemble(terms, lo, hi, fam.functor, 0, ring);
}

ChainComplex shifted_weight_complex(const FunctorExpr& p, int a, const Ring& ring) {
  const int d = p.degree();
  check_complex_degree(d, "shifted_weight_complex");
  if (a < 1 || a > d) throw DomainError("shift level must satisfy 1 <= a <= degree");
  std::map<int, TermLayout> terms;
  for (int n = 0; n <= d - a; ++n) {
    std::vector<Weight> ws;
    for (auto& w : comb::enumerate_weights(d - a, n, true, 0)) {
      Weight full{a};
      full.insert(full.end(), w.begin(), w.end());
      ws.push_back(full);
    }
    terms[n] = layout_of(p, ws);
  }
  // Positions shift by one: psi_i of P^(a) is psi_{i+1} of P.
  return assemble(terms, 0, d - a, p, 1, ring);
}

HomologyGroup ExtTable::at(int j) const {
  auto it = entries.find(j);
  return it == entries.end() ? HomologyGroup{ring, 0, {}} : it->second;
}

std::map<int, std::size_t> ExtTable::dimensions() const {
  std::map<int, std::size_t> out;
  for (auto& [j, g] : entries) {
    if (!ring.is_field() && !g.invariant_factors.empty())
      throw DomainError("dimension of a group with torsion over Z is undefined");
    out[j] = g.dimension();
  }
  return out;
}

bool ExtTable::same_groups(const ExtTable& o) const {
  if (!(ring == o.ring)) return false;
  std::vector<int> keys;
  for (auto& [j, g] : entries) keys.push_back(j);
  for (auto& [j, g] : o.entries) keys.push_back(j);
  for (int j : keys)
    if (!(at(j) == o.at(j))) return false;
  return true;
}

ExtTable ext_from_hook(const Partition& mu, const FunctorExpr& p, const Ring& ring) {
  if (!mu.is_hook()) throw DomainError("source " + mu.to_string() + " is not a hook");
  if (p.has_schur()) throw DomainError("target must not contain Schur atoms");
  if (p.degree() != mu.size())
    throw DomainError("degree mismatch: |mu| = " + std::to_string(mu.size()) + ", degree(P) = " +
                      std::to_string(p.degree()));
  const int a = mu[0], b = mu.length() - 1;
  ExtTable t;
  t.ring = ring;
  t.source = "W(" + mu.to_string() + ")";
  t.target = p.to_string();
  auto c = build_complex({p, a, Variant::full}, ring);
  for (int i = 0; i <= b + 1; ++i) t.entries[i] = lin::homology(c, b + 1 - i);
  t.rewrites.push_back("Ext^j(" + t.source + "," + t.target + ") = H_{" + std::to_string(b + 1) + "-j}(F^" +
                       std::to_string(a) + "(" + t.target + "))");
  return t;
}

ExtTable ext_schur_query(const Partition& lambda, const Partition& mu, const Ring& ring) {
  if (lambda.size() != mu.size()) throw DomainError("Ext between functors of different degrees");
  const std::string orig = "Ext^j(S(" + lambda.to_string() + "),S(" + mu.to_string() + "))";
  ExtTable t;
  if (mu.is_hook()) {
    t = ext_from_hook(mu, poly::weyl(lambda), ring);
    t.rewrites.insert(t.rewrites.begin(), {orig, "= Ext^j(W(" + mu.to_string() + "),W(" + lambda.to_string() + "))"});
  } else if (lambda.conjugate().is_hook()) {
    const Partition lc = lambda.conjugate(), mc = mu.conjugate();
    t = ext_from_hook(lc, poly::weyl(mc), ring);
    t.rewrites.insert(t.rewrites.begin(), {orig, "= Ext^j(W(" + lc.to_string() + "),W(" + mc.to_string() + "))"});
  } else {
    throw NoHookRoute("no hook route for " + orig + ": neither " + mu.to_string() + " nor the conjugate of " +
                      lambda.to_string() + " is a hook");
  }
  t.source = "S(" + lambda.to_string() + ")";
  t.target = "S(" + mu.to_string() + ")";
  return t;
}

std::map<int, std::size_t> stable_coh_dims(const FunctorExpr& p, int prime) {
  const Ring ring = Ring::prime_field(prime);
  const FunctorExpr q = poly::kuhn_dual(p);
  if (q.has_schur()) throw DomainError("functor mixes Weyl and Schur atoms");
  auto c = build_complex({q, 1, Variant::full}, ring);
  std::map<int, std::size_t> out;
  for (int j = 0; j <= p.degree(); ++j) out[j] = lin::homology(c, j).dimension();
  return out;
}

std::map<int, std::size_t> stable_coh_dims(const Partition& mu, int p) {
  auto out = stable_coh_dims(poly::schur(mu), p);
  for (auto& [j, v] : out)
    if (v && (j < mu.length() || j > mu.size()))
      throw Error("stable cohomology of S(" + mu.to_string() + ") is nonzero in degree " + std::to_string(j) +
                  ", outside [l(mu), |mu|]");
  return out;
}

}  // namespace schurext::spec
