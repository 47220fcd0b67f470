#include "schurext/errors.hpp"
#include "schurext/speccomplex.hpp"

#include <algorithm>

namespace schurext::spec {

using lin::IntegerMatrix;
using lin::Submodule;

namespace {

// Coordinate map between two layouts: the block of each shared weight is an identity.
IntegerMatrix coordinate_map(const TermLayout& from, const TermLayout& to, const FunctorExpr& f) {
  IntegerMatrix m(to.rank, from.rank);
  for (std::size_t k = 0; k < from.weights.size(); ++k) {
    auto it = std::find(to.weights.begin(), to.weights.end(), from.weights[k]);
    if (it == to.weights.end()) continue;
    const std::size_t r = poly::weight_space_rank(f, from.weights[k]);
    m.add_block(to.offsets[it - to.weights.begin()], from.offsets[k], IntegerMatrix::identity(r));
  }
  return m;
}

std::string at_degree(const std::string& what, int n) { return what + " at degree " + std::to_string(n); }

}  // namespace

CheckReport verify_les(const FunctorExpr& p, int a, const Ring& ring) {
  CheckReport rep;
  rep.name = "les(" + p.to_string() + ",a=" + std::to_string(a) + "," + ring.name() + ")";
  const int d = p.degree();
  if (a < 1 || a >= d) {
    rep.fail("level a must satisfy 1 <= a < degree");
    return rep;
  }
  const FilteredFamily fa{p, a + 1, Variant::full}, fb{p, a, Variant::full}, fc{p, a, Variant::graded};
  const auto A = build_complex(fa, ring), B = build_complex(fb, ring), C = build_complex(fc, ring);
  const int top = d - a + 1;
  std::map<int, IntegerMatrix> f, g;
  for (int n = 0; n <= top + 1; ++n) {
    TermLayout la, lb, lc;
    if (n >= 1 && n <= top) {
      lb = term_layout(fb, n);
      lc = term_layout(fc, n);
      if (n <= top - 1) la = term_layout(fa, n);
    }
    f[n] = coordinate_map(la, lb, p).reduced(ring);
    g[n] = coordinate_map(lb, lc, p).reduced(ring);
  }

  for (int n = 1; n <= top; ++n) {
    Submodule im_f = Submodule::image(f[n], ring), ker_g = Submodule::kernel(g[n], ring);
    rep.expect(Submodule::kernel(f[n], ring).rank() == 0, at_degree("inclusion is not injective", n));
    rep.expect(Submodule::image(g[n], ring) == Submodule::whole(C.rank(n), ring),
               at_degree("projection is not surjective", n));
    rep.expect(im_f == ker_g, at_degree("ker g != im f", n));
    rep.expect(lin::equal_over(B.diff(n) * f[n], f[n - 1] * A.diff(n), ring), at_degree("f is not a chain map", n));
    rep.expect(lin::equal_over(C.diff(n) * g[n], g[n - 1] * B.diff(n), ring), at_degree("g is not a chain map", n));
  }

  auto Z = [&](const ChainComplex& X, int n) { return Submodule::kernel(X.diff(n), ring); };
  auto Bd = [&](const ChainComplex& X, int n) { return Submodule::image(X.diff(n + 1), ring); };
  for (int n = 1; n <= top; ++n) {
    const IntegerMatrix dB1 = B.diff(n + 1), dB = B.diff(n);
    // at H_n(A): ker f_* = im delta
    {
      Submodule lhs = Submodule::whole(B.rank(n + 1), ring).mapped(dB1).preimage(f[n]);
      Submodule rhs = Z(C, n + 1).preimage(g[n + 1]).mapped(dB1).preimage(f[n]) + Bd(A, n);
      rep.expect(lhs == rhs, at_degree("homology sequence not exact at H(F^{a+1})", n));
    }
    // at H_n(B): ker g_* = im f_*
    {
      Submodule lhs = Z(B, n).intersect(Bd(C, n).preimage(g[n]));
      Submodule rhs = Z(A, n).mapped(f[n]) + Bd(B, n);
      rep.expect(lhs == rhs, at_degree("homology sequence not exact at H(F^a)", n));
    }
    // at H_n(C): ker delta = im g_*
    {
      Submodule lhs = Bd(A, n - 1).mapped(f[n - 1]).preimage(dB).mapped(g[n]);
      Submodule rhs = Z(B, n).mapped(g[n]) + Bd(C, n);
      rep.expect(lhs == rhs, at_degree("homology sequence not exact at H(grF^a)", n));
    }
  }
  return rep;
}

CheckReport degenerate_split_check(const FunctorExpr& p, int a, int window_lo, int window_hi, const Ring& ring) {
  CheckReport rep;
  rep.name = "split(" + p.to_string() + ",a=" + std::to_string(a) + ",window=" + std::to_string(window_lo) + ".." +
             std::to_string(window_hi) + ")";
  const int d = p.degree();
  if (window_lo < 1 || window_hi < window_lo) {
    rep.fail("empty or invalid window");
    return rep;
  }
  if (window_hi < d + 2)
    rep.fail("window ends at " + std::to_string(window_hi) + " < degree+2 = " + std::to_string(d + 2) +
             "; boundary degrees cover the support and cannot be verified");
  rep.note("boundary degree " + std::to_string(window_hi) + " unverified");
  if (window_lo > 1) rep.note("boundary degree " + std::to_string(window_lo) + " unverified");

  const FilteredFamily fe{p, a, Variant::extended, window_lo, window_hi};
  const FilteredFamily fd{p, a, Variant::degenerate, window_lo, window_hi};
  const FilteredFamily ff{p, a, Variant::full};
  const auto E = build_complex(fe, ring), D = build_complex(fd, ring), F = build_complex(ff, ring);

  std::map<int, IntegerMatrix> to_e_from_d, to_d_from_e, to_f_from_e;
  for (int n = window_lo - 1; n <= window_hi; ++n) {
    TermLayout le, ld, lf;
    if (n >= window_lo) {
      le = term_layout(fe, n);
      ld = term_layout(fd, n);
      lf = term_layout(ff, n);
      std::vector<Weight> u = lf.weights;
      u.insert(u.end(), ld.weights.begin(), ld.weights.end());
      std::sort(u.begin(), u.end(), std::greater<>());
      rep.expect(u == le.weights && le.rank == lf.rank + ld.rank,
                 at_degree("extended term is not the direct sum of full and degenerate terms", n));
    } else if (n >= 1) {
      lf = term_layout(ff, n);
    }
    to_e_from_d[n] = coordinate_map(ld, le, p);
    to_d_from_e[n] = coordinate_map(le, ld, p);
    to_f_from_e[n] = coordinate_map(le, lf, p);
  }
  for (int n = window_lo + 1; n <= window_hi; ++n) {
    // differential of a degenerate element has no full-support component
    IntegerMatrix leak = to_f_from_e[n - 1] * E.diff(n) * to_e_from_d[n];
    rep.expect(leak.reduced(ring).is_zero(), at_degree("differential leaves the degenerate part", n));
    IntegerMatrix restricted = to_d_from_e[n - 1] * E.diff(n) * to_e_from_d[n];
    rep.expect(lin::equal_over(restricted, D.diff(n), ring),
               at_degree("degenerate complex differs from the restriction", n));
  }
  for (int n = window_lo + 1; n < window_hi; ++n) {
    rep.expect(lin::homology(D, n).is_zero(), at_degree("degenerate part is not acyclic", n));
    rep.expect(lin::homology(E, n) == lin::homology(F, n),
               at_degree("extended and full complexes have different homology", n));
  }
  return rep;
}

}  // namespace schurext::spec
