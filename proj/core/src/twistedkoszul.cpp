#include "schurext/twistedkoszul.hpp"
#include "schurext/errors.hpp"
#include "schurext/guard.hpp"

#include <algorithm>
#include <functional>

namespace schurext::koszul {

using lin::ChainComplex;
using lin::IntegerMatrix;
using spec::FilteredFamily;
using spec::TermLayout;
using spec::Variant;

namespace {

int sort_with_sign(std::vector<int>& v) {
  int sign = 1;
  for (std::size_t i = 1; i < v.size(); ++i)
    for (std::size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
      std::swap(v[j - 1], v[j]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] == v[i - 1]) return 0;
  return sign;
}

int sum_sign(const std::vector<int>& beta) {
  long long s = 0;
  for (int b : beta) s += b - 1;
  return s % 2 ? -1 : 1;
}

AmbientElement push(const AmbientElement& x, const std::vector<int>& target, int len) {
  AmbientElement out{x.A, x.B, len, poly::push_monomials(x.terms, target, len)};
  return out;
}

}  // namespace

AmbientElement AmbientElement::monomial(const TableauMonomial& m, const Integer& c) {
  AmbientElement x{comb::weight_size(m.alpha), static_cast<int>(m.beta.size()), m.n(), {}};
  x.add(m.alpha, m.beta, c);
  return x;
}

void AmbientElement::add(const Weight& alpha, const std::vector<int>& beta, const Integer& c) {
  if (static_cast<int>(alpha.size()) != n || comb::weight_size(alpha) != A || static_cast<int>(beta.size()) != B)
    throw ShapeMismatch("monomial does not lie in (D^" + std::to_string(A) + " (x) L^" + std::to_string(B) + ")(k^" +
                        std::to_string(n) + ")");
  for (int b : beta)
    if (b < 1 || b > n) throw DomainError("exterior index out of range");
  std::vector<int> sorted = beta;
  const int s = sort_with_sign(sorted);
  if (s) poly::add_term(terms, {alpha, sorted}, c * s);
}

void AmbientElement::add(const AmbientElement& o, const Integer& c) {
  if (o.A != A || o.B != B || o.n != n) throw ShapeMismatch("adding elements of different ambient spaces");
  for (auto& [m, v] : o.terms) poly::add_term(terms, m, v * c);
}

std::string AmbientElement::to_string() const {
  if (terms.empty()) return "0";
  std::string s;
  for (auto& [m, c] : terms) {
    const bool neg = c < 0;
    const Integer mag = neg ? Integer(-c) : c;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    if (mag != 1) s += schurext::to_string(mag) + "*";
    s += m.to_string();
  }
  return s;
}

AmbientElement operator+(const AmbientElement& x, const AmbientElement& y) {
  AmbientElement out = x;
  out.add(y);
  return out;
}

AmbientElement operator-(const AmbientElement& x, const AmbientElement& y) {
  AmbientElement out = x;
  out.add(y, -1);
  return out;
}

AmbientElement operator*(const Integer& c, const AmbientElement& x) {
  AmbientElement out = AmbientElement::zero(x.A, x.B, x.n);
  out.add(x, c);
  return out;
}

AmbientElement contraction_eta(int j, const AmbientElement& x) {
  if (j < 1 || j > x.n) throw DomainError("contraction index " + std::to_string(j) + " out of range");
  if (x.A < 1) throw DomainError("contraction needs A >= 1");
  AmbientElement out = AmbientElement::zero(x.A - 1, x.B, x.n);
  for (auto& [m, c] : x.terms) {
    if (!m.alpha[j - 1]) continue;
    TableauMonomial t = m;
    --t.alpha[j - 1];
    poly::add_term(out.terms, t, c);
  }
  return out;
}

AmbientElement wedge(const AmbientElement& x, int j) {
  if (j < 1 || j > x.n) throw DomainError("wedge index " + std::to_string(j) + " out of range");
  AmbientElement out = AmbientElement::zero(x.A, x.B + 1, x.n);
  for (auto& [m, c] : x.terms) {
    std::vector<int> beta = m.beta;
    beta.push_back(j);
    out.add(m.alpha, beta, c);
  }
  return out;
}

AmbientElement koszul_upsilon(const AmbientElement& x) {
  if (x.A < 1) throw DomainError("Upsilon needs A >= 1");
  return {x.A - 1, x.B + 1, x.n, poly::upsilon(x.terms)};
}

AmbientElement specialize(const AmbientElement& x, int i) {
  if (i < 1 || i > x.n - 1) throw DomainError("specialization index out of range");
  return push(x, poly::specialization_positions(x.n, i), x.n - 1);
}

AmbientElement generize(const AmbientElement& x, int s) {
  if (s < 0 || s > x.n) throw DomainError("generization index out of range");
  return push(x, poly::generization_positions(x.n, s), x.n + 1);
}

AmbientElement boundary(const AmbientElement& x) {
  AmbientElement out = AmbientElement::zero(x.A, x.B, std::max(x.n - 1, 0));
  for (int i = 1; i <= x.n - 1; ++i) out.add(specialize(x, i), i % 2 ? 1 : -1);
  return out;
}

AmbientElement phi(const AmbientElement& x) {
  if (x.A < 1) throw DomainError("Phi needs A >= 1");
  AmbientElement out = AmbientElement::zero(x.A - 1, x.B + 1, x.n + 1);
  for (int t = 1; t <= x.n; ++t) {
    const AmbientElement eta = contraction_eta(t, x);
    if (eta.is_zero()) continue;
    for (int s = t; s <= x.n; ++s) out.add(wedge(generize(eta, s), s + 1), s % 2 ? -1 : 1);
  }
  return out;
}

AmbientElement upsilon_via_psi(const AmbientElement& x) {
  if (x.A < 1) throw DomainError("Upsilon needs A >= 1");
  AmbientElement out = AmbientElement::zero(x.A - 1, x.B + 1, x.n);
  for (int t = 1; t <= x.n; ++t) {
    const AmbientElement eta = contraction_eta(t, x);
    if (eta.is_zero()) continue;
    for (int s = t; s <= x.n; ++s) {
      const AmbientElement y = wedge(generize(eta, s), s + 1);
      for (int i = s; i <= std::min(s + 1, x.n); ++i) out.add(specialize(y, i), (i + s) % 2 ? -1 : 1);
    }
  }
  return out;
}

AmbientElement full_support_part(const AmbientElement& x) {
  AmbientElement out = AmbientElement::zero(x.A, x.B, x.n);
  for (auto& [m, c] : x.terms) {
    const Weight w = m.weight();
    if (std::find(w.begin(), w.end(), 0) == w.end()) out.terms.emplace(m, c);
  }
  return out;
}

std::vector<TableauMonomial> ambient_monomials(int A, int B, int n) {
  if (A < 0 || B < 0 || n < 0) throw DomainError("ambient parameters must be nonnegative");
  std::vector<TableauMonomial> out;
  if (B > n || (n == 0 && A > 0)) return out;
  std::vector<Weight> alphas;
  if (n == 0) {
    alphas.push_back({});
  } else {
    Weight cur(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
      if (pos == n - 1) {
        cur[pos] = left;
        alphas.push_back(cur);
        return;
      }
      for (int v = left; v >= 0; --v) {
        cur[pos] = v;
        rec(pos + 1, left - v);
      }
    };
    rec(0, A);
  }
  std::vector<int> beta;
  std::function<void(const Weight&, int)> pick = [&](const Weight& alpha, int from) {
    if (static_cast<int>(beta.size()) == B) {
      out.push_back({alpha, beta});
      return;
    }
    for (int j = from; j <= n; ++j) {
      beta.push_back(j);
      pick(alpha, j + 1);
      beta.pop_back();
    }
  };
  for (auto& alpha : alphas) pick(alpha, 1);
  std::sort(out.begin(), out.end());
  return out;
}

// ---- divided powers ---------------------------------------------------------

SignedBlockData signed_block_data(const Weight& d, const OrderedSetPartition& I) {
  if (!comb::in_par(I, d)) throw DomainError(I.to_string() + " is not in Par(" + comb::weight_to_string(d) + ")");
  const int N = I.ground_size();
  SignedBlockData out;
  out.alpha.assign(N, 0);
  std::vector<bool> is_min(N + 1, false);
  for (std::size_t k = 0; k < I.blocks.size(); ++k) {
    const int i_k = *std::min_element(I.blocks[k].begin(), I.blocks[k].end());
    out.alpha[i_k - 1] = d[k] + 1 - static_cast<int>(I.blocks[k].size());
    is_min[i_k] = true;
  }
  for (int x = 1; x <= N; ++x)
    if (!is_min[x]) out.beta.push_back(x);
  out.sgn = sum_sign(out.beta);
  out.m = {out.alpha, out.beta};
  return out;
}

AmbientElement phi_divided(int B, const Weight& d) {
  if (B < 0) throw DomainError("B must be nonnegative");
  const int n = static_cast<int>(d.size());
  const int size = comb::weight_size(d);
  if (B > size - 1) throw DomainError("Phi^[B] needs B < |d|");
  AmbientElement out = AmbientElement::zero(size - B, B, n + B);
  for (auto& I : comb::ordered_partitions(d, n + B)) {
    const SignedBlockData s = signed_block_data(d, I);
    poly::add_term(out.terms, s.m, s.sgn);
  }
  return out;
}

OrderedSetPartition sigma_ks(const OrderedSetPartition& I, const Weight& d, int k, int s) {
  if (!comb::in_par(I, d)) throw DomainError(I.to_string() + " is not in Par(" + comb::weight_to_string(d) + ")");
  const int N = I.ground_size();
  if (k < 1 || k > static_cast<int>(I.blocks.size())) throw DomainError("block index out of range");
  const auto& blk = I.blocks[k - 1];
  const int i_k = *std::min_element(blk.begin(), blk.end());
  if (static_cast<int>(blk.size()) >= d[k - 1]) throw DomainError("block " + std::to_string(k) + " is already full");
  if (s < i_k || s > N) throw DomainError("position s must satisfy i_k <= s <= N");
  OrderedSetPartition J = I;
  for (auto& b : J.blocks)
    for (int& x : b)
      if (x > s) ++x;
  auto& target = J.blocks[k - 1];
  target.insert(std::upper_bound(target.begin(), target.end(), s + 1), s + 1);
  return J;
}

std::vector<SigmaPreimage> sigma_preimages(const OrderedSetPartition& J, const Weight& d) {
  if (!comb::in_par(J, d)) throw DomainError(J.to_string() + " is not in Par(" + comb::weight_to_string(d) + ")");
  std::vector<SigmaPreimage> out;
  for (std::size_t k = 0; k < J.blocks.size(); ++k) {
    const auto& blk = J.blocks[k];
    const int first = *std::min_element(blk.begin(), blk.end());
    for (int y : blk) {
      if (y == first) continue;
      OrderedSetPartition I = J;
      auto& b = I.blocks[k];
      b.erase(std::find(b.begin(), b.end(), y));
      for (auto& bb : I.blocks)
        for (int& x : bb)
          if (x > y) --x;
      out.push_back({static_cast<int>(k) + 1, y - 1, I});
    }
  }
  std::sort(out.begin(), out.end(), [](const SigmaPreimage& a, const SigmaPreimage& b) { return a.s < b.s; });
  return out;
}

// ---- retraction ---------------------------------------------------------------

bool is_terminal(int B, const TableauMonomial& m) {
  const int n = m.n() - B;
  if (n < 1 || static_cast<int>(m.beta.size()) != B) return false;
  for (int i = 0; i < B; ++i)
    if (m.beta[i] != n + 1 + i) return false;
  for (int i = n; i < m.n(); ++i)
    if (m.alpha[i]) return false;
  return true;
}

AmbientElement theta_retraction(int B, const TableauMonomial& m) {
  if (!m.is_standard()) throw DomainError("Theta is defined on standard monomials; got " + m.to_string());
  if (static_cast<int>(m.beta.size()) != B) throw ShapeMismatch("monomial has the wrong exterior degree");
  const int A = comb::weight_size(m.alpha);
  const int n = m.n() - B;
  AmbientElement out = AmbientElement::zero(A + B, 0, std::max(n, 0));
  if (!is_terminal(B, m)) return out;
  Weight d(m.alpha.begin(), m.alpha.begin() + n);
  d[0] += B;
  poly::add_term(out.terms, {d, {}}, sum_sign(m.beta));
  return out;
}

// ---- chain maps -----------------------------------------------------------------

namespace {

ChainComplex empty_complex(const Ring& ring) { return ChainComplex(ring, 0, -1, {}, {}); }

struct HookFamily {
  int A = 0;
  int B = 0;
  int a = 1;
  Variant variant = Variant::full;

  FilteredFamily family() const { return {poly::weyl(comb::hook(A, B)), a, variant}; }
  std::pair<int, int> degrees() const { return spec::family_degrees(family()); }
};

using MonomialMap = std::function<AmbientElement(const TableauMonomial&)>;

std::map<int, IntegerMatrix> blocks_of(const HookFamily& src, const HookFamily& dst, int shift, const MonomialMap& f) {
  const FilteredFamily fs = src.family(), fd = dst.family();
  auto [slo, shi] = src.degrees();
  auto [dlo, dhi] = dst.degrees();
  std::map<int, IntegerMatrix> blocks;
  for (int n = slo; n <= shi; ++n) {
    const TermLayout ls = spec::term_layout(fs, n);
    TermLayout ld;
    if (n + shift >= dlo && n + shift <= dhi) ld = spec::term_layout(fd, n + shift);
    std::map<Weight, std::size_t> index;
    for (std::size_t k = 0; k < ld.weights.size(); ++k) index[ld.weights[k]] = ld.offsets[k];
    IntegerMatrix m(ld.rank, ls.rank);
    for (std::size_t k = 0; k < ls.weights.size(); ++k) {
      const auto basis = poly::hook_standard_basis(src.A, src.B, ls.weights[k]);
      for (std::size_t c = 0; c < basis.size(); ++c) {
        const AmbientElement y = f(basis[c]);
        std::map<Weight, HookElement> by_weight;
        for (auto& [mono, v] : y.terms) by_weight[mono.weight()].emplace(mono, v);
        for (auto& [w, part] : by_weight) {
          auto it = index.find(w);
          if (it == index.end()) continue;
          const auto coords = poly::hook_reduce_explicit(part, dst.A, dst.B, w);
          for (std::size_t r = 0; r < coords.size(); ++r)
            if (coords[r] != 0) m.add(it->second + r, ls.offsets[k] + c, coords[r]);
        }
      }
    }
    blocks[n] = std::move(m);
  }
  return blocks;
}

ChainComplex hook_complex(const HookFamily& h, const Ring& ring) {
  return spec::build_complex(h.family(), ring);
}

void check_phiB_range(int d, int delta, int B) {
  check_complex_degree(d, "phiB_chain_map");
  const int A = d - B;
  if (B < 0 || delta < 0 || delta >= A || A > d)
    throw DomainError("need 0 <= delta < A <= d with A = d - B; got d=" + std::to_string(d) +
                      ", delta=" + std::to_string(delta) + ", B=" + std::to_string(B));
}

}  // namespace

ChainMap phi_chain_map(int A, int B, int a, const Ring& ring) {
  if (B < 0 || a < 2) throw DomainError("phi_chain_map needs B >= 0 and a >= 2; level a-1 = 0 is outside the filtration");
  if (A < 2) throw DomainError("phi_chain_map needs A >= 2 so that the target is a hook Weyl functor");
  check_complex_degree(A + B, "phi_chain_map");
  if (a > A) return ChainMap(empty_complex(ring), empty_complex(ring), 1, {});
  const HookFamily src{A, B, a}, dst{A - 1, B + 1, a - 1};
  auto blocks = blocks_of(src, dst, 1, [](const TableauMonomial& m) { return phi(AmbientElement::monomial(m)); });
  return ChainMap(hook_complex(src, ring), hook_complex(dst, ring), 1, std::move(blocks));
}

ChainMap phiB_chain_map(int d, int delta, int B, const Ring& ring, bool graded) {
  check_phiB_range(d, delta, B);
  const int A = d - B, a = A - delta;
  const Variant v = graded ? Variant::graded : Variant::full;
  const HookFamily src{d, 0, a + B, v}, dst{A, B, a, v};
  auto blocks = blocks_of(src, dst, B, [B](const TableauMonomial& m) { return phi_divided(B, m.alpha); });
  return ChainMap(hook_complex(src, ring), hook_complex(dst, ring), B, std::move(blocks));
}

ChainMap theta_chain_map(int d, int delta, int B, const Ring& ring) {
  check_phiB_range(d, delta, B);
  const int A = d - B, a = A - delta;
  const HookFamily src{A, B, a, Variant::graded}, dst{d, 0, a + B, Variant::graded};
  auto blocks = blocks_of(src, dst, -B, [B](const TableauMonomial& m) { return theta_retraction(B, m); });
  return ChainMap(hook_complex(src, ring), hook_complex(dst, ring), -B, std::move(blocks));
}

// ---- verification suites ----------------------------------------------------

namespace {

std::string where(const TableauMonomial& m, int n) { return m.to_string() + " in k^" + std::to_string(n); }

template <class Body>
void for_each_monomial(int max_degree, int max_n, int min_A, Body body) {
  for (int n = 1; n <= max_n; ++n)
    for (int A = min_A; A <= max_degree; ++A)
      for (int B = 0; A + B <= max_degree && B <= n; ++B)
        for (auto& m : ambient_monomials(A, B, n)) body(AmbientElement::monomial(m), m);
}

bool same_maps(const ChainMap& f, const ChainMap& g, const Ring& ring) {
  if (f.shift() != g.shift()) return false;
  const int lo = std::min(f.source().lo(), g.source().lo()), hi = std::max(f.source().hi(), g.source().hi());
  for (int n = lo; n <= hi; ++n)
    if (!lin::equal_over(f.block(n), g.block(n), ring)) return false;
  return true;
}

std::string params(int d, int delta, int B) {
  return "(d=" + std::to_string(d) + ",delta=" + std::to_string(delta) + ",B=" + std::to_string(B) + ")";
}

}  // namespace

CheckReport check_upsilon_squared(int max_degree, int max_n) {
  CheckReport rep;
  rep.name = "upsilon_squared";
  for_each_monomial(max_degree, max_n, 2, [&](const AmbientElement& x, const TableauMonomial& m) {
    rep.expect(koszul_upsilon(koszul_upsilon(x)).is_zero(), "Upsilon^2 != 0 on " + where(m, x.n));
  });
  return rep;
}

CheckReport check_phi_upsilon(int max_degree, int max_n) {
  CheckReport rep;
  rep.name = "phi_upsilon";
  for_each_monomial(max_degree, max_n, 2, [&](const AmbientElement& x, const TableauMonomial& m) {
    const AmbientElement lhs = phi(koszul_upsilon(x)) + koszul_upsilon(phi(x));
    rep.expect(lhs.is_zero(), "Phi Upsilon + Upsilon Phi = " + lhs.to_string() + " on " + where(m, x.n));
  });
  return rep;
}

CheckReport check_phi_boundary(int max_degree, int max_n) {
  CheckReport rep;
  rep.name = "phi_boundary";
  for_each_monomial(max_degree, max_n, 1, [&](const AmbientElement& x, const TableauMonomial& m) {
    AmbientElement lhs = boundary(phi(x)) + koszul_upsilon(x);
    if (x.n >= 2) lhs = lhs + phi(boundary(x));
    rep.expect(lhs.is_zero(), "Phi d + d Phi + Upsilon = " + lhs.to_string() + " on " + where(m, x.n));
  });
  return rep;
}

CheckReport check_upsilon_via_psi(int max_degree, int max_n) {
  CheckReport rep;
  rep.name = "upsilon_via_psi";
  for_each_monomial(max_degree, max_n, 1, [&](const AmbientElement& x, const TableauMonomial& m) {
    rep.expect(upsilon_via_psi(x) == koszul_upsilon(x), "double sum differs from Upsilon on " + where(m, x.n));
  });
  return rep;
}

CheckReport check_eta_psi(int max_degree, int max_n) {
  CheckReport rep;
  rep.name = "eta_psi";
  for_each_monomial(max_degree, max_n, 1, [&](const AmbientElement& x, const TableauMonomial& m) {
    const int n = x.n;
    for (int i = 0; i <= n; ++i) {
      const AmbientElement g = generize(x, i);
      for (int j = 1; j <= n + 1; ++j) {
        const AmbientElement lhs = contraction_eta(j, g);
        AmbientElement rhs = AmbientElement::zero(x.A - 1, x.B, n + 1);
        if (j <= i)
          rhs = generize(contraction_eta(j, x), i);
        else if (j > i + 1)
          rhs = generize(contraction_eta(j - 1, x), i);
        rep.expect(lhs == rhs, "eta_" + std::to_string(j) + " psi^" + std::to_string(i) + " on " + where(m, n));
      }
    }
    for (int i = 1; i <= n - 1; ++i) {
      const AmbientElement sp = specialize(x, i);
      for (int j = 1; j <= n - 1; ++j) {
        const AmbientElement lhs = contraction_eta(j, sp);
        AmbientElement rhs;
        if (j < i)
          rhs = specialize(contraction_eta(j, x), i);
        else if (j == i)
          rhs = specialize(contraction_eta(j, x) + contraction_eta(j + 1, x), i);
        else
          rhs = specialize(contraction_eta(j + 1, x), i);
        rep.expect(lhs == rhs, "eta_" + std::to_string(j) + " psi_" + std::to_string(i) + " on " + where(m, n));
      }
    }
  });
  return rep;
}

CheckReport check_sigma_multiplicity(int max_degree, int max_ground) {
  CheckReport rep;
  rep.name = "sigma_multiplicity";
  for (int size = 1; size <= max_degree; ++size)
    for (int n = 1; n <= size; ++n)
      for (auto& d : comb::enumerate_weights(size, n, true, 1))
        for (int N = n; N + 1 <= max_ground; ++N) {
          std::map<OrderedSetPartition, int> hits;
          for (auto& I : comb::ordered_partitions(d, N))
            for (int k = 1; k <= n; ++k) {
              const auto& blk = I.blocks[k - 1];
              if (static_cast<int>(blk.size()) >= d[k - 1]) continue;
              for (int s = *std::min_element(blk.begin(), blk.end()); s <= N; ++s) ++hits[sigma_ks(I, d, k, s)];
            }
          for (auto& J : comb::ordered_partitions(d, N + 1)) {
            const std::string tag = J.to_string() + " for d=" + comb::weight_to_string(d);
            rep.expect(hits[J] == N + 1 - n, tag + " has " + std::to_string(hits[J]) + " preimages");
            const auto pre = sigma_preimages(J, d);
            bool round_trip = static_cast<int>(pre.size()) == N + 1 - n;
            for (auto& p : pre) round_trip = round_trip && sigma_ks(p.I, d, p.k, p.s) == J;
            rep.expect(round_trip, "sigma_preimages does not invert sigma on " + tag);
          }
          rep.expect(static_cast<int>(hits.size()) == static_cast<int>(comb::ordered_partitions(d, N + 1).size()),
                     "sigma leaves Par(d;N+1) for d=" + comb::weight_to_string(d));
        }
  return rep;
}

CheckReport check_divided_powers(int max_B, int max_d) {
  CheckReport rep;
  rep.name = "divided_powers";
  for (int d = 2; d <= max_d; ++d)
    for (int B = 0; B <= max_B; ++B) {
      const int A = d - B;
      for (int delta = 0; delta <= A - 2; ++delta) {
        const int a = A - delta;
        const ChainMap lhs = lin::compose(phi_chain_map(A, B, a), phiB_chain_map(d, delta, B));
        const ChainMap next = phiB_chain_map(d, delta, B + 1);
        std::map<int, IntegerMatrix> scaled;
        for (int n = next.source().lo(); n <= next.source().hi(); ++n) scaled[n] = next.block(n).scaled(B + 1);
        const ChainMap rhs(next.source(), next.target(), next.shift(), scaled);
        rep.expect(same_maps(lhs, rhs, Ring::integers()), "Phi Phi^[B] != (B+1) Phi^[B+1] at " + params(d, delta, B));
      }
    }
  return rep;
}

CheckReport check_theta(int max_d) {
  CheckReport rep;
  rep.name = "theta";
  for (int d = 1; d <= max_d; ++d)
    for (int A = 1; A <= d; ++A)
      for (int delta = 0; delta < A; ++delta) {
        const int B = d - A;
        const ChainMap t = theta_chain_map(d, delta, B);
        const ChainMap p = phiB_chain_map(d, delta, B, Ring::integers(), true);
        rep.expect(t.is_chain_map(), "Theta is not a chain map at " + params(d, delta, B));
        rep.expect(p.is_chain_map(), "graded Phi^[B] is not a chain map at " + params(d, delta, B));
        rep.expect(same_maps(lin::compose(t, p), lin::identity_map(p.source()), Ring::integers()),
                   "Theta Phi^[B] != id at " + params(d, delta, B));
      }
  return rep;
}

CheckReport check_quasi_isomorphisms(int max_d, const std::vector<Ring>& rings) {
  CheckReport rep;
  rep.name = "quasi_isomorphisms";
  for (auto& ring : rings)
    for (int d = 1; d <= max_d; ++d)
      for (int A = 1; A <= d; ++A)
        for (int delta = 0; delta < A; ++delta) {
          const int B = d - A;
          const ChainMap f = phiB_chain_map(d, delta, B, ring);
          const std::string tag = params(d, delta, B) + " over " + ring.name();
          rep.expect(f.is_chain_map(), "Phi^[B] is not a chain map at " + tag);
          rep.expect(lin::is_acyclic(lin::mapping_cone(f)), "mapping cone of Phi^[B] is not acyclic at " + tag);
        }
  return rep;
}

}  // namespace schurext::koszul
