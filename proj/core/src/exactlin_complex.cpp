#include "schurext/errors.hpp"
#include "schurext/exactlin.hpp"

#include <algorithm>
#include <sstream>

namespace schurext::lin {

ChainComplex::ChainComplex(Ring ring, int lo, int hi, std::map<int, std::size_t> ranks,
                           std::map<int, IntegerMatrix> diffs, std::map<int, std::vector<std::string>> labels)
    : ring_(ring), lo_(lo), hi_(hi), labels_(std::move(labels)) {
  for (int n = lo_; n <= hi_; ++n) {
    auto it = ranks.find(n);
    ranks_[n] = it == ranks.end() ? 0 : it->second;
  }
  for (auto& [n, m] : diffs) {
    if (n < lo_ || n > hi_) {
      if (!m.is_zero()) throw ShapeMismatch("differential outside the degree range");
      continue;
    }
    if (m.rows() != rank(n - 1) || m.cols() != rank(n))
      throw ShapeMismatch("diff(" + std::to_string(n) + ") has shape " + std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()) + ", expected " + std::to_string(rank(n - 1)) + "x" +
                          std::to_string(rank(n)));
    diffs_[n] = m.reduced(ring_);
  }
  for (auto& [n, l] : labels_)
    if (l.size() != rank(n)) throw ShapeMismatch("label count does not match term rank");
}

std::size_t ChainComplex::rank(int n) const {
  auto it = ranks_.find(n);
  return it == ranks_.end() ? 0 : it->second;
}

IntegerMatrix ChainComplex::diff(int n) const {
  auto it = diffs_.find(n);
  if (it != diffs_.end()) return it->second;
  return IntegerMatrix(rank(n - 1), rank(n));
}

std::vector<std::string> ChainComplex::labels(int n) const {
  auto it = labels_.find(n);
  return it == labels_.end() ? std::vector<std::string>{} : it->second;
}

ChainComplex ChainComplex::over(const Ring& ring) const {
  if (ring == ring_) return *this;
  if (ring_.is_field()) throw DomainError("cannot change the ring of a complex over " + ring_.name());
  return ChainComplex(ring, lo_, hi_, ranks_, diffs_, labels_);
}

bool ChainComplex::operator==(const ChainComplex& o) const {
  if (!(ring_ == o.ring_) || lo_ != o.lo_ || hi_ != o.hi_) return false;
  for (int n = lo_; n <= hi_; ++n)
    if (rank(n) != o.rank(n) || !(diff(n) == o.diff(n))) return false;
  return true;
}

namespace {

bool composite_vanishes(const ChainComplex& c, int n) {
  return (c.diff(n - 1) * c.diff(n)).reduced(c.ring()).is_zero();
}

}  // namespace

bool validate_complex(const ChainComplex& c) {
  for (int n = c.lo() + 1; n <= c.hi(); ++n)
    if (!composite_vanishes(c, n)) return false;
  return true;
}

std::string HomologyGroup::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  const std::string base = ring.is_field() ? ring.name() : "Z";
  bool first = true;
  if (free_rank) {
    os << base;
    if (free_rank > 1) os << '^' << free_rank;
    first = false;
  }
  for (auto& t : invariant_factors) {
    os << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  return os.str();
}

namespace {

struct DiffData {
  std::size_t rank = 0;
  std::vector<Integer> torsion;
};

DiffData analyse(const IntegerMatrix& m, const Ring& ring) {
  DiffData d;
  if (ring.is_field()) {
    d.rank = rank_mod_p(m, ring.p());
    return d;
  }
  for (auto& x : smith_normal_form(m)) {
    if (x == 0) continue;
    ++d.rank;
    if (x > 1) d.torsion.push_back(x);
  }
  return d;
}

HomologyGroup assemble(const Ring& ring, std::size_t term_rank, const DiffData& out, const DiffData& in) {
  HomologyGroup h;
  h.ring = ring;
  h.free_rank = term_rank - out.rank - in.rank;
  if (!ring.is_field()) h.invariant_factors = in.torsion;
  return h;
}

}  // namespace

HomologyGroup homology(const ChainComplex& c, int n) {
  HomologyGroup zero;
  zero.ring = c.ring();
  if (n < c.lo() || n > c.hi()) return zero;
  if (!composite_vanishes(c, n) || !composite_vanishes(c, n + 1))
    throw MalformedComplex("d o d != 0 around degree " + std::to_string(n));
  return assemble(c.ring(), c.rank(n), analyse(c.diff(n), c.ring()), analyse(c.diff(n + 1), c.ring()));
}

std::map<int, HomologyGroup> homology_table(const ChainComplex& c) {
  if (!validate_complex(c)) throw MalformedComplex("d o d != 0");
  std::map<int, DiffData> data;
  for (int n = c.lo(); n <= c.hi() + 1; ++n) data[n] = analyse(c.diff(n), c.ring());
  std::map<int, HomologyGroup> out;
  for (int n = c.lo(); n <= c.hi(); ++n) out[n] = assemble(c.ring(), c.rank(n), data[n], data[n + 1]);
  return out;
}

bool is_acyclic(const ChainComplex& c) {
  for (auto& [n, h] : homology_table(c))
    if (!h.is_zero()) return false;
  return true;
}

ChainMap::ChainMap(ChainComplex source, ChainComplex target, int shift, std::map<int, IntegerMatrix> blocks)
    : source_(std::move(source)), target_(std::move(target)), shift_(shift) {
  if (!(source_.ring() == target_.ring())) throw ShapeMismatch("chain map between complexes over different rings");
  for (auto& [n, m] : blocks) {
    if (m.rows() != target_.rank(n + shift_) || m.cols() != source_.rank(n)) {
      if (m.is_zero() && (source_.rank(n) == 0 || target_.rank(n + shift_) == 0)) continue;
      throw ShapeMismatch("chain map block " + std::to_string(n) + " has the wrong shape");
    }
    blocks_[n] = m.reduced(source_.ring());
  }
}

IntegerMatrix ChainMap::block(int n) const {
  auto it = blocks_.find(n);
  if (it != blocks_.end()) return it->second;
  return IntegerMatrix(target_.rank(n + shift_), source_.rank(n));
}

bool ChainMap::is_chain_map() const {
  const Ring& ring = source_.ring();
  for (int n = source_.lo(); n <= source_.hi() + 1; ++n) {
    IntegerMatrix lhs = target_.diff(n + shift_) * block(n);
    IntegerMatrix rhs = block(n - 1) * source_.diff(n);
    if (shift_ % 2) rhs = rhs.scaled(-1);
    if (!equal_over(lhs, rhs, ring)) return false;
  }
  return true;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  std::map<int, IntegerMatrix> blocks;
  for (int n = f.source().lo(); n <= f.source().hi(); ++n) blocks[n] = g.block(n + f.shift()) * f.block(n);
  return ChainMap(f.source(), g.target(), f.shift() + g.shift(), std::move(blocks));
}

ChainMap identity_map(const ChainComplex& c) {
  std::map<int, IntegerMatrix> blocks;
  for (int n = c.lo(); n <= c.hi(); ++n) blocks[n] = IntegerMatrix::identity(c.rank(n));
  return ChainMap(c, c, 0, std::move(blocks));
}

ChainComplex mapping_cone(const ChainMap& f) {
  const ChainComplex& c = f.source();
  const ChainComplex& d = f.target();
  const int s = f.shift();
  const bool c_empty = c.lo() > c.hi(), d_empty = d.lo() > d.hi();
  if (c_empty && d_empty) return ChainComplex(c.ring(), 0, -1, {}, {});
  int lo = c_empty ? d.lo() - s : d_empty ? c.lo() + 1 : std::min(c.lo() + 1, d.lo() - s);
  int hi = c_empty ? d.hi() - s : d_empty ? c.hi() + 1 : std::max(c.hi() + 1, d.hi() - s);

  std::map<int, std::size_t> ranks;
  for (int n = lo; n <= hi; ++n) ranks[n] = c.rank(n - 1) + d.rank(n + s);
  std::map<int, IntegerMatrix> diffs;
  const Integer dsign = s % 2 ? -1 : 1;
  for (int n = lo + 1; n <= hi; ++n) {
    IntegerMatrix m(ranks[n - 1], ranks[n]);
    const std::size_t c_lo = c.rank(n - 2), c_hi = c.rank(n - 1);
    m.add_block(0, 0, c.diff(n - 1), -1);
    m.add_block(c_lo, 0, f.block(n - 1));
    m.add_block(c_lo, c_hi, d.diff(n + s), dsign);
    diffs[n] = std::move(m);
  }
  return ChainComplex(c.ring(), lo, hi, ranks, diffs);
}

}  // namespace schurext::lin
