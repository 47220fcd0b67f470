#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace schurext {

using Integer = boost::multiprecision::cpp_int;

std::string to_string(const Integer& x);

}  // namespace schurext

namespace schurext::lin {

class Ring {
 public:
  static Ring integers() { return Ring{}; }
  static Ring prime_field(unsigned p);

  bool is_field() const { return p_ != 0; }
  unsigned p() const { return p_; }
  // Canonical representative: unchanged over Z, in [0, p) over F_p.
  Integer reduce(const Integer& x) const;
  std::string name() const;

  bool operator==(const Ring&) const = default;

 private:
  unsigned p_ = 0;
};

bool is_prime(unsigned long long n);

// Sparse integer matrix acting on column vectors: an m x n matrix maps
// Z^n -> Z^m. Only nonzero entries are stored.
class IntegerMatrix {
 public:
  using Row = std::map<std::size_t, Integer>;

  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix from_dense(const std::vector<std::vector<Integer>>& a, std::size_t cols = 0);
  static IntegerMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }

  Integer at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Integer& v);
  void add(std::size_t r, std::size_t c, const Integer& v);
  const Row& row(std::size_t r) const { return data_[r]; }

  // Adds `b` into the block whose top-left corner is (r0, c0).
  void add_block(std::size_t r0, std::size_t c0, const IntegerMatrix& b, const Integer& scale = 1);

  IntegerMatrix transpose() const;
  IntegerMatrix reduced(const Ring& ring) const;
  IntegerMatrix scaled(const Integer& s) const;
  IntegerMatrix column_range(std::size_t c0, std::size_t c1) const;
  IntegerMatrix row_range(std::size_t r0, std::size_t r1) const;
  std::vector<Integer> column(std::size_t c) const;
  std::vector<std::vector<Integer>> dense() const;
  std::vector<Integer> apply(const std::vector<Integer>& v) const;

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b);
  friend IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b);
  bool operator==(const IntegerMatrix& o) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Row> data_;
};

IntegerMatrix hstack(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix vstack(const IntegerMatrix& a, const IntegerMatrix& b);

// Equality after reducing both sides over `ring`.
bool equal_over(const IntegerMatrix& a, const IntegerMatrix& b, const Ring& ring);

// ---- normal forms -------------------------------------------------------

// Diagonal invariants d_1 | d_2 | ... | d_r followed by zeros, length min(rows, cols).
std::vector<Integer> smith_normal_form(const IntegerMatrix& m);

struct SmithDecomposition {
  std::vector<Integer> diagonal;
  IntegerMatrix u;  // rows x rows, unimodular
  IntegerMatrix v;  // cols x cols, unimodular
};
// u * m * v is diagonal with entries `diagonal`.
SmithDecomposition smith_decomposition(const IntegerMatrix& m);

struct HermiteDecomposition {
  IntegerMatrix h;  // row Hermite form, zero rows last
  IntegerMatrix u;  // unimodular, u * m = h
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};
HermiteDecomposition hermite_decomposition(const IntegerMatrix& m);
// Canonical basis of the row lattice (nonzero rows of the Hermite form).
IntegerMatrix hermite_normal_form(const IntegerMatrix& m);

// Columns form a basis of {v : m v = 0} over the ring.
IntegerMatrix kernel_basis(const IntegerMatrix& m, const Ring& ring);
std::size_t rank_over(const IntegerMatrix& m, const Ring& ring);
std::size_t rank_mod_p(const IntegerMatrix& m, unsigned p);

// Exact coordinates with respect to a lattice basis given by the columns of
// `basis`, which must have full column rank.
class LatticeSolver {
 public:
  LatticeSolver() = default;
  explicit LatticeSolver(const IntegerMatrix& basis);

  std::size_t rank() const { return rank_; }
  std::size_t ambient() const { return ambient_; }
  // nullopt when v is not in the lattice.
  std::optional<std::vector<Integer>> solve(std::vector<Integer> v) const;

 private:
  std::size_t ambient_ = 0;
  std::size_t rank_ = 0;
  std::vector<std::vector<Integer>> h_;  // rank x ambient echelon
  std::vector<std::size_t> pivots_;
  IntegerMatrix ut_;  // transpose of the Hermite transform
};

// A submodule of R^n given by generating columns; canonical() is the Hermite
// (over Z) or reduced row echelon (over F_p) form of the generators as rows.
class Submodule {
 public:
  Submodule(std::size_t ambient, const Ring& ring);
  Submodule(const IntegerMatrix& generators, const Ring& ring);

  std::size_t ambient() const { return ambient_; }
  const Ring& ring() const { return ring_; }
  const IntegerMatrix& generators() const { return gens_; }
  const IntegerMatrix& canonical() const { return canon_; }
  std::size_t rank() const { return canon_.rows(); }

  static Submodule whole(std::size_t n, const Ring& ring);
  static Submodule kernel(const IntegerMatrix& f, const Ring& ring);
  static Submodule image(const IntegerMatrix& f, const Ring& ring);

  Submodule operator+(const Submodule& o) const;
  Submodule intersect(const Submodule& o) const;
  Submodule mapped(const IntegerMatrix& f) const;      // f(L)
  Submodule preimage(const IntegerMatrix& f) const;    // f^{-1}(L)
  bool operator==(const Submodule& o) const;
  bool contains(const Submodule& o) const;

 private:
  std::size_t ambient_ = 0;
  Ring ring_;
  IntegerMatrix gens_;
  IntegerMatrix canon_;
};

// ---- complexes ------------------------------------------------------------

class ChainComplex {
 public:
  ChainComplex() = default;
  // Degrees lo..hi (empty when lo > hi). diffs[n] has shape rank(n-1) x rank(n).
  ChainComplex(Ring ring, int lo, int hi, std::map<int, std::size_t> ranks,
               std::map<int, IntegerMatrix> diffs,
               std::map<int, std::vector<std::string>> labels = {});

  const Ring& ring() const { return ring_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  std::size_t rank(int n) const;
  IntegerMatrix diff(int n) const;
  std::vector<std::string> labels(int n) const;
  ChainComplex over(const Ring& ring) const;

  bool operator==(const ChainComplex& o) const;

 private:
  Ring ring_;
  int lo_ = 0;
  int hi_ = -1;
  std::map<int, std::size_t> ranks_;
  std::map<int, IntegerMatrix> diffs_;
  std::map<int, std::vector<std::string>> labels_;
};

bool validate_complex(const ChainComplex& c);

struct HomologyGroup {
  Ring ring;
  std::size_t free_rank = 0;
  std::vector<Integer> invariant_factors;

  // Over a prime field this is the vector-space dimension.
  std::size_t dimension() const { return free_rank; }
  bool is_zero() const { return free_rank == 0 && invariant_factors.empty(); }
  std::string to_string() const;
  bool operator==(const HomologyGroup& o) const = default;
};

HomologyGroup homology(const ChainComplex& c, int n);
std::map<int, HomologyGroup> homology_table(const ChainComplex& c);
bool is_acyclic(const ChainComplex& c);

class ChainMap {
 public:
  ChainMap() = default;
  // blocks[n] maps source.term(n) -> target.term(n + shift).
  ChainMap(ChainComplex source, ChainComplex target, int shift, std::map<int, IntegerMatrix> blocks);

  const ChainComplex& source() const { return source_; }
  const ChainComplex& target() const { return target_; }
  int shift() const { return shift_; }
  IntegerMatrix block(int n) const;
  // target.diff(n+s) * f_n == (-1)^s f_{n-1} * source.diff(n) for all n.
  bool is_chain_map() const;

 private:
  ChainComplex source_;
  ChainComplex target_;
  int shift_ = 0;
  std::map<int, IntegerMatrix> blocks_;
};

ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap identity_map(const ChainComplex& c);
ChainComplex mapping_cone(const ChainMap& f);

}  // namespace schurext::lin
