#pragma once

// Exact integer matrices and sublattices of Z^n.
//
// Lattices are stored by a canonical basis: the row-style Hermite normal form
// (row echelon, positive pivots, entries above each pivot reduced into
// [0, pivot)). Two lattices are equal iff their bases compare equal.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace latdef {

using Integer = mpz_class;
using IntVec = std::vector<Integer>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  /// Builds a matrix from row vectors; every row must have `cols` entries.
  static IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVec row(std::size_t r) const;
  IntVec col(std::size_t c) const;
  std::vector<IntVec> row_list() const;

  IntMatrix transpose() const;
  /// Rows [first, first + count).
  IntMatrix row_block(std::size_t first, std::size_t count) const;
  /// Columns [first, first + count).
  IntMatrix col_block(std::size_t first, std::size_t count) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  /// Exact determinant (Bareiss). Requires a square matrix; 0x0 gives 1.
  Integer determinant() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Inverse of a unimodular matrix (|det| = 1). Throws InputError otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// S = U * D * V with U (rows x rows) and V (cols x cols) unimodular and D
/// diagonal with d1 | d2 | ... (nonnegative; zeros trail).
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  /// Diagonal entries of D, min(rows, cols) of them.
  IntVec diagonal() const;
  /// Number of nonzero diagonal entries.
  std::size_t rank() const;
};

SmithDecomposition smith(const IntMatrix& s);

class IntLattice {
 public:
  /// Zero lattice in Z^n.
  explicit IntLattice(std::size_t ambient_dim = 0);

  /// Lattice generated by the rows of `gens`.
  static IntLattice from_generators(const IntMatrix& gens);
  static IntLattice from_generators(const std::vector<IntVec>& gens, std::size_t ambient_dim);
  static IntLattice full(std::size_t n);
  /// The diagonal lattice L_d; a zero entry pins that coordinate to 0.
  static IntLattice diagonal(const std::vector<long>& d);

  std::size_t ambient_dim() const { return dim_; }
  std::size_t rank() const { return basis_.rows(); }
  bool is_full_rank() const { return rank() == dim_; }
  bool is_zero() const { return rank() == 0; }

  /// Canonical (Hermite) basis; rows are the basis vectors.
  const IntMatrix& basis() const { return basis_; }

  /// [Z^n : L]; only meaningful for full-rank lattices (throws otherwise).
  Integer index() const;

  bool contains(const IntVec& x) const;
  bool contains(const IntLattice& other) const;
  /// True iff x - y lies in the lattice.
  bool same_coset(const IntVec& x, const IntVec& y) const;
  /// Canonical representative of x + L: pivot coordinates reduced into [0, pivot).
  IntVec coset_representative(const IntVec& x) const;

  friend bool operator==(const IntLattice& a, const IntLattice& b) = default;

  std::string to_string() const;

 private:
  IntLattice(std::size_t dim, IntMatrix basis) : dim_(dim), basis_(std::move(basis)) {}

  std::size_t dim_ = 0;
  IntMatrix basis_;
};

/// Row-style Hermite normal form of the row span of `gens` (zero rows dropped).
IntMatrix hermite_normal_form(const IntMatrix& gens);

/// Convenience wrapper: the lattice generated by the rows of `gens`.
IntLattice hnf(const IntMatrix& gens);

IntLattice join(const IntLattice& a, const IntLattice& b);
IntLattice meet(const IntLattice& a, const IntLattice& b);

/// True iff x - y lies in `lattice`.
bool coset_index(const IntLattice& lattice, const IntVec& x, const IntVec& y);

/// Basis (as rows) of the left integer kernel {y : y * m = 0}.
IntMatrix left_kernel(const IntMatrix& m);

/// Subgroup of mu_{d1} x ... x mu_{dn}, written additively: a generator a
/// stands for (zeta_1^{a_1}, ..., zeta_n^{a_n}) with zeta_i a primitive
/// d_i-th root of unity. Only the generators are stored.
struct GaloisSubgroup {
  std::vector<long> modulus;
  std::vector<std::vector<long>> generators;

  /// Exponent lattice {a in Z^n : a mod d lies in the subgroup}; equal for
  /// two generating sets iff they generate the same subgroup.
  IntLattice exponent_lattice() const;
  /// Group order.
  Integer order() const;
};

/// Lattice of exponents x with sum_i a_i x_i / d_i integral for every
/// generator a: the monomials fixed by the subgroup.
IntLattice subgroup_to_lattice(const GaloisSubgroup& h);

/// The stabilizer of `lattice` inside mu_d; requires L_d to be contained in
/// `lattice`.
GaloisSubgroup lattice_to_subgroup(const IntLattice& lattice, const std::vector<long>& d);

/// All sublattices of `lattice` of index p (p prime), one per nonzero
/// functional on lattice/p*lattice up to scalars: (p^r - 1)/(p - 1) of them.
std::vector<IntLattice> maximal_sublattices(const IntLattice& lattice, long p);

IntVec to_intvec(const std::vector<long>& v);
long to_long(const Integer& z);

}  // namespace latdef
