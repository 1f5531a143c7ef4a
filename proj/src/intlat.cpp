#include "latdef/intlat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "latdef/error.hpp"

namespace latdef {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("IntMatrix: ragged initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("IntMatrix: row has wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntVec IntMatrix::row(std::size_t r) const {
  return IntVec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVec IntMatrix::col(std::size_t c) const {
  IntVec out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

std::vector<IntVec> IntMatrix::row_list() const {
  std::vector<IntVec> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::row_block(std::size_t first, std::size_t count) const {
  IntMatrix out(count, cols_);
  for (std::size_t r = 0; r < count; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(first + r, c);
  return out;
}

IntMatrix IntMatrix::col_block(std::size_t first, std::size_t count) const {
  IntMatrix out(rows_, count);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < count; ++c) out(r, c) = (*this)(r, first + c);
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

Integer IntMatrix::determinant() const {
  if (rows_ != cols_) throw InputError("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("IntMatrix product: dimension mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ',';
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ',';
      os << (*this)(r, c).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Row echelon form over Z restricted to the first `pivot_cols` columns, using
// only unimodular row operations. Returns the number of pivot rows; rows past
// that index are zero in the first `pivot_cols` columns. When `reduce` is set
// the entries above each pivot are brought into [0, pivot).
std::size_t echelonize(IntMatrix& a, std::size_t pivot_cols, bool reduce) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < a.rows(); ++c) {
    bool has_pivot = false;
    for (;;) {
      std::size_t best = a.rows();
      for (std::size_t i = r; i < a.rows(); ++i) {
        if (a(i, c) == 0) continue;
        if (best == a.rows() || abs(a(i, c)) < abs(a(best, c))) best = i;
      }
      if (best == a.rows()) break;
      has_pivot = true;
      a.swap_rows(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < a.rows(); ++i) {
        if (a(i, c) == 0) continue;
        a.add_row_multiple(i, r, -floor_div(a(i, c), a(r, c)));
        if (a(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (!has_pivot) continue;
    if (a(r, c) < 0) a.negate_row(r);
    if (reduce) {
      for (std::size_t i = 0; i < r; ++i) a.add_row_multiple(i, r, -floor_div(a(i, c), a(r, c)));
    }
    ++r;
  }
  return r;
}

// Pivot column of each row of an echelon basis.
std::vector<std::size_t> pivot_columns(const IntMatrix& basis) {
  std::vector<std::size_t> piv;
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    std::size_t c = 0;
    while (c < basis.cols() && basis(r, c) == 0) ++c;
    piv.push_back(c);
  }
  return piv;
}

}  // namespace

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("unimodular_inverse: matrix not square");
  const std::size_t n = m.rows();
  IntMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const std::size_t rank = echelonize(aug, n, true);
  for (std::size_t i = 0; i < n; ++i) {
    if (rank != n || aug(i, i) != 1) throw InputError("unimodular_inverse: matrix is not unimodular");
  }
  return aug.col_block(n, n);
}

IntVec SmithDecomposition::diagonal() const {
  IntVec d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  for (const auto& v : diagonal())
    if (v != 0) ++r;
  return r;
}

SmithDecomposition smith(const IntMatrix& s) {
  const std::size_t n = s.rows();
  const std::size_t m = s.cols();
  // Invariant: s = U * A * V.
  IntMatrix A = s;
  IntMatrix U = IntMatrix::identity(n);
  IntMatrix V = IntMatrix::identity(m);

  auto row_add = [&](std::size_t dst, std::size_t src, const Integer& f) {
    A.add_row_multiple(dst, src, f);
    U.add_col_multiple(src, dst, -f);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const Integer& f) {
    A.add_col_multiple(dst, src, f);
    V.add_row_multiple(src, dst, -f);
  };
  auto row_swap = [&](std::size_t a, std::size_t b) {
    A.swap_rows(a, b);
    U.swap_cols(a, b);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    A.swap_cols(a, b);
    V.swap_rows(a, b);
  };

  const std::size_t steps = std::min(n, m);
  for (std::size_t t = 0; t < steps; ++t) {
    bool any = false;
    for (;;) {
      std::size_t bi = n, bj = m;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < m; ++j) {
          if (A(i, j) == 0) continue;
          if (bi == n || abs(A(i, j)) < abs(A(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      if (bi == n) break;
      any = true;
      row_swap(t, bi);
      col_swap(t, bj);
      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (A(i, t) == 0) continue;
        row_add(i, t, -floor_div(A(i, t), A(t, t)));
        if (A(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < m; ++j) {
        if (A(t, j) == 0) continue;
        col_add(j, t, -floor_div(A(t, j), A(t, t)));
        if (A(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Enforce divisibility of the remaining block by the pivot.
      std::size_t bad_row = n;
      for (std::size_t i = t + 1; i < n && bad_row == n; ++i)
        for (std::size_t j = t + 1; j < m; ++j)
          if (A(i, j) % A(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (bad_row == n) break;
      row_add(t, bad_row, 1);
    }
    if (!any) break;
    if (A(t, t) < 0) {
      A.negate_row(t);
      U.negate_col(t);
    }
  }
  return SmithDecomposition{std::move(U), std::move(A), std::move(V)};
}

IntMatrix hermite_normal_form(const IntMatrix& gens) {
  IntMatrix a = gens;
  const std::size_t r = echelonize(a, a.cols(), true);
  return a.row_block(0, r);
}

IntLattice::IntLattice(std::size_t ambient_dim) : dim_(ambient_dim), basis_(0, ambient_dim) {}

IntLattice IntLattice::from_generators(const IntMatrix& gens) {
  return IntLattice(gens.cols(), hermite_normal_form(gens));
}

IntLattice IntLattice::from_generators(const std::vector<IntVec>& gens, std::size_t ambient_dim) {
  return from_generators(IntMatrix::from_rows(gens, ambient_dim));
}

IntLattice IntLattice::full(std::size_t n) { return from_generators(IntMatrix::identity(n)); }

IntLattice IntLattice::diagonal(const std::vector<long>& d) {
  IntMatrix g(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 0) throw InputError("diagonal lattice: negative modulus");
    g(i, i) = d[i];
  }
  return from_generators(g);
}

Integer IntLattice::index() const {
  if (!is_full_rank()) throw PreconditionError("index of a degenerate lattice is infinite");
  Integer idx = 1;
  for (std::size_t i = 0; i < rank(); ++i) idx *= basis_(i, i);
  return idx;
}

bool IntLattice::contains(const IntVec& x) const {
  if (x.size() != dim_) throw InputError("lattice membership: dimension mismatch");
  IntVec v = x;
  const auto piv = pivot_columns(basis_);
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    const Integer& p = basis_(r, piv[r]);
    if (v[piv[r]] % p != 0) return false;
    const Integer q = v[piv[r]] / p;
    for (std::size_t c = 0; c < dim_; ++c) v[c] -= q * basis_(r, c);
  }
  return std::all_of(v.begin(), v.end(), [](const Integer& z) { return z == 0; });
}

bool IntLattice::contains(const IntLattice& other) const {
  if (other.dim_ != dim_) throw InputError("lattice containment: dimension mismatch");
  for (std::size_t r = 0; r < other.rank(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

bool IntLattice::same_coset(const IntVec& x, const IntVec& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw InputError("coset test: dimension mismatch");
  IntVec d(dim_);
  for (std::size_t i = 0; i < dim_; ++i) d[i] = x[i] - y[i];
  return contains(d);
}

IntVec IntLattice::coset_representative(const IntVec& x) const {
  if (x.size() != dim_) throw InputError("coset representative: dimension mismatch");
  IntVec v = x;
  const auto piv = pivot_columns(basis_);
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    const Integer q = floor_div(v[piv[r]], basis_(r, piv[r]));
    if (q == 0) continue;
    for (std::size_t c = 0; c < dim_; ++c) v[c] -= q * basis_(r, c);
  }
  return v;
}

std::string IntLattice::to_string() const { return basis_.to_string(); }

IntLattice hnf(const IntMatrix& gens) { return IntLattice::from_generators(gens); }

IntLattice join(const IntLattice& a, const IntLattice& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw InputError("join: dimension mismatch");
  auto rows = a.basis().row_list();
  for (auto& r : b.basis().row_list()) rows.push_back(std::move(r));
  return IntLattice::from_generators(rows, a.ambient_dim());
}

IntMatrix left_kernel(const IntMatrix& m) {
  const std::size_t p = m.rows();
  const std::size_t q = m.cols();
  IntMatrix aug(p, q + p);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < q; ++j) aug(i, j) = m(i, j);
    aug(i, q + i) = 1;
  }
  const std::size_t r = echelonize(aug, q, false);
  IntMatrix ker = aug.row_block(r, p - r).col_block(q, p);
  return hermite_normal_form(ker);
}

IntLattice meet(const IntLattice& a, const IntLattice& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw InputError("meet: dimension mismatch");
  const std::size_t n = a.ambient_dim();
  if (a.is_zero() || b.is_zero()) return IntLattice(n);
  auto rows = a.basis().row_list();
  for (auto& r : b.basis().row_list()) rows.push_back(std::move(r));
  const IntMatrix ker = left_kernel(IntMatrix::from_rows(rows, n));
  if (ker.rows() == 0) return IntLattice(n);
  const IntMatrix coeffs = ker.col_block(0, a.rank());
  return IntLattice::from_generators(coeffs * a.basis());
}

bool coset_index(const IntLattice& lattice, const IntVec& x, const IntVec& y) {
  return lattice.same_coset(x, y);
}

namespace {

// {x in Z^n : sum_i w_i x_i / d_i integral for every row w of `weights`}.
IntLattice character_kernel(const std::vector<std::vector<Integer>>& weights,
                            const std::vector<long>& d) {
  const std::size_t n = d.size();
  if (weights.empty()) return IntLattice::full(n);
  Integer big_d = 1;
  for (long di : d) mpz_lcm_ui(big_d.get_mpz_t(), big_d.get_mpz_t(), static_cast<unsigned long>(di));
  const std::size_t g = weights.size();
  IntMatrix stacked(n + g, g);
  for (std::size_t j = 0; j < g; ++j) {
    for (std::size_t i = 0; i < n; ++i) stacked(i, j) = weights[j][i] * (big_d / d[i]);
    stacked(n + j, j) = big_d;
  }
  const IntMatrix ker = left_kernel(stacked);
  return IntLattice::from_generators(ker.col_block(0, n));
}

void check_modulus(const std::vector<long>& d) {
  for (long di : d)
    if (di < 1) throw InputError("Galois modulus entries must be >= 1");
}

}  // namespace

IntLattice GaloisSubgroup::exponent_lattice() const {
  check_modulus(modulus);
  const std::size_t n = modulus.size();
  std::vector<IntVec> rows;
  for (const auto& a : generators) rows.push_back(to_intvec(a));
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = modulus[i];
    rows.push_back(std::move(e));
  }
  return IntLattice::from_generators(rows, n);
}

Integer GaloisSubgroup::order() const {
  Integer total = 1;
  for (long di : modulus) total *= di;
  return total / exponent_lattice().index();
}

IntLattice subgroup_to_lattice(const GaloisSubgroup& h) {
  check_modulus(h.modulus);
  std::vector<std::vector<Integer>> weights;
  for (const auto& a : h.generators) {
    if (a.size() != h.modulus.size()) throw InputError("subgroup generator has wrong length");
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] < 0 || a[i] >= h.modulus[i]) throw InputError("subgroup generator component out of range");
    weights.push_back(to_intvec(a));
  }
  return character_kernel(weights, h.modulus);
}

GaloisSubgroup lattice_to_subgroup(const IntLattice& lattice, const std::vector<long>& d) {
  check_modulus(d);
  if (lattice.ambient_dim() != d.size()) throw InputError("lattice_to_subgroup: dimension mismatch");
  if (!lattice.contains(IntLattice::diagonal(d)))
    throw PreconditionError("lattice does not contain the diagonal lattice L_d");
  const IntLattice stab = character_kernel(lattice.basis().row_list(), d);
  GaloisSubgroup h{d, {}};
  for (std::size_t r = 0; r < stab.rank(); ++r) {
    std::vector<long> a(d.size());
    bool nonzero = false;
    for (std::size_t i = 0; i < d.size(); ++i) {
      Integer v;
      mpz_fdiv_r_ui(v.get_mpz_t(), stab.basis()(r, i).get_mpz_t(), static_cast<unsigned long>(d[i]));
      a[i] = v.get_si();
      nonzero = nonzero || a[i] != 0;
    }
    if (nonzero) h.generators.push_back(std::move(a));
  }
  return h;
}

std::vector<IntLattice> maximal_sublattices(const IntLattice& lattice, long p) {
  if (p < 2) throw InputError("maximal_sublattices: p must be a prime >= 2");
  const std::size_t r = lattice.rank();
  std::vector<IntLattice> out;
  if (r == 0) return out;
  std::vector<long> lambda(r, 0);
  // Odometer over F_p^r, keeping vectors whose first nonzero entry is 1.
  bool done = false;
  while (!done) {
    std::size_t lead = 0;
    while (lead < r && lambda[lead] == 0) ++lead;
    if (lead < r && lambda[lead] == 1) {
      IntMatrix coeffs(r, r);
      for (std::size_t i = 0; i < r; ++i) {
        if (i == lead) {
          coeffs(i, lead) = p;
        } else {
          coeffs(i, i) = 1;
          coeffs(i, lead) = -lambda[i];
        }
      }
      out.push_back(IntLattice::from_generators(coeffs * lattice.basis()));
    }
    std::size_t pos = r;
    for (;;) {
      if (pos == 0) {
        done = true;
        break;
      }
      --pos;
      if (++lambda[pos] < p) break;
      lambda[pos] = 0;
    }
  }
  return out;
}

IntVec to_intvec(const std::vector<long>& v) {
  IntVec out;
  out.reserve(v.size());
  for (long x : v) out.emplace_back(x);
  return out;
}

long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw InputError("integer does not fit in a machine word: " + z.get_str());
  return z.get_si();
}

}  // namespace latdef
