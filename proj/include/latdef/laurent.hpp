#pragma once

// Laurent polynomials over Q in n variables s1..sn (exponents in Z^n) and
// vectors of them (elements of A^k).

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latdef/error.hpp"
#include "latdef/intlat.hpp"

namespace latdef {

using Rational = mpq_class;

inline constexpr std::size_t kMaxVars = 12;

/// Exponent vector; entries past the ring's variable count stay zero.
using ExpVec = std::array<std::int32_t, kMaxVars>;

ExpVec exp_add(const ExpVec& a, const ExpVec& b);
ExpVec exp_sub(const ExpVec& a, const ExpVec& b);
IntVec exp_to_intvec(const ExpVec& e, std::size_t nvars);
ExpVec intvec_to_exp(const IntVec& v);
ExpVec unit_exp(std::size_t var);

class LaurentPoly {
 public:
  using TermMap = std::map<ExpVec, Rational>;

  explicit LaurentPoly(std::size_t nvars = 0);
  static LaurentPoly constant(std::size_t nvars, const Rational& c);
  static LaurentPoly monomial(std::size_t nvars, const ExpVec& e, const Rational& c = 1);
  /// The variable s_{var+1}.
  static LaurentPoly variable(std::size_t nvars, std::size_t var);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Adds c * s^e, dropping the term if it cancels.
  void add_term(const ExpVec& e, const Rational& c);
  Rational coefficient(const ExpVec& e) const;
  std::vector<ExpVec> support() const;

  /// s^e * this
  LaurentPoly shifted(const ExpVec& e) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a) { return a *= Rational(-1); }
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

 private:
  void check_same_ring(const LaurentPoly& o) const;

  std::size_t nvars_ = 0;
  TermMap terms_;
};

class LaurentVec {
 public:
  LaurentVec() = default;
  /// Zero vector of length k.
  LaurentVec(std::size_t nvars, std::size_t k);
  explicit LaurentVec(std::vector<LaurentPoly> entries);
  LaurentVec(std::size_t nvars, std::vector<LaurentPoly> entries);
  /// Standard basis vector e_i.
  static LaurentVec unit(std::size_t nvars, std::size_t k, std::size_t i);

  std::size_t nvars() const { return nvars_; }
  std::size_t k() const { return entries_.size(); }
  bool is_zero() const;

  LaurentPoly& operator[](std::size_t i) { return entries_[i]; }
  const LaurentPoly& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<LaurentPoly>& entries() const { return entries_; }

  /// Union of the entry supports, as points of Z^n (entry index ignored).
  std::vector<ExpVec> support() const;
  std::size_t term_count() const;

  LaurentVec shifted(const ExpVec& e) const;

  LaurentVec& operator+=(const LaurentVec& o);
  LaurentVec& operator-=(const LaurentVec& o);

  friend LaurentVec operator+(LaurentVec a, const LaurentVec& b) { return a += b; }
  friend LaurentVec operator-(LaurentVec a, const LaurentVec& b) { return a -= b; }
  friend LaurentVec operator*(const LaurentPoly& a, const LaurentVec& v);
  friend LaurentVec operator*(const Rational& c, const LaurentVec& v);
  friend bool operator==(const LaurentVec& a, const LaurentVec& b) = default;

 private:
  std::size_t nvars_ = 0;
  std::vector<LaurentPoly> entries_;
};

/// Row-major matrix of Laurent polynomials (rows x cols).
struct LaurentMatrix {
  std::size_t nvars = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<LaurentPoly> data;

  LaurentMatrix() = default;
  LaurentMatrix(std::size_t nvars, std::size_t rows, std::size_t cols);
  static LaurentMatrix from_rows(std::size_t nvars, std::size_t cols, const std::vector<LaurentVec>& rows);
  static LaurentMatrix from_cols(std::size_t nvars, std::size_t rows, const std::vector<LaurentVec>& cols);

  LaurentPoly& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const LaurentPoly& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  LaurentVec row(std::size_t r) const;
  LaurentVec col(std::size_t c) const;
  LaurentMatrix transpose() const;
  /// this * v for v of length cols.
  LaurentVec apply(const LaurentVec& v) const;

  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) = default;
};

/// Multiplies v by s^{-m}, m the componentwise minimum exponent over the whole
/// support, so every exponent becomes nonnegative. Returns (result, m).
std::pair<LaurentVec, ExpVec> normalize_to_poly(const LaurentVec& v);

/// Homothety followed by a lattice automorphism:
/// c s^x  ->  c * prod_i scalars_i^{x_i} * s^{W x}.
/// With unit scalars this is the ring automorphism induced by x -> W x.
struct MonomialMap {
  IntMatrix W;
  std::vector<Rational> scalars;

  static MonomialMap lattice_map(const IntMatrix& w);
  static MonomialMap identity(std::size_t n);

  /// Throws InputError for a non-unimodular W or a zero scalar.
  void validate() const;
  MonomialMap inverse() const;
};

/// (f o g)(v) = f(g(v)).
MonomialMap compose(const MonomialMap& f, const MonomialMap& g);

LaurentPoly apply_monomial_map(const MonomialMap& f, const LaurentPoly& p);
LaurentVec apply_monomial_map(const MonomialMap& f, const LaurentVec& v);

/// Splits the terms of v by the coset of `lattice` containing their support
/// point. Keys are canonical coset representatives; components sum to v.
std::map<IntVec, LaurentVec> coset_split(const LaurentVec& v, const IntLattice& lattice);

// --- text syntax -----------------------------------------------------------

/// Parse error carrying the 0-based byte offset of the offending token.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t offset) : InputError(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Parses e.g. "1 + s1*s2 + s2^2" or "s1^-2*s2 - 3/2". Variables are
/// `prefix` followed by a 1-based index not exceeding nvars.
LaurentPoly parse_laurent(std::string_view text, std::size_t nvars, std::string_view prefix = "s");

/// Canonical text: terms by ascending total degree of the shifted
/// (nonnegative) exponents, ties by descending lex order.
std::string to_string(const LaurentPoly& p, std::string_view prefix = "s");
std::vector<std::string> to_strings(const LaurentVec& v, std::string_view prefix = "s");

}  // namespace latdef
