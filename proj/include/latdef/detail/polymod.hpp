#pragma once

// Buchberger engine for submodules of a free module over Q[x_1..x_m] with
// integer (fraction-free) coefficients. Used through groebner.hpp; exposed so
// tests can check S-pair closure directly.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <vector>

namespace latdef::detail {

inline constexpr std::size_t kEngineVars = 16;

struct Mono {
  std::array<std::int32_t, kEngineVars> e{};
  std::uint32_t comp = 0;
  std::int32_t deg = 0;
  std::uint32_t mask = 0;

  void refresh();
  friend bool operator==(const Mono& a, const Mono& b) { return a.comp == b.comp && a.e == b.e; }
};

/// a divides b (same component, exponentwise <=).
bool divides(const Mono& a, const Mono& b);
Mono mono_mul(const Mono& a, const Mono& b);  // component taken from b
Mono mono_div(const Mono& b, const Mono& a);  // requires divides(a, b); comp 0
Mono mono_lcm(const Mono& a, const Mono& b);  // component taken from a

struct Term {
  Mono m;
  mpz_class c;
};

/// Terms strictly decreasing in the engine order; no zero coefficients.
using Poly = std::vector<Term>;

/// Monomial order on Q[x_1..x_nvars]^k:
/// 1. if `block` is nonempty: degree in the block variables, then reverse lex
///    on the block variables;
/// 2. position-over-term: position rank, then the rest order on the remaining
///    variables; term-over-position: the other way round.
/// The rest order is graded reverse lex or lex (x_1 > x_2 > ...).
/// A smaller rank means a higher-priority (larger) position.
struct Order {
  std::size_t nvars = 0;
  std::uint32_t block = 0;
  bool lex = false;
  bool top = false;
  std::vector<int> rank;

  int compare(const Mono& a, const Mono& b) const;
  bool greater(const Mono& a, const Mono& b) const { return compare(a, b) > 0; }
  int position_rank(std::uint32_t comp) const { return comp < rank.size() ? rank[comp] : static_cast<int>(comp); }
};

/// Sorts terms, merges duplicates and drops zeros.
void canonicalize(Poly& p, const Order& ord);
/// Divides by the content and makes the leading coefficient positive.
void make_primitive(Poly& p);

/// Full normal form of f with respect to g (any generating set), primitive.
Poly normal_form(Poly f, const std::vector<Poly>& g, const Order& ord);

/// S-polynomial of two elements whose leading terms share a component.
Poly spoly(const Poly& f, const Poly& g, const Order& ord);

/// Reduced Groebner basis (primitive, positive leading coefficients), sorted
/// by ascending leading monomial.
std::vector<Poly> groebner(std::vector<Poly> gens, const Order& ord);

}  // namespace latdef::detail
