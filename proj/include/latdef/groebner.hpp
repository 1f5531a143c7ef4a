#pragma once

// Submodules of A^k, A = Q[s1^±, ..., sn^±], via Groebner bases of their
// polynomial lifts saturated by s1*...*sn.

#include <memory>
#include <vector>

#include "latdef/laurent.hpp"

namespace latdef {

struct TermOrder {
  enum class Kind { grevlex, lex };
  enum class Extension { position_over_term, term_over_position };

  Kind kind = Kind::grevlex;
  Extension extension = Extension::position_over_term;
  /// Variables compared first (by degree, then reverse lex within the block).
  std::vector<std::size_t> elimination_block;
  /// rank[j] for component j; smaller ranks are larger. Empty: rank[j] = j.
  std::vector<int> position_priority;

  static TermOrder grevlex() { return {}; }
  static TermOrder lex() { return {Kind::lex, Extension::position_over_term, {}, {}}; }
};

class Submodule {
 public:
  Submodule() : Submodule(0, 0, {}) {}
  Submodule(std::size_t nvars, std::size_t k, std::vector<LaurentVec> generators);

  static Submodule zero(std::size_t nvars, std::size_t k) { return Submodule(nvars, k, {}); }
  /// A^k itself.
  static Submodule full(std::size_t nvars, std::size_t k);

  std::size_t nvars() const { return nvars_; }
  std::size_t k() const { return k_; }
  const std::vector<LaurentVec>& generators() const { return generators_; }

  /// Canonical reduced Groebner basis (default order), monic, with
  /// nonnegative exponents. Computed once and shared between copies.
  const std::vector<LaurentVec>& gb() const;

  bool contains(const LaurentVec& v) const;
  /// Remainder of the normalized lift of v modulo gb(); zero iff v is a member.
  LaurentVec normal_form(const LaurentVec& v) const;
  bool is_zero() const { return gb().empty(); }
  bool is_full() const;

  friend bool operator==(const Submodule& a, const Submodule& b);

 private:
  struct Cache;
  const Cache& cache() const;

  std::size_t nvars_;
  std::size_t k_;
  std::vector<LaurentVec> generators_;
  std::shared_ptr<Cache> cache_;
};

/// Reduced GB of the saturated lift under `ord`.
std::vector<LaurentVec> groebner_basis(const Submodule& p, const TermOrder& ord = {});
bool member(const LaurentVec& v, const Submodule& p);
bool submodule_equal(const Submodule& p, const Submodule& q);

/// {r in A^c : M r = 0} for M with k rows and c columns.
Submodule syzygies(const LaurentMatrix& m);
/// Kernel of v -> M v, A^cols -> A^rows (the same computation).
Submodule kernel(const LaurentMatrix& m);
/// (P : f) = {v : f v in P}; f must be nonzero.
Submodule module_quotient(const Submodule& p, const LaurentPoly& f);
/// P intersected with A_I^k, I the variables not in `drop`, renumbered
/// consecutively (the result lives in nvars - |drop| variables).
Submodule eliminate(const Submodule& p, const std::vector<std::size_t>& drop);

/// Reduced GB of the saturation of the module generated by the normalized
/// lifts of `gens`, under `ord`.
std::vector<LaurentVec> saturated_gb(const std::vector<LaurentVec>& gens, std::size_t nvars, std::size_t k,
                                     const TermOrder& ord = {});

// Polynomial-ring (unsaturated) operations; inputs must have nonnegative
// exponents. Used to cross-check the saturation.

std::vector<LaurentVec> polynomial_gb(const std::vector<LaurentVec>& gens, std::size_t nvars, std::size_t k,
                                      const TermOrder& ord = {});
/// Generators of (M : f) in Q[s]^k.
std::vector<LaurentVec> polynomial_quotient(const std::vector<LaurentVec>& gens, std::size_t nvars,
                                            std::size_t k, const LaurentPoly& f);
/// Saturation by s1*...*sn computed by iterating polynomial_quotient until
/// the reduced GB stabilizes; returns that GB.
std::vector<LaurentVec> iterated_saturation(const std::vector<LaurentVec>& gens, std::size_t nvars, std::size_t k);

}  // namespace latdef
