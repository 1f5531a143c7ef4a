#pragma once

// Contraction to and extension from the Laurent subring A_S spanned by the
// monomials of a sublattice S of Z^n.
//
// Frame: the basis of S, written as the columns of an n x r matrix, has Smith
// form U D V. phi = U^{-1} maps S onto the diagonal lattice spanned by
// d_i e_i (i <= r). Contracted modules use r variables t1..tr, where t^q
// stands for the monomial s^{E q}, E = U[:, :r] diag(d).

#include <optional>
#include <vector>

#include "latdef/groebner.hpp"
#include "latdef/intlat.hpp"
#include "latdef/laurent.hpp"

namespace latdef {

struct SublatticeContext {
  IntLattice lattice;
  SmithDecomposition smith;
  MonomialMap phi;
  std::vector<long> d;
  /// n x r; column i is the monomial exponent represented by t_{i+1}.
  IntMatrix embedding;

  std::size_t ambient_dim() const { return lattice.ambient_dim(); }
  std::size_t rank() const { return d.size(); }
  /// Index [Z^n : S] for full-rank S.
  Integer index() const;
};

SublatticeContext make_context(const IntLattice& s);

struct ContractedModule {
  SublatticeContext ctx;
  /// Submodule of A_S^k in the variables t1..tr.
  Submodule q;
};

/// Maps an element of A_S^k written in t-variables to A^k.
LaurentVec embed(const SublatticeContext& ctx, const LaurentVec& v);

ContractedModule contract(const Submodule& p, const IntLattice& s);
ContractedModule contract(const Submodule& p, const SublatticeContext& ctx);
Submodule extend(const ContractedModule& q);

struct ExtensionWitness {
  std::size_t generator;
  LaurentVec element;
  IntVec coset;
  LaurentVec component;
};

struct ExtensionVerdict {
  bool is_extension = true;
  std::optional<ExtensionWitness> witness;
};

/// P = P^{ce} iff every coset component (with respect to S) of every element
/// of a generating set lies in P.
ExtensionVerdict is_extension_from(const Submodule& p, const IntLattice& s);
/// Same test on an explicit generating set of p.
ExtensionVerdict is_extension_from(const Submodule& p, const std::vector<LaurentVec>& gens, const IntLattice& s);

struct RoundtripReport {
  bool qec_equals_q = true;
  bool pce_in_p = true;
  bool pcec_equals_pc = true;
  bool pce_equals_p = true;
};

RoundtripReport contract_extend_roundtrips(const Submodule& p, const IntLattice& s);
/// Q^{ec} = Q for a contracted-frame module.
RoundtripReport contract_extend_roundtrips(const ContractedModule& q);

struct GaloisDescription {
  std::vector<long> moduli;
  Integer order;
};

/// Structural description of Aut_{A_S}(A) = mu_{d1} x ... x mu_{dn}; S must
/// have full rank.
GaloisDescription galois_group_of(const IntLattice& s);

}  // namespace latdef
