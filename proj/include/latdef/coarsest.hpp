#pragma once

// The coarsest sublattice from which a system can be reconstructed by
// extension, and constant modules.

#include <optional>
#include <vector>

#include "latdef/groebner.hpp"
#include "latdef/intlat.hpp"
#include "latdef/sublattice.hpp"

namespace latdef {

/// Join over the reduced GB elements g of the lattices spanned by the
/// differences of the support points of g. Zero lattice for P = 0.
IntLattice support_difference_lattice(const Submodule& p);

struct AuditEntry {
  long prime;
  IntLattice lattice;
  bool is_extension;
};

struct CoarsestReport {
  IntLattice lattice;
  std::size_t rank = 0;
  bool is_constant_module = false;
  std::vector<AuditEntry> audit;
  /// Candidates replaced by a strictly coarser lattice found by the audit.
  std::vector<IntLattice> restarts;
  std::optional<bool> oracle_confirmed;
};

CoarsestReport coarsest_lattice(const Submodule& p, const std::vector<long>& audit_primes = {2, 3, 5, 7});

/// Generated by unit multiples of constant vectors. A constant module must
/// be free; that is checked and a logic_error raised if it fails.
bool is_constant_module(const Submodule& p);

/// Intersection of all sublattices S of Z^n (n <= 2) of index at most
/// `index_bound`, together with the rank-deficient lattices spanned by
/// vectors with entries in [-index_bound, index_bound] (at most 4 for n = 2),
/// that pass the extension criterion with membership decided by a window
/// span of the user's generators.
IntLattice brute_force_coarsest(const Submodule& p, long index_bound);

}  // namespace latdef
