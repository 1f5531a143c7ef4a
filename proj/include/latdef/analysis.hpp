#pragma once

// Controllability, autonomy and related structure of the system P.

#include <optional>
#include <vector>

#include "latdef/groebner.hpp"
#include "latdef/sublattice.hpp"

namespace latdef {

/// Rank of the generator matrix of P over the fraction field of A.
std::size_t rank_over_fractions(const Submodule& p);

/// {x in A^k : a x in P for some a != 0}, computed as the kernel of R^T
/// where the columns of R generate the syzygies of the columns of P.
Submodule torsion_closure(const Submodule& p);

bool is_controllable(const Submodule& p);
bool is_autonomous(const Submodule& p);

/// k x c matrix whose columns generate the syzygies of the columns of P
/// (a single zero column when there are none). Throws PreconditionError
/// when P is not controllable.
LaurentMatrix image_representation(const Submodule& p);

struct Decomposition {
  Submodule closure;
  std::vector<LaurentVec> closure_generators;
  /// Rows c with sum_i c_i g_i in P, g = closure_generators; columns match
  /// the generators. Presents closure / P.
  LaurentMatrix presentation;
  bool quotient_is_torsion = false;
  bool cokernel_torsion_free = false;
};

Decomposition decomposition(const Submodule& p);

/// 0 for non-autonomous P; otherwise n - |I| for the largest coordinate set
/// I on which the contraction of P is not torsion (n if there is none).
std::size_t degree_of_autonomy(const Submodule& p);

struct TransferReport {
  bool full_rank = false;
  bool controllable_descends = true;
  bool autonomous_descends = true;
  bool controllable_matches = true;
  bool autonomous_matches = true;
  bool image_rep_transfers = true;

  bool all() const {
    return controllable_descends && autonomous_descends && controllable_matches && autonomous_matches &&
           image_rep_transfers;
  }
};

/// Contraction and extension preserve controllability and autonomy, and
/// extension of an image representation of Q is one of Q^e.
TransferReport transfer_checks(const Submodule& p, const IntLattice& s);
TransferReport transfer_checks(const ContractedModule& q);

struct AnalysisReport {
  std::size_t rank_over_fractions = 0;
  bool is_controllable = false;
  bool is_autonomous = false;
  Submodule torsion_closure;
  std::optional<LaurentMatrix> image_rep;
  std::size_t degree_of_autonomy = 0;
  Decomposition decomposition;
};

AnalysisReport analyze(const Submodule& p);

}  // namespace latdef
