#pragma once

// Finite-window trajectories: solutions of P(s, s^-1) f = 0 restricted to a
// finite set of lattice points, computed by exact linear algebra. A shift
// acts by (s^z f)(x) = f(x + z); an equation is instantiated only when its
// whole support lies inside the window.

#include <optional>
#include <vector>

#include "latdef/detail/linalg.hpp"
#include "latdef/groebner.hpp"
#include "latdef/sublattice.hpp"

namespace latdef {

class Window {
 public:
  /// The box prod [lo_i, hi_i]; every lo_i <= hi_i.
  static Window box(const std::vector<long>& lo, const std::vector<long>& hi);
  /// An explicit nonempty point set.
  static Window points(std::size_t dim, std::vector<ExpVec> pts);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<ExpVec>& points() const { return points_; }
  std::optional<std::size_t> index_of(const ExpVec& x) const;
  bool contains(const ExpVec& x) const { return index_of(x).has_value(); }

  bool is_box() const { return !lo_.empty() || dim_ == 0; }
  const std::vector<long>& lo() const { return lo_; }
  const std::vector<long>& hi() const { return hi_; }

  /// Box shrunk by `margin` on every side; nullopt when it becomes empty.
  std::optional<Window> shrunk(long margin) const;
  /// Points of the window lying in s.
  std::optional<Window> restricted(const IntLattice& s) const;
  Window shifted(const ExpVec& y) const;

 private:
  std::size_t dim_ = 0;
  std::vector<ExpVec> points_;  // sorted
  std::vector<long> lo_, hi_;
};

/// The points of `box` lying in S (full rank) together with their translates
/// by one small representative of every coset of S: a window whose cosets
/// are translates of each other.
Window aligned_window(const IntLattice& s, const Window& box);

struct WindowSolutionSpace {
  std::size_t k = 0;
  std::vector<ExpVec> points;
  std::size_t dimension = 0;
  /// basis[b][i * k + j] is f_j at points[i].
  std::vector<std::vector<Rational>> basis;
};

/// Window solutions of the system given by the rows `gens`.
WindowSolutionSpace window_solutions(const std::vector<LaurentVec>& gens, std::size_t k, const Window& w);
/// Uses the generators P was built from.
WindowSolutionSpace window_solutions(const Submodule& p, const Window& w);

/// Componentwise maximum over generators of (max - min) of the support.
long support_diameter(const std::vector<LaurentVec>& gens);

/// Q-span of the shifts of `gens` that fit inside a box; a membership
/// certificate that never reports a false positive.
class WindowSpan {
 public:
  WindowSpan(const std::vector<LaurentVec>& gens, std::size_t k, const Window& box);
  bool contains(const LaurentVec& v) const;

 private:
  std::size_t nvars_, k_;
  Window box_;
  detail::Echelon span_;
};

struct RestrictionCheck {
  bool holds = false;
  long margin = 0;
  /// Dimensions of the two spaces compared on the inner window.
  std::size_t restricted_dim = 0;
  std::size_t contracted_dim = 0;
};

/// Compares the restriction to S of the window solutions of P with the
/// window solutions of the contraction of P to S, both read off on the box
/// shrunk by `margin` (default: the support diameter of P and of its
/// contraction).
RestrictionCheck restriction_check(const Submodule& p, const IntLattice& s, const Window& w,
                                   std::optional<long> margin = {});

struct ExtensionProductCheck {
  bool holds = false;
  std::size_t extension_dim = 0;
  std::size_t sublattice_dim = 0;
  Integer index;
};

/// dim of the window solutions of Q^e on w against index times dim of the
/// solutions of Q on the sublattice window (in t-coordinates). The parts of
/// w in the cosets of S must be translates of each other.
ExtensionProductCheck extension_product_check(const ContractedModule& q, const Window& w);

/// Amplitudes a with c_x = sum_j a_j w^{jx}, w a primitive d-th root of
/// unity, x = 0..d-1. Only d <= 2 is possible over Q.
std::vector<Rational> vandermonde_reconstruct(std::size_t d, const std::vector<Rational>& targets);

}  // namespace latdef
