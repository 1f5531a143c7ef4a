#include "latdef/coarsest.hpp"

#include <algorithm>
#include <stdexcept>

#include "latdef/error.hpp"
#include "latdef/trajectories.hpp"

namespace latdef {

namespace {

IntLattice difference_lattice(const LaurentVec& g, std::size_t n) {
  const std::vector<ExpVec> supp = g.support();
  std::vector<IntVec> diffs;
  for (std::size_t i = 1; i < supp.size(); ++i) diffs.push_back(exp_to_intvec(exp_sub(supp[i], supp[0]), n));
  return IntLattice::from_generators(diffs, n);
}

std::vector<IntLattice> candidate_lattices(std::size_t n, long bound) {
  std::vector<IntLattice> out{IntLattice(n)};
  if (n == 1) {
    for (long d = 1; d <= bound; ++d) out.push_back(IntLattice::diagonal({d}));
    return out;
  }
  for (long a = 1; a <= bound; ++a)
    for (long c = 1; a * c <= bound; ++c)
      for (long b = 0; b < c; ++b) out.push_back(hnf(IntMatrix{{a, b}, {0, c}}));
  const long r = std::min(bound, 4L);
  for (long x = -r; x <= r; ++x)
    for (long y = 0; y <= r; ++y) {
      if (y == 0 && x <= 0) continue;
      const IntLattice l = hnf(IntMatrix{{x, y}});
      if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
    }
  return out;
}

}  // namespace

IntLattice support_difference_lattice(const Submodule& p) {
  const std::size_t n = p.nvars();
  IntLattice acc(n);
  for (const auto& g : p.gb()) acc = join(acc, difference_lattice(g, n));
  return acc;
}

bool is_constant_module(const Submodule& p) {
  if (!support_difference_lattice(p).is_zero()) return false;
  if (!p.is_zero() && !syzygies(LaurentMatrix::from_cols(p.nvars(), p.k(), p.gb())).is_zero())
    throw std::logic_error("constant module with nonzero syzygies");
  return true;
}

CoarsestReport coarsest_lattice(const Submodule& p, const std::vector<long>& audit_primes) {
  CoarsestReport rep;
  IntLattice cand = support_difference_lattice(p);
  for (int round = 0;; ++round) {
    if (round > 64) throw std::logic_error("coarsest_lattice: audit did not settle");
    if (!is_extension_from(p, cand).is_extension)
      throw std::logic_error("coarsest_lattice: candidate fails the extension criterion");
    rep.audit.clear();
    bool moved = false;
    for (long q : audit_primes) {
      for (const auto& sub : maximal_sublattices(cand, q)) {
        const bool ok = is_extension_from(p, sub).is_extension;
        rep.audit.push_back({q, sub, ok});
        if (ok) {
          rep.restarts.push_back(cand);
          cand = sub;
          moved = true;
          break;
        }
      }
      if (moved) break;
    }
    if (!moved) break;
  }
  rep.lattice = cand;
  rep.rank = cand.rank();
  rep.is_constant_module = is_constant_module(p);
  return rep;
}

IntLattice brute_force_coarsest(const Submodule& p, long index_bound) {
  const std::size_t n = p.nvars();
  if (n > 2) throw InputError("brute_force_coarsest: only n <= 2 is supported");
  if (index_bound < 1 || index_bound > 32) throw InputError("brute_force_coarsest: index bound must lie in [1, 32]");
  if (n == 0) return IntLattice(0);

  std::vector<LaurentVec> gens;
  for (const auto& g : p.generators())
    if (!g.is_zero()) gens.push_back(g);
  if (gens.empty()) return IntLattice(n);

  const long diam = support_diameter(gens);
  const ExpVec e0 = gens.front().support().front();
  std::vector<long> lo(e0.begin(), e0.begin() + static_cast<long>(n)), hi = lo;
  for (const auto& g : gens)
    for (const auto& e : g.support())
      for (std::size_t i = 0; i < n; ++i) {
        lo[i] = std::min<long>(lo[i], e[i]);
        hi[i] = std::max<long>(hi[i], e[i]);
      }
  for (std::size_t i = 0; i < n; ++i) lo[i] -= diam + 1, hi[i] += diam + 1;
  const WindowSpan span(gens, p.k(), Window::box(lo, hi));

  IntLattice acc = IntLattice::full(n);
  for (const auto& s : candidate_lattices(n, index_bound)) {
    bool passes = true;
    for (const auto& g : gens) {
      const auto parts = coset_split(g, s);
      if (parts.size() <= 1) continue;
      for (const auto& [rep, part] : parts)
        if (!(passes = span.contains(part))) break;
      if (!passes) break;
    }
    if (passes) acc = meet(acc, s);
  }
  return acc;
}

}  // namespace latdef
