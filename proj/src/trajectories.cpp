#include "latdef/trajectories.hpp"

#include <algorithm>
#include <map>

namespace latdef {

namespace {

std::vector<ExpVec> box_points(const std::vector<long>& lo, const std::vector<long>& hi) {
  const std::size_t n = lo.size();
  std::vector<ExpVec> out;
  ExpVec cur{};
  for (std::size_t i = 0; i < n; ++i) cur[i] = static_cast<std::int32_t>(lo[i]);
  for (;;) {
    out.push_back(cur);
    std::size_t i = 0;
    while (i < n && ++cur[i] > hi[i]) cur[i] = static_cast<std::int32_t>(lo[i]), ++i;
    if (i == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Support {
  ExpVec lo{}, hi{};
};

Support support_box(const std::vector<LaurentVec>& gens, std::size_t n) {
  Support b;
  bool first = true;
  for (const auto& g : gens)
    for (const auto& e : g.support()) {
      for (std::size_t i = 0; i < n; ++i) {
        b.lo[i] = first ? e[i] : std::min(b.lo[i], e[i]);
        b.hi[i] = first ? e[i] : std::max(b.hi[i], e[i]);
      }
      first = false;
    }
  return b;
}

// Candidate shifts y with y + supp(g) inside the window: y + min(supp) must be a window point.
std::vector<ExpVec> fitting_shifts(const LaurentVec& g, const Window& w) {
  const std::vector<ExpVec> supp = g.support();
  std::vector<ExpVec> out;
  if (supp.empty()) return out;
  const ExpVec& anchor = supp.front();
  for (const auto& x : w.points()) {
    const ExpVec y = exp_sub(x, anchor);
    bool fits = true;
    for (const auto& z : supp)
      if (!(fits = w.contains(exp_add(y, z)))) break;
    if (fits) out.push_back(y);
  }
  return out;
}

std::vector<Rational> restrict_to(const WindowSolutionSpace& sp, const std::vector<std::size_t>& idx,
                                  const std::vector<Rational>& f) {
  std::vector<Rational> out;
  out.reserve(idx.size() * sp.k);
  for (std::size_t i : idx)
    for (std::size_t j = 0; j < sp.k; ++j) out.push_back(f[i * sp.k + j]);
  return out;
}

std::vector<std::size_t> indices_of(const WindowSolutionSpace& sp, const Window& inner) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < sp.points.size(); ++i)
    if (inner.contains(sp.points[i])) out.push_back(i);
  return out;
}

}  // namespace

Window Window::box(const std::vector<long>& lo, const std::vector<long>& hi) {
  if (lo.size() != hi.size()) throw InputError("window: bound lengths differ");
  if (lo.size() > kMaxVars) throw InputError("window: too many dimensions");
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (lo[i] > hi[i]) throw InputError("window: empty interval");
  Window w;
  w.dim_ = lo.size();
  w.lo_ = lo;
  w.hi_ = hi;
  w.points_ = box_points(lo, hi);
  return w;
}

Window Window::points(std::size_t dim, std::vector<ExpVec> pts) {
  if (pts.empty()) throw InputError("window: empty point set");
  Window w;
  w.dim_ = dim;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  w.points_ = std::move(pts);
  return w;
}

std::optional<std::size_t> Window::index_of(const ExpVec& x) const {
  const auto it = std::lower_bound(points_.begin(), points_.end(), x);
  if (it == points_.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

std::optional<Window> Window::shrunk(long margin) const {
  if (!is_box()) throw InputError("window: only boxes can be shrunk");
  std::vector<long> lo = lo_, hi = hi_;
  for (std::size_t i = 0; i < dim_; ++i) {
    lo[i] += margin;
    hi[i] -= margin;
    if (lo[i] > hi[i]) return std::nullopt;
  }
  return box(lo, hi);
}

std::optional<Window> Window::restricted(const IntLattice& s) const {
  std::vector<ExpVec> pts;
  for (const auto& x : points_)
    if (s.contains(exp_to_intvec(x, dim_))) pts.push_back(x);
  if (pts.empty()) return std::nullopt;
  return points(dim_, std::move(pts));
}

Window Window::shifted(const ExpVec& y) const {
  if (is_box() && dim_ > 0) {
    std::vector<long> lo = lo_, hi = hi_;
    for (std::size_t i = 0; i < dim_; ++i) lo[i] += y[i], hi[i] += y[i];
    return box(lo, hi);
  }
  std::vector<ExpVec> pts;
  for (const auto& x : points_) pts.push_back(exp_add(x, y));
  return points(dim_, std::move(pts));
}

Window aligned_window(const IntLattice& s, const Window& box) {
  const std::size_t n = s.ambient_dim();
  if (!s.is_full_rank()) throw PreconditionError("aligned_window: the sublattice must have full rank");
  const auto base = box.restricted(s);
  if (!base) throw InputError("aligned_window: the box misses the sublattice");
  const long idx = to_long(s.index());
  std::map<IntVec, ExpVec> reps;
  const Window corner = Window::box(std::vector<long>(n, 0), std::vector<long>(n, idx - 1));
  for (const auto& x : corner.points())
    reps.try_emplace(s.coset_representative(exp_to_intvec(x, n)), x);
  std::vector<ExpVec> pts;
  for (const auto& [key, c] : reps)
    for (const auto& x : base->points()) pts.push_back(exp_add(x, c));
  return Window::points(n, std::move(pts));
}

WindowSolutionSpace window_solutions(const std::vector<LaurentVec>& gens, std::size_t k, const Window& w) {
  WindowSolutionSpace sp;
  sp.k = k;
  sp.points = w.points();
  const std::size_t cols = w.size() * k;
  detail::Echelon eqs(cols);
  for (const auto& g : gens) {
    if (g.k() != k) throw InputError("window_solutions: generator length differs from k");
    for (const auto& y : fitting_shifts(g, w)) {
      detail::QRow row(cols);
      for (std::size_t j = 0; j < k; ++j)
        for (const auto& [z, c] : g[j].terms()) row[*w.index_of(exp_add(y, z)) * k + j] += c;
      eqs.add(row);
    }
  }
  sp.basis = eqs.nullspace();
  sp.dimension = sp.basis.size();
  return sp;
}

WindowSolutionSpace window_solutions(const Submodule& p, const Window& w) {
  return window_solutions(p.generators(), p.k(), w);
}

long support_diameter(const std::vector<LaurentVec>& gens) {
  long d = 0;
  for (const auto& g : gens) {
    const Support b = support_box({g}, kMaxVars);
    for (std::size_t i = 0; i < kMaxVars; ++i) d = std::max<long>(d, b.hi[i] - b.lo[i]);
  }
  return d;
}

WindowSpan::WindowSpan(const std::vector<LaurentVec>& gens, std::size_t k, const Window& box)
    : nvars_(box.dim()), k_(k), box_(box), span_(box.size() * k) {
  for (const auto& g : gens)
    for (const auto& y : fitting_shifts(g, box_)) {
      detail::QRow row(box_.size() * k_);
      for (std::size_t j = 0; j < k_; ++j)
        for (const auto& [z, c] : g[j].terms()) row[*box_.index_of(exp_add(y, z)) * k_ + j] = c;
      span_.add(row);
    }
}

bool WindowSpan::contains(const LaurentVec& v) const {
  detail::QRow row(box_.size() * k_);
  for (std::size_t j = 0; j < k_; ++j)
    for (const auto& [z, c] : v[j].terms()) {
      const auto i = box_.index_of(z);
      if (!i) return false;
      row[*i * k_ + j] = c;
    }
  return span_.in_span(row);
}

RestrictionCheck restriction_check(const Submodule& p, const IntLattice& s, const Window& w,
                                   std::optional<long> margin) {
  if (!w.is_box()) throw InputError("restriction_check: window must be a box");
  const ContractedModule q = contract(p, s);
  std::vector<LaurentVec> qe;
  for (const auto& g : q.q.gb()) qe.push_back(embed(q.ctx, g));

  RestrictionCheck rc;
  rc.margin = margin ? *margin : std::max(support_diameter(p.generators()), support_diameter(qe));
  const auto on_s = w.restricted(s);
  if (!on_s) throw InputError("restriction_check: window misses the sublattice");
  const auto inner = w.shrunk(rc.margin);
  const auto inner_s = inner ? inner->restricted(s) : std::nullopt;
  if (!inner_s) throw InputError("restriction_check: window too small for the margin");

  const WindowSolutionSpace big = window_solutions(p.generators(), p.k(), w);
  const WindowSolutionSpace small = window_solutions(qe, p.k(), *on_s);
  const auto big_idx = indices_of(big, *inner_s);
  const auto small_idx = indices_of(small, *inner_s);
  const std::size_t cols = inner_s->size() * p.k();

  std::vector<detail::QRow> a, b;
  for (const auto& f : big.basis) a.push_back(restrict_to(big, big_idx, f));
  for (const auto& f : small.basis) b.push_back(restrict_to(small, small_idx, f));
  rc.restricted_dim = detail::rank(a, cols);
  rc.contracted_dim = detail::rank(b, cols);
  std::vector<detail::QRow> both = a;
  both.insert(both.end(), b.begin(), b.end());
  rc.holds = rc.restricted_dim == rc.contracted_dim && detail::rank(both, cols) == rc.restricted_dim;
  return rc;
}

ExtensionProductCheck extension_product_check(const ContractedModule& q, const Window& w) {
  const SublatticeContext& ctx = q.ctx;
  const std::size_t n = ctx.ambient_dim(), r = ctx.rank();
  if (r != n) throw PreconditionError("extension_product_check: the sublattice must have full rank");
  if (w.dim() != n) throw InputError("extension_product_check: window dimension differs from the lattice");

  std::map<IntVec, std::vector<ExpVec>> cosets;
  for (const auto& x : w.points()) cosets[ctx.lattice.coset_representative(exp_to_intvec(x, n))].push_back(x);
  ExtensionProductCheck ec;
  ec.index = ctx.index();
  if (Integer(cosets.size()) != ec.index) throw InputError("extension_product_check: window misaligned");
  const auto& base = cosets.at(ctx.lattice.coset_representative(IntVec(n, 0)));
  for (const auto& [rep, pts] : cosets) {
    if (pts.size() != base.size()) throw InputError("extension_product_check: window misaligned");
    const ExpVec off = exp_sub(pts.front(), base.front());
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (exp_add(base[i], off) != pts[i]) throw InputError("extension_product_check: window misaligned");
  }

  // The sublattice window in t-coordinates: q with E q = x.
  std::vector<ExpVec> tpts;
  for (const auto& x : base) {
    ExpVec t{};
    for (std::size_t i = 0; i < n; ++i) {
      Integer acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc += ctx.phi.W(i, j) * x[j];
      t[i] = static_cast<std::int32_t>(to_long(Integer(acc / ctx.d[i])));
    }
    tpts.push_back(t);
  }
  const Submodule qe = extend(q);
  ec.extension_dim = window_solutions(qe.gb(), qe.k(), w).dimension;
  ec.sublattice_dim = window_solutions(q.q.gb(), q.q.k(), Window::points(r, tpts)).dimension;
  ec.holds = Integer(ec.extension_dim) == ec.index * Integer(ec.sublattice_dim);
  return ec;
}

std::vector<Rational> vandermonde_reconstruct(std::size_t d, const std::vector<Rational>& targets) {
  if (targets.size() != d) throw InputError("vandermonde_reconstruct: need d targets");
  if (d == 1) return targets;
  if (d != 2)
    throw PreconditionError("vandermonde_reconstruct: d > 2 needs primitive roots of unity, which are not "
                            "rational");
  return {(targets[0] + targets[1]) / 2, (targets[0] - targets[1]) / 2};
}

}  // namespace latdef
