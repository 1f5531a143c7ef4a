#include "latdef/analysis.hpp"

#include <stdexcept>

#include "latdef/error.hpp"

namespace latdef {

namespace {

// a / b for an exact quotient, by long division on lex-leading terms.
LaurentPoly exact_divide(LaurentPoly a, const LaurentPoly& b) {
  const std::size_t n = b.nvars();
  LaurentPoly q(n);
  const auto& [lb, cb] = *b.terms().rbegin();
  for (int steps = 0; !a.is_zero(); ++steps) {
    if (steps > 1000000) throw std::logic_error("exact_divide: quotient is not exact");
    const auto& [la, ca] = *a.terms().rbegin();
    const LaurentPoly t = LaurentPoly::monomial(n, exp_sub(la, lb), ca / cb);
    q += t;
    a -= t * b;
  }
  return q;
}

// Fraction-free elimination over A; the number of pivots is the rank.
std::size_t bareiss_rank(std::vector<std::vector<LaurentPoly>> m, std::size_t n, std::size_t cols) {
  std::size_t r = 0;
  LaurentPoly prev = LaurentPoly::constant(n, 1);
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        m[i][j] = exact_divide(m[r][c] * m[i][j] - m[i][c] * m[r][j], prev);
      m[i][c] = LaurentPoly(n);
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

LaurentMatrix rows_matrix(std::size_t n, std::size_t cols, const std::vector<LaurentVec>& rows) {
  return LaurentMatrix::from_rows(n, cols, rows);
}

bool is_image_rep(const Submodule& p, const LaurentMatrix& r) {
  const LaurentMatrix g = rows_matrix(p.nvars(), p.k(), p.gb());
  if (g.rows > 0) {
    const LaurentMatrix prod = g * r;
    for (const auto& e : prod.data)
      if (!e.is_zero()) return false;
  }
  return kernel(r.transpose()) == p;
}

}  // namespace

std::size_t rank_over_fractions(const Submodule& p) {
  std::vector<std::vector<LaurentPoly>> m;
  for (const auto& g : p.generators())
    if (!g.is_zero()) m.push_back(g.entries());
  return bareiss_rank(std::move(m), p.nvars(), p.k());
}

Submodule torsion_closure(const Submodule& p) {
  const std::size_t n = p.nvars(), k = p.k();
  if (p.is_zero()) return Submodule::zero(n, k);
  const Submodule syz = syzygies(rows_matrix(n, k, p.gb()));
  if (syz.is_zero()) return Submodule::full(n, k);
  return kernel(rows_matrix(n, k, syz.gb()));
}

bool is_controllable(const Submodule& p) { return torsion_closure(p) == p; }

bool is_autonomous(const Submodule& p) { return rank_over_fractions(p) == p.k(); }

LaurentMatrix image_representation(const Submodule& p) {
  if (!is_controllable(p))
    throw PreconditionError("image_representation: the system is not controllable, so it has no image "
                            "representation");
  const std::size_t n = p.nvars(), k = p.k();
  const Submodule syz = p.is_zero() ? Submodule::full(n, k) : syzygies(rows_matrix(n, k, p.gb()));
  if (syz.is_zero()) return LaurentMatrix(n, k, 1);
  return LaurentMatrix::from_cols(n, k, syz.gb());
}

Decomposition decomposition(const Submodule& p) {
  const std::size_t n = p.nvars(), k = p.k();
  Decomposition d;
  d.closure = torsion_closure(p);
  d.closure_generators = d.closure.gb();
  const std::size_t m = d.closure_generators.size();
  d.presentation = LaurentMatrix(n, 0, m);
  if (m > 0) {
    std::vector<LaurentVec> cols = d.closure_generators;
    for (const auto& g : p.gb()) cols.push_back(g);
    std::vector<LaurentVec> rels;
    const Submodule syz = syzygies(LaurentMatrix::from_cols(n, k, cols));
    for (const auto& r : syz.gb()) {
      LaurentVec c(n, m);
      for (std::size_t i = 0; i < m; ++i) c[i] = r[i];
      if (!c.is_zero()) rels.push_back(std::move(c));
    }
    const Submodule rel(n, m, rels);
    d.presentation = rows_matrix(n, m, rel.gb());
    d.quotient_is_torsion = is_autonomous(rel);
  } else {
    d.quotient_is_torsion = true;
  }
  d.cokernel_torsion_free = torsion_closure(d.closure) == d.closure;
  return d;
}

std::size_t degree_of_autonomy(const Submodule& p) {
  if (!is_autonomous(p)) return 0;
  const std::size_t n = p.nvars();
  for (std::size_t size = n; size-- > 0;) {
    // Subsets of {0..n-1} with `size` elements, as bitmasks.
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != size) continue;
      std::vector<std::size_t> drop;
      for (std::size_t i = 0; i < n; ++i)
        if (!(mask >> i & 1u)) drop.push_back(i);
      if (!is_autonomous(eliminate(p, drop))) return n - size;
    }
  }
  return n;
}

TransferReport transfer_checks(const Submodule& p, const IntLattice& s) {
  const ContractedModule q = contract(p, s);
  TransferReport rep = transfer_checks(q);
  if (is_controllable(p)) rep.controllable_descends = is_controllable(q.q);
  if (rep.full_rank && is_autonomous(p)) rep.autonomous_descends = is_autonomous(q.q);
  return rep;
}

TransferReport transfer_checks(const ContractedModule& q) {
  TransferReport rep;
  rep.full_rank = q.ctx.rank() == q.ctx.ambient_dim();
  const Submodule qe = extend(q);
  const bool qc = is_controllable(q.q);
  rep.controllable_matches = qc == is_controllable(qe);
  rep.autonomous_matches = is_autonomous(q.q) == is_autonomous(qe);
  if (qc) {
    const LaurentMatrix t = image_representation(q.q);
    std::vector<LaurentVec> cols;
    for (std::size_t c = 0; c < t.cols; ++c) cols.push_back(embed(q.ctx, t.col(c)));
    rep.image_rep_transfers = is_image_rep(qe, LaurentMatrix::from_cols(qe.nvars(), qe.k(), cols));
  }
  return rep;
}

AnalysisReport analyze(const Submodule& p) {
  AnalysisReport r;
  r.rank_over_fractions = rank_over_fractions(p);
  r.is_autonomous = r.rank_over_fractions == p.k();
  r.decomposition = decomposition(p);
  r.torsion_closure = r.decomposition.closure;
  r.is_controllable = r.torsion_closure == p;
  if (r.is_controllable) r.image_rep = image_representation(p);
  r.degree_of_autonomy = degree_of_autonomy(p);
  return r;
}

}  // namespace latdef
