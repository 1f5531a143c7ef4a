#include "latdef/groebner.hpp"

#include <algorithm>
#include <mutex>

#include "latdef/detail/polymod.hpp"
#include "latdef/error.hpp"

namespace latdef {

using detail::Mono;
using detail::Order;
using detail::Poly;
using detail::Term;

namespace {

void check_vec(const LaurentVec& v, std::size_t nvars, std::size_t k) {
  if (v.nvars() != nvars || v.k() != k) throw InputError("vector does not live in the ambient module");
}

// nvars_engine >= nvars; the extra variables (if any) are auxiliary.
Order make_order(const TermOrder& ord, std::size_t nvars_engine, std::size_t k) {
  if (nvars_engine > detail::kEngineVars) throw InputError("too many variables for the Groebner engine");
  Order o;
  o.nvars = nvars_engine;
  o.lex = ord.kind == TermOrder::Kind::lex;
  o.top = ord.extension == TermOrder::Extension::term_over_position;
  for (std::size_t v : ord.elimination_block) {
    if (v >= nvars_engine) throw InputError("elimination block variable out of range");
    o.block |= 1u << v;
  }
  if (!ord.position_priority.empty()) {
    if (ord.position_priority.size() != k) throw InputError("position priority has wrong length");
    o.rank = ord.position_priority;
  }
  return o;
}

// v must have nonnegative exponents.
Poly to_poly(const LaurentVec& v, const Order& ord) {
  Integer den = 1;
  for (const auto& p : v.entries())
    for (const auto& [e, c] : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  Poly out;
  for (std::size_t j = 0; j < v.k(); ++j)
    for (const auto& [e, c] : v[j].terms()) {
      Term t;
      for (std::size_t i = 0; i < v.nvars(); ++i) {
        if (e[i] < 0) throw InputError("polynomial lift has a negative exponent");
        t.m.e[i] = e[i];
      }
      t.m.comp = static_cast<std::uint32_t>(j);
      t.m.refresh();
      t.c = c.get_num() * (den / c.get_den());
      out.push_back(std::move(t));
    }
  detail::canonicalize(out, ord);
  return out;
}

// Monic conversion; only the first nvars engine variables are kept.
LaurentVec to_vec(const Poly& p, std::size_t nvars, std::size_t k) {
  LaurentVec v(nvars, k);
  if (p.empty()) return v;
  const Integer& lc = p[0].c;
  for (const auto& t : p) {
    ExpVec e{};
    for (std::size_t i = 0; i < nvars; ++i) e[i] = t.m.e[i];
    Rational q(t.c, lc);
    q.canonicalize();
    v[t.m.comp].add_term(e, q);
  }
  return v;
}

bool uses_variable(const Poly& p, std::size_t var) {
  return std::any_of(p.begin(), p.end(), [&](const Term& t) { return t.m.e[var] != 0; });
}

// Reduced GB (engine form, no auxiliary variable) of the saturated lift.
std::vector<Poly> saturated_engine_gb(const std::vector<LaurentVec>& gens, std::size_t nvars, std::size_t k,
                                      const TermOrder& ord) {
  const bool saturate = nvars > 0;
  const std::size_t t = nvars;
  Order o = make_order(ord, nvars + (saturate ? 1 : 0), k);
  if (saturate) o.block |= 1u << t;

  std::vector<Poly> polys;
  for (const auto& g : gens) {
    check_vec(g, nvars, k);
    if (g.is_zero()) continue;
    polys.push_back(to_poly(normalize_to_poly(g).first, o));
  }
  if (polys.empty()) return {};
  if (saturate) {
    for (std::size_t j = 0; j < k; ++j) {
      Term one, tail;
      one.m.comp = tail.m.comp = static_cast<std::uint32_t>(j);
      one.c = 1;
      for (std::size_t i = 0; i < nvars; ++i) tail.m.e[i] = 1;
      tail.m.e[t] = 1;
      tail.c = -1;
      one.m.refresh();
      tail.m.refresh();
      Poly p{one, tail};
      detail::canonicalize(p, o);
      polys.push_back(std::move(p));
    }
  }
  std::vector<Poly> gb = detail::groebner(std::move(polys), o);
  if (saturate) gb.erase(std::remove_if(gb.begin(), gb.end(), [&](const Poly& p) { return uses_variable(p, t); }),
                         gb.end());
  return gb;
}

std::vector<LaurentVec> to_vecs(const std::vector<Poly>& ps, std::size_t nvars, std::size_t k) {
  std::vector<LaurentVec> out;
  out.reserve(ps.size());
  for (const auto& p : ps) out.push_back(to_vec(p, nvars, k));
  return out;
}

LaurentMatrix quotient_matrix(const std::vector<LaurentVec>& gens, std::size_t nvars, std::size_t k,
                              const LaurentPoly& f) {
  if (f.is_zero()) throw InputError("module quotient by the zero polynomial");
  if (f.nvars() != nvars) throw InputError("module quotient: polynomial over a different ring");
  std::vector<LaurentVec> cols;
  for (std::size_t j = 0; j < k; ++j) {
    LaurentVec c(nvars, k);
    c[j] = f;
    cols.push_back(std::move(c));
  }
  for (const auto& g : gens) {
    check_vec(g, nvars, k);
    cols.push_back(g);
  }
  return LaurentMatrix::from_cols(nvars, k, cols);
}

// Generators (m.cols entries each) of the syzygies of the columns of m,
// saturated (Laurent) or not (polynomial ring).
std::vector<LaurentVec> syzygy_gens(const LaurentMatrix& m, bool laurent) {
  const std::size_t k = m.rows, c = m.cols, n = m.nvars;
  std::vector<LaurentVec> tagged;
  for (std::size_t j = 0; j < c; ++j) {
    LaurentVec v(n, k + c);
    for (std::size_t i = 0; i < k; ++i) v[i] = m(i, j);
    v[k + j] = LaurentPoly::constant(n, 1);
    tagged.push_back(std::move(v));
  }
  std::vector<LaurentVec> gb =
      laurent ? saturated_gb(tagged, n, k + c) : polynomial_gb(tagged, n, k + c);
  std::vector<LaurentVec> out;
  for (const auto& g : gb) {
    bool pure = true;
    for (std::size_t i = 0; i < k && pure; ++i) pure = g[i].is_zero();
    if (!pure) continue;
    LaurentVec r(n, c);
    for (std::size_t j = 0; j < c; ++j) r[j] = g[k + j];
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

struct Submodule::Cache {
  std::once_flag once;
  Order order;
  std::vector<Poly> engine_gb;
  std::vector<LaurentVec> gb;
};

Submodule::Submodule(std::size_t nvars, std::size_t k, std::vector<LaurentVec> generators)
    : nvars_(nvars), k_(k), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  if (nvars > kMaxVars) throw InputError("too many variables");
  for (const auto& g : generators_) check_vec(g, nvars, k);
}

Submodule Submodule::full(std::size_t nvars, std::size_t k) {
  std::vector<LaurentVec> gens;
  for (std::size_t i = 0; i < k; ++i) gens.push_back(LaurentVec::unit(nvars, k, i));
  return Submodule(nvars, k, std::move(gens));
}

const Submodule::Cache& Submodule::cache() const {
  std::call_once(cache_->once, [this] {
    cache_->order = make_order(TermOrder{}, nvars_, k_);
    cache_->engine_gb = saturated_engine_gb(generators_, nvars_, k_, TermOrder{});
    cache_->gb = to_vecs(cache_->engine_gb, nvars_, k_);
  });
  return *cache_;
}

const std::vector<LaurentVec>& Submodule::gb() const { return cache().gb; }

LaurentVec Submodule::normal_form(const LaurentVec& v) const {
  check_vec(v, nvars_, k_);
  if (v.is_zero()) return v;
  const Cache& c = cache();
  const Poly r = detail::normal_form(to_poly(normalize_to_poly(v).first, c.order), c.engine_gb, c.order);
  return to_vec(r, nvars_, k_);
}

bool Submodule::contains(const LaurentVec& v) const { return normal_form(v).is_zero(); }

bool Submodule::is_full() const {
  const auto& g = gb();
  if (g.size() != k_) return false;
  for (std::size_t i = 0; i < k_; ++i)
    if (!contains(LaurentVec::unit(nvars_, k_, i))) return false;
  return true;
}

bool operator==(const Submodule& a, const Submodule& b) { return submodule_equal(a, b); }

std::vector<LaurentVec> groebner_basis(const Submodule& p, const TermOrder& ord) {
  if (ord.elimination_block.empty() && ord.kind == TermOrder::Kind::grevlex &&
      ord.extension == TermOrder::Extension::position_over_term && ord.position_priority.empty())
    return p.gb();
  return saturated_gb(p.generators(), p.nvars(), p.k(), ord);
}

bool member(const LaurentVec& v, const Submodule& p) { return p.contains(v); }

bool submodule_equal(const Submodule& p, const Submodule& q) {
  if (p.nvars() != q.nvars() || p.k() != q.k()) throw InputError("comparing submodules of different modules");
  return p.gb() == q.gb();
}

std::vector<LaurentVec> saturated_gb(const std::vector<LaurentVec>& gens, std::size_t nvars, std::size_t k,
                                     const TermOrder& ord) {
  return to_vecs(saturated_engine_gb(gens, nvars, k, ord), nvars, k);
}

Submodule syzygies(const LaurentMatrix& m) {
  if (m.rows == 0) return Submodule::full(m.nvars, m.cols);
  return Submodule(m.nvars, m.cols, syzygy_gens(m, true));
}

Submodule kernel(const LaurentMatrix& m) { return syzygies(m); }

Submodule module_quotient(const Submodule& p, const LaurentPoly& f) {
  const LaurentMatrix m = quotient_matrix(p.gb(), p.nvars(), p.k(), f);
  std::vector<LaurentVec> out;
  for (const auto& r : syzygy_gens(m, true)) {
    LaurentVec v(p.nvars(), p.k());
    for (std::size_t j = 0; j < p.k(); ++j) v[j] = r[j];
    if (!v.is_zero()) out.push_back(std::move(v));
  }
  return Submodule(p.nvars(), p.k(), std::move(out));
}

Submodule eliminate(const Submodule& p, const std::vector<std::size_t>& drop) {
  const std::size_t n = p.nvars();
  std::vector<bool> dropped(n, false);
  for (std::size_t v : drop) {
    if (v >= n) throw InputError("eliminate: variable index out of range");
    dropped[v] = true;
  }
  if (drop.empty()) return p;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i)
    if (!dropped[i]) keep.push_back(i);

  TermOrder ord;
  for (std::size_t i = 0; i < n; ++i)
    if (dropped[i]) ord.elimination_block.push_back(i);
  std::vector<LaurentVec> out;
  for (const auto& g : saturated_engine_gb(p.gb(), n, p.k(), ord)) {
    bool free = true;
    for (std::size_t i = 0; i < n && free; ++i) free = !dropped[i] || !uses_variable(g, i);
    if (!free) continue;
    const LaurentVec full = to_vec(g, n, p.k());
    LaurentVec v(keep.size(), p.k());
    for (std::size_t j = 0; j < p.k(); ++j)
      for (const auto& [e, c] : full[j].terms()) {
        ExpVec r{};
        for (std::size_t i = 0; i < keep.size(); ++i) r[i] = e[keep[i]];
        v[j].add_term(r, c);
      }
    out.push_back(std::move(v));
  }
  return Submodule(keep.size(), p.k(), std::move(out));
}

std::vector<LaurentVec> polynomial_gb(const std::vector<LaurentVec>& gens, std::size_t nvars, std::size_t k,
                                      const TermOrder& ord) {
  const Order o = make_order(ord, nvars, k);
  std::vector<Poly> polys;
  for (const auto& g : gens) {
    check_vec(g, nvars, k);
    if (!g.is_zero()) polys.push_back(to_poly(g, o));
  }
  return to_vecs(detail::groebner(std::move(polys), o), nvars, k);
}

std::vector<LaurentVec> polynomial_quotient(const std::vector<LaurentVec>& gens, std::size_t nvars, std::size_t k,
                                            const LaurentPoly& f) {
  const LaurentMatrix m = quotient_matrix(gens, nvars, k, f);
  std::vector<LaurentVec> out;
  for (const auto& r : syzygy_gens(m, false)) {
    LaurentVec v(nvars, k);
    for (std::size_t j = 0; j < k; ++j) v[j] = r[j];
    if (!v.is_zero()) out.push_back(std::move(v));
  }
  return out;
}

std::vector<LaurentVec> iterated_saturation(const std::vector<LaurentVec>& gens, std::size_t nvars, std::size_t k) {
  LaurentPoly f = LaurentPoly::constant(nvars, 1);
  for (std::size_t i = 0; i < nvars; ++i) f = f * LaurentPoly::variable(nvars, i);
  std::vector<LaurentVec> current = polynomial_gb(gens, nvars, k);
  for (;;) {
    std::vector<LaurentVec> next = polynomial_gb(polynomial_quotient(current, nvars, k, f), nvars, k);
    if (next == current) return current;
    current = std::move(next);
  }
}

}  // namespace latdef
