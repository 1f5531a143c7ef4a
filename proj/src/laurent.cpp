#include "latdef/laurent.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "latdef/error.hpp"

namespace latdef {

ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
  ExpVec r{};
  for (std::size_t i = 0; i < kMaxVars; ++i) r[i] = a[i] + b[i];
  return r;
}

ExpVec exp_sub(const ExpVec& a, const ExpVec& b) {
  ExpVec r{};
  for (std::size_t i = 0; i < kMaxVars; ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec exp_to_intvec(const ExpVec& e, std::size_t nvars) {
  IntVec v;
  v.reserve(nvars);
  for (std::size_t i = 0; i < nvars; ++i) v.emplace_back(static_cast<long>(e[i]));
  return v;
}

ExpVec intvec_to_exp(const IntVec& v) {
  if (v.size() > kMaxVars) throw InputError("too many variables");
  ExpVec e{};
  for (std::size_t i = 0; i < v.size(); ++i) {
    const long x = to_long(v[i]);
    if (x > std::numeric_limits<std::int32_t>::max() || x < std::numeric_limits<std::int32_t>::min())
      throw InputError("exponent out of range");
    e[i] = static_cast<std::int32_t>(x);
  }
  return e;
}

ExpVec unit_exp(std::size_t var) {
  ExpVec e{};
  e[var] = 1;
  return e;
}

// --- LaurentPoly -------------------------------------------------------------

LaurentPoly::LaurentPoly(std::size_t nvars) : nvars_(nvars) {
  if (nvars > kMaxVars) throw InputError("too many variables (max " + std::to_string(kMaxVars) + ")");
}

LaurentPoly LaurentPoly::constant(std::size_t nvars, const Rational& c) {
  LaurentPoly p(nvars);
  p.add_term(ExpVec{}, c);
  return p;
}

LaurentPoly LaurentPoly::monomial(std::size_t nvars, const ExpVec& e, const Rational& c) {
  LaurentPoly p(nvars);
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t var) {
  if (var >= nvars) throw InputError("variable index out of range");
  return monomial(nvars, unit_exp(var));
}

void LaurentPoly::add_term(const ExpVec& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) {
    it->second.canonicalize();
  } else {
    it->second += c;
    it->second.canonicalize();
    if (it->second == 0) terms_.erase(it);
  }
}

Rational LaurentPoly::coefficient(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<ExpVec> LaurentPoly::support() const {
  std::vector<ExpVec> s;
  s.reserve(terms_.size());
  for (const auto& [e, c] : terms_) s.push_back(e);
  return s;
}

LaurentPoly LaurentPoly::shifted(const ExpVec& e) const {
  LaurentPoly out(nvars_);
  for (const auto& [x, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), exp_add(x, e), c);
  return out;
}

void LaurentPoly::check_same_ring(const LaurentPoly& o) const {
  if (o.nvars_ != nvars_) throw InputError("Laurent polynomials over different rings");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_same_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_same_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) {
    v *= c;
    v.canonicalize();
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_same_ring(b);
  LaurentPoly out(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(exp_add(ea, eb), ca * cb);
  return out;
}

// --- LaurentVec --------------------------------------------------------------

LaurentVec::LaurentVec(std::size_t nvars, std::size_t k) : nvars_(nvars), entries_(k, LaurentPoly(nvars)) {}

LaurentVec::LaurentVec(std::vector<LaurentPoly> entries)
    : nvars_(entries.empty() ? 0 : entries.front().nvars()), entries_(std::move(entries)) {
  for (const auto& p : entries_)
    if (p.nvars() != nvars_) throw InputError("LaurentVec entries over different rings");
}

LaurentVec::LaurentVec(std::size_t nvars, std::vector<LaurentPoly> entries)
    : nvars_(nvars), entries_(std::move(entries)) {
  for (const auto& p : entries_)
    if (p.nvars() != nvars_) throw InputError("LaurentVec entries over different rings");
}

LaurentVec LaurentVec::unit(std::size_t nvars, std::size_t k, std::size_t i) {
  LaurentVec v(nvars, k);
  v[i] = LaurentPoly::constant(nvars, 1);
  return v;
}

bool LaurentVec::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const LaurentPoly& p) { return p.is_zero(); });
}

std::vector<ExpVec> LaurentVec::support() const {
  std::set<ExpVec> pts;
  for (const auto& p : entries_)
    for (const auto& [e, c] : p.terms()) pts.insert(e);
  return {pts.begin(), pts.end()};
}

std::size_t LaurentVec::term_count() const {
  std::size_t n = 0;
  for (const auto& p : entries_) n += p.size();
  return n;
}

LaurentVec LaurentVec::shifted(const ExpVec& e) const {
  LaurentVec out(nvars_, entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i].shifted(e);
  return out;
}

LaurentVec& LaurentVec::operator+=(const LaurentVec& o) {
  if (o.k() != k()) throw InputError("LaurentVec: length mismatch");
  for (std::size_t i = 0; i < k(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

LaurentVec& LaurentVec::operator-=(const LaurentVec& o) {
  if (o.k() != k()) throw InputError("LaurentVec: length mismatch");
  for (std::size_t i = 0; i < k(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

LaurentVec operator*(const LaurentPoly& a, const LaurentVec& v) {
  LaurentVec out(v.nvars(), v.k());
  for (std::size_t i = 0; i < v.k(); ++i) out[i] = a * v[i];
  return out;
}

LaurentVec operator*(const Rational& c, const LaurentVec& v) {
  LaurentVec out = v;
  for (std::size_t i = 0; i < v.k(); ++i) out[i] *= c;
  return out;
}

// --- LaurentMatrix -----------------------------------------------------------

LaurentMatrix::LaurentMatrix(std::size_t nv, std::size_t r, std::size_t c)
    : nvars(nv), rows(r), cols(c), data(r * c, LaurentPoly(nv)) {}

LaurentMatrix LaurentMatrix::from_rows(std::size_t nv, std::size_t c, const std::vector<LaurentVec>& rs) {
  LaurentMatrix m(nv, rs.size(), c);
  for (std::size_t r = 0; r < rs.size(); ++r) {
    if (rs[r].k() != c) throw InputError("matrix row has wrong length");
    for (std::size_t j = 0; j < c; ++j) m(r, j) = rs[r][j];
  }
  return m;
}

LaurentMatrix LaurentMatrix::from_cols(std::size_t nv, std::size_t r, const std::vector<LaurentVec>& cs) {
  LaurentMatrix m(nv, r, cs.size());
  for (std::size_t c = 0; c < cs.size(); ++c) {
    if (cs[c].k() != r) throw InputError("matrix column has wrong length");
    for (std::size_t i = 0; i < r; ++i) m(i, c) = cs[c][i];
  }
  return m;
}

LaurentVec LaurentMatrix::row(std::size_t r) const {
  LaurentVec v(nvars, cols);
  for (std::size_t c = 0; c < cols; ++c) v[c] = (*this)(r, c);
  return v;
}

LaurentVec LaurentMatrix::col(std::size_t c) const {
  LaurentVec v(nvars, rows);
  for (std::size_t r = 0; r < rows; ++r) v[r] = (*this)(r, c);
  return v;
}

LaurentMatrix LaurentMatrix::transpose() const {
  LaurentMatrix t(nvars, cols, rows);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) t(c, r) = (*this)(r, c);
  return t;
}

LaurentVec LaurentMatrix::apply(const LaurentVec& v) const {
  if (v.k() != cols) throw InputError("matrix-vector product: dimension mismatch");
  LaurentVec out(nvars, rows);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out[r] += (*this)(r, c) * v[c];
  return out;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.cols != b.rows) throw InputError("matrix product: dimension mismatch");
  LaurentMatrix out(a.nvars, a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

// --- normalization, monomial maps, cosets -----------------------------------

std::pair<LaurentVec, ExpVec> normalize_to_poly(const LaurentVec& v) {
  if (v.is_zero()) throw InputError("normalize_to_poly: zero vector");
  ExpVec m{};
  bool first = true;
  for (const auto& e : v.support()) {
    for (std::size_t i = 0; i < v.nvars(); ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
    first = false;
  }
  ExpVec neg{};
  for (std::size_t i = 0; i < kMaxVars; ++i) neg[i] = -m[i];
  return {v.shifted(neg), m};
}

MonomialMap MonomialMap::lattice_map(const IntMatrix& w) {
  return MonomialMap{w, std::vector<Rational>(w.rows(), Rational(1))};
}

MonomialMap MonomialMap::identity(std::size_t n) { return lattice_map(IntMatrix::identity(n)); }

void MonomialMap::validate() const {
  if (W.rows() != W.cols()) throw InputError("monomial map: W must be square");
  if (abs(W.determinant()) != 1) throw InputError("monomial map: W is not unimodular");
  if (scalars.size() != W.rows()) throw InputError("monomial map: wrong number of scalars");
  for (const auto& s : scalars)
    if (s == 0) throw InputError("monomial map: zero homothety scalar");
}

namespace {

Rational power(const Rational& base, long e) {
  Rational b = e < 0 ? Rational(1) / base : base;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  Rational r = 1;
  while (k) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

}  // namespace

MonomialMap MonomialMap::inverse() const {
  validate();
  const IntMatrix winv = unimodular_inverse(W);
  // f(s^x) = lambda^x s^{Wx}; f^{-1}(s^y) = lambda^{-W^{-1} y} s^{W^{-1} y}.
  std::vector<Rational> inv(scalars.size(), Rational(1));
  for (std::size_t j = 0; j < scalars.size(); ++j)
    for (std::size_t i = 0; i < scalars.size(); ++i) inv[j] *= power(scalars[i], -to_long(winv(i, j)));
  return MonomialMap{winv, std::move(inv)};
}

MonomialMap compose(const MonomialMap& f, const MonomialMap& g) {
  f.validate();
  g.validate();
  if (f.W.rows() != g.W.rows()) throw InputError("compose: dimension mismatch");
  // f(g(s^x)) = mu^x lambda^{W_g x} s^{W_f W_g x}.
  std::vector<Rational> s = g.scalars;
  for (std::size_t j = 0; j < s.size(); ++j)
    for (std::size_t i = 0; i < s.size(); ++i) s[j] *= power(f.scalars[i], to_long(g.W(i, j)));
  return MonomialMap{f.W * g.W, std::move(s)};
}

LaurentPoly apply_monomial_map(const MonomialMap& f, const LaurentPoly& p) {
  f.validate();
  const std::size_t n = f.W.rows();
  if (n != p.nvars()) throw InputError("monomial map: dimension mismatch");
  LaurentPoly out(n);
  for (const auto& [x, c] : p.terms()) {
    ExpVec y{};
    Rational coeff = c;
    for (std::size_t i = 0; i < n; ++i) {
      long acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc += to_long(f.W(i, j)) * x[j];
      y[i] = static_cast<std::int32_t>(acc);
      if (x[i] != 0) coeff *= power(f.scalars[i], x[i]);
    }
    out.add_term(y, coeff);
  }
  return out;
}

LaurentVec apply_monomial_map(const MonomialMap& f, const LaurentVec& v) {
  LaurentVec out(v.nvars(), v.k());
  for (std::size_t i = 0; i < v.k(); ++i) out[i] = apply_monomial_map(f, v[i]);
  return out;
}

std::map<IntVec, LaurentVec> coset_split(const LaurentVec& v, const IntLattice& lattice) {
  if (lattice.ambient_dim() != v.nvars()) throw InputError("coset_split: dimension mismatch");
  std::map<IntVec, LaurentVec> parts;
  for (std::size_t j = 0; j < v.k(); ++j) {
    for (const auto& [e, c] : v[j].terms()) {
      IntVec rep = lattice.coset_representative(exp_to_intvec(e, v.nvars()));
      auto it = parts.try_emplace(std::move(rep), LaurentVec(v.nvars(), v.k())).first;
      it->second[j].add_term(e, c);
    }
  }
  return parts;
}

}  // namespace latdef
