#include "latdef/detail/linalg.hpp"

#include <algorithm>

namespace latdef::detail {

namespace {

void make_primitive(ZRow& r) {
  Integer g = 0;
  for (const auto& x : r) {
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

ZRow to_integers(const QRow& row) {
  Integer l = 1;
  for (const auto& q : row)
    if (q != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  ZRow z(row.size());
  for (std::size_t i = 0; i < row.size(); ++i)
    if (row[i] != 0) z[i] = row[i].get_num() * (l / row[i].get_den());
  return z;
}

std::size_t first_nonzero(const ZRow& r) {
  std::size_t i = 0;
  while (i < r.size() && r[i] == 0) ++i;
  return i;
}

}  // namespace

ZRow Echelon::reduce(const QRow& row) const {
  if (row.size() != cols_) throw InputError("echelon: row length mismatch");
  ZRow z = to_integers(row);
  for (const auto& [pc, pr] : rows_) {
    if (z[pc] == 0) continue;
    const Integer a = pr[pc], b = z[pc];
    for (std::size_t j = 0; j < cols_; ++j) z[j] = a * z[j] - b * pr[j];
    make_primitive(z);
  }
  return z;
}

bool Echelon::add(const QRow& row) {
  ZRow z = reduce(row);
  const std::size_t pc = first_nonzero(z);
  if (pc == cols_) return false;
  make_primitive(z);
  if (z[pc] < 0)
    for (auto& x : z) x = -x;
  const auto at = std::lower_bound(rows_.begin(), rows_.end(), pc,
                                   [](const auto& e, std::size_t c) { return e.first < c; });
  rows_.insert(at, {pc, std::move(z)});
  return true;
}

bool Echelon::in_span(const QRow& row) const { return first_nonzero(reduce(row)) == cols_; }

std::vector<QRow> Echelon::nullspace() const {
  std::vector<bool> pivot(cols_, false);
  for (const auto& [pc, pr] : rows_) pivot[pc] = true;
  std::vector<QRow> out;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (pivot[f]) continue;
    QRow x(cols_);
    x[f] = 1;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
      const auto& [pc, pr] = *it;
      Rational acc = 0;
      for (std::size_t j = pc + 1; j < cols_; ++j)
        if (pr[j] != 0 && x[j] != 0) acc += Rational(pr[j]) * x[j];
      x[pc] = -acc / Rational(pr[pc]);
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::size_t rank(const std::vector<QRow>& rows, std::size_t cols) {
  Echelon e(cols);
  for (const auto& r : rows) e.add(r);
  return e.rank();
}

std::vector<QRow> nullspace(const std::vector<QRow>& rows, std::size_t cols) {
  Echelon e(cols);
  for (const auto& r : rows) e.add(r);
  return e.nullspace();
}

}  // namespace latdef::detail
