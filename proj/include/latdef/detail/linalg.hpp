#pragma once

// Exact dense linear algebra over Q by fraction-free elimination: rows are
// scaled to primitive integer vectors and combined with integer multipliers.

#include <cstddef>
#include <vector>

#include "latdef/laurent.hpp"

namespace latdef::detail {

using QRow = std::vector<Rational>;
using ZRow = std::vector<Integer>;

/// Row echelon form maintained incrementally.
class Echelon {
 public:
  explicit Echelon(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  /// Returns true if the row was independent of the rows added so far.
  bool add(const QRow& row);
  bool in_span(const QRow& row) const;
  /// Basis of {x : r . x = 0 for every added row r}.
  std::vector<QRow> nullspace() const;

 private:
  ZRow reduce(const QRow& row) const;

  std::size_t cols_;
  // Sorted by pivot column.
  std::vector<std::pair<std::size_t, ZRow>> rows_;
};

std::size_t rank(const std::vector<QRow>& rows, std::size_t cols);
std::vector<QRow> nullspace(const std::vector<QRow>& rows, std::size_t cols);

}  // namespace latdef::detail
