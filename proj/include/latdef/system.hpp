#pragma once

// Text description of a system:
//
//   # comment
//   n=2 k=1
//   P=[[1 + s1*s2 + s2^2]]
//   lattice S=[[1,1],[2,0]]
//   window W=0..5,0..5
//
// Statements are separated by whitespace. P holds the rows of the matrix in
// the variables s1..sn; Q instead holds a module in the contracted variables
// t1..tn. Lattices are integer generator rows; windows are one inclusive
// range per axis.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "latdef/groebner.hpp"
#include "latdef/intlat.hpp"
#include "latdef/laurent.hpp"

namespace latdef {

struct WindowSpec {
  std::vector<long> lo, hi;
  friend bool operator==(const WindowSpec&, const WindowSpec&) = default;
};

struct SystemFile {
  std::size_t n = 0;
  std::size_t k = 0;
  bool has_matrix = false;
  /// Matrix given as Q (t-variables) rather than P.
  bool contracted = false;
  std::vector<LaurentVec> rows;
  std::map<std::string, IntMatrix> lattices;
  std::map<std::string, WindowSpec> windows;

  std::string_view prefix() const { return contracted ? "t" : "s"; }
  Submodule module() const { return Submodule(n, k, rows); }

  friend bool operator==(const SystemFile&, const SystemFile&) = default;
};

class SystemParseError : public InputError {
 public:
  SystemParseError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

SystemFile parse_system(std::string_view text);
/// Canonical text; parse_system(print_system(s)) == s.
std::string print_system(const SystemFile& s);

/// "[[2,2],[1,-3]]".
IntMatrix parse_int_rows(std::string_view text);
/// "0..5,0..5".
WindowSpec parse_window_spec(std::string_view text);
/// "[poly, poly]" in the given variables.
LaurentVec parse_vector(std::string_view text, std::size_t nvars, std::string_view prefix = "s");

}  // namespace latdef
