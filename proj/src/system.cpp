#include "latdef/system.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

namespace latdef {

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view s) : s_(s) {}

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < s_.size(); ++i) {
      if (s_[i] == '\n') ++line, col = 1;
      else ++col;
    }
    throw SystemParseError(msg, line, col);
  }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }

  void skip() {
    while (pos_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      else if (s_[pos_] == '#')
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      else break;
    }
  }
  bool done() {
    skip();
    return pos_ >= s_.size();
  }
  std::size_t pos() const { return pos_; }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept(std::string_view word) {
    skip();
    if (s_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  std::string ident() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (pos_ == start || std::isdigit(static_cast<unsigned char>(s_[start]))) fail("expected a name", start);
    return std::string(s_.substr(start, pos_ - start));
  }

  long integer() {
    skip();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string_view digits = s_.substr(start, pos_ - start);
    if (!digits.empty() && digits[0] == '+') digits.remove_prefix(1);
    long v = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (digits.empty() || ec != std::errc() || end != digits.data() + digits.size())
      fail("expected an integer", start);
    return v;
  }

  // Text up to the next ',' or ']' outside parentheses.
  std::pair<std::string, std::size_t> entry() {
    skip();
    const std::size_t start = pos_;
    int depth = 0;
    while (pos_ < s_.size()) {
      const char c = s_[pos_];
      if (c == '(') ++depth;
      else if (c == ')') --depth;
      else if (depth == 0 && (c == ',' || c == ']')) break;
      else if (c == '[' || c == '\n' || c == '#') break;
      ++pos_;
    }
    std::size_t end = pos_;
    while (end > start && std::isspace(static_cast<unsigned char>(s_[end - 1]))) --end;
    if (end == start) fail("expected a polynomial", start);
    return {std::string(s_.substr(start, end - start)), start};
  }

  std::vector<std::vector<long>> int_rows() {
    std::vector<std::vector<long>> rows;
    expect('[');
    if (accept(']')) return rows;
    do {
      std::vector<long> row;
      expect('[');
      do row.push_back(integer());
      while (accept(','));
      expect(']');
      rows.push_back(std::move(row));
    } while (accept(','));
    expect(']');
    return rows;
  }

  WindowSpec window() {
    WindowSpec w;
    do {
      const std::size_t at = pos();
      const long lo = integer();
      if (!accept(".."))
        fail("expected '..'");
      const long hi = integer();
      if (lo > hi) fail("empty window range", at);
      w.lo.push_back(lo);
      w.hi.push_back(hi);
    } while (accept(','));
    return w;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

IntMatrix to_matrix(const std::vector<std::vector<long>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  return m;
}

std::string print_rows(const IntMatrix& m) {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << (r ? ",[" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? "," : "") << m(r, c).get_str();
    out << ']';
  }
  out << ']';
  return out.str();
}

struct RawEntry {
  std::string text;
  std::size_t offset;
};

}  // namespace

SystemParseError::SystemParseError(const std::string& what, std::size_t line, std::size_t column)
    : InputError(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
      line_(line),
      column_(column) {}

SystemFile parse_system(std::string_view text) {
  Scanner sc(text);
  SystemFile sys;
  std::optional<std::size_t> n, k;
  std::vector<std::vector<RawEntry>> raw;
  std::size_t matrix_at = 0;
  std::map<std::string, std::pair<std::vector<std::vector<long>>, std::size_t>> raw_lattices;

  while (!sc.done()) {
    const std::size_t at = sc.pos();
    const std::string key = sc.ident();
    if (key == "n" || key == "k") {
      sc.expect('=');
      const std::size_t vat = sc.pos();
      const long v = sc.integer();
      if (v < 0) sc.fail("negative count", vat);
      if ((key == "n" ? n : k).has_value()) sc.fail("duplicate '" + key + "'", at);
      (key == "n" ? n : k) = static_cast<std::size_t>(v);
    } else if (key == "P" || key == "Q") {
      if (sys.has_matrix) sc.fail("duplicate matrix", at);
      sys.has_matrix = true;
      sys.contracted = key == "Q";
      matrix_at = at;
      sc.expect('=');
      sc.expect('[');
      if (!sc.accept(']')) {
        do {
          std::vector<RawEntry> row;
          sc.expect('[');
          do {
            auto [t, off] = sc.entry();
            row.push_back({std::move(t), off});
          } while (sc.accept(','));
          sc.expect(']');
          raw.push_back(std::move(row));
        } while (sc.accept(','));
        sc.expect(']');
      }
    } else if (key == "lattice") {
      const std::string name = sc.ident();
      sc.expect('=');
      const std::size_t lat = sc.pos();
      auto rows = sc.int_rows();
      for (const auto& r : rows)
        if (r.size() != rows.front().size()) sc.fail("lattice rows differ in length", lat);
      if (!raw_lattices.emplace(name, std::make_pair(std::move(rows), lat)).second)
        sc.fail("duplicate lattice '" + name + "'", at);
    } else if (key == "window") {
      const std::string name = sc.ident();
      sc.expect('=');
      if (!sys.windows.emplace(name, sc.window()).second) sc.fail("duplicate window '" + name + "'", at);
    } else {
      sc.fail("unknown statement '" + key + "'", at);
    }
  }

  if (sys.has_matrix && (!n || !k)) sc.fail("the matrix needs both n and k", matrix_at);
  sys.n = n.value_or(0);
  sys.k = k.value_or(0);
  if (sys.n > kMaxVars) sc.fail("at most " + std::to_string(kMaxVars) + " variables are supported", 0);

  for (const auto& row : raw) {
    if (row.size() != sys.k)
      sc.fail("row has " + std::to_string(row.size()) + " entries, expected k = " + std::to_string(sys.k),
              row.front().offset);
    LaurentVec v(sys.n, sys.k);
    for (std::size_t j = 0; j < row.size(); ++j) {
      try {
        v[j] = parse_laurent(row[j].text, sys.n, sys.prefix());
      } catch (const ParseError& e) {
        sc.fail(e.what(), row[j].offset + e.offset());
      }
    }
    sys.rows.push_back(std::move(v));
  }

  for (auto& [name, entry] : raw_lattices) {
    const auto& [rows, lat] = entry;
    const std::size_t cols = rows.empty() ? sys.n : rows.front().size();
    if (n && cols != sys.n) sc.fail("lattice '" + name + "' does not live in Z^n", lat);
    sys.lattices.emplace(name, to_matrix(rows, cols));
  }
  for (const auto& [name, w] : sys.windows)
    if (n && w.lo.size() != sys.n) sc.fail("window '" + name + "' needs one range per variable", 0);
  return sys;
}

std::string print_system(const SystemFile& s) {
  std::ostringstream out;
  out << "n=" << s.n << " k=" << s.k << '\n';
  if (s.has_matrix) {
    out << (s.contracted ? "Q=[" : "P=[");
    for (std::size_t r = 0; r < s.rows.size(); ++r) {
      out << (r ? ", [" : "[");
      const auto entries = to_strings(s.rows[r], s.prefix());
      for (std::size_t j = 0; j < entries.size(); ++j) out << (j ? ", " : "") << entries[j];
      out << ']';
    }
    out << "]\n";
  }
  for (const auto& [name, m] : s.lattices) out << "lattice " << name << '=' << print_rows(m) << '\n';
  for (const auto& [name, w] : s.windows) {
    out << "window " << name << '=';
    for (std::size_t i = 0; i < w.lo.size(); ++i) out << (i ? "," : "") << w.lo[i] << ".." << w.hi[i];
    out << '\n';
  }
  return out.str();
}

IntMatrix parse_int_rows(std::string_view text) {
  Scanner sc(text);
  const auto rows = sc.int_rows();
  if (!sc.done()) sc.fail("trailing text");
  if (rows.empty()) sc.fail("a lattice needs at least one generator row", 0);
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) sc.fail("rows differ in length", 0);
  return to_matrix(rows, rows.front().size());
}

WindowSpec parse_window_spec(std::string_view text) {
  Scanner sc(text);
  WindowSpec w = sc.window();
  if (!sc.done()) sc.fail("trailing text");
  return w;
}

LaurentVec parse_vector(std::string_view text, std::size_t nvars, std::string_view prefix) {
  Scanner sc(text);
  std::vector<LaurentPoly> entries;
  sc.expect('[');
  do {
    const auto [t, off] = sc.entry();
    try {
      entries.push_back(parse_laurent(t, nvars, prefix));
    } catch (const ParseError& e) {
      sc.fail(e.what(), off + e.offset());
    }
  } while (sc.accept(','));
  sc.expect(']');
  if (!sc.done()) sc.fail("trailing text");
  return LaurentVec(nvars, std::move(entries));
}

}  // namespace latdef
