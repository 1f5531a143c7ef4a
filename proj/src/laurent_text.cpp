#include <algorithm>
#include <cctype>
#include <sstream>

#include "latdef/laurent.hpp"

namespace latdef {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t nvars, std::string_view prefix)
      : text_(text), nvars_(nvars), prefix_(prefix) {}

  LaurentPoly parse() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty polynomial");
    LaurentPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  LaurentPoly expr() {
    LaurentPoly acc(nvars_);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    LaurentPoly t = term();
    acc += negate ? -t : t;
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  LaurentPoly term() {
    LaurentPoly acc = factor();
    for (;;) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        skip_ws();
        const std::size_t at = pos_;
        LaurentPoly d = factor();
        if (d.size() != 1) {
          pos_ = at;
          fail("division only by a nonzero monomial");
        }
        acc = acc * invert_monomial(d);
      } else {
        return acc;
      }
    }
  }

  LaurentPoly factor() {
    skip_ws();
    const std::size_t at = pos_;
    LaurentPoly base = primary();
    if (!accept('^')) return base;
    skip_ws();
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected integer exponent");
    const long e = read_small_int();
    if (neg) {
      if (base.size() != 1) {
        pos_ = at;
        fail("negative power of a non-monomial");
      }
      base = invert_monomial(base);
    }
    LaurentPoly r = LaurentPoly::constant(nvars_, 1);
    for (long i = 0; i < e; ++i) r = r * base;
    return r;
  }

  LaurentPoly primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      LaurentPoly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return LaurentPoly::constant(nvars_, Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (text_.substr(pos_, prefix_.size()) == prefix_) {
      const std::size_t start = pos_;
      pos_ += prefix_.size();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        pos_ = start;
        fail("expected variable index after '" + std::string(prefix_) + "'");
      }
      const long idx = read_small_int();
      if (idx < 1 || static_cast<std::size_t>(idx) > nvars_) {
        pos_ = start;
        fail("variable " + std::string(prefix_) + std::to_string(idx) + " out of range (n=" +
             std::to_string(nvars_) + ")");
      }
      return LaurentPoly::variable(nvars_, static_cast<std::size_t>(idx - 1));
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  long read_small_int() {
    const std::size_t start = pos_;
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000) {
        pos_ = start;
        fail("integer too large");
      }
      ++pos_;
    }
    return v;
  }

  LaurentPoly invert_monomial(const LaurentPoly& m) const {
    const auto& [e, c] = *m.terms().begin();
    if (c == 0) throw ParseError("division by zero", pos_);
    ExpVec neg{};
    for (std::size_t i = 0; i < kMaxVars; ++i) neg[i] = -e[i];
    return LaurentPoly::monomial(nvars_, neg, Rational(1) / c);
  }

  std::string_view text_;
  std::size_t nvars_;
  std::string_view prefix_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text, std::size_t nvars, std::string_view prefix) {
  return Parser(text, nvars, prefix).parse();
}

std::string to_string(const LaurentPoly& p, std::string_view prefix) {
  if (p.is_zero()) return "0";
  const std::size_t n = p.nvars();
  ExpVec lo = p.terms().begin()->first;
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < n; ++i) lo[i] = std::min(lo[i], e[i]);

  std::vector<std::pair<ExpVec, Rational>> terms(p.terms().begin(), p.terms().end());
  auto degree = [&](const ExpVec& e) {
    long d = 0;
    for (std::size_t i = 0; i < n; ++i) d += e[i] - lo[i];
    return d;
  };
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    const long da = degree(a.first), db = degree(b.first);
    if (da != db) return da < db;
    return a.first > b.first;
  });

  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;

    std::vector<std::string> factors;
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] == 0) continue;
      std::string f = std::string(prefix) + std::to_string(i + 1);
      if (e[i] != 1) f += "^" + std::to_string(e[i]);
      factors.push_back(std::move(f));
    }
    if (factors.empty()) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    for (std::size_t i = 0; i < factors.size(); ++i) out << (i ? "*" : "") << factors[i];
  }
  return out.str();
}

std::vector<std::string> to_strings(const LaurentVec& v, std::string_view prefix) {
  std::vector<std::string> out;
  out.reserve(v.k());
  for (const auto& p : v.entries()) out.push_back(to_string(p, prefix));
  return out;
}

}  // namespace latdef
