#include "measmean/set_expr.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "measmean/errors.hpp"

namespace measmean {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SetExpr parse_set_top() {
    SetExpr s = parse_set();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return s;
  }

  double parse_number_top() {
    const double v = parse_sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, pos_);
  }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    throw ParseError(what, at);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string_view identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (is_alpha(text_[pos_]) || is_digit(text_[pos_]))) {
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  // The union keyword "U" as a whole word.
  bool at_union() {
    if (peek() != 'U') return false;
    const std::size_t next = pos_ + 1;
    return next >= text_.size() ||
           !(is_alpha(text_[next]) || is_digit(text_[next]));
  }

  SetExpr parse_set() {
    SetExpr first = parse_term();
    if (!at_union()) return first;
    SetExpr u;
    u.kind = SetExpr::Kind::union_of;
    u.children.push_back(std::move(first));
    while (at_union()) {
      ++pos_;
      u.children.push_back(parse_term());
    }
    return u;
  }

  SetExpr parse_term() {
    const char c = peek();
    if (c == '[') {
      const std::size_t start = pos_;
      ++pos_;
      SetExpr iv;
      iv.lo = parse_sum();
      expect(',');
      iv.hi = parse_sum();
      expect(']');
      if (!(iv.lo < iv.hi)) {
        throw InvalidInterval("interval at offset " + std::to_string(start) +
                              " has lo >= hi");
      }
      return iv;
    }
    if (c == '(') {
      ++pos_;
      SetExpr inner = parse_set();
      expect(')');
      expect('+');
      SetExpr s;
      s.kind = SetExpr::Kind::shifted;
      s.shift = parse_sum();
      s.children.push_back(std::move(inner));
      return s;
    }
    if (c == '\0') fail("unexpected end of input, expected '[' or '('");
    fail("expected '[' or '('");
  }

  double checked(double v, std::size_t at) const {
    if (!std::isfinite(v)) fail_at("numeric value is not finite", at);
    return v;
  }

  double parse_sum() {
    const std::size_t start = (skip_space(), pos_);
    double v = parse_product();
    for (;;) {
      const char c = peek();
      if (c == '+') {
        ++pos_;
        v += parse_product();
      } else if (c == '-') {
        ++pos_;
        v -= parse_product();
      } else {
        return checked(v, start);
      }
    }
  }

  double parse_product() {
    const std::size_t start = (skip_space(), pos_);
    double v = parse_unary();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        v *= parse_unary();
      } else if (c == '/') {
        ++pos_;
        v /= parse_unary();
      } else {
        return checked(v, start);
      }
    }
  }

  double parse_unary() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return -parse_unary();
    }
    if (c == '+') {
      ++pos_;
      return parse_unary();
    }
    return parse_power();
  }

  // Right associative; the exponent may carry its own sign.
  double parse_power() {
    const std::size_t start = (skip_space(), pos_);
    const double base = parse_primary();
    if (peek() == '^') {
      ++pos_;
      return checked(std::pow(base, parse_unary()), start);
    }
    return base;
  }

  double parse_primary() {
    const char c = peek();
    const std::size_t start = pos_;
    if (c == '(') {
      ++pos_;
      const double v = parse_sum();
      expect(')');
      return v;
    }
    if (is_digit(c) || c == '.') return parse_literal();
    if (is_alpha(c)) {
      const std::string_view id = identifier();
      if (id == "e") return std::numbers::e;
      if (id == "pi") return std::numbers::pi;
      if (id == "sqrt" || id == "exp" || id == "log") {
        expect('(');
        const double arg = parse_sum();
        expect(')');
        double v = 0.0;
        if (id == "sqrt") {
          v = std::sqrt(arg);
        } else if (id == "exp") {
          v = std::exp(arg);
        } else {
          v = std::log(arg);
        }
        return checked(v, start);
      }
      fail_at("unknown identifier '" + std::string(id) + "'", start);
    }
    if (c == '\0') fail("unexpected end of input, expected a number");
    fail("expected a number");
  }

  double parse_literal() {
    const std::size_t start = pos_;
    std::size_t end = pos_;
    while (end < text_.size() && is_digit(text_[end])) ++end;
    if (end < text_.size() && text_[end] == '.') {
      ++end;
      while (end < text_.size() && is_digit(text_[end])) ++end;
    }
    // An exponent only when digits follow, so "2e" stays 2 then e.
    if (end < text_.size() && (text_[end] == 'e' || text_[end] == 'E')) {
      std::size_t k = end + 1;
      if (k < text_.size() && (text_[k] == '+' || text_[k] == '-')) ++k;
      if (k < text_.size() && is_digit(text_[k])) {
        while (k < text_.size() && is_digit(text_[k])) ++k;
        end = k;
      }
    }
    double v = 0.0;
    const auto [ptr, ec] =
        std::from_chars(text_.data() + start, text_.data() + end, v);
    if (ec != std::errc() || ptr != text_.data() + end) {
      fail_at("malformed number", start);
    }
    pos_ = end;
    return checked(v, start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void append_number(std::string& out, double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, ptr);
}

void print(const SetExpr& e, std::string& out) {
  switch (e.kind) {
    case SetExpr::Kind::interval:
      out += '[';
      append_number(out, e.lo);
      out += ", ";
      append_number(out, e.hi);
      out += ']';
      break;
    case SetExpr::Kind::union_of:
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i > 0) out += " U ";
        print(e.children[i], out);
      }
      break;
    case SetExpr::Kind::shifted:
      out += '(';
      print(e.children.front(), out);
      out += ") + ";
      append_number(out, e.shift);
      break;
  }
}

}  // namespace

SetExpr parse_set(std::string_view text) {
  if (text.empty()) throw ParseError("empty set expression", 0);
  return Parser(text).parse_set_top();
}

double parse_number(std::string_view text) {
  if (text.empty()) throw ParseError("empty numeric expression", 0);
  return Parser(text).parse_number_top();
}

IntervalSet evaluate(const SetExpr& expr) {
  switch (expr.kind) {
    case SetExpr::Kind::interval:
      return IntervalSet::single(expr.lo, expr.hi);
    case SetExpr::Kind::shifted:
      return translate(evaluate(expr.children.front()), expr.shift);
    case SetExpr::Kind::union_of:
      break;
  }
  IntervalSet acc;
  for (const auto& c : expr.children) acc = set_union(acc, evaluate(c));
  return acc;
}

std::string to_string(const SetExpr& expr) {
  std::string out;
  print(expr, out);
  return out;
}

IntervalSet parse_interval_set(std::string_view text) {
  return evaluate(parse_set(text));
}

}  // namespace measmean
