#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "measmean/interval_set.hpp"

namespace measmean {

/// Parsed set expression.
///
///   set  := term ("U" term)*
///   term := "[" num "," num "]" | "(" set ")" "+" num
///   num  := + - * / ^ over literals, e, pi, sqrt(), exp(), log()
///
/// Numeric sub-expressions are folded to doubles at parse time.
struct SetExpr {
  enum class Kind { interval, union_of, shifted };

  Kind kind = Kind::interval;
  double lo = 0.0;  // interval
  double hi = 0.0;  // interval
  double shift = 0.0;             // shifted
  std::vector<SetExpr> children;  // union_of: the terms; shifted: one set
};

/// Throws ParseError (with byte offset) on bad syntax or a non-finite
/// number, InvalidInterval when an interval has lo >= hi.
SetExpr parse_set(std::string_view text);

/// A standalone numeric expression, e.g. "e^2" or "-sqrt(2)/2".
double parse_number(std::string_view text);

IntervalSet evaluate(const SetExpr& expr);

/// Shortest round-tripping text; parse_set(to_string(x)) evaluates to the
/// same IntervalSet.
std::string to_string(const SetExpr& expr);

/// parse_set followed by evaluate.
IntervalSet parse_interval_set(std::string_view text);

}  // namespace measmean
