#pragma once

// Precedence-aware rendering shared by every code printer:
// "+" < "*" < "@" < prefix "fix" < atoms, binary operators right-associative.

#include <string>

namespace dgp::print {

enum Prec : int { kSum = 1, kProd = 2, kComp = 3, kPrefix = 4, kAtom = 5 };

inline std::string wrap(const std::string& text, int prec, int required) {
  return prec < required ? "(" + text + ")" : text;
}

/// Renders `lhs op rhs` for a right-associative operator at precedence `prec`.
/// Each operand is given as (text, its own precedence).
inline std::string binary(const std::string& op, int prec, const std::string& lhs, int lhs_prec,
                          const std::string& rhs, int rhs_prec) {
  return wrap(lhs, lhs_prec, prec + 1) + " " + op + " " + wrap(rhs, rhs_prec, prec);
}

}  // namespace dgp::print
