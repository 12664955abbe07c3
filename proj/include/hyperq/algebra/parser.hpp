#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hyperq/algebra/phase_expr.hpp"

namespace hyperq::algebra {

class ParseError : public std::runtime_error {
 public:
  enum class Kind { syntax, unknown_identifier, division_by_zero };

  ParseError(Kind kind, std::size_t position, const std::string& what)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        kind_(kind),
        position_(position) {}

  Kind kind() const { return kind_; }
  std::size_t position() const { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

// Grammar (whitespace insignificant):
//   expr    := term { ('+' | '-') term }
//   term    := unary { ('*' | '/') unary }
//   unary   := ('+' | '-') unary | power
//   power   := primary [ '^' ['-'] INTEGER ]
//   primary := INTEGER | IDENT | '(' expr ')'
// IDENT is one of lambda, x, y, z, p_lambda, p_x, p_y, p_z, a, m.
PhaseExpr parse_expr(std::string_view text);

}  // namespace hyperq::algebra
