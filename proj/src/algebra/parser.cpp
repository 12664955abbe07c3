#include "hyperq/algebra/parser.hpp"

#include <cctype>

namespace hyperq::algebra {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  PhaseExpr parse() {
    PhaseExpr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(ParseError::Kind::syntax, pos_, what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  PhaseExpr expr() {
    PhaseExpr lhs = term();
    while (true) {
      if (accept('+')) {
        lhs += term();
      } else if (accept('-')) {
        lhs -= term();
      } else {
        return lhs;
      }
    }
  }

  PhaseExpr term() {
    PhaseExpr lhs = unary();
    while (true) {
      if (accept('*')) {
        lhs *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        PhaseExpr rhs = unary();
        if (rhs.is_zero()) {
          throw ParseError(ParseError::Kind::division_by_zero, at,
                           "division by an expression that is identically zero");
        }
        lhs /= rhs;
      } else {
        return lhs;
      }
    }
  }

  PhaseExpr unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  PhaseExpr power() {
    PhaseExpr base = primary();
    if (!accept('^')) return base;
    const bool negative = accept('-');
    skip_space();
    const std::size_t at = pos_;
    const std::string digits = integer_literal();
    if (digits.empty()) fail("expected integer exponent");
    if (digits.size() > 4) fail("exponent too large");
    const int k = std::stoi(digits);
    if (negative && base.is_zero()) {
      throw ParseError(ParseError::Kind::division_by_zero, at,
                       "negative power of an expression that is identically zero");
    }
    return base.pow(negative ? -k : k);
  }

  std::string integer_literal() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  PhaseExpr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      PhaseExpr inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return PhaseExpr(Rational(mpz_class(integer_literal())));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view ident = text_.substr(start, pos_ - start);
      if (auto v = var_from_name(ident)) return PhaseExpr::variable(*v);
      throw ParseError(ParseError::Kind::unknown_identifier, start,
                       "unknown identifier '" + std::string(ident) + "'");
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PhaseExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

}  // namespace hyperq::algebra
