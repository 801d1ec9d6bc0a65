#include "ortho/scalar_text.hpp"

#include <cctype>

namespace ortho {

namespace {

struct Parser {
  const std::string& text;
  const FieldSpecPtr& spec;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  Scalar parse_expr() {
    Scalar acc = parse_term();
    for (;;) {
      if (eat('+')) {
        acc = acc + parse_term();
      } else if (eat('-')) {
        acc = acc - parse_term();
      } else {
        return acc;
      }
    }
  }

  Scalar parse_term() {
    Scalar acc = parse_unary();
    for (;;) {
      if (eat('*')) {
        acc = acc * parse_unary();
      } else if (eat('/')) {
        Scalar rhs = parse_unary();
        if (rhs.is_zero()) throw parse_error("division by zero", pos);
        acc = acc / rhs;
      } else {
        return acc;
      }
    }
  }

  Scalar parse_unary() {
    bool neg = false;
    for (;;) {
      if (eat('-')) {
        neg = !neg;
      } else if (eat('+')) {
        // no-op
      } else {
        break;
      }
    }
    Scalar v = parse_primary();
    return neg ? -v : v;
  }

  Scalar parse_primary() {
    skip_ws();
    if (pos >= text.size()) throw parse_error("unexpected end of scalar expression", pos);
    const char c = text[pos];
    if (c == '(') {
      ++pos;
      Scalar v = parse_expr();
      if (!eat(')')) throw parse_error("expected ')'", pos);
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      Int value(text.substr(start, pos - start), 10);
      return Scalar::rational(spec, Rat(value));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos;
      while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
      const std::string word = text.substr(start, pos - start);
      if (word == "eps") {
        if (spec->kind() != FieldKind::infinitesimal)
          throw parse_error("'eps' is not an element of " + spec->describe(), start);
        return Scalar::eps(spec);
      }
      if (word == "sqrt") {
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
          throw parse_error("'sqrt' must be followed by a radical index", pos);
        std::size_t k = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          k = k * 10 + static_cast<std::size_t>(text[pos] - '0');
          ++pos;
        }
        if (spec->kind() != FieldKind::tower || k == 0 || k > spec->depth())
          throw parse_error("spec " + spec->describe() + " has no radical sqrt" + std::to_string(k),
                            start);
        return Scalar::radical(spec, k - 1);
      }
      throw parse_error("unknown symbol '" + word + "'", start);
    }
    throw parse_error(std::string("unexpected character '") + c + "'", pos);
  }
};

}  // namespace

Scalar parse_scalar(const std::string& text, const FieldSpecPtr& spec) {
  Parser p{text, spec};
  Scalar v = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) throw parse_error("trailing input after scalar expression", p.pos);
  return v;
}

}  // namespace ortho
