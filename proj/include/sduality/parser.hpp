#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "sduality/errors.hpp"
#include "sduality/polynomial.hpp"

namespace sduality {

// Expression grammar for polynomial input:
//
//   expr   := ['+'|'-'] term { ('+'|'-') term }
//   term   := factor { '*' factor }
//   factor := base [ '^' nat ]
//   base   := nat [ '/' nat ] | ident | '(' expr ')'
//
// '^' binds tightest, then '*', then '+'/'-'. Implicit multiplication by
// juxtaposition is not accepted. Rational literals are written a/b.

namespace detail {

enum class TokKind { number, ident, plus, minus, star, caret, slash, lparen, rparen, end };

struct Token {
  TokKind kind;
  std::string text;
  std::size_t pos;
};

inline std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({TokKind::number, src.substr(i, j - i), i});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        ++j;
      out.push_back({TokKind::ident, src.substr(i, j - i), i});
      i = j;
      continue;
    }
    TokKind k;
    switch (c) {
      case '+': k = TokKind::plus; break;
      case '-': k = TokKind::minus; break;
      case '*': k = TokKind::star; break;
      case '^': k = TokKind::caret; break;
      case '/': k = TokKind::slash; break;
      case '(': k = TokKind::lparen; break;
      case ')': k = TokKind::rparen; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({k, std::string(1, c), i});
    ++i;
  }
  out.push_back({TokKind::end, "", src.size()});
  return out;
}

class PolyParser {
 public:
  PolyParser(const std::string& src, const std::vector<std::string>& variables,
             FieldDescriptor field)
      : tokens_(tokenize(src)),
        variables_(variables),
        field_(field),
        order_(OrderKind::grevlex, variables.size()) {}

  PolyParser(const std::string& src, const std::vector<std::string>& variables,
             FieldDescriptor field, MonomialOrder order)
      : tokens_(tokenize(src)), variables_(variables), field_(field), order_(order) {}

  Polynomial parse() {
    Polynomial p = parse_expr();
    expect(TokKind::end, "end of input");
    return p;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token take() { return tokens_[pos_++]; }

  void expect(TokKind k, const std::string& what) {
    if (peek().kind != k)
      throw ParseError("expected " + what +
                           (peek().text.empty() ? "" : ", found '" + peek().text + "'"),
                       peek().pos);
    ++pos_;
  }

  Polynomial parse_expr() {
    bool negate = false;
    if (peek().kind == TokKind::plus) {
      take();
    } else if (peek().kind == TokKind::minus) {
      take();
      negate = true;
    }
    Polynomial acc = parse_term();
    if (negate) acc = -acc;
    while (peek().kind == TokKind::plus || peek().kind == TokKind::minus) {
      const bool minus = take().kind == TokKind::minus;
      Polynomial t = parse_term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  Polynomial parse_term() {
    Polynomial acc = parse_factor();
    while (peek().kind == TokKind::star) {
      take();
      acc = acc * parse_factor();
    }
    return acc;
  }

  Polynomial parse_factor() {
    Polynomial base = parse_base();
    if (peek().kind == TokKind::caret) {
      take();
      if (peek().kind != TokKind::number)
        throw ParseError("exponent must be a non-negative integer literal", peek().pos);
      const Token e = take();
      unsigned long v = 0;
      try {
        v = std::stoul(e.text);
      } catch (const std::exception&) {
        throw ParseError("exponent out of range", e.pos);
      }
      if (v > 0xffff) throw ParseError("exponent out of range", e.pos);
      return base.pow(static_cast<std::uint32_t>(v));
    }
    return base;
  }

  Polynomial parse_base() {
    const Token t = peek();
    switch (t.kind) {
      case TokKind::number: {
        take();
        std::string literal = t.text;
        if (peek().kind == TokKind::slash) {
          take();
          if (peek().kind != TokKind::number)
            throw ParseError("expected denominator after '/'", peek().pos);
          literal += "/" + take().text;
        }
        return Polynomial::constant(field_, order_, field_.element_from_string(literal));
      }
      case TokKind::ident: {
        take();
        for (std::size_t i = 0; i < variables_.size(); ++i)
          if (variables_[i] == t.text)
            return Polynomial::variable(field_, order_, i);
        throw ParseError("unknown variable '" + t.text + "'", t.pos);
      }
      case TokKind::lparen: {
        take();
        Polynomial inner = parse_expr();
        expect(TokKind::rparen, "')'");
        return inner;
      }
      case TokKind::minus:
        throw ParseError("unary minus is only allowed at the start of a (sub)expression",
                         t.pos);
      default:
        throw ParseError("expected a number, variable or '('" +
                             (t.text.empty() ? std::string() : ", found '" + t.text + "'"),
                         t.pos);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const std::vector<std::string>& variables_;
  FieldDescriptor field_;
  MonomialOrder order_;
};

}  // namespace detail

/// Parse `text` as a polynomial in the given variables. Grammar at the top of
/// this header; errors carry the offending position.
inline Polynomial parse_poly(const std::string& text,
                             const std::vector<std::string>& variables,
                             FieldDescriptor field,
                             OrderKind order_kind = OrderKind::grevlex) {
  detail::PolyParser parser(text, variables, field,
                            MonomialOrder(order_kind, variables.size()));
  return parser.parse();
}

}  // namespace sduality
