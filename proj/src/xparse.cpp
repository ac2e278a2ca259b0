#include <cctype>
#include <string>
#include <vector>

#include "qumbral/errors.hpp"
#include "qumbral/xpoly.hpp"

// Recursive-descent parser for
//
//   expr     := ['-'] term (('+' | '-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' nat)?
//   base     := 'x' | 'q' | rational | '(' expr ')'
//   rational := nat ('/' nat)?
//
// Negative constants are written with the expression-level unary minus, which
// also applies inside parentheses ("(-1 + q)").

namespace qumbral {

namespace {

struct Token {
  enum class Kind {
    number,
    var_x,
    var_q,
    plus,
    minus,
    star,
    slash,
    caret,
    lparen,
    rparen,
    end,
  };

  Kind kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[j]))) {
        ++j;
      }
      tokens.push_back({Token::Kind::number, text.substr(i, j - i), i});
      i = j;
      continue;
    }
    Token::Kind kind;
    switch (c) {
      case 'x': kind = Token::Kind::var_x; break;
      case 'q': kind = Token::Kind::var_q; break;
      case '+': kind = Token::Kind::plus; break;
      case '-': kind = Token::Kind::minus; break;
      case '*': kind = Token::Kind::star; break;
      case '/': kind = Token::Kind::slash; break;
      case '^': kind = Token::Kind::caret; break;
      case '(': kind = Token::Kind::lparen; break;
      case ')': kind = Token::Kind::rparen; break;
      default:
        throw ParseError(i, "one of 'x', 'q', digit, '+', '-', '*', '/', "
                            "'^', '(', ')'");
    }
    tokens.push_back({kind, std::string(1, c), i});
    ++i;
  }
  tokens.push_back({Token::Kind::end, "", text.size()});
  return tokens;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  XPoly run() {
    XPoly value = expr();
    if (peek().kind != Token::Kind::end) {
      throw ParseError(peek().pos, "'+', '-', '*', '^' or end of input");
    }
    return value;
  }

 private:
  const Token& peek() const { return tokens_[index_]; }

  const Token& advance() { return tokens_[index_++]; }

  bool accept(Token::Kind kind) {
    if (peek().kind != kind) return false;
    ++index_;
    return true;
  }

  BigInt nat(const std::string& want) {
    if (peek().kind != Token::Kind::number) {
      throw ParseError(peek().pos, want);
    }
    return BigInt(advance().text);
  }

  XPoly expr() {
    const bool negate = accept(Token::Kind::minus);
    XPoly value = term();
    if (negate) value = -value;
    while (true) {
      if (accept(Token::Kind::plus)) {
        value += term();
      } else if (accept(Token::Kind::minus)) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  XPoly term() {
    XPoly value = factor();
    while (accept(Token::Kind::star)) value = value * factor();
    return value;
  }

  XPoly factor() {
    XPoly value = base();
    if (!accept(Token::Kind::caret)) return value;
    const std::size_t at = peek().pos;
    BigInt exponent = nat("natural-number exponent");
    if (exponent > 4096) throw ParseError(at, "exponent at most 4096");
    // Square-and-multiply keeps chained small powers cheap.
    XPoly result = XPoly::constant(QRat(1));
    XPoly square = value;
    unsigned long e = exponent.get_ui();
    while (e != 0) {
      if (e & 1) result = result * square;
      e >>= 1;
      if (e != 0) square = square * square;
    }
    return result;
  }

  XPoly base() {
    switch (peek().kind) {
      case Token::Kind::var_x:
        advance();
        return XPoly::x();
      case Token::Kind::var_q:
        advance();
        return XPoly::constant(QRat(QNumPoly::variable()));
      case Token::Kind::number: {
        BigInt numerator(advance().text);
        if (!accept(Token::Kind::slash)) {
          return XPoly::constant(QRat(BigRat(numerator)));
        }
        const std::size_t at = peek().pos;
        BigInt denominator = nat("denominator");
        if (denominator == 0) throw ParseError(at, "nonzero denominator");
        BigRat value(numerator, denominator);
        value.canonicalize();
        return XPoly::constant(QRat(value));
      }
      case Token::Kind::lparen: {
        advance();
        XPoly inner = expr();
        if (!accept(Token::Kind::rparen)) {
          throw ParseError(peek().pos, "')'");
        }
        return inner;
      }
      default:
        throw ParseError(peek().pos, "'x', 'q', number or '('");
    }
  }

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

}  // namespace

XPoly parse_xpoly(const std::string& text) {
  Parser parser(lex(text));
  return parser.run();
}

}  // namespace qumbral
