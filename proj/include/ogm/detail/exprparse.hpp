#pragma once

// Tiny recursive-descent parser for the textual forms shared by scalars and
// Laurent polynomials: integers, named atoms (e, T, T1, T2), + - * / ^ and
// parentheses. The value algebra is supplied by the caller, so the same
// grammar produces scalars, one-variable, or two-variable polynomials.
// ASCII '-' and U+2212 are both accepted as minus.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ogm/common.hpp"

namespace ogm::detail {

struct Token {
  enum Kind { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Kind kind;
  mpz_class z;
  std::string id;
  std::size_t pos;
};

inline std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') { ++i; continue; }
    // U+2212 minus sign
    if (static_cast<unsigned char>(c) == 0xE2 && i + 2 < s.size() &&
        static_cast<unsigned char>(s[i + 1]) == 0x88 &&
        static_cast<unsigned char>(s[i + 2]) == 0x92) {
      out.push_back({Token::Minus, {}, {}, i});
      i += 3;
      continue;
    }
    std::size_t start = i;
    if (c >= '0' && c <= '9') {
      std::string digits;
      while (i < s.size() && s[i] >= '0' && s[i] <= '9') digits += s[i++];
      out.push_back({Token::Int, mpz_class(digits), {}, start});
      continue;
    }
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
      std::string id;
      while (i < s.size() &&
             ((s[i] >= 'a' && s[i] <= 'z') || (s[i] >= 'A' && s[i] <= 'Z') ||
              (s[i] >= '0' && s[i] <= '9')))
        id += s[i++];
      out.push_back({Token::Ident, {}, id, start});
      continue;
    }
    switch (c) {
      case '+': out.push_back({Token::Plus, {}, {}, i}); break;
      case '-': out.push_back({Token::Minus, {}, {}, i}); break;
      case '*': out.push_back({Token::Star, {}, {}, i}); break;
      case '/': out.push_back({Token::Slash, {}, {}, i}); break;
      case '^': out.push_back({Token::Caret, {}, {}, i}); break;
      case '(': out.push_back({Token::LParen, {}, {}, i}); break;
      case ')': out.push_back({Token::RParen, {}, {}, i}); break;
      default:
        throw parse_error(std::string("unexpected character '") + c + "'", i);
    }
    ++i;
  }
  out.push_back({Token::End, {}, {}, s.size()});
  return out;
}

// Ops must provide:
//   using Value = ...;
//   Value from_mpz(const mpz_class&);
//   Value variable(const std::string& name, std::size_t pos);
//   Value add(Value, Value); Value sub(Value, Value); Value mul(Value, Value);
//   Value div(Value, Value, std::size_t pos);
//   Value pow(Value, long exp, std::size_t pos);
//   Value neg(Value);
template <class Ops>
class ExprParser {
 public:
  ExprParser(std::string_view text, Ops& ops)
      : toks_(tokenize(text)), ops_(ops) {}

  typename Ops::Value parse() {
    auto v = expr();
    expect(Token::End, "trailing input");
    return v;
  }

 private:
  using Value = typename Ops::Value;

  const Token& cur() const { return toks_[i_]; }
  void advance() { ++i_; }
  void expect(Token::Kind k, const char* what) {
    if (cur().kind != k) throw parse_error(std::string("expected ") + what, cur().pos);
  }

  Value expr() {
    Value v = term();
    while (cur().kind == Token::Plus || cur().kind == Token::Minus) {
      bool plus = cur().kind == Token::Plus;
      advance();
      Value t = term();
      v = plus ? ops_.add(std::move(v), std::move(t))
               : ops_.sub(std::move(v), std::move(t));
    }
    return v;
  }

  Value term() {
    Value v = factor();
    while (cur().kind == Token::Star || cur().kind == Token::Slash) {
      bool star = cur().kind == Token::Star;
      std::size_t pos = cur().pos;
      advance();
      Value t = factor();
      v = star ? ops_.mul(std::move(v), std::move(t))
               : ops_.div(std::move(v), std::move(t), pos);
    }
    return v;
  }

  Value factor() {
    if (cur().kind == Token::Plus) { advance(); return factor(); }
    if (cur().kind == Token::Minus) { advance(); return ops_.neg(factor()); }
    return power();
  }

  Value power() {
    Value base = atom();
    if (cur().kind == Token::Caret) {
      std::size_t pos = cur().pos;
      advance();
      long sign = 1;
      while (cur().kind == Token::Plus || cur().kind == Token::Minus) {
        if (cur().kind == Token::Minus) sign = -sign;
        advance();
      }
      expect(Token::Int, "integer exponent");
      if (!cur().z.fits_slong_p()) throw parse_error("exponent too large", cur().pos);
      long e = sign * cur().z.get_si();
      advance();
      base = ops_.pow(std::move(base), e, pos);
    }
    return base;
  }

  Value atom() {
    switch (cur().kind) {
      case Token::Int: {
        Value v = ops_.from_mpz(cur().z);
        advance();
        return v;
      }
      case Token::Ident: {
        Value v = ops_.variable(cur().id, cur().pos);
        advance();
        return v;
      }
      case Token::LParen: {
        advance();
        Value v = expr();
        expect(Token::RParen, "')'");
        advance();
        return v;
      }
      default:
        throw parse_error("expected a value", cur().pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  Ops& ops_;
};

}  // namespace ogm::detail
