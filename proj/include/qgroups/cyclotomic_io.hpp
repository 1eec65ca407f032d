#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "cyclotomic.hpp"

namespace qgroups {

namespace detail {

// Recursive-descent parser for the text syntax produced by Cyclotomic::str():
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' signed-integer)?
//   primary := integer | 'E(' integer ')' | 'ER(' signed-integer ')' | '(' expr ')'
class CyclotomicParser
{
public:
  explicit CyclotomicParser(std::string_view text) : _text(text) {}

  Cyclotomic parse()
  {
    auto value = expr();
    skip_space();
    if (_pos != _text.size())
      fail("unexpected trailing input");
    return value;
  }

private:
  Cyclotomic expr()
  {
    auto value = term();
    for (;;) {
      skip_space();
      if (accept('+'))
        value = value + term();
      else if (accept('-'))
        value = value - term();
      else
        return value;
    }
  }

  Cyclotomic term()
  {
    auto value = unary();
    for (;;) {
      skip_space();
      if (accept('*'))
        value = value * unary();
      else if (accept('/'))
        value = value / unary();
      else
        return value;
    }
  }

  Cyclotomic unary()
  {
    skip_space();
    if (accept('-'))
      return -unary();
    if (accept('+'))
      return unary();
    return power();
  }

  Cyclotomic power()
  {
    auto base = primary();
    skip_space();
    if (!accept('^'))
      return base;
    skip_space();
    long exponent;
    if (accept('(')) {
      exponent = signed_integer();
      expect(')');
    } else {
      exponent = signed_integer();
    }
    return base.pow(exponent);
  }

  Cyclotomic primary()
  {
    skip_space();
    if (accept('(')) {
      auto value = expr();
      expect(')');
      return value;
    }
    if (_pos < _text.size() && _text[_pos] == 'E') {
      ++_pos;
      bool root = accept('R');
      expect('(');
      long n = signed_integer();
      expect(')');
      if (root)
        return Cyclotomic::sqrt(n);
      if (n <= 0)
        fail("E(n) requires a positive integer");
      return root_of_unity(static_cast<std::uint32_t>(n));
    }
    if (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
      auto start = _pos;
      while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos])))
        ++_pos;
      return Cyclotomic(Rational(mpz_class(std::string(_text.substr(start, _pos - start)))));
    }
    fail("expected a number, E(n), ER(n) or '('");
  }

  long signed_integer()
  {
    skip_space();
    bool negative = accept('-');
    if (!negative)
      accept('+');
    skip_space();
    auto start = _pos;
    while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos])))
      ++_pos;
    if (start == _pos)
      fail("expected an integer");
    long value = std::stol(std::string(_text.substr(start, _pos - start)));
    return negative ? -value : value;
  }

  void skip_space()
  {
    while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos])))
      ++_pos;
  }

  bool accept(char c)
  {
    skip_space();
    if (_pos < _text.size() && _text[_pos] == c) {
      ++_pos;
      return true;
    }
    return false;
  }

  void expect(char c)
  {
    if (!accept(c))
      fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(std::string const &msg) const
  {
    throw ParseError("cyclotomic '" + std::string(_text) + "' at offset " +
                     std::to_string(_pos) + ": " + msg);
  }

  std::string_view _text;
  std::size_t _pos = 0;
};

} // namespace detail

inline Cyclotomic parse_cyclotomic(std::string_view text)
{
  return detail::CyclotomicParser(text).parse();
}

} // namespace qgroups
