// Recursive-descent parser for polynomial strings over a Ring.
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*'? factor)*
//   factor := atom ('^' integer)?
//   atom   := integer ['/' integer] | name | '(' expr ')'
// The name "t" denotes the generator of a rational-function scalar field.

#pragma once

#include <cctype>
#include <string>

#include "tate/errors.hpp"
#include "tate/polynomial.hpp"

namespace tate {

template <class F>
class PolyParser {
 public:
  PolyParser(const Ring& R, const std::string& text, int line = 0, int col0 = 0)
      : R_(R), s_(text), line_(line), col0_(col0) {}

  Poly<F> parse() {
    Poly<F> p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_) + ", col " +
                                           std::to_string(col0_ + pos_ + 1) + ": " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Poly<F> one() const { return Poly<F>::constant(R_.nvars(), F(1)); }

  Poly<F> expr() {
    skip();
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    Poly<F> acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+')) acc = acc + term();
      else if (eat('-')) acc = acc - term();
      else break;
    }
    return acc;
  }
  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_';
  }
  Poly<F> term() {
    Poly<F> acc = factor();
    for (;;) {
      if (eat('*')) acc = acc * factor();
      else if (starts_factor()) acc = acc * factor();
      else break;
    }
    return acc;
  }
  long integer() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(s_.substr(start, pos_ - start));
  }
  Poly<F> factor() {
    Poly<F> base = atom();
    if (eat('^')) {
      long k = integer();
      Poly<F> r = one();
      for (long i = 0; i < k; ++i) r = r * base;
      return r;
    }
    return base;
  }
  Poly<F> atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (eat('(')) {
      Poly<F> p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long num = integer();
      long den = 1;
      if (eat('/')) den = integer();
      if (den == 0) fail("zero denominator");
      return Poly<F>::constant(R_.nvars(), FieldTraits<F>::from_fraction(num, den));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      for (int i = 0; i < R_.nx(); ++i)
        if (R_.x[i] == name) return Poly<F>::variable(R_.nvars(), i);
      for (int k = 0; k < R_.np(); ++k)
        if (R_.params[k] == name) return Poly<F>::variable(R_.nvars(), R_.nx() + k);
      if (name == "t" && FieldTraits<F>::has_parameter)
        return Poly<F>::constant(R_.nvars(), FieldTraits<F>::parameter());
      pos_ = start;
      throw Error(ErrorCode::UnknownSymbol, "line " + std::to_string(line_) + ", col " +
                                                std::to_string(col0_ + pos_ + 1) + ": unknown symbol '" + name + "'");
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  const Ring& R_;
  std::string s_;
  size_t pos_ = 0;
  int line_, col0_;
};

template <class F>
Poly<F> parse_poly(const Ring& R, const std::string& text) {
  return PolyParser<F>(R, text).parse();
}

}  // namespace tate
