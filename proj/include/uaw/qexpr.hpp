#pragma once

// Text form of scalars and algebra elements.
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('-' | '+') unary | power
//   power  := atom ('^' ['-'] digits)?
//   atom   := digits | 'q' | letter | '(' expr ')'
//
// Letters are only meaningful for algebra elements (see ncalgebra.hpp).

#include <cctype>
#include <string>
#include <string_view>

#include "uaw/cyclotomic.hpp"

namespace uaw {

namespace detail {

template <class Traits>
class ExprParser {
 public:
  using Value = typename Traits::Value;

  ExprParser(std::string_view text, const Traits& traits) : s_(text), t_(traits) {}

  Value parse() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
    Value v = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError("unexpected character '" + std::string(1, s_[pos_]) + "'", pos_);
    return v;
  }

 private:
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

  Value expr() {
    Value v = term();
    for (;;) {
      if (eat('+')) v = t_.add(v, term());
      else if (eat('-')) v = t_.sub(v, term());
      else return v;
    }
  }

  Value term() {
    Value v = unary();
    for (;;) {
      skip();
      const std::size_t at = pos_;
      if (eat('*')) {
        v = t_.mul(v, unary());
      } else if (eat('/')) {
        Value rhs = unary();
        v = t_.div(v, rhs, at);
      } else {
        return v;
      }
    }
  }

  Value unary() {
    if (eat('-')) return t_.neg(unary());
    if (eat('+')) return unary();
    return power();
  }

  Value power() {
    Value base = atom();
    if (!eat('^')) return base;
    skip();
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer exponent", pos_);
    if (pos_ - start > 6) throw ParseError("exponent too large", start);
    long e = std::stol(std::string(s_.substr(start, pos_ - start)));
    return t_.pow(base, neg ? -e : e, start);
  }

  Value atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return t_.integer(Integer(std::string(s_.substr(start, pos_ - start))));
    }
    if (c == 'q') {
      ++pos_;
      return t_.q();
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      return t_.letter(c, pos_ - 1);
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  std::string_view s_;
  const Traits& t_;
  std::size_t pos_ = 0;
};

struct ScalarTraits {
  using Value = Cyclotomic;
  const FieldContext* ctx;

  Value integer(const Integer& n) const { return Cyclotomic::from_rational(*ctx, Rational(n)); }
  Value q() const { return Cyclotomic::q_power(*ctx, 1); }
  Value letter(char c, std::size_t at) const {
    throw ParseError("unknown symbol '" + std::string(1, c) + "'", at);
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value neg(const Value& a) const { return -a; }
  Value div(const Value& a, const Value& b, std::size_t at) const {
    if (b.is_zero()) throw ParseError("division by zero", at);
    return a / b;
  }
  Value pow(const Value& a, long e, std::size_t at) const {
    if (e < 0 && a.is_zero()) throw ParseError("negative power of zero", at);
    return uaw::pow(a, e);
  }
};

}  // namespace detail

inline Cyclotomic parse_qexpr(const FieldContext& ctx, std::string_view text) {
  detail::ScalarTraits t{&ctx};
  return detail::ExprParser<detail::ScalarTraits>(text, t).parse();
}

inline std::string print_qexpr(const Cyclotomic& x) { return x.to_string(); }

}  // namespace uaw
