#include "gsv/parse.hpp"

#include <cctype>

#include "gsv/errors.hpp"

namespace gsv {
namespace {

class Parser {
public:
  Parser(std::string_view text, const std::vector<std::string>& vars)
      : text_(text), vars_(vars) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

private:
  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
    throw ParseError(msg, at);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (peek('*')) {
      ++pos_;
      acc = acc * unary();
    }
    return acc;
  }

  Polynomial unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (!peek('^')) return base;
    ++pos_;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '-') fail("negative exponent");
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected a non-negative integer exponent");
    std::size_t start = pos_;
    Integer e = digits();
    if (e > 4096) fail_at("exponent too large", start);
    return base.pow(static_cast<unsigned>(e.get_ui()));
  }

  Integer digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  void reject_juxtaposition() {
    std::size_t save = pos_;
    skip_ws();
    if (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_')
        fail("implicit multiplication is not allowed; use '*'");
    }
    pos_ = save;
  }

  Polynomial atom() {
    skip_ws();
    const std::size_t n = vars_.size();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      reject_juxtaposition();
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = digits();
      Integer den = 1;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
          fail("expected denominator after '/'");
        std::size_t at = pos_;
        den = digits();
        if (den == 0) fail_at("zero denominator", at);
      }
      reject_juxtaposition();
      Rational q(num, den);
      q.canonicalize();
      return Polynomial::constant(n, q);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < n; ++i)
        if (vars_[i] == name) {
          reject_juxtaposition();
          return Polynomial::variable(n, i);
        }
      fail_at("unknown variable '" + name + "'", start);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

}  // namespace

bool is_valid_variable_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

Polynomial parse_poly(std::string_view text, const std::vector<std::string>& variables) {
  for (const auto& v : variables)
    if (!is_valid_variable_name(v)) throw InputError("invalid variable name '" + v + "'");
  return Parser(text, variables).parse();
}

}  // namespace gsv
