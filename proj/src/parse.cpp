#include "apolar/parse.hpp"

#include <cctype>

namespace apolar {

ParseError::ParseError(const std::string& what, int line, int column)
    : std::runtime_error(what + " at line " + std::to_string(line) + ", column " +
                         std::to_string(column)),
      line_(line),
      column_(column) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VariableSplit& split, Alphabet alphabet)
      : text_(text), split_(split), alphabet_(alphabet) {}

  Polynomial run() {
    Polynomial result(split_);
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        advance();
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      first = false;
      parse_term(result, sign);
      skip_space();
    }
    return result;
  }

 private:
  void parse_term(Polynomial& out, int sign) {
    Rational coeff = sign;
    Monomial mono(static_cast<std::size_t>(split_.size()));
    bool have_factor = false;
    while (true) {
      skip_space();
      if (at_end()) fail("expected a coefficient or variable");
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= parse_number();
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        auto [var, exp] = parse_power();
        mono.set(static_cast<std::size_t>(var), mono[static_cast<std::size_t>(var)] + exp);
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      have_factor = true;
      skip_space();
      if (!at_end() && peek() == '*') {
        advance();
        continue;
      }
      break;
    }
    if (!have_factor) fail("empty term");
    out.add_term(mono, coeff);
  }

  Rational parse_number() {
    mpz_class num = parse_unsigned("coefficient");
    if (!at_end() && peek() == '/') {
      advance();
      mpz_class den = parse_unsigned("denominator");
      if (den == 0) fail("zero denominator");
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    return Rational(num);
  }

  mpz_class parse_unsigned(const char* what) {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) advance();
    if (start == pos_) fail(std::string("expected ") + what);
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  std::pair<int, int> parse_power() {
    const int line = line_;
    const int col = column_;
    const char letter = peek();
    advance();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) advance();
    const std::string digits(text_.substr(start, pos_ - start));
    const char x_letter = alphabet_ == Alphabet::dual ? 'X' : 'x';
    const char u_letter = alphabet_ == Alphabet::dual ? 'U' : 'u';
    if ((letter != x_letter && letter != u_letter) || digits.empty() || digits.size() > 6)
      throw ParseError("unknown variable '" + std::string(1, letter) + digits + "'", line, col);
    const int index = std::stoi(digits);
    int var = -1;
    if (letter == x_letter && index < split_.x_count()) var = index;
    if (letter == u_letter && index >= 1 && index <= split_.u_count())
      var = split_.x_count() + index - 1;
    if (var < 0)
      throw ParseError("unknown variable '" + std::string(1, letter) + digits + "'", line, col);
    int exp = 1;
    skip_space();
    if (!at_end() && peek() == '^') {
      advance();
      skip_space();
      const std::size_t es = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) advance();
      if (es == pos_ || pos_ - es > 4) fail("malformed exponent");
      exp = std::stoi(std::string(text_.substr(es, pos_ - es)));
    }
    return {var, exp};
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, column_); }

  std::string_view text_;
  const VariableSplit& split_;
  Alphabet alphabet_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const VariableSplit& split, Alphabet alphabet) {
  return Parser(text, split, alphabet).run();
}

DiffOperator parse_operator(std::string_view text, const VariableSplit& split) {
  return DiffOperator(parse_polynomial(text, split, Alphabet::dual));
}

}  // namespace apolar
