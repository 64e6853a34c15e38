// Recursive-descent parser for the polynomial text grammar:
//
//   polynomial := [sign] term { sign term }
//   term       := coefficient [ ["*"] factor { "*" factor } ]
//               | factor { "*" factor }
//   coefficient:= digits [ "/" digits ]
//   factor     := identifier [ "^" digits ]
//
// Whitespace is ignored between tokens. Repeated factors multiply.

#include <cctype>

#include "thicket/algebra/polynomial.hpp"
#include "thicket/errors.hpp"

namespace thicket {

namespace {

class PolyParser {
 public:
  PolyParser(RingPtr ring, std::string_view text) : ring_(std::move(ring)), text_(text) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    terms.push_back(parse_term(negative));
    skip_ws();
    while (!at_end()) {
      char c = peek();
      if (c != '+' && c != '-') fail(std::string("expected '+' or '-', found '") + c + "'");
      ++pos_;
      terms.push_back(parse_term(c == '-'));
      skip_ws();
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

 private:
  Term parse_term(bool negative) {
    skip_ws();
    if (at_end()) fail("expected a term");
    Scalar coeff(1);
    Monomial mono;
    bool have_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_coefficient();
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        mono = parse_factor();
        have_factor = true;
      } else if (!at_end() && is_ident_start(peek())) {
        mono = parse_factor();
        have_factor = true;
      }
    } else if (is_ident_start(peek())) {
      mono = parse_factor();
      have_factor = true;
    } else {
      fail(std::string("unexpected character '") + peek() + "'");
    }
    if (have_factor) {
      skip_ws();
      while (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || !is_ident_start(peek())) fail("expected a variable after '*'");
        mono = mono * parse_factor();
        skip_ws();
      }
    }
    if (negative) coeff = -coeff;
    return {mono, coeff};
  }

  Scalar parse_coefficient() {
    mpz_class num(parse_digits());
    if (!at_end() && peek() == '/') {
      ++pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
        fail("expected a denominator after '/'");
      mpz_class den(parse_digits());
      if (den == 0) fail("zero denominator");
      Scalar q(num, den);
      q.canonicalize();
      return q;
    }
    return Scalar(num);
  }

  Monomial parse_factor() {
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    int idx = ring_->variable_index(name);
    if (idx < 0) fail("undeclared variable '" + name + "'", start);
    int exponent = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
        fail("expected an exponent after '^'");
      std::string digits = parse_digits();
      if (digits.size() > 4 || std::stoi(digits) > 60000) fail("exponent too large");
      exponent = std::stoi(digits);
    }
    std::vector<int> exps(ring_->num_variables(), 0);
    exps[static_cast<std::size_t>(idx)] = exponent;
    return ring_->make_monomial(exps);
  }

  std::string parse_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  static bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) { fail(msg, pos_); }
  [[noreturn]] void fail(const std::string& msg, std::size_t at) {
    throw InputError("polynomial \"" + std::string(text_) + "\", column " +
                     std::to_string(at + 1) + ": " + msg);
  }

  RingPtr ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(RingPtr ring, std::string_view text) {
  return PolyParser(std::move(ring), text).parse();
}

}  // namespace thicket
