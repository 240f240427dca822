#include "bei/polynomial.hpp"

namespace bei {

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t nvars) : text_(text), nvars_(nvars) {}

  std::vector<Polynomial<Rational>::Term> parse() {
    std::vector<Polynomial<Rational>::Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      bool negate = false;
      if (peek() == '+' || peek() == '-') {
        negate = peek() == '-';
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto term = parse_term();
      if (negate) term.coeff = -term.coeff;
      terms.push_back(std::move(term));
      skip_ws();
    }
    return terms;
  }

 private:
  Polynomial<Rational>::Term parse_term() {
    Rational coeff = 1;
    Monomial mono(nvars_);
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_rational();
      skip_ws();
      need_factor = false;
      if (peek() != '*') return {mono, coeff};
      ++pos_;
      skip_ws();
      need_factor = true;
    }
    while (need_factor) {
      parse_power(mono);
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
      } else {
        need_factor = false;
      }
    }
    return {mono, coeff};
  }

  void parse_power(Monomial& mono) {
    if (peek() != 'x') fail("expected variable x<index>");
    ++pos_;
    std::size_t start = pos_;
    unsigned long var = parse_digits();
    if (var < 1 || var > nvars_) {
      pos_ = start;
      fail("variable x" + std::to_string(var) + " outside x1..x" + std::to_string(nvars_));
    }
    unsigned long exp = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      exp = parse_digits();
    }
    int v = static_cast<int>(var);
    mono.set_exponent(v, mono.exponent(v) + static_cast<unsigned>(exp));
  }

  Rational parse_rational() {
    std::size_t start = pos_;
    parse_digits();
    if (peek() == '/') {
      ++pos_;
      std::size_t den_start = pos_;
      if (parse_digits() == 0) {
        pos_ = den_start;
        fail("zero denominator");
      }
    }
    Rational r(std::string(text_.substr(start, pos_ - start)));
    mpq_canonicalize(r.backend().data());  // "2/4" is read verbatim otherwise
    return r;
  }

  unsigned long parse_digits() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
    unsigned long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      if (v < 100000000ul) v = v * 10 + static_cast<unsigned long>(peek() - '0');
      ++pos_;
    }
    return v;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const { throw PolynomialParseError(what, pos_); }

  std::string_view text_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial<Rational> parse_rational_polynomial(std::string_view text, std::size_t nvars,
                                               const MonomialOrder& order) {
  auto terms = PolyParser(text, nvars).parse();
  return Polynomial<Rational>::from_terms(nvars, std::move(terms), order);
}

}  // namespace bei
