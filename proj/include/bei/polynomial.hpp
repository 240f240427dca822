#pragma once

// Sparse multivariate polynomials over an exact coefficient field.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "bei/monomial.hpp"
#include "bei/scalar.hpp"

namespace bei {

/// Sparse polynomial with terms kept strictly decreasing under its monomial
/// order; zero coefficients are never stored.
template <class S>
class Polynomial {
 public:
  using Scalar = S;
  struct Term {
    Monomial monomial;
    S coeff;
    friend bool operator==(const Term& a, const Term& b) {
      return a.monomial == b.monomial && a.coeff == b.coeff;
    }
  };

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars, MonomialOrder order = {})
      : nvars_(nvars), order_(std::move(order)) {
    order_.check_nvars(nvars_);
  }

  static Polynomial constant(std::size_t nvars, const S& c, MonomialOrder order = {}) {
    return term(Monomial(nvars), c, std::move(order));
  }
  static Polynomial term(Monomial m, const S& c, MonomialOrder order = {}) {
    Polynomial p(m.nvars(), std::move(order));
    if (!bei::is_zero(c)) p.terms_.push_back({std::move(m), c});
    return p;
  }
  static Polynomial variable(std::size_t nvars, int var, MonomialOrder order = {}) {
    return term(Monomial::variable(nvars, var), S(1), std::move(order));
  }
  /// Sorts, merges equal monomials and drops zero coefficients.
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms,
                               MonomialOrder order = {}) {
    Polynomial p(nvars, std::move(order));
    for (const Term& t : terms) {
      if (t.monomial.nvars() != nvars) throw DimensionError("term outside the ring");
    }
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_.front().monomial.is_one(); }

  const Term& leading_term() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
    return terms_.front();
  }
  Term pop_leading_term() {
    Term t = leading_term();
    terms_.erase(terms_.begin());
    return t;
  }
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const S& leading_coeff() const { return leading_term().coeff; }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const Term& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
  }
  /// Homogeneous for the standard grading (all variables of degree 1).
  bool is_standard_homogeneous() const {
    for (const Term& t : terms_) {
      if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
    }
    return true;
  }

  Polynomial with_order(MonomialOrder order) const {
    Polynomial p(nvars_, std::move(order));
    p.terms_ = terms_;
    std::sort(p.terms_.begin(), p.terms_.end(), [&](const Term& a, const Term& b) {
      return p.order_.greater(a.monomial, b.monomial);
    });
    return p;
  }

  /// Embeds into a ring with more variables (appended after the existing ones).
  Polynomial with_nvars(std::size_t nvars) const {
    MonomialOrder ord = order_.permutation().empty() ? order_ : MonomialOrder(order_.kind());
    Polynomial p(nvars, ord);
    p.terms_.reserve(terms_.size());
    for (const Term& t : terms_) p.terms_.push_back({t.monomial.with_nvars(nvars), t.coeff});
    p.canonicalize();
    return p;
  }

  template <class T>
  Polynomial<T> cast() const {
    static_assert(std::is_same_v<S, Rational>, "only rational polynomials can be cast");
    std::vector<typename Polynomial<T>::Term> ts;
    ts.reserve(terms_.size());
    for (const Term& t : terms_) ts.push_back({t.monomial, scalar_cast<T>(t.coeff)});
    return Polynomial<T>::from_terms(nvars_, std::move(ts), order_);
  }

  S evaluate(std::span<const S> point) const {
    if (point.size() != nvars_) throw DimensionError("evaluation point has wrong length");
    S total(0);
    for (const Term& t : terms_) {
      S v = t.coeff;
      auto e = t.monomial.exponents();
      for (std::size_t i = 0; i < e.size(); ++i) {
        for (unsigned k = 0; k < e[i]; ++k) v *= point[i];
      }
      total += v;
    }
    return total;
  }

  /// this += c * m * g, in one merge pass.
  void add_scaled(const Polynomial& g, const S& c, const Monomial& m) {
    check_compatible(g);
    if (bei::is_zero(c) || g.is_zero()) return;
    if (!(g.order_ == order_)) {
      add_scaled(g.with_order(order_), c, m);
      return;
    }
    const Polynomial& gg = g;
    std::vector<Term> out;
    out.reserve(terms_.size() + gg.terms_.size());
    auto a = terms_.begin();
    auto b = gg.terms_.begin();
    Monomial mb;
    bool have_b = false;
    while (a != terms_.end() || b != gg.terms_.end()) {
      if (b != gg.terms_.end() && !have_b) {
        mb = m.is_one() ? b->monomial : b->monomial * m;
        have_b = true;
      }
      int cmp = (a == terms_.end()) ? -1 : (b == gg.terms_.end() ? 1 : order_.compare(a->monomial, mb));
      if (cmp > 0) {
        out.push_back(std::move(*a));
        ++a;
      } else if (cmp < 0) {
        out.push_back({std::move(mb), c * b->coeff});
        ++b;
        have_b = false;
      } else {
        S sum = a->coeff + c * b->coeff;
        if (!bei::is_zero(sum)) out.push_back({std::move(a->monomial), std::move(sum)});
        ++a;
        ++b;
        have_b = false;
      }
    }
    terms_ = std::move(out);
  }

  Polynomial mul_term(const Monomial& m, const S& c) const {
    Polynomial p(nvars_, order_);
    if (bei::is_zero(c)) return p;
    p.terms_.reserve(terms_.size());
    for (const Term& t : terms_) p.terms_.push_back({t.monomial * m, t.coeff * c});
    return p;
  }

  Polynomial& operator+=(const Polynomial& o) {
    add_scaled(o, S(1), Monomial(nvars_));
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    add_scaled(o, S(-1), Monomial(nvars_));
    return *this;
  }
  Polynomial& operator*=(const S& c) {
    if (bei::is_zero(c)) {
      terms_.clear();
    } else {
      for (Term& t : terms_) t.coeff *= c;
    }
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const S& c) { return a *= c; }
  friend Polynomial operator*(const S& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const { return *this * S(-1); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    std::vector<Term> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const Term& s : a.terms_) {
      for (const Term& t : b.terms_) prod.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
    }
    return from_terms(a.nvars_, std::move(prod), a.order_);
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(nvars_, S(1), order_);
    Polynomial base = *this;
    while (e != 0) {
      if (e & 1u) result *= base;
      e >>= 1;
      if (e != 0) base *= base;
    }
    return result;
  }

  /// Scales to leading coefficient 1.
  void make_monic() {
    if (terms_.empty()) return;
    S inv = S(1) / terms_.front().coeff;
    for (Term& t : terms_) t.coeff *= inv;
  }

  /// Removes the content: over Q the result has coprime integer coefficients
  /// and a positive leading coefficient; over Z/p it is monic.
  void remove_content() {
    if (terms_.empty()) return;
    if constexpr (std::is_same_v<S, Rational>) {
      Integer den = 1, num = 0;
      for (const Term& t : terms_) {
        den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(t.coeff));
        num = boost::multiprecision::gcd(num, boost::multiprecision::numerator(t.coeff));
      }
      Rational scale(den, num);
      if (terms_.front().coeff < 0) scale = -scale;
      if (scale != 1) {
        for (Term& t : terms_) t.coeff *= scale;
      }
    } else {
      make_monic();
    }
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_) return false;
    if (a.order_ == b.order_) return a.terms_ == b.terms_;
    return a.terms_ == b.with_order(a.order_).terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void check_compatible(const Polynomial& o) const {
    if (o.nvars_ != nvars_) {
      throw DimensionError("polynomials in " + std::to_string(nvars_) + " and " +
                           std::to_string(o.nvars_) + " variables");
    }
  }

  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
      return order_.greater(a.monomial, b.monomial);
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (Term& t : terms_) {
      if (!out.empty() && out.back().monomial == t.monomial) {
        out.back().coeff += t.coeff;
      } else {
        if (!out.empty() && bei::is_zero(out.back().coeff)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && bei::is_zero(out.back().coeff)) out.pop_back();
    terms_ = std::move(out);
  }

  std::size_t nvars_ = 0;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

// ---------------------------------------------------------------------------
// Text form: `3/2*x1^2*x3 - x2 + 5`.

namespace detail {

inline bool negative(const Rational& c) { return c < 0; }
inline bool negative(Fp c) { return c.symmetric() < 0; }

inline void append_monomial(std::string& out, const Monomial& m) {
  bool first = true;
  auto e = m.exponents();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) out += '*';
    first = false;
    out += 'x';
    out += std::to_string(i + 1);
    if (e[i] != 1) {
      out += '^';
      out += std::to_string(e[i]);
    }
  }
}

}  // namespace detail

template <class S>
std::string to_string(const Polynomial<S>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool neg = detail::negative(t.coeff);
    S mag = neg ? S(-t.coeff) : t.coeff;
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (t.monomial.is_one()) {
      out += to_string(mag);
    } else {
      if (mag != S(1)) {
        out += to_string(mag);
        out += '*';
      }
      detail::append_monomial(out, t.monomial);
    }
  }
  return out;
}

template <class S>
std::ostream& operator<<(std::ostream& os, const Polynomial<S>& p) {
  return os << to_string(p);
}

class PolynomialParseError : public std::runtime_error {
 public:
  PolynomialParseError(const std::string& what, std::size_t column)
      : std::runtime_error(what + " at column " + std::to_string(column + 1)), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Parses a rational polynomial in `nvars` variables. Coefficients are exact.
Polynomial<Rational> parse_rational_polynomial(std::string_view text, std::size_t nvars,
                                               const MonomialOrder& order = {});

template <class S>
Polynomial<S> parse_polynomial(std::string_view text, std::size_t nvars,
                               const MonomialOrder& order = {}) {
  if constexpr (std::is_same_v<S, Rational>) {
    return parse_rational_polynomial(text, nvars, order);
  } else {
    return parse_rational_polynomial(text, nvars, order).template cast<S>();
  }
}

}  // namespace bei
