#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bei {

/// Thrown when operands live in polynomial rings of different sizes.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A monomial x^u in N variables. Variables are indexed 1..N in the public
/// interface; storage is a dense exponent vector with a cached total degree
/// and a 64-bit variable-presence mask used to short-circuit divisibility.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  /// `powers` are (variable, exponent) pairs with 1-based variables.
  Monomial(std::size_t nvars, std::initializer_list<std::pair<int, unsigned>> powers);

  static Monomial variable(std::size_t nvars, int var, unsigned exp = 1);

  std::size_t nvars() const { return exps_.size(); }
  unsigned exponent(int var) const { return exps_.at(static_cast<std::size_t>(var - 1)); }
  void set_exponent(int var, unsigned exp);
  std::span<const Exponent> exponents() const { return exps_; }

  unsigned degree() const { return degree_; }
  std::uint64_t mask() const { return mask_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const {
    if ((mask_ & ~other.mask_) != 0 || degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }
  bool coprime(const Monomial& other) const;

  Monomial with_nvars(std::size_t nvars) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient a / b; b must divide a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  std::size_t hash() const;

 private:
  void refresh();

  std::vector<Exponent> exps_;
  unsigned degree_ = 0;
  std::uint64_t mask_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Indices (1-based) of the variables dividing m, ascending.
std::vector<int> support(const Monomial& m);

/// Term order on monomials. The permutation lists variables (1-based) from
/// largest to smallest; empty means x1 > x2 > ... > xN.
class MonomialOrder {
 public:
  enum class Kind { lex, degrevlex };

  MonomialOrder() = default;
  explicit MonomialOrder(Kind kind, std::vector<int> permutation = {});

  static MonomialOrder lex() { return MonomialOrder(Kind::lex); }
  static MonomialOrder degrevlex() { return MonomialOrder(Kind::degrevlex); }

  Kind kind() const { return kind_; }
  const std::vector<int>& permutation() const { return perm_; }

  /// Throws DimensionError unless the permutation fits an N-variable ring.
  void check_nvars(std::size_t nvars) const;

  /// Negative, zero or positive as a <, ==, > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.perm_ == b.perm_;
  }

 private:
  Kind kind_ = Kind::degrevlex;
  std::vector<int> perm_;  // 0-based variable positions, largest first
};

const char* to_string(MonomialOrder::Kind kind);
MonomialOrder::Kind parse_order_kind(const std::string& name);

}  // namespace bei
