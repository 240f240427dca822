#pragma once

// Coefficient fields: exact rationals (default) and prime fields Z/p.

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace bei {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Element of Z/p. The modulus is a per-thread context set through
/// Fp::Modulus (in the spirit of NTL's ZZ_p); values carry no modulus.
class Fp {
 public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  /// Installs `p` as the current thread's modulus for the guard's lifetime.
  class Modulus {
   public:
    explicit Modulus(std::uint32_t p);
    ~Modulus();
    Modulus(const Modulus&) = delete;
    Modulus& operator=(const Modulus&) = delete;

   private:
    std::uint32_t saved_;
  };

  static std::uint32_t modulus() { return prime_; }
  static bool is_prime(std::uint32_t p);

  Fp() = default;
  Fp(long long v) : v_(reduce(v)) {}  // NOLINT(google-explicit-constructor)

  static Fp from_rational(const Rational& q);

  std::uint32_t value() const { return v_; }
  /// Representative in (-p/2, p/2].
  long long symmetric() const {
    return v_ > prime_ / 2 ? static_cast<long long>(v_) - prime_ : v_;
  }

  Fp inverse() const;

  Fp operator-() const { return Fp::raw(v_ == 0 ? 0 : prime_ - v_); }
  Fp& operator+=(Fp o) {
    std::uint64_t s = std::uint64_t{v_} + o.v_;
    v_ = static_cast<std::uint32_t>(s >= prime_ ? s - prime_ : s);
    return *this;
  }
  Fp& operator-=(Fp o) { return *this += -o; }
  Fp& operator*=(Fp o) {
    v_ = static_cast<std::uint32_t>(std::uint64_t{v_} * o.v_ % prime_);
    return *this;
  }
  Fp& operator/=(Fp o) { return *this *= o.inverse(); }

  friend Fp operator+(Fp a, Fp b) { return a += b; }
  friend Fp operator-(Fp a, Fp b) { return a -= b; }
  friend Fp operator*(Fp a, Fp b) { return a *= b; }
  friend Fp operator/(Fp a, Fp b) { return a /= b; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

  friend std::ostream& operator<<(std::ostream& os, Fp a) { return os << a.symmetric(); }

 private:
  static Fp raw(std::uint32_t v) {
    Fp r;
    r.v_ = v;
    return r;
  }
  static std::uint32_t reduce(long long v) {
    long long r = v % static_cast<long long>(prime_);
    return static_cast<std::uint32_t>(r < 0 ? r + prime_ : r);
  }

  std::uint32_t v_ = 0;
  static thread_local std::uint32_t prime_;
};

inline bool is_zero(const Rational& q) { return q.is_zero(); }
inline bool is_zero(Fp a) { return a.value() == 0; }

std::string to_string(const Rational& q);
std::string to_string(Fp a);

/// Maps an exact rational into the scalar type S.
template <class S>
S scalar_cast(const Rational& q);

template <>
inline Rational scalar_cast<Rational>(const Rational& q) {
  return q;
}

template <>
inline Fp scalar_cast<Fp>(const Rational& q) {
  return Fp::from_rational(q);
}

}  // namespace bei
