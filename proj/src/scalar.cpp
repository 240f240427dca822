#include "bei/scalar.hpp"

namespace bei {

thread_local std::uint32_t Fp::prime_ = Fp::kDefaultPrime;

Fp::Modulus::Modulus(std::uint32_t p) : saved_(prime_) {
  if (p > (1u << 31) || !is_prime(p)) {
    throw std::invalid_argument("prime field modulus must be a prime below 2^31, got " +
                                std::to_string(p));
  }
  prime_ = p;
}

Fp::Modulus::~Modulus() { prime_ = saved_; }

bool Fp::is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; std::uint64_t{d} * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Fp Fp::inverse() const {
  if (v_ == 0) throw std::domain_error("division by zero in Z/" + std::to_string(prime_));
  // Fermat: a^(p-2)
  std::uint64_t base = v_, result = 1;
  std::uint32_t e = prime_ - 2;
  while (e != 0) {
    if (e & 1u) result = result * base % prime_;
    base = base * base % prime_;
    e >>= 1;
  }
  return raw(static_cast<std::uint32_t>(result));
}

Fp Fp::from_rational(const Rational& q) {
  Integer p = prime_;
  Integer num = boost::multiprecision::numerator(q) % p;
  Integer den = boost::multiprecision::denominator(q) % p;
  if (den.is_zero()) {
    throw std::domain_error("denominator of " + q.str() + " vanishes modulo " +
                            std::to_string(prime_));
  }
  Fp n(num.convert_to<long long>());
  Fp d(den.convert_to<long long>());
  return n / d;
}

std::string to_string(const Rational& q) { return q.str(); }

std::string to_string(Fp a) { return std::to_string(a.symmetric()); }

}  // namespace bei
