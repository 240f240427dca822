#include "bei/monomial.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace bei {

namespace {

Monomial::Exponent checked_exponent(unsigned long exp) {
  if (exp > std::numeric_limits<Monomial::Exponent>::max()) {
    throw std::overflow_error("monomial exponent " + std::to_string(exp) + " too large");
  }
  return static_cast<Monomial::Exponent>(exp);
}

}  // namespace

Monomial::Monomial(std::size_t nvars, std::initializer_list<std::pair<int, unsigned>> powers)
    : exps_(nvars, 0) {
  for (auto [var, exp] : powers) {
    if (var < 1 || static_cast<std::size_t>(var) > nvars) {
      throw DimensionError("variable x" + std::to_string(var) + " outside 1.." +
                           std::to_string(nvars));
    }
    exps_[static_cast<std::size_t>(var - 1)] =
        checked_exponent(exps_[static_cast<std::size_t>(var - 1)] + exp);
  }
  refresh();
}

Monomial Monomial::variable(std::size_t nvars, int var, unsigned exp) {
  return Monomial(nvars, {{var, exp}});
}

void Monomial::set_exponent(int var, unsigned exp) {
  if (var < 1 || static_cast<std::size_t>(var) > exps_.size()) {
    throw DimensionError("variable x" + std::to_string(var) + " outside 1.." +
                         std::to_string(exps_.size()));
  }
  exps_[static_cast<std::size_t>(var - 1)] = checked_exponent(exp);
  refresh();
}

void Monomial::refresh() {
  degree_ = 0;
  mask_ = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    degree_ += exps_[i];
    if (exps_[i] != 0) mask_ |= std::uint64_t{1} << (i % 64);
  }
}

bool Monomial::coprime(const Monomial& other) const {
  if ((mask_ & other.mask_) == 0) return true;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::with_nvars(std::size_t nvars) const {
  if (nvars < exps_.size()) {
    for (std::size_t i = nvars; i < exps_.size(); ++i) {
      if (exps_[i] != 0) throw DimensionError("cannot drop a variable that occurs");
    }
  }
  Monomial r = *this;
  r.exps_.resize(nvars, 0);
  r.refresh();
  return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw DimensionError("monomial product across ring sizes");
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) {
    r.exps_[i] = checked_exponent(static_cast<unsigned long>(a.exps_[i]) + b.exps_[i]);
  }
  r.degree_ = a.degree_ + b.degree_;
  r.mask_ = a.mask_ | b.mask_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  if (!b.divides(a)) throw std::domain_error("monomial quotient is not exact");
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] -= b.exps_[i];
  r.refresh();
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw DimensionError("monomial lcm across ring sizes");
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  r.refresh();
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (Exponent e : exps_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<int> support(const Monomial& m) {
  std::vector<int> s;
  auto e = m.exponents();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] != 0) s.push_back(static_cast<int>(i) + 1);
  }
  return s;
}

MonomialOrder::MonomialOrder(Kind kind, std::vector<int> permutation) : kind_(kind) {
  if (permutation.empty()) return;
  std::vector<int> sorted = permutation;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i) + 1) {
      throw std::invalid_argument("variable permutation must list 1..N exactly once");
    }
  }
  perm_.reserve(permutation.size());
  for (int v : permutation) perm_.push_back(v - 1);
}

void MonomialOrder::check_nvars(std::size_t nvars) const {
  if (!perm_.empty() && perm_.size() != nvars) {
    throw DimensionError("monomial order permutation has " + std::to_string(perm_.size()) +
                         " variables, ring has " + std::to_string(nvars));
  }
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  auto ea = a.exponents();
  auto eb = b.exponents();
  const std::size_t n = ea.size();
  if (kind_ == Kind::degrevlex) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (std::size_t k = n; k-- > 0;) {
      std::size_t v = perm_.empty() ? k : static_cast<std::size_t>(perm_[k]);
      if (ea[v] != eb[v]) return ea[v] < eb[v] ? 1 : -1;
    }
    return 0;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t v = perm_.empty() ? k : static_cast<std::size_t>(perm_[k]);
    if (ea[v] != eb[v]) return ea[v] < eb[v] ? -1 : 1;
  }
  return 0;
}

const char* to_string(MonomialOrder::Kind kind) {
  return kind == MonomialOrder::Kind::lex ? "lex" : "degrevlex";
}

MonomialOrder::Kind parse_order_kind(const std::string& name) {
  if (name == "lex") return MonomialOrder::Kind::lex;
  if (name == "degrevlex" || name == "grevlex") return MonomialOrder::Kind::degrevlex;
  throw std::invalid_argument("unknown monomial order '" + name + "'");
}

}  // namespace bei
