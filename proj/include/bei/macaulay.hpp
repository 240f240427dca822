#pragma once

// Ideal membership by linear algebra on a truncated Macaulay matrix. This is
// deliberately independent of Buchberger: no S-polynomials, only the span of
// the shifted generators m * g_i up to a degree bound.

#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "bei/groebner.hpp"

namespace bei {

enum class OracleVerdict { member, unknown };

namespace detail {

/// Calls `visit` on every monomial of total degree exactly `degree`.
inline void for_each_monomial(std::size_t nvars, unsigned degree,
                              const std::function<void(const Monomial&)>& visit) {
  Monomial m(nvars);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t var, unsigned left) {
    if (var + 1 == nvars) {
      m.set_exponent(static_cast<int>(var) + 1, left);
      visit(m);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      m.set_exponent(static_cast<int>(var) + 1, e);
      rec(var + 1, left - e);
    }
    m.set_exponent(static_cast<int>(var) + 1, 0);
  };
  if (nvars == 0) {
    if (degree == 0) visit(m);
    return;
  }
  rec(0, degree);
}

/// Row-echelon span of sparse vectors keyed by leading monomial.
template <class S>
class EchelonSpan {
 public:
  void insert(Polynomial<S> row) {
    reduce_head(row);
    if (row.is_zero()) return;
    row.make_monic();
    Monomial lead = row.leading_monomial();
    pivots_.emplace(std::move(lead), std::move(row));
  }

  bool contains(Polynomial<S> v) const {
    reduce_head(v);
    return v.is_zero();
  }

  std::size_t rank() const { return pivots_.size(); }

 private:
  void reduce_head(Polynomial<S>& v) const {
    while (!v.is_zero()) {
      auto it = pivots_.find(v.leading_monomial());
      if (it == pivots_.end()) return;
      v.add_scaled(it->second, -v.leading_coeff(), Monomial(v.nvars()));
    }
  }

  std::unordered_map<Monomial, Polynomial<S>, MonomialHash> pivots_;
};

}  // namespace detail

/// Decides whether f = sum h_i g_i with deg(h_i g_i) <= degree_bound is
/// solvable. `member` is a proof of membership; `unknown` only says no such
/// representation exists at this bound.
template <class S>
OracleVerdict macaulay_member(const Polynomial<S>& f, const Ideal<S>& ideal, unsigned degree_bound,
                              std::size_t max_rows = 2'000'000) {
  if (f.nvars() != ideal.nvars()) throw DimensionError("polynomial and ideal in different rings");
  if (f.is_zero()) return OracleVerdict::member;
  if (degree_bound < f.total_degree()) {
    throw std::invalid_argument("degree bound below the degree of the polynomial");
  }
  const std::size_t n = f.nvars();
  const MonomialOrder& ord = f.order();
  std::vector<Polynomial<S>> gens;
  bool homogeneous = true;
  for (const auto& g : ideal.generators()) {
    gens.push_back(g.with_order(ord));
    homogeneous = homogeneous && g.is_standard_homogeneous();
  }

  std::size_t rows = 0;
  auto add_rows = [&](detail::EchelonSpan<S>& span, unsigned target_degree, bool exact) {
    for (const auto& g : gens) {
      const unsigned dg = g.total_degree();
      if (dg > target_degree) continue;
      const unsigned lo = exact ? target_degree - dg : 0;
      for (unsigned d = lo; d <= target_degree - dg; ++d) {
        detail::for_each_monomial(n, d, [&](const Monomial& m) {
          if (++rows > max_rows) throw ResourceCapExceeded("macaulay_rows", max_rows);
          span.insert(g.mul_term(m, S(1)));
        });
      }
    }
  };

  if (homogeneous) {
    // The ideal is graded, so each homogeneous component of f can be tested
    // against the shifts of matching degree alone.
    std::map<unsigned, std::vector<typename Polynomial<S>::Term>> parts;
    for (const auto& t : f.terms()) parts[t.monomial.degree()].push_back(t);
    for (auto& [deg, terms] : parts) {
      detail::EchelonSpan<S> span;
      add_rows(span, deg, true);
      if (!span.contains(Polynomial<S>::from_terms(n, std::move(terms), ord))) {
        return OracleVerdict::unknown;
      }
    }
    return OracleVerdict::member;
  }
  detail::EchelonSpan<S> span;
  add_rows(span, degree_bound, false);
  return span.contains(f) ? OracleVerdict::member : OracleVerdict::unknown;
}

}  // namespace bei
