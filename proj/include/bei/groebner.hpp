#pragma once

// Buchberger's algorithm, normal forms, ideal and radical membership.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bei/polynomial.hpp"

namespace bei {

/// Explicit limits on a Groebner computation. Exceeding one raises
/// ResourceCapExceeded; a capped run never returns a partial basis.
struct GroebnerConfig {
  std::size_t max_pairs = 200000;
  std::size_t max_basis_size = 20000;
  unsigned max_degree = 48;

  /// Defaults overridden by BEI_MAX_PAIRS, BEI_MAX_BASIS and BEI_MAX_DEGREE.
  static GroebnerConfig from_env();
};

class ResourceCapExceeded : public std::runtime_error {
 public:
  ResourceCapExceeded(std::string cap, std::size_t limit)
      : std::runtime_error("resource cap '" + cap + "' exceeded (limit " + std::to_string(limit) +
                           ")"),
        cap_(std::move(cap)) {}
  const std::string& cap() const { return cap_; }

 private:
  std::string cap_;
};

/// Raised when radical equality cannot be decided with the enabled methods.
class IndeterminateResult : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class S>
class Ideal {
 public:
  explicit Ideal(std::vector<Polynomial<S>> generators) : gens_(std::move(generators)) {
    if (gens_.empty()) throw std::invalid_argument("an ideal needs at least one generator");
    for (const auto& g : gens_) {
      if (g.nvars() != gens_.front().nvars()) throw DimensionError("generators in different rings");
      if (g.is_zero()) throw std::invalid_argument("ideal generators must be nonzero");
    }
  }

  const std::vector<Polynomial<S>>& generators() const { return gens_; }
  std::size_t nvars() const { return gens_.front().nvars(); }

 private:
  std::vector<Polynomial<S>> gens_;
};

template <class S>
class GroebnerBasis {
 public:
  GroebnerBasis(MonomialOrder order, std::vector<Polynomial<S>> basis, Ideal<S> source,
                std::size_t pairs_reduced)
      : order_(std::move(order)),
        basis_(std::move(basis)),
        source_(std::move(source)),
        pairs_reduced_(pairs_reduced) {}

  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial<S>>& basis() const { return basis_; }
  const Ideal<S>& source() const { return source_; }
  std::size_t nvars() const { return source_.nvars(); }
  bool is_unit() const { return basis_.size() == 1 && basis_.front().is_constant(); }
  std::size_t pairs_reduced() const { return pairs_reduced_; }

 private:
  MonomialOrder order_;
  std::vector<Polynomial<S>> basis_;
  Ideal<S> source_;
  std::size_t pairs_reduced_;
};

namespace detail {

template <class S>
const Polynomial<S>* find_reducer(const Monomial& m, const std::vector<const Polynomial<S>*>& rs) {
  for (const Polynomial<S>* g : rs) {
    if (g->leading_monomial().divides(m)) return g;
  }
  return nullptr;
}

/// Full reduction with monic reducers. The remainder is exact: p - result
/// lies in the ideal of the reducers.
template <class S>
Polynomial<S> reduce_exact(Polynomial<S> p, const std::vector<const Polynomial<S>*>& rs) {
  std::vector<typename Polynomial<S>::Term> irreducible;
  while (!p.is_zero()) {
    const auto& lt = p.leading_term();
    if (const Polynomial<S>* g = find_reducer(lt.monomial, rs)) {
      p.add_scaled(*g, -lt.coeff, lt.monomial / g->leading_monomial());
    } else {
      irreducible.push_back(p.pop_leading_term());
    }
  }
  return Polynomial<S>::from_terms(p.nvars(), std::move(irreducible), p.order());
}

/// Reduces until the leading term is irreducible, removing the content after
/// every step. The result agrees with the exact remainder up to a unit.
template <class S>
Polynomial<S> top_reduce_scaled(Polynomial<S> p, const std::vector<const Polynomial<S>*>& rs) {
  while (!p.is_zero()) {
    const auto& lt = p.leading_term();
    const Polynomial<S>* g = find_reducer(lt.monomial, rs);
    if (g == nullptr) break;
    p.add_scaled(*g, -lt.coeff, lt.monomial / g->leading_monomial());
    p.remove_content();
  }
  return p;
}

}  // namespace detail

/// Reduced Groebner basis by Buchberger's algorithm with the Gebauer-Moeller
/// pair criteria and the normal selection strategy.
template <class S>
GroebnerBasis<S> buchberger(const Ideal<S>& ideal, const MonomialOrder& order = {},
                            const GroebnerConfig& caps = {}) {
  const std::size_t nvars = ideal.nvars();
  order.check_nvars(nvars);

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Polynomial<S>> polys;
  std::vector<char> active;
  std::vector<Pair> pairs;
  std::size_t reduced = 0;
  bool unit = false;

  auto reducers = [&] {
    std::vector<const Polynomial<S>*> rs;
    for (std::size_t k = 0; k < polys.size(); ++k) {
      if (active[k]) rs.push_back(&polys[k]);
    }
    return rs;
  };

  auto insert = [&](Polynomial<S> h) {
    h = detail::reduce_exact(std::move(h), reducers());
    if (h.is_zero()) return;
    h.make_monic();
    if (h.is_constant()) {
      unit = true;
      return;
    }
    if (h.total_degree() > caps.max_degree) throw ResourceCapExceeded("max_degree", caps.max_degree);
    polys.push_back(std::move(h));
    active.push_back(0);
    const std::size_t hi = polys.size() - 1;
    const Monomial& lh = polys[hi].leading_monomial();

    std::vector<std::size_t> cand;
    std::vector<Monomial> cand_lcm;
    for (std::size_t k = 0; k < hi; ++k) {
      if (!active[k]) continue;
      cand.push_back(k);
      cand_lcm.push_back(lcm(lh, polys[k].leading_monomial()));
    }
    std::vector<std::size_t> kept;  // indices into cand
    for (std::size_t c = 0; c < cand.size(); ++c) {
      bool keep = lh.coprime(polys[cand[c]].leading_monomial());
      if (!keep) {
        keep = true;
        for (std::size_t d = c + 1; d < cand.size() && keep; ++d) {
          if (cand_lcm[d].divides(cand_lcm[c])) keep = false;
        }
        for (std::size_t d : kept) {
          if (!keep) break;
          if (cand_lcm[d].divides(cand_lcm[c])) keep = false;
        }
      }
      if (keep) kept.push_back(c);
    }
    std::erase_if(pairs, [&](const Pair& p) {
      if (!lh.divides(p.lcm)) return false;
      return lcm(polys[p.i].leading_monomial(), lh) != p.lcm &&
             lcm(lh, polys[p.j].leading_monomial()) != p.lcm;
    });
    for (std::size_t c : kept) {
      if (!lh.coprime(polys[cand[c]].leading_monomial())) pairs.push_back({cand[c], hi, cand_lcm[c]});
    }
    for (std::size_t k = 0; k < hi; ++k) {
      if (active[k] && lh.divides(polys[k].leading_monomial())) active[k] = 0;
    }
    active[hi] = 1;
    std::size_t live = static_cast<std::size_t>(std::count(active.begin(), active.end(), 1));
    if (live > caps.max_basis_size) throw ResourceCapExceeded("max_basis_size", caps.max_basis_size);
  };

  for (const auto& g : ideal.generators()) {
    insert(g.with_order(order));
    if (unit) break;
  }
  while (!pairs.empty() && !unit) {
    auto best = pairs.begin();
    for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
      int c = order.compare(it->lcm, best->lcm);
      if (c < 0 || (c == 0 && std::pair(it->j, it->i) < std::pair(best->j, best->i))) best = it;
    }
    Pair p = *best;
    pairs.erase(best);
    if (++reduced > caps.max_pairs) throw ResourceCapExceeded("max_pairs", caps.max_pairs);
    const Polynomial<S>& f = polys[p.i];
    const Polynomial<S>& g = polys[p.j];
    Polynomial<S> s = f.mul_term(p.lcm / f.leading_monomial(), S(1));
    s.add_scaled(g, S(-1), p.lcm / g.leading_monomial());
    s = detail::top_reduce_scaled(std::move(s), reducers());
    if (!s.is_zero()) insert(std::move(s));
  }

  std::vector<Polynomial<S>> basis;
  if (unit) {
    basis.push_back(Polynomial<S>::constant(nvars, S(1), order));
  } else {
    std::vector<const Polynomial<S>*> minimal = reducers();
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<const Polynomial<S>*> others;
      for (std::size_t o = 0; o < minimal.size(); ++o) {
        if (o != k) others.push_back(minimal[o]);
      }
      Polynomial<S> g = *minimal[k];
      Polynomial<S> head = Polynomial<S>::term(g.leading_monomial(), S(1), order);
      Polynomial<S> tail = g - head;
      Polynomial<S> r = head + detail::reduce_exact(std::move(tail), others);
      basis.push_back(std::move(r));
    }
    std::sort(basis.begin(), basis.end(), [&](const auto& a, const auto& b) {
      return order.greater(a.leading_monomial(), b.leading_monomial());
    });
  }
  return GroebnerBasis<S>(order, std::move(basis), ideal, reduced);
}

template <class S>
Polynomial<S> normal_form(const Polynomial<S>& f, const GroebnerBasis<S>& gb) {
  if (f.nvars() != gb.nvars()) throw DimensionError("polynomial and basis in different rings");
  std::vector<const Polynomial<S>*> rs;
  for (const auto& g : gb.basis()) rs.push_back(&g);
  return detail::reduce_exact(f.with_order(gb.order()), rs);
}

template <class S>
bool ideal_member(const Polynomial<S>& f, const GroebnerBasis<S>& gb) {
  return normal_form(f, gb).is_zero();
}

template <class S>
bool ideal_member(const Polynomial<S>& f, const Ideal<S>& ideal, const MonomialOrder& order = {},
                  const GroebnerConfig& caps = {}) {
  return ideal_member(f, buchberger(ideal, order, caps));
}

enum class MembershipMethod { bounded_power, rabinowitsch };

struct MembershipResult {
  bool member = false;
  /// Least r with f^r in the ideal, when found by trying powers.
  std::optional<unsigned> exponent;
  MembershipMethod method = MembershipMethod::bounded_power;
  /// False only for a negative bounded-power answer without Rabinowitsch.
  bool definitive = true;
};

struct RadicalOptions {
  unsigned max_power = 3;
  bool rabinowitsch = true;
  MonomialOrder order;
  GroebnerConfig caps;
};

/// Decides 1 in I + (1 - y f) with a fresh variable y appended to the ring.
template <class S>
bool rabinowitsch_member(const Polynomial<S>& f, const Ideal<S>& ideal, const GroebnerConfig& caps) {
  const std::size_t n = ideal.nvars() + 1;
  const MonomialOrder ord = MonomialOrder::degrevlex();
  std::vector<Polynomial<S>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.with_nvars(n).with_order(ord));
  Polynomial<S> y = Polynomial<S>::variable(n, static_cast<int>(n), ord);
  gens.push_back(Polynomial<S>::constant(n, S(1), ord) - y * f.with_nvars(n).with_order(ord));
  return buchberger(Ideal<S>(std::move(gens)), ord, caps).is_unit();
}

/// Radical membership against a precomputed basis of the ideal.
template <class S>
MembershipResult radical_member(const Polynomial<S>& f, const GroebnerBasis<S>& gb,
                                const RadicalOptions& opts) {
  if (opts.max_power < 1) throw std::invalid_argument("max_power must be at least 1");
  MembershipResult r;
  Polynomial<S> power = f.with_order(gb.order());
  for (unsigned e = 1; e <= opts.max_power; ++e) {
    if (e > 1) power *= f.with_order(gb.order());
    if (ideal_member(power, gb)) {
      r.member = true;
      r.exponent = e;
      return r;
    }
  }
  if (!opts.rabinowitsch) {
    r.definitive = false;
    return r;
  }
  r.method = MembershipMethod::rabinowitsch;
  r.member = rabinowitsch_member(f, gb.source(), opts.caps);
  return r;
}

template <class S>
MembershipResult radical_member(const Polynomial<S>& f, const Ideal<S>& ideal,
                                const RadicalOptions& opts = {}) {
  return radical_member(f, buchberger(ideal, opts.order, opts.caps), opts);
}

struct RadicalComparison {
  bool equal = false;
  /// Results for F_i in rad(J), then for each generator of J in rad(F), in
  /// order; stops after the first definitive failure.
  std::vector<MembershipResult> into_j;
  std::vector<MembershipResult> into_f;
  unsigned max_exponent = 0;
  bool used_rabinowitsch = false;
};

template <class S>
RadicalComparison compare_radicals(const Ideal<S>& j, const std::vector<Polynomial<S>>& fs,
                                   const RadicalOptions& opts = {}) {
  if (fs.empty()) throw std::invalid_argument("comparison list must be nonempty");
  RadicalComparison out;
  auto record = [&](const MembershipResult& m, std::vector<MembershipResult>& into) {
    into.push_back(m);
    if (m.exponent) out.max_exponent = std::max(out.max_exponent, *m.exponent);
    if (m.method == MembershipMethod::rabinowitsch) out.used_rabinowitsch = true;
    if (!m.member && !m.definitive) {
      throw IndeterminateResult("no power up to " + std::to_string(opts.max_power) +
                                " lies in the ideal and the Rabinowitsch test is disabled");
    }
    return m.member;
  };

  GroebnerBasis<S> gb_j = buchberger(j, opts.order, opts.caps);
  for (const auto& f : fs) {
    if (f.nvars() != j.nvars()) throw DimensionError("comparison list in a different ring");
    if (!record(radical_member(f, gb_j, opts), out.into_j)) return out;
  }
  std::vector<Polynomial<S>> nonzero;
  for (const auto& f : fs) {
    if (!f.is_zero()) nonzero.push_back(f);
  }
  if (nonzero.empty()) {
    // rad(0) = (0); J has nonzero generators.
    out.into_f.push_back({});
    return out;
  }
  GroebnerBasis<S> gb_f = buchberger(Ideal<S>(std::move(nonzero)), opts.order, opts.caps);
  for (const auto& g : j.generators()) {
    if (!record(radical_member(g, gb_f, opts), out.into_f)) return out;
  }
  out.equal = true;
  return out;
}

/// rad(J) == rad(F). Throws IndeterminateResult if undecidable under opts.
template <class S>
bool radical_equal(const Ideal<S>& j, const std::vector<Polynomial<S>>& fs,
                   const RadicalOptions& opts = {}) {
  return compare_radicals(j, fs, opts).equal;
}

}  // namespace bei
