#include "bei/edge_ideal.hpp"

#include <algorithm>

namespace bei {

std::pair<Grading, Grading> standard_gradings(int n) {
  if (n < 1) throw std::invalid_argument("standard gradings need n >= 1");
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(n, 2 * n);
  Eigen::MatrixXi b = Eigen::MatrixXi::Zero(n + 1, 2 * n);
  for (int i = 0; i < n; ++i) {
    a(i, i) = 1;
    a(i, n + i) = 1;
    b(0, i) = 1;
    b(i + 1, i) = 1;
    b(i + 1, n + i) = 1;
  }
  return {Grading(a), Grading(b)};
}

std::vector<VertexSet> t_min(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<VertexSet> out;
  for (const Edge& e : g.edges()) {
    out.push_back({e.u, n + e.v});
    out.push_back({e.v, n + e.u});
  }
  return out;
}

bool is_minimal_prime_set(const Graph& g, const VertexSet& S) {
  if (S.empty()) return true;
  const int c = component_count(g, S);
  for (std::size_t k = 0; k < S.size(); ++k) {
    VertexSet smaller = S;
    smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(k));
    if (component_count(g, smaller) >= c) return false;
  }
  return true;
}

namespace {

bool is_simplicial(const Graph& g, int v) {
  const auto& nb = g.neighbors(v);
  for (std::size_t p = 0; p < nb.size(); ++p) {
    for (std::size_t q = p + 1; q < nb.size(); ++q) {
      if (!g.has_edge(nb[p], nb[q])) return false;
    }
  }
  return true;
}

PrimeComponent make_component(const Graph& g, VertexSet S) {
  PrimeComponent p;
  p.blocks = components_after_deletion(g, S);
  p.c = static_cast<int>(p.blocks.size());
  p.dimension = S.empty() ? g.vertex_count() + 1
                          : g.vertex_count() - static_cast<int>(S.size()) + p.c;
  p.S = std::move(S);
  return p;
}

}  // namespace

std::vector<PrimeComponent> minimal_primes(const Graph& g, const MinimalPrimeOptions& opts) {
  if (!g.is_connected()) throw GraphError("minimal primes need a connected graph");
  const int n = g.vertex_count();
  if (n > opts.max_vertices) {
    throw ResourceCapExceeded("minimal prime enumeration vertices", static_cast<std::size_t>(opts.max_vertices));
  }
  std::vector<int> candidates;
  for (int v = 1; v <= n; ++v) {
    if (!opts.prune || !is_simplicial(g, v)) candidates.push_back(v);
  }
  std::vector<PrimeComponent> out{make_component(g, {})};
  const int k = static_cast<int>(candidates.size());
  for (int size = 1; size <= k; ++size) {
    // Lexicographic walk over size-subsets of candidates.
    std::vector<int> pick(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
      VertexSet S;
      for (int i : pick) S.push_back(candidates[static_cast<std::size_t>(i)]);
      if (is_minimal_prime_set(g, S)) out.push_back(make_component(g, std::move(S)));
      int pos = size - 1;
      while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == k - size + pos) --pos;
      if (pos < 0) break;
      ++pick[static_cast<std::size_t>(pos)];
      for (int i = pos + 1; i < size; ++i) {
        pick[static_cast<std::size_t>(i)] = pick[static_cast<std::size_t>(i - 1)] + 1;
      }
    }
  }
  return out;
}

HeightReport height_and_unmixed(const Graph& g, const MinimalPrimeOptions& opts) {
  HeightReport r;
  for (const PrimeComponent& p : minimal_primes(g, opts)) r.dims.push_back(p.dimension);
  const int top = *std::max_element(r.dims.begin(), r.dims.end());
  r.ht = 2 * g.vertex_count() - top;
  r.unmixed = std::all_of(r.dims.begin(), r.dims.end(), [&](int d) { return d == top; });
  return r;
}

}  // namespace bei
