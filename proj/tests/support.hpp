#pragma once

// Helpers shared by the test programs: graph generators and brute-force
// oracles that do not reuse the library's algorithms.

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "bei/graph.hpp"

namespace bei::testing {

/// Every connected graph on n labelled vertices, edges in lex order.
inline std::vector<Graph> connected_graphs(int n) {
  std::vector<Edge> all;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) all.emplace_back(i, j);
  }
  std::vector<Graph> out;
  for (unsigned long mask = 0; mask < (1ul << all.size()); ++mask) {
    std::vector<Edge> es;
    for (std::size_t k = 0; k < all.size(); ++k) {
      if (mask >> k & 1) es.push_back(all[k]);
    }
    Graph g(n, es);
    if (g.is_connected()) out.push_back(std::move(g));
  }
  return out;
}

/// Random connected graph: a random spanning tree plus each other pair with
/// probability p, edges shuffled.
inline Graph random_connected_graph(int n, double p, std::mt19937& rng) {
  std::vector<Edge> es;
  std::set<Edge> used;
  for (int v = 2; v <= n; ++v) {
    int parent = std::uniform_int_distribution<int>(1, v - 1)(rng);
    es.emplace_back(parent, v);
    used.insert(Edge(parent, v));
  }
  std::bernoulli_distribution coin(p);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (!used.count(Edge(i, j)) && coin(rng)) es.emplace_back(i, j);
    }
  }
  std::shuffle(es.begin(), es.end(), rng);
  return Graph(n, es);
}

/// Number of components of G - removed, by depth-first search.
inline int count_components(const Graph& g, const std::vector<int>& removed) {
  const int n = g.vertex_count();
  std::vector<char> gone(static_cast<std::size_t>(n) + 1, 0), seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : removed) gone[static_cast<std::size_t>(v)] = 1;
  int count = 0;
  std::function<void(int)> dfs = [&](int v) {
    seen[static_cast<std::size_t>(v)] = 1;
    for (const Edge& e : g.edges()) {
      int w = e.u == v ? e.v : e.v == v ? e.u : 0;
      if (w && !gone[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) dfs(w);
    }
  };
  for (int v = 1; v <= n; ++v) {
    if (!gone[static_cast<std::size_t>(v)] && !seen[static_cast<std::size_t>(v)]) {
      ++count;
      dfs(v);
    }
  }
  return count;
}

/// Smallest vertex set whose removal disconnects G, by trying all subsets.
inline int brute_force_connectivity(const Graph& g) {
  const int n = g.vertex_count();
  int best = n - 1;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size >= best || size > n - 2) continue;
    std::vector<int> removed;
    for (int v = 1; v <= n; ++v) {
      if (mask >> (v - 1) & 1) removed.push_back(v);
    }
    if (count_components(g, removed) > 1) best = size;
  }
  return best;
}

/// All S (as sorted vectors) meeting the minimal-prime criterion, over every
/// subset of [n].
inline std::set<std::vector<int>> brute_force_minimal_prime_sets(const Graph& g) {
  const int n = g.vertex_count();
  std::set<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> S;
    for (int v = 1; v <= n; ++v) {
      if (mask >> (v - 1) & 1) S.push_back(v);
    }
    const int c = count_components(g, S);
    bool ok = true;
    for (int i : S) {
      std::vector<int> smaller;
      for (int v : S) {
        if (v != i) smaller.push_back(v);
      }
      if (count_components(g, smaller) >= c) ok = false;
    }
    if (ok) out.insert(S);
  }
  return out;
}

/// Connected unicyclic graphs whose cycle is the triangle {1,2,3}: each
/// vertex v > 3 hangs from some earlier vertex.
inline std::vector<Graph> unicyclic_triangle_graphs(int n) {
  std::vector<Graph> out;
  std::vector<int> parent(static_cast<std::size_t>(n) + 1, 1);
  std::function<void(int)> rec = [&](int v) {
    if (v > n) {
      std::vector<Edge> es{{1, 2}, {2, 3}, {1, 3}};
      for (int w = 4; w <= n; ++w) es.emplace_back(parent[static_cast<std::size_t>(w)], w);
      out.emplace_back(n, es);
      return;
    }
    for (int p = 1; p < v; ++p) {
      parent[static_cast<std::size_t>(v)] = p;
      rec(v + 1);
    }
  };
  rec(4);
  return out;
}

}  // namespace bei::testing

#include "bei/polynomial.hpp"

namespace bei::testing {

/// Up to `max_terms` terms of degree <= max_degree with small integer
/// coefficients.
inline Polynomial<Rational> random_polynomial(std::size_t nvars, int max_terms, unsigned max_degree,
                                              std::mt19937& rng, const MonomialOrder& order = {}) {
  std::uniform_int_distribution<int> nterms(1, max_terms), var(1, static_cast<int>(nvars)),
      coeff(-5, 5), deg(0, static_cast<int>(max_degree));
  std::vector<Polynomial<Rational>::Term> terms;
  for (int t = nterms(rng); t > 0; --t) {
    Monomial m(nvars);
    for (int d = deg(rng); d > 0; --d) {
      int v = var(rng);
      m.set_exponent(v, m.exponent(v) + 1);
    }
    terms.push_back({m, Rational(coeff(rng))});
  }
  return Polynomial<Rational>::from_terms(nvars, std::move(terms), order);
}

}  // namespace bei::testing
