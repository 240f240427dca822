#pragma once

// The binomial edge ideal J_G in K[x_1..x_2n] and its combinatorial data.

#include <map>
#include <utility>
#include <vector>

#include "bei/grading.hpp"
#include "bei/graph.hpp"
#include "bei/groebner.hpp"

namespace bei {

/// f_ij = x_i x_{n+j} - x_j x_{n+i}.
template <class S = Rational>
Polynomial<S> edge_binomial(int n, int i, int j, const MonomialOrder& order = {}) {
  const auto N = static_cast<std::size_t>(2 * n);
  Monomial a(N, {{i, 1}, {n + j, 1}});
  Monomial b(N, {{j, 1}, {n + i, 1}});
  return Polynomial<S>::from_terms(N, {{a, S(1)}, {b, S(-1)}}, order);
}

template <class S = Rational>
struct EdgeIdeal {
  Graph graph;
  Ideal<S> ideal;
  std::map<Edge, std::size_t> edge_index;  // position in ideal.generators()

  const Polynomial<S>& generator(int i, int j) const {
    return ideal.generators().at(edge_index.at(Edge(i, j)));
  }
};

/// Generators follow the order of g.edges(). Throws GraphError unless G is
/// connected with n >= 2.
template <class S = Rational>
EdgeIdeal<S> build_edge_ideal(const Graph& g, const MonomialOrder& order = {}) {
  if (g.vertex_count() < 2 || !g.is_connected()) {
    throw GraphError("binomial edge ideals need a connected graph with n >= 2");
  }
  std::vector<Polynomial<S>> gens;
  std::map<Edge, std::size_t> index;
  for (const Edge& e : g.edges()) {
    index.emplace(e, gens.size());
    gens.push_back(edge_binomial<S>(g.vertex_count(), e.u, e.v, order));
  }
  return EdgeIdeal<S>{g, Ideal<S>(std::move(gens)), std::move(index)};
}

/// A: n x 2n with columns e_1..e_n, e_1..e_n. B: (n+1) x 2n with columns
/// w_1 + w_{i+1} for x_i and w_{i+1} for x_{n+i}.
std::pair<Grading, Grading> standard_gradings(int n);

/// {i, n+j} and {j, n+i} for every edge, in edge order.
std::vector<VertexSet> t_min(const Graph& g);

/// P_S(G): the variables x_i, x_{n+i} for i in S together with the binomial
/// edge ideal of the complete graph on each component of G - S.
struct PrimeComponent {
  VertexSet S;
  int c = 0;
  int dimension = 0;
  std::vector<VertexSet> blocks;

  template <class T = Rational>
  std::vector<Polynomial<T>> generators(int n, const MonomialOrder& order = {}) const {
    std::vector<Polynomial<T>> out;
    const auto N = static_cast<std::size_t>(2 * n);
    for (int i : S) {
      out.push_back(Polynomial<T>::variable(N, i, order));
      out.push_back(Polynomial<T>::variable(N, n + i, order));
    }
    for (const VertexSet& b : blocks) {
      for (std::size_t p = 0; p < b.size(); ++p) {
        for (std::size_t q = p + 1; q < b.size(); ++q) out.push_back(edge_binomial<T>(n, b[p], b[q], order));
      }
    }
    return out;
  }
};

/// True when S is empty or removing any single vertex of S lowers c(S).
bool is_minimal_prime_set(const Graph& g, const VertexSet& S);

struct MinimalPrimeOptions {
  int max_vertices = 16;
  /// Skip sets containing a simplicial vertex (its neighbours form a clique),
  /// which can never satisfy the criterion.
  bool prune = true;
};

/// Ordered by |S| then lexicographically; the first entry is S = {}.
std::vector<PrimeComponent> minimal_primes(const Graph& g, const MinimalPrimeOptions& opts = {});

struct HeightReport {
  int ht = 0;
  bool unmixed = true;
  std::vector<int> dims;  // one per minimal prime, in minimal_primes order
};

HeightReport height_and_unmixed(const Graph& g, const MinimalPrimeOptions& opts = {});

}  // namespace bei
