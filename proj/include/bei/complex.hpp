#pragma once

// The simplicial complex Delta_J on T_min and its matching invariants.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bei/graph.hpp"
#include "bei/groebner.hpp"

namespace bei {

/// Face as a sorted list of 0-based vertex indices.
using Face = std::vector<int>;

/// Stored by facets; faces are their subsets.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// `faces` may be any generating list; non-maximal entries are dropped and
  /// missing singletons added. Throws std::invalid_argument on bad indices.
  SimplicialComplex(std::vector<VertexSet> vertices, const std::vector<Face>& faces);

  const std::vector<VertexSet>& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<Face>& facets() const { return facets_; }
  /// -1 for the empty complex.
  int dimension() const;
  bool is_face(const Face& f) const;
  /// The empty complex counts as a simplex.
  bool is_simplex() const { return facets_.size() <= 1; }
  std::optional<int> vertex_index(const VertexSet& support) const;
  std::vector<std::vector<int>> connected_components() const;
  /// Subcomplex induced on the given vertex indices, relabelled in order.
  SimplicialComplex induced(const std::vector<int>& vertex_indices) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertices_ == b.vertices_ && a.facets_ == b.facets_;
  }

 private:
  std::vector<VertexSet> vertices_;
  std::vector<Face> facets_;  // sorted, maximal
};

/// Pairwise disjoint faces whose dimensions lie in q.
struct QMatching {
  std::vector<Face> simplices;
  std::set<int> q;

  std::size_t card() const { return simplices.size(); }
  std::size_t support_size() const;
};

struct ComplexLimits {
  std::size_t max_component_vertices = 24;
};

struct DeltaResult {
  int value = 0;
  QMatching witness;
};

/// {0, 1, ..., dim}.
std::set<int> omega(const SimplicialComplex& delta);

/// Among Q-matchings of maximum support, the least number of simplices.
DeltaResult delta_q(const SimplicialComplex& delta, const std::set<int>& q,
                    const ComplexLimits& limits = {});

struct CoverNumbers {
  int b = 0;  // spanning by simplices of dimension <= 1
  int r = 0;  // spanning by arbitrary simplices
};

/// Computed by set-cover search and checked against delta_q({0,1}) and
/// delta_q(omega); a disagreement raises std::logic_error.
CoverNumbers b_and_r(const SimplicialComplex& delta, const ComplexLimits& limits = {});

/// Vertices t_min(G); one 1-simplex {E^1_ij, E^2_ij} per edge.
SimplicialComplex build_complex_edge_ideal(const Graph& g);

/// Complex file: `vertices k`, k supports `{i,j,...}`, `faces`, then faces as
/// 1-based vertex indices.
SimplicialComplex parse_complex(std::string_view text);
std::string format_complex(const SimplicialComplex& delta);

template <class S>
bool is_J_complete(const Polynomial<S>& f, const GroebnerBasis<S>& gb) {
  if (f.is_zero()) throw std::invalid_argument("J-completeness is defined for nonzero polynomials");
  std::optional<Polynomial<S>> first;
  for (const auto& t : f.terms()) {
    auto nf = normal_form(Polynomial<S>::term(t.monomial, S(1), f.order()), gb);
    if (!first) first = std::move(nf);
    else if (nf != *first) return false;
  }
  return true;
}

template <class S>
bool is_J_complete(const Polynomial<S>& f, const Ideal<S>& j, const GroebnerConfig& caps = {}) {
  return is_J_complete(f, buchberger(j, f.order(), caps));
}

/// Indices of the vertices E of delta such that some monomial of f has
/// support exactly E.
template <class S>
std::vector<int> polynomial_vertices(const Polynomial<S>& f, const SimplicialComplex& delta) {
  std::set<int> hit;
  for (const auto& t : f.terms()) {
    if (auto v = delta.vertex_index(support(t.monomial))) hit.insert(*v);
  }
  return {hit.begin(), hit.end()};
}

template <class S>
SimplicialComplex delta_of_polynomial(const Polynomial<S>& f, const SimplicialComplex& delta) {
  return delta.induced(polynomial_vertices(f, delta));
}

template <class S>
bool is_spanning(const std::vector<Polynomial<S>>& fs, const SimplicialComplex& delta) {
  std::vector<char> covered(delta.vertex_count(), 0);
  for (const auto& f : fs) {
    for (int v : polynomial_vertices(f, delta)) covered[static_cast<std::size_t>(v)] = 1;
  }
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

struct BoundedComplex {
  SimplicialComplex complex;
  /// Faces are certain; non-faces are only ruled out up to this degree.
  unsigned verified_degree = 0;
};

/// Generic Delta_J: a set of vertices is a face when monomials of total
/// degree <= degree_bound with exactly those supports are congruent mod J.
template <class S>
BoundedComplex build_complex_bounded(const Ideal<S>& j, const std::vector<VertexSet>& vertices,
                                     unsigned degree_bound = 4, const MonomialOrder& order = {},
                                     const GroebnerConfig& caps = {}) {
  const auto gb = buchberger(j, order, caps);
  const std::size_t nvars = j.nvars();
  std::map<std::string, std::set<int>> classes;
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    const VertexSet& e = vertices[v];
    if (e.empty() || e.size() > degree_bound) continue;
    // Exponent vectors >= 1 on e with total degree <= degree_bound.
    std::vector<unsigned> exps(e.size(), 1);
    while (true) {
      Monomial m(nvars);
      for (std::size_t k = 0; k < e.size(); ++k) m.set_exponent(e[k], exps[k]);
      classes[to_string(normal_form(Polynomial<S>::term(m, S(1), order), gb))].insert(
          static_cast<int>(v));
      std::size_t k = 0;
      unsigned total = m.degree();
      while (k < e.size()) {
        if (total < degree_bound) {
          ++exps[k];
          break;
        }
        total -= exps[k] - 1;
        exps[k] = 1;
        ++k;
      }
      if (k == e.size()) break;
    }
  }
  std::vector<Face> faces;
  for (auto& [key, members] : classes) faces.emplace_back(members.begin(), members.end());
  return {SimplicialComplex(vertices, faces), degree_bound};
}

}  // namespace bei
