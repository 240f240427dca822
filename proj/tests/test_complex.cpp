#include <catch_amalgamated.hpp>

#include "bei/bounds.hpp"
#include "bei/complex.hpp"
#include "bei/io.hpp"
#include "support.hpp"

using namespace bei;

namespace {

Graph diamond() { return Graph(4, {{1, 2}, {2, 3}, {1, 4}, {3, 4}, {1, 3}}); }

Polynomial<Rational> P(const std::string& s, std::size_t n = 8) { return parse_rational_polynomial(s, n); }

std::vector<VertexSet> dummy_vertices(int k) {
  std::vector<VertexSet> v;
  for (int i = 1; i <= k; ++i) v.push_back({i});
  return v;
}

/// Every face of the complex, by expanding each facet.
std::set<Face> all_faces(const SimplicialComplex& d) {
  std::set<Face> out;
  for (const Face& f : d.facets()) {
    for (unsigned mask = 1; mask < (1u << f.size()); ++mask) {
      Face g;
      for (std::size_t k = 0; k < f.size(); ++k) {
        if (mask >> k & 1) g.push_back(f[k]);
      }
      out.insert(g);
    }
  }
  return out;
}

/// (max support, min count) over all Q-matchings, by exhaustive search.
std::pair<int, int> brute_force_delta(const SimplicialComplex& d, const std::set<int>& q) {
  std::vector<Face> usable;
  for (const Face& f : all_faces(d)) {
    if (q.count(static_cast<int>(f.size()) - 1)) usable.push_back(f);
  }
  std::pair<int, int> best{0, 0};
  std::vector<char> used(d.vertex_count(), 0);
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t from, int support, int count) {
    if (support > best.first || (support == best.first && count < best.second)) best = {support, count};
    for (std::size_t k = from; k < usable.size(); ++k) {
      const Face& f = usable[k];
      if (std::any_of(f.begin(), f.end(), [&](int v) { return used[static_cast<std::size_t>(v)]; })) continue;
      for (int v : f) used[static_cast<std::size_t>(v)] = 1;
      rec(k + 1, support + static_cast<int>(f.size()), count + 1);
      for (int v : f) used[static_cast<std::size_t>(v)] = 0;
    }
  };
  rec(0, 0, 0);
  return best;
}

SimplicialComplex random_complex(int k, std::mt19937& rng) {
  std::uniform_int_distribution<int> nfacets(1, 4), size(1, 4), vertex(0, k - 1);
  std::vector<Face> faces;
  for (int f = nfacets(rng); f > 0; --f) {
    Face face;
    for (int s = size(rng); s > 0; --s) face.push_back(vertex(rng));
    faces.push_back(face);
  }
  return SimplicialComplex(dummy_vertices(k), faces);
}

}  // namespace

TEST_CASE("complex construction keeps facets only") {
  const SimplicialComplex d(dummy_vertices(4), {{0, 1}, {1, 0}, {0}, {0, 1, 2}});
  CHECK(d.facets() == std::vector<Face>{{0, 1, 2}, {3}});
  CHECK(d.dimension() == 2);
  CHECK(d.is_face({2, 0}));
  CHECK_FALSE(d.is_face({2, 3}));
  CHECK(d.connected_components() == std::vector<std::vector<int>>{{0, 1, 2}, {3}});
  CHECK_THROWS_AS(SimplicialComplex(dummy_vertices(2), {{0, 2}}), std::invalid_argument);
  CHECK(SimplicialComplex().dimension() == -1);
}

TEST_CASE("the complex of a binomial edge ideal") {
  const auto d = build_complex_edge_ideal(diamond());
  CHECK(d.vertex_count() == 10);
  CHECK(d.facets() == std::vector<Face>{{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}});
  CHECK(d.connected_components().size() == 5);
  CHECK(build_complex_edge_ideal(complete_graph(2)).facets() == std::vector<Face>{{0, 1}});
  CHECK(build_complex_edge_ideal(cycle_graph(3)).connected_components().size() == 3);
}

TEST_CASE("bounded-degree construction reproduces the edge-ideal complex") {
  for (const Graph& g : {cycle_graph(3), diamond(), Graph(4, {{1, 2}, {1, 3}, {2, 3}, {1, 4}})}) {
    const auto j = build_edge_ideal(g);
    const auto bounded = build_complex_bounded(j.ideal, t_min(g), 4);
    CHECK(bounded.verified_degree == 4);
    CHECK(bounded.complex == build_complex_edge_ideal(g));
  }
}

TEST_CASE("delta_Q examples") {
  const auto d = build_complex_edge_ideal(diamond());
  const auto r = delta_q(d, omega(d));
  CHECK(r.value == 5);
  CHECK(r.witness.support_size() == 10);
  CHECK(delta_q(SimplicialComplex(dummy_vertices(2), {{0, 1}}), {0, 1}).value == 1);
  const auto none = delta_q(SimplicialComplex(dummy_vertices(2), {}), {1});
  CHECK(none.value == 0);
  CHECK(none.witness.simplices.empty());
  CHECK(delta_q(d, {}).value == 0);
  CHECK(delta_q(d, {7}).value == 0);
}

TEST_CASE("b and r") {
  const auto br = b_and_r(build_complex_edge_ideal(diamond()));
  CHECK(br.b == 5);
  CHECK(br.r == 5);
  const auto tri = b_and_r(SimplicialComplex(dummy_vertices(3), {{0, 1, 2}}));
  CHECK(tri.b == 2);
  CHECK(tri.r == 1);
  const auto point = b_and_r(SimplicialComplex(dummy_vertices(1), {}));
  CHECK(point.b == 1);
  CHECK(point.r == 1);
}

TEST_CASE("delta_Q matches exhaustive search and is additive", "[property]") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const auto d = random_complex(3 + trial % 6, rng);
    const std::vector<std::set<int>> qs{{0}, {1}, {0, 1}, {2}, {1, 2}, omega(d)};
    for (const auto& q : qs) {
      const auto r = delta_q(d, q);
      const auto [support, count] = brute_force_delta(d, q);
      CHECK(r.value == count);
      CHECK(static_cast<int>(r.witness.support_size()) == support);
      CHECK(static_cast<int>(r.witness.card()) == r.value);
      for (const Face& f : r.witness.simplices) {
        CHECK(d.is_face(f));
        CHECK(q.count(static_cast<int>(f.size()) - 1));
      }
      int sum = 0;
      for (const auto& comp : d.connected_components()) sum += delta_q(d.induced(comp), q).value;
      CHECK(sum == r.value);
    }
    // b_and_r cross-checks itself against delta_Q and throws on mismatch.
    CHECK_NOTHROW(b_and_r(d));
  }
}

TEST_CASE("matching numbers of edge-ideal complexes equal m", "[property]") {
  int graphs = 0;
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : testing::connected_graphs(n)) {
      const auto d = build_complex_edge_ideal(g);
      CHECK(delta_q(d, {0, 1}).value == g.edge_count());
      CHECK(delta_q(d, omega(d)).value == g.edge_count());
      ++graphs;
    }
  }
  std::mt19937 rng(6);
  for (int trial = 0; trial < 60; ++trial, ++graphs) {
    const Graph g = testing::random_connected_graph(6 + trial % 2, 0.4, rng);
    const auto d = build_complex_edge_ideal(g);
    CHECK(delta_q(d, {0, 1}).value == g.edge_count());
    CHECK(delta_q(d, omega(d)).value == g.edge_count());
  }
  CHECK(graphs >= 50);
}

TEST_CASE("J-completeness and induced subcomplexes") {
  const auto j = build_edge_ideal(diamond());
  const auto gb = buchberger(j.ideal);
  const auto d = build_complex_edge_ideal(diamond());
  const auto& f = j.ideal.generators();
  for (const auto& g : f) CHECK(is_J_complete(g, gb));
  CHECK_FALSE(is_J_complete(f[1] + f[2], gb));
  CHECK(is_J_complete(P("x1*x2^3"), gb));
  CHECK_THROWS_AS(is_J_complete(Polynomial<Rational>(8), gb), std::invalid_argument);

  const auto d1 = delta_of_polynomial(f[0], d);
  CHECK(d1.vertices() == std::vector<VertexSet>{{1, 6}, {2, 5}});
  CHECK(d1.facets() == std::vector<Face>{{0, 1}});
  const auto d23 = delta_of_polynomial(f[1] + f[2], d);
  CHECK(d23.vertices() == std::vector<VertexSet>{{2, 7}, {3, 6}, {1, 8}, {4, 5}});
  CHECK(d23.facets() == std::vector<Face>{{0, 1}, {2, 3}});
  CHECK(delta_of_polynomial(P("3"), d).vertex_count() == 0);

  CHECK(is_spanning(std::vector{f[0], f[1] + f[2], f[3], f[4]}, d));
  CHECK_FALSE(is_spanning(std::vector{f[0]}, d));
  CHECK(is_spanning(f, d));
}

TEST_CASE("J-complete polynomials span simplices", "[property]") {
  // Random combinations of monomials congruent mod J_G: multiply a generator's
  // monomials by a common monomial and mix with several generators' terms.
  std::mt19937 rng(12);
  const Graph g(5, {{1, 2}, {2, 3}, {1, 3}, {2, 4}, {4, 5}, {3, 5}});
  const auto j = build_edge_ideal(g);
  const auto gb = buchberger(j.ideal);
  const auto d = build_complex_edge_ideal(g);
  std::uniform_int_distribution<int> pick(0, g.edge_count() - 1), coeff(-3, 3);
  int complete = 0;
  for (int trial = 0; trial < 150; ++trial) {
    Polynomial<Rational> f(10);
    for (int k = 1 + trial % 3; k > 0; --k) {
      const auto& gen = j.ideal.generators()[static_cast<std::size_t>(pick(rng))];
      f += gen * Rational(coeff(rng));
    }
    if (f.is_zero()) continue;
    if (is_J_complete(f, gb)) {
      ++complete;
      CHECK(delta_of_polynomial(f, d).is_simplex());
    }
  }
  CHECK(complete > 30);
}

TEST_CASE("complex files") {
  const auto d = build_complex_edge_ideal(diamond());
  const std::string text = format_complex(d);
  CHECK(text.rfind("vertices 10\n{1,6}\n{2,5}\n", 0) == 0);
  CHECK(parse_complex(text) == d);
  const auto e = parse_complex("# two vertices joined\nvertices 2\n{1, 4}\n{2,3}\nfaces\n2 1\n");
  CHECK(e.facets() == std::vector<Face>{{0, 1}});
  CHECK_THROWS_AS(parse_complex("vertices 2\n{1,4}\nfaces\n"), ParseError);
  CHECK_THROWS_AS(parse_complex("vertices 1\n{1,4}\nfaces\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_complex("vertices 1\n1,4\nfaces\n"), ParseError);
}
