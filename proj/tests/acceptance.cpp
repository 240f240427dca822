// Acceptance run: one PASS/FAIL line per criterion. Expected values are
// written out by hand; brute-force oracles come from support.hpp.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bei/bounds.hpp"
#include "bei/io.hpp"
#include "bei/macaulay.hpp"
#include "support.hpp"

using namespace bei;

namespace {

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

template <class A, class B>
void expect_eq(const A& got, const B& want, const std::string& what) {
  if (!(got == want)) {
    std::ostringstream s;
    s << what << ": got " << got << ", expected " << want;
    throw Failure{s.str()};
  }
}

Graph corpus_graph(const std::string& name) {
  return parse_graph(read_file(std::string(BEI_CORPUS_DIR) + "/" + name));
}

Polynomial<Rational> f(int n, int i, int j) { return edge_binomial(n, i, j); }

bool has_source(const BoundsReport& r, const std::string& bound, const std::string& source) {
  for (const auto& p : r.provenance) {
    if (p.bound == bound && p.source == source) return true;
  }
  return false;
}

void expect_verifies(const Graph& g, const std::vector<Polynomial<Rational>>& polys, const std::string& what,
                     unsigned max_power = 3) {
  const auto v = verify_certificate<Rational>(g, polys);
  expect(v.verified, what + " does not verify: " + v.message);
  expect(v.max_exponent <= max_power, what + " needed exponent " + std::to_string(v.max_exponent));
}

// --- criteria ---------------------------------------------------------------

void worked_example() {
  const Graph g = corpus_graph("diamond.graph");
  expect_eq(g.vertex_count(), 4, "n");
  expect_eq(g.edge_count(), 5, "m");
  const auto r = bounds_report(g);
  expect_eq(r.bar, 5, "bar");
  expect_eq(r.ara_c, 5, "ara_c");
  const auto d = build_complex_edge_ideal(g);
  expect_eq(delta_q(d, omega(d)).value, 5, "delta over all dimensions");

  const auto primes = minimal_primes(g);
  expect_eq(primes.size(), std::size_t{2}, "number of minimal primes");
  expect(primes[0].S.empty() && primes[0].dimension == 5, "P_empty with dimension 5");
  expect(primes[1].S == VertexSet{1, 3} && primes[1].dimension == 4, "P_{1,3} with dimension 4");

  expect_verifies(g, {f(4, 1, 2), f(4, 2, 3) + f(4, 1, 4), f(4, 3, 4), f(4, 1, 3)}, "{f1, f2+f3, f4, f5}", 2);
  expect_eq(r.ara_lower, 4, "lower bound");
  expect_eq(std::max(r.ht, r.n + r.l - 2), 4, "max(ht, n+l-2)");
  expect(r.ara_exact == 4, "ara_exact");
}

void matching_numbers() {
  int graphs = 0;
  auto check = [&](const Graph& g) {
    const auto d = build_complex_edge_ideal(g);
    expect_eq(delta_q(d, {0, 1}).value, g.edge_count(), "delta {0,1} of " + print_graph(g));
    expect_eq(delta_q(d, omega(d)).value, g.edge_count(), "delta Omega of " + print_graph(g));
    ++graphs;
  };
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : testing::connected_graphs(n)) check(g);
  }
  std::mt19937 rng(606);
  for (int trial = 0; trial < 100; ++trial) check(testing::random_connected_graph(6, 0.4, rng));
  expect(graphs >= 50, "sample too small");
}

void cycles() {
  for (int n = 3; n <= 6; ++n) {
    const auto r = bounds_report(corpus_graph("cycle" + std::to_string(n) + ".graph"));
    expect(r.ara_exact == n, "ara of C_" + std::to_string(n));
    expect(has_source(r, "ara_lower", "vertex-connectivity"), "lower bound source of C_" + std::to_string(n));
    expect(has_source(r, "ara_upper", "bar"), "upper bound source of C_" + std::to_string(n));
  }
}

void unicyclic() {
  const Graph paw = corpus_graph("paw.graph");
  const auto cert = generate_certificate(paw, recognize_family(paw));
  expect_eq(cert.polynomials.size(), std::size_t{3}, "paw certificate size");
  expect_verifies(paw, cert.polynomials, "paw certificate");
  const auto r = bounds_report(paw);
  expect(r.ara_exact == 3 && r.n - 1 == 3, "paw ara");

  const Graph tail = corpus_graph("triangle_tail.graph");
  expect_eq(tail.vertex_count(), 6, "tail graph size");
  const auto t = bounds_report(tail);
  expect(t.ara_exact == 5, "tail ara");
  const auto tc = generate_certificate(tail, recognize_family(tail));
  expect_eq(tc.polynomials.size(), std::size_t{5}, "tail certificate size");
  expect_verifies(tail, tc.polynomials, "tail certificate");
}

void double_triangles() {
  const Graph g = corpus_graph("double_triangle_disjoint.graph");
  const auto c = generate_certificate(g, recognize_family(g));
  expect_eq(c.polynomials.size(), std::size_t{6}, "disjoint bridges certificate size");
  expect_verifies(g, c.polynomials, "disjoint bridges certificate");
  expect(bounds_report(g).ara_exact == 6, "disjoint bridges ara");

  const Graph s = corpus_graph("double_triangle_shared.graph");
  const auto cs = generate_certificate(s, recognize_family(s));
  expect_eq(static_cast<int>(cs.polynomials.size()), s.edge_count() - 2, "shared bridge certificate size");
  expect_verifies(s, cs.polynomials, "shared bridge certificate");
}

void chains() {
  const Graph g = build_triangle_chain(2, {2});
  const auto r = bounds_report(g);
  expect_eq(r.ht, 6, "k=2 height");
  expect(r.unmixed, "k=2 unmixed");
  const auto c = generate_certificate(g, r.family);
  expect_eq(c.polynomials.size(), std::size_t{6}, "k=2 certificate size");
  expect_verifies(g, c.polynomials, "k=2 certificate");
  expect(r.ara_exact == 6, "k=2 ara");

  const Graph h = build_triangle_chain(3, {2, 2});
  const auto rh = bounds_report(h);
  expect_eq(rh.ht, 10, "k=3 height");
  const auto ch = generate_certificate(h, rh.family);
  expect_eq(ch.polynomials.size(), std::size_t{10}, "k=3 certificate size");
  if (std::getenv("BEI_SLOW_TESTS")) expect_verifies(h, ch.polynomials, "k=3 certificate");
}

void five_vertex_example() {
  const Graph g = corpus_graph("house.graph");
  const auto r = bounds_report(g);
  expect(r.ara_exact == 5, "ara");
  expect_eq(r.bar, 6, "bar");
  expect_verifies(g, {f(5, 1, 2), f(5, 2, 3), f(5, 1, 3) + f(5, 2, 4), f(5, 3, 5), f(5, 4, 5)},
                  "{f12, f23, f13+f24, f35, f45}");
}

void property_suites() {
  std::mt19937 rng(8);

  // Groebner bases: generators reduce to zero, normal forms are idempotent.
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Polynomial<Rational>> gens;
    for (int k = 0; k < 3; ++k) {
      auto p = testing::random_polynomial(3, 3, 2, rng);
      if (!p.is_zero()) gens.push_back(p);
    }
    if (gens.empty()) continue;
    const Ideal<Rational> ideal(gens);
    const auto gb = buchberger(ideal);
    for (const auto& g : gens) expect(normal_form(g, gb).is_zero(), "generator does not reduce to zero");
    const auto h = testing::random_polynomial(3, 5, 3, rng);
    const auto nf = normal_form(h, gb);
    expect(normal_form(nf, gb) == nf, "normal form not idempotent");
  }

  // Membership against the linear-algebra oracle on homogeneous binomials.
  std::uniform_int_distribution<int> var(1, 6), coin(0, 1);
  auto random_monomial = [&](unsigned d) {
    Monomial m(6);
    for (unsigned k = 0; k < d; ++k) {
      int v = var(rng);
      m.set_exponent(v, m.exponent(v) + 1);
    }
    return m;
  };
  int instances = 0;
  while (instances < 100) {
    std::vector<Polynomial<Rational>> gens;
    for (int k = 0; k < 3; ++k) {
      auto g = Polynomial<Rational>::from_terms(6, {{random_monomial(2), Rational(1)}, {random_monomial(2), Rational(-1)}});
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) continue;
    const Ideal<Rational> ideal(gens);
    Polynomial<Rational> probe(6);
    if (coin(rng)) {
      for (const auto& g : gens) probe += Polynomial<Rational>::term(random_monomial(1), Rational(var(rng))) * g;
    } else {
      probe = Polynomial<Rational>::from_terms(6, {{random_monomial(3), Rational(2)}, {random_monomial(3), Rational(-1)}});
    }
    if (probe.is_zero()) continue;
    ++instances;
    expect(ideal_member(probe, ideal) == (macaulay_member(probe, ideal, 3) == OracleVerdict::member),
           "membership disagrees with the oracle");
  }

  // Vertex connectivity on every corpus graph with n <= 7, and all small graphs.
  for (const auto& entry : std::filesystem::directory_iterator(BEI_CORPUS_DIR)) {
    if (entry.path().extension() != ".graph") continue;
    const Graph g = parse_graph(read_file(entry.path().string()));
    if (g.vertex_count() <= 7) {
      expect_eq(vertex_connectivity(g), testing::brute_force_connectivity(g), "connectivity of " + entry.path().filename().string());
    }
  }
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : testing::connected_graphs(n)) {
      expect_eq(vertex_connectivity(g), testing::brute_force_connectivity(g), "connectivity of " + print_graph(g));
    }
  }

  // delta is additive over connected components.
  for (int trial = 0; trial < 30; ++trial) {
    const Graph a = testing::random_connected_graph(4, 0.5, rng);
    const auto d = build_complex_edge_ideal(a);
    int sum = 0;
    for (const auto& comp : d.connected_components()) sum += delta_q(d.induced(comp), omega(d)).value;
    expect_eq(sum, delta_q(d, omega(d)).value, "delta additivity");
  }

  // Minimal primes against subset enumeration, n <= 8.
  std::vector<Graph> graphs;
  for (int n = 2; n <= 5; ++n) {
    for (auto& g : testing::connected_graphs(n)) graphs.push_back(std::move(g));
  }
  for (int trial = 0; trial < 90; ++trial) graphs.push_back(testing::random_connected_graph(6 + trial % 3, 0.3, rng));
  for (const Graph& g : graphs) {
    std::set<std::vector<int>> got;
    for (const auto& p : minimal_primes(g)) got.insert(std::vector<int>(p.S.begin(), p.S.end()));
    expect(got == testing::brute_force_minimal_prime_sets(g), "minimal primes of " + print_graph(g));
  }

  // Verified certificates are spanning; J-complete polynomials span simplices.
  for (const char* name : {"paw.graph", "diamond.graph", "house.graph", "double_triangle_disjoint.graph", "cycle5.graph"}) {
    const Graph g = corpus_graph(name);
    const auto cert = generate_certificate(g, recognize_family(g));
    if (verify_certificate<Rational>(g, cert.polynomials).verified) {
      expect(is_spanning(cert.polynomials, build_complex_edge_ideal(g)), std::string("spanning: ") + name);
    }
  }
  const Graph g = corpus_graph("house.graph");
  const auto j = build_edge_ideal(g);
  const auto gb = buchberger(j.ideal);
  const auto d = build_complex_edge_ideal(g);
  std::uniform_int_distribution<int> pick(0, g.edge_count() - 1), coeff(-3, 3);
  int complete = 0;
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial<Rational> p(10);
    for (int k = 1 + trial % 3; k > 0; --k) p += j.ideal.generators()[static_cast<std::size_t>(pick(rng))] * Rational(coeff(rng));
    if (p.is_zero() || !is_J_complete(p, gb)) continue;
    ++complete;
    expect(delta_of_polynomial(p, d).is_simplex(), "J-complete polynomial with a non-simplex complex");
  }
  expect(complete > 0, "no J-complete polynomial sampled");
}

// Each triangle vertex carries at most one hanging tree, and that tree is a
// path starting at the triangle vertex. Checked directly on the edge list.
bool paths_at_distinct_vertices(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> deg(static_cast<std::size_t>(n) + 1, 0);
  for (const Edge& e : g.edges()) {
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  for (int v = 1; v <= n; ++v) {
    const int limit = v <= 3 ? 3 : 2;
    if (deg[static_cast<std::size_t>(v)] > limit) return false;
  }
  return true;
}

void unicyclic_classification() {
  int total = 0;
  for (int n = 4; n <= 8; ++n) {
    for (const Graph& g : testing::unicyclic_triangle_graphs(n)) {
      ++total;
      // Unmixed: every minimal prime has the same dimension.
      const auto primes = minimal_primes(g);
      bool unmixed = true;
      for (const auto& p : primes) unmixed = unmixed && p.dimension == primes.front().dimension;
      expect_eq(paths_at_distinct_vertices(g), unmixed, "condition vs unmixedness for " + print_graph(g));
      expect_eq(unicyclic_decomposition(g).paths_at_distinct_vertices, unmixed, "library condition for " + print_graph(g));
    }
  }
  expect(total > 0, "no graphs generated");
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    double limit_seconds;
    std::function<void()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "worked example end to end", 5, worked_example},
      {2, "matching numbers equal m", 60, matching_numbers},
      {3, "cycles", 10, cycles},
      {4, "triangle with trees", 30, unicyclic},
      {5, "two triangles joined by bridges", 60, double_triangles},
      {6, "triangle chains", 120, chains},
      {7, "five-vertex example", 30, five_vertex_example},
      {8, "property suites", 600, property_suites},
      {9, "unicyclic classification, n <= 8", 60, unicyclic_classification},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      c.run();
    } catch (const Failure& e) {
      ok = false;
      detail = e.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && secs > c.limit_seconds) {
      ok = false;
      detail = "took longer than " + std::to_string(c.limit_seconds) + " s";
    }
    failures += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << " (" << c.name << ") "
              << std::fixed << std::setprecision(3) << secs << " s";
    if (!detail.empty()) std::cout << ": " << detail;
    std::cout << '\n';
  }
  return failures == 0 ? 0 : 1;
}
