#include <catch_amalgamated.hpp>

#include "bei/bounds.hpp"
#include "bei/json_io.hpp"
#include "support.hpp"

using namespace bei;

namespace {

Graph diamond() { return Graph(4, {{1, 2}, {2, 3}, {1, 4}, {3, 4}, {1, 3}}); }
Graph house() { return Graph(5, {{1, 2}, {2, 3}, {1, 3}, {2, 4}, {4, 5}, {3, 5}}); }
Graph paw() { return Graph(4, {{1, 2}, {1, 3}, {2, 3}, {1, 4}}); }
Graph disjoint_bridges() { return Graph(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}, {1, 4}, {3, 6}}); }
Graph shared_bridges() { return Graph(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}, {1, 4}, {3, 4}}); }

bool has_source(const BoundsReport& r, const std::string& bound, const std::string& source) {
  return std::any_of(r.provenance.begin(), r.provenance.end(),
                     [&](const ProvenanceEntry& p) { return p.bound == bound && p.source == source; });
}

Polynomial<Rational> f(int n, int i, int j) { return edge_binomial(n, std::min(i, j), std::max(i, j)); }

}  // namespace

TEST_CASE("report for the worked example") {
  const auto r = bounds_report(diamond());
  CHECK(r.n == 4);
  CHECK(r.m == 5);
  CHECK(r.l == 2);
  CHECK(r.bar == 5);
  CHECK(r.ara_c == 5);
  CHECK(r.graded_rank == 5);
  CHECK(r.ht == 3);
  CHECK_FALSE(r.unmixed);
  CHECK(r.ara_lower == 4);
  CHECK(r.ara_upper == 4);
  CHECK(r.ara_exact == 4);
  CHECK(r.stci == false);
  CHECK(r.certificate_size == 4);
  CHECK(has_source(r, "ara_lower", "vertex-connectivity"));
  CHECK(has_source(r, "ara_upper", "triangle-reduction"));
}

TEST_CASE("reports for the recognized families") {
  const auto e = bounds_report(house());
  CHECK(e.ara_lower == 5);
  CHECK(e.ara_upper == 5);
  CHECK(e.bar == 6);
  for (int n = 3; n <= 6; ++n) {
    const auto c = bounds_report(cycle_graph(n));
    CHECK(c.ara_exact == n);
    CHECK(has_source(c, "ara_lower", "vertex-connectivity"));
    CHECK(has_source(c, "ara_upper", "bar"));
  }
  const auto d = bounds_report(disjoint_bridges());
  CHECK(d.ara_lower == 6);
  CHECK(d.ara_upper == 6);
  CHECK(has_source(d, "ara_upper", "double-triangle-bridges"));
  const auto s = bounds_report(shared_bridges());
  CHECK(s.ara_lower == 5);
  CHECK(s.ara_upper == 6);
  CHECK_FALSE(s.ara_exact);
  CHECK_FALSE(s.stci);
  const auto k = bounds_report(complete_graph(5));
  CHECK(k.ara_exact == 7);
  CHECK(has_source(k, "ara_upper", "complete-graph-cited"));
  const auto chain = bounds_report(build_triangle_chain(3, {2, 2}));
  CHECK(chain.ht == 10);
  CHECK(chain.ara_exact == 10);
  CHECK(chain.stci == true);
  CHECK(chain.certificate_size == 10);
  CHECK_THROWS_AS(bounds_report(Graph(3, {{1, 2}})), GraphError);
}

TEST_CASE("report invariants on all small graphs", "[property]") {
  std::vector<Graph> graphs;
  for (int n = 2; n <= 5; ++n) {
    for (auto& g : testing::connected_graphs(n)) graphs.push_back(std::move(g));
  }
  std::mt19937 rng(23);
  for (int trial = 0; trial < 120; ++trial) graphs.push_back(testing::random_connected_graph(6 + trial % 2, 0.35, rng));
  for (const Graph& g : graphs) {
    const auto r = bounds_report(g);
    CHECK(r.bar == g.edge_count());
    CHECK(r.ara_c == r.bar);
    CHECK(r.ara_lower >= r.ht);
    CHECK(r.ara_lower >= r.n + r.l - 2);
    CHECK(r.ara_lower <= r.ara_upper);
    CHECK(r.ara_upper <= r.bar);
    CHECK(r.ara_exact.has_value() == (r.ara_lower == r.ara_upper));
    CHECK(r.certificate_size >= r.ara_upper);
  }
}

TEST_CASE("certificates from the proofs") {
  const auto p = generate_certificate(paw(), recognize_family(paw()));
  CHECK(p.polynomials == std::vector{f(4, 1, 2), f(4, 1, 3), f(4, 1, 4) + f(4, 2, 3)});

  const auto e = generate_certificate(diamond(), recognize_family(diamond()));
  CHECK(e.polynomials == std::vector{f(4, 1, 2), f(4, 2, 3) + f(4, 1, 4), f(4, 3, 4), f(4, 1, 3)});

  const auto x = generate_certificate(house(), recognize_family(house()));
  CHECK(x.polynomials == std::vector{f(5, 1, 2), f(5, 2, 3), f(5, 1, 3) + f(5, 2, 4), f(5, 4, 5), f(5, 3, 5)});

  const auto d = generate_certificate(disjoint_bridges(), recognize_family(disjoint_bridges()));
  const std::set<std::string> expected{to_string(f(6, 1, 2)), to_string(f(6, 1, 3)), to_string(f(6, 1, 4) + f(6, 2, 3)),
                                       to_string(f(6, 4, 6)), to_string(f(6, 5, 6)), to_string(f(6, 3, 6) + f(6, 4, 5))};
  std::set<std::string> got;
  for (const auto& q : d.polynomials) got.insert(to_string(q));
  CHECK(got == expected);

  const auto c = generate_certificate(build_triangle_chain(2, {2}), recognize_family(build_triangle_chain(2, {2})));
  std::set<std::string> chain;
  for (const auto& q : c.polynomials) chain.insert(to_string(q));
  CHECK(chain == std::set<std::string>{to_string(f(7, 1, 2) + f(7, 3, 4)), to_string(f(7, 4, 5) + f(7, 6, 7)),
                                       to_string(f(7, 1, 3)), to_string(f(7, 2, 3)), to_string(f(7, 5, 6)),
                                       to_string(f(7, 5, 7))});

  CHECK(generate_certificate(cycle_graph(5), recognize_family(cycle_graph(5))).polynomials.size() == 5);
  FamilyTag wrong{FamilyKind::unicyclic_triangle, TriangleAttachment{1, 2, 3, 5}};
  CHECK_THROWS_AS(generate_certificate(paw(), wrong), std::invalid_argument);
}

TEST_CASE("sum-pairs certificates") {
  const auto c = sum_pairs_certificate(diamond(), {{2, 3}});
  CHECK(c.polynomials == std::vector{f(4, 1, 2), f(4, 2, 3) + f(4, 1, 4), f(4, 3, 4), f(4, 1, 3)});
  CHECK(sum_pairs_certificate(diamond(), {}).polynomials.size() == 5);
  CHECK(sum_pairs_certificate(diamond(), {{5, 1, 2}}).polynomials.front() == f(4, 1, 2) + f(4, 2, 3) + f(4, 1, 3));
  CHECK_THROWS_AS(sum_pairs_certificate(diamond(), {{2, 6}}), std::invalid_argument);
  CHECK_THROWS_AS(sum_pairs_certificate(diamond(), {{2, 3}, {3, 4}}), std::invalid_argument);
}

TEST_CASE("generated certificates verify and are spanning", "[property]") {
  std::vector<Graph> graphs{paw(), diamond(), house(), disjoint_bridges(), shared_bridges(), build_triangle_chain(2, {2}),
                            Graph(6, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}}), complete_graph(4)};
  for (int n = 3; n <= 6; ++n) graphs.push_back(cycle_graph(n));
  for (const Graph& g : graphs) {
    const auto tag = recognize_family(g);
    const auto cert = generate_certificate(g, tag);
    const auto v = verify_certificate<Rational>(g, cert.polynomials);
    INFO(print_graph(g));
    CHECK(v.verified);
    CHECK(v.max_exponent <= 2);
    CHECK(is_spanning(cert.polynomials, build_complex_edge_ideal(g)));
  }
}

TEST_CASE("verification pipeline reports the failing step") {
  const auto j = build_edge_ideal(diamond());
  const auto& gens = j.ideal.generators();
  auto v = verify_certificate<Rational>(diamond(), {gens[0], gens[3], gens[4]});
  CHECK_FALSE(v.verified);
  CHECK(v.failed_step == VerifyStep::spanning);
  CHECK(v.message.find("spanning check failed") != std::string::npos);

  v = verify_certificate<Rational>(diamond(), gens);
  CHECK(v.verified);
  CHECK(v.max_exponent == 1);

  const auto outside = parse_rational_polynomial("x2*x8 - x4*x6", 8);
  v = verify_certificate<Rational>(diamond(), {gens[0], gens[1], gens[2], gens[3], gens[4], outside});
  CHECK(v.failed_step == VerifyStep::membership);
  CHECK(v.index == 6);

  // Spanning but not radical-generating: f1 + f5 and f2 + f4 merge two pairs
  // whose squares are not recovered.
  v = verify_certificate<Rational>(diamond(), {gens[0] + gens[4], gens[1] + gens[3], gens[2]});
  CHECK_FALSE(v.verified);
  CHECK(v.failed_step == VerifyStep::radical);

  RadicalOptions capped;
  capped.caps.max_pairs = 1;
  v = verify_certificate<Rational>(diamond(), {gens[0], gens[1] + gens[2], gens[3], gens[4]}, capped);
  CHECK(v.indeterminate);

  Fp::Modulus guard(32003);
  CHECK(verify_certificate<Fp>(diamond(), {gens[0], gens[1] + gens[2], gens[3], gens[4]}).verified);
}

TEST_CASE("unicyclic classification") {
  const auto p = classify_unicyclic(paw());
  CHECK(p.all_equivalent);
  CHECK(p.ht == 3);
  CHECK(p.ara == 3);
  const auto two = classify_unicyclic(Graph(5, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {1, 5}}));
  CHECK_FALSE(two.all_equivalent);
  CHECK(two.ara == 4);
  const auto three = classify_unicyclic(Graph(7, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 5}, {3, 6}, {6, 7}}));
  CHECK(three.all_equivalent);
  CHECK(three.ht == 6);
  CHECK_THROWS_AS(classify_unicyclic(cycle_graph(4)), std::invalid_argument);
}

TEST_CASE("path condition and unmixedness agree on unicyclic graphs", "[property]") {
  for (int n = 4; n <= 7; ++n) {
    for (const Graph& g : testing::unicyclic_triangle_graphs(n)) {
      const auto d = unicyclic_decomposition(g);
      CHECK(d.paths_at_distinct_vertices == height_and_unmixed(g).unmixed);
    }
  }
}

TEST_CASE("triangle chains") {
  const Graph g = build_triangle_chain(2, {2});
  CHECK(g.vertex_count() == 7);
  CHECK(g.edge_count() == 8);
  CHECK(height_and_unmixed(g).ht == 6);
  CHECK(build_triangle_chain(1, {}) == complete_graph(3));
  const Graph h = build_triangle_chain(3, {2, 3});
  CHECK(h.vertex_count() == 12);
  CHECK(height_and_unmixed(h).ht == 11);
  const auto tag = recognize_family(h);
  REQUIRE(tag.kind == FamilyKind::triangle_chain);
  CHECK(std::get<ChainPattern>(tag.pattern).lengths == std::vector<int>{2, 3});
  CHECK_THROWS_AS(build_triangle_chain(2, {1}), std::invalid_argument);
  CHECK_THROWS_AS(build_triangle_chain(3, {2}), std::invalid_argument);
  CHECK_THROWS_AS(build_triangle_chain(0, {}), std::invalid_argument);
}

TEST_CASE("report JSON follows the documented schema and round-trips") {
  const auto r = bounds_report(diamond());
  const nlohmann::json j = r;
  for (const char* key : {"n", "m", "l", "bar", "ara_c", "graded_rank", "ara_lower", "ara_upper", "ara_exact", "ht",
                          "unmixed", "family", "certificate_size", "provenance"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["provenance"][0].contains("theorem"));
  const BoundsReport back = j.get<BoundsReport>();
  CHECK(nlohmann::json(back) == j);
  const nlohmann::json open = bounds_report(shared_bridges());
  CHECK(open["ara_exact"].is_null());
  CHECK(nlohmann::json(open.get<BoundsReport>()) == open);
  CHECK(nlohmann::json(minimal_primes(diamond())[1]) == nlohmann::json::parse(R"({"S":[1,3],"c":2,"dimension":4})"));
}
