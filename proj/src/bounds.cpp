#include "bei/bounds.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace bei {

namespace {

std::vector<TriangleAttachment> chain_blocks(const ChainPattern& c) {
  std::vector<TriangleAttachment> blocks;
  auto block = [](const Triangle& t, int apex, int outside) {
    TriangleAttachment a{apex, 0, 0, outside};
    std::vector<int> rest;
    for (int v : t) {
      if (v != apex) rest.push_back(v);
    }
    a.left = rest[0];
    a.right = rest[1];
    return a;
  };
  // The first triangle merges along the first edge of the path leaving it;
  // every later triangle along the last edge of the path entering it.
  const auto& first = c.paths.front();
  blocks.push_back(block(c.triangles.front(), first[0], first[1]));
  for (std::size_t j = 1; j < c.triangles.size(); ++j) {
    const auto& in = c.paths[j - 1];
    blocks.push_back(block(c.triangles[j], in.back(), in[in.size() - 2]));
  }
  return blocks;
}

/// Generators of J_G with each block's three generators replaced by
/// f_ab, f_ac and f_ai + f_bc, keeping edge order.
std::vector<Polynomial<Rational>> apply_blocks(const Graph& g, const std::vector<TriangleAttachment>& blocks) {
  const int n = g.vertex_count();
  enum class Role { plain, merged_head, merged_tail };
  std::vector<Role> role(static_cast<std::size_t>(g.edge_count()), Role::plain);
  std::vector<int> partner(role.size(), -1);
  std::set<int> touched;
  for (const auto& b : blocks) {
    const int e1 = g.edge_index(b.apex, b.outside);
    const int e2 = g.edge_index(b.left, b.right);
    const int k1 = g.edge_index(b.apex, b.left);
    const int k2 = g.edge_index(b.apex, b.right);
    if (e1 < 0 || e2 < 0 || k1 < 0 || k2 < 0) throw std::invalid_argument("triangle block does not embed in graph");
    for (int e : {e1, e2, k1, k2}) {
      if (!touched.insert(e).second) throw std::logic_error("triangle blocks share an edge");
    }
    const int head = std::min(e1, e2), tail = std::max(e1, e2);
    role[static_cast<std::size_t>(head)] = Role::merged_head;
    role[static_cast<std::size_t>(tail)] = Role::merged_tail;
    partner[static_cast<std::size_t>(head)] = tail;
  }
  const auto& es = g.edges();
  std::vector<Polynomial<Rational>> out;
  for (std::size_t e = 0; e < es.size(); ++e) {
    if (role[e] == Role::merged_tail) continue;
    Polynomial<Rational> f = edge_binomial(n, es[e].u, es[e].v);
    if (role[e] == Role::merged_head) {
      const Edge& o = es[static_cast<std::size_t>(partner[e])];
      f += edge_binomial(n, o.u, o.v);
    }
    out.push_back(std::move(f));
  }
  return out;
}

void add_block_labels(Certificate& c, const std::string& prefix, const TriangleAttachment& b) {
  c.relabeling.emplace_back(prefix + "apex", b.apex);
  c.relabeling.emplace_back(prefix + "left", b.left);
  c.relabeling.emplace_back(prefix + "right", b.right);
  c.relabeling.emplace_back(prefix + "outside", b.outside);
}

std::vector<Polynomial<Rational>> generators(const Graph& g) {
  return build_edge_ideal<Rational>(g).ideal.generators();
}

void record_best(BoundsReport& r, const std::string& bound, int best,
                 const std::vector<std::pair<std::string, int>>& candidates) {
  for (const auto& [source, value] : candidates) {
    if (value == best) r.provenance.push_back({bound, source, value});
  }
}

}  // namespace

Certificate generate_certificate(const Graph& g, const FamilyTag& family) {
  if (!embedding_holds(g, family)) throw std::invalid_argument("family pattern does not embed in graph");
  Certificate c;
  c.nvars = static_cast<std::size_t>(2 * g.vertex_count());
  c.family = family;
  switch (family.kind) {
    case FamilyKind::generic:
    case FamilyKind::cycle:
      c.polynomials = generators(g);
      break;
    case FamilyKind::complete: {
      auto a = find_triangle_attachment(g);
      if (g.vertex_count() >= 4 && a) {
        add_block_labels(c, "", *a);
        c.polynomials = apply_blocks(g, {*a});
      } else {
        c.polynomials = generators(g);
      }
      break;
    }
    case FamilyKind::has_triangle:
    case FamilyKind::unicyclic_triangle: {
      const auto& a = std::get<TriangleAttachment>(family.pattern);
      add_block_labels(c, "", a);
      c.polynomials = apply_blocks(g, {a});
      break;
    }
    case FamilyKind::double_triangle_bridges: {
      const auto& b = std::get<BridgePattern>(family.pattern);
      add_block_labels(c, "first.", b.first_block);
      add_block_labels(c, "second.", b.second_block);
      c.polynomials = apply_blocks(g, {b.first_block, b.second_block});
      break;
    }
    case FamilyKind::triangle_chain: {
      auto blocks = chain_blocks(std::get<ChainPattern>(family.pattern));
      for (std::size_t j = 0; j < blocks.size(); ++j) {
        add_block_labels(c, "C" + std::to_string(j + 1) + ".", blocks[j]);
      }
      c.polynomials = apply_blocks(g, blocks);
      break;
    }
  }
  return c;
}

Certificate sum_pairs_certificate(const Graph& g, const std::vector<std::vector<int>>& groups) {
  const int m = g.edge_count();
  std::vector<int> group_of(static_cast<std::size_t>(m) + 1, -1);
  for (std::size_t k = 0; k < groups.size(); ++k) {
    if (groups[k].empty()) throw std::invalid_argument("empty generator group");
    for (int i : groups[k]) {
      if (i < 1 || i > m) {
        throw std::invalid_argument("generator index " + std::to_string(i) + " outside 1.." + std::to_string(m));
      }
      if (group_of[static_cast<std::size_t>(i)] != -1) {
        throw std::invalid_argument("generator " + std::to_string(i) + " appears in two groups");
      }
      group_of[static_cast<std::size_t>(i)] = static_cast<int>(k);
    }
  }
  const auto gens = generators(g);
  Certificate c;
  c.nvars = static_cast<std::size_t>(2 * g.vertex_count());
  for (int i = 1; i <= m; ++i) {
    const int k = group_of[static_cast<std::size_t>(i)];
    if (k < 0) {
      c.polynomials.push_back(gens[static_cast<std::size_t>(i - 1)]);
      continue;
    }
    const auto& members = groups[static_cast<std::size_t>(k)];
    if (*std::min_element(members.begin(), members.end()) != i) continue;
    Polynomial<Rational> sum(c.nvars);
    for (int j : members) sum += gens[static_cast<std::size_t>(j - 1)];
    c.polynomials.push_back(std::move(sum));
  }
  return c;
}

BoundsReport bounds_report(const Graph& g, const MinimalPrimeOptions& opts) {
  if (g.vertex_count() < 2 || !g.is_connected()) {
    throw GraphError("bounds need a connected graph with n >= 2");
  }
  BoundsReport r;
  r.n = g.vertex_count();
  r.m = g.edge_count();
  r.l = vertex_connectivity(g);
  r.bar = r.ara_c = r.graded_rank = r.m;
  r.provenance.push_back({"bar", "indispensable-generators", r.m});
  r.provenance.push_back({"ara_c", "complex-matching", r.m});
  r.provenance.push_back({"graded_rank", "graded-spanning", r.m});
  const HeightReport h = height_and_unmixed(g, opts);
  r.ht = h.ht;
  r.unmixed = h.unmixed;
  r.family = recognize_family(g);

  std::vector<std::pair<std::string, int>> lower{{"height", r.ht}, {"vertex-connectivity", r.n + r.l - 2}};
  std::vector<std::pair<std::string, int>> upper{{"bar", r.m}};
  if (r.n >= 4 && find_triangle_attachment(g)) upper.emplace_back("triangle-reduction", r.m - 1);
  if (find_double_triangle_bridges(g)) upper.emplace_back("double-triangle-bridges", r.m - 2);
  switch (r.family.kind) {
    case FamilyKind::cycle:
      upper.emplace_back("cycle", r.n);
      break;
    case FamilyKind::unicyclic_triangle:
      upper.emplace_back("unicyclic-triangle", r.n - 1);
      break;
    case FamilyKind::triangle_chain: {
      const auto& c = std::get<ChainPattern>(r.family.pattern);
      const int k = static_cast<int>(c.triangles.size());
      upper.emplace_back("triangle-chain", 2 * k + std::accumulate(c.lengths.begin(), c.lengths.end(), 0));
      if (c.shared_attachment) {
        r.notes.push_back("a middle triangle of the chain is entered and left through the same vertex");
      }
      break;
    }
    case FamilyKind::complete:
      upper.emplace_back("complete-graph-cited", 2 * r.n - 3);
      break;
    default:
      break;
  }
  auto by_value = [](const auto& a, const auto& b) { return a.second < b.second; };
  r.ara_lower = std::max_element(lower.begin(), lower.end(), by_value)->second;
  r.ara_upper = std::min_element(upper.begin(), upper.end(), by_value)->second;
  if (r.ara_lower > r.ara_upper) {
    throw std::logic_error("lower bound " + std::to_string(r.ara_lower) + " exceeds upper bound " +
                           std::to_string(r.ara_upper));
  }
  record_best(r, "ara_lower", r.ara_lower, lower);
  record_best(r, "ara_upper", r.ara_upper, upper);
  if (r.ara_lower == r.ara_upper) {
    r.ara_exact = r.ara_lower;
    r.stci = *r.ara_exact == r.ht;
  }
  if (r.family.kind == FamilyKind::complete && r.n >= 4) {
    r.notes.push_back("the complete-graph value is cited, not certified here");
  }
  r.certificate_size = static_cast<int>(generate_certificate(g, r.family).polynomials.size());
  return r;
}

const char* to_string(VerifyStep step) {
  switch (step) {
    case VerifyStep::membership:
      return "membership";
    case VerifyStep::spanning:
      return "spanning";
    case VerifyStep::radical:
      return "radical";
  }
  return "unknown";
}

template <class S>
Verdict verify_certificate(const Graph& g, const std::vector<Polynomial<Rational>>& polys,
                           const RadicalOptions& opts) {
  Verdict v;
  const auto N = static_cast<std::size_t>(2 * g.vertex_count());
  if (polys.empty()) {
    v.failed_step = VerifyStep::spanning;
    v.message = "spanning check failed: empty certificate";
    return v;
  }
  std::vector<Polynomial<S>> fs;
  for (const auto& p : polys) {
    if (p.nvars() != N) {
      throw DimensionError("certificate polynomial has " + std::to_string(p.nvars()) + " variables, expected " +
                           std::to_string(N));
    }
    fs.push_back(p.template cast<S>().with_order(opts.order));
  }
  const auto j = build_edge_ideal<S>(g, opts.order);
  VerifyStep step = VerifyStep::membership;
  try {
    const auto gb = buchberger(j.ideal, opts.order, opts.caps);
    for (std::size_t k = 0; k < fs.size(); ++k) {
      if (!ideal_member(fs[k], gb)) {
        v.failed_step = step;
        v.index = k + 1;
        v.message = "membership check failed: polynomial " + std::to_string(k + 1) + " is not in J_G";
        return v;
      }
    }
    step = VerifyStep::spanning;
    if (!is_spanning(fs, build_complex_edge_ideal(g))) {
      v.failed_step = step;
      v.message = "spanning check failed: some support of T_min occurs in no polynomial";
      return v;
    }
    step = VerifyStep::radical;
    const auto cmp = compare_radicals(j.ideal, fs, opts);
    v.max_exponent = cmp.max_exponent;
    v.used_rabinowitsch = cmp.used_rabinowitsch;
    if (!cmp.equal) {
      v.failed_step = step;
      v.index = cmp.into_f.size();
      v.message = "radical check failed: generator " + std::to_string(v.index) +
                  " of J_G is not in the radical of the certificate";
      return v;
    }
  } catch (const ResourceCapExceeded& e) {
    v.failed_step = step;
    v.indeterminate = true;
    v.message = std::string(to_string(step)) + " check undecided: " + e.what();
    return v;
  } catch (const IndeterminateResult& e) {
    v.failed_step = step;
    v.indeterminate = true;
    v.message = std::string(to_string(step)) + " check undecided: " + e.what();
    return v;
  }
  v.verified = true;
  v.message = "verified";
  return v;
}

template Verdict verify_certificate<Rational>(const Graph&, const std::vector<Polynomial<Rational>>&,
                                              const RadicalOptions&);
template Verdict verify_certificate<Fp>(const Graph&, const std::vector<Polynomial<Rational>>&,
                                        const RadicalOptions&);

UnicyclicClassification classify_unicyclic(const Graph& g) {
  const UnicyclicDecomposition d = unicyclic_decomposition(g);
  const HeightReport h = height_and_unmixed(g);
  UnicyclicClassification c;
  c.paths_at_distinct_vertices = d.paths_at_distinct_vertices;
  c.unmixed = h.unmixed;
  if (c.unmixed != c.paths_at_distinct_vertices) {
    throw std::logic_error("unmixedness and the path condition disagree");
  }
  c.all_equivalent = c.unmixed;
  c.ht = h.ht;
  c.ara = g.vertex_count() - 1;
  if (c.all_equivalent && c.ht != c.ara) throw std::logic_error("unmixed unicyclic graph with ht != n - 1");
  return c;
}

Graph build_triangle_chain(int k, const std::vector<int>& r) {
  if (k < 1) throw std::invalid_argument("a triangle chain needs k >= 1");
  if (static_cast<int>(r.size()) != k - 1) {
    throw std::invalid_argument("expected " + std::to_string(k - 1) + " path lengths, got " + std::to_string(r.size()));
  }
  for (int len : r) {
    if (len < 2) throw std::invalid_argument("path lengths must be at least 2");
  }
  std::vector<Edge> edges;
  int e = 1;
  for (int j = 0; j < k; ++j) {
    edges.emplace_back(e, e + 1);
    edges.emplace_back(e + 1, e + 2);
    edges.emplace_back(e, e + 2);
    if (j + 1 == k) break;
    const int start = e + 2;
    for (int s = 0; s < r[static_cast<std::size_t>(j)]; ++s) edges.emplace_back(start + s, start + s + 1);
    e = start + r[static_cast<std::size_t>(j)];
  }
  return Graph(e + 2, edges);
}

}  // namespace bei
