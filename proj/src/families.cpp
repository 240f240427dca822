#include "bei/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace bei {

namespace {

struct KindName {
  FamilyKind kind;
  const char* name;
};

constexpr KindName kKindNames[] = {
    {FamilyKind::complete, "complete"},
    {FamilyKind::cycle, "cycle"},
    {FamilyKind::triangle_chain, "triangle_chain"},
    {FamilyKind::unicyclic_triangle, "unicyclic_triangle"},
    {FamilyKind::double_triangle_bridges, "double_triangle_bridges"},
    {FamilyKind::has_triangle, "has_triangle"},
    {FamilyKind::generic, "generic"},
};

bool contains(const Triangle& t, int v) { return t[0] == v || t[1] == v || t[2] == v; }

bool disjoint(const Triangle& a, const Triangle& b) {
  return !contains(b, a[0]) && !contains(b, a[1]) && !contains(b, a[2]);
}

TriangleAttachment attachment(const Triangle& t, int apex, int outside) {
  TriangleAttachment a;
  a.apex = apex;
  a.outside = outside;
  std::vector<int> rest;
  for (int v : t) {
    if (v != apex) rest.push_back(v);
  }
  a.left = rest[0];
  a.right = rest[1];
  return a;
}

bool is_unicyclic_with_triangle(const Graph& g) {
  return g.vertex_count() >= 4 && g.edge_count() == g.vertex_count() && g.is_connected() &&
         !triangles(g).empty();
}

}  // namespace

const char* to_string(FamilyKind kind) {
  for (const auto& kn : kKindNames) {
    if (kn.kind == kind) return kn.name;
  }
  return "generic";
}

FamilyKind parse_family_kind(const std::string& name) {
  for (const auto& kn : kKindNames) {
    if (name == kn.name) return kn.kind;
  }
  throw std::invalid_argument("unknown graph family '" + name + "'");
}

std::optional<TriangleAttachment> find_triangle_attachment(const Graph& g) {
  for (const Triangle& t : triangles(g)) {
    for (int apex : t) {
      for (int w : g.neighbors(apex)) {
        if (!contains(t, w)) return attachment(t, apex, w);
      }
    }
  }
  return std::nullopt;
}

std::optional<BridgePattern> find_double_triangle_bridges(const Graph& g) {
  auto tris = triangles(g);
  std::vector<Edge> sorted_edges = g.edges();
  std::sort(sorted_edges.begin(), sorted_edges.end());
  for (std::size_t a = 0; a < tris.size(); ++a) {
    for (std::size_t b = a + 1; b < tris.size(); ++b) {
      if (!disjoint(tris[a], tris[b])) continue;
      std::vector<Edge> bridges;
      for (const Edge& e : sorted_edges) {
        if ((contains(tris[a], e.u) && contains(tris[b], e.v)) ||
            (contains(tris[a], e.v) && contains(tris[b], e.u))) {
          bridges.push_back(e);
        }
      }
      if (bridges.size() < 2) continue;
      BridgePattern p;
      p.first = tris[a];
      p.second = tris[b];
      p.bridge1 = bridges[0];
      p.bridge2 = bridges[1];
      p.shared_endpoint = p.bridge1.u == p.bridge2.u || p.bridge1.u == p.bridge2.v ||
                          p.bridge1.v == p.bridge2.u || p.bridge1.v == p.bridge2.v;
      auto split = [&](const Edge& e, const Triangle& own) {
        return contains(own, e.u) ? std::pair{e.u, e.v} : std::pair{e.v, e.u};
      };
      auto [a1, o1] = split(p.bridge1, p.first);
      auto [a2, o2] = split(p.bridge2, p.second);
      p.first_block = attachment(p.first, a1, o1);
      p.second_block = attachment(p.second, a2, o2);
      return p;
    }
  }
  return std::nullopt;
}

std::optional<ChainPattern> find_triangle_chain(const Graph& g) {
  const int n = g.vertex_count();
  auto tris = triangles(g);
  const int k = static_cast<int>(tris.size());
  if (k < 2 || !g.is_connected()) return std::nullopt;
  std::vector<int> owner(static_cast<std::size_t>(n) + 1, -1);
  for (int t = 0; t < k; ++t) {
    for (int v : tris[static_cast<std::size_t>(t)]) {
      if (owner[static_cast<std::size_t>(v)] != -1) return std::nullopt;
      owner[static_cast<std::size_t>(v)] = t;
    }
  }
  if (g.edge_count() - n + 1 != k) return std::nullopt;
  for (int v = 1; v <= n; ++v) {
    if (owner[static_cast<std::size_t>(v)] == -1 && g.degree(v) != 2) return std::nullopt;
  }

  struct Link {
    int from, to;
    std::vector<int> path;
  };
  std::vector<Link> links;
  std::vector<int> link_degree(static_cast<std::size_t>(k), 0);
  for (int t = 0; t < k; ++t) {
    for (int v : tris[static_cast<std::size_t>(t)]) {
      for (int w : g.neighbors(v)) {
        if (owner[static_cast<std::size_t>(w)] == t) continue;
        std::vector<int> path{v};
        int prev = v, cur = w;
        while (owner[static_cast<std::size_t>(cur)] == -1) {
          path.push_back(cur);
          const auto& nb = g.neighbors(cur);
          int next = nb[0] == prev ? nb[1] : nb[0];
          prev = cur;
          cur = next;
          if (static_cast<int>(path.size()) > n) return std::nullopt;
        }
        path.push_back(cur);
        int other = owner[static_cast<std::size_t>(cur)];
        if (other == t) return std::nullopt;
        ++link_degree[static_cast<std::size_t>(t)];
        if (t < other) links.push_back({t, other, std::move(path)});
      }
    }
  }
  if (static_cast<int>(links.size()) != k - 1) return std::nullopt;
  for (int d : link_degree) {
    if (d < 1 || d > 2) return std::nullopt;
  }
  for (const Link& l : links) {
    if (l.path.size() < 3) return std::nullopt;
  }

  // Contracted graph is a path; walk it from the end with the smaller triangle.
  int start = -1;
  for (int t = 0; t < k && start < 0; ++t) {
    if (link_degree[static_cast<std::size_t>(t)] == 1) start = t;
  }
  ChainPattern p;
  std::vector<char> used(links.size(), 0);
  int cur = start;
  p.triangles.push_back(tris[static_cast<std::size_t>(cur)]);
  for (int step = 0; step < k - 1; ++step) {
    std::size_t li = 0;
    while (li < links.size() &&
           (used[li] || (links[li].from != cur && links[li].to != cur))) {
      ++li;
    }
    if (li == links.size()) return std::nullopt;
    used[li] = 1;
    std::vector<int> path = links[li].path;
    int next = links[li].to;
    if (links[li].from != cur) {
      std::reverse(path.begin(), path.end());
      next = links[li].from;
    }
    p.lengths.push_back(static_cast<int>(path.size()) - 1);
    p.paths.push_back(std::move(path));
    p.triangles.push_back(tris[static_cast<std::size_t>(next)]);
    cur = next;
  }
  for (std::size_t i = 1; i < p.paths.size(); ++i) {
    if (p.paths[i - 1].back() == p.paths[i].front()) p.shared_attachment = true;
  }
  return p;
}

std::optional<CyclePattern> find_cycle(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 3 || g.edge_count() != n || !g.is_connected()) return std::nullopt;
  for (int v = 1; v <= n; ++v) {
    if (g.degree(v) != 2) return std::nullopt;
  }
  CyclePattern c;
  int prev = 0, cur = 1;
  do {
    c.order.push_back(cur);
    const auto& nb = g.neighbors(cur);
    int next = nb[0] != prev ? nb[0] : nb[1];
    prev = cur;
    cur = next;
  } while (cur != 1);
  return c;
}

FamilyTag family_tag(const Graph& g, FamilyKind kind) {
  FamilyTag tag;
  tag.kind = kind;
  auto fail = [&] {
    return std::invalid_argument(std::string("graph is not in family ") + to_string(kind));
  };
  switch (kind) {
    case FamilyKind::complete:
      if (!g.is_complete()) throw fail();
      break;
    case FamilyKind::cycle:
      if (auto c = find_cycle(g)) tag.pattern = *c;
      else throw fail();
      break;
    case FamilyKind::triangle_chain:
      if (auto c = find_triangle_chain(g)) tag.pattern = *c;
      else throw fail();
      break;
    case FamilyKind::unicyclic_triangle:
      if (!is_unicyclic_with_triangle(g)) throw fail();
      tag.pattern = *find_triangle_attachment(g);
      break;
    case FamilyKind::double_triangle_bridges:
      if (auto b = find_double_triangle_bridges(g)) tag.pattern = *b;
      else throw fail();
      break;
    case FamilyKind::has_triangle: {
      auto a = find_triangle_attachment(g);
      if (g.vertex_count() < 4 || !a) throw fail();
      tag.pattern = *a;
      break;
    }
    case FamilyKind::generic:
      break;
  }
  return tag;
}

FamilyTag recognize_family(const Graph& g) {
  if (!g.is_connected()) throw GraphError("family recognition needs a connected graph");
  FamilyTag tag;
  if (g.is_complete()) {
    tag.kind = FamilyKind::complete;
  } else if (auto c = find_cycle(g)) {
    tag = {FamilyKind::cycle, *c};
  } else if (auto ch = find_triangle_chain(g)) {
    tag = {FamilyKind::triangle_chain, *ch};
  } else if (is_unicyclic_with_triangle(g)) {
    tag = {FamilyKind::unicyclic_triangle, *find_triangle_attachment(g)};
  } else if (auto b = find_double_triangle_bridges(g)) {
    tag = {FamilyKind::double_triangle_bridges, *b};
  } else if (auto a = find_triangle_attachment(g); a && g.vertex_count() >= 4) {
    tag = {FamilyKind::has_triangle, *a};
  }
  if (!embedding_holds(g, tag)) throw std::logic_error("family pattern does not embed in graph");
  return tag;
}

bool embedding_holds(const Graph& g, const FamilyTag& tag) {
  auto triangle_ok = [&](const Triangle& t) {
    return g.has_edge(t[0], t[1]) && g.has_edge(t[1], t[2]) && g.has_edge(t[0], t[2]);
  };
  auto attach_ok = [&](const TriangleAttachment& a) {
    return triangle_ok({a.apex, a.left, a.right}) && g.has_edge(a.apex, a.outside) &&
           a.outside != a.left && a.outside != a.right;
  };
  auto path_ok = [&](const std::vector<int>& p) {
    for (std::size_t i = 1; i < p.size(); ++i) {
      if (!g.has_edge(p[i - 1], p[i])) return false;
    }
    return true;
  };
  switch (tag.kind) {
    case FamilyKind::complete:
      return g.is_complete();
    case FamilyKind::cycle: {
      const auto& c = std::get<CyclePattern>(tag.pattern);
      auto closed = c.order;
      closed.push_back(c.order.front());
      return static_cast<int>(c.order.size()) == g.vertex_count() && path_ok(closed);
    }
    case FamilyKind::triangle_chain: {
      const auto& c = std::get<ChainPattern>(tag.pattern);
      for (const auto& t : c.triangles) {
        if (!triangle_ok(t)) return false;
      }
      for (std::size_t i = 0; i < c.paths.size(); ++i) {
        const auto& p = c.paths[i];
        if (!path_ok(p) || !contains(c.triangles[i], p.front()) ||
            !contains(c.triangles[i + 1], p.back())) {
          return false;
        }
      }
      return true;
    }
    case FamilyKind::unicyclic_triangle:
    case FamilyKind::has_triangle:
      return attach_ok(std::get<TriangleAttachment>(tag.pattern));
    case FamilyKind::double_triangle_bridges: {
      const auto& b = std::get<BridgePattern>(tag.pattern);
      return attach_ok(b.first_block) && attach_ok(b.second_block) &&
             contains(b.second, b.first_block.outside) && contains(b.first, b.second_block.outside);
    }
    case FamilyKind::generic:
      return true;
  }
  return false;
}

UnicyclicDecomposition unicyclic_decomposition(const Graph& g) {
  if (!is_unicyclic_with_triangle(g)) {
    throw std::invalid_argument("graph is not unicyclic with a triangle on at least 4 vertices");
  }
  UnicyclicDecomposition d;
  d.triangle = triangles(g).front();
  d.paths_at_distinct_vertices = true;
  for (int root : d.triangle) {
    int count = 0;
    for (int w : g.neighbors(root)) {
      if (contains(d.triangle, w)) continue;
      ++count;
      UnicyclicDecomposition::Branch br;
      br.root = root;
      br.vertices = {w};
      std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
      seen[static_cast<std::size_t>(root)] = seen[static_cast<std::size_t>(w)] = 1;
      for (std::size_t head = 0; head < br.vertices.size(); ++head) {
        for (int x : g.neighbors(br.vertices[head])) {
          if (!seen[static_cast<std::size_t>(x)]) {
            seen[static_cast<std::size_t>(x)] = 1;
            br.vertices.push_back(x);
          }
        }
      }
      // A tree whose vertices all have degree <= 2 is a path, and the root
      // meets it in a single edge, so the root is an end of root + branch.
      br.path_from_root = std::all_of(br.vertices.begin(), br.vertices.end(),
                                      [&](int x) { return g.degree(x) <= 2; });
      std::sort(br.vertices.begin(), br.vertices.end());
      if (!br.path_from_root) d.paths_at_distinct_vertices = false;
      d.branches.push_back(std::move(br));
    }
    if (count > 1) d.paths_at_distinct_vertices = false;
  }
  return d;
}

}  // namespace bei
