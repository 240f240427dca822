#include "bei/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>

#include "bei/io.hpp"

namespace bei {

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n), adj_(static_cast<std::size_t>(n) + 1) {
  if (n < 1) throw GraphError("a graph needs at least one vertex");
  for (const Edge& e : edges) {
    if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u));
    if (e.u < 1 || e.v > n) {
      throw GraphError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       "} outside 1.." + std::to_string(n));
    }
    if (!index_.emplace(e, static_cast<int>(edges_.size())).second) {
      throw GraphError("duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    }
    edges_.push_back(e);
    adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

int Graph::edge_index(int a, int b) const {
  auto it = index_.find(Edge(a, b));
  return it == index_.end() ? -1 : it->second;
}

bool Graph::is_connected() const { return component_count(*this, {}) == 1; }

Graph complete_graph(int n) {
  std::vector<Edge> es;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) es.emplace_back(i, j);
  }
  return Graph(n, es);
}

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("a cycle needs at least three vertices");
  std::vector<Edge> es;
  for (int i = 1; i < n; ++i) es.emplace_back(i, i + 1);
  es.emplace_back(1, n);
  return Graph(n, es);
}

Graph path_graph(int n) {
  std::vector<Edge> es;
  for (int i = 1; i < n; ++i) es.emplace_back(i, i + 1);
  return Graph(n, es);
}

Graph parse_graph(std::string_view text) {
  using Kind = ParseError::Kind;
  auto lines = data_lines(text);
  if (lines.empty()) throw ParseError(Kind::malformed_line, 1, "missing 'n m' header");

  auto read_pair = [](const DataLine& line, long long& a, long long& b) {
    std::istringstream in(line.text);
    std::string extra;
    if (!(in >> a >> b) || (in >> extra)) {
      throw ParseError(Kind::malformed_line, line.number, "expected two integers");
    }
  };

  long long n = 0, m = 0;
  read_pair(lines.front(), n, m);
  if (n < 1 || m < 0) {
    throw ParseError(Kind::malformed_line, lines.front().number, "need n >= 1 and m >= 0");
  }
  if (static_cast<long long>(lines.size()) - 1 != m) {
    throw ParseError(Kind::count_mismatch, lines.back().number,
                     "header announces " + std::to_string(m) + " edges, found " +
                         std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  std::map<Edge, std::size_t> seen;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    long long a = 0, b = 0;
    read_pair(lines[k], a, b);
    if (a < 1 || a > n || b < 1 || b > n) {
      throw ParseError(Kind::vertex_out_of_range, lines[k].number,
                       "vertex outside 1.." + std::to_string(n));
    }
    if (a == b) throw ParseError(Kind::loop, lines[k].number, "loop at vertex " + std::to_string(a));
    Edge e(static_cast<int>(a), static_cast<int>(b));
    if (auto [it, fresh] = seen.emplace(e, lines[k].number); !fresh) {
      throw ParseError(Kind::duplicate_edge, lines[k].number,
                       "edge repeats line " + std::to_string(it->second));
    }
    edges.push_back(e);
  }
  return Graph(static_cast<int>(n), edges);
}

std::string print_graph(const Graph& g) {
  std::vector<Edge> es = g.edges();
  std::sort(es.begin(), es.end());
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(es.size()) + "\n";
  for (const Edge& e : es) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

std::vector<VertexSet> components_after_deletion(const Graph& g, const VertexSet& removed) {
  const int n = g.vertex_count();
  std::vector<char> gone(static_cast<std::size_t>(n) + 1, 0);
  for (int v : removed) {
    if (v < 1 || v > n) throw GraphError("vertex " + std::to_string(v) + " not in the graph");
    gone[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<VertexSet> blocks;
  std::vector<char> seen(gone);
  for (int s = 1; s <= n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    VertexSet block{s};
    seen[static_cast<std::size_t>(s)] = 1;
    for (std::size_t head = 0; head < block.size(); ++head) {
      for (int w : g.neighbors(block[head])) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          block.push_back(w);
        }
      }
    }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  return blocks;
}

int component_count(const Graph& g, const VertexSet& removed) {
  return static_cast<int>(components_after_deletion(g, removed).size());
}

namespace {

/// Maximum number of internally vertex-disjoint s-t paths.
int local_connectivity(const Graph& g, int s, int t) {
  const int n = g.vertex_count();
  const int inf = std::numeric_limits<int>::max() / 2;
  // node 2(v-1) = v_in, 2(v-1)+1 = v_out
  struct Arc {
    int to, cap, rev;
  };
  std::vector<std::vector<Arc>> net(static_cast<std::size_t>(2 * n));
  auto add = [&](int a, int b, int cap) {
    net[static_cast<std::size_t>(a)].push_back({b, cap, static_cast<int>(net[static_cast<std::size_t>(b)].size())});
    net[static_cast<std::size_t>(b)].push_back({a, 0, static_cast<int>(net[static_cast<std::size_t>(a)].size()) - 1});
  };
  for (int v = 1; v <= n; ++v) add(2 * (v - 1), 2 * (v - 1) + 1, (v == s || v == t) ? inf : 1);
  for (const Edge& e : g.edges()) {
    add(2 * (e.u - 1) + 1, 2 * (e.v - 1), inf);
    add(2 * (e.v - 1) + 1, 2 * (e.u - 1), inf);
  }
  const int source = 2 * (s - 1) + 1;
  const int sink = 2 * (t - 1);
  int flow = 0;
  while (true) {
    std::vector<std::pair<int, int>> parent(net.size(), {-1, -1});
    std::queue<int> q;
    q.push(source);
    parent[static_cast<std::size_t>(source)] = {source, -1};
    while (!q.empty() && parent[static_cast<std::size_t>(sink)].first < 0) {
      int a = q.front();
      q.pop();
      for (int k = 0; k < static_cast<int>(net[static_cast<std::size_t>(a)].size()); ++k) {
        const Arc& arc = net[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)];
        if (arc.cap > 0 && parent[static_cast<std::size_t>(arc.to)].first < 0) {
          parent[static_cast<std::size_t>(arc.to)] = {a, k};
          q.push(arc.to);
        }
      }
    }
    if (parent[static_cast<std::size_t>(sink)].first < 0) return flow;
    for (int b = sink; b != source;) {
      auto [a, k] = parent[static_cast<std::size_t>(b)];
      Arc& arc = net[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)];
      arc.cap -= 1;
      net[static_cast<std::size_t>(b)][static_cast<std::size_t>(arc.rev)].cap += 1;
      b = a;
    }
    ++flow;
  }
}

}  // namespace

int vertex_connectivity(const Graph& g) {
  if (!g.is_connected()) throw GraphError("vertex connectivity needs a connected graph");
  const int n = g.vertex_count();
  if (g.is_complete()) return n - 1;
  int best = n - 1;
  for (int s = 1; s <= n; ++s) {
    for (int t = s + 1; t <= n; ++t) {
      if (!g.has_edge(s, t)) best = std::min(best, local_connectivity(g, s, t));
    }
  }
  return best;
}

std::vector<Triangle> triangles(const Graph& g) {
  std::vector<Triangle> out;
  for (int a = 1; a <= g.vertex_count(); ++a) {
    for (int b : g.neighbors(a)) {
      if (b <= a) continue;
      for (int c : g.neighbors(b)) {
        if (c > b && g.has_edge(a, c)) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

}  // namespace bei
