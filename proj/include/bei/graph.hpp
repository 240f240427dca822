#pragma once

// Simple undirected graphs on vertices 1..n.

#include <array>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bei {

/// Undirected edge, normalized so that u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted list of 1-based vertices.
using VertexSet = std::vector<int>;
using Triangle = std::array<int, 3>;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Edges keep their insertion order, which fixes the order of the edge
/// ideal's generators; equality compares edge sets.
class Graph {
 public:
  Graph() = default;
  Graph(int n, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(int a, int b) const { return index_.count(Edge(a, b)) != 0; }
  /// Position of the edge in edges(), or -1.
  int edge_index(int a, int b) const;
  bool is_connected() const;
  bool is_complete() const { return 2 * edge_count() == n_ * (n_ - 1); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.index_.size() == b.index_.size() &&
           std::equal(a.index_.begin(), a.index_.end(), b.index_.begin(),
                      [](const auto& x, const auto& y) { return x.first == y.first; });
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;  // index 0 unused
  std::map<Edge, int> index_;
};

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

/// Graph file: `n m` then m lines `i j`; `#` starts a comment.
Graph parse_graph(std::string_view text);
/// Canonical text form with edges sorted lexicographically.
std::string print_graph(const Graph& g);

/// Connected components of G minus S, each sorted, ordered by least vertex.
std::vector<VertexSet> components_after_deletion(const Graph& g, const VertexSet& removed);
int component_count(const Graph& g, const VertexSet& removed);

/// Minimum size of a vertex cut (n - 1 for complete graphs), via unit-capacity
/// max flow on the vertex-split digraph. Throws GraphError if disconnected.
int vertex_connectivity(const Graph& g);

/// All triangles {a < b < c}, lexicographically ordered.
std::vector<Triangle> triangles(const Graph& g);

}  // namespace bei
