#pragma once

// Recognition of the graph families that carry closed-form bounds on the
// arithmetical rank, together with the embedding that witnesses membership.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bei/graph.hpp"

namespace bei {

enum class FamilyKind {
  complete,
  cycle,
  triangle_chain,
  unicyclic_triangle,
  double_triangle_bridges,
  has_triangle,
  generic,
};

const char* to_string(FamilyKind kind);
/// Accepts the names printed by to_string; throws std::invalid_argument.
FamilyKind parse_family_kind(const std::string& name);

/// Triangle {apex, left, right} (left < right) plus an edge {apex, outside}
/// leaving it.
struct TriangleAttachment {
  int apex = 0;
  int left = 0;
  int right = 0;
  int outside = 0;
};

struct CyclePattern {
  std::vector<int> order;  // vertices in cyclic order, starting at 1
};

/// Two vertex-disjoint triangles joined by (at least) two edges.
struct BridgePattern {
  Triangle first{};
  Triangle second{};
  Edge bridge1, bridge2;
  bool shared_endpoint = false;
  TriangleAttachment first_block;   // first triangle, leaving along bridge1
  TriangleAttachment second_block;  // second triangle, leaving along bridge2
};

/// Triangles C_1..C_k joined consecutively by paths of length r_i >= 2.
/// paths[i] runs from a vertex of C_{i+1} to a vertex of C_{i+2}.
struct ChainPattern {
  std::vector<Triangle> triangles;
  std::vector<std::vector<int>> paths;
  std::vector<int> lengths;
  /// Some inner triangle enters and leaves through the same vertex.
  bool shared_attachment = false;
};

struct FamilyTag {
  FamilyKind kind = FamilyKind::generic;
  std::variant<std::monostate, CyclePattern, ChainPattern, TriangleAttachment, BridgePattern>
      pattern;
};

std::optional<TriangleAttachment> find_triangle_attachment(const Graph& g);
std::optional<BridgePattern> find_double_triangle_bridges(const Graph& g);
std::optional<ChainPattern> find_triangle_chain(const Graph& g);
std::optional<CyclePattern> find_cycle(const Graph& g);

/// Most specific family first: complete, cycle, triangle chain, unicyclic with
/// triangle, double triangle with bridges, has triangle (n >= 4), generic.
/// Throws GraphError for disconnected graphs.
FamilyTag recognize_family(const Graph& g);

/// Tag for a requested family; throws std::invalid_argument if G does not
/// contain the pattern.
FamilyTag family_tag(const Graph& g, FamilyKind kind);

/// Checks that every edge the pattern refers to exists in G.
bool embedding_holds(const Graph& g, const FamilyTag& tag);

/// Trees hanging off the triangle of a unicyclic graph, one per edge leaving
/// the triangle.
struct UnicyclicDecomposition {
  struct Branch {
    int root = 0;  // triangle vertex
    VertexSet vertices;
    bool path_from_root = false;
  };
  Triangle triangle{};
  std::vector<Branch> branches;
  /// Each triangle vertex carries at most one branch and every branch is a
  /// path starting at its triangle vertex.
  bool paths_at_distinct_vertices = false;
};

/// Throws std::invalid_argument unless G is unicyclic with a triangle, n >= 4.
UnicyclicDecomposition unicyclic_decomposition(const Graph& g);

}  // namespace bei
