#pragma once

// Bounds on the arithmetical rank of J_G, explicit radical-generating sets,
// and their verification.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bei/complex.hpp"
#include "bei/edge_ideal.hpp"
#include "bei/families.hpp"

namespace bei {

struct ProvenanceEntry {
  std::string bound;   // "ara_lower", "ara_upper", "bar", ...
  std::string source;  // which result produced the value
  int value = 0;
};

struct BoundsReport {
  int n = 0;
  int m = 0;
  int l = 0;
  int bar = 0;
  int ara_c = 0;
  int graded_rank = 0;
  int ara_lower = 0;
  int ara_upper = 0;
  std::optional<int> ara_exact;
  int ht = 0;
  bool unmixed = false;
  /// ara = ht, known only when ara is.
  std::optional<bool> stci;
  FamilyTag family;
  std::optional<int> certificate_size;
  std::vector<ProvenanceEntry> provenance;
  std::vector<std::string> notes;
};

/// Throws GraphError unless G is connected with n >= 2.
BoundsReport bounds_report(const Graph& g, const MinimalPrimeOptions& opts = {});

struct Certificate {
  std::size_t nvars = 0;
  std::vector<Polynomial<Rational>> polynomials;
  FamilyTag family;
  std::string claim = "radical_generates";
  /// Role in the proof pattern -> vertex of G.
  std::vector<std::pair<std::string, int>> relabeling;
};

/// The polynomial list from the proof for `family`: generators with the
/// triangle blocks {f_ab, f_ac, f_ai + f_bc} substituted. Complete graphs use
/// a single triangle block (n >= 4); cycles and generic graphs the generators.
Certificate generate_certificate(const Graph& g, const FamilyTag& family);

/// Sums each group of generators (1-based positions in edge order); the sum
/// takes the place of the group's first member, other generators are kept.
Certificate sum_pairs_certificate(const Graph& g, const std::vector<std::vector<int>>& groups);

enum class VerifyStep { membership, spanning, radical };
const char* to_string(VerifyStep step);

struct Verdict {
  bool verified = false;
  /// Set when not verified; the step that rejected (or could not decide).
  std::optional<VerifyStep> failed_step;
  /// A resource cap or disabled method left the answer open.
  bool indeterminate = false;
  std::string message;
  /// 1-based index of the offending polynomial (membership) or generator
  /// (radical); 0 when not applicable.
  std::size_t index = 0;
  unsigned max_exponent = 0;
  bool used_rabinowitsch = false;
};

/// membership in J_G, then the spanning condition on Delta_{J_G}, then
/// rad(J_G) = rad(F). Coefficients are mapped into S.
template <class S>
Verdict verify_certificate(const Graph& g, const std::vector<Polynomial<Rational>>& polys,
                           const RadicalOptions& opts = {});

struct UnicyclicClassification {
  /// Each triangle vertex carries at most one tree and every tree is a path.
  bool paths_at_distinct_vertices = false;
  bool unmixed = false;
  /// unmixed, Cohen-Macaulay, set-theoretic complete intersection and the
  /// path condition, which are equivalent for this family.
  bool all_equivalent = false;
  int ht = 0;
  int ara = 0;
};

/// Throws std::invalid_argument unless G is unicyclic with a triangle, n >= 4;
/// throws std::logic_error if the structural and minimal-prime answers differ.
UnicyclicClassification classify_unicyclic(const Graph& g);

/// k triangles joined by paths of lengths r[0..k-2] (each >= 2). Triangle j
/// is {e, e+1, e+2} entered at e and left at e+2; C_1 = {1,2,3}.
Graph build_triangle_chain(int k, const std::vector<int>& r);

}  // namespace bei
