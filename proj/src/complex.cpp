#include "bei/complex.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "bei/edge_ideal.hpp"
#include "bei/io.hpp"

namespace bei {

namespace {

bool is_subset(const Face& a, const Face& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<Face> maximal_faces(std::vector<Face> faces, std::size_t nverts) {
  std::vector<char> seen(nverts, 0);
  for (auto& f : faces) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (int v : f) seen[static_cast<std::size_t>(v)] = 1;
  }
  for (std::size_t v = 0; v < nverts; ++v) {
    if (!seen[v]) faces.push_back({static_cast<int>(v)});
  }
  // Larger faces first so a single pass keeps only maximal ones.
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  std::vector<Face> out;
  for (auto& f : faces) {
    if (f.empty()) continue;
    bool covered = std::any_of(out.begin(), out.end(), [&](const Face& g) { return is_subset(f, g); });
    if (!covered) out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

using Mask = std::uint64_t;

/// One connected component with local vertex numbering.
struct Component {
  std::vector<int> vertices;   // global indices, ascending
  std::vector<Mask> facets;    // local masks
};

std::vector<Component> split_components(const SimplicialComplex& delta, const ComplexLimits& limits) {
  std::vector<Component> out;
  for (const auto& verts : delta.connected_components()) {
    if (verts.size() > limits.max_component_vertices || verts.size() > 63) {
      throw ResourceCapExceeded("complex component vertices", limits.max_component_vertices);
    }
    Component c;
    c.vertices = verts;
    std::unordered_map<int, int> local;
    for (std::size_t k = 0; k < verts.size(); ++k) local[verts[k]] = static_cast<int>(k);
    for (const Face& f : delta.facets()) {
      if (!local.count(f.front())) continue;
      Mask m = 0;
      for (int v : f) m |= Mask{1} << local.at(v);
      c.facets.push_back(m);
    }
    out.push_back(std::move(c));
  }
  return out;
}

/// Faces of the component whose dimension is in q, bucketed by least vertex.
std::vector<std::vector<Mask>> q_faces(const Component& c, const std::set<int>& q) {
  std::unordered_set<Mask> all;
  for (Mask f : c.facets) {
    const int size = std::popcount(f);
    bool useful = std::any_of(q.begin(), q.end(), [&](int d) { return d >= 0 && d + 1 <= size; });
    if (!useful) continue;
    for (Mask s = f;; s = (s - 1) & f) {
      if (s != 0 && q.count(std::popcount(s) - 1)) all.insert(s);
      if (s == 0) break;
    }
  }
  std::vector<std::vector<Mask>> by_min(c.vertices.size());
  for (Mask s : all) by_min[static_cast<std::size_t>(std::countr_zero(s))].push_back(s);
  for (auto& b : by_min) std::sort(b.begin(), b.end());
  return by_min;
}

struct Score {
  int support = 0;
  int count = 0;
  bool better_than(const Score& o) const {
    return support != o.support ? support > o.support : count < o.count;
  }
};

class MatchingSearch {
 public:
  explicit MatchingSearch(std::vector<std::vector<Mask>> faces) : faces_(std::move(faces)) {}

  Score solve(Mask remaining) {
    if (remaining == 0) return {};
    if (auto it = memo_.find(remaining); it != memo_.end()) return it->second.first;
    const int v = std::countr_zero(remaining);
    Mask choice = 0;
    Score best = solve(remaining & (remaining - 1));
    for (Mask f : faces_[static_cast<std::size_t>(v)]) {
      if ((f & ~remaining) != 0) continue;
      Score s = solve(remaining & ~f);
      s.support += std::popcount(f);
      s.count += 1;
      if (s.better_than(best)) {
        best = s;
        choice = f;
      }
    }
    memo_.emplace(remaining, std::pair{best, choice});
    return best;
  }

  std::vector<Mask> witness(Mask remaining) {
    std::vector<Mask> out;
    while (remaining != 0) {
      solve(remaining);
      Mask f = memo_.at(remaining).second;
      if (f == 0) {
        remaining &= remaining - 1;
      } else {
        out.push_back(f);
        remaining &= ~f;
      }
    }
    return out;
  }

 private:
  std::vector<std::vector<Mask>> faces_;
  std::unordered_map<Mask, std::pair<Score, Mask>> memo_;
};

/// Least number of the given faces (bucketed by vertex) covering all of `all`.
int min_cover(const std::vector<std::vector<Mask>>& containing, Mask all) {
  std::unordered_map<Mask, int> memo;
  auto rec = [&](auto&& self, Mask remaining) -> int {
    if (remaining == 0) return 0;
    if (auto it = memo.find(remaining); it != memo.end()) return it->second;
    const int v = std::countr_zero(remaining);
    int best = std::popcount(remaining);
    for (Mask f : containing[static_cast<std::size_t>(v)]) {
      best = std::min(best, 1 + self(self, remaining & ~f));
    }
    memo.emplace(remaining, best);
    return best;
  };
  return rec(rec, all);
}

Mask full_mask(std::size_t n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<VertexSet> vertices, const std::vector<Face>& faces)
    : vertices_(std::move(vertices)) {
  for (const Face& f : faces) {
    for (int v : f) {
      if (v < 0 || static_cast<std::size_t>(v) >= vertices_.size()) {
        throw std::invalid_argument("face refers to vertex " + std::to_string(v + 1) + " of " +
                                    std::to_string(vertices_.size()));
      }
    }
  }
  facets_ = maximal_faces(faces, vertices_.size());
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const Face& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

bool SimplicialComplex::is_face(const Face& f) const {
  Face sorted = f;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty()) return true;
  return std::any_of(facets_.begin(), facets_.end(), [&](const Face& g) { return is_subset(sorted, g); });
}

std::optional<int> SimplicialComplex::vertex_index(const VertexSet& support) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), support);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<int>(it - vertices_.begin());
}

std::vector<std::vector<int>> SimplicialComplex::connected_components() const {
  std::vector<int> parent(vertices_.size());
  for (std::size_t v = 0; v < parent.size(); ++v) parent[v] = static_cast<int>(v);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    }
    return v;
  };
  for (const Face& f : facets_) {
    for (int v : f) parent[static_cast<std::size_t>(find(v))] = find(f.front());
  }
  std::map<int, std::vector<int>> groups;
  for (std::size_t v = 0; v < parent.size(); ++v) groups[find(static_cast<int>(v))].push_back(static_cast<int>(v));
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex SimplicialComplex::induced(const std::vector<int>& vertex_indices) const {
  std::map<int, int> relabel;
  std::vector<VertexSet> verts;
  for (int v : vertex_indices) {
    if (relabel.emplace(v, static_cast<int>(verts.size())).second) {
      verts.push_back(vertices_.at(static_cast<std::size_t>(v)));
    }
  }
  std::vector<Face> faces;
  for (const Face& f : facets_) {
    Face g;
    for (int v : f) {
      if (auto it = relabel.find(v); it != relabel.end()) g.push_back(it->second);
    }
    if (!g.empty()) faces.push_back(std::move(g));
  }
  return SimplicialComplex(std::move(verts), faces);
}

std::size_t QMatching::support_size() const {
  std::size_t s = 0;
  for (const Face& f : simplices) s += f.size();
  return s;
}

std::set<int> omega(const SimplicialComplex& delta) {
  std::set<int> q;
  for (int d = 0; d <= delta.dimension(); ++d) q.insert(d);
  return q;
}

DeltaResult delta_q(const SimplicialComplex& delta, const std::set<int>& q, const ComplexLimits& limits) {
  DeltaResult result;
  result.witness.q = q;
  for (const Component& c : split_components(delta, limits)) {
    MatchingSearch search(q_faces(c, q));
    const Mask all = full_mask(c.vertices.size());
    result.value += search.solve(all).count;
    for (Mask f : search.witness(all)) {
      Face face;
      for (std::size_t k = 0; k < c.vertices.size(); ++k) {
        if (f >> k & 1) face.push_back(c.vertices[k]);
      }
      result.witness.simplices.push_back(std::move(face));
    }
  }
  std::sort(result.witness.simplices.begin(), result.witness.simplices.end());
  return result;
}

CoverNumbers b_and_r(const SimplicialComplex& delta, const ComplexLimits& limits) {
  if (delta.vertex_count() == 0) throw std::invalid_argument("b and r need a nonempty complex");
  CoverNumbers out;
  for (const Component& c : split_components(delta, limits)) {
    const std::size_t k = c.vertices.size();
    std::vector<std::vector<Mask>> small(k), any(k);
    for (Mask f : c.facets) {
      for (std::size_t v = 0; v < k; ++v) {
        if (!(f >> v & 1)) continue;
        any[v].push_back(f);
        small[v].push_back(Mask{1} << v);
        for (std::size_t w = 0; w < k; ++w) {
          if (w != v && (f >> w & 1)) small[v].push_back((Mask{1} << v) | (Mask{1} << w));
        }
      }
    }
    for (auto* lists : {&small, &any}) {
      for (auto& l : *lists) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
      }
    }
    out.b += min_cover(small, full_mask(k));
    out.r += min_cover(any, full_mask(k));
  }
  const int via_b = delta_q(delta, {0, 1}, limits).value;
  const int via_r = delta_q(delta, omega(delta), limits).value;
  if (out.b != via_b || out.r != via_r) {
    throw std::logic_error("cover numbers disagree with maximal matchings: b=" + std::to_string(out.b) +
                           " vs " + std::to_string(via_b) + ", r=" + std::to_string(out.r) + " vs " +
                           std::to_string(via_r));
  }
  return out;
}

SimplicialComplex build_complex_edge_ideal(const Graph& g) {
  if (!g.is_connected()) throw GraphError("Delta_J needs a connected graph");
  std::vector<Face> faces;
  for (int e = 0; e < g.edge_count(); ++e) faces.push_back({2 * e, 2 * e + 1});
  return SimplicialComplex(t_min(g), faces);
}

SimplicialComplex parse_complex(std::string_view text) {
  using Kind = ParseError::Kind;
  auto lines = data_lines(text);
  std::size_t pos = 0;
  auto expect_keyword = [&](const std::string& word) -> std::istringstream {
    if (pos >= lines.size()) {
      throw ParseError(Kind::malformed_line, lines.empty() ? 1 : lines.back().number, "missing '" + word + "'");
    }
    std::istringstream in(lines[pos].text);
    std::string w;
    in >> w;
    if (w != word) throw ParseError(Kind::malformed_line, lines[pos].number, "expected '" + word + "'");
    return in;
  };
  long long k = -1;
  {
    auto in = expect_keyword("vertices");
    std::string extra;
    if (!(in >> k) || k < 0 || (in >> extra)) {
      throw ParseError(Kind::malformed_line, lines[pos].number, "expected 'vertices <count>'");
    }
  }
  ++pos;
  std::vector<VertexSet> vertices;
  while (pos < lines.size() && lines[pos].text != "faces") {
    const DataLine& line = lines[pos++];
    std::string t = line.text;
    if (t.size() < 2 || t.front() != '{' || t.back() != '}') {
      throw ParseError(Kind::malformed_line, line.number, "expected a support like {1,6}");
    }
    VertexSet s;
    std::stringstream body(t.substr(1, t.size() - 2));
    std::string item;
    while (std::getline(body, item, ',')) {
      try {
        std::size_t used = 0;
        int v = std::stoi(item, &used);
        if (item.find_first_not_of(" \t", used) != std::string::npos || v < 1) throw std::invalid_argument(item);
        s.push_back(v);
      } catch (const std::exception&) {
        throw ParseError(Kind::malformed_line, line.number, "bad variable index '" + item + "'");
      }
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    vertices.push_back(std::move(s));
  }
  if (static_cast<long long>(vertices.size()) != k) {
    throw ParseError(Kind::count_mismatch, pos < lines.size() ? lines[pos].number : lines.back().number,
                     "announced " + std::to_string(k) + " vertices, found " + std::to_string(vertices.size()));
  }
  expect_keyword("faces");
  ++pos;
  std::vector<Face> faces;
  for (; pos < lines.size(); ++pos) {
    std::istringstream in(lines[pos].text);
    Face f;
    std::string tok;
    while (in >> tok) {
      long long v = 0;
      try {
        std::size_t used = 0;
        v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError(Kind::malformed_line, lines[pos].number, "bad vertex index '" + tok + "'");
      }
      if (v < 1 || v > k) throw ParseError(Kind::vertex_out_of_range, lines[pos].number, "vertex index outside 1.." + std::to_string(k));
      f.push_back(static_cast<int>(v - 1));
    }
    faces.push_back(std::move(f));
  }
  return SimplicialComplex(std::move(vertices), faces);
}

std::string format_complex(const SimplicialComplex& delta) {
  std::string out = "vertices " + std::to_string(delta.vertex_count()) + "\n";
  for (const VertexSet& s : delta.vertices()) {
    out += "{";
    for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k]);
    out += "}\n";
  }
  out += "faces\n";
  for (const Face& f : delta.facets()) {
    for (std::size_t k = 0; k < f.size(); ++k) out += (k ? " " : "") + std::to_string(f[k] + 1);
    out += "\n";
  }
  return out;
}

}  // namespace bei
