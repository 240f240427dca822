#include "bei/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"

#include "bei/io.hpp"
#include "bei/json_io.hpp"

namespace bei {

namespace {

using nlohmann::json;

struct RunConfig {
  bool json = false;
  std::string field = "rational";
  std::uint32_t prime = Fp::kDefaultPrime;
  std::string order = "degrevlex";
  unsigned max_power = 3;
  bool no_rabinowitsch = false;
  GroebnerConfig caps = GroebnerConfig::from_env();
  int max_vertices = 16;
  std::size_t max_complex = 24;

  // subcommand arguments
  std::string graph_path, second_path, poly_text, family = "auto", sum_pairs, output, q = "";
  bool radical = false;
  int k = 0;
  std::vector<int> r;

  MonomialOrder monomial_order() const { return MonomialOrder(parse_order_kind(order)); }
  RadicalOptions radical_options() const {
    RadicalOptions o;
    o.max_power = max_power;
    o.rabinowitsch = !no_rabinowitsch;
    o.order = monomial_order();
    o.caps = caps;
    return o;
  }
  MinimalPrimeOptions prime_options() const { return {max_vertices, true}; }
};

Graph load_graph(const std::string& path) {
  try {
    return parse_graph(read_file(path));
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

PolynomialList load_list(const std::string& path) {
  try {
    return parse_polynomial_list(read_file(path));
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

std::string join(const std::vector<int>& xs, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + std::to_string(xs[i]);
  return s;
}

std::string optional_int(const std::optional<int>& v) { return v ? std::to_string(*v) : "open"; }

void print_report(const BoundsReport& r, std::ostream& out) {
  out << "n = " << r.n << ", m = " << r.m << ", vertex connectivity l = " << r.l << "\n";
  out << "family: " << to_string(r.family.kind) << "\n";
  out << "ht = " << r.ht << (r.unmixed ? " (unmixed)" : " (not unmixed)") << "\n";
  out << "bar = " << r.bar << ", ara_c = " << r.ara_c << ", graded rank = " << r.graded_rank << "\n";
  out << r.ara_lower << " <= ara <= " << r.ara_upper << "\n";
  out << "ara = " << optional_int(r.ara_exact);
  if (r.stci) out << (*r.stci ? " (set-theoretic complete intersection)" : " (not a set-theoretic complete intersection)");
  out << "\n";
  out << "certificate size = " << optional_int(r.certificate_size) << "\n";
  for (const auto& p : r.provenance) out << "  " << std::left << std::setw(12) << p.bound << p.source << " = " << p.value << "\n";
  for (const auto& note : r.notes) out << "note: " << note << "\n";
}

int cmd_report(const RunConfig& c, std::ostream& out) {
  const BoundsReport r = bounds_report(load_graph(c.graph_path), c.prime_options());
  if (c.json) out << json(r).dump(2) << "\n";
  else print_report(r, out);
  return 0;
}

int cmd_primes(const RunConfig& c, std::ostream& out) {
  const Graph g = load_graph(c.graph_path);
  const auto primes = minimal_primes(g, c.prime_options());
  const HeightReport h = height_and_unmixed(g, c.prime_options());
  if (c.json) {
    out << json{{"primes", primes}, {"ht", h.ht}, {"unmixed", h.unmixed}}.dump(2) << "\n";
    return 0;
  }
  for (const auto& p : primes) {
    out << "S = {" << join(p.S) << "}  c = " << p.c << "  dim = " << p.dimension << "  blocks:";
    for (const auto& b : p.blocks) out << " {" << join(b) << "}";
    out << "\n";
  }
  out << "ht = " << h.ht << (h.unmixed ? " (unmixed)" : " (not unmixed)") << "\n";
  return 0;
}

int cmd_complex(const RunConfig& c, std::ostream& out) {
  const SimplicialComplex delta = build_complex_edge_ideal(load_graph(c.graph_path));
  ComplexLimits limits{c.max_complex};
  const CoverNumbers br = b_and_r(delta, limits);
  if (c.json) {
    json j = delta;
    j["b"] = br.b;
    j["r"] = br.r;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "# b = " << br.b << ", r = " << br.r << "\n" << format_complex(delta);
  return 0;
}

std::set<int> parse_dims(const std::string& text) {
  std::set<int> q;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    if (item == "omega" || item == "all") return {-1};
    try {
      std::size_t used = 0;
      int d = std::stoi(item, &used);
      if (used != item.size() || d < 0) throw std::invalid_argument(item);
      q.insert(d);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad dimension '" + item + "' in --q");
    }
  }
  return q;
}

int cmd_matching(const RunConfig& c, std::ostream& out) {
  SimplicialComplex delta;
  try {
    delta = parse_complex(read_file(c.graph_path));
  } catch (const ParseError& e) {
    throw std::runtime_error(c.graph_path + ": " + e.what());
  }
  std::set<int> q = parse_dims(c.q);
  if (q == std::set<int>{-1}) q = omega(delta);
  const DeltaResult d = delta_q(delta, q, ComplexLimits{c.max_complex});
  if (c.json) {
    out << json(d).dump(2) << "\n";
    return 0;
  }
  out << "delta = " << d.value << " (support " << d.witness.support_size() << " of " << delta.vertex_count()
      << " vertices)\n";
  for (const Face& f : d.witness.simplices) {
    std::vector<int> one_based;
    for (int v : f) one_based.push_back(v + 1);
    out << "  {" << join(one_based) << "}\n";
  }
  return 0;
}

std::vector<std::vector<int>> parse_groups(const std::string& text) {
  std::vector<std::vector<int>> groups;
  std::stringstream in(text);
  std::string group;
  while (std::getline(in, group, ',')) {
    std::vector<int> members;
    std::stringstream g(group);
    std::string item;
    while (std::getline(g, item, '+')) {
      try {
        std::size_t used = 0;
        members.push_back(std::stoi(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad generator index '" + item + "' in --sum-pairs");
      }
    }
    groups.push_back(std::move(members));
  }
  return groups;
}

int cmd_certify(const RunConfig& c, std::ostream& out) {
  const Graph g = load_graph(c.graph_path);
  Certificate cert;
  if (!c.sum_pairs.empty()) {
    cert = sum_pairs_certificate(g, parse_groups(c.sum_pairs));
  } else {
    const FamilyTag tag = c.family == "auto" ? recognize_family(g) : family_tag(g, parse_family_kind(c.family));
    cert = generate_certificate(g, tag);
  }
  std::vector<std::string> header{"family: " + std::string(to_string(cert.family.kind)),
                                  "claim: " + cert.claim,
                                  "size: " + std::to_string(cert.polynomials.size())};
  for (const auto& [role, v] : cert.relabeling) header.push_back(role + " -> " + std::to_string(v));
  const std::string text = format_polynomial_list({cert.nvars, cert.polynomials}, header);
  if (!c.output.empty()) {
    std::ofstream file(c.output);
    if (!(file << text)) throw std::runtime_error("cannot write " + c.output);
  }
  if (c.json) out << json(cert).dump(2) << "\n";
  else if (c.output.empty()) out << text;
  else out << "wrote " << cert.polynomials.size() << " polynomials to " << c.output << "\n";
  return 0;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  const Graph g = load_graph(c.graph_path);
  const PolynomialList list = load_list(c.second_path);
  if (list.nvars != static_cast<std::size_t>(2 * g.vertex_count())) {
    throw std::runtime_error(c.second_path + ": certificate declares " + std::to_string(list.nvars) +
                             " variables, the graph needs " + std::to_string(2 * g.vertex_count()));
  }
  Verdict v;
  if (c.field == "prime") {
    Fp::Modulus guard(c.prime);
    v = verify_certificate<Fp>(g, list.polynomials, c.radical_options());
  } else {
    v = verify_certificate<Rational>(g, list.polynomials, c.radical_options());
  }
  if (c.json) {
    out << json(v).dump(2) << "\n";
  } else if (v.verified) {
    out << "verified: rad(J_G) = rad(F) with " << list.polynomials.size() << " polynomials";
    if (v.used_rabinowitsch) out << " (Rabinowitsch test used)";
    else out << " (powers up to " << v.max_exponent << ")";
    out << "\n";
  } else {
    out << (v.indeterminate ? "undecided: " : "rejected: ") << v.message << "\n";
  }
  if (v.verified) return 0;
  return v.indeterminate ? 1 : 2;
}

template <class S>
int gb_in(const RunConfig& c, const PolynomialList& list, std::ostream& out) {
  const MonomialOrder ord = c.monomial_order();
  std::vector<Polynomial<S>> gens;
  for (const auto& p : list.polynomials) {
    if (!p.is_zero()) gens.push_back(p.template cast<S>().with_order(ord));
  }
  if (gens.empty()) throw std::invalid_argument("the ideal has no nonzero generators");
  const auto gb = buchberger(Ideal<S>(std::move(gens)), ord, c.caps);
  if (c.json) {
    json polys = json::array();
    for (const auto& p : gb.basis()) polys.push_back(to_string(p));
    out << json{{"order", to_string(ord.kind())}, {"field", c.field}, {"basis", polys}}.dump(2) << "\n";
    return 0;
  }
  out << "# reduced Groebner basis, " << to_string(ord.kind()) << "\n";
  out << "vars " << list.nvars << "\n";
  for (const auto& p : gb.basis()) out << to_string(p) << "\n";
  return 0;
}

int cmd_gb(const RunConfig& c, std::ostream& out) {
  const PolynomialList list = load_list(c.graph_path);
  if (c.field == "prime") {
    Fp::Modulus guard(c.prime);
    return gb_in<Fp>(c, list, out);
  }
  return gb_in<Rational>(c, list, out);
}

template <class S>
int member_in(const RunConfig& c, const PolynomialList& list, std::ostream& out) {
  const MonomialOrder ord = c.monomial_order();
  Polynomial<S> f;
  try {
    f = parse_polynomial<S>(c.poly_text, list.nvars, ord);
  } catch (const PolynomialParseError& e) {
    throw std::invalid_argument(std::string("polynomial argument: ") + e.what());
  }
  std::vector<Polynomial<S>> gens;
  for (const auto& p : list.polynomials) {
    if (!p.is_zero()) gens.push_back(p.template cast<S>().with_order(ord));
  }
  if (gens.empty()) throw std::invalid_argument("the ideal has no nonzero generators");
  const Ideal<S> ideal(std::move(gens));
  bool member = false;
  json j;
  if (c.radical) {
    const MembershipResult m = radical_member(f, ideal, c.radical_options());
    if (!m.definitive) {
      throw IndeterminateResult("no power up to " + std::to_string(c.max_power) +
                                " lies in the ideal and the Rabinowitsch test is disabled");
    }
    member = m.member;
    j = {{"member", member},
         {"radical", true},
         {"method", m.method == MembershipMethod::rabinowitsch ? "rabinowitsch" : "bounded-power"},
         {"exponent", m.exponent ? json(*m.exponent) : json(nullptr)}};
  } else {
    member = ideal_member(f, ideal, ord, c.caps);
    j = {{"member", member}, {"radical", false}};
  }
  if (c.json) out << j.dump(2) << "\n";
  else out << (member ? "member" : "not a member") << "\n";
  return member ? 0 : 2;
}

int cmd_member(const RunConfig& c, std::ostream& out) {
  const PolynomialList list = load_list(c.second_path);
  if (c.field == "prime") {
    Fp::Modulus guard(c.prime);
    return member_in<Fp>(c, list, out);
  }
  return member_in<Rational>(c, list, out);
}

int cmd_chain(const RunConfig& c, std::ostream& out) {
  const Graph g = build_triangle_chain(c.k, c.r);
  if (c.json) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    out << json{{"n", g.vertex_count()}, {"m", g.edge_count()}, {"edges", edges}}.dump(2) << "\n";
    return 0;
  }
  out << "# triangle chain k = " << c.k << ", r = " << join(c.r) << "\n";
  out << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
  return 0;
}

int cmd_corpus(const RunConfig& c, std::ostream& out) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(c.graph_path)) throw std::runtime_error(c.graph_path + ": not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(c.graph_path)) {
    if (entry.is_regular_file() && entry.path().extension() == ".graph") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  int exact = 0, open = 0, errors = 0;
  json rows = json::array();
  std::ostringstream table;
  table << std::left << std::setw(32) << "graph" << std::right << std::setw(4) << "n" << std::setw(4) << "m"
        << std::setw(4) << "l" << std::setw(4) << "ht" << std::setw(6) << "bar" << std::setw(7) << "lower"
        << std::setw(7) << "upper" << std::setw(7) << "ara" << std::setw(6) << "cert" << "  family\n";
  for (const auto& path : files) {
    const std::string name = path.filename().string();
    try {
      const BoundsReport r = bounds_report(load_graph(path.string()), c.prime_options());
      (r.ara_exact ? exact : open) += 1;
      rows.push_back({{"file", name}, {"report", r}});
      table << std::left << std::setw(32) << name << std::right << std::setw(4) << r.n << std::setw(4) << r.m
            << std::setw(4) << r.l << std::setw(4) << r.ht << std::setw(6) << r.bar << std::setw(7) << r.ara_lower
            << std::setw(7) << r.ara_upper << std::setw(7) << optional_int(r.ara_exact) << std::setw(6)
            << optional_int(r.certificate_size) << "  " << to_string(r.family.kind) << "\n";
    } catch (const std::exception& e) {
      ++errors;
      rows.push_back({{"file", name}, {"error", e.what()}});
      table << std::left << std::setw(32) << name << "  error: " << e.what() << "\n";
    }
  }
  if (c.json) {
    out << json{{"rows", rows}, {"summary", {{"graphs", files.size()}, {"exact", exact}, {"open", open}, {"errors", errors}}}}
               .dump(2)
        << "\n";
  } else {
    out << table.str() << files.size() << " graphs: " << exact << " exact, " << open << " open, " << errors
        << " errors\n";
  }
  return errors ? 1 : 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Bounds and certificates for the arithmetical rank of binomial edge ideals", "bei"};
  app.require_subcommand(1);
  app.add_flag("--json", c.json, "Emit JSON on stdout");
  app.add_option("--field", c.field, "Coefficient field")->check(CLI::IsMember({"rational", "prime"}))->capture_default_str();
  app.add_option("--prime", c.prime, "Modulus for --field prime")->capture_default_str();
  app.add_option("--order", c.order, "Monomial order")->check(CLI::IsMember({"degrevlex", "grevlex", "lex"}))->capture_default_str();
  app.add_option("--max-power", c.max_power, "Largest power tried before the Rabinowitsch test")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--no-rabinowitsch", c.no_rabinowitsch, "Decide radical membership by powers only");
  app.add_option("--max-pairs", c.caps.max_pairs, "Cap on reduced S-pairs (env BEI_MAX_PAIRS)")->capture_default_str();
  app.add_option("--max-basis", c.caps.max_basis_size, "Cap on basis size (env BEI_MAX_BASIS)")->capture_default_str();
  app.add_option("--max-degree", c.caps.max_degree, "Cap on S-polynomial degree (env BEI_MAX_DEGREE)")->capture_default_str();
  app.add_option("--max-vertices", c.max_vertices, "Cap on n for minimal-prime enumeration")->capture_default_str();
  app.add_option("--max-complex", c.max_complex, "Cap on vertices per component of a complex")->capture_default_str();

  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };
  auto* report = sub("report", "Bounds on ara(J_G) with provenance");
  report->add_option("graph", c.graph_path, "Graph file")->required();
  auto* primes = sub("primes", "Minimal primes P_S(G), height and unmixedness");
  primes->add_option("graph", c.graph_path, "Graph file")->required();
  auto* complex = sub("complex", "The complex Delta_{J_G} with b and r");
  complex->add_option("graph", c.graph_path, "Graph file")->required();
  auto* matching = sub("matching", "delta(Delta)_Q of a complex file");
  matching->add_option("complex", c.graph_path, "Complex file")->required();
  matching->add_option("--q", c.q, "Dimensions, e.g. 0,1 or omega")->required();
  auto* certify = sub("certify", "Write a radical-generating set for J_G");
  certify->add_option("graph", c.graph_path, "Graph file")->required();
  certify->add_option("--family", c.family, "auto or a family name")->capture_default_str();
  certify->add_option("--sum-pairs", c.sum_pairs, "Generator groups to sum, e.g. 2+3 or 2+3,4+5 (1-based)");
  certify->add_option("-o,--output", c.output, "Certificate file to write");
  auto* verify = sub("verify", "Check that a certificate generates J_G up to radical");
  verify->add_option("graph", c.graph_path, "Graph file")->required();
  verify->add_option("certificate", c.second_path, "Certificate file")->required();
  auto* gb = sub("gb", "Reduced Groebner basis of an ideal file");
  gb->add_option("ideal", c.graph_path, "Ideal file")->required();
  auto* member = sub("member", "Ideal (or radical) membership");
  member->add_option("polynomial", c.poly_text, "Polynomial, e.g. 'x1*x6 - x2*x5'")->required();
  member->add_option("ideal", c.second_path, "Ideal file")->required();
  member->add_flag("--radical", c.radical, "Test membership in the radical");
  auto* chain = sub("chain", "Graph file of a triangle chain");
  chain->add_option("--k", c.k, "Number of triangles")->required();
  chain->add_option("--r", c.r, "Path lengths, comma separated")->delimiter(',');
  auto* corpus = sub("corpus", "Report every *.graph file of a directory");
  corpus->add_option("dir", c.graph_path, "Directory")->required();

  std::vector<const char*> argv{"bei"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (report->parsed()) return cmd_report(c, out);
    if (primes->parsed()) return cmd_primes(c, out);
    if (complex->parsed()) return cmd_complex(c, out);
    if (matching->parsed()) return cmd_matching(c, out);
    if (certify->parsed()) return cmd_certify(c, out);
    if (verify->parsed()) return cmd_verify(c, out);
    if (gb->parsed()) return cmd_gb(c, out);
    if (member->parsed()) return cmd_member(c, out);
    if (chain->parsed()) return cmd_chain(c, out);
    if (corpus->parsed()) return cmd_corpus(c, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace bei
