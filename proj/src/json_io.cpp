#include "bei/json_io.hpp"

namespace bei {

using nlohmann::json;

void to_json(json& j, const BoundsReport& r) {
  json prov = json::array();
  for (const auto& p : r.provenance) prov.push_back({{"bound", p.bound}, {"theorem", p.source}});
  j = json{{"n", r.n},
           {"m", r.m},
           {"l", r.l},
           {"bar", r.bar},
           {"ara_c", r.ara_c},
           {"graded_rank", r.graded_rank},
           {"ara_lower", r.ara_lower},
           {"ara_upper", r.ara_upper},
           {"ara_exact", r.ara_exact ? json(*r.ara_exact) : json(nullptr)},
           {"ht", r.ht},
           {"unmixed", r.unmixed},
           {"stci", r.stci ? json(*r.stci) : json(nullptr)},
           {"family", to_string(r.family.kind)},
           {"certificate_size", r.certificate_size ? json(*r.certificate_size) : json(nullptr)},
           {"provenance", prov}};
  if (!r.notes.empty()) j["notes"] = r.notes;
}

void from_json(const json& j, BoundsReport& r) {
  r = BoundsReport{};
  j.at("n").get_to(r.n);
  j.at("m").get_to(r.m);
  j.at("l").get_to(r.l);
  j.at("bar").get_to(r.bar);
  j.at("ara_c").get_to(r.ara_c);
  j.at("graded_rank").get_to(r.graded_rank);
  j.at("ara_lower").get_to(r.ara_lower);
  j.at("ara_upper").get_to(r.ara_upper);
  if (!j.at("ara_exact").is_null()) r.ara_exact = j.at("ara_exact").get<int>();
  j.at("ht").get_to(r.ht);
  j.at("unmixed").get_to(r.unmixed);
  if (j.contains("stci") && !j.at("stci").is_null()) r.stci = j.at("stci").get<bool>();
  r.family.kind = parse_family_kind(j.at("family").get<std::string>());
  if (!j.at("certificate_size").is_null()) r.certificate_size = j.at("certificate_size").get<int>();
  for (const auto& p : j.at("provenance")) {
    r.provenance.push_back({p.at("bound").get<std::string>(), p.at("theorem").get<std::string>(), 0});
  }
  if (j.contains("notes")) j.at("notes").get_to(r.notes);
}

void to_json(json& j, const PrimeComponent& p) { j = json{{"S", p.S}, {"c", p.c}, {"dimension", p.dimension}}; }

void to_json(json& j, const Verdict& v) {
  j = json{{"verified", v.verified},
           {"failed_step", v.failed_step ? json(to_string(*v.failed_step)) : json(nullptr)},
           {"indeterminate", v.indeterminate},
           {"message", v.message},
           {"max_exponent", v.max_exponent},
           {"used_rabinowitsch", v.used_rabinowitsch}};
  if (v.index != 0) j["index"] = v.index;
}

namespace {

json one_based(const std::vector<Face>& faces) {
  json out = json::array();
  for (const Face& f : faces) {
    json face = json::array();
    for (int v : f) face.push_back(v + 1);
    out.push_back(face);
  }
  return out;
}

}  // namespace

void to_json(json& j, const DeltaResult& d) {
  j = json{{"value", d.value},
           {"q", d.witness.q},
           {"support", d.witness.support_size()},
           {"witness", one_based(d.witness.simplices)}};
}

void to_json(json& j, const Certificate& c) {
  json polys = json::array();
  for (const auto& p : c.polynomials) polys.push_back(to_string(p));
  json labels = json::object();
  for (const auto& [role, v] : c.relabeling) labels[role] = v;
  j = json{{"family", to_string(c.family.kind)},
           {"claim", c.claim},
           {"size", c.polynomials.size()},
           {"nvars", c.nvars},
           {"polynomials", polys},
           {"relabeling", labels}};
}

void to_json(json& j, const SimplicialComplex& delta) {
  j = json{{"vertices", delta.vertices()}, {"facets", one_based(delta.facets())}, {"dimension", delta.dimension()}};
}

}  // namespace bei
