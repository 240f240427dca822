#pragma once

// JSON forms of reports (nlohmann::json).

#include "json.hpp"

#include "bei/bounds.hpp"

namespace bei {

void to_json(nlohmann::json& j, const BoundsReport& r);
/// Reads the documented keys back; the family comes back without its pattern.
void from_json(const nlohmann::json& j, BoundsReport& r);
void to_json(nlohmann::json& j, const PrimeComponent& p);
void to_json(nlohmann::json& j, const Verdict& v);
void to_json(nlohmann::json& j, const DeltaResult& d);
void to_json(nlohmann::json& j, const Certificate& c);
void to_json(nlohmann::json& j, const SimplicialComplex& delta);

}  // namespace bei
