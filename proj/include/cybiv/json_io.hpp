#pragma once

#include <json.hpp>

#include "cybiv/analysis.hpp"
#include "cybiv/schouten.hpp"
#include "cybiv/sections.hpp"
#include "cybiv/symmetries.hpp"

namespace cybiv {

using Json = nlohmann::json;

/// Canonical rendering: sorted keys, two-space indentation, trailing newline.
std::string canonical_dump(const Json& j);

Json spec_to_json(const ThreefoldSpec& spec);
ThreefoldSpec spec_from_json(const Json& j);

/// {"chart":"U","k1":..,"k2":..,"label":..,"q":[poly,poly,poly]}
Json to_json(const BivectorField& q, Chart chart = Chart::U);
BivectorField bivector_from_json(const Json& j);

Json to_json(const TransitionMatrix& m);
Json to_json(const ModulePresentation& p);
ModulePresentation presentation_from_json(const Json& j);
Json to_json(const VanishingLocus& l);
Json to_json(const CasimirSpace& c);
Json to_json(const FoliationReport& f);
Json to_json(const IsoCertificate& c);
Json to_json(const EmbeddingReport& r);
Json to_json(const TrivectorDensity& t);

}  // namespace cybiv
