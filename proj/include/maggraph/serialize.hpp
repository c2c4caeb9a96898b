#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "maggraph/bounds.hpp"

namespace maggraph {

using Json = nlohmann::ordered_json;

/// Finite values rounded to 12 significant digits; +-inf as "inf" / "-inf".
Json json_number(double v);
/// Hop distances: null when infinite.
Json json_distance(const Distance& d);

Json to_json(const SpectralData& sd);
Json to_json(const FormFamily& ff);
Json to_json(const CurvatureResult& cr);
Json to_json(const LiftIdentityReport& r);
Json to_json(const LiftDiameterCheck& r);
Json to_json(const FrustrationResult& r);
Json to_json(const CheegerResult& r);
Json to_json(const HarnackRecord& r);
Json to_json(const AlphaRecord& r);
Json to_json(const EigenvalueBoundRecord& r);
Json to_json(const CheegerRecord& r);
Json to_json(const HypothesisFlags& h);
Json to_json(const BoundsReport& r);

/// Human-readable Markdown tables.
std::string to_markdown(const BoundsReport& r);

/// 12 significant digits, "inf" / "-inf" for infinities.
std::string format_number(double v);

}  // namespace maggraph
