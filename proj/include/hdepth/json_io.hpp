#pragma once

// JSON forms. Integers are written as decimal strings so consumers never truncate them.
//   function: {"numerator": {"<exp>": "<coeff>", ...}, "denomPower": p}

#include "hdepth/hilbert.hpp"
#include "hdepth/qdepth.hpp"
#include "hdepth/report.hpp"

#include <json.hpp>

namespace hdepth {

nlohmann::json toJson(const HilbertFunction& h);
/// Canonicalizes; throws Error(ParseError) on malformed documents.
HilbertFunction hilbertFromJson(const nlohmann::json& doc);

nlohmann::json toJson(const BetaTable& table);
nlohmann::json toJson(const QDepthResult& result);
/// Elapsed time is left out so equal runs serialize identically.
nlohmann::json toJson(const VerificationReport& report);

}  // namespace hdepth
