#pragma once

#include <json.hpp>

#include "tangent/algebra.hpp"
#include "tangent/identity_suite.hpp"
#include "tangent/polytest.hpp"
#include "tangent/reconstruct.hpp"

namespace tangent {

/// JSON views of the reports. Keys are sorted (nlohmann::json objects are
/// ordered maps) and doubles round-trip, so equal reports serialize to
/// identical bytes.
nlohmann::json to_json(const TrigPoly<double>& poly);
nlohmann::json to_json(const MembershipReport& report);
nlohmann::json to_json(const std::vector<MembershipReport>& reports);
nlohmann::json to_json(const ReconstructionReport& report);
nlohmann::json to_json(const NonsingularityCertificate& cert);
nlohmann::json to_json(const std::vector<IdentityCheck>& checks);

/// "ellipse", "non-quadratic", "not-positive-definite", "not-in-model" or
/// "window-consistent".
std::string verdict_of(const ReconstructionReport& report);

}  // namespace tangent
