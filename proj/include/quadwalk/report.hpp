#pragma once

#include "quadwalk/asymptotics.hpp"
#include "quadwalk/geometry.hpp"
#include "quadwalk/group.hpp"
#include "quadwalk/verifier.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace quadwalk {

using Json = nlohmann::ordered_json;

Json to_json(const AsymptoticTerm& t);
Json to_json(const GrowthEstimate& e);
Json to_json(const Tolerances& t);
Json to_json(const VerificationReport& r);
Json to_json(const CriticalPoint& p);
Json to_json(const ComputedAsymptotics& c);

// Rebuilds the predicted term from the model and flavor; throws ParseError on malformed input.
VerificationReport report_from_json(const Json& j);

std::string dump(const Json& j);

// Text layout of the encoded rows with pass/fail marks: anywhere for all 23
// models, boundary returns, then the y-axis rows of the negative drift models.
std::string reproduce_tables(const std::vector<VerificationReport>& reports);

}  // namespace quadwalk
