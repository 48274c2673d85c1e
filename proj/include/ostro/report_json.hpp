#pragma once

#include <json.hpp>

#include "ostro/enclosure.hpp"
#include "ostro/identity.hpp"
#include "ostro/verify.hpp"

// Serialisation of reports for the command-line tool. Keys keep insertion
// order so output is stable and reads in the order the report is built.
namespace ostro {

using Json = nlohmann::ordered_json;

Json to_json(const Enclosure& e);
Json to_json(const EnclosureReport& r);
Json to_json(const IdentityReport& r);
Json to_json(const ComparisonReport& r);
Json to_json(const RuleOutcome& o);
Json to_json(const CaseInput& c);
Json to_json(const RuleTally& t);
Json to_json(const VerifyReport& r);

/// Inverse of to_json(CaseInput), for re-running a reported worst case.
CaseInput case_input_from_json(const Json& j);

}  // namespace ostro
