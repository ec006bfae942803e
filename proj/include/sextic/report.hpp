#ifndef SEXTIC_REPORT_HPP
#define SEXTIC_REPORT_HPP

// JSON and CSV renderings. Integers are always decimal strings.

#include <string>
#include <vector>

#include <json.hpp>

#include "sextic/catalog.hpp"
#include "sextic/search.hpp"

namespace sextic {

using Json = nlohmann::ordered_json;

Json to_json(const QuadCoord& q);
Json to_json(const ThetaCoords& c);
Json to_json(const SolutionPair& p);
Json to_json(const GeneratorRecord& g);
Json to_json(const IndexBreakdown& b);
Json to_json(const AuditReport& r);
Json to_json(const VerificationReport& r);
Json to_json(const CaseReport& r);
Json to_json(const ThueSearchResult& r);
Json to_json(const GeneratorSearchResult& r);
Json catalog_json();

/// The common report document: tool, version, command, parameters, result, verdict.
Json envelope(const std::string& command, Json parameters, Json result, Verdict verdict);

std::string solutions_csv(const std::vector<SolutionPair>& rows);
std::string generators_csv(const std::vector<GeneratorRecord>& rows);
std::string audit_csv(const AuditReport& r);
std::string verification_csv(const VerificationReport& r);

const char* version();

}  // namespace sextic

#endif
