#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "g2abv/endoscopy.hpp"
#include "g2abv/verify.hpp"

namespace g2abv {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const Cyclo& c);
Json to_json(const VirtualChar& v);
Json to_json(const InfCase& ic);
Json to_json(const LParam& phi);
Json to_json(const FamilyTable& t);
Json to_json(const SuiteReport& r);
Json to_json(const LiftRecord& r);
Json to_json(const EcResult& r);

// {"schema_version", "command", "status", "warnings", "result"}
Json envelope(const std::string& command, const Json& result, const std::vector<std::string>& warnings, int status);

// Every stored table, G2 first, in a canonical key order.
Json dump_tables();
std::vector<FamilyTable> tables_from_json(const Json& j);
Json tables_to_json(const std::vector<FamilyTable>& tables);

std::string render_text(const SuiteReport& r);

}  // namespace g2abv
