#pragma once

// JSON report documents.  nlohmann::json keeps object keys sorted and
// prints integers canonically, so dump() output is deterministic.

#include "cmtype/reference_cases.hpp"
#include "cmtype/semigroup.hpp"
#include "cmtype/typecalc.hpp"

#include <json.hpp>

#include <string>

namespace cmtype {

inline constexpr int kSchemaVersion = 1;

nlohmann::json semigroup_json(const NumericalSemigroup& h);
nlohmann::json report_json(const IdealReport& rep);
nlohmann::json verdicts_json(const std::vector<Verdict>& verdicts);
nlohmann::json suite_json(const SuiteResult& suite);

// {schema_version, command, input, timing, ...body}
nlohmann::json make_document(const std::string& command, nlohmann::json input, nlohmann::json body,
                             long long elapsed_us);
std::string dump_document(const nlohmann::json& doc);

}  // namespace cmtype
