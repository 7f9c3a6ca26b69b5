#include "cmtype/report_json.hpp"

namespace cmtype {
namespace {

template <class T>
nlohmann::json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json semigroup_json(const NumericalSemigroup& h) {
  const auto inv = h.invariants();
  return {
      {"generators", h.generators()},
      {"multiplicity", inv.multiplicity},
      {"embedding_dimension", inv.embedding_dimension},
      {"frobenius", inv.frobenius},
      {"conductor", inv.conductor},
      {"type", inv.type},
      {"symmetric", inv.is_symmetric},
      {"med", inv.is_med},
      {"dvr", inv.is_dvr},
      {"pseudo_frobenius", h.pseudo_frobenius()},
      {"genus", h.gaps().size()},
      {"apery_multiplicity", h.apery(h.multiplicity())},
  };
}

nlohmann::json verdicts_json(const std::vector<Verdict>& verdicts) {
  auto out = nlohmann::json::array();
  for (const auto& v : verdicts) out.push_back({{"name", v.name}, {"pass", v.pass}, {"detail", v.detail}});
  return out;
}

nlohmann::json report_json(const IdealReport& rep) {
  return {
      {"engine", rep.engine},
      {"ideal", rep.ideal},
      {"mu", rep.mu},
      {"r_module", rep.module_type},
      {"r_quotient", optional_json(rep.quotient_type)},
      {"colength", optional_json(rep.colength)},
      {"r_idealization", rep.type_idealization},
      {"r_socle_method", rep.type_by_socle},
      {"r_cokernel_method", rep.type_by_cokernel},
      {"socle_excess", rep.socle_excess},
      {"cokernel_mu", rep.cokernel_mu},
      {"in_ring", rep.in_ring},
      {"m_primary", rep.m_primary},
      {"closed", rep.is_closed},
      {"trace", optional_json(rep.is_trace)},
      {"residually_faithful", rep.is_residually_faithful},
      {"ulrich_ideal", optional_json(rep.is_ulrich_ideal)},
      {"reduction", optional_json(rep.reduction)},
      {"ulrich_wrt_m", rep.is_ulrich_module_wrt_m},
      {"canonical", rep.is_canonical},
      {"principal", rep.is_principal},
  };
}

nlohmann::json suite_json(const SuiteResult& suite) {
  auto cases = nlohmann::json::array();
  for (const auto& c : suite.cases) {
    auto checks = nlohmann::json::array();
    for (const auto& k : c.checks) {
      checks.push_back({{"quantity", k.quantity},
                        {"expected", k.expected},
                        {"computed", k.computed},
                        {"pass", k.pass()}});
    }
    cases.push_back({{"name", c.name},
                     {"description", c.description},
                     {"pass", c.pass()},
                     {"checks", checks},
                     {"error", optional_json(c.error)}});
  }
  return {{"filter", suite.filter},
          {"cases", cases},
          {"total", suite.cases.size()},
          {"failures", suite.failures()}};
}

nlohmann::json make_document(const std::string& command, nlohmann::json input, nlohmann::json body,
                             long long elapsed_us) {
  nlohmann::json doc = std::move(body);
  if (!doc.is_object()) doc = nlohmann::json::object();
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command;
  doc["input"] = std::move(input);
  doc["timing"] = {{"elapsed_us", elapsed_us}};
  return doc;
}

std::string dump_document(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

}  // namespace cmtype
