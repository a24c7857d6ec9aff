#ifndef HOMCX_REPORT_HPP
#define HOMCX_REPORT_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "homcx/cosimplicial.hpp"
#include "homcx/irig.hpp"

namespace homcx {

using Json = nlohmann::ordered_json;

// Deterministic report document: fixed key order, no floats, timing kept in
// a single trailing field so byte comparisons can drop it.
struct Report {
  Json body;
  bool any_failure = false;

  void set_timing(std::int64_t ms) { body["timing_ms"] = ms; }
  std::string render(const std::string& format) const; // json | text | csv
};

Report new_report(const std::string& command, Json config);

const char* tristate_name(Tristate t);
Json to_json(const VerifyReport& rep);
Json to_json(const std::vector<DiagramResult>& results);

} // namespace homcx

#endif
