#include "homcx/report.hpp"

#include <sstream>

#include "homcx/error.hpp"

namespace homcx {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownCatalogName: return "UnknownCatalogName";
    case ErrorCode::InvalidGroupFile: return "InvalidGroupFile";
    case ErrorCode::GeneratorIndexOutOfRange: return "GeneratorIndexOutOfRange";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::SizeGuardExceeded: return "SizeGuardExceeded";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::UnsupportedFamilyParameter: return "UnsupportedFamilyParameter";
    case ErrorCode::IdentityViolation: return "IdentityViolation";
    case ErrorCode::CocycleNotVerified: return "CocycleNotVerified";
    case ErrorCode::CommutationFailure: return "CommutationFailure";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::SimplicialIdentityViolation: return "SimplicialIdentityViolation";
    case ErrorCode::ImageNotAHomomorphism: return "ImageNotAHomomorphism";
    case ErrorCode::BijectionFailure: return "BijectionFailure";
    case ErrorCode::EquivarianceViolation: return "EquivarianceViolation";
    case ErrorCode::PullbackFailure: return "PullbackFailure";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DiagramFailure: return "DiagramFailure";
    case ErrorCode::BoundarySquareNonzero: return "BoundarySquareNonzero";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

const char* tristate_name(Tristate t) {
  switch (t) {
    case Tristate::Equal: return "pass";
    case Tristate::NotEqual: return "fail";
    case Tristate::Undecidable: return "undecidable";
  }
  return "?";
}

Report new_report(const std::string& command, Json config) {
  Report r;
  r.body["version"] = 1;
  r.body["command"] = command;
  r.body["config"] = std::move(config);
  return r;
}

Json to_json(const VerifyReport& rep) {
  Json out;
  out["total"] = rep.checks.size();
  out["failed"] = rep.failed;
  out["undecidable"] = rep.undecidable;
  Json items = Json::array();
  for (const auto& c : rep.checks) {
    if (c.status == Tristate::Equal) continue; // only exceptions are listed
    Json item;
    item["name"] = c.name;
    item["status"] = tristate_name(c.status);
    item["witness"] = c.witness;
    items.push_back(std::move(item));
  }
  out["exceptions"] = std::move(items);
  return out;
}

Json to_json(const std::vector<DiagramResult>& results) {
  Json arr = Json::array();
  for (const auto& r : results) {
    Json item;
    item["name"] = r.name;
    item["pass"] = r.pass;
    if (!r.pass) item["witness"] = r.witness;
    arr.push_back(std::move(item));
  }
  return arr;
}

namespace {

void render_text(const Json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || value.is_array()) {
        os << prefix << key << ":\n";
        render_text(value, prefix + "  ", os);
      } else {
        os << prefix << key << ": " << value.dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    bool scalars = true;
    for (const auto& v : j)
      if (v.is_object() || v.is_array()) scalars = false;
    if (scalars) {
      os << prefix << j.dump() << "\n";
    } else {
      int idx = 0;
      for (const auto& v : j) {
        os << prefix << "- [" << idx++ << "]\n";
        render_text(v, prefix + "  ", os);
      }
    }
  } else {
    os << prefix << j.dump() << "\n";
  }
}

void render_csv(const Json& j, const std::string& path, std::ostream& os) {
  auto quote = [](std::string s) {
    bool needs = s.find_first_of(",\"\n") != std::string::npos;
    if (!needs) return s;
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    return out + "\"";
  };
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      render_csv(value, path.empty() ? key : path + "." + key, os);
  } else if (j.is_array()) {
    bool scalars = true;
    for (const auto& v : j)
      if (v.is_object() || v.is_array()) scalars = false;
    if (scalars) {
      std::string row;
      for (const auto& v : j) {
        if (!row.empty()) row += ",";
        row += v.is_string() ? v.get<std::string>() : v.dump();
      }
      os << quote(path) << "," << row << "\n";
    } else {
      int idx = 0;
      for (const auto& v : j) render_csv(v, path + "[" + std::to_string(idx++) + "]", os);
    }
  } else {
    os << quote(path) << ","
       << (j.is_string() ? quote(j.get<std::string>()) : j.dump()) << "\n";
  }
}

} // namespace

std::string Report::render(const std::string& format) const {
  if (format == "json") return body.dump(2) + "\n";
  std::ostringstream os;
  if (format == "text") {
    render_text(body, "", os);
    return os.str();
  }
  if (format == "csv") {
    os << "key,value\n";
    render_csv(body, "", os);
    return os.str();
  }
  fail(ErrorCode::ConfigError, "unknown format: " + format);
}

} // namespace homcx
