#ifndef DEGEN_REPORT_HPP
#define DEGEN_REPORT_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "json.hpp"

namespace degen {

struct CaseRecord {
  std::string suite;
  std::string family;
  int rank = 0;
  std::string cuts; // "-" when the case does not depend on a cut set
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
  std::optional<double> runtime_ms;

  friend bool operator==(const CaseRecord&, const CaseRecord&) = default;
};

struct Report {
  int schema = 1;
  std::optional<std::string> timestamp;
  std::uint64_t seed = 0;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  std::vector<CaseRecord> cases;

  int passed() const {
    int k = 0;
    for (const auto& c : cases)
      k += c.pass;
    return k;
  }
  int failed() const { return static_cast<int>(cases.size()) - passed(); }

  friend bool operator==(const Report&, const Report&) = default;
};

inline nlohmann::ordered_json report_to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["schema"] = r.schema;
  if (r.timestamp)
    j["timestamp"] = *r.timestamp;
  j["seed"] = r.seed;
  j["config"] = r.config;
  j["summary"] = {{"cases", r.cases.size()}, {"passed", r.passed()}, {"failed", r.failed()}};
  auto& arr = j["cases"] = nlohmann::ordered_json::array();
  for (const auto& c : r.cases) {
    nlohmann::ordered_json e;
    e["suite"] = c.suite;
    e["family"] = c.family;
    e["rank"] = c.rank;
    e["cuts"] = c.cuts;
    e["case"] = c.name;
    e["expected"] = c.expected;
    e["computed"] = c.computed;
    e["pass"] = c.pass;
    if (c.runtime_ms)
      e["runtime_ms"] = *c.runtime_ms;
    arr.push_back(std::move(e));
  }
  return j;
}

inline std::string emit_json(const Report& r) { return report_to_json(r).dump(2) + "\n"; }

inline Report parse_report_json(const std::string& text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("report is not valid JSON: ") + e.what());
  }
  Report r;
  r.schema = j.at("schema").get<int>();
  if (r.schema != 1)
    throw DomainError("unsupported report schema " + std::to_string(r.schema));
  if (j.contains("timestamp"))
    r.timestamp = j["timestamp"].get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.config = j.at("config");
  for (const auto& e : j.at("cases")) {
    CaseRecord c;
    c.suite = e.at("suite").get<std::string>();
    c.family = e.at("family").get<std::string>();
    c.rank = e.at("rank").get<int>();
    c.cuts = e.at("cuts").get<std::string>();
    c.name = e.at("case").get<std::string>();
    c.expected = e.at("expected").get<std::string>();
    c.computed = e.at("computed").get<std::string>();
    c.pass = e.at("pass").get<bool>();
    if (e.contains("runtime_ms"))
      c.runtime_ms = e["runtime_ms"].get<double>();
    r.cases.push_back(std::move(c));
  }
  return r;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"')
      out += '"';
    out += ch;
  }
  return out + "\"";
}

inline std::string format_ms(double ms) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << ms;
  return os.str();
}

} // namespace detail

inline const char* csv_header() { return "suite,family,rank,cuts,case,expected,computed,pass,runtime_ms"; }

inline std::string emit_csv(const Report& r) {
  std::string out = std::string(csv_header()) + "\n";
  for (const auto& c : r.cases) {
    out += detail::csv_field(c.suite) + "," + detail::csv_field(c.family) + "," + std::to_string(c.rank) + "," +
           detail::csv_field(c.cuts) + "," + detail::csv_field(c.name) + "," + detail::csv_field(c.expected) + "," +
           detail::csv_field(c.computed) + "," + (c.pass ? "true" : "false") + "," +
           (c.runtime_ms ? detail::format_ms(*c.runtime_ms) : "") + "\n";
  }
  return out;
}

inline std::string emit_text(const Report& r) {
  std::string out;
  for (const auto& c : r.cases) {
    out += std::string(c.pass ? "PASS " : "FAIL ") + c.suite + " " + c.family + std::to_string(c.rank) + " " + c.cuts +
           " " + c.name;
    if (!c.pass)
      out += "  expected " + c.expected + ", computed " + c.computed;
    out += "\n";
  }
  out += std::to_string(r.cases.size()) + " cases, " + std::to_string(r.passed()) + " passed, " +
         std::to_string(r.failed()) + " failed\n";
  return out;
}

} // namespace degen

#endif
