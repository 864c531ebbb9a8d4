// SPDX-License-Identifier: Apache-2.0
#include "grwtails/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "grwtails/error.hpp"

namespace grw {
namespace {

using ojson = nlohmann::ordered_json;

ojson opt_json(const std::optional<double>& v) { return v ? ojson(*v) : ojson(nullptr); }

std::optional<double> opt_from(const ojson& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

Verdict verdict_from(std::string_view s) {
  if (s == "PASS") return Verdict::Pass;
  if (s == "FAIL") return Verdict::Fail;
  if (s == "INFO") return Verdict::Info;
  throw Error("unknown verdict '" + std::string(s) + "'");
}

ojson to_json(const RunReport& r, const EmitOptions& opts) {
  ojson j;
  j["scenario"] = r.scenario;
  j["units"] = r.units;
  j["seed"] = r.seed;
  ojson params = ojson::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  j["parameters"] = params;
  ojson recs = ojson::array();
  for (const auto& q : r.records) {
    ojson e;
    e["name"] = q.name;
    e["predicted"] = opt_json(q.predicted);
    e["measured"] = opt_json(q.measured);
    e["paper_value"] = opt_json(q.paper_value);
    e["tolerance"] = opt_json(q.tolerance);
    e["verdict"] = std::string(to_string(q.verdict));
    e["note"] = q.note;
    recs.push_back(std::move(e));
  }
  j["records"] = recs;
  j["warnings"] = r.warnings;
  if (opts.with_timing) j["timing_seconds"] = r.timing_seconds;
  return j;
}

RunReport from_json(const ojson& j) {
  RunReport r;
  r.scenario = j.at("scenario").get<std::string>();
  r.units = j.at("units").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& [k, v] : j.at("parameters").items()) r.parameters[k] = v.get<double>();
  for (const auto& e : j.at("records")) {
    QuantityRecord q;
    q.name = e.at("name").get<std::string>();
    q.predicted = opt_from(e.at("predicted"));
    q.measured = opt_from(e.at("measured"));
    q.paper_value = opt_from(e.at("paper_value"));
    q.tolerance = opt_from(e.at("tolerance"));
    q.verdict = verdict_from(e.at("verdict").get<std::string>());
    q.note = e.at("note").get<std::string>();
    r.records.push_back(std::move(q));
  }
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  if (j.contains("timing_seconds")) r.timing_seconds = j["timing_seconds"].get<double>();
  return r;
}

std::string csv_number(const std::optional<double>& v) {
  if (!v) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", *v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void csv_rows(std::ostringstream& os, const RunReport& r, bool prefix) {
  for (const auto& q : r.records) {
    const std::string name = prefix ? r.scenario + "/" + q.name : q.name;
    os << csv_field(name) << ',' << csv_number(q.predicted) << ',' << csv_number(q.measured) << ','
       << csv_number(q.paper_value) << ',' << csv_number(q.tolerance) << ','
       << to_string(q.verdict) << '\n';
  }
}

constexpr const char* kCsvHeader = "name,predicted,measured,paper_value,tolerance,verdict\n";

}  // namespace

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Info: return "INFO";
  }
  return "INFO";
}

bool RunReport::any_fail() const {
  for (const auto& q : records) {
    if (q.verdict == Verdict::Fail) return true;
  }
  return false;
}

std::string emit_report(const RunReport& report, ReportFormat format, EmitOptions opts) {
  if (format == ReportFormat::Json) return to_json(report, opts).dump(2) + "\n";
  std::ostringstream os;
  os << kCsvHeader;
  csv_rows(os, report, false);
  return os.str();
}

std::string emit_reports(const std::vector<RunReport>& reports, ReportFormat format,
                         EmitOptions opts) {
  if (format == ReportFormat::Json) {
    ojson runs = ojson::array();
    for (const auto& r : reports) runs.push_back(to_json(r, opts));
    ojson j;
    j["runs"] = runs;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << kCsvHeader;
  for (const auto& r : reports) csv_rows(os, r, true);
  return os.str();
}

RunReport parse_report_json(std::string_view json) {
  return from_json(ojson::parse(json.begin(), json.end()));
}

void write_file_atomic(const std::string& path, std::string_view bytes) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) throw IoError("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot rename into '" + path + "'");
  }
}

}  // namespace grw
