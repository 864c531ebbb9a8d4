// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace grw {

enum class Verdict { Pass, Fail, Info };

std::string_view to_string(Verdict v) noexcept;

/// One reproduced quantity: closed-form prediction, numeric measurement and,
/// where the quantity has a quoted reference figure, that figure.
struct QuantityRecord {
  std::string name;
  std::optional<double> predicted;
  std::optional<double> measured;
  std::optional<double> paper_value;
  std::optional<double> tolerance;
  Verdict verdict = Verdict::Info;
  std::string note;

  bool operator==(const QuantityRecord&) const = default;
};

struct RunReport {
  std::string scenario;
  std::string units;
  std::uint64_t seed = 0;
  std::map<std::string, double> parameters;
  std::vector<QuantityRecord> records;
  std::vector<std::string> warnings;
  /// Wall time; only serialized on request so that reports stay byte-stable.
  double timing_seconds = 0.0;

  bool any_fail() const;
  bool operator==(const RunReport&) const = default;
};

enum class ReportFormat { Json, Csv };

struct EmitOptions {
  bool with_timing = false;
};

std::string emit_report(const RunReport& report, ReportFormat format, EmitOptions opts = {});
std::string emit_reports(const std::vector<RunReport>& reports, ReportFormat format,
                         EmitOptions opts = {});

/// Inverse of the JSON form of emit_report.
RunReport parse_report_json(std::string_view json);

/// Write-temp-then-rename. Throws IoError.
void write_file_atomic(const std::string& path, std::string_view bytes);

}  // namespace grw
