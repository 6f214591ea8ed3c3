#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ifslab/certificate.hpp"
#include "ifslab/landmarks.hpp"
#include "ifslab/paramspace.hpp"

namespace ifslab {

using Json = nlohmann::ordered_json;

std::string_view tool_version();

/// Serializes with every double at 17 significant digits so that parsing the
/// text back gives the same bits.
std::string dump_json(const Json& value, int indent = 2);

Json to_json(Complex z);
Complex complex_from_json(const Json& j);

Json to_json(const RationalTypeSeries& f);
RationalTypeSeries series_from_json(const Json& j);

Json to_json(const ConditionRecord& r);
ConditionRecord condition_from_json(const Json& j);

Json to_json(const CertificateReport& report);
CertificateReport certificate_from_json(const Json& j);

/// What a render run produced, without the pixels.
struct GridSummary {
  Window window;
  int width = 0;
  int height = 0;
  int depth = 0;
  ParamSet set = ParamSet::M;
  std::int64_t survived = 0;
  std::int32_t max_escape = 0;
  std::string output;

  bool operator==(const GridSummary&) const = default;
};

GridSummary summarize(const EscapeGrid& grid, std::string output);
Json to_json(const GridSummary& s);
GridSummary grid_summary_from_json(const Json& j);

Json to_json(const LandmarkOutcome& outcome);

struct ReportEnvelope {
  std::string tool = "ifs_lab";
  std::string version;
  std::string command;
  std::string timestamp;  ///< UTC, ISO 8601
  Json payload;

  bool operator==(const ReportEnvelope&) const = default;
};

ReportEnvelope make_envelope(std::string command, Json payload);
Json to_json(const ReportEnvelope& env);
ReportEnvelope envelope_from_json(const Json& j);

/// Throws ErrorKind::io_error.
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace ifslab
