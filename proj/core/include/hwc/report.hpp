#pragma once

#include <json.hpp>

#include "hwc/laurent.hpp"
#include "hwc/matrix.hpp"

namespace hwc {

using Json = nlohmann::json;  // keys are kept sorted

inline constexpr const char* kReportSchema = "hwc-report/1";
const char* library_version();

std::string sha256_hex(const std::string& data);

// {"schema", "version", "command", "input": {"source", "sha256"}, "ok", "results"}
Json make_report(const std::string& command, const std::string& source, const std::string& input_text, bool ok, Json results);

std::string render_json(const Json& r);
Json parse_report(const std::string& text);
std::string render_text(const Json& r);

Json laurent_json(const LaurentPoly& p);  // sorted [exponent, coefficient] pairs
LaurentPoly laurent_from_json(const Json& j);
Json matrix_json(const std::vector<std::string>& row_labels, const std::vector<std::string>& col_labels, const Json& rows);
Json scalar_matrix_json(const Matrix& m);

}  // namespace hwc
