#include "hwc/report.hpp"

#include <openssl/evp.h>

#include <iomanip>
#include <sstream>

namespace hwc {

const char* library_version() { return HWC_VERSION; }

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr)) throw std::runtime_error("sha256 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return os.str();
}

Json make_report(const std::string& command, const std::string& source, const std::string& input_text, bool ok, Json results) {
  Json r;
  r["schema"] = kReportSchema;
  r["version"] = library_version();
  r["command"] = command;
  r["input"] = {{"source", source}, {"sha256", sha256_hex(input_text)}};
  r["ok"] = ok;
  r["results"] = std::move(results);
  return r;
}

std::string render_json(const Json& r) { return r.dump(2) + "\n"; }

Json parse_report(const std::string& text) {
  Json r = Json::parse(text);
  if (!r.is_object() || r.value("schema", "") != kReportSchema) throw std::runtime_error("not an " + std::string(kReportSchema) + " document");
  return r;
}

namespace {

bool is_table(const Json& j) { return j.is_object() && j.contains("rows") && j.contains("row_labels") && j.contains("col_labels"); }

std::string scalar_str(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array() && !j.empty() && j[0].is_array()) {
    std::string s;
    for (const auto& t : j) {
      long long c = t[1].get<long long>();
      int e = t[0].get<int>();
      if (!s.empty()) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      long long a = c < 0 ? -c : c;
      if (a != 1 || e == 0) s += std::to_string(a);
      if (e) s += e == 1 ? "t" : "t^" + std::to_string(e);
    }
    return s.empty() ? "0" : s;
  }
  return j.dump();
}

void text(std::ostringstream& os, const std::string& key, const Json& j, int indent) {
  std::string pad(indent, ' ');
  if (is_table(j)) {
    os << pad << key << ":\n";
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> head{""};
    for (const auto& c : j["col_labels"]) head.push_back(c.get<std::string>());
    cells.push_back(head);
    for (size_t r = 0; r < j["rows"].size(); ++r) {
      std::vector<std::string> row{j["row_labels"][r].get<std::string>()};
      for (const auto& x : j["rows"][r]) row.push_back(scalar_str(x));
      cells.push_back(row);
    }
    std::vector<size_t> w(head.size(), 0);
    for (const auto& row : cells)
      for (size_t c = 0; c < row.size(); ++c) w[c] = std::max(w[c], row[c].size());
    for (const auto& row : cells) {
      os << pad << "  ";
      for (size_t c = 0; c < row.size(); ++c) os << std::setw(static_cast<int>(w[c]) + (c ? 2 : 0)) << row[c];
      os << "\n";
    }
    return;
  }
  if (j.is_object()) {
    os << pad << key << ":\n";
    for (const auto& [k, v] : j.items()) text(os, k, v, indent + 2);
    return;
  }
  if (j.is_array() && !j.empty() && (j[0].is_object() || (j[0].is_array() && !j[0].empty() && !j[0][0].is_number()))) {
    os << pad << key << ":\n";
    for (size_t i = 0; i < j.size(); ++i) text(os, "[" + std::to_string(i) + "]", j[i], indent + 2);
    return;
  }
  if (j.is_array()) {
    os << pad << key << ": ";
    bool poly = !j.empty() && j[0].is_array();
    if (poly) os << scalar_str(j);
    else
      for (size_t i = 0; i < j.size(); ++i) os << (i ? " " : "") << scalar_str(j[i]);
    os << "\n";
    return;
  }
  os << pad << key << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

}  // namespace

std::string render_text(const Json& r) {
  std::ostringstream os;
  os << r.value("command", "") << " [" << (r.value("ok", false) ? "PASS" : "FAIL") << "]  version " << r.value("version", "") << "  input "
     << r["input"].value("source", "") << " sha256 " << r["input"].value("sha256", "").substr(0, 16) << "\n";
  if (r.contains("results"))
    for (const auto& [k, v] : r["results"].items()) text(os, k, v, 0);
  return os.str();
}

Json laurent_json(const LaurentPoly& p) {
  Json j = Json::array();
  for (const auto& [e, c] : p.terms()) j.push_back({e, c});
  return j;
}

LaurentPoly laurent_from_json(const Json& j) {
  LaurentPoly p;
  for (const auto& t : j) p.add_term(t[0].get<int>(), t[1].get<long long>());
  return p;
}

Json matrix_json(const std::vector<std::string>& row_labels, const std::vector<std::string>& col_labels, const Json& rows) {
  return {{"row_labels", row_labels}, {"col_labels", col_labels}, {"rows", rows}};
}

Json scalar_matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

}  // namespace hwc
