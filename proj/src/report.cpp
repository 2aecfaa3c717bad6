#include "hgforge/report.hpp"

namespace hgforge {

std::string index_tuple(const std::vector<std::size_t>& indices) {
  std::string out = "(";
  for (std::size_t t = 0; t < indices.size(); ++t) out += (t ? "," : "") + std::to_string(indices[t]);
  return out + ")";
}

ordered_json to_json(const PropertyReport& report) {
  ordered_json j;
  j["property"] = property_name(report.property);
  j["holds"] = report.holds;
  j["violations"] = report.violations;
  ordered_json witnesses = ordered_json::array();
  for (const auto& w : report.witnesses) {
    ordered_json wj;
    wj["indices"] = w.indices;
    wj["what"] = w.what;
    wj["expected"] = w.expected;
    wj["actual"] = w.actual;
    witnesses.push_back(std::move(wj));
  }
  j["witnesses"] = std::move(witnesses);
  return j;
}

ordered_json to_json(const ConditionAReport& report) {
  ordered_json j;
  j["distinct_columns"] = report.distinct_columns;
  j["left_ranks"] = report.left_ranks;
  j["right_ranks"] = report.right_ranks;
  j["holds"] = report.holds;
  return j;
}

std::string to_text(const PropertyReport& report, const std::string& indent) {
  std::string out = indent + property_name(report.property) + ": ";
  if (report.holds) return out + "holds\n";
  out += "fails (" + std::to_string(report.violations) + " violation" +
         (report.violations == 1 ? "" : "s") + ")\n";
  for (const auto& w : report.witnesses) {
    out += indent + "  " + (w.indices.empty() ? std::string() : index_tuple(w.indices) + " ") + w.what;
    if (!w.expected.empty() || !w.actual.empty())
      out += ": expected " + w.expected + ", got " + w.actual;
    out += "\n";
  }
  if (report.witnesses.size() < report.violations)
    out += indent + "  ... " + std::to_string(report.violations - report.witnesses.size()) + " more\n";
  return out;
}

}  // namespace hgforge
