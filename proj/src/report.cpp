#include "report.hpp"

#include <json.hpp>

namespace ds::verify {

using nlohmann::ordered_json;

std::string to_json(const std::vector<InequalityReport> &reports,
                    const std::map<std::string, std::string> &meta) {
  ordered_json root;
  ordered_json m = ordered_json::object();
  for (auto &[k, v] : meta) m[k] = v;
  root["meta"] = m;
  ordered_json checks = ordered_json::array();
  int failed = 0;
  for (auto &r : reports) {
    ordered_json c;
    c["check_id"] = r.check_id;
    c["paper_anchor"] = r.paper_anchor;
    c["kind"] = r.kind;
    c["grid"] = r.grid_description;
    c["points_checked"] = r.points_checked;
    c["min_margin"] = r.min_margin;
    c["margin_scale"] = r.margin_scale;
    ordered_json w = ordered_json::object();
    for (auto &[k, v] : r.witness) w[k] = v;
    c["witness"] = w;
    c["passed"] = r.passed;
    if (!r.strict) c["strict"] = false;
    if (!r.note.empty()) c["note"] = r.note;
    checks.push_back(c);
    if (!r.passed) ++failed;
  }
  root["checks"] = checks;
  root["summary"] = {{"total", reports.size()},
                     {"passed", reports.size() - failed},
                     {"failed", failed}};
  return root.dump(2) + "\n";
}

std::string to_csv(const std::vector<InequalityReport> &reports) {
  std::string out =
      "check_id,kind,points_checked,min_margin,margin_scale,witness,passed\n";
  for (auto &r : reports) {
    std::string wit;
    for (auto &[k, v] : r.witness) {
      if (!wit.empty()) wit += ";";
      wit += k + "=" + ordered_json(v).dump();
    }
    out += r.check_id + "," + r.kind + "," +
           std::to_string(r.points_checked) + "," +
           ordered_json(r.min_margin).dump() + "," + r.margin_scale + ",\"" +
           wit + "\"," + (r.passed ? "true" : "false") + "\n";
  }
  return out;
}

}  // namespace ds::verify
