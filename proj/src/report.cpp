#include "report.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace orb {

int count_failures(const std::vector<CheckReport>& reports) {
  int n = 0;
  for (const auto& r : reports)
    if (!r.pass) ++n;
  return n;
}

std::string reports_text(const std::vector<CheckReport>& reports) {
  std::size_t wc = 0, wi = 0;
  for (const auto& r : reports) {
    wc = std::max(wc, r.check.size());
    wi = std::max(wi, r.instance.size());
  }
  std::ostringstream out;
  for (const auto& r : reports) {
    out << (r.pass ? "[pass] " : "[FAIL] ");
    out << r.check << std::string(wc - r.check.size() + 2, ' ');
    out << r.instance << std::string(wi - r.instance.size() + 2, ' ');
    out << (r.pass ? "ok" : r.detail) << "\n";
  }
  out << "total: " << reports.size() << " checks, " << count_failures(reports) << " failures\n";
  return out.str();
}

std::string reports_json(const std::vector<CheckReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json o{{"check", r.check}, {"instance", r.instance}, {"pass", r.pass}};
    if (!r.pass) o["detail"] = r.detail;
    arr.push_back(std::move(o));
  }
  nlohmann::json doc{{"checks", arr}, {"failures", count_failures(reports)}};
  return doc.dump(2) + "\n";
}

} // namespace orb
