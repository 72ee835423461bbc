// Check outcomes, one record per verified instance, renderable as an aligned
// text listing or JSON.
#pragma once

#include <string>
#include <vector>

namespace orb {

struct CheckReport {
  std::string check;    // e.g. "eq6", "assoc"
  std::string instance; // e.g. "g=1 c=0"
  bool pass = true;
  std::string detail;   // the two unequal sides, on failure
};

int count_failures(const std::vector<CheckReport>& reports);
std::string reports_text(const std::vector<CheckReport>& reports);
std::string reports_json(const std::vector<CheckReport>& reports);

} // namespace orb
