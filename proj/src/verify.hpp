// The mathematical identity suites on a loaded datum: the age-class
// reflection identity on each sector, the two-sided excess identity of the
// obstruction classes on triple sectors, associativity and twisted
// commutativity of the products, compatibility of the sector-wise Chern
// twist with the two product normalizations, and obstruction rank and
// degree-additivity checks.
#pragma once

#include "report.hpp"
#include "stringy.hpp"

namespace orb {

enum SuiteBit : unsigned {
  SUITE_EQ6 = 1,
  SUITE_EQ1 = 2,
  SUITE_ASSOC = 4,
  SUITE_COMM = 8,
  SUITE_CHERN = 16,
  SUITE_RANK = 32,
  SUITE_ALL = 63,
};

std::vector<CheckReport> check_eq6(const OrbifoldDatum& d);
std::vector<CheckReport> check_eq1(const OrbifoldDatum& d);
std::vector<CheckReport> check_assoc(const OrbifoldDatum& d, Theory t);
std::vector<CheckReport> check_comm(const OrbifoldDatum& d, Theory t);
std::vector<CheckReport> check_chern(const OrbifoldDatum& d);
std::vector<CheckReport> check_rank_grading(const OrbifoldDatum& d);

// Runs the masked suites; theory-dependent suites run once per enabled theory.
std::vector<CheckReport> run_suites(const OrbifoldDatum& d, bool do_chow, bool do_k, unsigned mask);

} // namespace orb
