#pragma once

// Cross-module checks reproducing the published claims. Each check carries its
// own independent oracle (bisection, finite differences, brute-force sweeps)
// and the tolerance it is judged at.

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace diracwell {

struct CriterionResult {
  int id{};
  std::string name;
  bool passed{};
  std::string detail;
  double seconds{};
  double budget_seconds{};
};

CriterionResult check_threshold_reproduction();       // 1
CriterionResult check_threshold_nonrel_limit();       // 2
CriterionResult check_width_structure();              // 3
CriterionResult check_phase_staircase();              // 4
CriterionResult check_derivative_oracle();            // 5
CriterionResult check_low_energy_asymptotics();       // 6
/// Criteria 7 and 8 share one packet campaign.
std::vector<CriterionResult> check_packet_campaign();  // 7, 8
CriterionResult check_nonrel_comparison();            // 9

/// Criteria 1 through 9 in order.
std::vector<CriterionResult> run_validation_suite();

/// One "[PASS]/[FAIL] <id> <name>: <detail>" line per result.
void print_results(const std::vector<CriterionResult>& results, std::ostream& os);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace diracwell
