#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "genfrac/analysis.hpp"

namespace genfrac {

/// Seeded batches of identity checks on random parameter draws.
enum class Suite { Shift, Semigroup, Product, Bounded, Reductions, HadamardLimit };

inline constexpr Suite kAllSuites[] = {Suite::Shift,   Suite::Semigroup,  Suite::Product,
                                       Suite::Bounded, Suite::Reductions, Suite::HadamardLimit};

std::string_view to_string(Suite s) noexcept;
std::optional<Suite> parse_suite(std::string_view name);

struct CaseOutcome {
  int index = 0;
  std::string description;
  IdentityReport report;
  std::string error;  // non-empty when the case threw
};

struct SuiteSummary {
  Suite suite = Suite::Shift;
  int cases = 0;
  int passed = 0;
  double worst_rel_diff = 0.0;
  std::vector<CaseOutcome> outcomes;

  bool all_passed() const noexcept { return passed == cases; }
};

/// Case i draws from its own generator seeded by (seed, suite, i), so a case
/// is reproducible regardless of which other suites or cases run.
SuiteSummary run_suite(Suite suite, std::uint64_t seed, int cases);

/// One line: `<suite>: <passed>/<cases> pass, worst rel_diff <value>`.
std::string format_summary(const SuiteSummary& summary);

}  // namespace genfrac
