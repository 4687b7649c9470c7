#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qlat/morphisms.hpp"
#include "qlat/report.hpp"

namespace qlat {

/// A registered, machine-checkable statement. `check` fills outcome, measured
/// value and witness; the runner adds id and timing.
struct Claim {
  std::string id;
  std::string statement;
  std::uint64_t cost = 0;  // rough node estimate, for scheduling and display
  std::function<ClaimReport(const SearchOptions&)> check;
};

struct ClaimSummary {
  std::string id;
  std::string statement;
  std::uint64_t cost = 0;
};

/// The registry in id order. Ids are unique and statements have at least three
/// words; both are enforced when the registry is first built.
const std::vector<Claim>& claim_registry();
std::vector<ClaimSummary> claim_manifest();

struct RunOptions {
  std::size_t threads = 1;
  std::uint64_t node_budget = 100'000'000;
};

/// Runs every claim whose id starts with `prefix` (all when empty). Reports are
/// ordered by id regardless of thread count. Exceptions become Fail reports
/// and budget exhaustion becomes BudgetExceeded.
std::vector<ClaimReport> run_claims(std::string_view prefix = {}, const RunOptions& options = {});

/// True iff no report is Fail.
bool all_passed(const std::vector<ClaimReport>& reports);

std::string reports_to_json(const std::vector<ClaimReport>& reports);
std::string reports_to_table(const std::vector<ClaimReport>& reports);

}  // namespace qlat
