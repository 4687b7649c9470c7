#pragma once

#include <optional>
#include <string>

namespace qlat {

enum class Outcome { Pass, Fail, BudgetExceeded, NotVerifiableByConstruction };

std::string to_string(Outcome outcome);

/// Result of one machine-checked statement. A failing report carries the
/// counterexample in `witness`.
struct ClaimReport {
  std::string id;
  Outcome outcome = Outcome::Pass;
  std::string measured;
  std::optional<std::string> witness;
  double seconds = 0.0;
};

}  // namespace qlat
