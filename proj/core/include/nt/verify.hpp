#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "nt/hyper_formula.hpp"

namespace nt {

enum class Profile { Quick, Full };

Profile parse_profile(std::string_view text);
std::string_view to_string(Profile p);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool correct = false;
  double seconds = 0.0;
  double limit_seconds = 0.0;
  std::string detail;

  bool passed() const { return correct && seconds <= limit_seconds; }
};

/// Runs the acceptance criteria in order. Quick shrinks the scanned ranges;
/// time limits are the same in both profiles. `tamper` perturbs the k*x*y
/// closed form so criterion 9 must fail. `on_result` fires after each one.
std::vector<CriterionResult> verify_all(Profile profile, unsigned jobs = 1, bool tamper = false,
                                        const std::function<void(const CriterionResult&)>& on_result = {});

/// Deterministic formula corpus: tree number `index` with 1..max_leaves
/// leaves over symbols x, y, z and levels 0..3.
HyperFormula sample_formula(std::uint64_t index, int max_leaves = 8);

}  // namespace nt
