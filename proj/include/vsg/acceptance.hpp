#pragma once

// The acceptance battery: twelve numbered criteria, each returning a
// pass/fail verdict with human-readable detail lines.

#include <cstdint>
#include <string>
#include <vector>

#include "vsg/abelian.hpp"
#include "vsg/batch.hpp"

namespace vsg {

inline constexpr int kCriterionCount = 12;

struct SuiteOptions {
  std::uint64_t seed = 20240611;
  Exec exec = Exec::Parallel;
  std::uint64_t samples = 10'000;        // criteria 9 and 10
  std::uint64_t center_samples = 1'000;  // criterion 12
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::vector<std::string> details;
  double seconds = 0;
};

std::string criterion_title(int id);
CriterionResult run_criterion(int id, SuiteOptions const& opts = {});
std::vector<CriterionResult> run_suite(SuiteOptions const& opts = {});

// "PASS   1  Triple classification  (0.12 s)"; the time is omitted when
// `timing` is false so that output is reproducible.
std::string format_result_line(CriterionResult const& r, bool timing = true);

// Gamma_2/Gamma_3 through the plain integer span of the relator images
// (a_r, b_r) and the brackets [a_r, e_i] in Z^k + Z^K, intersected with
// 0 + Z^K by echelon elimination on the abelian columns.
AbelianInvariants class2_linear_oracle(Presentation const& p);

}  // namespace vsg
