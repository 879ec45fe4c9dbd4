#pragma once

// Seeded property batches. Sample i draws from sample_rng(seed, i), so the
// serial and OpenMP runs see identical inputs and report identical results.

#include <cstdint>
#include <optional>

#include "vsg/presentation.hpp"

namespace vsg {

struct BatchResult {
  std::uint64_t samples = 0;
  std::uint64_t failures = 0;
  std::optional<std::uint64_t> first_failure;  // smallest failing index
  bool ok() const noexcept { return failures == 0; }
  friend bool operator==(BatchResult const&, BatchResult const&) = default;
};

enum class Exec { Serial, Parallel };

template <class Check>
BatchResult run_batch(std::uint64_t count, Check const& check, Exec exec) {
  std::uint64_t failures = 0;
  std::uint64_t first = count;
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : failures) reduction(min : first)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
      if (!check(static_cast<std::uint64_t>(i))) {
        ++failures;
        first = std::min(first, static_cast<std::uint64_t>(i));
      }
    }
  } else {
    for (std::uint64_t i = 0; i < count; ++i) {
      if (!check(i)) {
        ++failures;
        first = std::min(first, i);
      }
    }
  }
  BatchResult r{count, failures, std::nullopt};
  if (first < count) r.first_failure = first;
  return r;
}

// Which exponent data a family preserves: all four sums, or (for the
// sigma^2 = 1 families) exp^S, parity and exp^C mod 2.
enum class Invariance { Full, ModTwo };
Invariance invariance_of(GroupFamily f);

// Random word, random relator of (family, n) inserted at a random place;
// passes when the preserved exponent data is unchanged.
BatchResult invariance_batch(GroupFamily family, int n, std::uint64_t samples, std::uint64_t seed,
                             Exec exec = Exec::Parallel);

// decompose() round trip over random VSG words with 2 <= n <= max_n.
BatchResult decompose_batch(int max_n, std::uint64_t samples, std::uint64_t seed, Exec exec = Exec::Parallel);

// Random nontrivial free-product elements must fail to commute with some
// factor generator.
BatchResult trivial_center_batch(std::string const& factor_spec, std::uint64_t samples, std::uint64_t seed,
                                 Exec exec = Exec::Parallel);

}  // namespace vsg
