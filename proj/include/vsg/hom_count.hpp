#pragma once

// Exhaustive enumeration of homomorphisms from a presentation into a small
// finite permutation group.
//
// Generators are assigned in presentation order, images in the group's
// sorted element order; a relator is checked as soon as the last generator
// it mentions has been assigned. count_homs_parallel splits the search over
// the image of the first generator and returns the same count.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vsg/permutation.hpp"
#include "vsg/presentation.hpp"

namespace vsg {

inline constexpr std::size_t kMaxCountGenerators = 5;

std::uint64_t count_homs(Presentation const& p, FiniteGroup const& target);
std::uint64_t count_homs_parallel(Presentation const& p, FiniteGroup const& target);

struct HomFingerprint {
  std::vector<std::pair<std::string, std::uint64_t>> counts;  // target name -> count
  friend bool operator==(HomFingerprint const&, HomFingerprint const&) = default;
};

// Counts into S3 and S4.
HomFingerprint hom_fingerprint(Presentation const& p);
std::string format_fingerprint(HomFingerprint const& f);

struct Separation {
  std::string target;
  std::vector<Permutation> images;  // one per generator of the presentation
  Permutation lhs;
  Permutation rhs;
};

struct SeparationSearch {
  std::optional<Separation> found;
  bool exhausted = false;  // node budget ran out before the search finished
  std::uint64_t nodes = 0;
};

// First homomorphism (in enumeration order over `targets`, then
// assignments) under which a and b have different images.
SeparationSearch search_separating_quotient(Presentation const& p, Word const& a, Word const& b,
                                            std::span<FiniteGroup const> targets,
                                            std::uint64_t node_budget = 50'000'000);

}  // namespace vsg
