#pragma once

// Seeded sampling helpers. Every sample gets its own generator derived from
// (seed, index), so batches produce the same values in any execution order.

#include <cstdint>
#include <random>
#include <span>

#include "vsg/presentation.hpp"
#include "vsg/word.hpp"

namespace vsg {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(index + 1)));
}

// Uniform letters over `gens` with exponents in {-2,-1,1,2}; length is the
// number of syllables drawn before free reduction.
Word random_word(std::mt19937_64& rng, std::span<Generator const> gens, int strands,
                 int max_length);

inline Word random_word(std::mt19937_64& rng, Presentation const& p, int max_length) {
  return random_word(rng, p.generators(), p.strands(), max_length);
}

}  // namespace vsg
