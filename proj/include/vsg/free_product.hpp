#pragma once

// Free products of finitely generated abelian and free factors with an
// alternating-syllable normal form, giving an exact word problem.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vsg/word.hpp"

namespace vsg {

struct Factor {
  enum class Kind { Abelian, Free };
  Kind kind = Kind::Abelian;
  int free_rank = 0;              // Z^r part, or rank of a free factor
  std::vector<long long> torsion; // Z_d parts (abelian only)

  static Factor abelian(int rank, std::vector<long long> torsion = {});
  static Factor free(int rank);
  // Number of coordinates (abelian) or basis letters (free).
  int generator_count() const noexcept;
  friend bool operator==(Factor const&, Factor const&) = default;
};

struct FactorSpec {
  std::vector<Factor> factors;
  friend bool operator==(FactorSpec const&, FactorSpec const&) = default;
};

// factor := "Z" ["^" int] | "Z_" int | "F" int, joined by "*".
FactorSpec parse_factor_spec(std::string_view text);
std::string format_factor_spec(FactorSpec const& spec);

// Abelian factor elements are coordinate vectors (free coordinates first,
// then torsion coordinates reduced into [0, d)); free factor elements are
// reduced words over abstract letters x0..x{r-1}.
using FactorElement = std::variant<std::vector<long long>, Word>;

struct Syllable {
  int factor = 0;
  FactorElement value;
  friend bool operator==(Syllable const&, Syllable const&) = default;
};

struct FreeProductElement {
  std::vector<Syllable> syllables;
  bool is_identity() const noexcept { return syllables.empty(); }
  friend bool operator==(FreeProductElement const&, FreeProductElement const&) = default;
};

class FreeProductGroup {
 public:
  using Element = FreeProductElement;
  explicit FreeProductGroup(FactorSpec spec);

  FactorSpec const& spec() const noexcept { return spec_; }
  Element identity() const { return {}; }
  Element multiply(Element const& a, Element const& b) const;
  Element invert(Element const& a) const;
  bool equal(Element const& a, Element const& b) const { return a == b; }
  std::string format(Element const& a) const;
  std::string name() const { return format_factor_spec(spec_); }

  // The j-th generator of factor f (unit coordinate or basis letter).
  Element factor_generator(int factor, int j, int exp = 1) const;
  // Every factor generator, factor by factor.
  std::vector<Element> all_factor_generators() const;
  Element from_factor(int factor, FactorElement value) const;

  // Random element with `syllables` alternating nontrivial syllables.
  template <class Rng>
  Element random_element(Rng& rng, int syllables) const;

 private:
  FactorElement factor_identity(int f) const;
  FactorElement factor_mul(int f, FactorElement const& a, FactorElement const& b) const;
  FactorElement factor_inv(int f, FactorElement const& a) const;
  bool factor_trivial(int f, FactorElement const& a) const;
  FactorElement random_factor_element(std::mt19937_64& rng, int f) const;
  Element random_impl(std::mt19937_64& rng, int syllables) const;

  FactorSpec spec_;
};

template <class Rng>
FreeProductElement FreeProductGroup::random_element(Rng& rng, int syllables) const {
  std::mt19937_64 local(rng());
  return random_impl(local, syllables);
}

// Assignment of each generator of a word's alphabet to an element of one
// factor.
struct FactorAssignment {
  Generator gen;
  int factor = 0;
  FactorElement value;
};

FreeProductElement fp_normalize(Word const& w, FreeProductGroup const& group,
                                std::vector<FactorAssignment> const& assignment);

// Standard VSG_2 identification with Z^2 * Z_2: s1, t1 -> Z^2 basis, v1 -> Z_2.
FreeProductGroup vsg2_free_product();
std::vector<FactorAssignment> vsg2_assignment();
FreeProductElement vsg2_normal_form(Word const& w);
// Normal form rendered back as a VSG_2 word, e.g. "v1 s1^2 t1".
Word vsg2_normal_word(Word const& w);

}  // namespace vsg
