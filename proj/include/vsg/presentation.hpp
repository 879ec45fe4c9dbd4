#pragma once

// Group presentations and the registry of braid-type families.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vsg/word.hpp"

namespace vsg {

enum class GroupFamily {
  B,
  VB,
  SG,
  VSG,
  WCSG,
  WSG,
  UCVSG,
  UVSG,
  FCVSG,
  FCWSG,
  FWSG,
  GCVSG,
  Custom
};

// The nine quotient families of VSG (VSG itself included), in registry order.
inline constexpr GroupFamily kQuotientFamilies[] = {
    GroupFamily::VSG,   GroupFamily::WCSG,  GroupFamily::WSG,
    GroupFamily::UCVSG, GroupFamily::UVSG,  GroupFamily::FCVSG,
    GroupFamily::FCWSG, GroupFamily::FWSG,  GroupFamily::GCVSG};

enum class RelTag {
  TwoPoint,  // 2PR
  ThreePoint1,
  ThreePoint2,
  ThreePoint3,
  ThreePoint4,
  ThreePoint5,
  Commuting,  // CR
  AR1,
  AR2,
  PR1,
  PR2,
  PR3,
  MR1,
  MR2,
  MR3,
  MR4,
  SR1,
  Q1,
  Q2,
  Q3,
  Q4,
  Q5,
  Q6,
  Custom
};

std::string to_string(GroupFamily f);
GroupFamily parse_family(std::string_view s);
std::string to_string(RelTag t);
RelTag parse_tag(std::string_view s);

// A relation L = R, stored as the cyclically reduced relator L R^-1.
struct Relator {
  Word word;
  Word lhs;
  Word rhs;
  RelTag tag = RelTag::Custom;
};

class Presentation {
 public:
  Presentation() = default;
  Presentation(GroupFamily family, int strands, std::vector<Generator> gens,
               std::vector<std::string> names);

  GroupFamily family() const noexcept { return family_; }
  int strands() const noexcept { return strands_; }
  std::span<Generator const> generators() const noexcept { return gens_; }
  std::span<std::string const> names() const noexcept { return names_; }
  std::span<Relator const> relators() const noexcept { return rels_; }
  std::size_t rank() const noexcept { return gens_.size(); }

  std::optional<std::size_t> index_of(Generator g) const;
  std::size_t require_index(Generator g) const;
  std::string const& name_of(Generator g) const;

  // Adds L = R. Relations whose relator is freely trivial are ignored.
  void add_relation(Word const& lhs, Word const& rhs, RelTag tag);
  void add_relator(Word const& r, RelTag tag);
  // Drops relators equal up to rotation and inversion (first one kept).
  void deduplicate();

  // Generators g with g^2 (or g^-2) among the relators.
  std::vector<Generator> involutions() const;

  Word parse(std::string_view text) const;
  std::string format(Word const& w) const;

  std::vector<std::string> comments;  // verbatim "#..." lines
  std::string label;

  friend bool operator==(Presentation const& a, Presentation const& b);

 private:
  GroupFamily family_ = GroupFamily::Custom;
  int strands_ = 0;
  std::vector<Generator> gens_;
  std::vector<std::string> names_;
  std::vector<Relator> rels_;
  std::vector<std::pair<Generator, std::size_t>> lookup_;
};

Presentation build_presentation(GroupFamily family, int n);

// Closed-form relator count of build_presentation(family, n).
std::size_t relator_census(GroupFamily family, int n);

// Copy of `p` with extra relators, relabelled as a Custom presentation.
Presentation add_relators(Presentation const& p, std::span<Word const> extra,
                          std::string label);

// Custom presentation over abstract generators.
Presentation custom_presentation(std::vector<std::string> names, int strands = 0);

// Line-oriented text format:
//   # comment            (kept verbatim, emitted first)
//   group <FAMILY> n=<int>
//   gen <name>           (Custom only)
//   rel <word> [# TAG]
std::string format_presentation(Presentation const& p);
Presentation parse_presentation(std::string_view text);

enum class Direction { Forward, Inverse };

// Inserts a rotation of r (or of r^-1) at unit-letter `position` of w.
Word apply_relation(Word const& w, Relator const& r, std::size_t position,
                    Direction dir, std::size_t rotation = 0);

}  // namespace vsg
