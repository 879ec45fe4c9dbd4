#pragma once

// Generator alphabet and free-group words.
//
// A Word is a freely reduced sequence of (generator, exponent) syllables.
// Braid letters carry a family (classical sigma, singular tau, virtual v) and
// a 1-based strand index; abstract letters carry a 0-based ordinal into some
// presentation's generator list and are used for kernel presentations, free
// factors and free-group automorphisms.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vsg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Family : std::uint8_t { Classical, Singular, Virtual, Abstract };

struct Generator {
  Family family = Family::Abstract;
  int index = 0;

  friend constexpr auto operator<=>(Generator, Generator) = default;
};

constexpr Generator sigma(int i) { return {Family::Classical, i}; }
constexpr Generator tau(int i) { return {Family::Singular, i}; }
constexpr Generator virt(int i) { return {Family::Virtual, i}; }
constexpr Generator abstract_gen(int k) { return {Family::Abstract, k}; }

constexpr bool is_braid(Generator g) { return g.family != Family::Abstract; }

// "s3", "t1", "v2"; abstract generators render as "x<k>".
std::string default_name(Generator g);

struct Letter {
  Generator gen;
  int exp = 1;

  friend constexpr bool operator==(Letter, Letter) = default;
};

class Word {
 public:
  Word() = default;
  explicit Word(int strands) : strands_(strands) {}
  // Freely reduces `letters`; zero exponents are dropped.
  Word(int strands, std::vector<Letter> const& letters);

  static Word single(int strands, Generator g, int exp = 1);

  int strands() const noexcept { return strands_; }
  std::span<Letter const> letters() const noexcept { return letters_; }
  std::size_t syllables() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  // Sum of |exponent|, i.e. the number of unit letters.
  std::size_t length() const noexcept;

  // Unit-letter expansion: every exponent becomes +1 or -1.
  std::vector<Letter> expand() const;

  Letter const& operator[](std::size_t i) const { return letters_[i]; }

  friend bool operator==(Word const&, Word const&) = default;
  friend auto operator<=>(Word const& a, Word const& b) {
    if (auto c = a.strands_ <=> b.strands_; c != 0) return c;
    return std::lexicographical_compare_three_way(
        a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
        b.letters_.end(), [](Letter x, Letter y) {
          if (auto c = x.gen <=> y.gen; c != 0) return c;
          return x.exp <=> y.exp;
        });
  }

 private:
  int strands_ = 0;
  std::vector<Letter> letters_;
};

// Free reduction of an arbitrary letter sequence.
std::vector<Letter> free_reduce(std::span<Letter const> letters);

Word free_reduce(Word const& w);
Word concat(Word const& a, Word const& b);
Word invert(Word const& a);
Word power(Word const& a, int k);
// Strips conjugating prefix/suffix pairs, merging the ends when they share a
// generator, so that the result is a cyclic conjugate of the input.
Word cyclic_reduce(Word const& a);
// Rotation of the unit expansion by `k` letters to the left, then reduced.
Word rotate(Word const& a, std::size_t k);

// Canonical representative of {rotations of w, rotations of w^-1}; used for
// relator deduplication.
std::vector<Letter> cyclic_canonical(Word const& w);

// Recognises the braid letter names s<i>, t<i>, v<i>.
bool parse_braid_symbol(std::string_view name, Generator& g);

// Word grammar:  token := ("s"|"t"|"v") digits ["^" ["-"] digits]
//                word  := "e" | token (SP token)*
Word parse_word(std::string_view text, int strands);
std::string format_word(Word const& w);

// Same grammar, but tokens are looked up in `names` (position = abstract
// ordinal). A name of the shape s<i>/t<i>/v<i> resolves through `gens`.
Word parse_word(std::string_view text, std::span<std::string const> names,
                std::span<Generator const> gens, int strands);
std::string format_word(Word const& w, std::span<std::string const> names,
                        std::span<Generator const> gens);

}  // namespace vsg
