#pragma once

// Automorphisms of a free group F_k on abstract letters x0..x{k-1}.
// An automorphism acts on the right: compose(f, g) applies f, then g,
// so word evaluation into Aut(F_k) is a homomorphism.

#include <string>
#include <vector>

#include "vsg/word.hpp"

namespace vsg {

Word basis_word(int k, int exp = 1);

class FreeGroupAutomorphism {
 public:
  FreeGroupAutomorphism() = default;
  explicit FreeGroupAutomorphism(int rank);  // identity
  FreeGroupAutomorphism(std::vector<Word> images, std::vector<Word> inverse_images);

  int rank() const noexcept { return static_cast<int>(images_.size()); }
  Word const& image(int k) const { return images_.at(static_cast<std::size_t>(k)); }
  Word const& inverse_image(int k) const { return inverse_.at(static_cast<std::size_t>(k)); }
  std::vector<Word> const& images() const noexcept { return images_; }
  std::vector<Word> const& inverse_images() const noexcept { return inverse_; }

  friend bool operator==(FreeGroupAutomorphism const& a, FreeGroupAutomorphism const& b) {
    return a.images_ == b.images_;
  }

 private:
  std::vector<Word> images_;
  std::vector<Word> inverse_;
};

// Substitutes basis images and freely reduces.
Word aut_apply(FreeGroupAutomorphism const& f, Word const& w);
// Substitution by an arbitrary image list (used for inverse images).
Word substitute(std::vector<Word> const& images, Word const& w);
FreeGroupAutomorphism aut_compose(FreeGroupAutomorphism const& f,
                                  FreeGroupAutomorphism const& g);
FreeGroupAutomorphism aut_inverse(FreeGroupAutomorphism const& f);
bool aut_equal(FreeGroupAutomorphism const& f, FreeGroupAutomorphism const& g);
// Both compositions with the stored inverse fix every basis element.
bool aut_inverse_checked(FreeGroupAutomorphism const& f);

class AutGroup {
 public:
  using Element = FreeGroupAutomorphism;
  explicit AutGroup(int rank, std::vector<std::string> basis_names = {});
  int rank() const noexcept { return rank_; }
  Element identity() const { return FreeGroupAutomorphism(rank_); }
  Element multiply(Element const& a, Element const& b) const { return aut_compose(a, b); }
  Element invert(Element const& a) const { return aut_inverse(a); }
  bool equal(Element const& a, Element const& b) const { return a == b; }
  // "{x1 -> x1 x2 x1^-1, x2 -> x1}"
  std::string format(Element const& a) const;
  std::string name() const { return "Aut(F" + std::to_string(rank_) + ")"; }
  std::string format_word(Word const& w) const;

 private:
  int rank_;
  std::vector<std::string> names_;
};

}  // namespace vsg
