#pragma once

// Permutations of {1..m}, m <= 16, and the symmetric-group targets built on
// them. Products read left to right: (p*q)(x) = q(p(x)).

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vsg/word.hpp"

namespace vsg {

inline constexpr int kMaxDegree = 16;

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);  // identity
  // One-line notation, 1-based images.
  static Permutation from_images(std::vector<int> const& images);
  static Permutation transposition(int degree, int i, int j);

  int degree() const noexcept { return degree_; }
  // 1-based image of x.
  int operator()(int x) const { return img_[static_cast<std::size_t>(x - 1)] + 1; }
  bool is_identity() const noexcept;
  int inversions() const noexcept;
  int sign() const noexcept { return inversions() % 2 == 0 ? 1 : -1; }
  std::vector<int> images() const;
  // Cycle type, descending, fixed points omitted.
  std::vector<int> cycle_type() const;

  friend bool operator==(Permutation const&, Permutation const&) = default;
  friend auto operator<=>(Permutation const&, Permutation const&) = default;

 private:
  int degree_ = 0;
  std::array<std::uint8_t, kMaxDegree> img_{};  // 0-based images
};

Permutation compose(Permutation const& p, Permutation const& q);
Permutation inverse(Permutation const& p);
Permutation conjugate(Permutation const& p, Permutation const& by);  // by^-1 p by

// "[3,1,2]"
std::string format_perm(Permutation const& p);
// "(1 3 2)(4 5)"; identity renders as "()"
std::string format_cycles(Permutation const& p);
// Accepts one-line "[3,1,2]" or cycle notation "(1 3 2)(4 5)" / "()".
Permutation parse_perm(std::string_view text, int degree);

// All m! permutations in lexicographic one-line order.
std::vector<Permutation> all_permutations(int degree);

// Word evaluation with one permutation per braid generator family.
struct PermAssignment {
  int degree = 0;
  std::vector<Permutation> sigma, tau, virt;  // index i-1 holds the image of gen i
};
Permutation perm_from_word(Word const& w, PermAssignment const& images);

class SymmetricGroup {
 public:
  using Element = Permutation;
  explicit SymmetricGroup(int degree);
  int degree() const noexcept { return degree_; }
  Element identity() const { return Permutation(degree_); }
  Element multiply(Element const& a, Element const& b) const { return compose(a, b); }
  Element invert(Element const& a) const { return inverse(a); }
  bool equal(Element const& a, Element const& b) const { return a == b; }
  std::string format(Element const& a) const { return format_cycles(a); }
  std::string name() const { return "S" + std::to_string(degree_); }

 private:
  int degree_;
};

struct ZxSnElement {
  long long shift = 0;
  Permutation perm;
  friend bool operator==(ZxSnElement const&, ZxSnElement const&) = default;
};

class ZxSnGroup {
 public:
  using Element = ZxSnElement;
  explicit ZxSnGroup(int degree);
  int degree() const noexcept { return degree_; }
  Element identity() const { return {0, Permutation(degree_)}; }
  Element multiply(Element const& a, Element const& b) const {
    return {a.shift + b.shift, compose(a.perm, b.perm)};
  }
  Element invert(Element const& a) const { return {-a.shift, inverse(a.perm)}; }
  bool equal(Element const& a, Element const& b) const { return a == b; }
  // "(2,(1 2))"
  std::string format(Element const& a) const;
  std::string name() const { return "ZxS" + std::to_string(degree_); }

 private:
  int degree_;
};

// Z^r x Z_{d1} x ... with componentwise addition; modulus 0 marks a free
// coordinate.
class AbelianGroup {
 public:
  using Element = std::vector<long long>;
  explicit AbelianGroup(std::vector<long long> moduli);
  std::size_t rank() const noexcept { return moduli_.size(); }
  Element identity() const { return Element(moduli_.size(), 0); }
  Element unit(std::size_t i, long long k = 1) const;
  Element multiply(Element const& a, Element const& b) const;
  Element invert(Element const& a) const;
  bool equal(Element const& a, Element const& b) const { return a == b; }
  std::string format(Element const& a) const;
  std::string name() const;

 private:
  Element normalize(Element a) const;
  std::vector<long long> moduli_;
};

// Finite permutation group given by generators; elements are indices into a
// sorted element list with a full multiplication table.
class FiniteGroup {
 public:
  using Element = int;
  static constexpr std::size_t kMaxOrder = 5040;

  FiniteGroup(int degree, std::vector<Permutation> const& generators,
              std::string name = {});
  static FiniteGroup symmetric(int degree);

  std::size_t order() const noexcept { return elements_.size(); }
  int degree() const noexcept { return degree_; }
  Permutation const& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
  int index_of(Permutation const& p) const;  // -1 if absent

  Element identity() const { return identity_; }
  Element multiply(Element a, Element b) const {
    return table_[static_cast<std::size_t>(a) * elements_.size() +
                  static_cast<std::size_t>(b)];
  }
  Element invert(Element a) const { return inverse_[static_cast<std::size_t>(a)]; }
  bool equal(Element a, Element b) const { return a == b; }
  std::string format(Element a) const { return format_cycles(element(a)); }
  std::string const& name() const { return name_; }

 private:
  int degree_;
  std::string name_;
  std::vector<Permutation> elements_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

// Images of the adjacent transpositions (i i+1), i = 1..5, under a fixed
// outer automorphism of S6, found by ordered search.
struct OuterS6 {
  std::vector<Permutation> images;
  std::size_t generated_order = 0;    // order of <images>; 720 for an automorphism
  bool coxeter_relations = false;
  bool non_inner = false;             // no conjugator among all 720 elements
  bool square_inner = false;          // nu o nu is inner
};
OuterS6 const& outer_automorphism_s6();

// Applies a map defined on adjacent transpositions to an arbitrary
// permutation through a reduced decomposition.
Permutation apply_on_transpositions(std::vector<Permutation> const& images,
                                    Permutation const& p);

}  // namespace vsg
