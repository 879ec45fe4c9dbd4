#include "vsg/free_group.hpp"

#include <sstream>

namespace vsg {

Word basis_word(int k, int exp) { return Word::single(0, abstract_gen(k), exp); }

FreeGroupAutomorphism::FreeGroupAutomorphism(int rank) {
  if (rank < 0) throw Error("negative free rank");
  for (int k = 0; k < rank; ++k) {
    images_.push_back(basis_word(k));
    inverse_.push_back(basis_word(k));
  }
}

FreeGroupAutomorphism::FreeGroupAutomorphism(std::vector<Word> images,
                                             std::vector<Word> inverse_images)
    : images_(std::move(images)), inverse_(std::move(inverse_images)) {
  if (images_.size() != inverse_.size()) throw Error("rank mismatch in automorphism");
  for (auto const* list : {&images_, &inverse_}) {
    for (auto const& w : *list) {
      for (Letter l : w.letters()) {
        if (l.gen.family != Family::Abstract || l.gen.index < 0 ||
            l.gen.index >= static_cast<int>(images_.size()))
          throw Error("automorphism image outside the basis");
      }
    }
  }
}

Word substitute(std::vector<Word> const& images, Word const& w) {
  std::vector<Letter> out;
  for (Letter l : w.letters()) {
    if (l.gen.family != Family::Abstract || l.gen.index < 0 ||
        l.gen.index >= static_cast<int>(images.size()))
      throw Error("letter " + default_name(l.gen) + " outside the basis");
    Word const& img = images[static_cast<std::size_t>(l.gen.index)];
    Word piece = l.exp > 0 ? img : invert(img);
    for (int e = 0; e < std::abs(l.exp); ++e)
      out.insert(out.end(), piece.letters().begin(), piece.letters().end());
  }
  return Word(0, out);
}

Word aut_apply(FreeGroupAutomorphism const& f, Word const& w) {
  return substitute(f.images(), w);
}

FreeGroupAutomorphism aut_compose(FreeGroupAutomorphism const& f,
                                  FreeGroupAutomorphism const& g) {
  if (f.rank() != g.rank()) throw Error("rank mismatch in aut_compose");
  std::vector<Word> img, inv;
  for (int k = 0; k < f.rank(); ++k) {
    img.push_back(substitute(g.images(), f.image(k)));
    inv.push_back(substitute(f.inverse_images(), g.inverse_image(k)));
  }
  return FreeGroupAutomorphism(std::move(img), std::move(inv));
}

FreeGroupAutomorphism aut_inverse(FreeGroupAutomorphism const& f) {
  return FreeGroupAutomorphism(f.inverse_images(), f.images());
}

bool aut_equal(FreeGroupAutomorphism const& f, FreeGroupAutomorphism const& g) {
  if (f.rank() != g.rank()) throw Error("rank mismatch in aut_equal");
  return f == g;
}

bool aut_inverse_checked(FreeGroupAutomorphism const& f) {
  for (int k = 0; k < f.rank(); ++k) {
    if (substitute(f.inverse_images(), f.image(k)) != basis_word(k)) return false;
    if (substitute(f.images(), f.inverse_image(k)) != basis_word(k)) return false;
  }
  return true;
}

AutGroup::AutGroup(int rank, std::vector<std::string> basis_names)
    : rank_(rank), names_(std::move(basis_names)) {
  if (names_.empty())
    for (int k = 0; k < rank; ++k) names_.push_back("x" + std::to_string(k + 1));
  if (static_cast<int>(names_.size()) != rank) throw Error("basis name count mismatch");
}

std::string AutGroup::format_word(Word const& w) const {
  if (w.empty()) return "e";
  std::ostringstream os;
  bool first = true;
  for (Letter l : w.letters()) {
    os << (first ? "" : " ") << names_.at(static_cast<std::size_t>(l.gen.index));
    if (l.exp != 1) os << '^' << l.exp;
    first = false;
  }
  return os.str();
}

std::string AutGroup::format(Element const& a) const {
  std::ostringstream os;
  os << '{';
  for (int k = 0; k < a.rank(); ++k) {
    os << (k ? ", " : "") << names_[static_cast<std::size_t>(k)] << " -> "
       << format_word(a.image(k));
  }
  os << '}';
  return os.str();
}

}  // namespace vsg
