#pragma once

// Word-problem engines for finitely presented groups and two-way
// isomorphism certificates between presentations.
//
// Exact engines: free products of abelian factors (recognised from
// commutator and power relators), abelian presentations (lattice
// membership), the Coxeter presentation of Z x S_n, and any of these reached
// through Tietze simplification or a confluent Knuth-Bendix system. When
// none applies, a rewriting engine proves triviality by Knuth-Bendix and
// Dehn reductions but never answers "non-trivial"; an undecided check makes
// a certificate invalid.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vsg/free_product.hpp"
#include "vsg/hom.hpp"
#include "vsg/presentation.hpp"

namespace vsg {

enum class Verdict { Trivial, NonTrivial, Unknown };
std::string to_string(Verdict v);

class WordProblem {
 public:
  virtual ~WordProblem() = default;
  // Decides whether a word over the presentation's generators is trivial.
  virtual Verdict decide(Word const& w) const = 0;
  virtual bool exact() const = 0;
  virtual std::string name() const = 0;
};

using Engine = std::shared_ptr<WordProblem const>;

enum class EngineKind { Auto, FreeProduct, Abelian, ZxSn, Rewriting };
EngineKind parse_engine_kind(std::string_view s);
std::string to_string(EngineKind k);

// Free product engine when every relator is a commutator [x,y] or a power
// x^d and commutator edges split the generators into cliques.
std::optional<Engine> recognize_free_product(Presentation const& p);
// Abelian engine when every pair of generators has a commutator relator.
std::optional<Engine> recognize_abelian(Presentation const& p);
// Z x S_m engine when p equals zxsn_presentation(m) up to comments.
std::optional<Engine> recognize_zxsn(Presentation const& p);

struct KnuthBendixLimits {
  std::size_t max_rules = 600;
  std::size_t max_length = 24;
};

// Tietze simplification, then the exact recognisers, then Knuth-Bendix
// completion (exact when it completes), then Dehn reduction.
Engine rewriting_engine(Presentation const& p, KnuthBendixLimits limits = {});

// Throws when the requested kind does not apply.
Engine make_engine(Presentation const& p, EngineKind kind = EngineKind::Auto);

// <t, s1..s{m-1} | s_i^2, (s_i s_{i+1})^3, (s_i s_j)^2, [t, s_i]>
Presentation zxsn_presentation(int m);
// Generators x1..xk, factor by factor; commutators inside abelian factors
// and powers for torsion coordinates.
Presentation presentation_of(FactorSpec const& spec);

// Group given by a presentation; elements are words, equality is decided by
// an engine. Unknown verdicts compare unequal.
class PresentedGroup {
 public:
  using Element = Word;
  explicit PresentedGroup(Presentation p, Engine engine = nullptr);

  Presentation const& presentation() const noexcept { return p_; }
  Engine const& engine() const noexcept { return engine_; }
  Element identity() const { return Word(p_.strands()); }
  Element multiply(Element const& a, Element const& b) const { return concat(a, b); }
  Element invert(Element const& a) const { return vsg::invert(a); }
  bool equal(Element const& a, Element const& b) const;
  Verdict compare(Element const& a, Element const& b) const;
  std::string format(Element const& a) const { return p_.format(a); }
  std::string name() const { return p_.label.empty() ? "presented group" : p_.label; }

 private:
  Presentation p_;
  Engine engine_;
};

struct IsoCertificate {
  Presentation p1;
  Presentation p2;
  std::vector<Word> map12;  // one image over p2 per generator of p1
  std::vector<Word> map21;
};

// Blocks "presentation P1 ... end", "presentation P2 ... end",
// "map12 ... end", "map21 ... end"; map lines read "gen -> word".
std::string format_certificate(IsoCertificate const& c);
IsoCertificate parse_certificate(std::string_view text);

struct IsoCheck {
  std::string name;
  std::size_t total = 0;
  std::size_t proved = 0;
  std::size_t refuted = 0;
  std::size_t undecided = 0;
  std::vector<std::string> failures;  // first few offending items
  bool passed() const noexcept { return proved == total; }
};

struct IsoReport {
  bool valid = false;
  std::string engine1;
  std::string engine2;
  std::vector<IsoCheck> checks;  // relators 1->2, relators 2->1, 21*12, 12*21
  std::string summary() const;
};

// Image of a word over src under the generator images (in src order).
Word apply_map(Presentation const& src, std::vector<Word> const& images, Word const& w, int strands);
// P2 -> P1 with the maps swapped.
IsoCertificate reversed(IsoCertificate c);
// A -> C from A -> B and B -> C; the two B presentations must be equal.
IsoCertificate compose(IsoCertificate const& ab, IsoCertificate const& bc);

IsoReport verify_iso(IsoCertificate const& cert, Engine e1 = nullptr, Engine e2 = nullptr);

}  // namespace vsg
