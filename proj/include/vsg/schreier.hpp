#pragma once

// Reidemeister-Schreier rewriting for kernels of maps onto finite groups,
// Tietze simplification, and the kernel presentation pipeline.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vsg/hom.hpp"
#include "vsg/presentation.hpp"

namespace vsg {

// Cosets of the kernel are the image elements. Representatives are found by
// breadth-first search with letters tried virtual first, then classical, then
// singular (abstract generators last, in presentation order), which keeps the
// transversal prefix-closed.
struct CosetTable {
  Presentation source;
  std::vector<Word> transversal;                 // coset -> representative
  std::vector<std::vector<std::size_t>> action;  // [coset][generator index] -> coset
  std::vector<std::string> images;               // formatted image of each coset

  std::size_t size() const noexcept { return transversal.size(); }
  // Coset reached from the identity coset by reading w.
  std::size_t coset_of(Word const& w) const;
  std::size_t preimage(std::size_t coset, std::size_t gen) const;
};

std::vector<std::size_t> bfs_letter_order(Presentation const& p);

template <TargetGroup G>
CosetTable coset_table_from_hom(GeneratorMap<G> const& m) {
  auto report = verify_homomorphism(m);
  if (!report.is_homomorphism) {
    auto const& f = report.failures.front();
    throw Error("not a homomorphism: " + f.relation + " maps to " + f.lhs_image + " vs " +
                f.rhs_image);
  }
  auto const& p = m.source();
  auto const& g = m.target();
  auto const order = bfs_letter_order(p);
  CosetTable t{p, {Word(p.strands())}, {}, {}};
  std::vector<typename G::Element> elems{g.identity()};
  for (std::size_t c = 0; c < elems.size(); ++c) {
    t.action.emplace_back(p.rank());
    for (std::size_t gi : order) {
      auto x = g.multiply(elems[c], m.images()[gi]);
      std::size_t k = 0;
      while (k < elems.size() && !g.equal(elems[k], x)) ++k;
      if (k == elems.size()) {
        elems.push_back(x);
        t.transversal.push_back(concat(t.transversal[c], Word::single(p.strands(), p.generators()[gi])));
      }
      t.action[c][gi] = k;
    }
  }
  for (auto const& e : elems) t.images.push_back(g.format(e));
  return t;
}

struct SchreierGenerator {
  std::size_t coset = 0;
  std::size_t gen = 0;  // index into the source presentation
  Word word;            // rep(coset) * g * rep(coset g)^-1
  std::string name;     // S_<rep>_<g>, rep "1" for the identity coset
  bool removable = false;
};

std::vector<SchreierGenerator> schreier_generators(CosetTable const& t);

struct RewrittenPresentation {
  std::vector<SchreierGenerator> generators;
  // Abstract ordinal of each Schreier generator in `presentation`; nullopt
  // for the removable ones.
  std::vector<std::optional<std::size_t>> ordinal;
  // One per (relator, coset) pair, relator-major; may be empty words.
  std::vector<Word> relators;
  Presentation presentation;
};

RewrittenPresentation rewrite_relators(CosetTable const& t);

// Rewrites a word of the source group that starts and ends in `coset` into
// the Schreier alphabet of `rp`.
Word rewrite_word(CosetTable const& t, RewrittenPresentation const& rp, Word const& w,
                  std::size_t coset = 0);

// Tietze moves. Words are kept freely reduced throughout, so free reduction
// happens as part of every substitution.
struct CyclicReduceMove {
  std::size_t relator;
};
struct DeleteTrivialMove {
  std::size_t relator;
};
struct DeduplicateMove {
  std::size_t relator;  // removed; an earlier relator is equivalent
};
struct EliminateMove {
  Generator generator;
  std::size_t relator;  // defining relator, removed
  Word replacement;     // generator := replacement
};
using TietzeMove = std::variant<CyclicReduceMove, DeleteTrivialMove, DeduplicateMove, EliminateMove>;

struct TietzeTrace {
  std::vector<TietzeMove> moves;
  std::size_t eliminations() const;
  std::string summary() const;
};

struct TietzeResult {
  Presentation presentation;
  TietzeTrace trace;
  bool complete = true;  // false when the move budget ran out
};

inline constexpr std::size_t kTietzeMaxRelatorLength = 64;

TietzeResult tietze_simplify(Presentation const& p, std::size_t budget = 10'000);
Presentation replay_trace(Presentation const& p, TietzeTrace const& trace);
// Applies the eliminations of `trace` to a word over the input alphabet.
Word substitute_trace(TietzeTrace const& trace, Word const& w);

struct KernelPipeline {
  CosetTable table;
  RewrittenPresentation rewritten;
  TietzeResult simplified;
  // Words in the source group for each generator of the final presentation.
  std::vector<Word> generator_words;
  Presentation presentation;

  // Kernel element (a word in the source group) as a word over the final
  // generators.
  Word to_kernel(Word const& w) const;
};

KernelPipeline run_kernel_pipeline(GroupFamily family, int n, Triple triple);
Presentation kernel_presentation(GroupFamily family, int n, Triple triple);

}  // namespace vsg
