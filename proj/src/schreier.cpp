#include "vsg/schreier.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace vsg {

namespace {

int family_rank(Family f) {
  switch (f) {
    case Family::Virtual: return 0;
    case Family::Classical: return 1;
    case Family::Singular: return 2;
    case Family::Abstract: return 3;
  }
  return 3;
}

Word unit(int strands, Generator g, int exp) { return Word::single(strands, g, exp); }

// Unit-letter spelling used inside generator names: "v1s1".
std::string compact_name(Presentation const& p, Word const& w) {
  if (w.empty()) return "1";
  std::string out;
  for (Letter l : w.expand()) {
    out += p.name_of(l.gen);
    if (l.exp < 0) out += "i";
  }
  return out;
}

}  // namespace

std::vector<std::size_t> bfs_letter_order(Presentation const& p) {
  std::vector<std::size_t> order(p.rank());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return family_rank(p.generators()[a].family) < family_rank(p.generators()[b].family);
  });
  return order;
}

std::size_t CosetTable::coset_of(Word const& w) const {
  std::size_t c = 0;
  for (Letter l : w.expand()) {
    std::size_t const g = source.require_index(l.gen);
    c = l.exp > 0 ? action[c][g] : preimage(c, g);
  }
  return c;
}

std::size_t CosetTable::preimage(std::size_t coset, std::size_t gen) const {
  for (std::size_t c = 0; c < action.size(); ++c)
    if (action[c][gen] == coset) return c;
  throw Error("incomplete coset table");
}

std::vector<SchreierGenerator> schreier_generators(CosetTable const& t) {
  auto const& p = t.source;
  std::vector<SchreierGenerator> out;
  for (std::size_t c = 0; c < t.size(); ++c) {
    if (t.action[c].size() != p.rank()) throw Error("incomplete coset table");
    for (std::size_t g = 0; g < p.rank(); ++g) {
      SchreierGenerator s;
      s.coset = c;
      s.gen = g;
      Word const lg = concat(t.transversal[c], unit(p.strands(), p.generators()[g], 1));
      s.word = concat(lg, invert(t.transversal[t.action[c][g]]));
      s.name = "S_" + compact_name(p, t.transversal[c]) + "_" + p.names()[g];
      s.removable = s.word.empty();
      out.push_back(std::move(s));
    }
  }
  return out;
}

RewrittenPresentation rewrite_relators(CosetTable const& t) {
  RewrittenPresentation rp;
  rp.generators = schreier_generators(t);
  std::vector<std::string> names;
  std::vector<Generator> gens;
  for (auto const& s : rp.generators) {
    if (s.removable) {
      rp.ordinal.push_back(std::nullopt);
      continue;
    }
    rp.ordinal.push_back(names.size());
    gens.push_back(abstract_gen(static_cast<int>(names.size())));
    names.push_back(s.name);
  }
  rp.presentation = Presentation(GroupFamily::Custom, 0, gens, names);
  for (auto const& r : t.source.relators())
    for (std::size_t c = 0; c < t.size(); ++c) {
      Word w = rewrite_word(t, rp, r.word, c);
      rp.relators.push_back(w);
      rp.presentation.add_relator(w, r.tag);
    }
  rp.presentation.label = "RS(" + t.source.label + ")";
  return rp;
}

Word rewrite_word(CosetTable const& t, RewrittenPresentation const& rp, Word const& w,
                  std::size_t coset) {
  std::size_t const rank = t.source.rank();
  std::vector<Letter> out;
  std::size_t c = coset;
  for (Letter l : w.expand()) {
    std::size_t const g = t.source.require_index(l.gen);
    std::size_t from = c;
    if (l.exp > 0) {
      c = t.action[c][g];
    } else {
      from = t.preimage(c, g);
      c = from;
    }
    if (auto k = rp.ordinal[from * rank + g]) out.push_back({abstract_gen(static_cast<int>(*k)), l.exp});
  }
  if (c != coset) throw Error("word does not return to its starting coset");
  return Word(0, out);
}

std::size_t TietzeTrace::eliminations() const {
  std::size_t n = 0;
  for (auto const& m : moves) n += std::holds_alternative<EliminateMove>(m);
  return n;
}

std::string TietzeTrace::summary() const {
  std::size_t cyc = 0, del = 0, dup = 0;
  for (auto const& m : moves) {
    cyc += std::holds_alternative<CyclicReduceMove>(m);
    del += std::holds_alternative<DeleteTrivialMove>(m);
    dup += std::holds_alternative<DeduplicateMove>(m);
  }
  std::ostringstream os;
  os << moves.size() << " moves: " << eliminations() << " eliminations, " << del
     << " trivial deletions, " << dup << " duplicates, " << cyc << " cyclic reductions";
  return os.str();
}

namespace {

struct WorkRelator {
  Word word;
  RelTag tag;
};

struct State {
  GroupFamily family;
  int strands;
  std::vector<Generator> gens;
  std::vector<std::string> names;
  std::vector<WorkRelator> rels;
  std::vector<std::string> comments;
  std::string label;

  static State from(Presentation const& p) {
    State s{p.family(), p.strands(), {p.generators().begin(), p.generators().end()},
            {p.names().begin(), p.names().end()}, {}, p.comments, p.label};
    for (auto const& r : p.relators()) s.rels.push_back({r.word, r.tag});
    return s;
  }

  Presentation to_presentation() const {
    Presentation p(family, strands, gens, names);
    for (auto const& r : rels) p.add_relator(r.word, r.tag);
    p.comments = comments;
    p.label = label;
    return p;
  }

  void apply(TietzeMove const& m) {
    std::visit(
        [&](auto const& mv) {
          using T = std::decay_t<decltype(mv)>;
          if constexpr (std::is_same_v<T, CyclicReduceMove>) {
            rels.at(mv.relator).word = cyclic_reduce(rels.at(mv.relator).word);
          } else if constexpr (std::is_same_v<T, DeleteTrivialMove> ||
                               std::is_same_v<T, DeduplicateMove>) {
            rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(mv.relator));
          } else {
            rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(mv.relator));
            auto it = std::find(gens.begin(), gens.end(), mv.generator);
            if (it == gens.end()) throw Error("trace eliminates an unknown generator");
            names.erase(names.begin() + (it - gens.begin()));
            gens.erase(it);
            for (auto& r : rels) r.word = substitute_one(r.word, mv.generator, mv.replacement);
            family = GroupFamily::Custom;  // no longer a registry presentation
          }
        },
        m);
  }

  static Word substitute_one(Word const& w, Generator g, Word const& rep) {
    Word out(w.strands());
    for (Letter l : w.letters())
      out = concat(out, l.gen == g ? power(rep, l.exp) : Word::single(w.strands(), l.gen, l.exp));
    return out;
  }
};

std::size_t occurrences(Word const& w, Generator g) {
  std::size_t n = 0;
  for (Letter l : w.letters())
    if (l.gen == g) n += static_cast<std::size_t>(std::abs(l.exp));
  return n;
}

// Next normalization move, if any: cyclic reduction, then trivial deletion,
// then duplicate removal.
std::optional<TietzeMove> normalization_move(State const& s) {
  for (std::size_t i = 0; i < s.rels.size(); ++i)
    if (cyclic_reduce(s.rels[i].word) != s.rels[i].word) return CyclicReduceMove{i};
  for (std::size_t i = 0; i < s.rels.size(); ++i)
    if (s.rels[i].word.empty()) return DeleteTrivialMove{i};
  std::set<std::vector<std::pair<Generator, int>>> seen;
  for (std::size_t i = 0; i < s.rels.size(); ++i) {
    std::vector<std::pair<Generator, int>> key;
    for (Letter l : cyclic_canonical(s.rels[i].word)) key.emplace_back(l.gen, l.exp);
    if (!seen.insert(key).second) return DeduplicateMove{i};
  }
  return std::nullopt;
}

std::optional<EliminateMove> elimination_move(State const& s) {
  std::vector<std::size_t> order(s.rels.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return s.rels[a].word.length() < s.rels[b].word.length();
  });
  for (std::size_t ri : order) {
    Word const& r = s.rels[ri].word;
    if (r.length() > kTietzeMaxRelatorLength) break;
    std::optional<std::size_t> best;  // position in gens
    std::size_t best_total = 0;
    for (std::size_t gi = 0; gi < s.gens.size(); ++gi) {
      Generator g = s.gens[gi];
      if (occurrences(r, g) != 1) continue;
      std::size_t total = 0;
      for (auto const& other : s.rels) total += occurrences(other.word, g);
      // fewest occurrences, later generators win ties
      if (!best || total <= best_total) {
        best = gi;
        best_total = total;
      }
    }
    if (!best) continue;
    Generator g = s.gens[*best];
    // rotate r so that the generator comes first: r ~ g^e x
    auto units = r.expand();
    std::size_t pos = 0;
    while (units[pos].gen != g) ++pos;
    int const e = units[pos].exp;
    std::vector<Letter> rest(units.begin() + static_cast<std::ptrdiff_t>(pos) + 1, units.end());
    rest.insert(rest.end(), units.begin(), units.begin() + static_cast<std::ptrdiff_t>(pos));
    Word x(r.strands(), rest);
    return EliminateMove{g, ri, e > 0 ? invert(x) : x};
  }
  return std::nullopt;
}

}  // namespace

TietzeResult tietze_simplify(Presentation const& p, std::size_t budget) {
  State s = State::from(p);
  TietzeResult res;
  while (true) {
    std::optional<TietzeMove> m = normalization_move(s);
    if (!m) {
      if (auto e = elimination_move(s)) m = std::move(*e);
    }
    if (!m) break;
    if (res.trace.moves.size() >= budget) {
      res.complete = false;
      break;
    }
    s.apply(*m);
    res.trace.moves.push_back(std::move(*m));
  }
  res.presentation = s.to_presentation();
  return res;
}

Presentation replay_trace(Presentation const& p, TietzeTrace const& trace) {
  State s = State::from(p);
  for (auto const& m : trace.moves) s.apply(m);
  return s.to_presentation();
}

Word substitute_trace(TietzeTrace const& trace, Word const& w) {
  Word out = w;
  for (auto const& m : trace.moves)
    if (auto e = std::get_if<EliminateMove>(&m)) out = State::substitute_one(out, e->generator, e->replacement);
  return out;
}

namespace {

// Renumbers abstract generators by position, as the text format does.
Presentation compact(Presentation const& p, std::vector<Generator>& old_gens) {
  old_gens.assign(p.generators().begin(), p.generators().end());
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < old_gens.size(); ++i)
    gens.push_back(is_braid(old_gens[i]) ? old_gens[i] : abstract_gen(static_cast<int>(i)));
  Presentation q(p.family(), p.strands(), gens, {p.names().begin(), p.names().end()});
  for (auto const& r : p.relators()) {
    std::vector<Letter> ls;
    for (Letter l : r.word.letters()) ls.push_back({gens[p.require_index(l.gen)], l.exp});
    q.add_relator(Word(r.word.strands(), ls), r.tag);
  }
  q.comments = p.comments;
  q.label = p.label;
  return q;
}

}  // namespace

Word KernelPipeline::to_kernel(Word const& w) const {
  if (table.size() == 1) return w;
  Word sw = substitute_trace(simplified.trace, rewrite_word(table, rewritten, w));
  auto const& src = simplified.presentation;
  std::vector<Letter> ls;
  for (Letter l : sw.letters()) ls.push_back({presentation.generators()[src.require_index(l.gen)], l.exp});
  return Word(presentation.strands(), ls);
}

KernelPipeline run_kernel_pipeline(GroupFamily family, int n, Triple triple) {
  Presentation source = build_presentation(family, n);
  auto phi = phi_triple(source, triple);
  KernelPipeline k{coset_table_from_hom(phi), {}, {}, {}, {}};
  if (k.table.size() == 1) {
    k.presentation = source;
    k.simplified = {source, {}, true};
    k.generator_words.reserve(source.rank());
    for (Generator g : source.generators()) k.generator_words.push_back(Word::single(n, g));
    return k;
  }
  k.rewritten = rewrite_relators(k.table);
  k.simplified = tietze_simplify(k.rewritten.presentation);

  std::vector<Generator> old;
  Presentation out = compact(k.simplified.presentation, old);
  for (Generator g : old) {
    std::size_t const ord = static_cast<std::size_t>(g.index);
    auto it = std::find(k.rewritten.ordinal.begin(), k.rewritten.ordinal.end(), ord);
    k.generator_words.push_back(k.rewritten.generators[static_cast<std::size_t>(it - k.rewritten.ordinal.begin())].word);
  }

  std::string const phi_name = "phi_" + triple.str();
  out.label = "ker(" + phi_name + ", " + source.label + ")";
  out.comments.push_back("# kernel of " + phi_name + " on " + source.label);
  std::string trans;
  for (auto const& w : k.table.transversal) trans += " " + (w.empty() ? std::string("1") : format_word(w));
  out.comments.push_back("# transversal:" + trans);
  for (std::size_t i = 0; i < old.size(); ++i)
    out.comments.push_back("# " + out.names()[i] + " = " + format_word(k.generator_words[i]));
  out.comments.push_back("# tietze: " + k.simplified.trace.summary() +
                         (k.simplified.complete ? "" : " (budget exhausted)"));
  k.presentation = std::move(out);
  return k;
}

Presentation kernel_presentation(GroupFamily family, int n, Triple triple) {
  return run_kernel_pipeline(family, n, triple).presentation;
}

}  // namespace vsg
