#include "doctest.h"

#include <set>

#include "vsg/abelian.hpp"
#include "vsg/free_product.hpp"
#include "vsg/hom_count.hpp"
#include "vsg/random.hpp"
#include "vsg/schreier.hpp"

using namespace vsg;

namespace {

std::vector<std::string> transversal(CosetTable const& t) {
  std::vector<std::string> out;
  for (auto const& w : t.transversal) out.push_back(format_word(w));
  return out;
}

CosetTable table(Triple tr, int n = 2) { return coset_table_from_hom(phi_triple(GroupFamily::VSG, n, tr)); }

SchreierGenerator const& by_name(std::vector<SchreierGenerator> const& gs, std::string const& name) {
  for (auto const& g : gs)
    if (g.name == name) return g;
  FAIL("no Schreier generator " << name);
  return gs.front();
}

Presentation ab_relator() {
  auto p = custom_presentation({"a", "b"});
  p.add_relator(p.parse("a b"), RelTag::Custom);
  return p;
}

}  // namespace

TEST_CASE("coset tables") {
  CHECK(transversal(table({1, 1, 1})) == std::vector<std::string>{"e", "v1"});
  CHECK(transversal(table({1, 1, 0})) == std::vector<std::string>{"e", "s1"});
  CHECK(transversal(table({0, 1, 0})) == std::vector<std::string>{"e", "t1"});
  CHECK(transversal(table({0, 0, 0})) == std::vector<std::string>{"e"});
  CHECK_THROWS_AS(table({1, 1, 0}, 3), Error);
  CHECK(table({1, 1, 1}, 4).size() == 24);
}

TEST_CASE("coset table invariants") {
  for (int n = 2; n <= 4; ++n)
    for (Triple tr : passing_triples(build_presentation(GroupFamily::VSG, n))) {
      auto t = table(tr, n);
      auto phi = phi_triple(GroupFamily::VSG, n, tr);
      REQUIRE(t.transversal.front().empty());
      std::set<std::string> reps;
      for (auto const& w : t.transversal) reps.insert(format_word(w));
      for (std::size_t c = 0; c < t.size(); ++c) {
        Word const& w = t.transversal[c];
        // prefix-closed
        auto units = w.expand();
        for (std::size_t k = 0; k < units.size(); ++k) {
          Word prefix(n, std::vector<Letter>(units.begin(), units.begin() + static_cast<std::ptrdiff_t>(k)));
          REQUIRE(reps.count(format_word(prefix)) == 1);
        }
        REQUIRE(t.coset_of(w) == c);
        for (std::size_t g = 0; g < t.source.rank(); ++g) {
          Word wg = concat(w, Word::single(n, t.source.generators()[g]));
          REQUIRE(t.action[c][g] == t.coset_of(wg));
          REQUIRE(phi.eval(wg) == phi.eval(t.transversal[t.action[c][g]]));
        }
      }
    }
}

TEST_CASE("schreier generators") {
  auto gs = schreier_generators(table({1, 1, 1}));
  CHECK(gs.size() == 6);
  CHECK(format_word(by_name(gs, "S_1_s1").word) == "s1 v1^-1");
  CHECK(format_word(by_name(gs, "S_1_t1").word) == "t1 v1^-1");
  CHECK(format_word(by_name(gs, "S_v1_s1").word) == "v1 s1");
  CHECK(format_word(by_name(gs, "S_v1_t1").word) == "v1 t1");
  CHECK(format_word(by_name(gs, "S_v1_v1").word) == "v1^2");
  CHECK(by_name(gs, "S_1_v1").removable);

  auto g110 = schreier_generators(table({1, 1, 0}));
  CHECK(format_word(by_name(g110, "S_s1_s1").word) == "s1^2");
  CHECK(format_word(by_name(g110, "S_s1_t1").word) == "s1 t1");

  auto triv = schreier_generators(table({0, 0, 0}));
  REQUIRE(triv.size() == 3);
  auto vsg2 = build_presentation(GroupFamily::VSG, 2);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK_FALSE(triv[i].removable);
    CHECK(triv[i].word == Word::single(2, vsg2.generators()[i]));
  }
}

TEST_CASE("schreier generators lie in the kernel") {
  for (int n = 2; n <= 4; ++n)
    for (Triple tr : passing_triples(build_presentation(GroupFamily::VSG, n))) {
      auto phi = phi_triple(GroupFamily::VSG, n, tr);
      for (auto const& s : schreier_generators(coset_table_from_hom(phi)))
        REQUIRE(phi.eval(s.word).is_identity());
    }
}

TEST_CASE("rewrite relators") {
  auto t = table({1, 1, 1});
  auto rp = rewrite_relators(t);
  auto const& p = rp.presentation;
  CHECK(rp.relators.size() == t.source.relators().size() * t.size());
  // relators are v1^2 then [s1,t1]; cosets 1 and v1
  CHECK(p.format(rp.relators[1]) == "S_v1_v1");
  CHECK(p.format(rp.relators[2]) == "S_1_s1 S_v1_t1 S_v1_s1^-1 S_1_t1^-1");
  CHECK(p.format(rp.relators[3]) == "S_v1_s1 S_1_t1 S_1_s1^-1 S_v1_t1^-1");

  auto triv = rewrite_relators(table({0, 0, 0}));
  auto vsg2 = build_presentation(GroupFamily::VSG, 2);
  REQUIRE(triv.relators.size() == vsg2.relators().size());
  for (std::size_t i = 0; i < vsg2.relators().size(); ++i)
    CHECK(triv.presentation.format(triv.relators[i]) ==
          [&] {
            std::string s;
            for (Letter l : vsg2.relators()[i].word.letters())
              s += (s.empty() ? "" : " ") + ("S_1_" + vsg2.name_of(l.gen)) +
                   (l.exp == 1 ? "" : "^" + std::to_string(l.exp));
            return s;
          }());
}

TEST_CASE("rewriting is sound in VSG_2") {
  for (Triple tr : all_triples()) {
    auto t = table(tr);
    auto rp = rewrite_relators(t);
    for (auto const& r : rp.relators) {
      Word back(2);
      for (Letter l : r.letters()) {
        std::size_t k = 0;
        while (rp.ordinal[k] != std::optional<std::size_t>(static_cast<std::size_t>(l.gen.index))) ++k;
        back = concat(back, power(rp.generators[k].word, l.exp));
      }
      REQUIRE(vsg2_normal_word(back).empty());
    }
  }
}

TEST_CASE("tietze simplification") {
  auto ab = tietze_simplify(ab_relator());
  CHECK(ab.complete);
  CHECK(ab.presentation.rank() == 1);
  CHECK(ab.presentation.relators().empty());
  REQUIRE(ab.trace.eliminations() == 1);
  auto const& mv = std::get<EliminateMove>(ab.trace.moves.back());
  CHECK(ab_relator().format(mv.replacement) == "a^-1");

  auto t = table({1, 1, 1});
  auto rp = rewrite_relators(t);
  auto s = tietze_simplify(rp.presentation);
  CHECK(s.presentation.rank() == 3);
  CHECK(s.presentation.relators().size() == 1);
  bool eliminated_d = false;
  for (auto const& m : s.trace.moves)
    if (auto e = std::get_if<EliminateMove>(&m); e && rp.presentation.name_of(e->generator) == "S_v1_t1") {
      eliminated_d = true;
      CHECK(rp.presentation.format(e->replacement) == "S_1_s1^-1 S_1_t1 S_v1_s1");
    }
  CHECK(eliminated_d);

  auto vspg = custom_presentation({"a", "b", "c"});
  vspg.add_relation(vspg.parse("a c b"), vspg.parse("b c a"), RelTag::Custom);
  auto same = tietze_simplify(vspg);
  CHECK(same.trace.moves.empty());
  CHECK(same.presentation == vspg);

  auto partial = tietze_simplify(rp.presentation, 1);
  CHECK_FALSE(partial.complete);
  CHECK(partial.trace.moves.size() == 1);
}

TEST_CASE("tietze trace replays and preserves invariants") {
  for (int n = 2; n <= 3; ++n)
    for (Triple tr : passing_triples(build_presentation(GroupFamily::VSG, n))) {
      auto rp = rewrite_relators(table(tr, n));
      auto s = tietze_simplify(rp.presentation);
      CAPTURE(tr.str());
      CHECK(s.complete);
      CHECK(replay_trace(rp.presentation, s.trace) == s.presentation);
      CHECK(abelianization(s.presentation) == abelianization(rp.presentation));
      if (rp.presentation.rank() <= kMaxCountGenerators)
        CHECK(hom_fingerprint(s.presentation) == hom_fingerprint(rp.presentation));
    }
}

TEST_CASE("tietze preserves hom counts (sampled presentations)") {
  for (std::uint64_t i = 0; i < 40; ++i) {
    auto rng = sample_rng(41, i);
    auto p = custom_presentation({"a", "b", "c", "d"});
    std::size_t const rels = 1 + rng() % 3;
    for (std::size_t k = 0; k < rels; ++k) {
      Word w = random_word(rng, p, 4);
      if (!w.empty()) p.add_relator(w, RelTag::Custom);
    }
    auto s = tietze_simplify(p);
    CHECK(abelianization(s.presentation) == abelianization(p));
    CHECK(hom_fingerprint(s.presentation) == hom_fingerprint(p));
  }
}

TEST_CASE("kernel presentations at n = 2") {
  auto k111 = kernel_presentation(GroupFamily::VSG, 2, {1, 1, 1});
  CHECK(k111.rank() == 3);
  CHECK(k111.relators().size() == 1);
  auto k001 = kernel_presentation(GroupFamily::VSG, 2, {0, 0, 1});
  CHECK(k001.rank() == 4);
  CHECK(k001.relators().size() == 2);
  CHECK(kernel_presentation(GroupFamily::VSG, 2, {0, 0, 0}) == build_presentation(GroupFamily::VSG, 2));

  // the text form round-trips
  auto again = parse_presentation(format_presentation(k111));
  CHECK(format_presentation(again) == format_presentation(k111));

  for (Triple tr : all_triples()) {
    auto k = run_kernel_pipeline(GroupFamily::VSG, 2, tr);
    auto phi = phi_triple(GroupFamily::VSG, 2, tr);
    REQUIRE(k.generator_words.size() == k.presentation.rank());
    for (std::size_t i = 0; i < k.generator_words.size(); ++i) {
      CHECK(phi.eval(k.generator_words[i]).is_identity());
      CHECK(k.to_kernel(k.generator_words[i]) ==
            Word::single(k.presentation.strands(), k.presentation.generators()[i]));
    }
    // relators of the final presentation hold in VSG_2
    for (auto const& r : k.presentation.relators()) {
      Word back(2);
      for (Letter l : r.word.letters())
        back = concat(back, power(k.generator_words[k.presentation.require_index(l.gen)], l.exp));
      CHECK(vsg2_normal_word(back).empty());
    }
  }
}

TEST_CASE("kernel pipeline beyond n = 2") {
  auto k = run_kernel_pipeline(GroupFamily::VSG, 3, {1, 1, 1});
  CHECK(k.table.size() == 6);
  CHECK(k.simplified.complete);
  CHECK(abelianization(k.presentation) == abelianization(k.rewritten.presentation));
}
