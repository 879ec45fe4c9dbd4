#include "doctest.h"

#include "vsg/random.hpp"
#include "vsg/word.hpp"

using namespace vsg;

namespace {

Word W(char const* s, int n) { return parse_word(s, n); }

// Reference reduction by repeated scanning, independent of the stack-based
// implementation.
std::vector<Letter> naive_reduce(std::vector<Letter> u) {
  std::vector<Letter> units;
  for (Letter l : u)
    for (int k = 0; k < std::abs(l.exp); ++k) units.push_back({l.gen, l.exp > 0 ? 1 : -1});
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < units.size(); ++i) {
      if (units[i].gen == units[i + 1].gen && units[i].exp == -units[i + 1].exp) {
        units.erase(units.begin() + static_cast<std::ptrdiff_t>(i),
                    units.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  std::vector<Letter> out;
  for (Letter l : units) {
    if (!out.empty() && out.back().gen == l.gen) out.back().exp += l.exp;
    else out.push_back(l);
  }
  return out;
}

}  // namespace

TEST_CASE("parse_word basics") {
  Word w = W("s1 t2^-1 v3", 4);
  REQUIRE(w.syllables() == 3);
  CHECK(w[0] == Letter{sigma(1), 1});
  CHECK(w[1] == Letter{tau(2), -1});
  CHECK(w[2] == Letter{virt(3), 1});
  CHECK(W("e", 2).empty());
  CHECK(W("", 2).empty());
  CHECK(W("s1 s1^-1 t1", 2) == Word::single(2, tau(1)));
  CHECK(W("s1 s1 s1^2", 2) == Word::single(2, sigma(1), 4));
}

TEST_CASE("parse_word errors") {
  CHECK_THROWS_AS(W("s3", 3), Error);
  CHECK_THROWS_AS(W("s0", 3), Error);
  CHECK_THROWS_AS(W("x1", 3), Error);
  CHECK_THROWS_AS(W("s1^0", 3), Error);
  CHECK_THROWS_AS(W("s1^", 3), Error);
  CHECK_THROWS_AS(W("s1^-", 3), Error);
  CHECK_THROWS_AS(W("s", 3), Error);
  CHECK_THROWS_AS(W("s1^2x", 3), Error);
}

TEST_CASE("word algebra") {
  CHECK(concat(W("s1", 2), W("s1^-1 t1", 2)) == W("t1", 2));
  CHECK(invert(W("s1 t2^-1", 3)) == W("t2 s1^-1", 3));
  CHECK(cyclic_reduce(W("s1 t1 s1^-1", 2)) == W("t1", 2));
  CHECK(cyclic_reduce(W("s1 t1 s1", 2)) == W("s1^2 t1", 2));
  CHECK(power(W("s1 t1", 2), -2) == W("t1^-1 s1^-1 t1^-1 s1^-1", 2));
  CHECK_THROWS_AS(concat(W("s1", 2), W("s1", 3)), Error);
  CHECK_THROWS_AS(Word(3, {Letter{sigma(3), 1}}), Error);
  CHECK(format_word(W("s1 t2^-1 v3^2", 4)) == "s1 t2^-1 v3^2");
  CHECK(format_word(Word(3)) == "e");
  // raw v^-1 is preserved at the free level
  CHECK(W("v1^-1", 2) == Word::single(2, virt(1), -1));
}

TEST_CASE("rotation and cyclic canonical form") {
  Word r = W("s1 t1 s1^-1 t1^-1", 2);
  CHECK(rotate(r, 1) == W("t1 s1^-1 t1^-1 s1", 2));
  auto c = cyclic_canonical(r);
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(cyclic_canonical(rotate(r, k)) == c);
    CHECK(cyclic_canonical(invert(rotate(r, k))) == c);
  }
  CHECK(cyclic_canonical(W("v1^2", 2)) != c);
}

TEST_CASE("free reduction is confluent (property)") {
  std::vector<Generator> gens{sigma(1), sigma(2), tau(1), tau(2), virt(1), virt(2)};
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> ex(-2, 2);
  for (std::uint64_t i = 0; i < 10000; ++i) {
    auto rng = sample_rng(7, i);
    std::vector<Letter> a, b;
    for (int k = 0; k < 12; ++k) {
      int e = ex(rng);
      if (e) a.push_back({gens[pick(rng)], e});
      e = ex(rng);
      if (e) b.push_back({gens[pick(rng)], e});
    }
    std::vector<Letter> ab(a);
    ab.insert(ab.end(), b.begin(), b.end());
    Word direct(3, ab);
    Word staged = concat(Word(3, a), Word(3, b));
    REQUIRE(direct == staged);
    REQUIRE(std::vector<Letter>(direct.letters().begin(), direct.letters().end()) ==
            naive_reduce(ab));
  }
}

TEST_CASE("parse . format round trip (property)") {
  std::vector<Generator> gens{sigma(1), sigma(3), tau(2), virt(1), virt(3)};
  for (std::uint64_t i = 0; i < 2000; ++i) {
    auto rng = sample_rng(11, i);
    Word w = random_word(rng, gens, 4, 15);
    REQUIRE(parse_word(format_word(w), 4) == w);
    Word cr = cyclic_reduce(w);
    // cyclic_reduce yields a conjugate: same length parity and no cancelling ends
    if (cr.syllables() >= 2) REQUIRE(cr[0].gen != cr[cr.syllables() - 1].gen);
  }
}

TEST_CASE("named alphabets") {
  std::vector<std::string> names{"a", "b", "s1"};
  std::vector<Generator> gens{abstract_gen(0), abstract_gen(1), sigma(1)};
  Word w = parse_word("a b^-1 s1^2 a", names, gens, 2);
  CHECK(format_word(w, names, gens) == "a b^-1 s1^2 a");
  CHECK_THROWS_AS(parse_word("c", names, gens, 2), Error);
}
