#include "doctest.h"

#include <functional>
#include <map>

#include "vsg/free_product.hpp"
#include "vsg/random.hpp"
#include "vsg/structure.hpp"

using namespace vsg;

namespace {

Word W(char const* s, int n) { return parse_word(s, n); }

Permutation image_under_v(Word const& w) {
  return phi_triple(GroupFamily::VSG, w.strands(), {0, 0, 1}).eval(w);
}

// Oracle for the welded action written directly on words in x1..xn: each
// generator is a letter-substitution rule, applied left to right.
using Rule = std::function<Word(int k, int n)>;

Word apply_rule(Word const& w, Rule const& rule, int n) {
  Word out(0);
  for (Letter l : w.letters()) out = concat(out, power(rule(l.gen.index, n), l.exp));
  return out;
}

Rule welded_rule(Letter l) {
  int const i = l.gen.index - 1;
  if (l.gen.family == Family::Virtual)
    return [i](int k, int) { return basis_word(k == i ? i + 1 : k == i + 1 ? i : k); };
  if (l.exp > 0)
    return [i](int k, int) {
      if (k == i) return concat(concat(basis_word(i), basis_word(i + 1)), basis_word(i, -1));
      return basis_word(k == i + 1 ? i : k);
    };
  return [i](int k, int) {
    if (k == i + 1) return concat(concat(basis_word(i + 1, -1), basis_word(i)), basis_word(i + 1));
    return basis_word(k == i ? i + 1 : k);
  };
}

std::vector<Word> welded_oracle(Word const& w, int n) {
  std::vector<Word> out;
  for (int k = 0; k < n; ++k) {
    Word cur = basis_word(k);
    for (Letter l : w.expand()) cur = apply_rule(cur, welded_rule(l), n);
    out.push_back(cur);
  }
  return out;
}

}  // namespace

TEST_CASE("section") {
  CHECK(format_word(section(Permutation::transposition(2, 1, 2))) == "v1");
  CHECK(section(Permutation(4)).empty());
  auto p = parse_perm("[3,1,2]", 3);
  Word s = section(p);
  CHECK(s.length() == 2);
  CHECK(image_under_v(s) == p);
}

TEST_CASE("section is a reduced decomposition on S6") {
  auto all = all_permutations(6);
  REQUIRE(all.size() == 720);
  for (auto const& p : all) {
    Word s = section(p);
    REQUIRE(s.length() == static_cast<std::size_t>(p.inversions()));
    REQUIRE(image_under_v(s) == p);
  }
}

TEST_CASE("decompose") {
  auto d = decompose(W("v1", 2), {1, 1, 1});
  CHECK(d.pure.empty());
  CHECK(d.perm == Permutation::transposition(2, 1, 2));

  auto s = decompose(W("s1", 2), {1, 1, 1});
  CHECK(s.perm == Permutation::transposition(2, 1, 2));
  // s1 v1^-1 is a_{1,2} = s1 v1 in the group
  CHECK(vsg2_normal_form(s.pure) == vsg2_normal_form(W("s1 v1", 2)));

  auto sq = decompose(W("s1^2", 2), {1, 1, 1});
  CHECK(format_word(sq.pure) == "s1^2");
  CHECK(sq.perm.is_identity());

  CHECK_THROWS_AS(decompose(W("s1", 3), {1, 1, 0}), Error);
}

TEST_CASE("decompose round trip (sampled)") {
  Triple const triples[] = {{1, 1, 1}, {1, 0, 1}, {0, 0, 1}};
  for (std::uint64_t i = 0; i < 10'000; ++i) {
    auto rng = sample_rng(77, i);
    int const n = 2 + static_cast<int>(rng() % 5);
    auto p = build_presentation(GroupFamily::VSG, n);
    Word w = random_word(rng, p, 40);
    Triple t = triples[rng() % 3];
    auto d = decompose(w, t);
    REQUIRE(concat(d.pure, d.section_word) == w);
    REQUIRE(phi_triple(p, t).eval(d.pure).is_identity());
    if (n == 2) REQUIRE(vsg2_normal_form(concat(d.pure, d.section_word)) == vsg2_normal_form(w));
  }
}

TEST_CASE("is_pure") {
  CHECK(is_pure(W("s1 v1", 2), {1, 1, 1}));
  CHECK(is_pure(W("t1", 2), {1, 0, 1}));
  CHECK_FALSE(is_pure(W("v1", 2), {1, 1, 1}));
  CHECK(is_pure(W("s1 s2 s1 s2^-1 s1^-1 s2^-1", 3), {1, 1, 1}));
  CHECK_THROWS_AS(is_pure(W("s1", 3), {1, 1, 0}), Error);
  CHECK_THROWS_AS(is_pure(W("s1", 3), {1, 0, 1}, GroupFamily::WSG), Error);
}

TEST_CASE("builtin representations") {
  for (int n = 3; n <= 5; ++n) {
    auto vb = build_presentation(GroupFamily::VB, n);
    std::vector<Word> q1;
    for (int i = 1; i <= n - 2; ++i) {
      auto [l, r] = forbidden_relation(n, 1, i);
      q1.push_back(concat(l, invert(r)));
    }
    auto wb = add_relators(vb, q1, "VB+Q1");
    CHECK(verify_homomorphism(builtin_representation(Representation::Welded, wb)).is_homomorphism);
    CHECK(verify_homomorphism(builtin_representation(Representation::Extended, vb)).is_homomorphism);
    CHECK_FALSE(verify_homomorphism(builtin_representation(Representation::Extended, wb)).is_homomorphism);
    // tau acts trivially, so both factor through VSG_n
    auto vsg = build_presentation(GroupFamily::VSG, n);
    CHECK(verify_homomorphism(builtin_representation(Representation::Extended, vsg)).is_homomorphism);
    auto ext = builtin_representation(Representation::Extended, vsg);
    for (auto const& img : ext.images()) CHECK(aut_inverse_checked(img));
  }
  auto welded = builtin_representation(Representation::Welded, 3);
  CHECK(welded.eval(W("v1 v2 s1 v2^-1 v1^-1 s2^-1", 3)) == FreeGroupAutomorphism(3));
  CHECK(parse_representation("extended") == Representation::Extended);
  CHECK_THROWS_AS(parse_representation("burau"), Error);
}

TEST_CASE("welded images agree with the substitution oracle (sampled)") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    auto rng = sample_rng(91, i);
    int const n = 3 + static_cast<int>(rng() % 3);
    auto vb = build_presentation(GroupFamily::VB, n);
    Word w = random_word(rng, vb, 8);
    REQUIRE(builtin_representation(Representation::Welded, vb).eval(w).images() == welded_oracle(w, n));
  }
}

TEST_CASE("forbidden relations") {
  auto r3 = forbidden_check(3, 3, 1);
  CHECK(r3.separated);
  CHECK(r3.separator == Separator::ZxSn);
  CHECK(r3.lhs_image == "(2,(1 2))");
  CHECK(r3.rhs_image == "(2,(2 3))");

  auto r2 = forbidden_check(3, 2, 1);
  CHECK(r2.separated);
  CHECK(r2.separator == Separator::AutRep);
  auto [l2, rr2] = forbidden_relation(3, 2, 1);
  CHECK(welded_oracle(l2, 3) != welded_oracle(rr2, 3));

  auto r1 = forbidden_check(3, 1, 1);
  CHECK(r1.separated);
  // the welded oracle cannot see relation (1)
  auto [l1, rr1] = forbidden_relation(3, 1, 1);
  CHECK(welded_oracle(l1, 3) == welded_oracle(rr1, 3));

  for (int n : {3, 4})
    for (auto const& r : forbidden_all(n)) {
      CAPTURE(r.relation);
      CAPTURE(r.index);
      CHECK(r.separated);
      CHECK(r.lhs_image != r.rhs_image);
    }
  CHECK(forbidden_all(4).size() == 8);
  CHECK_THROWS_AS(forbidden_check(2, 1, 1), Error);
  CHECK_THROWS_AS(forbidden_check(4, 1, 3), Error);
  CHECK_THROWS_AS(forbidden_check(4, 5, 1), Error);
  auto table = format_forbidden_table(forbidden_all(3));
  CHECK(table.rfind("relation\tindex\tseparator\tlhs\trhs\n", 0) == 0);
}
