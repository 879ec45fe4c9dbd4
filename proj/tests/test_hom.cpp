#include "doctest.h"

#include "vsg/hom.hpp"
#include "vsg/hom_count.hpp"
#include "vsg/random.hpp"

using namespace vsg;

namespace {

Word W(char const* s, int n) { return parse_word(s, n); }

Permutation tr(int n, int i, int j) { return Permutation::transposition(n, i, j); }

// Brute-force oracle: number of commuting pairs in S_m times |S_m|.
std::uint64_t commuting_pairs_times_order(int m) {
  auto all = all_permutations(m);
  std::uint64_t pairs = 0;
  for (auto const& x : all)
    for (auto const& y : all) pairs += compose(x, y) == compose(y, x);
  return pairs * all.size();
}

}  // namespace

TEST_CASE("eval_hom") {
  auto phi = phi_triple(GroupFamily::VSG, 3, {1, 1, 1});
  CHECK(format_perm(eval_hom(phi, W("s1 v2", 3))) == "[3,1,2]");
  CHECK(eval_hom(phi, Word(3)).is_identity());
  CHECK(eval_hom(phi, W("v1^-1", 3)) == tr(3, 1, 2));
  auto psi = psi_map(build_presentation(GroupFamily::VSG, 3));
  auto x = eval_hom(psi, W("v1 t2 t1", 3));
  CHECK(psi.target().format(x) == "(2,(1 2))");
  CHECK_THROWS_AS(eval_hom(phi_triple(GroupFamily::B, 3, {1, 1, 1}), W("t1", 3)), Error);
}

TEST_CASE("verify_homomorphism examples") {
  auto r110 = verify_homomorphism(phi_triple(GroupFamily::VSG, 3, {1, 1, 0}));
  CHECK_FALSE(r110.is_homomorphism);
  bool found = false;
  for (auto const& f : r110.failures) {
    if (f.tag == RelTag::ThreePoint4) {
      found = true;
      CHECK(f.relation == "v1 t2 v1 = v2 t1 v2");
      CHECK(f.lhs_image == "(2 3)");
      CHECK(f.rhs_image == "(1 2)");
    }
  }
  CHECK(found);

  CHECK(verify_homomorphism(phi_triple(GroupFamily::VSG, 4, {1, 1, 1})).is_homomorphism);

  auto r011 = verify_homomorphism(phi_triple(GroupFamily::VSG, 3, {0, 1, 1}));
  CHECK_FALSE(r011.is_homomorphism);
  bool mixed = false;
  for (auto const& f : r011.failures)
    mixed = mixed || (f.tag == RelTag::ThreePoint5 && f.relation == "s1 s2 t1 = t2 s1 s2");
  CHECK(mixed);
  // report invariant
  CHECK(r011.is_homomorphism == r011.failures.empty());
}

TEST_CASE("phi triples") {
  auto trivial = phi_triple(GroupFamily::VSG, 3, {0, 0, 0});
  for (auto const& img : trivial.images()) CHECK(img.is_identity());
  CHECK(format_triples(passing_triples(build_presentation(GroupFamily::VSG, 2))) ==
        "000,001,010,011,100,101,110,111");
  CHECK(format_triples(classify_triples(GroupFamily::VSG, 3)) == "000,001,101,111");
  CHECK(format_triples(classify_triples(GroupFamily::WSG, 5)) == "000,111");
  CHECK_FALSE(verify_homomorphism(phi_triple(GroupFamily::WSG, 4, {1, 0, 1})).is_homomorphism);
  CHECK_THROWS_AS(classify_triples(GroupFamily::VSG, 2), Error);
  CHECK_THROWS_AS(Triple::parse("12"), Error);
  CHECK_THROWS_AS(Triple::parse("102"), Error);
  CHECK(Triple::parse("101") == Triple{1, 0, 1});
}

TEST_CASE("classification is constant in n") {
  auto base = classify_triples(GroupFamily::VSG, 3);
  for (int n = 4; n <= 8; ++n) CHECK(classify_triples(GroupFamily::VSG, n) == base);
}

TEST_CASE("exponent sums") {
  CHECK(format_exponents(exponent_sums(W("s1 t2^-1 v1", 3))) == "expC=1 expS=-1 expCS=0 parity=1");
  CHECK(exponent_sums(Word(3)) == ExponentData{});
  auto l = exponent_sums(W("s1 s2 t1", 3)), r = exponent_sums(W("t2 s1 s2", 3));
  CHECK(l == r);
  CHECK(l == ExponentData{2, 1, 3, 0});
  CHECK(exponent_sums(W("v1^-1", 2)).parity == 1);
}

TEST_CASE("exponent sums are relator invariants (sampled)") {
  for (GroupFamily f : {GroupFamily::VSG, GroupFamily::WCSG, GroupFamily::WSG, GroupFamily::UCVSG,
                        GroupFamily::UVSG, GroupFamily::VB, GroupFamily::SG}) {
    auto p = build_presentation(f, 4);
    for (std::uint64_t i = 0; i < 1000; ++i) {
      auto rng = sample_rng(13, i);
      Word w = random_word(rng, p, 10);
      auto const& r = p.relators()[rng() % p.relators().size()];
      Word w2 = apply_relation(w, r, rng() % (w.length() + 1),
                               (rng() & 1) ? Direction::Forward : Direction::Inverse,
                               rng() % r.word.length());
      REQUIRE(exponent_sums(w2) == exponent_sums(w));
    }
  }
}

TEST_CASE("sigma squared kills the classical sum") {
  // in the families with sigma_i^2 = 1 only the parity of expC survives
  auto p = build_presentation(GroupFamily::FCVSG, 3);
  auto w = apply_relation(W("t1", 3), p.relators().back(), 0, Direction::Forward);
  CHECK(exponent_sums(w).exp_c == 2);
  CHECK(exponent_sums(W("t1", 3)).exp_c == 0);
}

TEST_CASE("homomorphic images multiply (sampled)") {
  auto phi = phi_triple(GroupFamily::VSG, 5, {1, 0, 1});
  REQUIRE(verify_homomorphism(phi).is_homomorphism);
  for (std::uint64_t i = 0; i < 1000; ++i) {
    auto rng = sample_rng(17, i);
    Word a = random_word(rng, phi.source(), 12), b = random_word(rng, phi.source(), 12);
    REQUIRE(eval_hom(phi, concat(a, b)) == compose(eval_hom(phi, a), eval_hom(phi, b)));
  }
}

TEST_CASE("count_homs") {
  auto s3 = FiniteGroup::symmetric(3);
  auto a = custom_presentation({"a"});
  a.add_relator(a.parse("a^2"), RelTag::Custom);
  CHECK(count_homs(a, s3) == 4);

  auto xyz = custom_presentation({"x", "y", "z"});
  xyz.add_relation(xyz.parse("x y"), xyz.parse("y x"), RelTag::Custom);
  CHECK(commuting_pairs_times_order(3) == 108);
  CHECK(count_homs(xyz, s3) == commuting_pairs_times_order(3));
  CHECK(count_homs(xyz, FiniteGroup::symmetric(4)) == commuting_pairs_times_order(4));
  CHECK(count_homs(custom_presentation({}), s3) == 1);

  auto vspg = custom_presentation({"a", "b", "c"});
  vspg.add_relation(vspg.parse("a c b"), vspg.parse("b c a"), RelTag::Custom);
  CHECK(count_homs(vspg, s3) == 108);

  CHECK_THROWS_AS(count_homs(build_presentation(GroupFamily::VSG, 3), s3), Error);
}

TEST_CASE("parallel count matches serial") {
  auto s4 = FiniteGroup::symmetric(4);
  for (GroupFamily f : {GroupFamily::VSG, GroupFamily::FCVSG, GroupFamily::GCVSG}) {
    auto p = build_presentation(f, 2);
    CHECK(count_homs_parallel(p, s4) == count_homs(p, s4));
  }
  auto vb = build_presentation(GroupFamily::VB, 3);
  CHECK(count_homs_parallel(vb, s4) == count_homs(vb, s4));
}

TEST_CASE("separating quotient search") {
  auto p = build_presentation(GroupFamily::VSG, 3);
  // fixed psi map separates the mixed welded relation
  auto psi = psi_map(p);
  REQUIRE(verify_homomorphism(psi).is_homomorphism);
  Word a = W("v1 t2 t1", 3), b = W("t2 t1 v2", 3);
  CHECK(psi.target().format(eval_hom(psi, a)) == "(2,(1 2))");
  CHECK(psi.target().format(eval_hom(psi, b)) == "(2,(2 3))");

  std::vector<FiniteGroup> targets{FiniteGroup::symmetric(3)};
  auto none = search_separating_quotient(p, a, a, targets);
  CHECK_FALSE(none.found);
  CHECK_FALSE(none.exhausted);

  auto vb = build_presentation(GroupFamily::VB, 3);
  std::vector<FiniteGroup> sym{FiniteGroup::symmetric(3), FiniteGroup::symmetric(4)};
  auto s = search_separating_quotient(vb, W("v1 s2 s1", 3), W("s2 s1 v2", 3), sym);
  // sigma -> 1, v_i -> (i i+1) already separates
  REQUIRE(s.found);
  CHECK(s.found->target == "S3");
  CHECK(format_cycles(s.found->lhs) == "(2 3)");
  CHECK(format_cycles(s.found->rhs) == "(1 2)");

  auto tight = search_separating_quotient(vb, W("v1", 3), W("v1", 3), sym, 100);
  CHECK(tight.exhausted);
  CHECK_FALSE(tight.found);
}
