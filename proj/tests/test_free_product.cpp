#include "doctest.h"

#include "vsg/free_product.hpp"
#include "vsg/presentation.hpp"
#include "vsg/random.hpp"

using namespace vsg;

namespace {
Word W(char const* s) { return parse_word(s, 2); }
}  // namespace

TEST_CASE("factor spec grammar") {
  for (char const* s : {"Z^2 * Z_2", "F2 * Z_2 * Z_2", "Z^2 * Z^2", "Z^2 * Z", "Z"}) {
    CHECK(format_factor_spec(parse_factor_spec(s)) == s);
  }
  auto spec = parse_factor_spec("Z^2*Z_2");
  REQUIRE(spec.factors.size() == 2);
  CHECK(spec.factors[0] == Factor::abelian(2));
  CHECK(spec.factors[1] == Factor::abelian(0, {2}));
  CHECK_THROWS_AS(parse_factor_spec("Q"), Error);
  CHECK_THROWS_AS(parse_factor_spec("Z_1"), Error);
  CHECK_THROWS_AS(parse_factor_spec("Z^2 *"), Error);
  CHECK_THROWS_AS(parse_factor_spec("F0"), Error);
}

TEST_CASE("VSG_2 normal form examples") {
  auto nf = vsg2_normal_form(W("v1 s1 t1 s1^-1 v1 v1"));
  REQUIRE(nf.syllables.size() == 2);
  CHECK(nf.syllables[0].factor == 1);
  CHECK(std::get<std::vector<long long>>(nf.syllables[0].value) == std::vector<long long>{1});
  CHECK(nf.syllables[1].factor == 0);
  CHECK(std::get<std::vector<long long>>(nf.syllables[1].value) ==
        std::vector<long long>{0, 1});
  CHECK(vsg2_normal_word(W("v1 s1 t1 s1^-1 v1 v1")) == W("v1 t1"));
  CHECK(vsg2_normal_form(W("v1 v1")).is_identity());
  CHECK(vsg2_normal_form(W("v1^-1 v1^-1")).is_identity());
  auto abel = vsg2_normal_form(W("s1 t1 s1"));
  REQUIRE(abel.syllables.size() == 1);
  CHECK(std::get<std::vector<long long>>(abel.syllables[0].value) ==
        std::vector<long long>{2, 1});
  CHECK_THROWS_AS(fp_normalize(W("s1"), vsg2_free_product(), {}), Error);
}

TEST_CASE("normal form is invariant under relator insertion (property)") {
  auto p = build_presentation(GroupFamily::VSG, 2);
  for (std::uint64_t i = 0; i < 10000; ++i) {
    auto rng = sample_rng(21, i);
    Word w = random_word(rng, p, 12);
    auto const& r = p.relators()[rng() % p.relators().size()];
    std::size_t pos = rng() % (w.length() + 1);
    std::size_t rot = rng() % r.word.length();
    auto dir = (rng() & 1) ? Direction::Forward : Direction::Inverse;
    Word w2 = apply_relation(w, r, pos, dir, rot);
    REQUIRE(vsg2_normal_form(w2) == vsg2_normal_form(w));
    REQUIRE(vsg2_normal_form(concat(w, invert(w))).is_identity());
  }
}

TEST_CASE("free factors") {
  FreeProductGroup g(parse_factor_spec("F2 * Z_2"));
  auto a = g.factor_generator(0, 0), b = g.factor_generator(0, 1), t = g.factor_generator(1, 0);
  auto ab = g.multiply(a, b);
  CHECK(ab.syllables.size() == 1);
  CHECK(!g.equal(ab, g.multiply(b, a)));
  auto x = g.multiply(g.multiply(ab, t), g.multiply(t, g.invert(ab)));
  CHECK(x.is_identity());
  CHECK(g.format(g.multiply(ab, t)) == "f0[x1 x2] * f1(1)");
}

TEST_CASE("trivial center (sampled)") {
  for (char const* s : {"Z^2 * Z_2", "Z^2 * Z^2", "F2 * Z_2 * Z_2", "Z^2 * Z"}) {
    FreeProductGroup g(parse_factor_spec(s));
    auto gens = g.all_factor_generators();
    for (std::uint64_t i = 0; i < 200; ++i) {
      auto rng = sample_rng(99, i);
      auto e = g.random_element(rng, 1 + static_cast<int>(rng() % 5));
      REQUIRE(!e.is_identity());
      bool moves = false;
      for (auto const& h : gens)
        moves = moves || !g.equal(g.multiply(e, h), g.multiply(h, e));
      REQUIRE(moves);
    }
  }
}
