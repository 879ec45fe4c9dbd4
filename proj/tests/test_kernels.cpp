#include "doctest.h"

#include "vsg/free_product.hpp"
#include "vsg/hom_count.hpp"
#include "vsg/kernels.hpp"

using namespace vsg;

namespace {

std::uint64_t commuting_pairs(FiniteGroup const& g) {
  std::uint64_t n = 0;
  for (int a = 0; a < static_cast<int>(g.order()); ++a)
    for (int b = 0; b < static_cast<int>(g.order()); ++b) n += g.multiply(a, b) == g.multiply(b, a);
  return n;
}

std::uint64_t square_roots_of_one(FiniteGroup const& g) {
  std::uint64_t n = 0;
  for (int a = 0; a < static_cast<int>(g.order()); ++a) n += g.multiply(a, a) == g.identity();
  return n;
}

}  // namespace

TEST_CASE("fixture generators lie in the kernel and fixture relators hold in VSG_2") {
  for (Triple t : all_triples()) {
    CAPTURE(t.str());
    auto const phi = phi_triple(GroupFamily::VSG, 2, t);
    for (auto const& f : {reference_kernel(t), derived_kernel(t)}) {
      REQUIRE(f.words.size() == f.presentation.rank());
      for (auto const& w : f.words) CHECK(phi.eval(w).is_identity());
      for (auto const& r : f.presentation.relators()) {
        Word img(2);
        for (Letter l : r.word.letters())
          img = concat(img, power(f.words[f.presentation.require_index(l.gen)], l.exp));
        CHECK(vsg2_normal_form(img).is_identity());
      }
    }
  }
}

TEST_CASE("derived fixtures differ from the reference ones only at 110") {
  for (Triple t : all_triples()) {
    auto const a = reference_kernel(t), b = derived_kernel(t);
    if (t.str() == "110") {
      CHECK(b.presentation.relators().size() == a.presentation.relators().size() + 1);
    } else {
      CHECK(a.presentation == b.presentation);
    }
  }
}

TEST_CASE("pipeline kernels are certified against the derived fixtures") {
  for (Triple t : all_triples()) {
    CAPTURE(t.str());
    auto const k = run_kernel_pipeline(GroupFamily::VSG, 2, t);
    auto c = identify_kernel(k, derived_kernel(t));
    REQUIRE(c.has_value());
    auto r = verify_iso(*c);
    CHECK_MESSAGE(r.valid, r.summary());
  }
}

TEST_CASE("reference 110 presentation is refuted, not merely undecided") {
  Triple const t{1, 1, 0};
  auto const k = run_kernel_pipeline(GroupFamily::VSG, 2, t);
  auto c = identify_kernel(k, reference_kernel(t));
  REQUIRE(c.has_value());
  auto r = verify_iso(*c);
  CHECK_FALSE(r.valid);
  std::size_t refuted = 0;
  for (auto const& ch : r.checks) refuted += ch.refuted;
  CHECK(refuted > 0);
  CHECK(r.engine2 == "free-product(Z * Z * Z_2 * Z_2)");
}

TEST_CASE("110 fingerprints match the free product oracles") {
  // Z^2 * Z_2 * Z_2 -> S3: commuting pair, then two involutions (or 1).
  // F2 * Z_2 * Z_2 -> S3: any pair, then two involutions.
  auto const s3 = FiniteGroup::symmetric(3);
  std::uint64_t const inv = square_roots_of_one(s3);
  Triple const t{1, 1, 0};
  auto const k = run_kernel_pipeline(GroupFamily::VSG, 2, t);
  CHECK(count_homs(k.presentation, s3) == commuting_pairs(s3) * inv * inv);
  CHECK(count_homs(reference_kernel(t).presentation, s3) == s3.order() * s3.order() * inv * inv);
}

TEST_CASE("identification gives up when the search is too short") {
  auto const k = run_kernel_pipeline(GroupFamily::VSG, 2, Triple{1, 1, 1});
  CHECK_FALSE(identify_kernel(k, derived_kernel(Triple{1, 1, 1}), 0).has_value());
}

TEST_CASE("certificates compose and reverse") {
  auto const k111 = run_kernel_pipeline(GroupFamily::VSG, 2, Triple{1, 1, 1});
  auto const k101 = run_kernel_pipeline(GroupFamily::VSG, 2, Triple{1, 0, 1});
  auto a = identify_kernel(k111, derived_kernel(Triple{1, 1, 1}));
  REQUIRE(a.has_value());
  CHECK(verify_iso(reversed(*a)).valid);
  // pipeline -> fixture -> pipeline is the identity certificate on the kernel
  auto loop = compose(*a, reversed(*a));
  CHECK(verify_iso(loop).valid);
  auto b = identify_kernel(k101, derived_kernel(Triple{1, 0, 1}));
  REQUIRE(b.has_value());
  CHECK_THROWS_AS(compose(*a, *b), Error);
}
