#include "doctest.h"

#include "vsg/free_group.hpp"
#include "vsg/random.hpp"

using namespace vsg;

namespace {

Word x(int k, int e = 1) { return basis_word(k - 1, e); }
Word cat(std::initializer_list<Word> ws) {
  Word out(0);
  for (auto const& w : ws) out = concat(out, w);
  return out;
}

FreeGroupAutomorphism artin() {
  return FreeGroupAutomorphism({cat({x(1), x(2), x(1, -1)}), x(1)},
                               {x(2), cat({x(2, -1), x(1), x(2)})});
}

FreeGroupAutomorphism random_aut(std::mt19937_64& rng, int rank) {
  // products of elementary Nielsen moves with their inverses tracked
  FreeGroupAutomorphism f(rank);
  std::uniform_int_distribution<int> pick(0, rank - 1), kind(0, 2);
  for (int s = 0; s < 4; ++s) {
    int i = pick(rng), j = pick(rng);
    std::vector<Word> img, inv;
    for (int k = 0; k < rank; ++k) {
      img.push_back(basis_word(k));
      inv.push_back(basis_word(k));
    }
    switch (kind(rng)) {
      case 0:  // x_i -> x_i^-1
        img[static_cast<std::size_t>(i)] = basis_word(i, -1);
        inv[static_cast<std::size_t>(i)] = basis_word(i, -1);
        break;
      case 1:  // x_i <-> x_j
        std::swap(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(j)]);
        std::swap(inv[static_cast<std::size_t>(i)], inv[static_cast<std::size_t>(j)]);
        break;
      default:  // x_i -> x_i x_j
        if (i == j) continue;
        img[static_cast<std::size_t>(i)] = cat({basis_word(i), basis_word(j)});
        inv[static_cast<std::size_t>(i)] = cat({basis_word(i), basis_word(j, -1)});
    }
    f = aut_compose(f, FreeGroupAutomorphism(img, inv));
  }
  return f;
}

}  // namespace

TEST_CASE("substitution") {
  CHECK(aut_apply(artin(), x(2, -1)) == x(1, -1));
  CHECK(aut_apply(artin(), cat({x(1), x(2)})) == cat({x(1), x(2)}));
  CHECK(aut_inverse_checked(artin()));
  CHECK(aut_equal(aut_compose(artin(), aut_inverse(artin())), FreeGroupAutomorphism(2)));
  CHECK_THROWS_AS(aut_compose(artin(), FreeGroupAutomorphism(3)), Error);
  CHECK_THROWS_AS(aut_apply(artin(), x(3)), Error);
}

TEST_CASE("composition order matches word order") {
  // compose(f, g) applies f first: x -> g(f(x))
  FreeGroupAutomorphism swap({x(2), x(1)}, {x(2), x(1)});
  auto fg = aut_compose(artin(), swap);
  CHECK(fg.image(0) == cat({x(2), x(1), x(2, -1)}));
  CHECK(fg.image(1) == x(2));
  CHECK(aut_inverse_checked(fg));
}

TEST_CASE("automorphism properties (sampled)") {
  for (std::uint64_t i = 0; i < 500; ++i) {
    auto rng = sample_rng(5, i);
    auto f = random_aut(rng, 3), g = random_aut(rng, 3), h = random_aut(rng, 3);
    REQUIRE(aut_inverse_checked(f));
    REQUIRE(aut_compose(aut_compose(f, g), h) == aut_compose(f, aut_compose(g, h)));
    std::vector<Generator> basis{abstract_gen(0), abstract_gen(1), abstract_gen(2)};
    Word w = random_word(rng, basis, 0, 8);
    Word fw = aut_apply(f, w);
    REQUIRE(Word(0, std::vector<Letter>(fw.letters().begin(), fw.letters().end())) == fw);
    REQUIRE(aut_apply(g, aut_apply(f, w)) == aut_apply(aut_compose(f, g), w));
  }
}

TEST_CASE("formatting") {
  AutGroup g(2);
  CHECK(g.format(artin()) == "{x1 -> x1 x2 x1^-1, x2 -> x1}");
}
