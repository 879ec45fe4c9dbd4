#include "vsg/batch.hpp"

#include "vsg/free_product.hpp"
#include "vsg/hom.hpp"
#include "vsg/random.hpp"
#include "vsg/structure.hpp"

namespace vsg {

Invariance invariance_of(GroupFamily f) {
  switch (f) {
    case GroupFamily::FCVSG:
    case GroupFamily::FCWSG:
    case GroupFamily::FWSG:
    case GroupFamily::GCVSG: return Invariance::ModTwo;
    default: return Invariance::Full;
  }
}

BatchResult invariance_batch(GroupFamily family, int n, std::uint64_t samples, std::uint64_t seed, Exec exec) {
  Presentation const p = build_presentation(family, n);
  Invariance const mode = invariance_of(family);
  if (p.relators().empty()) return {};
  auto check = [&](std::uint64_t i) {
    auto rng = sample_rng(seed, i);
    Word w = random_word(rng, p, 16);
    auto const& r = p.relators()[rng() % p.relators().size()];
    auto const pos = rng() % (w.length() + 1);
    auto const dir = (rng() & 1) ? Direction::Forward : Direction::Inverse;
    Word w2 = apply_relation(w, r, pos, dir, rng() % r.word.length());
    auto a = exponent_sums(w), b = exponent_sums(w2);
    if (mode == Invariance::Full) return a == b;
    return a.exp_s == b.exp_s && a.parity == b.parity && (a.exp_c - b.exp_c) % 2 == 0;
  };
  return run_batch(samples, check, exec);
}

BatchResult decompose_batch(int max_n, std::uint64_t samples, std::uint64_t seed, Exec exec) {
  Triple const triples[] = {{1, 1, 1}, {1, 0, 1}, {0, 0, 1}};
  std::vector<Presentation> ps;
  std::vector<std::vector<GeneratorMap<SymmetricGroup>>> phis;
  for (int n = 2; n <= max_n; ++n) {
    ps.push_back(build_presentation(GroupFamily::VSG, n));
    phis.emplace_back();
    for (Triple t : triples) phis.back().push_back(phi_triple(ps.back(), t));
  }
  auto check = [&](std::uint64_t i) {
    auto rng = sample_rng(seed, i);
    auto const k = rng() % ps.size();
    auto const& p = ps[k];
    Word w = random_word(rng, p, 40);
    auto const ti = rng() % 3;
    auto d = decompose(w, triples[ti]);
    if (concat(d.pure, d.section_word) != w) return false;
    if (!phis[k][ti].eval(d.pure).is_identity()) return false;
    if (p.strands() == 2 && vsg2_normal_form(concat(d.pure, d.section_word)) != vsg2_normal_form(w)) return false;
    return true;
  };
  return run_batch(samples, check, exec);
}

BatchResult trivial_center_batch(std::string const& factor_spec, std::uint64_t samples, std::uint64_t seed,
                                 Exec exec) {
  FreeProductGroup const g(parse_factor_spec(factor_spec));
  auto const gens = g.all_factor_generators();
  auto check = [&](std::uint64_t i) {
    auto rng = sample_rng(seed, i);
    auto e = g.random_element(rng, 1 + static_cast<int>(rng() % 6));
    if (e.is_identity()) return false;
    for (auto const& h : gens)
      if (!g.equal(g.multiply(e, h), g.multiply(h, e))) return true;
    return false;
  };
  return run_batch(samples, check, exec);
}

}  // namespace vsg
