#pragma once

// Homomorphisms out of presentations into computable target groups.

#include <concepts>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "vsg/permutation.hpp"
#include "vsg/presentation.hpp"

namespace vsg {

template <class G>
concept TargetGroup = requires(G const& g, typename G::Element const& a) {
  { g.identity() } -> std::convertible_to<typename G::Element>;
  { g.multiply(a, a) } -> std::convertible_to<typename G::Element>;
  { g.invert(a) } -> std::convertible_to<typename G::Element>;
  { g.equal(a, a) } -> std::convertible_to<bool>;
  { g.format(a) } -> std::convertible_to<std::string>;
};

template <TargetGroup G>
typename G::Element group_power(G const& g, typename G::Element const& x, int k) {
  auto base = k < 0 ? g.invert(x) : x;
  auto acc = g.identity();
  for (int e = 0; e < std::abs(k); ++e) acc = g.multiply(acc, base);
  return acc;
}

template <TargetGroup G>
class GeneratorMap {
 public:
  using Element = typename G::Element;

  GeneratorMap(Presentation source, G target, std::vector<Element> images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_.rank()) {
      throw Error("generator map needs " + std::to_string(source_.rank()) + " images, got " +
                  std::to_string(images_.size()));
    }
  }

  // Images from a per-generator callback, in presentation order.
  template <class F>
  static GeneratorMap build(Presentation source, G target, F&& image_of) {
    std::vector<Element> images;
    for (Generator g : source.generators()) images.push_back(image_of(g));
    return GeneratorMap(std::move(source), std::move(target), std::move(images));
  }

  Presentation const& source() const noexcept { return source_; }
  G const& target() const noexcept { return target_; }
  std::vector<Element> const& images() const noexcept { return images_; }
  Element const& image(Generator g) const { return images_[source_.require_index(g)]; }

  Element eval(Word const& w) const {
    Element acc = target_.identity();
    for (Letter l : w.letters()) {
      auto idx = source_.index_of(l.gen);
      if (!idx) throw Error("unknown generator " + default_name(l.gen) + " in eval_hom");
      acc = target_.multiply(acc, group_power(target_, images_[*idx], l.exp));
    }
    return acc;
  }

 private:
  Presentation source_;
  G target_;
  std::vector<Element> images_;
};

template <TargetGroup G>
typename G::Element eval_hom(GeneratorMap<G> const& m, Word const& w) {
  return m.eval(w);
}

struct HomFailure {
  std::size_t relator = 0;
  RelTag tag = RelTag::Custom;
  std::string relation;  // "L = R" in source names
  std::string lhs_image;
  std::string rhs_image;
};

struct HomReport {
  bool is_homomorphism = true;
  std::vector<HomFailure> failures;
};

template <TargetGroup G>
HomReport verify_homomorphism(GeneratorMap<G> const& m) {
  HomReport report;
  auto const& p = m.source();
  auto const& g = m.target();
  auto rels = p.relators();
  for (std::size_t i = 0; i < rels.size(); ++i) {
    auto const& r = rels[i];
    auto lhs = m.eval(r.lhs);
    auto rhs = m.eval(r.rhs);
    if (!g.equal(lhs, rhs)) {
      report.failures.push_back(
          {i, r.tag, p.format(r.lhs) + " = " + p.format(r.rhs), g.format(lhs), g.format(rhs)});
    }
  }
  report.is_homomorphism = report.failures.empty();
  return report;
}

// (e1, e2, e3) for sigma, tau, v.
struct Triple {
  int classical = 0;
  int singular = 0;
  int virtual_ = 0;

  static Triple parse(std::string_view digits);
  std::string str() const;
  friend auto operator<=>(Triple const&, Triple const&) = default;
};

std::vector<Triple> all_triples();
// "000,001,101,111"
std::string format_triples(std::vector<Triple> const& ts);

GeneratorMap<SymmetricGroup> phi_triple(Presentation p, Triple t);
GeneratorMap<SymmetricGroup> phi_triple(GroupFamily family, int n, Triple t);
// Passing triples in sorted order. Requires n >= 3.
std::vector<Triple> classify_triples(GroupFamily family, int n);
// Same test without the n >= 3 restriction.
std::vector<Triple> passing_triples(Presentation const& p);

// sigma -> (0,id), tau -> (1,id), v_i -> (0,(i i+1))
GeneratorMap<ZxSnGroup> psi_map(Presentation p);

struct ExponentData {
  long long exp_c = 0;
  long long exp_s = 0;
  long long exp_cs = 0;
  int parity = 0;
  friend bool operator==(ExponentData const&, ExponentData const&) = default;
};

ExponentData exponent_sums(Word const& w);
// "expC=1 expS=-1 expCS=0 parity=1"
std::string format_exponents(ExponentData const& e);

// Integer projections of the abelianization onto Z.
enum class ExponentKind { Classical, Singular, ClassicalSingular };
GeneratorMap<AbelianGroup> exponent_map(Presentation p, ExponentKind kind);

}  // namespace vsg
