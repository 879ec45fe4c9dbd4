#include "vsg/kernels.hpp"

#include <map>

#include "vsg/free_product.hpp"

namespace vsg {

namespace {

struct Spec {
  std::vector<std::pair<char const*, char const*>> gens;  // name, VSG_2 word
  std::vector<std::pair<char const*, char const*>> rels;  // lhs, rhs
};

Spec reference_spec(Triple t) {
  auto const s = t.str();
  if (s == "111") return {{{"a12", "s1 v1"}, {"b12", "t1 v1"}, {"c12", "v1 s1"}}, {{"a12 c12 b12", "b12 c12 a12"}}};
  if (s == "110")
    return {{{"A12", "s1^2"}, {"e12", "s1 t1"}, {"v1", "v1"}, {"a", "s1 v1 s1^-1"}}, {{"v1^2", "e"}, {"a^2", "e"}}};
  if (s == "101") return {{{"a12", "s1 v1"}, {"c12", "v1 s1"}, {"t1", "t1"}}, {{"a12 c12 t1", "t1 a12 c12"}}};
  if (s == "100")
    return {{{"A12", "s1^2"}, {"t1", "t1"}, {"v1", "v1"}, {"a", "s1 v1 s1^-1"}},
            {{"v1^2", "e"}, {"a^2", "e"}, {"A12 t1", "t1 A12"}}};
  if (s == "011") return {{{"b12", "t1 v1"}, {"d12", "v1 t1"}, {"s1", "s1"}}, {{"b12 d12 s1", "s1 b12 d12"}}};
  if (s == "010")
    return {{{"s1", "s1"}, {"T", "t1^2"}, {"v1", "v1"}, {"b", "t1 v1 t1^-1"}},
            {{"v1^2", "e"}, {"b^2", "e"}, {"s1 T", "T s1"}}};
  if (s == "001")
    return {{{"s1", "s1"}, {"t1", "t1"}, {"c", "v1 s1 v1^-1"}, {"d", "v1 t1 v1^-1"}},
            {{"s1 t1", "t1 s1"}, {"c d", "d c"}}};
  if (s == "000") return {{{"s1", "s1"}, {"t1", "t1"}, {"v1", "v1"}}, {{"v1^2", "e"}, {"s1 t1", "t1 s1"}}};
  throw Error("no kernel fixture for triple " + s);
}

KernelFixture build(Triple t, Spec const& spec, std::string note) {
  std::vector<std::string> names;
  for (auto const& [n, w] : spec.gens) names.push_back(n);
  KernelFixture f{t, custom_presentation(names, 2), {}, std::move(note)};
  for (auto const& [n, w] : spec.gens) f.words.push_back(parse_word(w, 2));
  for (auto const& [l, r] : spec.rels) f.presentation.add_relation(f.presentation.parse(l), f.presentation.parse(r), RelTag::Custom);
  f.presentation.label = "Ker(phi_" + t.str() + ")";
  return f;
}

}  // namespace

KernelFixture reference_kernel(Triple t) { return build(t, reference_spec(t), "reference"); }

KernelFixture derived_kernel(Triple t) {
  Spec spec = reference_spec(t);
  if (t.str() != "110") return build(t, spec, "reference");
  spec.rels.push_back({"A12 e12", "e12 A12"});
  return build(t, spec, "reference plus [A12, e12]");
}

std::optional<IsoCertificate> identify_kernel(KernelPipeline const& k, KernelFixture const& f,
                                              std::size_t max_length) {
  auto const& fp = f.presentation;
  auto key = [](Word const& w) { return format_word(vsg2_normal_word(w)); };

  std::map<std::string, std::size_t> wanted;  // normal form -> pipeline generator
  for (std::size_t i = 0; i < k.generator_words.size(); ++i) wanted.emplace(key(k.generator_words[i]), i);
  std::vector<std::optional<Word>> found(k.generator_words.size());
  std::size_t missing = found.size();

  // shortlex breadth-first over reduced words in the fixture generators
  std::vector<Letter> alphabet;
  for (Generator g : fp.generators()) {
    alphabet.push_back({g, 1});
    alphabet.push_back({g, -1});
  }
  struct Node {
    std::vector<Letter> letters;
    Word image;
  };
  std::vector<Node> layer{{{}, Word(2)}};
  for (std::size_t len = 1; len <= max_length && missing > 0; ++len) {
    std::vector<Node> next;
    for (auto const& node : layer)
      for (Letter l : alphabet) {
        if (!node.letters.empty() && node.letters.back().gen == l.gen && node.letters.back().exp == -l.exp) continue;
        Node n{node.letters, concat(node.image, power(f.words[fp.require_index(l.gen)], l.exp))};
        n.letters.push_back(l);
        if (auto it = wanted.find(key(n.image)); it != wanted.end() && !found[it->second]) {
          found[it->second] = Word(2, n.letters);
          --missing;
        }
        next.push_back(std::move(n));
      }
    layer = std::move(next);
  }
  if (missing > 0) return std::nullopt;

  IsoCertificate c;
  c.p1 = k.presentation;
  c.p2 = fp;
  for (auto& w : found) c.map12.push_back(*w);
  for (auto const& w : f.words) c.map21.push_back(k.to_kernel(w));
  return c;
}

}  // namespace vsg
