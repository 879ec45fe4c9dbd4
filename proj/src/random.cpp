#include "vsg/random.hpp"

namespace vsg {

Word random_word(std::mt19937_64& rng, std::span<Generator const> gens, int strands,
                 int max_length) {
  if (gens.empty() || max_length <= 0) return Word(strands);
  std::uniform_int_distribution<int> len(0, max_length);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> ex(0, 3);
  static constexpr int kExps[4] = {-2, -1, 1, 2};
  std::vector<Letter> letters;
  int const k = len(rng);
  for (int i = 0; i < k; ++i) letters.push_back({gens[pick(rng)], kExps[ex(rng)]});
  return Word(strands, letters);
}

}  // namespace vsg
