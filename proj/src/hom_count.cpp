#include "vsg/hom_count.hpp"

#include <omp.h>

#include <sstream>

namespace vsg {

namespace {

struct UnitLetter {
  int gen;
  bool inverse;
};

using Compiled = std::vector<UnitLetter>;

Compiled compile(Presentation const& p, Word const& w) {
  Compiled out;
  for (Letter l : w.letters()) {
    int const g = static_cast<int>(p.require_index(l.gen));
    for (int k = 0; k < std::abs(l.exp); ++k) out.push_back({g, l.exp < 0});
  }
  return out;
}

class Enumerator {
 public:
  Enumerator(Presentation const& p, FiniteGroup const& g) : group_(g), rank_(static_cast<int>(p.rank())) {
    ready_.resize(static_cast<std::size_t>(rank_));
    for (auto const& r : p.relators()) {
      Compiled c = compile(p, r.word);
      if (c.empty()) continue;
      int last = 0;
      for (auto u : c) last = std::max(last, u.gen);
      ready_[static_cast<std::size_t>(last)].push_back(std::move(c));
    }
  }

  int rank() const noexcept { return rank_; }

  int eval(Compiled const& c, std::vector<int> const& img) const {
    int acc = group_.identity();
    for (auto u : c) {
      int x = img[static_cast<std::size_t>(u.gen)];
      acc = group_.multiply(acc, u.inverse ? group_.invert(x) : x);
    }
    return acc;
  }

  bool consistent(int depth, std::vector<int> const& img) const {
    for (auto const& c : ready_[static_cast<std::size_t>(depth)])
      if (eval(c, img) != group_.identity()) return false;
    return true;
  }

  // Visits every consistent full assignment extending img[0..depth).
  // The visitor returns false to stop; so does running out of budget.
  template <class Visit>
  bool walk(int depth, std::vector<int>& img, std::uint64_t& nodes, std::uint64_t budget,
            Visit&& visit) const {
    if (depth == rank_) return visit(img);
    int const order = static_cast<int>(group_.order());
    for (int x = 0; x < order; ++x) {
      if (++nodes > budget) return false;
      img[static_cast<std::size_t>(depth)] = x;
      if (!consistent(depth, img)) continue;
      if (!walk(depth + 1, img, nodes, budget, visit)) return false;
    }
    return true;
  }

 private:
  FiniteGroup const& group_;
  int rank_;
  std::vector<std::vector<Compiled>> ready_;
};

void check_rank(Presentation const& p) {
  if (p.rank() > kMaxCountGenerators) {
    throw Error("hom counting supports at most " + std::to_string(kMaxCountGenerators) +
                " generators, presentation has " + std::to_string(p.rank()));
  }
}

constexpr std::uint64_t kUnbounded = ~std::uint64_t{0};

}  // namespace

std::uint64_t count_homs(Presentation const& p, FiniteGroup const& target) {
  check_rank(p);
  Enumerator e(p, target);
  if (e.rank() == 0) return 1;
  std::vector<int> img(static_cast<std::size_t>(e.rank()));
  std::uint64_t nodes = 0, count = 0;
  e.walk(0, img, nodes, kUnbounded, [&](std::vector<int> const&) {
    ++count;
    return true;
  });
  return count;
}

std::uint64_t count_homs_parallel(Presentation const& p, FiniteGroup const& target) {
  check_rank(p);
  Enumerator e(p, target);
  if (e.rank() == 0) return 1;
  int const order = static_cast<int>(target.order());
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : total)
  for (int x = 0; x < order; ++x) {
    std::vector<int> img(static_cast<std::size_t>(e.rank()));
    img[0] = x;
    if (!e.consistent(0, img)) continue;
    std::uint64_t nodes = 0, count = 0;
    e.walk(1, img, nodes, kUnbounded, [&](std::vector<int> const&) {
      ++count;
      return true;
    });
    total += count;
  }
  return total;
}

HomFingerprint hom_fingerprint(Presentation const& p) {
  HomFingerprint f;
  for (int m : {3, 4}) {
    auto g = FiniteGroup::symmetric(m);
    f.counts.emplace_back(g.name(), count_homs(p, g));
  }
  return f;
}

std::string format_fingerprint(HomFingerprint const& f) {
  std::ostringstream os;
  for (std::size_t i = 0; i < f.counts.size(); ++i)
    os << (i ? " " : "") << f.counts[i].first << "=" << f.counts[i].second;
  return os.str();
}

SeparationSearch search_separating_quotient(Presentation const& p, Word const& a, Word const& b,
                                            std::span<FiniteGroup const> targets,
                                            std::uint64_t node_budget) {
  SeparationSearch result;
  Compiled const ca = compile(p, a), cb = compile(p, b);
  for (auto const& g : targets) {
    Enumerator e(p, g);
    if (e.rank() == 0) continue;
    std::vector<int> img(static_cast<std::size_t>(e.rank()));
    std::uint64_t nodes = 0;
    bool const finished = e.walk(0, img, nodes, node_budget - result.nodes,
                                 [&](std::vector<int> const& x) {
      int const la = e.eval(ca, x), lb = e.eval(cb, x);
      if (la == lb) return true;
      Separation s{g.name(), {}, g.element(la), g.element(lb)};
      for (int i : x) s.images.push_back(g.element(i));
      result.found = std::move(s);
      return false;
    });
    result.nodes += std::min(nodes, node_budget - result.nodes);
    if (result.found) return result;
    if (!finished) {
      result.exhausted = true;
      return result;
    }
  }
  return result;
}

}  // namespace vsg
