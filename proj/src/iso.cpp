#include "vsg/iso.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "vsg/abelian.hpp"
#include "vsg/schreier.hpp"

namespace vsg {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Trivial: return "trivial";
    case Verdict::NonTrivial: return "non-trivial";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

EngineKind parse_engine_kind(std::string_view s) {
  if (s == "auto") return EngineKind::Auto;
  if (s == "free-product") return EngineKind::FreeProduct;
  if (s == "abelian") return EngineKind::Abelian;
  if (s == "zxsn") return EngineKind::ZxSn;
  if (s == "rewriting") return EngineKind::Rewriting;
  throw Error("unknown engine '" + std::string(s) + "'");
}

std::string to_string(EngineKind k) {
  switch (k) {
    case EngineKind::Auto: return "auto";
    case EngineKind::FreeProduct: return "free-product";
    case EngineKind::Abelian: return "abelian";
    case EngineKind::ZxSn: return "zxsn";
    case EngineKind::Rewriting: return "rewriting";
  }
  return "auto";
}

namespace {

// ---- free products ------------------------------------------------------

class FreeProductEngine final : public WordProblem {
 public:
  FreeProductEngine(FreeProductGroup g, std::vector<FactorAssignment> a)
      : group_(std::move(g)), assignment_(std::move(a)) {}
  Verdict decide(Word const& w) const override {
    return fp_normalize(w, group_, assignment_).is_identity() ? Verdict::Trivial : Verdict::NonTrivial;
  }
  bool exact() const override { return true; }
  std::string name() const override { return "free-product(" + group_.name() + ")"; }

 private:
  FreeProductGroup group_;
  std::vector<FactorAssignment> assignment_;
};

// x^a y^b x^-a y^-b with unit exponents, in any rotation.
bool is_commutator(Word const& r, Generator& x, Generator& y) {
  if (r.syllables() != 4) return false;
  for (Letter l : r.letters())
    if (std::abs(l.exp) != 1) return false;
  auto const& a = r[0];
  auto const& b = r[1];
  if (a.gen == b.gen) return false;
  if (!(r[2] == Letter{a.gen, -a.exp}) || !(r[3] == Letter{b.gen, -b.exp})) return false;
  x = a.gen;
  y = b.gen;
  return true;
}

// ---- abelian presentations ----------------------------------------------

class AbelianEngine final : public WordProblem {
 public:
  explicit AbelianEngine(Presentation p) : p_(std::move(p)), lattice_(exponent_matrix(p_)) {
    base_ = smith_invariants(lattice_);
  }
  Verdict decide(Word const& w) const override {
    std::vector<mpz_class> v(p_.rank(), 0);
    for (Letter l : w.letters()) v[p_.require_index(l.gen)] += l.exp;
    if (std::all_of(v.begin(), v.end(), [](mpz_class const& x) { return x == 0; })) return Verdict::Trivial;
    IntMatrix m = lattice_;
    if (m.rows() == 0) m = IntMatrix(0, p_.rank());
    m.append_row(v);
    return same_lattice(base_, smith_invariants(m)) ? Verdict::Trivial : Verdict::NonTrivial;
  }
  bool exact() const override { return true; }
  std::string name() const override { return "abelian(" + format_invariants(abelianization(p_)) + ")"; }

 private:
  // L is contained in L' = L + Zv; they are equal iff the ranks and the
  // products of the nonzero invariant factors agree.
  static bool same_lattice(std::vector<mpz_class> const& a, std::vector<mpz_class> const& b) {
    auto summary = [](std::vector<mpz_class> const& inv) {
      std::size_t rank = 0;
      mpz_class prod = 1;
      for (auto const& d : inv)
        if (d != 0) {
          ++rank;
          prod *= d;
        }
      return std::pair{rank, prod};
    };
    return summary(a) == summary(b);
  }

  Presentation p_;
  IntMatrix lattice_;
  std::vector<mpz_class> base_;
};

// ---- Z x S_m ------------------------------------------------------------

class ZxSnEngine final : public WordProblem {
 public:
  ZxSnEngine(Presentation p, int m) : p_(std::move(p)), group_(m) {}
  Verdict decide(Word const& w) const override {
    auto acc = group_.identity();
    int const m = group_.degree();
    for (Letter l : w.letters()) {
      std::size_t const k = p_.require_index(l.gen);
      ZxSnElement g = k == 0 ? ZxSnElement{1, Permutation(m)}
                             : ZxSnElement{0, Permutation::transposition(m, static_cast<int>(k), static_cast<int>(k) + 1)};
      acc = group_.multiply(acc, group_power(group_, g, l.exp));
    }
    return group_.equal(acc, group_.identity()) ? Verdict::Trivial : Verdict::NonTrivial;
  }
  bool exact() const override { return true; }
  std::string name() const override { return "zxsn(" + std::to_string(group_.degree()) + ")"; }

 private:
  Presentation p_;
  ZxSnGroup group_;
};

// ---- Tietze transport ---------------------------------------------------

class TietzeEngine final : public WordProblem {
 public:
  TietzeEngine(TietzeTrace trace, Engine inner) : trace_(std::move(trace)), inner_(std::move(inner)) {}
  Verdict decide(Word const& w) const override { return inner_->decide(substitute_trace(trace_, w)); }
  bool exact() const override { return inner_->exact(); }
  std::string name() const override {
    return trace_.moves.empty() ? inner_->name() : "tietze+" + inner_->name();
  }

 private:
  TietzeTrace trace_;
  Engine inner_;
};

// ---- rewriting ----------------------------------------------------------

// Generator k is coded as letter 2k, its inverse as 2k+1.
using Code = std::vector<int>;

int inv_letter(int x) { return x ^ 1; }

Code encode(Presentation const& p, Word const& w) {
  Code out;
  for (Letter l : w.expand()) {
    int const k = static_cast<int>(p.require_index(l.gen));
    out.push_back(2 * k + (l.exp < 0 ? 1 : 0));
  }
  return out;
}

Code invert_code(Code const& c) {
  Code out(c.rbegin(), c.rend());
  for (auto& x : out) x = inv_letter(x);
  return out;
}

bool shortlex_less(Code const& a, Code const& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

class KnuthBendix {
 public:
  KnuthBendix(std::size_t letters, KnuthBendixLimits limits) : by_last_(letters), limits_(limits) {}

  void add_equation(Code a, Code b) {
    pending_.emplace_back(std::move(a), std::move(b));
    drain();
  }

  // Runs completion; true when every critical pair resolved within limits.
  bool complete() {
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        if (!rules_[i].alive) break;
        if (!rules_[j].alive) continue;
        overlaps(i, j);
        if (i != j && rules_[i].alive && rules_[j].alive) overlaps(j, i);
        if (overflow_) return false;
      }
    }
    return !overflow_;
  }

  Code reduce(Code const& w) const {
    Code out;
    Code todo(w.rbegin(), w.rend());  // stack, next letter at the back
    while (!todo.empty()) {
      out.push_back(todo.back());
      todo.pop_back();
      for (std::size_t r : by_last_[static_cast<std::size_t>(out.back())]) {
        auto const& rule = rules_[r];
        if (!rule.alive || rule.lhs.size() > out.size()) continue;
        if (!std::equal(rule.lhs.begin(), rule.lhs.end(), out.end() - static_cast<std::ptrdiff_t>(rule.lhs.size())))
          continue;
        out.resize(out.size() - rule.lhs.size());
        todo.insert(todo.end(), rule.rhs.rbegin(), rule.rhs.rend());
        break;
      }
    }
    return out;
  }

  std::size_t rule_count() const {
    return static_cast<std::size_t>(std::count_if(rules_.begin(), rules_.end(), [](auto const& r) { return r.alive; }));
  }

 private:
  struct Rule {
    Code lhs, rhs;
    bool alive = true;
  };

  void drain() {
    while (!pending_.empty()) {
      auto [a, b] = std::move(pending_.back());
      pending_.pop_back();
      a = reduce(a);
      b = reduce(b);
      if (a == b) continue;
      if (shortlex_less(a, b)) std::swap(a, b);
      if (a.size() > limits_.max_length || rule_count() >= limits_.max_rules) {
        overflow_ = true;
        continue;
      }
      std::size_t const id = rules_.size();
      rules_.push_back({a, b, true});
      by_last_[static_cast<std::size_t>(a.back())].push_back(id);
      // interreduce the older rules against the new one
      for (std::size_t k = 0; k < id; ++k) {
        auto& r = rules_[k];
        if (!r.alive) continue;
        if (std::search(r.lhs.begin(), r.lhs.end(), a.begin(), a.end()) != r.lhs.end()) {
          r.alive = false;
          pending_.emplace_back(r.lhs, r.rhs);
        } else {
          r.rhs = reduce(r.rhs);
        }
      }
    }
  }

  void overlaps(std::size_t i, std::size_t j) {
    Code const u = rules_[i].lhs, v = rules_[j].lhs;
    for (std::size_t k = 1; k < std::min(u.size(), v.size()); ++k) {
      if (!std::equal(u.end() - static_cast<std::ptrdiff_t>(k), u.end(), v.begin())) continue;
      Code left = rules_[i].rhs;
      left.insert(left.end(), v.begin() + static_cast<std::ptrdiff_t>(k), v.end());
      Code right(u.begin(), u.end() - static_cast<std::ptrdiff_t>(k));
      right.insert(right.end(), rules_[j].rhs.begin(), rules_[j].rhs.end());
      add_equation(std::move(left), std::move(right));
      if (!rules_[i].alive || !rules_[j].alive) return;
    }
  }

  std::vector<Rule> rules_;
  std::vector<std::vector<std::size_t>> by_last_;
  std::vector<std::pair<Code, Code>> pending_;
  KnuthBendixLimits limits_;
  bool overflow_ = false;
};

// Greedy Dehn reduction with every rotation of every relator and its inverse.
// Only ever shortens the word by substituting equal subwords, so an empty
// result proves triviality.
class Dehn {
 public:
  Dehn(Presentation const& p) : involution_(2 * p.rank(), false) {
    for (Generator g : p.involutions()) {
      auto k = p.require_index(g);
      involution_[2 * k] = involution_[2 * k + 1] = true;
    }
    for (auto const& r : p.relators()) {
      Code c = encode(p, cyclic_reduce(r.word));
      if (c.empty()) continue;
      for (Code base : {c, invert_code(c)})
        for (std::size_t s = 0; s < base.size(); ++s) {
          Code rot(base.begin() + static_cast<std::ptrdiff_t>(s), base.end());
          rot.insert(rot.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(s));
          pieces_.push_back(std::move(rot));
        }
    }
  }

  bool proves_trivial(Code w) const {
    w = normalize(w);
    while (!w.empty()) {
      if (step(w)) continue;
      // conjugates: try every rotation of the cyclically reduced word
      bool moved = false;
      for (std::size_t s = 1; s < w.size() && !moved; ++s) {
        Code rot(w.begin() + static_cast<std::ptrdiff_t>(s), w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(s));
        rot = normalize(rot);
        if (rot.size() < w.size() || step(rot)) {
          w = rot;
          moved = true;
        }
      }
      if (!moved) return false;
    }
    return true;
  }

 private:
  Code normalize(Code const& w) const {
    Code out;
    for (int x : w) {
      if (involution_[static_cast<std::size_t>(x)]) x &= ~1;
      if (!out.empty() && (out.back() == inv_letter(x) || (involution_[static_cast<std::size_t>(x)] && out.back() == x)))
        out.pop_back();
      else
        out.push_back(x);
    }
    return out;
  }

  bool step(Code& w) const {
    for (std::size_t i = 0; i < w.size(); ++i)
      for (auto const& r : pieces_) {
        std::size_t k = 0;
        while (k < r.size() && i + k < w.size() && w[i + k] == r[k]) ++k;
        if (2 * k <= r.size()) continue;
        Code rest(r.begin() + static_cast<std::ptrdiff_t>(k), r.end());
        Code next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        auto ri = invert_code(rest);
        next.insert(next.end(), ri.begin(), ri.end());
        next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(i + k), w.end());
        w = normalize(next);
        return true;
      }
    return false;
  }

  std::vector<bool> involution_;
  std::vector<Code> pieces_;
};

class RewritingEngine final : public WordProblem {
 public:
  RewritingEngine(Presentation p, KnuthBendixLimits limits)
      : p_(std::move(p)), kb_(2 * p_.rank(), limits), dehn_(p_) {
    for (std::size_t k = 0; k < p_.rank(); ++k) {
      int const x = static_cast<int>(2 * k);
      kb_.add_equation({x, x + 1}, {});
      kb_.add_equation({x + 1, x}, {});
    }
    for (auto const& r : p_.relators()) kb_.add_equation(encode(p_, r.word), {});
    complete_ = kb_.complete();
  }

  Verdict decide(Word const& w) const override {
    Code c = encode(p_, w);
    if (kb_.reduce(c).empty()) return Verdict::Trivial;
    if (complete_) return Verdict::NonTrivial;
    if (dehn_.proves_trivial(c)) return Verdict::Trivial;
    return Verdict::Unknown;
  }
  bool exact() const override { return complete_; }
  std::string name() const override {
    return complete_ ? "knuth-bendix(" + std::to_string(kb_.rule_count()) + " rules)" : "rewriting(partial)";
  }

 private:
  Presentation p_;
  KnuthBendix kb_;
  Dehn dehn_;
  bool complete_ = false;
};

// Greedy Dehn reduction over the relators as given; proves triviality only.
class DehnEngine final : public WordProblem {
 public:
  explicit DehnEngine(Presentation p) : p_(std::move(p)), dehn_(p_) {}
  Verdict decide(Word const& w) const override {
    return dehn_.proves_trivial(encode(p_, w)) ? Verdict::Trivial : Verdict::Unknown;
  }
  bool exact() const override { return false; }
  std::string name() const override { return "dehn"; }

 private:
  Presentation p_;
  Dehn dehn_;
};

// First engine with a definite verdict wins.
class ChainEngine final : public WordProblem {
 public:
  explicit ChainEngine(std::vector<Engine> engines) : engines_(std::move(engines)) {}
  Verdict decide(Word const& w) const override {
    for (auto const& e : engines_)
      if (auto v = e->decide(w); v != Verdict::Unknown) return v;
    return Verdict::Unknown;
  }
  bool exact() const override {
    return std::any_of(engines_.begin(), engines_.end(), [](Engine const& e) { return e->exact(); });
  }
  std::string name() const override {
    std::string out;
    for (auto const& e : engines_) out += (out.empty() ? "" : "|") + e->name();
    return out;
  }

 private:
  std::vector<Engine> engines_;
};

std::optional<Engine> recognize_exact(Presentation const& p) {
  if (auto e = recognize_free_product(p)) return e;
  if (auto e = recognize_abelian(p)) return e;
  if (auto e = recognize_zxsn(p)) return e;
  return std::nullopt;
}

}  // namespace

std::optional<Engine> recognize_free_product(Presentation const& p) {
  std::size_t const k = p.rank();
  std::vector<long long> order(k, 0);  // 0: infinite
  std::vector<std::vector<bool>> edge(k, std::vector<bool>(k, false));
  for (auto const& r : p.relators()) {
    Word const w = cyclic_reduce(r.word);
    Generator x, y;
    if (w.syllables() == 1) {
      auto const i = p.require_index(w[0].gen);
      long long const d = std::abs(w[0].exp);
      if (d < 2) return std::nullopt;
      order[i] = std::gcd(order[i], d);
    } else if (is_commutator(w, x, y)) {
      auto const i = p.require_index(x), j = p.require_index(y);
      edge[i][j] = edge[j][i] = true;
    } else {
      return std::nullopt;
    }
  }
  // components of the commutator graph must be cliques
  std::vector<int> comp(k, -1);
  int ncomp = 0;
  for (std::size_t s = 0; s < k; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < k; ++v)
        if (edge[u][v] && comp[v] < 0) {
          comp[v] = ncomp;
          stack.push_back(v);
        }
    }
    ++ncomp;
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (comp[i] == comp[j] && !edge[i][j]) return std::nullopt;

  FactorSpec spec;
  std::vector<FactorAssignment> assignment(k);
  for (int c = 0; c < ncomp; ++c) {
    std::vector<std::size_t> free, tors;
    for (std::size_t i = 0; i < k; ++i)
      if (comp[i] == c) (order[i] == 0 ? free : tors).push_back(i);
    std::vector<long long> torsion;
    for (auto i : tors) torsion.push_back(order[i]);
    spec.factors.push_back(Factor::abelian(static_cast<int>(free.size()), torsion));
    std::size_t const dim = free.size() + tors.size();
    std::size_t pos = 0;
    for (auto const* list : {&free, &tors})
      for (auto i : *list) {
        std::vector<long long> unit(dim, 0);
        unit[pos++] = 1;
        assignment[i] = {p.generators()[i], c, unit};
      }
  }
  return std::make_shared<FreeProductEngine>(FreeProductGroup(spec), std::move(assignment));
}

std::optional<Engine> recognize_abelian(Presentation const& p) {
  std::size_t const k = p.rank();
  std::vector<std::vector<bool>> edge(k, std::vector<bool>(k, false));
  for (auto const& r : p.relators()) {
    Generator x, y;
    Word const w = cyclic_reduce(r.word);
    if (is_commutator(w, x, y)) {
      auto const i = p.require_index(x), j = p.require_index(y);
      edge[i][j] = edge[j][i] = true;
    }
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (!edge[i][j]) return std::nullopt;
  return std::make_shared<AbelianEngine>(p);
}

Presentation zxsn_presentation(int m) {
  if (m < 1) throw Error("Z x S_m needs m >= 1");
  std::vector<std::string> names{"t"};
  for (int i = 1; i < m; ++i) names.push_back("u" + std::to_string(i));
  Presentation p = custom_presentation(names);
  auto u = [&](int i, int e = 1) { return Word::single(0, p.generators()[static_cast<std::size_t>(i)], e); };
  Word const t = u(0);
  for (int i = 1; i < m; ++i) p.add_relator(power(u(i), 2), RelTag::Custom);
  for (int i = 1; i + 1 < m; ++i) p.add_relator(power(concat(u(i), u(i + 1)), 3), RelTag::Custom);
  for (int i = 1; i < m; ++i)
    for (int j = i + 2; j < m; ++j) p.add_relator(power(concat(u(i), u(j)), 2), RelTag::Custom);
  for (int i = 1; i < m; ++i)
    p.add_relator(concat(concat(t, u(i)), concat(invert(t), u(i, -1))), RelTag::Custom);
  p.label = "ZxS" + std::to_string(m);
  return p;
}

std::optional<Engine> recognize_zxsn(Presentation const& p) {
  int const m = static_cast<int>(p.rank());
  if (m < 1) return std::nullopt;
  Presentation const ref = zxsn_presentation(m);
  if (!std::equal(p.names().begin(), p.names().end(), ref.names().begin(), ref.names().end()) ||
      p.relators().size() != ref.relators().size())
    return std::nullopt;
  for (std::size_t i = 0; i < ref.relators().size(); ++i)
    if (p.format(p.relators()[i].word) != ref.format(ref.relators()[i].word)) return std::nullopt;
  return std::make_shared<ZxSnEngine>(p, m);
}

Presentation presentation_of(FactorSpec const& spec) {
  std::vector<std::string> names;
  for (auto const& f : spec.factors)
    for (int j = 0; j < f.generator_count(); ++j) names.push_back("x" + std::to_string(names.size() + 1));
  Presentation p = custom_presentation(names);
  std::size_t base = 0;
  for (auto const& f : spec.factors) {
    auto g = [&](std::size_t j, int e = 1) { return Word::single(0, p.generators()[base + j], e); };
    auto const n = static_cast<std::size_t>(f.generator_count());
    if (f.kind == Factor::Kind::Abelian) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          p.add_relator(concat(concat(g(i), g(j)), concat(g(i, -1), g(j, -1))), RelTag::Custom);
      for (std::size_t t = 0; t < f.torsion.size(); ++t)
        p.add_relator(power(g(static_cast<std::size_t>(f.free_rank) + t), static_cast<int>(f.torsion[t])),
                      RelTag::Custom);
    }
    base += n;
  }
  p.label = format_factor_spec(spec);
  return p;
}

Engine rewriting_engine(Presentation const& p, KnuthBendixLimits limits) {
  auto s = tietze_simplify(p);
  if (auto inner = recognize_exact(s.presentation)) return std::make_shared<TietzeEngine>(s.trace, *inner);
  Engine simplified = std::make_shared<TietzeEngine>(s.trace, std::make_shared<RewritingEngine>(s.presentation, limits));
  if (simplified->exact() || s.trace.moves.empty()) return simplified;
  // Tietze moves can hide a relator of p from the Dehn pass; keep p's own
  // relators available as well.
  return std::make_shared<ChainEngine>(std::vector<Engine>{simplified, std::make_shared<DehnEngine>(p)});
}

Engine make_engine(Presentation const& p, EngineKind kind) {
  std::optional<Engine> e;
  switch (kind) {
    case EngineKind::Auto:
      e = recognize_exact(p);
      return e ? *e : rewriting_engine(p);
    case EngineKind::FreeProduct: e = recognize_free_product(p); break;
    case EngineKind::Abelian: e = recognize_abelian(p); break;
    case EngineKind::ZxSn: e = recognize_zxsn(p); break;
    case EngineKind::Rewriting: return rewriting_engine(p);
  }
  if (!e) throw Error("engine " + to_string(kind) + " does not apply to this presentation");
  return *e;
}

PresentedGroup::PresentedGroup(Presentation p, Engine engine)
    : p_(std::move(p)), engine_(engine ? std::move(engine) : make_engine(p_)) {}

Verdict PresentedGroup::compare(Element const& a, Element const& b) const {
  return engine_->decide(concat(a, vsg::invert(b)));
}

bool PresentedGroup::equal(Element const& a, Element const& b) const {
  return compare(a, b) == Verdict::Trivial;
}

// ---- certificates -------------------------------------------------------

Word apply_map(Presentation const& src, std::vector<Word> const& images, Word const& w, int strands) {
  Word out(strands);
  for (Letter l : w.letters()) out = concat(out, power(images[src.require_index(l.gen)], l.exp));
  return out;
}

IsoCertificate reversed(IsoCertificate c) {
  std::swap(c.p1, c.p2);
  std::swap(c.map12, c.map21);
  return c;
}

IsoCertificate compose(IsoCertificate const& ab, IsoCertificate const& bc) {
  if (!(ab.p2 == bc.p1)) throw Error("certificates do not compose: middle presentations differ");
  IsoCertificate ac{ab.p1, bc.p2, {}, {}};
  for (auto const& w : ab.map12) ac.map12.push_back(apply_map(bc.p1, bc.map12, w, bc.p2.strands()));
  for (auto const& w : bc.map21) ac.map21.push_back(apply_map(ab.p2, ab.map21, w, ab.p1.strands()));
  return ac;
}

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<Word> parse_map(std::vector<std::string> const& lines, Presentation const& from,
                            Presentation const& to, std::string const& block) {
  std::vector<std::optional<Word>> images(from.rank());
  for (auto const& line : lines) {
    auto arrow = line.find("->");
    if (arrow == std::string::npos) throw Error(block + ": expected 'gen -> word', got '" + line + "'");
    std::string const name = trim(std::string_view(line).substr(0, arrow));
    auto const names = from.names();
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw Error(block + ": unknown generator '" + name + "'");
    auto idx = static_cast<std::size_t>(it - names.begin());
    if (images[idx]) throw Error(block + ": generator '" + name + "' mapped twice");
    images[idx] = to.parse(trim(std::string_view(line).substr(arrow + 2)));
  }
  std::vector<Word> out;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!images[i]) throw Error(block + ": no image for '" + from.names()[i] + "'");
    out.push_back(*images[i]);
  }
  return out;
}

}  // namespace

std::string format_certificate(IsoCertificate const& c) {
  std::ostringstream os;
  os << "presentation P1\n" << format_presentation(c.p1) << "end\n";
  os << "presentation P2\n" << format_presentation(c.p2) << "end\n";
  auto block = [&](char const* title, Presentation const& from, Presentation const& to, std::vector<Word> const& m) {
    os << title << '\n';
    for (std::size_t i = 0; i < from.rank(); ++i) os << from.names()[i] << " -> " << to.format(m[i]) << '\n';
    os << "end\n";
  };
  block("map12", c.p1, c.p2, c.map12);
  block("map21", c.p2, c.p1, c.map21);
  return os.str();
}

IsoCertificate parse_certificate(std::string_view text) {
  std::map<std::string, std::vector<std::string>> blocks;
  std::string current;
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    std::string const t = trim(line);
    if (current.empty()) {
      if (t.empty() || t[0] == '#') continue;
      if (t != "presentation P1" && t != "presentation P2" && t != "map12" && t != "map21")
        throw Error("certificate: unexpected line '" + t + "'");
      if (blocks.count(t)) throw Error("certificate: duplicate block '" + t + "'");
      current = t;
      blocks[current];
    } else if (t == "end") {
      current.clear();
    } else if (!t.empty()) {
      blocks[current].push_back(t);
    }
  }
  if (!current.empty()) throw Error("certificate: block '" + current + "' has no end");
  for (char const* b : {"presentation P1", "presentation P2", "map12", "map21"})
    if (!blocks.count(b)) throw Error(std::string("certificate: missing block '") + b + "'");
  auto join = [](std::vector<std::string> const& ls) {
    std::string s;
    for (auto const& l : ls) s += l + "\n";
    return s;
  };
  IsoCertificate c;
  c.p1 = parse_presentation(join(blocks["presentation P1"]));
  c.p2 = parse_presentation(join(blocks["presentation P2"]));
  c.map12 = parse_map(blocks["map12"], c.p1, c.p2, "map12");
  c.map21 = parse_map(blocks["map21"], c.p2, c.p1, "map21");
  return c;
}

std::string IsoReport::summary() const {
  std::ostringstream os;
  os << (valid ? "valid" : "invalid") << " [P1: " << engine1 << ", P2: " << engine2 << "]\n";
  for (auto const& c : checks) {
    os << "  " << c.name << ": " << c.proved << "/" << c.total << " proved";
    if (c.refuted) os << ", " << c.refuted << " refuted";
    if (c.undecided) os << ", " << c.undecided << " undecided";
    os << '\n';
    for (auto const& f : c.failures) os << "    " << f << '\n';
  }
  return os.str();
}

IsoReport verify_iso(IsoCertificate const& cert, Engine e1, Engine e2) {
  auto const& p1 = cert.p1;
  auto const& p2 = cert.p2;
  if (cert.map12.size() != p1.rank() || cert.map21.size() != p2.rank())
    throw Error("certificate maps must give one image per generator");
  if (!e1) e1 = make_engine(p1);
  if (!e2) e2 = make_engine(p2);

  IsoReport rep;
  rep.engine1 = e1->name();
  rep.engine2 = e2->name();
  auto record = [](IsoCheck& c, Verdict v, std::string const& what) {
    ++c.total;
    if (v == Verdict::Trivial) {
      ++c.proved;
      return;
    }
    (v == Verdict::NonTrivial ? c.refuted : c.undecided) += 1;
    if (c.failures.size() < 5) c.failures.push_back(what + " (" + to_string(v) + ")");
  };

  IsoCheck a, b, c, d;
  a.name = "relators of P1 hold in P2";
  b.name = "relators of P2 hold in P1";
  c.name = "map21 o map12 fixes P1";
  d.name = "map12 o map21 fixes P2";
  for (auto const& r : p1.relators()) {
    Word img = apply_map(p1, cert.map12, r.word, p2.strands());
    record(a, e2->decide(img), p1.format(r.word) + " -> " + p2.format(img));
  }
  for (auto const& r : p2.relators()) {
    Word img = apply_map(p2, cert.map21, r.word, p1.strands());
    record(b, e1->decide(img), p2.format(r.word) + " -> " + p1.format(img));
  }
  for (std::size_t i = 0; i < p1.rank(); ++i) {
    Word g = Word::single(p1.strands(), p1.generators()[i]);
    Word back = apply_map(p2, cert.map21, cert.map12[i], p1.strands());
    record(c, e1->decide(concat(back, invert(g))), p1.names()[i] + " -> " + p1.format(back));
  }
  for (std::size_t i = 0; i < p2.rank(); ++i) {
    Word g = Word::single(p2.strands(), p2.generators()[i]);
    Word back = apply_map(p1, cert.map12, cert.map21[i], p2.strands());
    record(d, e2->decide(concat(back, invert(g))), p2.names()[i] + " -> " + p2.format(back));
  }
  rep.checks = {a, b, c, d};
  rep.valid = std::all_of(rep.checks.begin(), rep.checks.end(), [](IsoCheck const& x) { return x.passed(); });
  return rep;
}

}  // namespace vsg
