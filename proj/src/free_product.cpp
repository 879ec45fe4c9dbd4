#include "vsg/free_product.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace vsg {

Factor Factor::abelian(int rank, std::vector<long long> torsion) {
  if (rank < 0) throw Error("negative rank");
  for (auto d : torsion)
    if (d < 2) throw Error("torsion order must be >= 2");
  return {Kind::Abelian, rank, std::move(torsion)};
}

Factor Factor::free(int rank) {
  if (rank < 1) throw Error("free factor rank must be >= 1");
  return {Kind::Free, rank, {}};
}

int Factor::generator_count() const noexcept {
  return free_rank + (kind == Kind::Abelian ? static_cast<int>(torsion.size()) : 0);
}

namespace {

int parse_positive(std::string_view s, std::string_view whole) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size() || v < 1) {
    throw Error("malformed factor spec '" + std::string(whole) + "'");
  }
  return v;
}

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

}  // namespace

FactorSpec parse_factor_spec(std::string_view text) {
  FactorSpec spec;
  std::string const all = strip(text);
  if (all.empty()) throw Error("empty factor spec");
  std::size_t pos = 0;
  while (pos <= all.size()) {
    auto star = all.find('*', pos);
    std::string_view tok = std::string_view(all).substr(
        pos, star == std::string::npos ? std::string::npos : star - pos);
    if (tok.starts_with("Z_")) {
      int d = parse_positive(tok.substr(2), text);
      spec.factors.push_back(Factor::abelian(0, {d}));
    } else if (tok.starts_with("Z^")) {
      spec.factors.push_back(Factor::abelian(parse_positive(tok.substr(2), text)));
    } else if (tok == "Z") {
      spec.factors.push_back(Factor::abelian(1));
    } else if (tok.starts_with("F")) {
      spec.factors.push_back(Factor::free(parse_positive(tok.substr(1), text)));
    } else {
      throw Error("malformed factor spec '" + std::string(text) + "'");
    }
    if (star == std::string::npos) break;
    pos = star + 1;
  }
  return spec;
}

std::string format_factor_spec(FactorSpec const& spec) {
  std::vector<std::string> parts;
  for (auto const& f : spec.factors) {
    if (f.kind == Factor::Kind::Free) {
      parts.push_back("F" + std::to_string(f.free_rank));
      continue;
    }
    std::vector<std::string> sub;
    if (f.free_rank == 1) sub.push_back("Z");
    else if (f.free_rank > 1) sub.push_back("Z^" + std::to_string(f.free_rank));
    for (auto d : f.torsion) sub.push_back("Z_" + std::to_string(d));
    if (sub.empty()) sub.push_back("1");
    std::string joined;
    for (std::size_t i = 0; i < sub.size(); ++i) joined += (i ? "+" : "") + sub[i];
    parts.push_back(sub.size() > 1 ? "(" + joined + ")" : joined);
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " * " : "") + parts[i];
  return out;
}

FreeProductGroup::FreeProductGroup(FactorSpec spec) : spec_(std::move(spec)) {
  if (spec_.factors.empty()) throw Error("free product needs at least one factor");
}

FactorElement FreeProductGroup::factor_identity(int f) const {
  auto const& fac = spec_.factors.at(static_cast<std::size_t>(f));
  if (fac.kind == Factor::Kind::Free) return Word(0);
  return std::vector<long long>(static_cast<std::size_t>(fac.generator_count()), 0);
}

FactorElement FreeProductGroup::factor_mul(int f, FactorElement const& a,
                                           FactorElement const& b) const {
  auto const& fac = spec_.factors[static_cast<std::size_t>(f)];
  if (fac.kind == Factor::Kind::Free) {
    return concat(std::get<Word>(a), std::get<Word>(b));
  }
  auto const& x = std::get<std::vector<long long>>(a);
  auto const& y = std::get<std::vector<long long>>(b);
  std::vector<long long> z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    z[i] = x[i] + y[i];
    if (i >= static_cast<std::size_t>(fac.free_rank)) {
      long long const d = fac.torsion[i - static_cast<std::size_t>(fac.free_rank)];
      z[i] = ((z[i] % d) + d) % d;
    }
  }
  return z;
}

FactorElement FreeProductGroup::factor_inv(int f, FactorElement const& a) const {
  auto const& fac = spec_.factors[static_cast<std::size_t>(f)];
  if (fac.kind == Factor::Kind::Free) return vsg::invert(std::get<Word>(a));
  auto z = std::get<std::vector<long long>>(a);
  for (std::size_t i = 0; i < z.size(); ++i) {
    z[i] = -z[i];
    if (i >= static_cast<std::size_t>(fac.free_rank)) {
      long long const d = fac.torsion[i - static_cast<std::size_t>(fac.free_rank)];
      z[i] = ((z[i] % d) + d) % d;
    }
  }
  return z;
}

bool FreeProductGroup::factor_trivial(int f, FactorElement const& a) const {
  if (spec_.factors[static_cast<std::size_t>(f)].kind == Factor::Kind::Free)
    return std::get<Word>(a).empty();
  auto const& z = std::get<std::vector<long long>>(a);
  return std::all_of(z.begin(), z.end(), [](long long c) { return c == 0; });
}

FreeProductElement FreeProductGroup::multiply(Element const& a, Element const& b) const {
  Element out = a;
  for (auto const& s : b.syllables) {
    if (!out.syllables.empty() && out.syllables.back().factor == s.factor) {
      auto merged = factor_mul(s.factor, out.syllables.back().value, s.value);
      out.syllables.pop_back();
      if (!factor_trivial(s.factor, merged)) out.syllables.push_back({s.factor, merged});
    } else {
      out.syllables.push_back(s);
    }
  }
  return out;
}

FreeProductElement FreeProductGroup::invert(Element const& a) const {
  Element out;
  for (auto it = a.syllables.rbegin(); it != a.syllables.rend(); ++it)
    out.syllables.push_back({it->factor, factor_inv(it->factor, it->value)});
  return out;
}

FreeProductElement FreeProductGroup::from_factor(int factor, FactorElement value) const {
  if (factor < 0 || factor >= static_cast<int>(spec_.factors.size()))
    throw Error("factor index out of range");
  // Normalise torsion coordinates via multiplication by the identity.
  value = factor_mul(factor, factor_identity(factor), value);
  Element e;
  if (!factor_trivial(factor, value)) e.syllables.push_back({factor, std::move(value)});
  return e;
}

FreeProductElement FreeProductGroup::factor_generator(int factor, int j, int exp) const {
  auto const& fac = spec_.factors.at(static_cast<std::size_t>(factor));
  if (j < 0 || j >= fac.generator_count()) throw Error("factor generator out of range");
  if (fac.kind == Factor::Kind::Free) return from_factor(factor, Word::single(0, abstract_gen(j), exp));
  std::vector<long long> v(static_cast<std::size_t>(fac.generator_count()), 0);
  v[static_cast<std::size_t>(j)] = exp;
  return from_factor(factor, v);
}

std::vector<FreeProductElement> FreeProductGroup::all_factor_generators() const {
  std::vector<Element> out;
  for (int f = 0; f < static_cast<int>(spec_.factors.size()); ++f)
    for (int j = 0; j < spec_.factors[static_cast<std::size_t>(f)].generator_count(); ++j)
      out.push_back(factor_generator(f, j));
  return out;
}

FactorElement FreeProductGroup::random_factor_element(std::mt19937_64& rng, int f) const {
  auto const& fac = spec_.factors[static_cast<std::size_t>(f)];
  for (;;) {
    FactorElement v;
    if (fac.kind == Factor::Kind::Free) {
      std::uniform_int_distribution<int> len(1, 4), gen(0, fac.free_rank - 1), sgn(0, 1);
      std::vector<Letter> l;
      int const k = len(rng);
      for (int i = 0; i < k; ++i) l.push_back({abstract_gen(gen(rng)), sgn(rng) ? 1 : -1});
      v = Word(0, l);
    } else {
      std::vector<long long> c(static_cast<std::size_t>(fac.generator_count()));
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < static_cast<std::size_t>(fac.free_rank)) {
          c[i] = std::uniform_int_distribution<long long>(-3, 3)(rng);
        } else {
          long long const d = fac.torsion[i - static_cast<std::size_t>(fac.free_rank)];
          c[i] = std::uniform_int_distribution<long long>(0, d - 1)(rng);
        }
      }
      v = c;
    }
    if (!factor_trivial(f, v)) return v;
  }
}

FreeProductElement FreeProductGroup::random_impl(std::mt19937_64& rng, int syllables) const {
  int const nf = static_cast<int>(spec_.factors.size());
  Element e;
  int prev = -1;
  for (int s = 0; s < syllables; ++s) {
    int f;
    if (nf == 1) {
      if (prev == 0) break;
      f = 0;
    } else {
      do {
        f = std::uniform_int_distribution<int>(0, nf - 1)(rng);
      } while (f == prev);
    }
    e.syllables.push_back({f, random_factor_element(rng, f)});
    prev = f;
  }
  return e;
}

std::string FreeProductGroup::format(Element const& a) const {
  if (a.syllables.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < a.syllables.size(); ++i) {
    auto const& s = a.syllables[i];
    if (i) os << " * ";
    os << 'f' << s.factor;
    if (auto const* w = std::get_if<Word>(&s.value)) {
      os << '[';
      bool first = true;
      for (Letter l : w->letters()) {
        os << (first ? "" : " ") << 'x' << (l.gen.index + 1);
        if (l.exp != 1) os << '^' << l.exp;
        first = false;
      }
      os << ']';
    } else {
      auto const& c = std::get<std::vector<long long>>(s.value);
      os << '(';
      for (std::size_t j = 0; j < c.size(); ++j) os << (j ? "," : "") << c[j];
      os << ')';
    }
  }
  return os.str();
}

FreeProductElement fp_normalize(Word const& w, FreeProductGroup const& group,
                                std::vector<FactorAssignment> const& assignment) {
  FreeProductElement acc;
  for (Letter l : w.letters()) {
    auto it = std::find_if(assignment.begin(), assignment.end(),
                           [&](FactorAssignment const& a) { return a.gen == l.gen; });
    if (it == assignment.end()) throw Error("unassigned generator " + default_name(l.gen));
    FreeProductElement g = group.from_factor(it->factor, it->value);
    if (l.exp < 0) g = group.invert(g);
    for (int e = 0; e < std::abs(l.exp); ++e) acc = group.multiply(acc, g);
  }
  return acc;
}

FreeProductGroup vsg2_free_product() {
  return FreeProductGroup(FactorSpec{{Factor::abelian(2), Factor::abelian(0, {2})}});
}

std::vector<FactorAssignment> vsg2_assignment() {
  return {
      {sigma(1), 0, std::vector<long long>{1, 0}},
      {tau(1), 0, std::vector<long long>{0, 1}},
      {virt(1), 1, std::vector<long long>{1}},
  };
}

FreeProductElement vsg2_normal_form(Word const& w) {
  static FreeProductGroup const group = vsg2_free_product();
  static auto const assign = vsg2_assignment();
  return fp_normalize(w, group, assign);
}

Word vsg2_normal_word(Word const& w) {
  std::vector<Letter> out;
  for (auto const& s : vsg2_normal_form(w).syllables) {
    auto const& c = std::get<std::vector<long long>>(s.value);
    if (s.factor == 0) {
      if (c[0] != 0) out.push_back({sigma(1), static_cast<int>(c[0])});
      if (c[1] != 0) out.push_back({tau(1), static_cast<int>(c[1])});
    } else {
      out.push_back({virt(1), 1});
    }
  }
  return Word(2, out);
}

}  // namespace vsg
