#include "vsg/presentation.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <set>
#include <sstream>

namespace vsg {

namespace {

constexpr std::array<std::pair<GroupFamily, std::string_view>, 13> kFamilyNames{{
    {GroupFamily::B, "B"},
    {GroupFamily::VB, "VB"},
    {GroupFamily::SG, "SG"},
    {GroupFamily::VSG, "VSG"},
    {GroupFamily::WCSG, "WCSG"},
    {GroupFamily::WSG, "WSG"},
    {GroupFamily::UCVSG, "UCVSG"},
    {GroupFamily::UVSG, "UVSG"},
    {GroupFamily::FCVSG, "FCVSG"},
    {GroupFamily::FCWSG, "FCWSG"},
    {GroupFamily::FWSG, "FWSG"},
    {GroupFamily::GCVSG, "GCVSG"},
    {GroupFamily::Custom, "CUSTOM"},
}};

constexpr std::array<std::pair<RelTag, std::string_view>, 24> kTagNames{{
    {RelTag::TwoPoint, "2PR"},    {RelTag::ThreePoint1, "3PR1"},
    {RelTag::ThreePoint2, "3PR2"}, {RelTag::ThreePoint3, "3PR3"},
    {RelTag::ThreePoint4, "3PR4"}, {RelTag::ThreePoint5, "3PR5"},
    {RelTag::Commuting, "CR"},    {RelTag::AR1, "AR1"},
    {RelTag::AR2, "AR2"},         {RelTag::PR1, "PR1"},
    {RelTag::PR2, "PR2"},         {RelTag::PR3, "PR3"},
    {RelTag::MR1, "MR1"},         {RelTag::MR2, "MR2"},
    {RelTag::MR3, "MR3"},         {RelTag::MR4, "MR4"},
    {RelTag::SR1, "SR1"},         {RelTag::Q1, "Q1"},
    {RelTag::Q2, "Q2"},           {RelTag::Q3, "Q3"},
    {RelTag::Q4, "Q4"},           {RelTag::Q5, "Q5"},
    {RelTag::Q6, "Q6"},           {RelTag::Custom, "custom"},
}};

std::size_t choose2(int m) {
  return m < 2 ? 0 : static_cast<std::size_t>(m) * (m - 1) / 2;
}

bool has_tau(GroupFamily f) {
  return f != GroupFamily::B && f != GroupFamily::VB;
}
bool has_v(GroupFamily f) {
  return f != GroupFamily::B && f != GroupFamily::SG;
}

// Word builder over n strands: w(n, {sigma(1), virt(2)}) etc.
Word w(int n, std::initializer_list<Generator> gens) {
  std::vector<Letter> l;
  for (Generator g : gens) l.push_back({g, 1});
  return Word(n, l);
}

using Maker = Generator (*)(int);
constexpr Maker kMakers[3] = {&sigma, &tau, &virt};

void add_braid_relations(Presentation& p, int n) {
  for (int i = 1; i + 1 <= n - 1; ++i) {
    p.add_relation(w(n, {sigma(i), sigma(i + 1), sigma(i)}),
                   w(n, {sigma(i + 1), sigma(i), sigma(i + 1)}), RelTag::AR1);
  }
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      p.add_relation(w(n, {sigma(i), sigma(j)}), w(n, {sigma(j), sigma(i)}),
                     RelTag::AR2);
}

void add_vb_relations(Presentation& p, int n) {
  add_braid_relations(p, n);
  for (int i = 1; i + 1 <= n - 1; ++i)
    p.add_relation(w(n, {virt(i), virt(i + 1), virt(i)}),
                   w(n, {virt(i + 1), virt(i), virt(i + 1)}), RelTag::PR1);
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      p.add_relation(w(n, {virt(i), virt(j)}), w(n, {virt(j), virt(i)}),
                     RelTag::PR2);
  for (int i = 1; i <= n - 1; ++i)
    p.add_relation(w(n, {virt(i), virt(i)}), Word(n), RelTag::PR3);
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j)
      if (std::abs(i - j) >= 2)
        p.add_relation(w(n, {sigma(i), virt(j)}), w(n, {virt(j), sigma(i)}),
                       RelTag::MR1);
  for (int i = 1; i + 1 <= n - 1; ++i)
    p.add_relation(w(n, {virt(i), virt(i + 1), sigma(i)}),
                   w(n, {sigma(i + 1), virt(i), virt(i + 1)}), RelTag::MR2);
}

void add_sg_relations(Presentation& p, int n) {
  add_braid_relations(p, n);
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      p.add_relation(w(n, {tau(i), tau(j)}), w(n, {tau(j), tau(i)}),
                     RelTag::SR1);
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j)
      if (std::abs(i - j) >= 2)
        p.add_relation(w(n, {tau(i), sigma(j)}), w(n, {sigma(j), tau(i)}),
                       RelTag::MR1);
  for (int i = 1; i <= n - 1; ++i)
    p.add_relation(w(n, {tau(i), sigma(i)}), w(n, {sigma(i), tau(i)}),
                   RelTag::MR2);
  for (int i = 1; i + 1 <= n - 1; ++i)
    p.add_relation(w(n, {sigma(i), sigma(i + 1), tau(i)}),
                   w(n, {tau(i + 1), sigma(i), sigma(i + 1)}), RelTag::MR3);
  for (int i = 1; i + 1 <= n - 1; ++i)
    p.add_relation(w(n, {sigma(i + 1), sigma(i), tau(i + 1)}),
                   w(n, {tau(i), sigma(i + 1), sigma(i)}), RelTag::MR4);
}

void add_vsg_relations(Presentation& p, int n) {
  for (int i = 1; i <= n - 1; ++i)
    p.add_relation(w(n, {virt(i), virt(i)}), Word(n), RelTag::TwoPoint);
  for (int i = 1; i <= n - 1; ++i)
    p.add_relation(w(n, {sigma(i), tau(i)}), w(n, {tau(i), sigma(i)}),
                   RelTag::TwoPoint);
  for (int i = 1; i + 1 <= n - 1; ++i) {
    int const j = i + 1;
    p.add_relation(w(n, {sigma(i), sigma(j), sigma(i)}),
                   w(n, {sigma(j), sigma(i), sigma(j)}), RelTag::ThreePoint1);
    p.add_relation(w(n, {virt(i), virt(j), virt(i)}),
                   w(n, {virt(j), virt(i), virt(j)}), RelTag::ThreePoint2);
    p.add_relation(w(n, {virt(i), sigma(j), virt(i)}),
                   w(n, {virt(j), sigma(i), virt(j)}), RelTag::ThreePoint3);
    p.add_relation(w(n, {virt(i), tau(j), virt(i)}),
                   w(n, {virt(j), tau(i), virt(j)}), RelTag::ThreePoint4);
    // 3PR5 is not symmetric in (i, j): both adjacent orders are relations.
    p.add_relation(w(n, {sigma(i), sigma(j), tau(i)}),
                   w(n, {tau(j), sigma(i), sigma(j)}), RelTag::ThreePoint5);
    p.add_relation(w(n, {sigma(j), sigma(i), tau(j)}),
                   w(n, {tau(i), sigma(j), sigma(i)}), RelTag::ThreePoint5);
  }
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      for (Maker g : kMakers)
        for (Maker h : kMakers)
          p.add_relation(w(n, {g(i), h(j)}), w(n, {h(j), g(i)}),
                         RelTag::Commuting);
}

void add_quotient_relation(Presentation& p, int n, RelTag q) {
  for (int i = 1; i <= n - 1; ++i) {
    int const k = i + 1;
    bool const adjacent = k <= n - 1;
    switch (q) {
      case RelTag::Q1:
        if (adjacent)
          p.add_relation(w(n, {virt(i), sigma(k), sigma(i)}),
                         w(n, {sigma(k), sigma(i), virt(k)}), q);
        break;
      case RelTag::Q2:
        if (adjacent)
          p.add_relation(w(n, {virt(k), sigma(i), sigma(k)}),
                         w(n, {sigma(i), sigma(k), virt(i)}), q);
        break;
      case RelTag::Q3:
        if (adjacent)
          p.add_relation(w(n, {virt(i), tau(k), tau(i)}),
                         w(n, {tau(k), tau(i), virt(k)}), q);
        break;
      case RelTag::Q4:
        if (adjacent)
          p.add_relation(w(n, {virt(k), tau(i), tau(k)}),
                         w(n, {tau(i), tau(k), virt(i)}), q);
        break;
      case RelTag::Q5:
        p.add_relation(w(n, {sigma(i), sigma(i)}), Word(n), q);
        break;
      case RelTag::Q6:
        p.add_relation(w(n, {sigma(i), virt(i)}), w(n, {virt(i), sigma(i)}), q);
        break;
      default:
        throw Error("not a quotient relation tag");
    }
  }
}

std::vector<RelTag> quotient_tags(GroupFamily f) {
  using enum RelTag;
  switch (f) {
    case GroupFamily::WCSG:
      return {Q1};
    case GroupFamily::UCVSG:
      return {Q1, Q2};
    case GroupFamily::WSG:
      return {Q1, Q3};
    case GroupFamily::UVSG:
      return {Q1, Q3, Q2, Q4};
    case GroupFamily::FCVSG:
      return {Q5};
    case GroupFamily::FCWSG:
      return {Q1, Q5};
    case GroupFamily::FWSG:
      return {Q1, Q3, Q5};
    case GroupFamily::GCVSG:
      return {Q5, Q6};
    default:
      return {};
  }
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::string to_string(GroupFamily f) {
  for (auto [k, v] : kFamilyNames)
    if (k == f) return std::string(v);
  return "?";
}

GroupFamily parse_family(std::string_view s) {
  for (auto [k, v] : kFamilyNames)
    if (v == s) return k;
  throw Error("unknown group family '" + std::string(s) + "'");
}

std::string to_string(RelTag t) {
  for (auto [k, v] : kTagNames)
    if (k == t) return std::string(v);
  return "?";
}

RelTag parse_tag(std::string_view s) {
  for (auto [k, v] : kTagNames)
    if (v == s) return k;
  throw Error("unknown relation tag '" + std::string(s) + "'");
}

Presentation::Presentation(GroupFamily family, int strands,
                           std::vector<Generator> gens,
                           std::vector<std::string> names)
    : family_(family),
      strands_(strands),
      gens_(std::move(gens)),
      names_(std::move(names)) {
  if (gens_.size() != names_.size()) {
    throw Error("generator/name count mismatch");
  }
  for (std::size_t i = 0; i < gens_.size(); ++i) lookup_.emplace_back(gens_[i], i);
  std::sort(lookup_.begin(), lookup_.end());
  for (std::size_t i = 1; i < lookup_.size(); ++i) {
    if (lookup_[i].first == lookup_[i - 1].first) {
      throw Error("duplicate generator " + default_name(lookup_[i].first));
    }
  }
  std::set<std::string> seen;
  for (auto const& n : names_) {
    if (n.empty() || n == "e" || !seen.insert(n).second) {
      throw Error("invalid or duplicate generator name '" + n + "'");
    }
  }
}

std::optional<std::size_t> Presentation::index_of(Generator g) const {
  auto it = std::lower_bound(
      lookup_.begin(), lookup_.end(), g,
      [](auto const& p, Generator x) { return p.first < x; });
  if (it == lookup_.end() || it->first != g) return std::nullopt;
  return it->second;
}

std::size_t Presentation::require_index(Generator g) const {
  auto i = index_of(g);
  if (!i) throw Error("generator " + default_name(g) + " not in presentation");
  return *i;
}

std::string const& Presentation::name_of(Generator g) const {
  return names_[require_index(g)];
}

void Presentation::add_relation(Word const& lhs, Word const& rhs, RelTag tag) {
  Word r = cyclic_reduce(concat(lhs, invert(rhs)));
  if (r.empty()) return;
  for (Letter l : r.letters()) require_index(l.gen);
  rels_.push_back({std::move(r), lhs, rhs, tag});
}

void Presentation::add_relator(Word const& r, RelTag tag) {
  add_relation(r, Word(r.strands()), tag);
}

void Presentation::deduplicate() {
  std::set<std::vector<std::pair<Generator, int>>> seen;
  std::vector<Relator> kept;
  for (auto& r : rels_) {
    std::vector<std::pair<Generator, int>> key;
    for (Letter l : cyclic_canonical(r.word)) key.emplace_back(l.gen, l.exp);
    if (seen.insert(key).second) kept.push_back(std::move(r));
  }
  rels_ = std::move(kept);
}

std::vector<Generator> Presentation::involutions() const {
  std::vector<Generator> out;
  for (auto const& r : rels_) {
    if (r.word.syllables() == 1 && std::abs(r.word[0].exp) == 2) {
      if (std::find(out.begin(), out.end(), r.word[0].gen) == out.end())
        out.push_back(r.word[0].gen);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Word Presentation::parse(std::string_view text) const {
  return parse_word(text, names_, gens_, strands_);
}

std::string Presentation::format(Word const& w) const {
  return format_word(w, names_, gens_);
}

bool operator==(Presentation const& a, Presentation const& b) {
  if (a.family_ != b.family_ || a.strands_ != b.strands_ ||
      a.gens_ != b.gens_ || a.names_ != b.names_ ||
      a.rels_.size() != b.rels_.size())
    return false;
  for (std::size_t i = 0; i < a.rels_.size(); ++i) {
    if (a.rels_[i].word != b.rels_[i].word || a.rels_[i].tag != b.rels_[i].tag)
      return false;
  }
  return true;
}

Presentation build_presentation(GroupFamily family, int n) {
  if (n < 2) throw Error("strand count must be at least 2");
  if (family == GroupFamily::Custom) {
    throw Error("CUSTOM is not a registry family");
  }
  std::vector<Generator> gens;
  for (int i = 1; i <= n - 1; ++i) gens.push_back(sigma(i));
  if (has_tau(family))
    for (int i = 1; i <= n - 1; ++i) gens.push_back(tau(i));
  if (has_v(family))
    for (int i = 1; i <= n - 1; ++i) gens.push_back(virt(i));
  std::vector<std::string> names;
  for (Generator g : gens) names.push_back(default_name(g));
  Presentation p(family, n, gens, names);
  switch (family) {
    case GroupFamily::B:
      add_braid_relations(p, n);
      break;
    case GroupFamily::VB:
      add_vb_relations(p, n);
      break;
    case GroupFamily::SG:
      add_sg_relations(p, n);
      break;
    default:
      add_vsg_relations(p, n);
      for (RelTag q : quotient_tags(family)) add_quotient_relation(p, n, q);
      break;
  }
  p.deduplicate();
  p.label = to_string(family) + "_" + std::to_string(n);
  return p;
}

std::size_t relator_census(GroupFamily family, int n) {
  if (n < 2) throw Error("strand count must be at least 2");
  std::size_t const m1 = static_cast<std::size_t>(n - 1);
  std::size_t const m2 = static_cast<std::size_t>(n - 2);
  std::size_t const c = choose2(n - 2);
  switch (family) {
    case GroupFamily::B:
      return m2 + c;
    case GroupFamily::VB:
    case GroupFamily::SG:
      return 3 * m2 + 4 * c + m1;
    case GroupFamily::Custom:
      throw Error("CUSTOM has no census");
    default:
      break;
  }
  std::size_t total = 2 * m1 + 6 * m2 + 9 * c;
  for (RelTag q : quotient_tags(family)) {
    total += (q == RelTag::Q5 || q == RelTag::Q6) ? m1 : m2;
  }
  return total;
}

Presentation add_relators(Presentation const& p, std::span<Word const> extra,
                          std::string label) {
  Presentation q(GroupFamily::Custom, p.strands(),
                 std::vector<Generator>(p.generators().begin(),
                                        p.generators().end()),
                 std::vector<std::string>(p.names().begin(), p.names().end()));
  for (auto const& r : p.relators()) q.add_relation(r.lhs, r.rhs, r.tag);
  for (auto const& r : extra) q.add_relator(r, RelTag::Custom);
  q.label = std::move(label);
  q.comments = p.comments;
  return q;
}

Presentation custom_presentation(std::vector<std::string> names, int strands) {
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < names.size(); ++i) {
    Generator g;
    if (parse_braid_symbol(names[i], g)) {
      gens.push_back(g);
    } else {
      gens.push_back(abstract_gen(static_cast<int>(i)));
    }
  }
  return Presentation(GroupFamily::Custom, strands, std::move(gens),
                      std::move(names));
}

std::string format_presentation(Presentation const& p) {
  std::ostringstream os;
  for (auto const& c : p.comments) os << c << '\n';
  os << "group " << to_string(p.family()) << " n=" << p.strands() << '\n';
  if (p.family() == GroupFamily::Custom) {
    for (auto const& name : p.names()) os << "gen " << name << '\n';
  }
  for (auto const& r : p.relators()) {
    os << "rel " << p.format(r.word);
    if (r.tag != RelTag::Custom) os << " # " << to_string(r.tag);
    os << '\n';
  }
  return os.str();
}

Presentation parse_presentation(std::string_view text) {
  std::vector<std::string> comments;
  std::optional<GroupFamily> family;
  int n = 0;
  std::vector<std::string> gen_names;
  std::vector<std::pair<std::string, RelTag>> rels;

  std::size_t pos = 0;
  int lineno = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    std::string line = trim(raw);
    if (line.empty()) continue;
    if (line[0] == '#') {
      comments.emplace_back(raw);
      continue;
    }
    auto fail = [&](std::string const& why) {
      throw Error("presentation line " + std::to_string(lineno) + ": " + why);
    };
    if (line.starts_with("group ")) {
      std::istringstream is(line.substr(6));
      std::string fam, nfield;
      is >> fam >> nfield;
      if (!nfield.starts_with("n=")) fail("expected n=<int>");
      family = parse_family(fam);
      auto nstr = nfield.substr(2);
      auto [p, ec] = std::from_chars(nstr.data(), nstr.data() + nstr.size(), n);
      if (ec != std::errc() || p != nstr.data() + nstr.size()) fail("bad n");
    } else if (line.starts_with("gen ")) {
      gen_names.push_back(trim(line.substr(4)));
    } else if (line.starts_with("rel ")) {
      std::string body = line.substr(4);
      RelTag tag = RelTag::Custom;
      if (auto hash = body.find('#'); hash != std::string::npos) {
        tag = parse_tag(trim(body.substr(hash + 1)));
        body = trim(body.substr(0, hash));
      }
      rels.emplace_back(body, tag);
    } else {
      fail("unrecognised line '" + line + "'");
    }
  }
  if (!family) throw Error("presentation has no group line");

  Presentation p;
  if (*family == GroupFamily::Custom) {
    p = custom_presentation(gen_names, n);
  } else {
    if (!gen_names.empty()) throw Error("gen lines are only valid for CUSTOM");
    Presentation reg = build_presentation(*family, n);
    p = Presentation(*family, n,
                     std::vector<Generator>(reg.generators().begin(),
                                            reg.generators().end()),
                     std::vector<std::string>(reg.names().begin(),
                                              reg.names().end()));
  }
  for (auto const& [body, tag] : rels) p.add_relator(p.parse(body), tag);
  p.comments = std::move(comments);
  p.label = to_string(*family) + "_" + std::to_string(n);
  return p;
}

Word apply_relation(Word const& w, Relator const& r, std::size_t position,
                    Direction dir, std::size_t rotation) {
  auto units = w.expand();
  if (position > units.size()) {
    throw Error("insertion position " + std::to_string(position) +
                " beyond word length " + std::to_string(units.size()));
  }
  Word rel(w.strands(), std::vector<Letter>(r.word.letters().begin(),
                                            r.word.letters().end()));
  if (dir == Direction::Inverse) rel = invert(rel);
  auto ins = rotate(rel, rotation).expand();
  units.insert(units.begin() + static_cast<std::ptrdiff_t>(position),
               ins.begin(), ins.end());
  return Word(w.strands(), units);
}

}  // namespace vsg
