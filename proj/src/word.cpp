#include "vsg/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

namespace vsg {

std::string default_name(Generator g) {
  switch (g.family) {
    case Family::Classical:
      return "s" + std::to_string(g.index);
    case Family::Singular:
      return "t" + std::to_string(g.index);
    case Family::Virtual:
      return "v" + std::to_string(g.index);
    case Family::Abstract:
      break;
  }
  return "x" + std::to_string(g.index);
}

std::vector<Letter> free_reduce(std::span<Letter const> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (Letter l : letters) {
    if (l.exp == 0) continue;
    if (!out.empty() && out.back().gen == l.gen) {
      out.back().exp += l.exp;
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word::Word(int strands, std::vector<Letter> const& letters)
    : strands_(strands), letters_(vsg::free_reduce(letters)) {
  if (strands_ > 0) {
    for (Letter l : letters_) {
      if (is_braid(l.gen) && (l.gen.index < 1 || l.gen.index >= strands_)) {
        throw Error("letter " + default_name(l.gen) + " out of range for " +
                    std::to_string(strands_) + " strands");
      }
    }
  }
}

Word Word::single(int strands, Generator g, int exp) {
  return Word(strands, {Letter{g, exp}});
}

std::size_t Word::length() const noexcept {
  std::size_t n = 0;
  for (Letter l : letters_) n += static_cast<std::size_t>(std::abs(l.exp));
  return n;
}

std::vector<Letter> Word::expand() const {
  std::vector<Letter> out;
  out.reserve(length());
  for (Letter l : letters_) {
    int const s = l.exp > 0 ? 1 : -1;
    for (int k = 0; k < std::abs(l.exp); ++k) out.push_back({l.gen, s});
  }
  return out;
}

Word free_reduce(Word const& w) { return w; }

Word concat(Word const& a, Word const& b) {
  if (a.strands() != b.strands()) {
    throw Error("strand-count mismatch in concat");
  }
  std::vector<Letter> all(a.letters().begin(), a.letters().end());
  all.insert(all.end(), b.letters().begin(), b.letters().end());
  return Word(a.strands(), all);
}

Word invert(Word const& a) {
  std::vector<Letter> out(a.letters().rbegin(), a.letters().rend());
  for (Letter& l : out) l.exp = -l.exp;
  return Word(a.strands(), out);
}

Word power(Word const& a, int k) {
  Word base = k < 0 ? invert(a) : a;
  Word out(a.strands());
  for (int i = 0; i < std::abs(k); ++i) out = concat(out, base);
  return out;
}

Word cyclic_reduce(Word const& a) {
  std::vector<Letter> l(a.letters().begin(), a.letters().end());
  std::size_t lo = 0, hi = l.size();
  while (hi - lo >= 2 && l[lo].gen == l[hi - 1].gen) {
    int const e = l[lo].exp + l[hi - 1].exp;
    if (e == 0) {
      ++lo;
      --hi;
    } else {
      l[lo].exp = e;
      --hi;
      break;
    }
  }
  return Word(a.strands(),
              std::vector<Letter>(l.begin() + static_cast<std::ptrdiff_t>(lo),
                                  l.begin() + static_cast<std::ptrdiff_t>(hi)));
}

Word rotate(Word const& a, std::size_t k) {
  auto u = a.expand();
  if (u.empty()) return a;
  k %= u.size();
  std::rotate(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(k), u.end());
  return Word(a.strands(), u);
}

std::vector<Letter> cyclic_canonical(Word const& w) {
  Word c = cyclic_reduce(w);
  std::vector<Letter> best;
  bool have = false;
  auto consider = [&](Word const& x) {
    auto u = x.expand();
    for (std::size_t k = 0; k < std::max<std::size_t>(u.size(), 1); ++k) {
      std::vector<Letter> r(u);
      if (!r.empty())
        std::rotate(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(k),
                    r.end());
      auto less = [](Letter x, Letter y) {
        if (x.gen != y.gen) return x.gen < y.gen;
        return x.exp < y.exp;
      };
      if (!have || std::lexicographical_compare(r.begin(), r.end(),
                                                best.begin(), best.end(),
                                                less)) {
        best = r;
        have = true;
      }
    }
  };
  consider(c);
  consider(invert(c));
  return best;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    std::size_t j = i;
    while (j < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[j])))
      ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
}

// Splits "name^exp" into its two parts; exp defaults to 1.
void split_token(std::string_view tok, std::string_view& name, int& exp) {
  auto caret = tok.find('^');
  name = tok.substr(0, caret);
  exp = 1;
  if (caret != std::string_view::npos) {
    std::string_view e = tok.substr(caret + 1);
    std::string_view digits = e.starts_with('-') ? e.substr(1) : e;
    if (!all_digits(digits) || !parse_int(e, exp)) {
      throw Error("malformed exponent in token '" + std::string(tok) + "'");
    }
    if (exp == 0) throw Error("zero exponent in token '" + std::string(tok) + "'");
  }
  if (name.empty()) throw Error("malformed token '" + std::string(tok) + "'");
}

std::string exp_suffix(int e) {
  return e == 1 ? std::string() : "^" + std::to_string(e);
}

}  // namespace

bool parse_braid_symbol(std::string_view name, Generator& g) {
  if (name.size() < 2) return false;
  Family f;
  switch (name[0]) {
    case 's':
      f = Family::Classical;
      break;
    case 't':
      f = Family::Singular;
      break;
    case 'v':
      f = Family::Virtual;
      break;
    default:
      return false;
  }
  if (!all_digits(name.substr(1))) return false;
  int idx = 0;
  if (!parse_int(name.substr(1), idx)) return false;
  g = {f, idx};
  return true;
}

Word parse_word(std::string_view text, int strands) {
  auto toks = split_ws(text);
  if (toks.empty() || (toks.size() == 1 && toks[0] == "e")) return Word(strands);
  std::vector<Letter> letters;
  for (auto tok : toks) {
    std::string_view name;
    int exp;
    split_token(tok, name, exp);
    Generator g;
    if (!parse_braid_symbol(name, g)) {
      throw Error("malformed token '" + std::string(tok) + "'");
    }
    if (g.index < 1 || g.index > strands - 1) {
      throw Error("index out of range in token '" + std::string(tok) +
                  "' (strands=" + std::to_string(strands) + ")");
    }
    letters.push_back({g, exp});
  }
  return Word(strands, letters);
}

std::string format_word(Word const& w) {
  if (w.empty()) return "e";
  std::ostringstream os;
  bool first = true;
  for (Letter l : w.letters()) {
    if (!first) os << ' ';
    first = false;
    os << default_name(l.gen) << exp_suffix(l.exp);
  }
  return os.str();
}

Word parse_word(std::string_view text, std::span<std::string const> names,
                std::span<Generator const> gens, int strands) {
  auto toks = split_ws(text);
  if (toks.empty() || (toks.size() == 1 && toks[0] == "e")) return Word(strands);
  std::vector<Letter> letters;
  for (auto tok : toks) {
    std::string_view name;
    int exp;
    split_token(tok, name, exp);
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) {
      throw Error("unknown generator '" + std::string(name) + "'");
    }
    letters.push_back({gens[static_cast<std::size_t>(it - names.begin())], exp});
  }
  return Word(strands, letters);
}

std::string format_word(Word const& w, std::span<std::string const> names,
                        std::span<Generator const> gens) {
  if (w.empty()) return "e";
  std::ostringstream os;
  bool first = true;
  for (Letter l : w.letters()) {
    if (!first) os << ' ';
    first = false;
    auto it = std::find(gens.begin(), gens.end(), l.gen);
    if (it == gens.end()) {
      os << default_name(l.gen);
    } else {
      os << names[static_cast<std::size_t>(it - gens.begin())];
    }
    os << exp_suffix(l.exp);
  }
  return os.str();
}

}  // namespace vsg
