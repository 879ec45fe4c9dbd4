#include "vsg/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace vsg {

namespace {

void check_degree(int degree) {
  if (degree < 1 || degree > kMaxDegree) {
    throw Error("permutation degree " + std::to_string(degree) +
                " outside [1, " + std::to_string(kMaxDegree) + "]");
  }
}

void check_same(Permutation const& p, Permutation const& q) {
  if (p.degree() != q.degree()) {
    throw Error("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                std::to_string(q.degree()));
  }
}

}  // namespace

Permutation::Permutation(int degree) : degree_(degree) {
  check_degree(degree);
  for (int i = 0; i < degree; ++i) img_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
}

Permutation Permutation::from_images(std::vector<int> const& images) {
  Permutation p(static_cast<int>(images.size()));
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    int const x = images[i];
    if (x < 1 || x > static_cast<int>(images.size()) ||
        seen[static_cast<std::size_t>(x - 1)]) {
      throw Error("not a permutation: image " + std::to_string(x));
    }
    seen[static_cast<std::size_t>(x - 1)] = true;
    p.img_[i] = static_cast<std::uint8_t>(x - 1);
  }
  return p;
}

Permutation Permutation::transposition(int degree, int i, int j) {
  Permutation p(degree);
  if (i < 1 || j < 1 || i > degree || j > degree) {
    throw Error("transposition point out of range");
  }
  std::swap(p.img_[static_cast<std::size_t>(i - 1)], p.img_[static_cast<std::size_t>(j - 1)]);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (int i = 0; i < degree_; ++i)
    if (img_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

int Permutation::inversions() const noexcept {
  int n = 0;
  for (int i = 0; i < degree_; ++i)
    for (int j = i + 1; j < degree_; ++j)
      if (img_[static_cast<std::size_t>(i)] > img_[static_cast<std::size_t>(j)]) ++n;
  return n;
}

std::vector<int> Permutation::images() const {
  std::vector<int> out;
  for (int i = 0; i < degree_; ++i) out.push_back(img_[static_cast<std::size_t>(i)] + 1);
  return out;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> out;
  std::vector<bool> seen(static_cast<std::size_t>(degree_), false);
  for (int i = 0; i < degree_; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int x = i; !seen[static_cast<std::size_t>(x)]; x = img_[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = true;
      ++len;
    }
    if (len > 1) out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

Permutation compose(Permutation const& p, Permutation const& q) {
  check_same(p, q);
  std::vector<int> img;
  for (int x = 1; x <= p.degree(); ++x) img.push_back(q(p(x)));
  return Permutation::from_images(img);
}

Permutation inverse(Permutation const& p) {
  std::vector<int> img(static_cast<std::size_t>(p.degree()));
  for (int x = 1; x <= p.degree(); ++x) img[static_cast<std::size_t>(p(x) - 1)] = x;
  return Permutation::from_images(img);
}

Permutation conjugate(Permutation const& p, Permutation const& by) {
  return compose(compose(inverse(by), p), by);
}

std::string format_perm(Permutation const& p) {
  std::ostringstream os;
  os << '[';
  for (int x = 1; x <= p.degree(); ++x) os << (x > 1 ? "," : "") << p(x);
  os << ']';
  return os.str();
}

std::string format_cycles(Permutation const& p) {
  std::ostringstream os;
  std::vector<bool> seen(static_cast<std::size_t>(p.degree()) + 1, false);
  bool any = false;
  for (int i = 1; i <= p.degree(); ++i) {
    if (seen[static_cast<std::size_t>(i)] || p(i) == i) continue;
    any = true;
    os << '(';
    for (int x = i; !seen[static_cast<std::size_t>(x)]; x = p(x)) {
      seen[static_cast<std::size_t>(x)] = true;
      os << (x == i ? "" : " ") << x;
    }
    os << ')';
  }
  return any ? os.str() : "()";
}

Permutation parse_perm(std::string_view text, int degree) {
  check_degree(degree);
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) || (!s.empty() && s.back() != ' '))
      s.push_back(std::isspace(static_cast<unsigned char>(c)) ? ' ' : c);
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw Error("empty permutation");

  auto read_ints = [](std::string_view body, char sep) {
    std::vector<int> out;
    std::string tok;
    auto flush = [&] {
      if (tok.empty()) return;
      int v = 0;
      for (char c : tok) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw Error("malformed permutation entry '" + tok + "'");
        v = v * 10 + (c - '0');
        if (v > 1000) throw Error("permutation entry too large");
      }
      out.push_back(v);
      tok.clear();
    };
    for (char c : body) {
      if (c == sep || c == ' ') flush();
      else tok.push_back(c);
    }
    flush();
    return out;
  };

  if (s.front() == '[') {
    if (s.back() != ']') throw Error("unterminated one-line permutation");
    auto img = read_ints(std::string_view(s).substr(1, s.size() - 2), ',');
    if (static_cast<int>(img.size()) != degree) {
      throw Error("one-line permutation has " + std::to_string(img.size()) +
                  " entries, expected " + std::to_string(degree));
    }
    return Permutation::from_images(img);
  }

  Permutation result(degree);
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ' ') {
      ++i;
      continue;
    }
    if (s[i] != '(') throw Error("malformed cycle notation '" + s + "'");
    auto close = s.find(')', i);
    if (close == std::string::npos) throw Error("unterminated cycle");
    auto pts = read_ints(std::string_view(s).substr(i + 1, close - i - 1), ' ');
    std::vector<int> img(static_cast<std::size_t>(degree));
    std::iota(img.begin(), img.end(), 1);
    std::vector<bool> used(static_cast<std::size_t>(degree) + 1, false);
    for (std::size_t k = 0; k < pts.size(); ++k) {
      int const a = pts[k];
      if (a < 1 || a > degree || used[static_cast<std::size_t>(a)])
        throw Error("bad cycle point " + std::to_string(a));
      used[static_cast<std::size_t>(a)] = true;
      img[static_cast<std::size_t>(a - 1)] = pts[(k + 1) % pts.size()];
    }
    // Cycles are composed left to right like every other product.
    result = compose(result, Permutation::from_images(img));
    i = close + 1;
  }
  return result;
}

std::vector<Permutation> all_permutations(int degree) {
  check_degree(degree);
  if (degree > 8) throw Error("refusing to enumerate S" + std::to_string(degree));
  std::vector<int> a(static_cast<std::size_t>(degree));
  std::iota(a.begin(), a.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(a));
  } while (std::next_permutation(a.begin(), a.end()));
  return out;
}

Permutation perm_from_word(Word const& w, PermAssignment const& images) {
  Permutation acc(images.degree);
  for (Letter l : w.letters()) {
    std::vector<Permutation> const* table = nullptr;
    switch (l.gen.family) {
      case Family::Classical: table = &images.sigma; break;
      case Family::Singular: table = &images.tau; break;
      case Family::Virtual: table = &images.virt; break;
      case Family::Abstract: throw Error("abstract letter in braid word");
    }
    auto const k = static_cast<std::size_t>(l.gen.index - 1);
    if (l.gen.index < 1 || k >= table->size()) {
      throw Error("no image for " + default_name(l.gen));
    }
    Permutation g = l.exp > 0 ? (*table)[k] : inverse((*table)[k]);
    for (int e = 0; e < std::abs(l.exp); ++e) acc = compose(acc, g);
  }
  return acc;
}

SymmetricGroup::SymmetricGroup(int degree) : degree_(degree) { check_degree(degree); }

ZxSnGroup::ZxSnGroup(int degree) : degree_(degree) { check_degree(degree); }

std::string ZxSnGroup::format(Element const& a) const {
  return "(" + std::to_string(a.shift) + "," + format_cycles(a.perm) + ")";
}

AbelianGroup::AbelianGroup(std::vector<long long> moduli) : moduli_(std::move(moduli)) {
  for (auto m : moduli_)
    if (m < 0 || m == 1) throw Error("abelian modulus must be 0 or >= 2");
}

AbelianGroup::Element AbelianGroup::normalize(Element a) const {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (moduli_[i] > 0) a[i] = ((a[i] % moduli_[i]) + moduli_[i]) % moduli_[i];
  }
  return a;
}

AbelianGroup::Element AbelianGroup::unit(std::size_t i, long long k) const {
  Element e = identity();
  e.at(i) = k;
  return normalize(std::move(e));
}

AbelianGroup::Element AbelianGroup::multiply(Element const& a, Element const& b) const {
  Element c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return normalize(std::move(c));
}

AbelianGroup::Element AbelianGroup::invert(Element const& a) const {
  Element c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
  return normalize(std::move(c));
}

std::string AbelianGroup::format(Element const& a) const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ')';
  return os.str();
}

std::string AbelianGroup::name() const {
  std::string s;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i) s += "x";
    s += moduli_[i] == 0 ? "Z" : "Z_" + std::to_string(moduli_[i]);
  }
  return s.empty() ? "1" : s;
}

FiniteGroup::FiniteGroup(int degree, std::vector<Permutation> const& generators,
                         std::string name)
    : degree_(degree), name_(std::move(name)) {
  check_degree(degree);
  std::map<Permutation, int> seen;
  std::vector<Permutation> queue{Permutation(degree)};
  seen.emplace(queue.front(), 0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (auto const& g : generators) {
      if (g.degree() != degree) throw Error("generator degree mismatch");
      Permutation h = compose(queue[head], g);
      if (seen.emplace(h, 0).second) {
        queue.push_back(h);
        if (queue.size() > kMaxOrder) throw Error("finite group too large");
      }
    }
  }
  elements_.reserve(seen.size());
  int idx = 0;
  for (auto& [p, i] : seen) {
    i = idx++;
    elements_.push_back(p);
  }
  identity_ = seen.at(Permutation(degree));
  std::size_t const n = elements_.size();
  table_.resize(n * n);
  inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table_[a * n + b] = seen.at(compose(elements_[a], elements_[b]));
    }
    inverse_[a] = seen.at(inverse(elements_[a]));
  }
  if (name_.empty()) name_ = "G" + std::to_string(n);
}

FiniteGroup FiniteGroup::symmetric(int degree) {
  std::vector<Permutation> gens;
  for (int i = 1; i < degree; ++i) gens.push_back(Permutation::transposition(degree, i, i + 1));
  return FiniteGroup(degree, gens, "S" + std::to_string(degree));
}

int FiniteGroup::index_of(Permutation const& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return -1;
  return static_cast<int>(it - elements_.begin());
}

Permutation apply_on_transpositions(std::vector<Permutation> const& images,
                                    Permutation const& p) {
  if (images.empty()) throw Error("empty transposition image list");
  Permutation acc(images.front().degree());
  auto a = p.images();
  for (;;) {
    std::size_t i = 0;
    while (i + 1 < a.size() && a[i] < a[i + 1]) ++i;
    if (i + 1 >= a.size()) break;
    acc = compose(acc, images.at(i));
    std::swap(a[i], a[i + 1]);
  }
  return acc;
}

OuterS6 const& outer_automorphism_s6() {
  static OuterS6 const fixture = [] {
    constexpr int n = 6;
    std::vector<Permutation> candidates;
    for (auto const& p : all_permutations(n)) {
      if (p.cycle_type() == std::vector<int>{2, 2, 2}) candidates.push_back(p);
    }
    auto order_of = [](Permutation const& p) {
      int k = 1;
      for (Permutation q = p; !q.is_identity(); q = compose(q, p)) ++k;
      return k;
    };
    // Coxeter relations against every earlier image.
    auto fits = [&](std::vector<Permutation> const& chosen, Permutation const& c) {
      std::size_t const j = chosen.size();
      for (std::size_t i = 0; i < j; ++i) {
        int const want = (j == i + 1) ? 3 : 2;
        if (order_of(compose(chosen[i], c)) != want) return false;
      }
      return true;
    };
    std::vector<Permutation> chosen;
    auto search = [&](auto&& self) -> bool {
      if (chosen.size() == n - 1) {
        return FiniteGroup(n, chosen).order() == 720;
      }
      for (auto const& c : candidates) {
        if (!fits(chosen, c)) continue;
        chosen.push_back(c);
        if (self(self)) return true;
        chosen.pop_back();
      }
      return false;
    };
    if (!search(search)) throw Error("no outer automorphism of S6 found");

    OuterS6 out;
    out.images = chosen;
    out.generated_order = FiniteGroup(n, chosen).order();
    out.coxeter_relations = true;
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      if (order_of(chosen[i]) != 2) out.coxeter_relations = false;
      for (std::size_t j = i + 1; j < chosen.size(); ++j)
        if (order_of(compose(chosen[i], chosen[j])) != (j == i + 1 ? 3 : 2))
          out.coxeter_relations = false;
    }
    auto all = all_permutations(n);
    auto inner_by = [&](std::vector<Permutation> const& imgs) {
      for (auto const& g : all) {
        bool ok = true;
        for (int i = 1; i < n && ok; ++i)
          ok = conjugate(Permutation::transposition(n, i, i + 1), g) ==
               imgs[static_cast<std::size_t>(i - 1)];
        if (ok) return true;
      }
      return false;
    };
    out.non_inner = !inner_by(chosen);
    std::vector<Permutation> sq;
    for (auto const& c : chosen) sq.push_back(apply_on_transpositions(chosen, c));
    out.square_inner = inner_by(sq);
    return out;
  }();
  return fixture;
}

}  // namespace vsg
