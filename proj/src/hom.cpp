#include "vsg/hom.hpp"

#include <sstream>

namespace vsg {

Triple Triple::parse(std::string_view digits) {
  if (digits.size() != 3) throw Error("triple must be three binary digits, got '" + std::string(digits) + "'");
  int v[3];
  for (int k = 0; k < 3; ++k) {
    if (digits[static_cast<std::size_t>(k)] != '0' && digits[static_cast<std::size_t>(k)] != '1')
      throw Error("invalid triple '" + std::string(digits) + "'");
    v[k] = digits[static_cast<std::size_t>(k)] - '0';
  }
  return {v[0], v[1], v[2]};
}

std::string Triple::str() const {
  return std::to_string(classical) + std::to_string(singular) + std::to_string(virtual_);
}

std::vector<Triple> all_triples() {
  std::vector<Triple> out;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) out.push_back({a, b, c});
  return out;
}

std::string format_triples(std::vector<Triple> const& ts) {
  std::string out;
  for (std::size_t i = 0; i < ts.size(); ++i) out += (i ? "," : "") + ts[i].str();
  return out;
}

GeneratorMap<SymmetricGroup> phi_triple(Presentation p, Triple t) {
  for (int e : {t.classical, t.singular, t.virtual_})
    if (e != 0 && e != 1) throw Error("triple entries must be 0 or 1");
  int const n = p.strands();
  if (n < 2) throw Error("phi maps need a braid presentation");
  return GeneratorMap<SymmetricGroup>::build(std::move(p), SymmetricGroup(n), [&](Generator g) {
    int e = 0;
    switch (g.family) {
      case Family::Classical: e = t.classical; break;
      case Family::Singular: e = t.singular; break;
      case Family::Virtual: e = t.virtual_; break;
      case Family::Abstract: throw Error("phi map on abstract generator");
    }
    return e ? Permutation::transposition(n, g.index, g.index + 1) : Permutation(n);
  });
}

GeneratorMap<SymmetricGroup> phi_triple(GroupFamily family, int n, Triple t) {
  return phi_triple(build_presentation(family, n), t);
}

std::vector<Triple> passing_triples(Presentation const& p) {
  std::vector<Triple> out;
  for (Triple t : all_triples())
    if (verify_homomorphism(phi_triple(p, t)).is_homomorphism) out.push_back(t);
  return out;
}

std::vector<Triple> classify_triples(GroupFamily family, int n) {
  if (n < 3) throw Error("triple classification needs n >= 3");
  return passing_triples(build_presentation(family, n));
}

GeneratorMap<ZxSnGroup> psi_map(Presentation p) {
  int const n = p.strands();
  return GeneratorMap<ZxSnGroup>::build(std::move(p), ZxSnGroup(n), [&](Generator g) {
    switch (g.family) {
      case Family::Classical: return ZxSnElement{0, Permutation(n)};
      case Family::Singular: return ZxSnElement{1, Permutation(n)};
      case Family::Virtual:
        return ZxSnElement{0, Permutation::transposition(n, g.index, g.index + 1)};
      case Family::Abstract: break;
    }
    throw Error("psi on abstract generator");
  });
}

ExponentData exponent_sums(Word const& w) {
  ExponentData e;
  long long v = 0;
  for (Letter l : w.letters()) {
    switch (l.gen.family) {
      case Family::Classical: e.exp_c += l.exp; break;
      case Family::Singular: e.exp_s += l.exp; break;
      case Family::Virtual: v += l.exp; break;
      case Family::Abstract: throw Error("exponent sums need braid letters");
    }
  }
  e.exp_cs = e.exp_c + e.exp_s;
  e.parity = static_cast<int>(((v % 2) + 2) % 2);
  return e;
}

std::string format_exponents(ExponentData const& e) {
  std::ostringstream os;
  os << "expC=" << e.exp_c << " expS=" << e.exp_s << " expCS=" << e.exp_cs
     << " parity=" << e.parity;
  return os.str();
}

GeneratorMap<AbelianGroup> exponent_map(Presentation p, ExponentKind kind) {
  AbelianGroup z(std::vector<long long>{0});
  return GeneratorMap<AbelianGroup>::build(std::move(p), z, [&](Generator g) {
    bool on = false;
    switch (kind) {
      case ExponentKind::Classical: on = g.family == Family::Classical; break;
      case ExponentKind::Singular: on = g.family == Family::Singular; break;
      case ExponentKind::ClassicalSingular:
        on = g.family == Family::Classical || g.family == Family::Singular;
        break;
    }
    return z.unit(0, on ? 1 : 0);
  });
}

}  // namespace vsg
