#include "vsg/structure.hpp"

#include <sstream>

#include "vsg/hom_count.hpp"

namespace vsg {

Word section(Permutation const& p) {
  auto arr = p.images();
  std::vector<Letter> out;
  while (true) {
    std::size_t i = 0;
    while (i + 1 < arr.size() && arr[i] < arr[i + 1]) ++i;
    if (i + 1 >= arr.size()) break;
    std::swap(arr[i], arr[i + 1]);
    out.push_back({virt(static_cast<int>(i) + 1), 1});
  }
  return Word(p.degree(), out);
}

bool is_semidirect_triple(Triple t) {
  return t == Triple{1, 1, 1} || t == Triple{1, 0, 1} || t == Triple{0, 0, 1};
}

Decomposition decompose(Word const& w, Triple t) {
  if (!is_semidirect_triple(t))
    throw Error("triple " + t.str() + " does not give a semidirect decomposition");
  int const n = w.strands();
  if (n < 2) throw Error("decompose needs a braid word with n >= 2");
  auto phi = phi_triple(GroupFamily::VSG, n, t);
  Decomposition d;
  d.triple = t;
  d.perm = phi.eval(w);
  d.section_word = section(d.perm);
  d.pure = concat(w, invert(d.section_word));
  return d;
}

bool is_pure(Word const& w, Triple t, GroupFamily family) {
  auto phi = phi_triple(family, w.strands(), t);
  if (!verify_homomorphism(phi).is_homomorphism)
    throw Error("phi_" + t.str() + " is not a homomorphism on " + to_string(family));
  return phi.eval(w).is_identity();
}

Representation parse_representation(std::string_view name) {
  if (name == "welded") return Representation::Welded;
  if (name == "extended") return Representation::Extended;
  throw Error("unknown representation '" + std::string(name) + "'");
}

std::string to_string(Representation r) {
  return r == Representation::Welded ? "welded" : "extended";
}

namespace {

Word x(int k, int exp = 1) { return basis_word(k, exp); }
Word cat(std::initializer_list<Word> ws) {
  Word out(0);
  for (auto const& w : ws) out = concat(out, w);
  return out;
}

FreeGroupAutomorphism sigma_aut(int rank, int i) {
  // x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i (0-based i)
  std::vector<Word> img, inv;
  for (int k = 0; k < rank; ++k) {
    img.push_back(x(k));
    inv.push_back(x(k));
  }
  img[i] = cat({x(i), x(i + 1), x(i, -1)});
  img[i + 1] = x(i);
  inv[i] = x(i + 1);
  inv[i + 1] = cat({x(i + 1, -1), x(i), x(i + 1)});
  return {img, inv};
}

FreeGroupAutomorphism virtual_aut(int rank, int i, bool extended) {
  std::vector<Word> img;
  for (int k = 0; k < rank; ++k) img.push_back(x(k));
  if (extended) {
    int const y = rank - 1;
    img[i] = cat({x(y), x(i + 1), x(y, -1)});
    img[i + 1] = cat({x(y, -1), x(i), x(y)});
  } else {
    std::swap(img[i], img[i + 1]);
  }
  return {img, img};  // involution
}

}  // namespace

GeneratorMap<AutGroup> builtin_representation(Representation r, Presentation source) {
  int const n = source.strands();
  if (n < 2) throw Error("representations need n >= 2");
  bool const ext = r == Representation::Extended;
  int const rank = ext ? n + 1 : n;
  std::vector<std::string> names;
  for (int k = 1; k <= n; ++k) names.push_back("x" + std::to_string(k));
  if (ext) names.push_back("y");
  AutGroup target(rank, names);
  return GeneratorMap<AutGroup>::build(std::move(source), target, [&](Generator g) {
    switch (g.family) {
      case Family::Classical: return sigma_aut(rank, g.index - 1);
      case Family::Virtual: return virtual_aut(rank, g.index - 1, ext);
      case Family::Singular: return FreeGroupAutomorphism(rank);
      case Family::Abstract: break;
    }
    throw Error("representation on abstract generator");
  });
}

GeneratorMap<AutGroup> builtin_representation(Representation r, int n) {
  return builtin_representation(r, build_presentation(GroupFamily::VB, n));
}

std::pair<Word, Word> forbidden_relation(int n, int relation, int i) {
  if (n < 3) throw Error("forbidden relations need n >= 3");
  if (i < 1 || i > n - 2) throw Error("index must lie in 1..n-2");
  auto g = (relation == 1 || relation == 2) ? sigma : tau;
  int const a = i, b = i + 1;
  switch (relation) {
    case 1:
    case 3:
      return {Word(n, {{virt(a), 1}, {g(b), 1}, {g(a), 1}}), Word(n, {{g(b), 1}, {g(a), 1}, {virt(b), 1}})};
    case 2:
    case 4:
      return {Word(n, {{virt(b), 1}, {g(a), 1}, {g(b), 1}}), Word(n, {{g(a), 1}, {g(b), 1}, {virt(a), 1}})};
    default:
      throw Error("relation id must be 1..4");
  }
}

std::string to_string(Separator s) {
  switch (s) {
    case Separator::ZxSn: return "ZxSn";
    case Separator::AutRep: return "AutRep";
    case Separator::QuotientSearch: return "QuotientSearch";
    case Separator::None: return "none";
  }
  return "none";
}

ForbiddenReport forbidden_check(int n, int relation, int i) {
  auto [lhs, rhs] = forbidden_relation(n, relation, i);
  ForbiddenReport rep{n, relation, i, Separator::None, {}, {}, {}, false};
  Presentation vsg = build_presentation(GroupFamily::VSG, n);

  if (relation >= 3) {
    auto psi = psi_map(vsg);
    if (verify_homomorphism(psi).is_homomorphism) {
      auto l = psi.eval(lhs), r = psi.eval(rhs);
      if (!(l == r)) {
        rep = {n, relation, i, Separator::ZxSn, "psi", psi.target().format(l), psi.target().format(r), true};
        return rep;
      }
    }
  } else {
    // the welded representation satisfies (1), so (1) needs the extended one
    Representation const kind = relation == 1 ? Representation::Extended : Representation::Welded;
    auto m = builtin_representation(kind, vsg);
    if (verify_homomorphism(m).is_homomorphism) {
      auto l = m.eval(lhs), r = m.eval(rhs);
      if (!(l == r)) {
        rep = {n, relation, i, Separator::AutRep, to_string(kind), m.target().format(l), m.target().format(r), true};
        return rep;
      }
    }
  }

  std::vector<FiniteGroup> targets;
  for (int m = 3; m <= 6; ++m) targets.push_back(FiniteGroup::symmetric(m));
  auto s = search_separating_quotient(vsg, lhs, rhs, targets);
  if (s.found) {
    rep = {n, relation, i, Separator::QuotientSearch, s.found->target, format_cycles(s.found->lhs),
           format_cycles(s.found->rhs), true};
  }
  return rep;
}

std::vector<ForbiddenReport> forbidden_all(int n) {
  std::vector<ForbiddenReport> out;
  for (int rel = 1; rel <= 4; ++rel)
    for (int i = 1; i <= n - 2; ++i) out.push_back(forbidden_check(n, rel, i));
  return out;
}

std::string format_forbidden_table(std::vector<ForbiddenReport> const& reports) {
  std::ostringstream os;
  os << "relation\tindex\tseparator\tlhs\trhs\n";
  for (auto const& r : reports) {
    os << r.relation << '\t' << r.index << '\t' << to_string(r.separator);
    if (!r.detail.empty()) os << '(' << r.detail << ')';
    os << '\t' << r.lhs_image << '\t' << r.rhs_image << '\n';
  }
  return os.str();
}

}  // namespace vsg
