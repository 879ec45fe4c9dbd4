#pragma once

// Semidirect decomposition over the v-section of S_n, purity tests, the
// welded and extended automorphism representations, and separation of the
// forbidden relations.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vsg/free_group.hpp"
#include "vsg/hom.hpp"

namespace vsg {

// v-word of length inv(p) with image p: bubble sort on the one-line array,
// always swapping the leftmost descent.
Word section(Permutation const& p);

struct Decomposition {
  Word pure;
  Permutation perm;
  Triple triple;
  Word section_word;
};

// The triples (1,1,1), (1,0,1), (0,0,1), for which phi is a split surjection.
bool is_semidirect_triple(Triple t);
Decomposition decompose(Word const& w, Triple t);
bool is_pure(Word const& w, Triple t, GroupFamily family = GroupFamily::VSG);

enum class Representation { Welded, Extended };
Representation parse_representation(std::string_view name);
std::string to_string(Representation r);

// Classical and virtual generators act as in the representation, singular
// generators act trivially (the map factors through tau -> 1). Welded acts on
// F_n = <x1..xn>; extended on F_{n+1} with the extra basis element y.
GeneratorMap<AutGroup> builtin_representation(Representation r, Presentation source);
// Source VB_n.
GeneratorMap<AutGroup> builtin_representation(Representation r, int n);

// Relations (1)-(4): (1) v_i s_{i+1} s_i = s_{i+1} s_i v_{i+1},
// (2) v_{i+1} s_i s_{i+1} = s_i s_{i+1} v_i, (3), (4) the same with t.
std::pair<Word, Word> forbidden_relation(int n, int relation, int i);

enum class Separator { ZxSn, AutRep, QuotientSearch, None };
std::string to_string(Separator s);

struct ForbiddenReport {
  int n = 0;
  int relation = 0;
  int index = 0;
  Separator separator = Separator::None;
  std::string detail;  // representation or quotient used
  std::string lhs_image;
  std::string rhs_image;
  bool separated = false;
};

ForbiddenReport forbidden_check(int n, int relation, int i);
std::vector<ForbiddenReport> forbidden_all(int n);
std::string format_forbidden_table(std::vector<ForbiddenReport> const& reports);

}  // namespace vsg
