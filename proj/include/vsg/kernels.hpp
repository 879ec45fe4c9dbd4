#pragma once

// The reference n = 2 kernel presentations as fixtures, and identification
// of a pipeline output with a fixture as a two-way certificate.

#include <optional>
#include <string>
#include <vector>

#include "vsg/hom.hpp"
#include "vsg/iso.hpp"
#include "vsg/schreier.hpp"

namespace vsg {

struct KernelFixture {
  Triple triple;
  Presentation presentation;  // over named generators, strands 2
  std::vector<Word> words;    // each generator as a VSG_2 word
  std::string note;
};

// Reference presentation, with generators
//   a12 = s1 v1, b12 = t1 v1, c12 = v1 s1, d12 = v1 t1, e12 = s1 t1,
//   A12 = s1^2, a = s1 v1 s1^-1, b = t1 v1 t1^-1, c = v1 s1 v1^-1,
//   d = v1 t1 v1^-1, T = t1^2.
KernelFixture reference_kernel(Triple t);
// Same, except that (1,1,0) also carries the relator [A12, e12], which holds
// in VSG_2 because s1 and t1 commute.
KernelFixture derived_kernel(Triple t);

// P1 = pipeline presentation, P2 = fixture. map21 rewrites each fixture
// word through the pipeline; map12 is the first word over the fixture
// generators (shortlex, length <= max_length) with the same VSG_2 normal
// form as the pipeline generator. nullopt if some generator has no match.
std::optional<IsoCertificate> identify_kernel(KernelPipeline const& k, KernelFixture const& f,
                                              std::size_t max_length = 5);

}  // namespace vsg
