#pragma once

#include <vector>

#include "boxspace/group.hpp"

namespace boxspace {

// The acting group is the integer line with one generator t, or the
// cyclic group of order m. Both act through a single automorphism.
struct ActingGroup {
  bool integer_line = true;
  int modulus = 0;

  static ActingGroup integers() { return {true, 0}; }
  static ActingGroup cyclic(int m) { return {false, m}; }
};

struct ActionSpec {
  QuotientGroup h_quotient;
  ActingGroup acting;
  std::vector<int> generator_action;  // certified automorphism of h_quotient
};

struct ActionKernel {
  int order = 1;             // d = order of the generator's automorphism
  QuotientGroup g_quotient;  // G/A, cyclic of order d
};

// H ⋊ Z/d as a Cayley graph on H's generators plus one extra label for
// the acting generator. Element (h, s) has vertex index s*|H| + h.
struct FiniteSemidirect {
  QuotientGroup group;
  std::vector<int> h_part;  // the s = 0 block, a normal subgroup
  int quotient_order = 1;
};

// A finite extension 1 -> H -> Gamma -> G -> 1 realized as tables.
// sigma picks the minimal-length preimage (ties: lowest vertex index),
// which preserves distances to the identity.
struct ExtensionTriple {
  QuotientGroup gamma;
  std::vector<int> h_elements;  // normal subgroup, ascending vertex ids
  QuotientGroup g_quotient;
  std::vector<int> pi;     // gamma vertex -> g vertex
  std::vector<int> sigma;  // g vertex -> gamma vertex
};

// The subgroup acting trivially on H is dZ (or the index-d subgroup of
// Z/m when d divides m); returns d and the cyclic quotient.
ActionKernel action_kernel(const ActionSpec& spec);

FiniteSemidirect build_semidirect(const ActionSpec& spec);

ExtensionTriple extension_triple(const ActionSpec& spec);

// pi is a surjective homomorphism with kernel exactly h_elements, sigma a
// length-preserving right inverse; throws on any breach.
void certify_triple(const ExtensionTriple& t);

// One triple per level; diameters must increase strictly.
std::vector<ExtensionTriple> extension_tower(const std::vector<QuotientGroup>& h_levels,
                                             const std::vector<Word>& automorphism_images,
                                             ActingGroup acting = ActingGroup::integers());

}  // namespace boxspace
