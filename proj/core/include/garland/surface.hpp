#pragma once

#include <string>
#include <vector>

#include "garland/word.hpp"

namespace garland {

// A rank-n rose with a cyclic (counterclockwise) order of its 2n edge-ends at
// the vertex; thickening it yields an oriented surface with boundary whose
// fundamental group is free on a1..an. The end written `x` is the one a path
// leaves through when it reads the letter x.
struct RibbonSurface {
  int rank = 1;
  Letters vertex_order;  // all 2*rank ends, each exactly once
  std::string name;

  int position(const Letter& end) const;
};

RibbonSurface make_surface(int rank, Letters vertex_order, std::string name = "");
const RibbonSurface& builtin_surface(const std::string& name);  // torus1, pants, section13
RibbonSurface parse_surface_file(const std::string& path);
RibbonSurface resolve_surface(const std::string& name_or_path);

struct LoopClass {
  CyclicWord cyclic;
};
LoopClass make_loop(const Word& w);  // throws TrivialInput on the identity

// One transverse crossing of the two perturbed rose loops: positions p, q in
// the cyclic words, the geometric sign, and the based rotations starting at
// the crossing.
struct CrossingTerm {
  std::size_t p = 0;
  std::size_t q = 0;
  int geom_sign = 1;
  Word u;
  Word v;
};

std::vector<Letters> boundary_components(const RibbonSurface& s);

// Signed crossing count of the generator core loops, extended bilinearly to
// abelianizations: the homological intersection pairing.
long long homological_pairing(const RibbonSurface& s, const LoopClass& w1, const LoopClass& w2);

// All transverse crossings of the two loops, via the circular order of the
// four rays emanating from each candidate pair of positions. Throws
// CommonRoot when the two loops share a primitive root up to conjugacy and
// inversion.
std::vector<CrossingTerm> linked_pairs(const RibbonSurface& s, const LoopClass& w1,
                                       const LoopClass& w2);

struct LoopTerm {
  long long coef = 0;
  CyclicWord cls;
};

// Sum over crossings of geom_sign * class(u v), with like classes combined
// and zero terms dropped.
std::vector<LoopTerm> goldman_bracket(const RibbonSurface& s, const LoopClass& w1,
                                      const LoopClass& w2);

struct PairTerm {
  int coef = 1;  // -geom_sign
  Word u;
  Word v;
};

// One signed ordered-pair term per crossing; no class-level combination.
std::vector<PairTerm> a11_terms(const RibbonSurface& s, const LoopClass& w1,
                                const LoopClass& w2);

}  // namespace garland
