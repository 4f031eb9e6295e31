#pragma once

#include <boost/rational.hpp>
#include <utility>
#include <vector>

#include "garland/graph.hpp"
#include "garland/surface.hpp"
#include "garland/word.hpp"

namespace garland {

using Rational = boost::rational<long long>;

// A degree-zero component of the garland space over a graph whose chords all
// have arity 2: one based word per circle. Two labelings describe the same
// component iff they are related, per connected component of the graph, by a
// global conjugation together with chord slides (conjugating the subtree
// beyond a chord by powers of the label at its near end).
struct TreeGarlandClass {
  GarlandGraph graph;
  std::vector<Word> labels;  // labels[i-1] belongs to circle i

  friend bool operator==(const TreeGarlandClass&, const TreeGarlandClass&) = default;
};

// Rooted-tree view of one connected component; edges are (parent, child)
// pairs of circle indices in breadth-first order from the root (the lowest
// circle index of the component).
struct ComponentTree {
  int root = 1;
  std::vector<int> circles;                   // sorted
  std::vector<std::pair<int, int>> edges;     // BFS order
};

std::vector<ComponentTree> component_trees(const GarlandGraph& g);
std::vector<int> subtree_circles(const ComponentTree& t, int child);

TreeGarlandClass apply_relabeling(const CircleRelabeling& alpha, const TreeGarlandClass& c);
// Conjugates every label of t's component by g.
TreeGarlandClass apply_global_conjugation(const TreeGarlandClass& c, const ComponentTree& t,
                                          const Word& g);
// Conjugates every label in the subtree beyond edges[edge] by the current
// label of the parent raised to k.
TreeGarlandClass apply_slide(const TreeGarlandClass& c, const ComponentTree& t,
                             std::size_t edge, long long k);

struct EqualityResult {
  bool equal = false;
  bool exact = true;  // false when a component needed the bounded oracle search
};

// Decides whether two labelings of the same graph describe the same
// component. Exact for components with at most three circles; larger
// components fall back to a bounded search and are flagged non-exact.
EqualityResult class_equal_ex(const TreeGarlandClass& c1, const TreeGarlandClass& c2);
bool class_equal(const TreeGarlandClass& c1, const TreeGarlandClass& c2);

struct ElementTerm {
  Rational coef;
  TreeGarlandClass cls;
};

// Term list coalesced by class_equal only (no circle relabeling); the carrier
// of unsymmetrized computations.
using RawTerms = std::vector<ElementTerm>;

void add_raw_term(RawTerms& terms, const Rational& coef, const TreeGarlandClass& cls);
RawTerms relabel_terms(const CircleRelabeling& alpha, const RawTerms& terms);
bool raw_terms_equal(const RawTerms& a, const RawTerms& b);

// A rational combination of symmetrized classes: keys are quotiented by
// circle relabeling on top of the component moves, which implements the
// permutation-averaging of the bracket and the product once and for all.
struct GarlandElement {
  std::vector<ElementTerm> terms;  // coalesced, no zero coefficients

  void add(const Rational& coef, const TreeGarlandClass& cls);
  void add(const GarlandElement& other, const Rational& scale = 1);
  bool zero() const { return terms.empty(); }

  // The distinct labeled diagrams of each symmetrized term with the averaged
  // coefficients (q times multiplicity / nu!); what the bracket looks like
  // before the relabeling quotient.
  RawTerms expanded() const;
};

bool element_equal(const GarlandElement& a, const GarlandElement& b);

GarlandElement loop_class(const Word& w);

struct ChordDiagram {
  std::vector<Word> circle_words;
  std::vector<std::pair<int, int>> chords;  // 1-based circle indices
};
GarlandElement chord_diagram_class(const ChordDiagram& d);

// One signed class on compose_B(graph1, graph2, k1, k2) per crossing of the
// free classes of circles k1 and k2, with both garlands' labels conjugated so
// the marked labels become the crossing rotations.
RawTerms a_op(int k1, int k2, const TreeGarlandClass& t1, const TreeGarlandClass& t2,
              const RibbonSurface& s);

GarlandElement lie_bracket(const GarlandElement& e1, const GarlandElement& e2,
                           const RibbonSurface& s);
GarlandElement star(const GarlandElement& e1, const GarlandElement& e2);

struct RationalLoopTerm {
  Rational coef;
  CyclicWord cls;
};
// Collapses two-circle one-chord terms to the classes of the merged loops.
std::vector<RationalLoopTerm> alpha_merge(const GarlandElement& e);

Rational epsilon(const GarlandElement& e);
long long epsilon_raw(const std::vector<PairTerm>& terms);
RawTerms pair_class_reduce(const std::vector<PairTerm>& terms);

long long min_intersection_number(const RibbonSurface& s, const Word& w1, const Word& w2);

std::string to_string(const TreeGarlandClass& c);
std::string to_string(const ElementTerm& t);

}  // namespace garland
