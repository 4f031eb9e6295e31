#include "garland/garland.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "garland/errors.hpp"
#include "garland/oracle.hpp"

namespace garland {

namespace {

// Bounds for the fallback search deciding components with four or more
// circles; results there are bounded-search, not proofs of inequality.
const oracle::SearchBounds kFallbackBounds{4, 6};

void require_labels(const TreeGarlandClass& c) {
  if (c.labels.size() != static_cast<std::size_t>(c.graph.nu)) {
    throw IndexOutOfRange("label count does not match circle count");
  }
  for (const Word& w : c.labels) {
    if (w.trivial()) throw TrivialInput("garland labels must be nontrivial");
  }
}

}  // namespace

std::vector<ComponentTree> component_trees(const GarlandGraph& g) {
  std::map<int, std::vector<int>> adj;
  for (const auto& chord : g.chords) {
    if (chord.size() != 2) {
      throw NotTreeLike("class-level garlands need chords of arity exactly 2");
    }
    adj[chord[0]].push_back(chord[1]);
    adj[chord[1]].push_back(chord[0]);
  }
  std::vector<bool> seen(static_cast<std::size_t>(g.nu) + 1, false);
  std::vector<ComponentTree> out;
  for (int start = 1; start <= g.nu; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ComponentTree t;
    t.root = start;
    std::vector<int> queue{start};
    seen[static_cast<std::size_t>(start)] = true;
    while (!queue.empty()) {
      const int cur = queue.front();
      queue.erase(queue.begin());
      t.circles.push_back(cur);
      auto neighbors = adj[cur];
      std::sort(neighbors.begin(), neighbors.end());
      for (int nb : neighbors) {
        if (seen[static_cast<std::size_t>(nb)]) continue;
        seen[static_cast<std::size_t>(nb)] = true;
        t.edges.emplace_back(cur, nb);
        queue.push_back(nb);
      }
    }
    std::sort(t.circles.begin(), t.circles.end());
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<int> subtree_circles(const ComponentTree& t, int child) {
  std::vector<int> out{child};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& [p, c] : t.edges) {
      if (p == out[i]) out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

TreeGarlandClass apply_relabeling(const CircleRelabeling& alpha, const TreeGarlandClass& c) {
  if (static_cast<int>(alpha.size()) != c.graph.nu) return c;
  TreeGarlandClass out{permute(alpha, c.graph), std::vector<Word>(c.labels.size())};
  for (std::size_t i = 0; i < c.labels.size(); ++i) {
    out.labels[static_cast<std::size_t>(alpha[i]) - 1] = c.labels[i];
  }
  return out;
}

TreeGarlandClass apply_global_conjugation(const TreeGarlandClass& c, const ComponentTree& t,
                                          const Word& g) {
  TreeGarlandClass out = c;
  for (int circ : t.circles) {
    out.labels[static_cast<std::size_t>(circ) - 1] =
        conjugate(g, out.labels[static_cast<std::size_t>(circ) - 1]);
  }
  return out;
}

TreeGarlandClass apply_slide(const TreeGarlandClass& c, const ComponentTree& t,
                             std::size_t edge, long long k) {
  const auto [parent, child] = t.edges[edge];
  const Word h = power(c.labels[static_cast<std::size_t>(parent) - 1], k);
  TreeGarlandClass out = c;
  for (int circ : subtree_circles(t, child)) {
    out.labels[static_cast<std::size_t>(circ) - 1] =
        conjugate(h, out.labels[static_cast<std::size_t>(circ) - 1]);
  }
  return out;
}

namespace {

Word label(const TreeGarlandClass& c, int circle) {
  return c.labels[static_cast<std::size_t>(circle) - 1];
}

// Exact decision for a component with at most three circles, by the
// conjugator-coset reduction: pick the coset solving the root, then each
// remaining degree of freedom is a power of a known root.
bool equal_small_component(const TreeGarlandClass& c1, const TreeGarlandClass& c2,
                           const ComponentTree& t) {
  const int root = t.root;
  if (t.circles.size() == 1) {
    return conjugacy_class(label(c1, root)) == conjugacy_class(label(c2, root));
  }
  const auto wit = conjugator(label(c1, root), label(c2, root));
  if (!wit) return false;
  const Word& c0 = wit->base;
  const Word& r = wit->root;
  const auto target = [&](int circle) { return conjugate(c0.inv(), label(c2, circle)); };

  if (t.circles.size() == 2) {
    const int child = t.edges[0].second;
    return power_conjugation_solutions(r, label(c1, child), target(child)).any;
  }

  const bool star = t.edges[0].first == root && t.edges[1].first == root;
  if (star) {
    const int a = t.edges[0].second;
    const int b = t.edges[1].second;
    const PowerSolutions ta = power_conjugation_solutions(r, label(c1, a), target(a));
    const PowerSolutions tb = power_conjugation_solutions(r, label(c1, b), target(b));
    if (!ta.any || !tb.any) return false;
    if (ta.all || tb.all) return true;
    // Conjugators are c0 r^(j + e k): the two slide offsets agree modulo the
    // root exponent of the root label.
    const long long e = primitive_root(label(c1, root)).exponent;
    return (ta.value - tb.value) % e == 0;
  }

  // Path root -> mid -> leaf.
  const int mid = t.edges[0].second;
  const int leaf = t.edges[1].second;
  const PowerSolutions tm = power_conjugation_solutions(r, label(c1, mid), target(mid));
  if (!tm.any) return false;
  const Word& xm = label(c1, mid);
  if (tm.all) {
    // r commutes with the mid label, so combined conjugators sweep every
    // power of the mid label's primitive root.
    return power_conjugation_solutions(primitive_root(xm).root, label(c1, leaf), target(leaf))
        .any;
  }
  const Word h = c0 * power(r, tm.value);
  return power_conjugation_solutions(xm, label(c1, leaf), conjugate(h.inv(), label(c2, leaf)))
      .any;
}

}  // namespace

EqualityResult class_equal_ex(const TreeGarlandClass& c1, const TreeGarlandClass& c2) {
  require_labels(c1);
  require_labels(c2);
  if (c1.graph != c2.graph) return {false, true};
  EqualityResult res{true, true};
  for (const ComponentTree& t : component_trees(c1.graph)) {
    if (t.circles.size() <= 3) {
      if (!equal_small_component(c1, c2, t)) return {false, true};
    } else {
      res.exact = false;
      TreeGarlandClass a{c1.graph, c1.labels};
      TreeGarlandClass b{c2.graph, c2.labels};
      if (!oracle::brute_tree_class_equal(a, b, kFallbackBounds)) return {false, false};
    }
  }
  return res;
}

bool class_equal(const TreeGarlandClass& c1, const TreeGarlandClass& c2) {
  return class_equal_ex(c1, c2).equal;
}

void add_raw_term(RawTerms& terms, const Rational& coef, const TreeGarlandClass& cls) {
  if (coef.numerator() == 0) return;
  for (auto it = terms.begin(); it != terms.end(); ++it) {
    if (class_equal(it->cls, cls)) {
      it->coef += coef;
      if (it->coef.numerator() == 0) terms.erase(it);
      return;
    }
  }
  terms.push_back({coef, cls});
}

RawTerms relabel_terms(const CircleRelabeling& alpha, const RawTerms& terms) {
  RawTerms out;
  for (const ElementTerm& t : terms) add_raw_term(out, t.coef, apply_relabeling(alpha, t.cls));
  return out;
}

bool raw_terms_equal(const RawTerms& a, const RawTerms& b) {
  RawTerms diff = a;
  for (const ElementTerm& t : b) add_raw_term(diff, -t.coef, t.cls);
  return diff.empty();
}

namespace {

bool keys_equal(const TreeGarlandClass& a, const TreeGarlandClass& b) {
  if (a.graph.nu != b.graph.nu) return false;
  CircleRelabeling alpha(static_cast<std::size_t>(a.graph.nu));
  std::iota(alpha.begin(), alpha.end(), 1);
  do {
    const TreeGarlandClass moved = apply_relabeling(alpha, a);
    if (moved.graph == b.graph && class_equal(moved, b)) return true;
  } while (std::next_permutation(alpha.begin(), alpha.end()));
  return false;
}

}  // namespace

void GarlandElement::add(const Rational& coef, const TreeGarlandClass& cls) {
  if (coef.numerator() == 0) return;
  for (auto it = terms.begin(); it != terms.end(); ++it) {
    if (keys_equal(it->cls, cls)) {
      it->coef += coef;
      if (it->coef.numerator() == 0) terms.erase(it);
      return;
    }
  }
  terms.push_back({coef, cls});
}

void GarlandElement::add(const GarlandElement& other, const Rational& scale) {
  for (const ElementTerm& t : other.terms) add(t.coef * scale, t.cls);
}

RawTerms GarlandElement::expanded() const {
  RawTerms out;
  for (const ElementTerm& term : terms) {
    const int nu = term.cls.graph.nu;
    long long factorial = 1;
    for (int i = 2; i <= nu; ++i) factorial *= i;
    CircleRelabeling alpha(static_cast<std::size_t>(nu));
    std::iota(alpha.begin(), alpha.end(), 1);
    std::vector<std::pair<TreeGarlandClass, long long>> orbit;
    do {
      const TreeGarlandClass moved = apply_relabeling(alpha, term.cls);
      bool found = false;
      for (auto& [rep, count] : orbit) {
        if (rep.graph == moved.graph && class_equal(rep, moved)) {
          ++count;
          found = true;
          break;
        }
      }
      if (!found) orbit.emplace_back(moved, 1);
    } while (std::next_permutation(alpha.begin(), alpha.end()));
    for (const auto& [rep, count] : orbit) {
      add_raw_term(out, term.coef * Rational(count, factorial), rep);
    }
  }
  return out;
}

bool element_equal(const GarlandElement& a, const GarlandElement& b) {
  GarlandElement diff = a;
  diff.add(b, -1);
  return diff.zero();
}

GarlandElement loop_class(const Word& w) {
  if (w.trivial()) throw TrivialInput("loop_class of the identity");
  GarlandElement e;
  e.add(1, TreeGarlandClass{circle_graph(), {w}});
  return e;
}

GarlandElement chord_diagram_class(const ChordDiagram& d) {
  GarlandGraph g{static_cast<int>(d.circle_words.size()), {}};
  for (const auto& [a, b] : d.chords) {
    if (a == b) throw NotTreeLike("a chord may not join a circle to itself");
    g.chords.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(g.chords.begin(), g.chords.end());
  const Validation v = validate(g);
  if (!v.ok) throw NotTreeLike("diagram is not tree-like: " + v.reason);
  TreeGarlandClass cls{std::move(g), d.circle_words};
  require_labels(cls);
  GarlandElement e;
  e.add(1, cls);
  return e;
}

namespace {

Word rotation_prefix(const CyclicReduction& red, std::size_t p) {
  const Letters& core = red.core.letters();
  Letters prefix(core.begin(), core.begin() + static_cast<std::ptrdiff_t>(p));
  return red.shell * Word(std::move(prefix));
}

std::vector<Word> conjugated_labels(const std::vector<Word>& labels, const Word& g) {
  std::vector<Word> out;
  out.reserve(labels.size());
  for (const Word& w : labels) out.push_back(conjugate(g, w));
  return out;
}

}  // namespace

RawTerms a_op(int k1, int k2, const TreeGarlandClass& t1, const TreeGarlandClass& t2,
              const RibbonSurface& s) {
  require_labels(t1);
  require_labels(t2);
  if (k1 < 1 || k1 > t1.graph.nu || k2 < 1 || k2 > t2.graph.nu) {
    throw IndexOutOfRange("a_op circle index out of range");
  }
  const CyclicReduction red1 = cyclic_reduce(label(t1, k1));
  const CyclicReduction red2 = cyclic_reduce(label(t2, k2));
  const LoopClass l1{red1.core};
  const LoopClass l2{red2.core};
  const GarlandGraph graph = compose_B(t1.graph, t2.graph, k1, k2);
  RawTerms out;
  for (const CrossingTerm& cr : linked_pairs(s, l1, l2)) {
    const Word g1 = rotation_prefix(red1, cr.p).inv();
    const Word g2 = rotation_prefix(red2, cr.q).inv();
    std::vector<Word> labels = conjugated_labels(t1.labels, g1);
    const std::vector<Word> second = conjugated_labels(t2.labels, g2);
    labels.insert(labels.end(), second.begin(), second.end());
    add_raw_term(out, Rational(-cr.geom_sign), TreeGarlandClass{graph, std::move(labels)});
  }
  return out;
}

GarlandElement lie_bracket(const GarlandElement& e1, const GarlandElement& e2,
                           const RibbonSurface& s) {
  GarlandElement out;
  for (const ElementTerm& t1 : e1.terms) {
    for (const ElementTerm& t2 : e2.terms) {
      for (int k1 = 1; k1 <= t1.cls.graph.nu; ++k1) {
        for (int k2 = 1; k2 <= t2.cls.graph.nu; ++k2) {
          for (const ElementTerm& produced : a_op(k1, k2, t1.cls, t2.cls, s)) {
            out.add(t1.coef * t2.coef * produced.coef, produced.cls);
          }
        }
      }
    }
  }
  return out;
}

GarlandElement star(const GarlandElement& e1, const GarlandElement& e2) {
  GarlandElement out;
  for (const ElementTerm& t1 : e1.terms) {
    for (const ElementTerm& t2 : e2.terms) {
      std::vector<Word> labels = t1.cls.labels;
      labels.insert(labels.end(), t2.cls.labels.begin(), t2.cls.labels.end());
      out.add(t1.coef * t2.coef,
              TreeGarlandClass{compose_D(t1.cls.graph, t2.cls.graph), std::move(labels)});
    }
  }
  return out;
}

std::vector<RationalLoopTerm> alpha_merge(const GarlandElement& e) {
  const GarlandGraph pair_graph{2, {{1, 2}}};
  std::vector<RationalLoopTerm> out;
  for (const ElementTerm& t : e.terms) {
    if (t.cls.graph != pair_graph) {
      throw WrongGraph("alpha_merge needs two-circle one-chord terms");
    }
    const CyclicWord cls = conjugacy_class(t.cls.labels[0] * t.cls.labels[1]);
    bool merged = false;
    for (RationalLoopTerm& existing : out) {
      if (existing.cls == cls) {
        existing.coef += t.coef;
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back({t.coef, cls});
  }
  std::erase_if(out, [](const RationalLoopTerm& t) { return t.coef.numerator() == 0; });
  return out;
}

Rational epsilon(const GarlandElement& e) {
  Rational total = 0;
  for (const ElementTerm& t : e.terms) total += boost::abs(t.coef);
  return total;
}

RawTerms pair_class_reduce(const std::vector<PairTerm>& terms) {
  const GarlandGraph pair_graph{2, {{1, 2}}};
  RawTerms out;
  for (const PairTerm& t : terms) {
    add_raw_term(out, Rational(t.coef), TreeGarlandClass{pair_graph, {t.u, t.v}});
  }
  return out;
}

long long epsilon_raw(const std::vector<PairTerm>& terms) {
  long long total = 0;
  for (const ElementTerm& t : pair_class_reduce(terms)) {
    total += std::abs(t.coef.numerator());
  }
  return total;
}

long long min_intersection_number(const RibbonSurface& s, const Word& w1, const Word& w2) {
  const LoopClass l1 = make_loop(w1);
  const LoopClass l2 = make_loop(w2);
  const long long eps = epsilon_raw(a11_terms(s, l1, l2));
  const Rational eps_tilde = epsilon(lie_bracket(loop_class(w1), loop_class(w2), s));
  if (eps_tilde != Rational(eps)) {
    throw VerificationFailure("crossing count and bracket count disagree");
  }
  return eps;
}

std::string to_string(const TreeGarlandClass& c) {
  std::ostringstream out;
  out << "<" << to_string(c.graph) << "> :: labels ";
  for (std::size_t i = 0; i < c.labels.size(); ++i) {
    if (i > 0) out << ", ";
    out << "x" << (i + 1) << "=" << to_string(c.labels[i]);
  }
  return out.str();
}

std::string to_string(const ElementTerm& t) {
  std::ostringstream out;
  out << t.coef.numerator();
  if (t.coef.denominator() != 1) out << "/" << t.coef.denominator();
  out << " * " << to_string(t.cls);
  return out.str();
}

}  // namespace garland
