#include <doctest.h>

#include <cstdlib>

#include "garland/errors.hpp"
#include "garland/garland.hpp"
#include "garland/oracle.hpp"
#include "garland/surface.hpp"
#include "test_util.hpp"

using namespace garland;
using testutil::Rng;

namespace {

const GarlandGraph kGamma1{2, {{1, 2}}};

TreeGarlandClass pair_class(const std::string& u, const std::string& v) {
  return {kGamma1, {parse_word(u), parse_word(v)}};
}

RawTerms negated(RawTerms terms) {
  for (ElementTerm& t : terms) t.coef = -t.coef;
  return terms;
}

// A random tree class with nu circles over the given shapes.
TreeGarlandClass random_tree(Rng& rng, int nu, int label_len) {
  TreeGarlandClass c;
  c.graph.nu = nu;
  if (nu == 2) c.graph.chords = {{1, 2}};
  if (nu == 3) c.graph.chords = rng() % 2 ? std::vector<std::vector<int>>{{1, 2}, {2, 3}}
                                          : std::vector<std::vector<int>>{{1, 2}, {1, 3}};
  for (int i = 0; i < nu; ++i)
    c.labels.push_back(testutil::random_reduced_word(rng, 2, testutil::random_len(rng, label_len)));
  return c;
}

// Applies a few random definitional moves; conjugators and slide powers are
// kept short so the bounded oracle can follow.
TreeGarlandClass random_moves(Rng& rng, const TreeGarlandClass& c) {
  TreeGarlandClass out = c;
  for (const ComponentTree& t : component_trees(out.graph)) {
    const Word g = testutil::random_reduced_word(rng, 2, static_cast<int>(rng() % 3));
    out = apply_global_conjugation(out, t, g);
    for (std::size_t e = 0; e < t.edges.size(); ++e) {
      out = apply_slide(out, t, e, static_cast<long long>(rng() % 5) - 2);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("component trees and moves") {
  const GarlandGraph path{3, {{1, 2}, {2, 3}}};
  const auto trees = component_trees(path);
  REQUIRE(trees.size() == 1);
  CHECK(trees[0].root == 1);
  CHECK(trees[0].edges == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
  CHECK(subtree_circles(trees[0], 2) == std::vector<int>{2, 3});

  const GarlandGraph two{2, {}};
  CHECK(component_trees(two).size() == 2);
}

TEST_CASE("class equality on pair classes") {
  CHECK(class_equal(pair_class("BaB", "aB"), pair_class("aBB", "aB")));
  CHECK(!class_equal(pair_class("BBa", "aB"), pair_class("aBB", "Ba")));

  Rng rng(41);
  for (int i = 0; i < 50; ++i) {
    const TreeGarlandClass c = random_tree(rng, 2, 5);
    const Word g = testutil::random_reduced_word(rng, 2, testutil::random_len(rng, 4));
    TreeGarlandClass d = c;
    for (Word& w : d.labels) w = conjugate(g, w);
    CHECK(class_equal(c, d));
  }
}

TEST_CASE("class equality is invariant under the move set") {
  Rng rng(42);
  for (int i = 0; i < 60; ++i) {
    const int nu = 1 + static_cast<int>(rng() % 3);
    const TreeGarlandClass c = random_tree(rng, nu, 4);
    const TreeGarlandClass d = random_moves(rng, c);
    const EqualityResult r = class_equal_ex(c, d);
    CHECK(r.equal);
    CHECK(r.exact);
    // symmetry and reflexivity
    CHECK(class_equal(d, c));
    CHECK(class_equal(c, c));
  }
}

TEST_CASE("class equality agrees with the bounded oracle") {
  Rng rng(43);
  const oracle::SearchBounds bounds{10, 8};
  for (int i = 0; i < 40; ++i) {
    const int nu = 1 + static_cast<int>(rng() % 3);
    const TreeGarlandClass c = random_tree(rng, nu, 3);
    // half related by moves, half independent
    const TreeGarlandClass d =
        i % 2 == 0 ? random_moves(rng, c) : random_tree(rng, nu, 3);
    if (c.graph != d.graph) continue;
    CHECK(class_equal(c, d) == oracle::brute_tree_class_equal(c, d, bounds));
  }
}

TEST_CASE("large components fall back to bounded search") {
  const GarlandGraph big{4, {{1, 2}, {2, 3}, {3, 4}}};
  TreeGarlandClass c{big, {parse_word("a"), parse_word("b"), parse_word("ab"), parse_word("aB")}};
  const EqualityResult r = class_equal_ex(c, c);
  CHECK(r.equal);
  CHECK(!r.exact);
}

TEST_CASE("loop and chord diagram classes") {
  const GarlandElement l = loop_class(parse_word("a"));
  REQUIRE(l.terms.size() == 1);
  CHECK(l.terms[0].coef == Rational(1));
  CHECK(l.terms[0].cls.graph == circle_graph());

  CHECK(element_equal(loop_class(parse_word("aBB")), loop_class(parse_word("BBa"))));
  CHECK_THROWS_AS(loop_class(Word()), TrivialInput);

  CHECK(element_equal(chord_diagram_class({{parse_word("a")}, {}}), loop_class(parse_word("a"))));
  const GarlandElement pair = chord_diagram_class({{parse_word("a"), parse_word("b")}, {{1, 2}}});
  REQUIRE(pair.terms.size() == 1);
  CHECK(pair.terms[0].cls.graph == kGamma1);
  CHECK_THROWS_AS(chord_diagram_class({{parse_word("a")}, {{1, 1}}}), NotTreeLike);
}

TEST_CASE("element term coalescing") {
  GarlandElement e;
  e.add(Rational(1, 2), pair_class("aBB", "aB"));
  e.add(Rational(1, 2), pair_class("aB", "aBB"));  // relabel-equivalent key
  REQUIRE(e.terms.size() == 1);
  CHECK(e.terms[0].coef == Rational(1));
  e.add(Rational(-1), pair_class("BaB", "aB"));  // move-equivalent to the key
  CHECK(e.zero());
}

TEST_CASE("a_op basics and swap law") {
  const RibbonSurface& torus = builtin_surface("torus1");
  const TreeGarlandClass la{circle_graph(), {parse_word("a")}};
  const TreeGarlandClass lb{circle_graph(), {parse_word("b")}};
  const RawTerms ab = a_op(1, 1, la, lb, torus);
  REQUIRE(ab.size() == 1);
  CHECK(ab[0].cls.graph == kGamma1);
  CHECK(abs(ab[0].coef.numerator()) == 1);

  Rng rng(44);
  for (int i = 0; i < 100; ++i) {
    const auto [w1, w2] = testutil::random_admissible_pair(rng, 2, 5);
    const RibbonSurface& s = builtin_surface(i % 2 == 0 ? "torus1" : "section13");
    const TreeGarlandClass t1{circle_graph(), {w1}};
    const TreeGarlandClass t2{circle_graph(), {w2}};
    const RawTerms fwd = a_op(1, 1, t1, t2, s);
    const RawTerms rev = a_op(1, 1, t2, t1, s);
    CHECK(raw_terms_equal(fwd, negated(relabel_terms(block_relabeling(1, 1), rev))));
  }
}

TEST_CASE("bracket antisymmetry on 100 pairs") {
  Rng rng(45);
  for (int i = 0; i < 100; ++i) {
    const auto [w1, w2] = testutil::random_admissible_pair(rng, 2, 5);
    const RibbonSurface& s = builtin_surface(i % 2 == 0 ? "torus1" : "pants");
    GarlandElement sum = lie_bracket(loop_class(w1), loop_class(w2), s);
    sum.add(lie_bracket(loop_class(w2), loop_class(w1), s));
    CHECK(sum.zero());
  }
}

TEST_CASE("jacobi identity on 25 triples") {
  Rng rng(46);
  int done = 0;
  while (done < 25) {
    const RibbonSurface& s = builtin_surface(done % 2 == 0 ? "torus1" : "pants");
    const Word w1 = testutil::random_cyclic_word(rng, 2, testutil::random_len(rng, 5));
    const Word w2 = testutil::random_cyclic_word(rng, 2, testutil::random_len(rng, 5));
    const Word w3 = testutil::random_cyclic_word(rng, 2, testutil::random_len(rng, 5));
    if (!testutil::admissible(w1, w2) || !testutil::admissible(w2, w3) ||
        !testutil::admissible(w1, w3)) {
      continue;
    }
    try {
      const GarlandElement e1 = loop_class(w1), e2 = loop_class(w2), e3 = loop_class(w3);
      GarlandElement sum = lie_bracket(lie_bracket(e1, e2, s), e3, s);
      sum.add(lie_bracket(lie_bracket(e2, e3, s), e1, s));
      sum.add(lie_bracket(lie_bracket(e3, e1, s), e2, s));
      CHECK(sum.zero());
      ++done;
    } catch (const CommonRoot&) {
      // a product term happened to share a root with the third loop
      continue;
    }
  }
}

TEST_CASE("leibniz rule on 25 triples") {
  Rng rng(47);
  int done = 0;
  while (done < 25) {
    const RibbonSurface& s = builtin_surface(done % 2 == 0 ? "torus1" : "pants");
    const Word w1 = testutil::random_cyclic_word(rng, 2, testutil::random_len(rng, 5));
    const Word w2 = testutil::random_cyclic_word(rng, 2, testutil::random_len(rng, 5));
    const Word w3 = testutil::random_cyclic_word(rng, 2, testutil::random_len(rng, 5));
    if (!testutil::admissible(w1, w2) || !testutil::admissible(w1, w3)) continue;
    try {
      const GarlandElement e1 = loop_class(w1), e2 = loop_class(w2), e3 = loop_class(w3);
      GarlandElement lhs = lie_bracket(e1, star(e2, e3), s);
      GarlandElement rhs = star(lie_bracket(e1, e2, s), e3);
      rhs.add(star(e2, lie_bracket(e1, e3, s)));
      CHECK(element_equal(lhs, rhs));
      ++done;
    } catch (const CommonRoot&) {
      continue;
    }
  }
}

TEST_CASE("star product algebra") {
  const GarlandElement a = loop_class(parse_word("a"));
  const GarlandElement b = loop_class(parse_word("b"));
  CHECK(element_equal(star(a, b), star(b, a)));
  CHECK(star(a, GarlandElement{}).zero());

  Rng rng(48);
  for (int i = 0; i < 50; ++i) {
    const GarlandElement e1 = loop_class(testutil::random_cyclic_word(rng, 2, testutil::random_len(rng, 4)));
    const GarlandElement e2 = loop_class(testutil::random_cyclic_word(rng, 2, testutil::random_len(rng, 4)));
    const GarlandElement e3 = loop_class(testutil::random_cyclic_word(rng, 2, testutil::random_len(rng, 4)));
    CHECK(element_equal(star(e1, e2), star(e2, e1)));
    CHECK(element_equal(star(star(e1, e2), e3), star(e1, star(e2, e3))));
  }
}

TEST_CASE("merging pair terms into loops") {
  GarlandElement e;
  e.add(Rational(1, 2), pair_class("aB", "ba"));
  e.add(Rational(1, 2), pair_class("ba", "aB"));
  const auto merged = alpha_merge(e);
  REQUIRE(merged.size() == 1);
  CHECK(merged[0].coef == Rational(1));
  CHECK(merged[0].cls == conjugacy_class(parse_word("aBba")));

  GarlandElement bad;
  bad.add(Rational(1), TreeGarlandClass{circle_graph(), {parse_word("a")}});
  CHECK_THROWS_AS(alpha_merge(bad), WrongGraph);
}

TEST_CASE("merged bracket equals minus the goldman bracket on 100 pairs") {
  Rng rng(49);
  for (int i = 0; i < 100; ++i) {
    const RibbonSurface& s =
        builtin_surface(i % 3 == 0 ? "torus1" : (i % 3 == 1 ? "pants" : "section13"));
    const auto [w1, w2] = testutil::random_admissible_pair(rng, 2, 5);
    const auto merged = alpha_merge(lie_bracket(loop_class(w1), loop_class(w2), s));
    const auto gold = goldman_bracket(s, make_loop(w1), make_loop(w2));
    REQUIRE(merged.size() == gold.size());
    for (const auto& m : merged) {
      bool found = false;
      for (const auto& g : gold) {
        if (g.cls == m.cls && Rational(-g.coef) == m.coef) found = true;
      }
      CHECK(found);
    }
  }
}

TEST_CASE("epsilon") {
  CHECK(epsilon(GarlandElement{}) == Rational(0));
  GarlandElement e;
  e.add(Rational(1, 2), pair_class("aBB", "aB"));
  e.add(Rational(-1, 2), pair_class("aB", "aBB"));
  CHECK(epsilon(e) == Rational(0));  // the two keys cancel under relabeling
  e.add(Rational(3, 4), pair_class("a", "b"));
  CHECK(epsilon(e) == Rational(3, 4));
}

TEST_CASE("minimal intersection numbers") {
  const RibbonSurface& s13 = builtin_surface("section13");
  const RibbonSurface& torus = builtin_surface("torus1");
  CHECK(min_intersection_number(s13, parse_word("aBB"), parse_word("aB")) == 2);
  CHECK(min_intersection_number(torus, parse_word("a"), parse_word("b")) == 1);
  CHECK(min_intersection_number(torus, parse_word("ab"), parse_word("aB")) == 2);
  CHECK_THROWS_AS(min_intersection_number(torus, parse_word("a"), parse_word("a")), CommonRoot);

  Rng rng(50);
  for (int i = 0; i < 40; ++i) {
    const RibbonSurface& s = builtin_surface(i % 2 == 0 ? "torus1" : "pants");
    const auto [w1, w2] = testutil::random_admissible_pair(rng, 2, 5);
    const long long n = min_intersection_number(s, w1, w2);
    CHECK(n >= std::abs(homological_pairing(s, make_loop(w1), make_loop(w2))));
  }
}
