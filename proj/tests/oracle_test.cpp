#include <doctest.h>

#include "garland/garland.hpp"
#include "garland/oracle.hpp"
#include "garland/word.hpp"
#include "test_util.hpp"

using namespace garland;
using testutil::Rng;

namespace {
const oracle::SearchBounds kBounds{12, 12};
}

TEST_CASE("brute conjugator basics") {
  const auto c = oracle::brute_conjugator_search(parse_word("BBa"), parse_word("aBB"), kBounds);
  REQUIRE(c.has_value());
  CHECK(c->size() == 1);  // a (BBa) a^-1 = aBB beats the two-letter rotation bb
  CHECK(conjugate(*c, parse_word("BBa")) == parse_word("aBB"));
  CHECK(!oracle::brute_conjugator_search(parse_word("a"), parse_word("b"), kBounds).has_value());
}

TEST_CASE("brute power solve basics") {
  CHECK(oracle::brute_power_solve(parse_word("a"), parse_word("b"), parse_word("abA"), kBounds) ==
        1);
  CHECK(oracle::brute_power_solve(parse_word("a"), parse_word("b"), parse_word("b"), kBounds) == 0);
  CHECK(!oracle::brute_power_solve(parse_word("aBB"), parse_word("bbaBBB"), parse_word("Ba"),
                                   kBounds)
             .has_value());
}

TEST_CASE("conjugator agrees with brute force on 500 pairs") {
  Rng rng(101);
  int conjugate_pairs = 0;
  for (int i = 0; i < 500; ++i) {
    Word u = testutil::random_reduced_word(rng, 2, testutil::random_len(rng, 8));
    Word v;
    if (i % 2 == 0) {
      const Word g = testutil::random_reduced_word(rng, 2, testutil::random_len(rng, 4));
      v = conjugate(g, u);
    } else {
      v = testutil::random_reduced_word(rng, 2, testutil::random_len(rng, 8));
    }
    if (u.trivial() || v.trivial()) continue;
    const auto fast = conjugator(u, v);
    const auto brute = oracle::brute_conjugator_search(u, v, kBounds);
    CHECK(fast.has_value() == brute.has_value());
    if (fast.has_value()) {
      ++conjugate_pairs;
      CHECK(conjugate(fast->base, u) == v);
      CHECK(power(fast->root, primitive_root(u).exponent) == u);
    }
    if (brute.has_value()) CHECK(conjugate(*brute, u) == v);
  }
  CHECK(conjugate_pairs >= 200);  // the suite must exercise the positive branch
}

TEST_CASE("power conjugation agrees with brute force on 500 instances") {
  Rng rng(102);
  int solvable = 0;
  for (int i = 0; i < 500; ++i) {
    const Word w = testutil::random_reduced_word(rng, 2, testutil::random_len(rng, 5));
    const Word u = testutil::random_reduced_word(rng, 2, testutil::random_len(rng, 8));
    Word v;
    if (i % 2 == 0) {
      const long long k = static_cast<long long>(rng() % 9) - 4;
      v = conjugate(power(w, k), u);
    } else {
      v = testutil::random_reduced_word(rng, 2, testutil::random_len(rng, 8));
    }
    if (w.trivial() || u.trivial() || v.trivial()) continue;
    const auto fast = power_conjugation_solve(w, u, v);
    const auto brute = oracle::brute_power_solve(w, u, v, kBounds);
    if (brute.has_value()) {
      REQUIRE(fast.has_value());
      CHECK(conjugate(power(w, *fast), u) == v);
      ++solvable;
    } else {
      // The production solver is exact; the oracle is bounded. A production
      // solution outside the oracle's bound is fine, a miss is not.
      if (fast.has_value()) {
        CHECK(conjugate(power(w, *fast), u) == v);
        CHECK(std::abs(*fast) > kBounds.max_power);
      }
    }
  }
  CHECK(solvable >= 200);
}

TEST_CASE("brute tree class equality basics") {
  const GarlandGraph gamma1{2, {{1, 2}}};
  const TreeGarlandClass c1{gamma1, {parse_word("BaB"), parse_word("aB")}};
  const TreeGarlandClass c2{gamma1, {parse_word("aBB"), parse_word("aB")}};
  CHECK(oracle::brute_tree_class_equal(c1, c2, kBounds));

  const TreeGarlandClass d1{gamma1, {parse_word("BBa"), parse_word("aB")}};
  const TreeGarlandClass d2{gamma1, {parse_word("aBB"), parse_word("Ba")}};
  CHECK(!oracle::brute_tree_class_equal(d1, d2, oracle::SearchBounds{6, 6}));

  CHECK(oracle::brute_tree_class_equal(c1, c1, kBounds));
}
