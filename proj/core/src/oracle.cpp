#include "garland/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "garland/garland.hpp"

namespace garland::oracle {

namespace {

Letters subalphabet(const std::vector<Word>& words) {
  std::vector<int> gens;
  for (const Word& w : words) {
    for (const Letter& l : w.letters()) gens.push_back(l.gen);
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  Letters out;
  for (int g : gens) {
    out.push_back({g, 1});
    out.push_back({g, -1});
  }
  return out;
}

// The reduced form of x^-1 d x, maintained in place with an undo journal.
// Each extension touches only the two ends of an already-reduced word.
struct ConjState {
  std::deque<Letter> word;

  struct Undo {
    bool popped_front = false;
    bool popped_back = false;
    Letter front_letter;
    Letter back_letter;
  };

  Undo extend(const Letter& x) {
    Undo u;
    if (!word.empty() && word.front() == x) {
      u.popped_front = true;
      u.front_letter = x;
      word.pop_front();
    } else {
      word.push_front(inverse(x));
    }
    if (!word.empty() && word.back() == inverse(x)) {
      u.popped_back = true;
      u.back_letter = inverse(x);
      word.pop_back();
    } else {
      word.push_back(x);
    }
    return u;
  }

  void retract(const Undo& u) {
    if (u.popped_back) {
      word.push_back(u.back_letter);
    } else {
      word.pop_back();
    }
    if (u.popped_front) {
      word.push_front(u.front_letter);
    } else {
      word.pop_front();
    }
  }

  bool equals(const Word& w) const {
    return word.size() == w.size() && std::equal(word.begin(), word.end(), w.letters().begin());
  }
};

// Calls fn(c) for every reduced word c over the alphabet with c u c^-1 == v,
// in order of length then lexicographic rank; stops when fn returns true.
bool for_each_conjugator(const Word& u, const Word& v, const Letters& alphabet, int max_len,
                         const std::function<bool(const Word&)>& fn) {
  ConjState state;
  for (const Letter& l : v.letters()) state.word.push_back(l);
  Letters prefix;
  bool stop = false;
  // state.word holds prefix^-1 v prefix; a hit means c = prefix works.
  std::function<void(int)> walk = [&](int remaining) {
    if (stop) return;
    if (remaining == 0) {
      if (state.equals(u)) stop = fn(Word(prefix));
      return;
    }
    for (const Letter& x : alphabet) {
      if (!prefix.empty() && prefix.back() == inverse(x)) continue;
      prefix.push_back(x);
      const ConjState::Undo undo = state.extend(x);
      walk(remaining - 1);
      state.retract(undo);
      prefix.pop_back();
      if (stop) return;
    }
  };
  for (int len = 0; len <= max_len && !stop; ++len) walk(len);
  return stop;
}

}  // namespace

std::optional<Word> brute_conjugator_search(const Word& u, const Word& v,
                                            const SearchBounds& bounds) {
  std::optional<Word> found;
  for_each_conjugator(u, v, subalphabet({u, v}), bounds.max_conjugator_length,
                      [&](const Word& c) {
                        found = c;
                        return true;
                      });
  return found;
}

std::optional<long long> brute_power_solve(const Word& w, const Word& u, const Word& v,
                                           const SearchBounds& bounds) {
  for (long long i = 0; i <= bounds.max_power; ++i) {
    if (conjugate(power(w, i), u) == v) return i;
    if (i > 0 && conjugate(power(w, -i), u) == v) return -i;
  }
  return std::nullopt;
}

namespace {

// With a global conjugator fixed, walks the edges in BFS order trying every
// slide power at each edge; a circle is checked right after the slide that
// last touches it.
bool slides_match(const TreeGarlandClass& cur, const TreeGarlandClass& target,
                  const ComponentTree& t, std::size_t edge, const SearchBounds& bounds) {
  if (edge == t.edges.size()) return true;
  const int child = t.edges[edge].second;
  for (long long k = 0; k <= bounds.max_power; ++k) {
    for (const long long signed_k : {k, -k}) {
      if (signed_k == 0 && k != 0) continue;
      const TreeGarlandClass next = apply_slide(cur, t, edge, signed_k);
      if (next.labels[static_cast<std::size_t>(child) - 1] !=
          target.labels[static_cast<std::size_t>(child) - 1]) {
        continue;
      }
      if (slides_match(next, target, t, edge + 1, bounds)) return true;
    }
  }
  return false;
}

}  // namespace

bool brute_tree_class_equal(const TreeGarlandClass& c1, const TreeGarlandClass& c2,
                            const SearchBounds& bounds) {
  if (c1.graph != c2.graph) return false;
  for (const ComponentTree& t : component_trees(c1.graph)) {
    std::vector<Word> component_words;
    for (int circ : t.circles) {
      component_words.push_back(c1.labels[static_cast<std::size_t>(circ) - 1]);
      component_words.push_back(c2.labels[static_cast<std::size_t>(circ) - 1]);
    }
    const Letters alphabet = subalphabet(component_words);
    const Word& u = c1.labels[static_cast<std::size_t>(t.root) - 1];
    const Word& v = c2.labels[static_cast<std::size_t>(t.root) - 1];
    const bool matched = for_each_conjugator(
        u, v, alphabet, bounds.max_conjugator_length, [&](const Word& g) {
          const TreeGarlandClass moved = apply_global_conjugation(c1, t, g);
          return slides_match(moved, c2, t, 0, bounds);
        });
    if (!matched) return false;
  }
  return true;
}

}  // namespace garland::oracle
