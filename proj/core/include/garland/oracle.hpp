#pragma once

#include <optional>

#include "garland/word.hpp"

namespace garland {
struct TreeGarlandClass;
}

// Brute-force reference implementations used by the test suite to validate
// the algebraic modules. Enumeration is by word length then lexicographic
// rank, so results are deterministic. Candidate words range over the
// generators occurring in the inputs: a conjugator, if one exists, already
// exists over that subalphabet.
namespace garland::oracle {

struct SearchBounds {
  int max_conjugator_length = 12;
  int max_power = 12;
};

// Smallest-length c with c u c^-1 == v among reduced words of length at most
// bounds.max_conjugator_length, ties broken lexicographically.
std::optional<Word> brute_conjugator_search(const Word& u, const Word& v,
                                            const SearchBounds& bounds);

// Some |i| <= bounds.max_power with w^i u w^-i == v.
std::optional<long long> brute_power_solve(const Word& w, const Word& u, const Word& v,
                                           const SearchBounds& bounds);

// True iff some global conjugator per component (length bounded as above) and
// slide powers |k| <= bounds.max_power turn c1's labels into c2's. Requires
// identical graphs.
bool brute_tree_class_equal(const TreeGarlandClass& c1, const TreeGarlandClass& c2,
                            const SearchBounds& bounds);

}  // namespace garland::oracle
