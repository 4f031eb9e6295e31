#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace garland {

// One signed generator of a free group. gen >= 1; sign is +1 or -1.
struct Letter {
  int gen = 1;
  int sign = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

// Total order a1 < a1^-1 < a2 < a2^-1 < ...
inline int letter_rank(const Letter& l) { return 2 * (l.gen - 1) + (l.sign < 0 ? 1 : 0); }
inline bool letter_less(const Letter& a, const Letter& b) { return letter_rank(a) < letter_rank(b); }
inline Letter inverse(const Letter& l) { return {l.gen, -l.sign}; }

using Letters = std::vector<Letter>;

// A freely reduced word; the empty word is the identity.
class Word {
 public:
  Word() = default;
  explicit Word(Letters raw);  // freely reduces

  const Letters& letters() const { return letters_; }
  bool trivial() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  Word inv() const;
  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

  int max_generator() const;

 private:
  Letters letters_;
};

// A cyclically reduced word stored in its canonical rotation (the
// lexicographically least rotation under letter_less).
class CyclicWord {
 public:
  CyclicWord() = default;

  const Letters& letters() const { return letters_; }
  bool trivial() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  // The based word obtained by reading the cycle starting at position p.
  Word rotation(std::size_t p) const;
  Word as_word() const { return rotation(0); }
  Letter at(std::size_t i) const { return letters_[i % letters_.size()]; }

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend std::strong_ordering operator<=>(const CyclicWord& a, const CyclicWord& b);

  // Internal: adopts letters that are already cyclically reduced and canonical.
  static CyclicWord unchecked(Letters canonical);

 private:
  Letters letters_;
};

struct CyclicReduction {
  CyclicWord core;
  Word shell;  // input == shell * core * shell^-1
};

// One conjugator plus the generator of the centralizer of u; the full set of
// solutions of c u c^-1 = v is { base * root^k : k in Z }.
struct ConjugacyWitness {
  Word base;
  Word root;
};

struct RootPower {
  Word root;
  long long exponent = 1;  // input == root^exponent, root not a proper power
};

Word normalize(Letters raw);
Word concat(const Word& u, const Word& v);
Word invert(const Word& u);
Word conjugate(const Word& g, const Word& u);  // g u g^-1
Word power(const Word& u, long long n);

CyclicReduction cyclic_reduce(const Word& u);
CyclicWord conjugacy_class(const Word& u);

std::optional<ConjugacyWitness> conjugator(const Word& u, const Word& v);
RootPower primitive_root(const Word& u);

// Some i with w^i u w^-i == v, if one exists.
std::optional<long long> power_conjugation_solve(const Word& w, const Word& u, const Word& v);

// The full solution set {i : w^i u w^-i == v}: empty, a single value, or all
// of Z (the latter exactly when w and u commute and u == v).
struct PowerSolutions {
  bool any = false;
  bool all = false;
  long long value = 0;  // meaningful when any && !all
};
PowerSolutions power_conjugation_solutions(const Word& w, const Word& u, const Word& v);

// Text forms: compact ("aBc" with a..z generators 1..26, capitals inverses)
// and explicit tokens ("a1 a2^-1"). Parsing accepts both.
Word parse_word(const std::string& text);
std::string to_string(const Word& w);
std::string to_string(const CyclicWord& w);

}  // namespace garland
