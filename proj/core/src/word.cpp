#include "garland/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "garland/errors.hpp"

namespace garland {

namespace {

void push_reduced(Letters& out, const Letter& l) {
  if (!out.empty() && out.back() == inverse(l)) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

Letters reduce(const Letters& raw) {
  Letters out;
  out.reserve(raw.size());
  for (const Letter& l : raw) push_reduced(out, l);
  return out;
}

std::strong_ordering lex_compare(const Letters& a, const Letters& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int ra = letter_rank(a[i]), rb = letter_rank(b[i]);
    if (ra != rb) return ra <=> rb;
  }
  return a.size() <=> b.size();
}

// Index of the lexicographically least rotation (Booth-style scan; quadratic
// is fine at these sizes).
std::size_t least_rotation(const Letters& ls) {
  std::size_t best = 0;
  const std::size_t n = ls.size();
  for (std::size_t cand = 1; cand < n; ++cand) {
    for (std::size_t k = 0; k < n; ++k) {
      const int rc = letter_rank(ls[(cand + k) % n]);
      const int rbst = letter_rank(ls[(best + k) % n]);
      if (rc != rbst) {
        if (rc < rbst) best = cand;
        break;
      }
    }
  }
  return best;
}

}  // namespace

Word::Word(Letters raw) : letters_(reduce(raw)) {
  for (const Letter& l : letters_) {
    if (l.gen < 1 || (l.sign != 1 && l.sign != -1)) {
      throw ParseError("letter out of range");
    }
  }
}

Word Word::inv() const {
  Letters out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(inverse(*it));
  Word w;
  w.letters_ = std::move(out);  // reversal of a reduced word is reduced
  return w;
}

Word operator*(const Word& a, const Word& b) {
  Letters out = a.letters_;
  for (const Letter& l : b.letters_) push_reduced(out, l);
  Word w;
  w.letters_ = std::move(out);
  return w;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (a.letters_.size() != b.letters_.size()) return a.letters_.size() <=> b.letters_.size();
  return lex_compare(a.letters_, b.letters_);
}

int Word::max_generator() const {
  int m = 0;
  for (const Letter& l : letters_) m = std::max(m, l.gen);
  return m;
}

CyclicWord CyclicWord::unchecked(Letters canonical) {
  CyclicWord w;
  w.letters_ = std::move(canonical);
  return w;
}

Word CyclicWord::rotation(std::size_t p) const {
  Letters out;
  const std::size_t n = letters_.size();
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(letters_[(p + i) % n]);
  return Word(std::move(out));
}

std::strong_ordering operator<=>(const CyclicWord& a, const CyclicWord& b) {
  if (a.letters_.size() != b.letters_.size()) return a.letters_.size() <=> b.letters_.size();
  return lex_compare(a.letters_, b.letters_);
}

Word normalize(Letters raw) { return Word(std::move(raw)); }

Word concat(const Word& u, const Word& v) { return u * v; }

Word invert(const Word& u) { return u.inv(); }

Word conjugate(const Word& g, const Word& u) { return g * u * g.inv(); }

Word power(const Word& u, long long n) {
  Word base = n < 0 ? u.inv() : u;
  long long k = n < 0 ? -n : n;
  Word out;
  while (k-- > 0) out = out * base;
  return out;
}

CyclicReduction cyclic_reduce(const Word& u) {
  Letters ls = u.letters();
  Letters shell;
  while (ls.size() >= 2 && ls.front() == inverse(ls.back())) {
    shell.push_back(ls.front());
    ls.erase(ls.begin());
    ls.pop_back();
  }
  if (ls.empty()) return {CyclicWord{}, Word(std::move(shell))};
  const std::size_t r = least_rotation(ls);
  // ls == p . q with |p| == r; the canonical core q . p satisfies
  // ls == p (q p) p^-1, so the shell picks up p.
  Letters canonical;
  canonical.reserve(ls.size());
  for (std::size_t i = 0; i < ls.size(); ++i) canonical.push_back(ls[(r + i) % ls.size()]);
  shell.insert(shell.end(), ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(r));
  return {CyclicWord::unchecked(std::move(canonical)), Word(std::move(shell))};
}

CyclicWord conjugacy_class(const Word& u) { return cyclic_reduce(u).core; }

RootPower primitive_root(const Word& u) {
  if (u.trivial()) throw TrivialInput("primitive_root of the identity");
  const CyclicReduction red = cyclic_reduce(u);
  const Letters& c = red.core.letters();
  const std::size_t n = c.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = c[i] == c[i - d];
    if (!periodic) continue;
    Letters root_core(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(d));
    Word root = red.shell * Word(std::move(root_core)) * red.shell.inv();
    return {std::move(root), static_cast<long long>(n / d)};
  }
  return {u, 1};  // unreachable: d == n always matches
}

std::optional<ConjugacyWitness> conjugator(const Word& u, const Word& v) {
  if (u.trivial() || v.trivial()) throw TrivialInput("conjugator needs nontrivial words");
  const CyclicReduction ru = cyclic_reduce(u);
  const CyclicReduction rv = cyclic_reduce(v);
  if (ru.core != rv.core) return std::nullopt;
  ConjugacyWitness wit{rv.shell * ru.shell.inv(), primitive_root(u).root};
  return wit;
}

PowerSolutions power_conjugation_solutions(const Word& w, const Word& u, const Word& v) {
  if (w.trivial() || u.trivial() || v.trivial()) {
    throw TrivialInput("power_conjugation_solve needs nontrivial words");
  }
  const RootPower rw = primitive_root(w);
  const RootPower ru = primitive_root(u);
  if (rw.root == ru.root || rw.root == ru.root.inv()) {
    // w and u commute: w^i u w^-i == u for every i.
    if (u == v) return {true, true, 0};
    return {};
  }
  const auto wit = conjugator(u, v);
  if (!wit) return {};
  // Solutions of x u x^-1 = v form base * <root>; w^i lies there iff
  // base * root^j is a power of rw with exponent divisible by rw's power in w.
  const long long bound =
      static_cast<long long>(wit->base.size() + wit->root.size() + w.size()) + 4;
  const auto try_coset_element = [&](const Word& g) -> std::optional<long long> {
    if (g.trivial()) return 0;
    const RootPower rg = primitive_root(g);
    long long s = 0;
    if (rg.root == rw.root) {
      s = rg.exponent;
    } else if (rg.root == rw.root.inv()) {
      s = -rg.exponent;
    } else {
      return std::nullopt;
    }
    if (s % rw.exponent != 0) return std::nullopt;
    return s / rw.exponent;
  };
  Word pos = wit->base;                    // base * root^j for j = 0, 1, ...
  Word neg = wit->base * wit->root.inv();  // base * root^-(j+1)
  for (long long j = 0; j <= bound; ++j) {
    if (const auto i = try_coset_element(pos)) return {true, false, *i};
    if (const auto i = try_coset_element(neg)) return {true, false, *i};
    pos = pos * wit->root;
    neg = neg * wit->root.inv();
  }
  return {};
}

std::optional<long long> power_conjugation_solve(const Word& w, const Word& u, const Word& v) {
  const PowerSolutions s = power_conjugation_solutions(w, u, v);
  if (!s.any) return std::nullopt;
  return s.value;
}

namespace {

void append_letter(std::string& out, const Letter& l) {
  if (l.gen <= 26) {
    const char base = static_cast<char>('a' + l.gen - 1);
    out += l.sign > 0 ? base : static_cast<char>(std::toupper(base));
  } else {
    if (!out.empty() && out.back() != ' ') out += ' ';
    out += 'a' + std::to_string(l.gen);
    if (l.sign < 0) out += "^-1";
    out += ' ';
  }
}

}  // namespace

std::string to_string(const Word& w) {
  if (w.trivial()) return "1";
  std::string out;
  for (const Letter& l : w.letters()) append_letter(out, l);
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

std::string to_string(const CyclicWord& w) { return to_string(w.as_word()); }

Word parse_word(const std::string& text) {
  Letters out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "1" && out.empty() && in.peek() == EOF) break;
    std::size_t i = 0;
    while (i < tok.size()) {
      const char c = tok[i];
      if (std::isalpha(static_cast<unsigned char>(c)) && i + 1 < tok.size() &&
          std::isdigit(static_cast<unsigned char>(tok[i + 1]))) {
        // explicit token form: a<k> optionally followed by ^-1 or ^<n>
        if (c != 'a' && c != 'A') throw ParseError("bad generator token: " + tok);
        std::size_t j = i + 1;
        while (j < tok.size() && std::isdigit(static_cast<unsigned char>(tok[j]))) ++j;
        const int gen = std::stoi(tok.substr(i + 1, j - i - 1));
        if (gen < 1) throw ParseError("generator index must be >= 1");
        long long exp = c == 'A' ? -1 : 1;
        if (j < tok.size() && tok[j] == '^') {
          std::size_t k = j + 1;
          bool negative = false;
          if (k < tok.size() && (tok[k] == '-' || tok[k] == '+')) {
            negative = tok[k] == '-';
            ++k;
          }
          std::size_t d = k;
          while (d < tok.size() && std::isdigit(static_cast<unsigned char>(tok[d]))) ++d;
          if (d == k) throw ParseError("bad exponent in token: " + tok);
          exp *= (negative ? -1 : 1) * std::stoll(tok.substr(k, d - k));
          j = d;
        }
        const Letter l{gen, exp < 0 ? -1 : 1};
        for (long long t = 0; t < (exp < 0 ? -exp : exp); ++t) out.push_back(l);
        i = j;
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        const bool upper = std::isupper(static_cast<unsigned char>(c));
        const int gen = (upper ? c - 'A' : c - 'a') + 1;
        out.push_back({gen, upper ? -1 : 1});
        ++i;
      } else {
        throw ParseError(std::string("unexpected character '") + c + "' in word");
      }
    }
  }
  return Word(std::move(out));
}

}  // namespace garland
