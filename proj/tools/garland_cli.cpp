#include <algorithm>
#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "garland/errors.hpp"
#include "garland/garland.hpp"
#include "garland/graph.hpp"
#include "garland/oracle.hpp"
#include "garland/signs.hpp"
#include "garland/surface.hpp"
#include "garland/word.hpp"

using nlohmann::json;
using namespace garland;

namespace {

constexpr int kExitParse = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitVerification = 3;

struct Options {
  bool json_output = false;
  std::uint64_t seed = 0;
  bool use_oracle = false;
  oracle::SearchBounds bounds;
};

std::string rational_str(const Rational& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

json term_json(const ElementTerm& t) {
  json labels = json::array();
  for (const Word& w : t.cls.labels) labels.push_back(to_string(w));
  return json{{"coef", rational_str(t.coef)},
              {"graph", to_string(t.cls.graph)},
              {"labels", labels}};
}

// Stable order for golden-diff output.
std::vector<ElementTerm> sorted_terms(std::vector<ElementTerm> terms) {
  std::sort(terms.begin(), terms.end(), [](const ElementTerm& a, const ElementTerm& b) {
    return to_string(a) < to_string(b);
  });
  return terms;
}

void print_terms(const std::vector<ElementTerm>& terms) {
  if (terms.empty()) {
    std::cout << "  (zero)\n";
    return;
  }
  for (const ElementTerm& t : sorted_terms(terms)) std::cout << "  " << to_string(t) << "\n";
}

json terms_json(const std::vector<ElementTerm>& terms) {
  json arr = json::array();
  for (const ElementTerm& t : sorted_terms(terms)) arr.push_back(term_json(t));
  return arr;
}

// Reference reduction of the crossing terms using only the brute-force class
// oracle; used under --oracle to cross-check pair_class_reduce.
RawTerms oracle_pair_reduce(const std::vector<PairTerm>& terms, const oracle::SearchBounds& b) {
  RawTerms out;
  for (const PairTerm& t : terms) {
    TreeGarlandClass cls{GarlandGraph{2, {{1, 2}}}, {t.u, t.v}};
    bool merged = false;
    for (ElementTerm& e : out) {
      if (oracle::brute_tree_class_equal(e.cls, cls, b)) {
        e.coef += t.coef;
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back({Rational(t.coef), cls});
  }
  std::erase_if(out, [](const ElementTerm& e) { return e.coef.numerator() == 0; });
  return out;
}

int run_min_int(const Options& opt, const RibbonSurface& s, const Word& w1, const Word& w2) {
  const LoopClass l1 = make_loop(w1), l2 = make_loop(w2);
  const auto crossings = a11_terms(s, l1, l2);
  const RawTerms reduced = pair_class_reduce(crossings);
  const long long eps = epsilon_raw(crossings);
  const GarlandElement br = lie_bracket(loop_class(w1), loop_class(w2), s);
  const Rational eps_tilde = epsilon(br);
  const long long result = min_intersection_number(s, w1, w2);

  if (opt.use_oracle) {
    const RawTerms check = oracle_pair_reduce(crossings, opt.bounds);
    if (!raw_terms_equal(reduced, check))
      throw VerificationFailure("oracle reduction disagrees with pair_class_reduce");
  }

  if (opt.json_output) {
    json cr = json::array();
    for (const auto& t : crossings) {
      cr.push_back(json{{"coef", t.coef}, {"u", to_string(t.u)}, {"v", to_string(t.v)}});
    }
    json out{{"command", "min-int"},
             {"surface", s.name},
             {"words", {to_string(w1), to_string(w2)}},
             {"crossings", cr},
             {"reduced", terms_json(reduced)},
             {"epsilon", eps},
             {"epsilon_tilde", rational_str(eps_tilde)},
             {"min_intersection", result}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "crossing terms (" << crossings.size() << "):\n";
  for (const auto& t : crossings) {
    std::cout << "  " << (t.coef >= 0 ? "+" : "") << t.coef << " * <" << to_string(t.u) << ", "
              << to_string(t.v) << ">\n";
  }
  std::cout << "reduced classes (" << reduced.size() << "):\n";
  print_terms(reduced);
  std::cout << "epsilon = " << eps << "\n";
  std::cout << "epsilon~ = " << rational_str(eps_tilde) << "\n";
  std::cout << "minimal intersection number = " << result << "\n";
  return 0;
}

int run_bracket(const Options& opt, const RibbonSurface& s, const Word& w1, const Word& w2) {
  const GarlandElement br = lie_bracket(loop_class(w1), loop_class(w2), s);
  if (opt.json_output) {
    json out{{"command", "bracket"},
             {"surface", s.name},
             {"words", {to_string(w1), to_string(w2)}},
             {"terms", terms_json(br.terms)},
             {"epsilon_tilde", rational_str(epsilon(br))}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "bracket (" << br.terms.size() << " symmetrized terms):\n";
  print_terms(br.terms);
  std::cout << "expanded:\n";
  print_terms(br.expanded());
  std::cout << "epsilon~ = " << rational_str(epsilon(br)) << "\n";
  return 0;
}

int run_goldman(const Options& opt, const RibbonSurface& s, const Word& w1, const Word& w2) {
  const auto terms = goldman_bracket(s, make_loop(w1), make_loop(w2));
  // Cross-check: merging the garland bracket must give minus the Goldman terms.
  const auto merged = alpha_merge(lie_bracket(loop_class(w1), loop_class(w2), s));
  bool ok = merged.size() == terms.size();
  for (const auto& m : merged) {
    bool found = false;
    for (const auto& t : terms) {
      if (t.cls == m.cls && Rational(-t.coef) == m.coef) found = true;
    }
    ok = ok && found;
  }
  if (opt.json_output) {
    json arr = json::array();
    for (const auto& t : terms) arr.push_back(json{{"coef", t.coef}, {"class", to_string(t.cls)}});
    json out{{"command", "goldman"},
             {"surface", s.name},
             {"words", {to_string(w1), to_string(w2)}},
             {"terms", arr},
             {"cross_check", ok ? "pass" : "fail"}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "goldman terms (" << terms.size() << "):\n";
    if (terms.empty()) std::cout << "  0\n";
    for (const auto& t : terms)
      std::cout << "  " << (t.coef >= 0 ? "+" : "") << t.coef << " * " << to_string(t.cls) << "\n";
    std::cout << "merge cross-check: " << (ok ? "pass" : "fail") << "\n";
  }
  if (!ok) throw VerificationFailure("merged bracket does not equal minus the Goldman terms");
  return 0;
}

int run_star(const Options& opt, const std::vector<std::string>& words) {
  GarlandElement acc = loop_class(parse_word(words[0]));
  for (std::size_t i = 1; i < words.size(); ++i) acc = star(acc, loop_class(parse_word(words[i])));
  if (opt.json_output) {
    json out{{"command", "star"}, {"terms", terms_json(acc.terms)}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "star product (" << acc.terms.size() << " terms):\n";
  print_terms(acc.terms);
  return 0;
}

Word random_reduced_word(std::mt19937_64& rng, int rank, int len) {
  Letters ls;
  while (static_cast<int>(ls.size()) < len) {
    Letter l{static_cast<int>(rng() % static_cast<unsigned>(rank)) + 1, rng() % 2 ? 1 : -1};
    if (!ls.empty() && ls.back() == inverse(l)) continue;
    if (static_cast<int>(ls.size()) == len - 1 && !ls.empty() && ls.front() == inverse(l)) continue;
    ls.push_back(l);
  }
  return Word(ls);
}

int run_jacobi_check(const Options& opt, const RibbonSurface& s, int n) {
  std::mt19937_64 rng(opt.seed);
  int done = 0, failed = 0, attempts = 0;
  while (done < n && attempts < 200 * n + 200) {
    ++attempts;
    const Word w1 = random_reduced_word(rng, s.rank, 1 + static_cast<int>(rng() % 5));
    const Word w2 = random_reduced_word(rng, s.rank, 1 + static_cast<int>(rng() % 5));
    const Word w3 = random_reduced_word(rng, s.rank, 1 + static_cast<int>(rng() % 5));
    if (w1.trivial() || w2.trivial() || w3.trivial()) continue;
    try {
      const GarlandElement e1 = loop_class(w1), e2 = loop_class(w2), e3 = loop_class(w3);
      GarlandElement sum = lie_bracket(lie_bracket(e1, e2, s), e3, s);
      sum.add(lie_bracket(lie_bracket(e2, e3, s), e1, s));
      sum.add(lie_bracket(lie_bracket(e3, e1, s), e2, s));
      ++done;
      if (!sum.zero()) {
        ++failed;
        std::cout << "FAIL: (" << to_string(w1) << ", " << to_string(w2) << ", " << to_string(w3)
                  << ")\n";
      }
    } catch (const CommonRoot&) {
      continue;
    }
  }
  std::cout << "jacobi: " << (done - failed) << "/" << done << " instances vanish\n";
  if (failed > 0 || done < n) throw VerificationFailure("jacobi identity check failed");
  return 0;
}

int run_sign_check(const Options& opt) {
  const ParityReport report = verify_parity_identities();
  if (opt.json_output) {
    json arr = json::array();
    for (const auto& c : report.checks) arr.push_back(json{{"name", c.name}, {"passed", c.passed}});
    json out{{"command", "sign-check"},
             {"checks", arr},
             {"even_case_fails", report.even_case_fails},
             {"all_passed", report.all_passed()}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& c : report.checks)
      std::cout << (c.passed ? "pass  " : "FAIL  ") << c.name << "\n";
    std::cout << (report.even_case_fails ? "pass  " : "FAIL  ")
              << "even dimensions break the reassociation identities\n";
  }
  if (!report.all_passed() || !report.even_case_fails)
    throw VerificationFailure("sign identity check failed");
  return 0;
}

GarlandGraph random_forest_graph(std::mt19937_64& rng, int max_nu) {
  GarlandGraph g;
  g.nu = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_nu));
  for (int i = 2; i <= g.nu; ++i) {
    if (rng() % 2 == 0) continue;
    g.chords.push_back({1 + static_cast<int>(rng() % static_cast<unsigned>(i - 1)), i});
  }
  std::sort(g.chords.begin(), g.chords.end());
  return g;
}

// Samples the composition laws of the graph calculus on random triples,
// exhaustively over all valid circle index choices. Returns the failure count.
int check_graph_laws(std::uint64_t seed, int trials, int* total_checks) {
  std::mt19937_64 rng(seed);
  int failures = 0, checks = 0;
  for (int trial = 0; trial < trials; ++trial) {
    const GarlandGraph g1 = random_forest_graph(rng, 4);
    const GarlandGraph g2 = random_forest_graph(rng, 4);
    const GarlandGraph g3 = random_forest_graph(rng, 4);
    const int n1 = g1.nu, n2 = g2.nu, n3 = g3.nu;

    // Reassociation of two gluings.
    for (int k1 = 1; k1 <= n1; ++k1)
      for (int k2 = 1; k2 <= n2; ++k2)
        for (int k2b = 1; k2b <= n2; ++k2b)
          for (int k3 = 1; k3 <= n3; ++k3) {
            ++checks;
            const GarlandGraph lhs =
                compose_B(compose_B(g1, g2, k1, k2), g3, n1 + k2b, k3);
            const GarlandGraph rhs = permute(
                block_relabeling(n1, n2 + n3), compose_B(compose_B(g2, g3, k2b, k3), g1, k2, k1));
            if (lhs != rhs) ++failures;
          }
    // Gluing commutes up to the block swap.
    for (int k1 = 1; k1 <= n1; ++k1)
      for (int k2 = 1; k2 <= n2; ++k2) {
        ++checks;
        if (compose_B(g1, g2, k1, k2) !=
            permute(block_relabeling(n1, n2), compose_B(g2, g1, k2, k1)))
          ++failures;
      }
    // Disjoint union is associative and commutative up to the block swap.
    ++checks;
    if (compose_D(compose_D(g1, g2), g3) != compose_D(g1, compose_D(g2, g3))) ++failures;
    ++checks;
    if (compose_D(g1, g2) != permute(block_relabeling(n1, n2), compose_D(g2, g1))) ++failures;
    // Gluing into the left factor of a union needs no relabeling...
    for (int k1 = 1; k1 <= n1; ++k1)
      for (int k2 = 1; k2 <= n2; ++k2) {
        ++checks;
        if (compose_B(g1, compose_D(g2, g3), k1, k2) != compose_D(compose_B(g1, g2, k1, k2), g3))
          ++failures;
      }
    // ...while gluing into the right factor swaps the first two blocks.
    for (int k1 = 1; k1 <= n1; ++k1)
      for (int k3 = 1; k3 <= n3; ++k3) {
        ++checks;
        if (compose_B(g1, compose_D(g2, g3), k1, n2 + k3) !=
            permute(block_relabeling(n1, n2, n3), compose_D(g2, compose_B(g1, g3, k1, k3))))
          ++failures;
      }
  }
  if (total_checks != nullptr) *total_checks = checks;
  return failures;
}

int run_graph_check(const Options& opt, int n) {
  int checks = 0;
  const int failures = check_graph_laws(opt.seed, n, &checks);
  std::cout << "graph laws: " << (checks - failures) << "/" << checks << " checks pass over " << n
            << " random triples\n";
  if (failures > 0) throw VerificationFailure("graph composition law check failed");
  return 0;
}

struct Expectation {
  std::string name;
  std::string expected;
  std::string actual;
  bool ok() const { return expected == actual; }
};

int run_example(const Options&) {
  const RibbonSurface& s = builtin_surface("section13");
  const Word d1 = parse_word("aBB");
  const Word d2 = parse_word("aB");

  std::vector<Expectation> rows;
  auto add = [&rows](std::string name, std::string expected, std::string actual) {
    rows.push_back({std::move(name), std::move(expected), std::move(actual)});
  };

  const auto crossings = a11_terms(s, make_loop(d1), make_loop(d2));
  const RawTerms reduced = pair_class_reduce(crossings);
  std::vector<std::string> red;
  for (const ElementTerm& t : sorted_terms(reduced)) red.push_back(to_string(t));
  add("reduced class count", "2", std::to_string(reduced.size()));
  add("reduced term 1", "-1 * <nu=2; chords={1,2}> :: labels x1=aBB, x2=Ba",
      red.size() > 0 ? red[0] : "(missing)");
  add("reduced term 2", "1 * <nu=2; chords={1,2}> :: labels x1=BBa, x2=aB",
      red.size() > 1 ? red[1] : "(missing)");
  add("epsilon", "2", std::to_string(epsilon_raw(crossings)));

  const GarlandElement br = lie_bracket(loop_class(d1), loop_class(d2), s);
  const RawTerms expanded = br.expanded();
  add("expanded bracket terms", "4", std::to_string(expanded.size()));
  std::vector<std::string> exp_terms;
  for (const ElementTerm& t : sorted_terms(expanded)) exp_terms.push_back(to_string(t));
  const std::vector<std::string> want = {
      "-1/2 * <nu=2; chords={1,2}> :: labels x1=Ba, x2=aBB",
      "-1/2 * <nu=2; chords={1,2}> :: labels x1=aBB, x2=Ba",
      "1/2 * <nu=2; chords={1,2}> :: labels x1=BBa, x2=aB",
      "1/2 * <nu=2; chords={1,2}> :: labels x1=aB, x2=BBa",
  };
  for (std::size_t i = 0; i < want.size(); ++i) {
    add("expanded term " + std::to_string(i + 1), want[i],
        i < exp_terms.size() ? exp_terms[i] : "(missing)");
  }
  add("epsilon~", "2", rational_str(epsilon(br)));

  const auto gold = goldman_bracket(s, make_loop(d1), make_loop(d2));
  add("goldman bracket", "0", gold.empty() ? "0" : std::to_string(gold.size()) + " terms");
  const auto merged = alpha_merge(br);
  add("merged bracket", "0", merged.empty() ? "0" : std::to_string(merged.size()) + " terms");
  add("minimal intersection number", "2", std::to_string(min_intersection_number(s, d1, d2)));

  bool all_ok = true;
  for (const Expectation& r : rows) {
    all_ok = all_ok && r.ok();
    std::cout << (r.ok() ? "pass  " : "FAIL  ") << r.name << ": expected " << r.expected;
    if (!r.ok()) std::cout << ", got " << r.actual;
    std::cout << "\n";
  }
  if (!all_ok) throw VerificationFailure("worked-example reproduction failed");
  return 0;
}

// Resolves `surface w1 w2 ...`-style positionals, falling back to --surface.
const RibbonSurface& pick_surface(std::vector<std::string>& args, std::size_t expected_rest,
                                  const std::string& surface_flag, RibbonSurface& storage) {
  std::string name;
  if (args.size() == expected_rest + 1) {
    name = args.front();
    args.erase(args.begin());
  } else if (args.size() == expected_rest && !surface_flag.empty()) {
    name = surface_flag;
  } else {
    throw ParseError("expected a surface and " + std::to_string(expected_rest) + " argument(s)");
  }
  storage = resolve_surface(name);
  return storage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"degree-zero garland algebra on ribbon surfaces"};
  app.require_subcommand(1);

  Options opt;
  std::string surface_flag;
  app.add_flag("--json", opt.json_output, "machine-readable output");
  app.add_option("--seed", opt.seed, "seed for randomized checks");
  app.add_flag("--oracle", opt.use_oracle, "cross-check reductions with the brute-force oracle");
  app.add_option("--max-len", opt.bounds.max_conjugator_length, "oracle conjugator length bound");
  app.add_option("--max-power", opt.bounds.max_power, "oracle slide power bound");
  app.add_option("--surface", surface_flag, "builtin surface name or surface file path");

  std::vector<std::string> rest;
  auto* min_int = app.add_subcommand("min-int", "minimal intersection number of two classes");
  auto* bracket = app.add_subcommand("bracket", "Lie bracket of two loop classes");
  auto* goldman = app.add_subcommand("goldman", "Goldman bracket plus merge cross-check");
  auto* star_cmd = app.add_subcommand("star", "product of loop classes");
  auto* jacobi = app.add_subcommand("jacobi-check", "random Jacobi instances on a surface");
  auto* sign = app.add_subcommand("sign-check", "verify the orientation sign identities");
  auto* graph = app.add_subcommand("graph-check", "sample the graph composition laws");
  auto* example = app.add_subcommand("example-section13",
                                     "reproduce the worked genus-2 example end to end");
  for (auto* cmd : {min_int, bracket, goldman, star_cmd, jacobi, graph})
    cmd->add_option("args", rest, "positional arguments");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  RibbonSurface storage;
  try {
    if (min_int->parsed() || bracket->parsed() || goldman->parsed()) {
      const RibbonSurface& s = pick_surface(rest, 2, surface_flag, storage);
      const Word w1 = parse_word(rest[0]);
      const Word w2 = parse_word(rest[1]);
      if (min_int->parsed()) return run_min_int(opt, s, w1, w2);
      if (bracket->parsed()) return run_bracket(opt, s, w1, w2);
      return run_goldman(opt, s, w1, w2);
    }
    if (star_cmd->parsed()) {
      if (rest.empty()) throw ParseError("star needs at least one word");
      return run_star(opt, rest);
    }
    if (jacobi->parsed()) {
      const RibbonSurface& s = pick_surface(rest, 1, surface_flag, storage);
      return run_jacobi_check(opt, s, std::stoi(rest[0]));
    }
    if (sign->parsed()) return run_sign_check(opt);
    if (graph->parsed()) {
      if (rest.size() != 1) throw ParseError("graph-check needs a trial count");
      return run_graph_check(opt, std::stoi(rest[0]));
    }
    if (example->parsed()) return run_example(opt);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    // TrivialInput, CommonRoot, NotTreeLike, WrongGraph and bad numbers.
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::out_of_range& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitVerification;
  }
  return kExitParse;
}
