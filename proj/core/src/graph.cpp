#include "garland/graph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "garland/errors.hpp"

namespace garland {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

Validation validate(const GarlandGraph& g) {
  if (g.nu < 0) return {false, "negative circle count"};
  for (const auto& c : g.chords) {
    if (c.empty()) return {false, "empty multi-index"};
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] < 1 || c[i] > g.nu) return {false, "multi-index entry out of range"};
      if (i > 0 && c[i] <= c[i - 1]) {
        return {false, "multi-index not strictly increasing"};
      }
    }
  }
  std::set<std::vector<int>> distinct(g.chords.begin(), g.chords.end());
  if (distinct.size() != g.chords.size()) return {false, "duplicate multi-index"};

  // Forest condition on the bipartite incidence graph: nodes are circles
  // 0..nu-1 and chords nu..nu+|chords|-1.
  UnionFind uf(g.nu + static_cast<int>(g.chords.size()));
  for (std::size_t ci = 0; ci < g.chords.size(); ++ci) {
    for (int circ : g.chords[ci]) {
      if (!uf.unite(circ - 1, g.nu + static_cast<int>(ci))) {
        return {false, "incidence graph has a cycle"};
      }
    }
  }

  // No component made of one circle and more than one chord.
  std::vector<int> circles_in(g.nu + static_cast<int>(g.chords.size()), 0);
  std::vector<int> chords_in(circles_in.size(), 0);
  for (int i = 0; i < g.nu; ++i) ++circles_in[uf.find(i)];
  for (std::size_t ci = 0; ci < g.chords.size(); ++ci) {
    ++chords_in[uf.find(g.nu + static_cast<int>(ci))];
  }
  for (std::size_t r = 0; r < circles_in.size(); ++r) {
    if (circles_in[r] == 1 && chords_in[r] > 1) {
      return {false, "component with one circle and several chords"};
    }
  }
  return {};
}

GarlandGraph circle_graph() { return {1, {}}; }

namespace {

std::vector<std::vector<int>> shifted(const std::vector<std::vector<int>>& chords, int by) {
  std::vector<std::vector<int>> out = chords;
  for (auto& c : out) {
    for (int& i : c) i += by;
  }
  return out;
}

GarlandGraph finish(GarlandGraph g) {
  std::sort(g.chords.begin(), g.chords.end());
  const Validation v = validate(g);
  if (!v.ok) throw IndexOutOfRange("composition produced an invalid graph: " + v.reason);
  return g;
}

}  // namespace

GarlandGraph compose_B(const GarlandGraph& g1, const GarlandGraph& g2, int k1, int k2) {
  if (k1 < 1 || k1 > g1.nu || k2 < 1 || k2 > g2.nu) {
    throw IndexOutOfRange("compose_B circle index out of range");
  }
  GarlandGraph out{g1.nu + g2.nu, g1.chords};
  const auto moved = shifted(g2.chords, g1.nu);
  out.chords.insert(out.chords.end(), moved.begin(), moved.end());
  std::vector<int> link{k1, k2 + g1.nu};
  std::sort(link.begin(), link.end());
  out.chords.push_back(std::move(link));
  return finish(std::move(out));
}

GarlandGraph compose_D(const GarlandGraph& g1, const GarlandGraph& g2) {
  GarlandGraph out{g1.nu + g2.nu, g1.chords};
  const auto moved = shifted(g2.chords, g1.nu);
  out.chords.insert(out.chords.end(), moved.begin(), moved.end());
  return finish(std::move(out));
}

GarlandGraph permute(const CircleRelabeling& alpha, const GarlandGraph& g) {
  if (static_cast<int>(alpha.size()) != g.nu) return g;
  GarlandGraph out{g.nu, g.chords};
  for (auto& c : out.chords) {
    for (int& i : c) i = alpha[static_cast<std::size_t>(i) - 1];
    std::sort(c.begin(), c.end());
  }
  std::sort(out.chords.begin(), out.chords.end());
  return out;
}

CircleRelabeling block_relabeling(int n1, int n2) {
  CircleRelabeling alpha(static_cast<std::size_t>(n1 + n2));
  for (int i = 1; i <= n2; ++i) alpha[static_cast<std::size_t>(i) - 1] = n1 + i;
  for (int i = 1; i <= n1; ++i) alpha[static_cast<std::size_t>(n2 + i) - 1] = i;
  return alpha;
}

CircleRelabeling block_relabeling(int n1, int n2, int n3) {
  CircleRelabeling alpha = block_relabeling(n1, n2);
  for (int i = 1; i <= n3; ++i) alpha.push_back(n1 + n2 + i);
  return alpha;
}

CircleRelabeling compose(const CircleRelabeling& outer, const CircleRelabeling& inner) {
  CircleRelabeling out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) {
    out[i] = outer[static_cast<std::size_t>(inner[i]) - 1];
  }
  return out;
}

GarlandGraph parse_graph(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  GarlandGraph g;
  std::size_t pos = 0;
  if (s.rfind("nu=", 0) != 0) throw ParseError("graph text must start with nu=");
  pos = 3;
  std::size_t end = pos;
  while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
  if (end == pos) throw ParseError("missing circle count");
  g.nu = std::stoi(s.substr(pos, end - pos));
  pos = end;
  if (pos < s.size()) {
    if (s.rfind(";chords=", pos) != pos) throw ParseError("expected ;chords=");
    pos += 8;
    while (pos < s.size()) {
      if (s[pos] != '{') throw ParseError("expected '{'");
      ++pos;
      std::vector<int> chord;
      while (pos < s.size() && s[pos] != '}') {
        end = pos;
        while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
        if (end == pos) throw ParseError("expected circle index");
        chord.push_back(std::stoi(s.substr(pos, end - pos)));
        pos = end;
        if (pos < s.size() && s[pos] == ',') ++pos;
      }
      if (pos >= s.size()) throw ParseError("unterminated chord");
      ++pos;
      g.chords.push_back(std::move(chord));
      if (pos < s.size()) {
        if (s[pos] != ',') throw ParseError("expected ',' between chords");
        ++pos;
      }
    }
  }
  std::sort(g.chords.begin(), g.chords.end());
  const Validation v = validate(g);
  if (!v.ok) throw ParseError("invalid graph: " + v.reason);
  return g;
}

std::string to_string(const GarlandGraph& g) {
  std::ostringstream out;
  out << "nu=" << g.nu;
  if (!g.chords.empty()) {
    out << "; chords=";
    for (std::size_t ci = 0; ci < g.chords.size(); ++ci) {
      if (ci > 0) out << ",";
      out << "{";
      for (std::size_t i = 0; i < g.chords[ci].size(); ++i) {
        if (i > 0) out << ",";
        out << g.chords[ci][i];
      }
      out << "}";
    }
  }
  return out.str();
}

}  // namespace garland
