#pragma once

#include <string>
#include <vector>

namespace garland {

// The combinatorial shape of a garland: nu enumerated circle vertices plus
// chord vertices, each chord carrying a strictly increasing multi-index of
// the circles it touches. Every circle carries the same color here ("S1", 1),
// kept implicit. The bipartite incidence graph circles/chords must be a
// forest, and no component may consist of a single circle with more than one
// chord.
struct GarlandGraph {
  int nu = 0;
  std::vector<std::vector<int>> chords;  // each strictly increasing; list kept sorted

  friend bool operator==(const GarlandGraph&, const GarlandGraph&) = default;
  friend bool operator<(const GarlandGraph& a, const GarlandGraph& b) {
    if (a.nu != b.nu) return a.nu < b.nu;
    return a.chords < b.chords;
  }
};

struct Validation {
  bool ok = true;
  std::string reason;
};

using CircleRelabeling = std::vector<int>;  // alpha[i-1] is the new index of circle i

Validation validate(const GarlandGraph& g);

// Single circle, no chords.
GarlandGraph circle_graph();

// Disjoint union with g2's circles shifted up by nu(g1), plus a new chord
// {k1, k2 + nu(g1)}.
GarlandGraph compose_B(const GarlandGraph& g1, const GarlandGraph& g2, int k1, int k2);

// Disjoint union with g2's circles shifted up by nu(g1).
GarlandGraph compose_D(const GarlandGraph& g1, const GarlandGraph& g2);

// Relabels circles by alpha when |alpha| == nu(g); otherwise returns g
// unchanged. Multi-indices are rewritten as the sorted images.
GarlandGraph permute(const CircleRelabeling& alpha, const GarlandGraph& g);

// alpha(i) = n1 + i for i <= n2, alpha(n2 + i) = i: the relabeling that
// swaps a block of n1 circles past a block of n2.
CircleRelabeling block_relabeling(int n1, int n2);

// Same swap of the first two blocks, fixing a trailing block of n3.
CircleRelabeling block_relabeling(int n1, int n2, int n3);

CircleRelabeling compose(const CircleRelabeling& outer, const CircleRelabeling& inner);

// Text form `nu=3; chords={1,2},{2,3}` (whitespace-insensitive).
GarlandGraph parse_graph(const std::string& text);
std::string to_string(const GarlandGraph& g);

}  // namespace garland
