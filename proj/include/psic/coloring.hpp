#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

namespace psic {

// An edge coloring of K_n: one color per edge, in the lexicographic edge
// order of CompleteGraph. Colors are labels in [0, palette_size).
struct EdgeColoring {
    int n = 0;
    int palette_size = 0;
    std::vector<int> colors;
};

// Throws std::invalid_argument naming the offending index when the coloring
// breaks its invariants (wrong length, color out of range).
void validate(const EdgeColoring& c);

// Diagnostics for the two defining properties of the search: a coloring is
// complete when every pair of used colors meets at some vertex, and connected
// when every chromatic class induces a connected subgraph.
struct VerificationReport {
    std::set<int> used_colors;
    std::map<int, int> class_sizes;      // color -> number of edges
    std::map<int, int> class_components; // color -> components of the induced subgraph
    std::vector<std::pair<int, int>> uncovered_pairs; // used pairs (a, b), a < b, with no common vertex
    bool is_complete = false;
    bool is_connected = false;
};

VerificationReport verify(const EdgeColoring& c);

// Distinct colors appearing in the coloring.
int count_colors(const EdgeColoring& c);

// Connected components of one chromatic class's induced subgraph. The color
// must actually be used.
int class_components(const EdgeColoring& c, int color);

} // namespace psic
