#pragma once

#include "psic/coloring.hpp"
#include "psic/graph.hpp"

#include <span>

namespace psic {

// Penalty weights of the multi-criteria coloring fitness. The defaults make
// any single constraint violation cost more than the +1 gain of an extra
// color; the two distribution terms stay an order of magnitude softer so they
// only break ties between feasible colorings.
struct FitnessWeights {
    double uncovered_pairs = 2.0;   // per used color pair sharing no vertex
    double excess_components = 2.0; // per component beyond the first, per class
    double size_stddev = 0.1;       // spread of class sizes
    double size_mean = 0.05;        // mean class size
};

struct FitnessBreakdown {
    int colors_used = 0;       // distinct colors in the genotype
    int uncovered_pairs = 0;   // used color pairs with no common vertex
    int excess_components = 0; // sum over classes of (components - 1)
    double size_stddev = 0.0;  // population standard deviation of class sizes
    double size_mean = 0.0;    // mean class size over used colors
    double value = 0.0;        // colors_used minus the weighted penalties
};

// Scores a coloring: colors_used
//   - uncovered_pairs * w.uncovered_pairs
//   - excess_components * w.excess_components
//   - size_stddev * w.size_stddev
//   - size_mean * w.size_mean.
// A coloring with no violations scores colors_used minus the two soft terms.
FitnessBreakdown evaluate(const EdgeColoring& c, const FitnessWeights& w);

// Same computation on a raw genotype; the graph supplies the edge order.
// Kept free of maps and per-color passes so it stays cheap inside the
// generation loop, and deliberately separate from verify()'s code path.
FitnessBreakdown evaluate(const CompleteGraph& graph, int palette_size,
                          std::span<const int> colors, const FitnessWeights& w);

} // namespace psic
