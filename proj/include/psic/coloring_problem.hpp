#pragma once

#include "psic/coloring.hpp"
#include "psic/fitness.hpp"
#include "psic/graph.hpp"
#include "psic/rankga.hpp"

#include <vector>

namespace psic {

// Binds the coloring search to the generic engine: a genotype is the color
// array over the lexicographic edge order of K_n.
class ColoringProblem {
  public:
    using Genotype = std::vector<int>;

    // target_colors > 0 arms the goal stop: a run ends once its best
    // individual is a verified complete connected coloring with at least
    // that many colors.
    ColoringProblem(int n, int palette_size, FitnessWeights weights, int target_colors = 0)
        : graph_(n), palette_(palette_size), weights_(weights), target_(target_colors) {}

    Genotype random_genotype(rankga::Rng& rng) const {
        std::uniform_int_distribution<int> color(0, palette_ - 1);
        Genotype genotype(graph_.edge_count());
        for (auto& gene : genotype)
            gene = color(rng);
        return genotype;
    }

    double fitness(const Genotype& colors) const {
        return evaluate(graph_, palette_, colors, weights_).value;
    }

    void mutate_gene(Genotype& colors, std::size_t gene, rankga::Rng& rng) const {
        std::uniform_int_distribution<int> color(0, palette_ - 1);
        colors[gene] = color(rng);
    }

    bool is_goal(const Genotype& colors) const {
        if (target_ <= 0)
            return false;
        const auto b = breakdown(colors);
        return b.uncovered_pairs == 0 && b.excess_components == 0 && b.colors_used >= target_;
    }

    FitnessBreakdown breakdown(const Genotype& colors) const {
        return evaluate(graph_, palette_, colors, weights_);
    }

    EdgeColoring to_coloring(const Genotype& colors) const {
        return EdgeColoring{graph_.order(), palette_, colors};
    }

    const CompleteGraph& graph() const { return graph_; }
    int palette_size() const { return palette_; }

  private:
    CompleteGraph graph_;
    int palette_;
    FitnessWeights weights_;
    int target_;
};

} // namespace psic
