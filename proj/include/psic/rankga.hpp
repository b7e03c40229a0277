#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace psic::rankga {

using Rng = std::mt19937_64;

// Parameters of the rank-driven generation loop. The engine draws all
// randomness from one generator seeded with `seed`, in a fixed order
// (selection, then crossover, then mutation, each in index order), so a
// (params, seed) pair pins the whole run.
struct Params {
    std::size_t population_size = 200;
    double selective_pressure = 3.0;
    double max_mutation_prob = 0.5;
    std::size_t genotype_size = 0;
    std::size_t max_generations = 5000;
    std::size_t stagnation_window = 1000; // 0 disables the stagnation stop
    std::uint64_t seed = 1;

    void validate() const; // throws std::domain_error
};

// Rank of the individual at `index` in the fitness-sorted population, in [0, 1].
double rank(std::size_t index, std::size_t population_size);

// Expected clone count for an individual of the given rank:
// selective_pressure * (1 - rank)^(selective_pressure - 1).
double clone_number(double rank, double selective_pressure);

// Per-gene mutation probability for an individual of the given rank. The
// exponent is fixed so the curve passes through 0 for the best individual,
// 1/genotype_size for the second best, and max_mutation_prob for the worst.
double mutation_probability(double rank, const Params& params);

template <typename G>
struct Individual {
    G genotype{};
    double fitness = 0.0;
};

template <typename G>
using Population = std::vector<Individual<G>>;

// Descending fitness; ties keep their prior order so ranked operators are
// deterministic.
template <typename G>
void sort_by_fitness(Population<G>& pop) {
    std::stable_sort(pop.begin(), pop.end(), [](const Individual<G>& a, const Individual<G>& b) {
        return a.fitness > b.fitness;
    });
}

// Rank-based cloning. Expects `pop` sorted by descending fitness and returns
// exactly pop.size() individuals: first the integer part of each clone
// number in rank order (truncated once the population is full), then the
// cyclic fractional pass, which draws one uniform number per visit and
// clones individual i with probability frac(clone_number_i).
template <typename G>
Population<G> select(const Population<G>& pop, const Params& params, Rng& rng) {
    const std::size_t n = pop.size();
    if (n < 2)
        throw std::domain_error("select: population must hold at least 2 individuals");

    std::vector<double> clones(n);
    for (std::size_t i = 0; i < n; ++i)
        clones[i] = clone_number(rank(i, n), params.selective_pressure);

    Population<G> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n && out.size() < n; ++i) {
        const auto whole = static_cast<std::size_t>(std::floor(clones[i]));
        for (std::size_t k = 0; k < whole && out.size() < n; ++k)
            out.push_back(pop[i]);
    }

    double fractional_mass = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        fractional_mass += clones[i] - std::floor(clones[i]);
    if (fractional_mass == 0.0) {
        // All clone counts integral; nothing for the fractional pass to add.
        while (out.size() < n)
            out.push_back(pop.front());
        return out;
    }

    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::size_t i = 0;
    while (out.size() < n) {
        const double frac = clones[i] - std::floor(clones[i]);
        if (unit(rng) < frac)
            out.push_back(pop[i]);
        i = (i + 1) % n;
    }
    return out;
}

// Mates ranks (0,1), (2,3), ... by complementary uniform crossover: per gene
// one coin decides which parent feeds the first offspring, the second takes
// the other. Offspring replace their parents; fitness fields go stale. An
// odd population keeps its last individual unchanged.
template <typename G>
void recombine(Population<G>& pop, Rng& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t i = 0; i + 1 < pop.size(); i += 2) {
        auto& first = pop[i].genotype;
        auto& second = pop[i + 1].genotype;
        for (std::size_t g = 0; g < first.size(); ++g)
            if (unit(rng) < 0.5)
                std::swap(first[g], second[g]);
    }
}

// Mutates each gene of the individual at rank i with probability
// mutation_probability(rank_i). The best individual has probability 0 and
// consumes no draws; gene changes are delegated to
// mutate_gene(genotype, gene_index, rng).
template <typename G, typename M>
void mutate(Population<G>& pop, const Params& params, Rng& rng, M&& mutate_gene) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const std::size_t n = pop.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double p = mutation_probability(rank(i, n), params);
        if (p <= 0.0)
            continue;
        auto& genotype = pop[i].genotype;
        for (std::size_t g = 0; g < genotype.size(); ++g)
            if (unit(rng) < p)
                mutate_gene(genotype, g, rng);
    }
}

template <typename P>
concept GaProblem = requires(const P& p, typename P::Genotype& g, const typename P::Genotype& cg,
                             Rng& rng) {
    { p.random_genotype(rng) } -> std::convertible_to<typename P::Genotype>;
    { p.fitness(cg) } -> std::convertible_to<double>;
    p.mutate_gene(g, std::size_t{0}, rng);
};

template <typename G>
struct GenerationStats {
    std::size_t generation = 0;
    double best_fitness = 0.0;
    double mean_fitness = 0.0;
    G best_genotype{};
};

template <typename G>
struct RunResult {
    Individual<G> best;       // best individual seen across the whole run
    Individual<G> final_best; // best of the final population
    std::vector<GenerationStats<G>> history; // entry 0 describes the initial population
    std::size_t generations = 0;
    bool goal_reached = false;
};

// One full run: random initialization, then per generation selection,
// recombination with re-evaluation, and mutation with re-evaluation, until
// max_generations, the stagnation window, or the problem's goal (when it
// defines is_goal) ends the loop. Selection and recombination can lose the
// incumbent, so the best individual is tracked outside the population.
template <GaProblem P>
RunResult<typename P::Genotype> run(const P& problem, const Params& params) {
    using G = typename P::Genotype;
    params.validate();
    if (params.population_size < 3)
        throw std::domain_error("run: rank mutation needs population_size >= 3");

    Rng rng(params.seed);
    Population<G> pop;
    pop.reserve(params.population_size);
    for (std::size_t i = 0; i < params.population_size; ++i) {
        G genotype = problem.random_genotype(rng);
        const double fitness = problem.fitness(genotype);
        pop.push_back({std::move(genotype), fitness});
    }
    sort_by_fitness(pop);

    RunResult<G> result;
    result.best = pop.front();

    std::size_t last_improvement = 0;
    auto track_best = [&](std::size_t generation) {
        if (pop.front().fitness > result.best.fitness) {
            result.best = pop.front();
            last_improvement = generation;
        }
    };
    auto record = [&](std::size_t generation) {
        double sum = 0.0;
        for (const auto& ind : pop)
            sum += ind.fitness;
        result.history.push_back(
            {generation, pop.front().fitness, sum / static_cast<double>(pop.size()),
             pop.front().genotype});
    };
    auto goal_met = [&]() {
        if constexpr (requires { { problem.is_goal(result.best.genotype) } -> std::convertible_to<bool>; })
            return problem.is_goal(result.best.genotype);
        else
            return false;
    };

    record(0);
    if (goal_met()) {
        result.goal_reached = true;
        result.final_best = pop.front();
        return result;
    }

    for (std::size_t generation = 1; generation <= params.max_generations; ++generation) {
        pop = select(pop, params, rng);
        sort_by_fitness(pop);

        recombine(pop, rng);
        for (auto& ind : pop)
            ind.fitness = problem.fitness(ind.genotype);
        sort_by_fitness(pop);
        track_best(generation);

        mutate(pop, params, rng,
               [&problem](G& genotype, std::size_t gene, Rng& r) { problem.mutate_gene(genotype, gene, r); });
        for (auto& ind : pop)
            ind.fitness = problem.fitness(ind.genotype);
        sort_by_fitness(pop);
        track_best(generation);

        record(generation);
        result.generations = generation;
        if (goal_met()) {
            result.goal_reached = true;
            break;
        }
        if (params.stagnation_window > 0 && generation - last_improvement >= params.stagnation_window)
            break;
    }
    result.final_best = pop.front();
    return result;
}

} // namespace psic::rankga
