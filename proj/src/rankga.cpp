#include "psic/rankga.hpp"

#include <string>

namespace psic::rankga {

void Params::validate() const {
    if (population_size < 2)
        throw std::domain_error("rankga: population_size must be at least 2");
    if (genotype_size < 1)
        throw std::domain_error("rankga: genotype_size must be at least 1");
    if (!(selective_pressure > 1.0))
        throw std::domain_error("rankga: selective_pressure must exceed 1");
    if (!(max_mutation_prob > 0.0) || max_mutation_prob > 1.0)
        throw std::domain_error("rankga: max_mutation_prob must lie in (0, 1]");
    if (!(max_mutation_prob * static_cast<double>(genotype_size) > 1.0))
        throw std::domain_error(
            "rankga: max_mutation_prob * genotype_size must exceed 1 (got " +
            std::to_string(max_mutation_prob * static_cast<double>(genotype_size)) + ")");
}

double rank(std::size_t index, std::size_t population_size) {
    if (population_size < 2)
        throw std::domain_error("rank: population_size must be at least 2");
    if (index >= population_size)
        throw std::domain_error("rank: index " + std::to_string(index) +
                                " out of range for population of " +
                                std::to_string(population_size));
    return static_cast<double>(index) / static_cast<double>(population_size - 1);
}

double clone_number(double rank, double selective_pressure) {
    return selective_pressure * std::pow(1.0 - rank, selective_pressure - 1.0);
}

double mutation_probability(double rank, const Params& params) {
    params.validate();
    if (params.population_size < 3)
        throw std::domain_error("mutation_probability: population_size must be at least 3");
    const double exponent =
        std::log(params.max_mutation_prob * static_cast<double>(params.genotype_size)) /
        std::log(static_cast<double>(params.population_size - 1));
    return params.max_mutation_prob * std::pow(rank, exponent);
}

} // namespace psic::rankga
