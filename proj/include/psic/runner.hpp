#pragma once

#include "psic/fitness.hpp"
#include "psic/rankga.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

namespace psic {

// One solve invocation: the full parameter set lives in this struct (and in
// the config file it is parsed from) so results can be reproduced bit for
// bit from the file alone.
struct RunConfig {
    int n = 7;
    std::optional<int> palette_size;  // default via default_palette_size(n)
    std::optional<int> target_colors; // goal stop; defaults to the palette size
    rankga::Params ga;                // genotype_size and seed are filled per run
    FitnessWeights weights;
    std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    std::filesystem::path output_dir = ".";
    bool ladder = false; // grow the palette past each fully-used one and re-run
};

// Flat key = value lines, '#' comments, seeds as a comma-separated list.
// Unknown keys are rejected. Throws std::runtime_error with the line number.
RunConfig parse_run_config(std::istream& in);
RunConfig load_run_config(const std::filesystem::path& path);

// Best known upper bound for the order: the approximate bound for n >= 8,
// the tabulated exact value below that, clamped to at least one more color
// than the best known lower bound and to the edge count at most.
int default_palette_size(int n);

struct SeedOutcome {
    std::uint64_t seed = 0;
    int palette_size = 0;
    std::optional<int> verified_colors; // best verified complete+connected count
    double verified_fitness = 0.0;      // fitness of that coloring
    double best_fitness = 0.0;          // best fitness seen, verified or not
    std::size_t generations = 0;
    double wall_seconds = 0.0;
    std::filesystem::path solution_file; // empty when nothing verified
    std::filesystem::path history_file;
};

struct RunSummary {
    int n = 0;
    std::vector<SeedOutcome> outcomes;
    std::optional<int> best_verified_colors;
};

// Runs the engine once per seed (and per ladder rung), re-verifies every
// candidate before reporting it, and writes the solution JSON and history
// CSV per run. Only verified colorings are ever reported as color counts.
RunSummary solve(const RunConfig& config);

void write_summary_csv(std::ostream& out, const RunSummary& summary);
void print_summary(std::ostream& out, const RunSummary& summary);

} // namespace psic
