#include "psic/runner.hpp"

#include "psic/bounds.hpp"
#include "psic/coloring_problem.hpp"
#include "psic/graph.hpp"
#include "psic/solution_io.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace psic {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos)
        return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

[[noreturn]] void config_error(int line, const std::string& message) {
    throw std::runtime_error("config line " + std::to_string(line) + ": " + message);
}

long long parse_int(const std::string& value, int line) {
    try {
        std::size_t used = 0;
        const long long out = std::stoll(value, &used);
        if (used != value.size())
            config_error(line, "trailing characters after integer \"" + value + "\"");
        return out;
    } catch (const std::exception&) {
        config_error(line, "expected an integer, got \"" + value + "\"");
    }
}

double parse_double(const std::string& value, int line) {
    try {
        std::size_t used = 0;
        const double out = std::stod(value, &used);
        if (used != value.size())
            config_error(line, "trailing characters after number \"" + value + "\"");
        return out;
    } catch (const std::exception&) {
        config_error(line, "expected a number, got \"" + value + "\"");
    }
}

bool parse_bool(const std::string& value, int line) {
    if (value == "true" || value == "1")
        return true;
    if (value == "false" || value == "0")
        return false;
    config_error(line, "expected true/false, got \"" + value + "\"");
}

std::vector<std::uint64_t> parse_seed_list(const std::string& value, int line) {
    std::vector<std::uint64_t> seeds;
    std::string item;
    std::istringstream in(value);
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (item.empty())
            continue;
        try {
            std::size_t used = 0;
            seeds.push_back(std::stoull(item, &used));
            if (used != item.size())
                config_error(line, "bad seed \"" + item + "\"");
        } catch (const std::exception&) {
            config_error(line, "bad seed \"" + item + "\"");
        }
    }
    if (seeds.empty())
        config_error(line, "seed list is empty");
    return seeds;
}

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.9g", value);
    return buffer;
}

} // namespace

RunConfig parse_run_config(std::istream& in) {
    RunConfig config;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto comment = line.find('#');
        if (comment != std::string::npos)
            line.erase(comment);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            config_error(line_no, "expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (value.empty())
            config_error(line_no, "empty value for \"" + key + "\"");

        if (key == "n")
            config.n = static_cast<int>(parse_int(value, line_no));
        else if (key == "palette_size")
            config.palette_size = static_cast<int>(parse_int(value, line_no));
        else if (key == "target_colors")
            config.target_colors = static_cast<int>(parse_int(value, line_no));
        else if (key == "population_size")
            config.ga.population_size = static_cast<std::size_t>(parse_int(value, line_no));
        else if (key == "selective_pressure")
            config.ga.selective_pressure = parse_double(value, line_no);
        else if (key == "p_max")
            config.ga.max_mutation_prob = parse_double(value, line_no);
        else if (key == "max_generations")
            config.ga.max_generations = static_cast<std::size_t>(parse_int(value, line_no));
        else if (key == "stagnation_window")
            config.ga.stagnation_window = static_cast<std::size_t>(parse_int(value, line_no));
        else if (key == "weight_pairs")
            config.weights.uncovered_pairs = parse_double(value, line_no);
        else if (key == "weight_colors")
            config.weights.excess_components = parse_double(value, line_no);
        else if (key == "weight_std")
            config.weights.size_stddev = parse_double(value, line_no);
        else if (key == "weight_avg")
            config.weights.size_mean = parse_double(value, line_no);
        else if (key == "seeds")
            config.seeds = parse_seed_list(value, line_no);
        else if (key == "output_dir")
            config.output_dir = value;
        else if (key == "ladder")
            config.ladder = parse_bool(value, line_no);
        else
            config_error(line_no, "unknown key \"" + key + "\"");
    }
    return config;
}

RunConfig load_run_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("config: cannot open " + path.string());
    return parse_run_config(in);
}

int default_palette_size(int n) {
    const auto edges = static_cast<int>(edge_count(n));
    int palette = edges;
    if (n >= 8)
        palette = static_cast<int>(approx_upper_bound(n));
    else if (const auto record = known_bounds(n); record && record->known_upper)
        palette = *record->known_upper;
    if (const auto record = known_bounds(n); record && record->improved_lower)
        palette = std::max(palette, *record->improved_lower + 1);
    return std::clamp(palette, 1, edges);
}

namespace {

struct VerifiedBest {
    bool found = false;
    int colors = 0;
    double fitness = 0.0;
    std::vector<int> genotype;
};

void write_history_csv(const std::filesystem::path& path,
                       const std::vector<rankga::GenerationStats<std::vector<int>>>& history,
                       const std::vector<FitnessBreakdown>& breakdowns) {
    std::ofstream out(path);
    if (!out)
        throw IoError("solve: cannot write " + path.string());
    out << "generation,best_fitness,mean_fitness,best_alpha,best_beta,best_gamma\n";
    for (std::size_t i = 0; i < history.size(); ++i) {
        out << history[i].generation << ',' << format_double(history[i].best_fitness) << ','
            << format_double(history[i].mean_fitness) << ',' << breakdowns[i].colors_used << ','
            << breakdowns[i].uncovered_pairs << ',' << breakdowns[i].excess_components << '\n';
    }
    if (!out)
        throw IoError("solve: write failed for " + path.string());
}

SeedOutcome run_one_seed(const RunConfig& config, int palette, int target, std::uint64_t seed) {
    rankga::Params params = config.ga;
    params.genotype_size = edge_count(config.n);
    params.seed = seed;

    const ColoringProblem problem(config.n, palette, config.weights, target);
    const auto start = std::chrono::steady_clock::now();
    const auto result = rankga::run(problem, params);
    const auto stop = std::chrono::steady_clock::now();

    // A color count is reported only if that coloring passes verification;
    // the best individual by fitness is not necessarily feasible.
    std::vector<FitnessBreakdown> breakdowns;
    breakdowns.reserve(result.history.size());
    VerifiedBest best;
    auto consider = [&](const std::vector<int>& genotype, const FitnessBreakdown& b) {
        if (b.uncovered_pairs != 0 || b.excess_components != 0)
            return;
        if (!best.found || b.colors_used > best.colors) {
            best = {true, b.colors_used, b.value, genotype};
        }
    };
    for (const auto& entry : result.history) {
        breakdowns.push_back(problem.breakdown(entry.best_genotype));
        consider(entry.best_genotype, breakdowns.back());
    }
    consider(result.best.genotype, problem.breakdown(result.best.genotype));

    SeedOutcome outcome;
    outcome.seed = seed;
    outcome.palette_size = palette;
    outcome.best_fitness = result.best.fitness;
    outcome.generations = result.generations;
    outcome.wall_seconds = std::chrono::duration<double>(stop - start).count();

    char name[128];
    std::snprintf(name, sizeof(name), "history_n%d_p%d_seed%llu.csv", config.n, palette,
                  static_cast<unsigned long long>(seed));
    outcome.history_file = config.output_dir / name;
    write_history_csv(outcome.history_file, result.history, breakdowns);

    if (best.found) {
        EdgeColoring coloring{config.n, palette, best.genotype};
        const auto report = verify(coloring);
        if (report.is_complete && report.is_connected) {
            outcome.verified_colors = best.colors;
            outcome.verified_fitness = best.fitness;
            Solution solution;
            solution.coloring = std::move(coloring);
            solution.meta = {{"seed", seed},
                             {"generations", result.generations},
                             {"fitness", best.fitness}};
            std::snprintf(name, sizeof(name), "solution_n%d_p%d_k%d_seed%llu.json", config.n,
                          palette, best.colors, static_cast<unsigned long long>(seed));
            outcome.solution_file = config.output_dir / name;
            save_solution(outcome.solution_file, solution);
        }
    }
    return outcome;
}

} // namespace

RunSummary solve(const RunConfig& config) {
    const auto edges = static_cast<int>(edge_count(config.n));
    int palette = config.palette_size.value_or(default_palette_size(config.n));
    if (palette < 1 || palette > edges)
        throw std::runtime_error("solve: palette_size must lie in [1, " + std::to_string(edges) +
                                 "] for n=" + std::to_string(config.n));
    if (config.seeds.empty())
        throw std::runtime_error("solve: seed list is empty");
    std::filesystem::create_directories(config.output_dir);

    RunSummary summary;
    summary.n = config.n;
    while (true) {
        const int target = config.target_colors.value_or(palette);
        int round_best = 0;
        for (const std::uint64_t seed : config.seeds) {
            auto outcome = run_one_seed(config, palette, target, seed);
            if (outcome.verified_colors)
                round_best = std::max(round_best, *outcome.verified_colors);
            summary.outcomes.push_back(std::move(outcome));
        }
        if (round_best > 0 &&
            (!summary.best_verified_colors || round_best > *summary.best_verified_colors))
            summary.best_verified_colors = round_best;
        // Ladder: if a verified coloring used the whole palette, there may be
        // room above it; widen by one color and try again.
        if (config.ladder && round_best >= palette && palette < edges)
            palette = round_best + 1;
        else
            break;
    }
    return summary;
}

void write_summary_csv(std::ostream& out, const RunSummary& summary) {
    out << "seed,palette_size,verified_colors,best_fitness,generations,wall_seconds,solution_file\n";
    for (const auto& o : summary.outcomes) {
        out << o.seed << ',' << o.palette_size << ',';
        if (o.verified_colors)
            out << *o.verified_colors;
        out << ',' << format_double(o.best_fitness) << ',' << o.generations << ','
            << format_double(o.wall_seconds) << ',' << o.solution_file.filename().string() << '\n';
    }
}

void print_summary(std::ostream& out, const RunSummary& summary) {
    out << "n = " << summary.n << '\n';
    for (const auto& o : summary.outcomes) {
        out << "  seed " << o.seed << " (palette " << o.palette_size << "): ";
        if (o.verified_colors)
            out << "verified " << *o.verified_colors << " colors ("
                << o.solution_file.filename().string() << ")";
        else
            out << "no verified complete connected coloring";
        out << ", " << o.generations << " generations, " << format_double(o.wall_seconds)
            << " s\n";
    }
    if (summary.best_verified_colors)
        out << "best verified color count: " << *summary.best_verified_colors << '\n';
    else
        out << "no verified coloring found\n";
}

} // namespace psic
