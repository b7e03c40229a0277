#pragma once

#include "psic/coloring.hpp"

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace psic {

// Filesystem-level failure (open/write); distinct from malformed content so
// callers can map the two to different exit codes.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A coloring file: n, palette_size, colors in lexicographic edge order, plus
// an optional free-form meta block (seed, generations, fitness) that round
// trips untouched.
struct Solution {
    EdgeColoring coloring;
    nlohmann::json meta; // null when absent
};

// Structural parsing only; semantic checks stay with validate()/verify().
// Throws std::runtime_error naming the offending field.
Solution load_solution(std::istream& in);
Solution load_solution(const std::filesystem::path& path);

std::string to_json(const Solution& solution);
void save_solution(std::ostream& out, const Solution& solution);
void save_solution(const std::filesystem::path& path, const Solution& solution);

// Graphviz rendering with one deterministic style per chromatic class.
void write_dot(std::ostream& out, const EdgeColoring& coloring);

// Plain-text listing of every class with its edges and size.
void write_classes(std::ostream& out, const EdgeColoring& coloring);

} // namespace psic
