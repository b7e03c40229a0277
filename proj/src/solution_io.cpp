#include "psic/solution_io.hpp"

#include "psic/graph.hpp"

#include <array>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace psic {

namespace {

using nlohmann::json;

int require_int(const json& j, const char* field) {
    if (!j.contains(field))
        throw std::runtime_error(std::string("solution: missing field \"") + field + "\"");
    const auto& value = j.at(field);
    if (!value.is_number_integer())
        throw std::runtime_error(std::string("solution: field \"") + field +
                                 "\" must be an integer");
    return value.get<int>();
}

} // namespace

Solution load_solution(std::istream& in) {
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("solution: parse error: ") + e.what());
    }
    if (!j.is_object())
        throw std::runtime_error("solution: top level must be an object");

    Solution solution;
    solution.coloring.n = require_int(j, "n");
    solution.coloring.palette_size = require_int(j, "palette_size");
    if (!j.contains("colors") || !j.at("colors").is_array())
        throw std::runtime_error("solution: field \"colors\" must be an array");
    for (const auto& entry : j.at("colors")) {
        if (!entry.is_number_integer())
            throw std::runtime_error("solution: \"colors\" entries must be integers");
        solution.coloring.colors.push_back(entry.get<int>());
    }
    if (j.contains("meta"))
        solution.meta = j.at("meta");
    return solution;
}

Solution load_solution(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("solution: cannot open " + path.string());
    return load_solution(in);
}

std::string to_json(const Solution& solution) {
    // Hand-rolled layout: fixed key order and a single-line colors array, so
    // identical solutions serialize to identical bytes.
    std::ostringstream out;
    out << "{\n";
    out << "  \"n\": " << solution.coloring.n << ",\n";
    out << "  \"palette_size\": " << solution.coloring.palette_size << ",\n";
    out << "  \"colors\": [";
    for (std::size_t e = 0; e < solution.coloring.colors.size(); ++e) {
        if (e)
            out << ", ";
        out << solution.coloring.colors[e];
    }
    out << "]";
    if (!solution.meta.is_null())
        out << ",\n  \"meta\": " << solution.meta.dump();
    out << "\n}\n";
    return out.str();
}

void save_solution(std::ostream& out, const Solution& solution) {
    out << to_json(solution);
}

void save_solution(const std::filesystem::path& path, const Solution& solution) {
    std::ofstream out(path);
    if (!out)
        throw IoError("solution: cannot write " + path.string());
    save_solution(out, solution);
    if (!out)
        throw IoError("solution: write failed for " + path.string());
}

namespace {

constexpr std::array<const char*, 12> kDotColors = {
    "red",     "blue",   "forestgreen", "orange", "purple", "brown",
    "deeppink", "teal",  "goldenrod",   "navy",   "crimson", "darkcyan"};
constexpr std::array<const char*, 3> kDotStyles = {"solid", "dashed", "dotted"};

} // namespace

void write_dot(std::ostream& out, const EdgeColoring& coloring) {
    validate(coloring);
    const CompleteGraph graph(coloring.n);

    // Style index = rank of the color among the used ones, so relabeling a
    // palette does not shuffle the rendering.
    std::map<int, std::size_t> style_of;
    for (int color : coloring.colors)
        style_of.emplace(color, 0);
    std::size_t next = 0;
    for (auto& [color, style] : style_of)
        style = next++;

    out << "graph coloring {\n";
    out << "  layout=circo;\n";
    out << "  node [shape=circle];\n";
    for (std::size_t e = 0; e < coloring.colors.size(); ++e) {
        const auto& [u, v] = graph.endpoints(e);
        const std::size_t s = style_of.at(coloring.colors[e]);
        out << "  " << u << " -- " << v << " [color=\"" << kDotColors[s % kDotColors.size()]
            << "\", style=\"" << kDotStyles[(s / kDotColors.size()) % kDotStyles.size()]
            << "\", label=\"" << coloring.colors[e] << "\"];\n";
    }
    out << "}\n";
}

void write_classes(std::ostream& out, const EdgeColoring& coloring) {
    const auto report = verify(coloring);
    const CompleteGraph graph(coloring.n);
    for (int color : report.used_colors) {
        out << "color " << color << " (" << report.class_sizes.at(color) << " edges, "
            << report.class_components.at(color) << " component"
            << (report.class_components.at(color) == 1 ? "" : "s") << "):";
        for (std::size_t e = 0; e < coloring.colors.size(); ++e)
            if (coloring.colors[e] == color) {
                const auto& [u, v] = graph.endpoints(e);
                out << " (" << u << "," << v << ")";
            }
        out << '\n';
    }
}

} // namespace psic
