#include "psic/coloring.hpp"

#include "psic/disjoint_set.hpp"
#include "psic/graph.hpp"

#include <stdexcept>
#include <string>

namespace psic {

void validate(const EdgeColoring& c) {
    const std::size_t expected = edge_count(c.n);
    if (c.palette_size < 1)
        throw std::invalid_argument("coloring: palette_size must be positive, got " +
                                    std::to_string(c.palette_size));
    if (c.colors.size() != expected)
        throw std::invalid_argument("coloring: expected " + std::to_string(expected) +
                                    " colors for n=" + std::to_string(c.n) + ", got " +
                                    std::to_string(c.colors.size()));
    for (std::size_t e = 0; e < c.colors.size(); ++e)
        if (c.colors[e] < 0 || c.colors[e] >= c.palette_size)
            throw std::invalid_argument("coloring: color " + std::to_string(c.colors[e]) +
                                        " at edge " + std::to_string(e) +
                                        " outside palette [0, " + std::to_string(c.palette_size) + ")");
}

namespace {

// Components of one class, given the edges carrying that color.
int components_of_class(const CompleteGraph& g, const EdgeColoring& c, int color) {
    DisjointSet dsu(static_cast<std::size_t>(c.n));
    std::set<int> touched;
    for (std::size_t e = 0; e < c.colors.size(); ++e) {
        if (c.colors[e] != color)
            continue;
        const auto& [u, v] = g.endpoints(e);
        touched.insert(u);
        touched.insert(v);
        dsu.unite(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    }
    std::set<std::size_t> roots;
    for (int v : touched)
        roots.insert(dsu.find(static_cast<std::size_t>(v)));
    return static_cast<int>(roots.size());
}

} // namespace

VerificationReport verify(const EdgeColoring& c) {
    validate(c);
    const CompleteGraph g(c.n);

    VerificationReport report;
    for (std::size_t e = 0; e < c.colors.size(); ++e) {
        report.used_colors.insert(c.colors[e]);
        ++report.class_sizes[c.colors[e]];
    }

    for (int color : report.used_colors)
        report.class_components[color] = components_of_class(g, c, color);

    // Colors incident to each vertex; a pair is covered when some vertex
    // carries both.
    std::vector<std::set<int>> at_vertex(static_cast<std::size_t>(c.n));
    for (std::size_t e = 0; e < c.colors.size(); ++e) {
        const auto& [u, v] = g.endpoints(e);
        at_vertex[static_cast<std::size_t>(u)].insert(c.colors[e]);
        at_vertex[static_cast<std::size_t>(v)].insert(c.colors[e]);
    }
    std::set<std::pair<int, int>> covered;
    for (const auto& colors_here : at_vertex)
        for (auto a = colors_here.begin(); a != colors_here.end(); ++a)
            for (auto b = std::next(a); b != colors_here.end(); ++b)
                covered.emplace(*a, *b);

    for (auto a = report.used_colors.begin(); a != report.used_colors.end(); ++a)
        for (auto b = std::next(a); b != report.used_colors.end(); ++b)
            if (!covered.count({*a, *b}))
                report.uncovered_pairs.emplace_back(*a, *b);

    report.is_complete = report.uncovered_pairs.empty();
    report.is_connected = true;
    for (const auto& [color, parts] : report.class_components)
        if (parts != 1)
            report.is_connected = false;
    return report;
}

int count_colors(const EdgeColoring& c) {
    validate(c);
    std::set<int> used(c.colors.begin(), c.colors.end());
    return static_cast<int>(used.size());
}

int class_components(const EdgeColoring& c, int color) {
    validate(c);
    bool used = false;
    for (int col : c.colors)
        if (col == color) {
            used = true;
            break;
        }
    if (!used)
        throw std::domain_error("class_components: color " + std::to_string(color) +
                                " is not used in the coloring");
    const CompleteGraph g(c.n);
    return components_of_class(g, c, color);
}

} // namespace psic
