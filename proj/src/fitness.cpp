#include "psic/fitness.hpp"

#include "psic/disjoint_set.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace psic {

FitnessBreakdown evaluate(const EdgeColoring& c, const FitnessWeights& w) {
    const CompleteGraph graph(c.n);
    return evaluate(graph, c.palette_size, c.colors, w);
}

FitnessBreakdown evaluate(const CompleteGraph& graph, int palette_size,
                          std::span<const int> colors, const FitnessWeights& w) {
    const std::size_t n = static_cast<std::size_t>(graph.order());
    const std::size_t edges = graph.edge_count();
    if (palette_size < 1)
        throw std::invalid_argument("evaluate: palette_size must be positive, got " +
                                    std::to_string(palette_size));
    if (colors.size() != edges)
        throw std::invalid_argument("evaluate: expected " + std::to_string(edges) +
                                    " colors, got " + std::to_string(colors.size()));
    const std::size_t palette = static_cast<std::size_t>(palette_size);

    std::vector<int> class_size(palette, 0);
    for (std::size_t e = 0; e < edges; ++e) {
        const int col = colors[e];
        if (col < 0 || col >= palette_size)
            throw std::invalid_argument("evaluate: color " + std::to_string(col) + " at edge " +
                                        std::to_string(e) + " outside palette [0, " +
                                        std::to_string(palette_size) + ")");
        ++class_size[static_cast<std::size_t>(col)];
    }

    FitnessBreakdown out;
    for (std::size_t col = 0; col < palette; ++col)
        if (class_size[col] > 0)
            ++out.colors_used;

    // Edges bucketed by color (counting sort), then one union-find sweep per
    // used class for the component penalty.
    std::vector<std::size_t> offset(palette + 1, 0);
    for (std::size_t col = 0; col < palette; ++col)
        offset[col + 1] = offset[col] + static_cast<std::size_t>(class_size[col]);
    std::vector<std::size_t> by_color(edges);
    {
        std::vector<std::size_t> cursor(offset.begin(), offset.end() - 1);
        for (std::size_t e = 0; e < edges; ++e)
            by_color[cursor[static_cast<std::size_t>(colors[e])]++] = e;
    }
    DisjointSet dsu(n);
    std::vector<int> seen(n, -1);
    for (std::size_t col = 0; col < palette; ++col) {
        if (class_size[col] == 0)
            continue;
        dsu.reset(n);
        int vertices = 0;
        int merges = 0;
        for (std::size_t k = offset[col]; k < offset[col + 1]; ++k) {
            const auto& [u, v] = graph.endpoints(by_color[k]);
            if (seen[static_cast<std::size_t>(u)] != static_cast<int>(col)) {
                seen[static_cast<std::size_t>(u)] = static_cast<int>(col);
                ++vertices;
            }
            if (seen[static_cast<std::size_t>(v)] != static_cast<int>(col)) {
                seen[static_cast<std::size_t>(v)] = static_cast<int>(col);
                ++vertices;
            }
            if (dsu.unite(static_cast<std::size_t>(u), static_cast<std::size_t>(v)))
                ++merges;
        }
        out.excess_components += vertices - merges - 1;
    }

    // Color presence per vertex as bitsets; OR-ing a vertex's set into the
    // row of each color present there marks every pair met at that vertex.
    const std::size_t words = (palette + 63) / 64;
    std::vector<std::uint64_t> present(n * words, 0);
    for (std::size_t e = 0; e < edges; ++e) {
        const auto& [u, v] = graph.endpoints(e);
        const std::size_t col = static_cast<std::size_t>(colors[e]);
        present[static_cast<std::size_t>(u) * words + col / 64] |= std::uint64_t{1} << (col % 64);
        present[static_cast<std::size_t>(v) * words + col / 64] |= std::uint64_t{1} << (col % 64);
    }
    std::vector<std::uint64_t> covered(palette * words, 0);
    for (std::size_t v = 0; v < n; ++v) {
        const std::uint64_t* row = &present[v * words];
        for (std::size_t wi = 0; wi < words; ++wi) {
            std::uint64_t bits = row[wi];
            while (bits) {
                const std::size_t col = wi * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                for (std::size_t wj = 0; wj < words; ++wj)
                    covered[col * words + wj] |= row[wj];
            }
        }
    }
    for (std::size_t a = 0; a < palette; ++a) {
        if (class_size[a] == 0)
            continue;
        for (std::size_t b = a + 1; b < palette; ++b) {
            if (class_size[b] == 0)
                continue;
            if (!(covered[a * words + b / 64] >> (b % 64) & 1))
                ++out.uncovered_pairs;
        }
    }

    const double used = static_cast<double>(out.colors_used);
    double sum = 0.0;
    for (std::size_t col = 0; col < palette; ++col)
        if (class_size[col] > 0)
            sum += class_size[col];
    out.size_mean = sum / used;
    double sq = 0.0;
    for (std::size_t col = 0; col < palette; ++col)
        if (class_size[col] > 0) {
            const double d = class_size[col] - out.size_mean;
            sq += d * d;
        }
    out.size_stddev = std::sqrt(sq / used);

    out.value = used - out.uncovered_pairs * w.uncovered_pairs -
                out.excess_components * w.excess_components - out.size_stddev * w.size_stddev -
                out.size_mean * w.size_mean;
    return out;
}

} // namespace psic
