#include "psic/graph.hpp"

#include <stdexcept>
#include <string>

namespace psic {

std::size_t edge_count(int n) {
    if (n < 2)
        throw std::domain_error("edge_count: n must be at least 2, got " + std::to_string(n));
    return static_cast<std::size_t>(n) * (n - 1) / 2;
}

std::size_t edge_index(int u, int v, int n) {
    if (n < 2)
        throw std::domain_error("edge_index: n must be at least 2, got " + std::to_string(n));
    if (u < 0 || u >= v || v >= n)
        throw std::domain_error("edge_index: need 0 <= u < v < n, got u=" + std::to_string(u) +
                                " v=" + std::to_string(v) + " n=" + std::to_string(n));
    // Edges with first endpoint < u fill the leading rows of the order.
    const std::size_t before = static_cast<std::size_t>(u) * n - static_cast<std::size_t>(u) * (u + 1) / 2;
    return before + static_cast<std::size_t>(v - u - 1);
}

std::pair<int, int> edge_endpoints(std::size_t e, int n) {
    if (n < 2)
        throw std::domain_error("edge_endpoints: n must be at least 2, got " + std::to_string(n));
    if (e >= edge_count(n))
        throw std::domain_error("edge_endpoints: edge index " + std::to_string(e) +
                                " out of range for n=" + std::to_string(n));
    std::size_t rest = e;
    for (int u = 0; u < n - 1; ++u) {
        const std::size_t row = static_cast<std::size_t>(n - 1 - u);
        if (rest < row)
            return {u, u + 1 + static_cast<int>(rest)};
        rest -= row;
    }
    throw std::logic_error("edge_endpoints: unreachable");
}

CompleteGraph::CompleteGraph(int n) : n_(n) {
    endpoints_.reserve(psic::edge_count(n));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            endpoints_.emplace_back(u, v);
}

std::size_t CompleteGraph::edge_index(int u, int v) const {
    return psic::edge_index(u, v, n_);
}

const std::pair<int, int>& CompleteGraph::endpoints(std::size_t e) const {
    if (e >= endpoints_.size())
        throw std::domain_error("CompleteGraph::endpoints: edge index " + std::to_string(e) +
                                " out of range for n=" + std::to_string(n_));
    return endpoints_[e];
}

} // namespace psic
