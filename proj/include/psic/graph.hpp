#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace psic {

// Number of edges of the complete graph K_n.
std::size_t edge_count(int n);

// Index of edge {u, v} with u < v in the lexicographic order of vertex pairs.
std::size_t edge_index(int u, int v, int n);

// Inverse of edge_index; the returned pair satisfies u < v.
std::pair<int, int> edge_endpoints(std::size_t e, int n);

// K_n with the fixed lexicographic edge order. Vertices are 0-based so that
// genotype color ranges and vertex labels share the same convention.
class CompleteGraph {
  public:
    explicit CompleteGraph(int n);

    int order() const { return n_; }
    std::size_t edge_count() const { return endpoints_.size(); }
    std::size_t edge_index(int u, int v) const;
    const std::pair<int, int>& endpoints(std::size_t e) const;
    const std::vector<std::pair<int, int>>& edges() const { return endpoints_; }

  private:
    int n_;
    std::vector<std::pair<int, int>> endpoints_;
};

} // namespace psic
