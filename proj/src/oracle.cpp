#include "psic/oracle.hpp"

#include "psic/bounds.hpp"
#include "psic/disjoint_set.hpp"
#include "psic/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace psic {

namespace {

// Depth-first enumeration of restricted-growth colorings over the edges of
// K_n, in lexicographic edge order. In search mode it looks for a complete
// connected coloring with exactly `target` colors; in count mode it visits
// every full-length string once.
class PartitionSearch {
  public:
    PartitionSearch(int n, int target, bool prune, std::uint64_t node_budget)
        : graph_(n),
          n_(n),
          edges_(graph_.edge_count()),
          target_(target),
          prune_(prune),
          budget_(node_budget),
          colors_(edges_, -1),
          class_size_(static_cast<std::size_t>(target), 0),
          presence_(static_cast<std::size_t>(n) * static_cast<std::size_t>(target), 0),
          undecided_at_(static_cast<std::size_t>(n), n - 1),
          base_dsu_(static_cast<std::size_t>(n)),
          class_dsu_(static_cast<std::size_t>(n)) {}

    // Search mode. Returns true when a verified witness was found.
    bool find(EdgeColoring& witness) {
        searching_ = true;
        const bool found = dfs(0);
        if (found)
            witness = witness_;
        return found;
    }

    // Count mode: number of full-length strings visited.
    std::uint64_t count_leaves() {
        searching_ = false;
        dfs(0);
        return leaves_;
    }

    std::uint64_t leaves() const { return leaves_; }
    std::uint64_t nodes() const { return nodes_; }
    bool aborted() const { return aborted_; }

  private:
    int presence(int v, int c) const {
        return presence_[static_cast<std::size_t>(v) * static_cast<std::size_t>(target_) +
                         static_cast<std::size_t>(c)];
    }
    int& presence(int v, int c) {
        return presence_[static_cast<std::size_t>(v) * static_cast<std::size_t>(target_) +
                         static_cast<std::size_t>(c)];
    }

    void assign(std::size_t e, int c) {
        const auto& [u, v] = graph_.endpoints(e);
        colors_[e] = c;
        ++class_size_[static_cast<std::size_t>(c)];
        if (class_size_[static_cast<std::size_t>(c)] == 1) {
            ++used_;
            max_label_ = std::max(max_label_, c);
        }
        ++presence(u, c);
        ++presence(v, c);
        --undecided_at_[static_cast<std::size_t>(u)];
        --undecided_at_[static_cast<std::size_t>(v)];
    }

    void unassign(std::size_t e, int c) {
        const auto& [u, v] = graph_.endpoints(e);
        colors_[e] = -1;
        --class_size_[static_cast<std::size_t>(c)];
        if (class_size_[static_cast<std::size_t>(c)] == 0) {
            --used_;
            if (c == max_label_)
                --max_label_;
        }
        --presence(u, c);
        --presence(v, c);
        ++undecided_at_[static_cast<std::size_t>(u)];
        ++undecided_at_[static_cast<std::size_t>(v)];
    }

    // A used pair (a, b) stays coverable while some vertex can still end up
    // incident to both: missing colors there must not outnumber its
    // undecided edges. Once false for every vertex it stays false.
    bool pairs_coverable() const {
        for (int a = 0; a <= max_label_; ++a) {
            for (int b = a + 1; b <= max_label_; ++b) {
                bool coverable = false;
                for (int v = 0; v < n_ && !coverable; ++v) {
                    const int need = (presence(v, a) > 0 ? 0 : 1) + (presence(v, b) > 0 ? 0 : 1);
                    if (need <= undecided_at_[static_cast<std::size_t>(v)])
                        coverable = true;
                }
                if (!coverable)
                    return false;
            }
        }
        return true;
    }

    // A class can still become connected only if its vertices lie in one
    // component of "its decided edges plus every undecided edge".
    bool classes_joinable(std::size_t next_pos) {
        base_dsu_.reset(static_cast<std::size_t>(n_));
        for (std::size_t e = next_pos; e < edges_; ++e) {
            const auto& [u, v] = graph_.endpoints(e);
            base_dsu_.unite(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
        }
        for (int c = 0; c <= max_label_; ++c) {
            class_dsu_ = base_dsu_;
            int root = -1;
            bool split = false;
            for (std::size_t e = 0; e < next_pos; ++e) {
                if (colors_[e] != c)
                    continue;
                const auto& [u, v] = graph_.endpoints(e);
                class_dsu_.unite(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
            }
            for (int v = 0; v < n_ && !split; ++v) {
                if (presence(v, c) == 0)
                    continue;
                const int r = static_cast<int>(class_dsu_.find(static_cast<std::size_t>(v)));
                if (root < 0)
                    root = r;
                else if (root != r)
                    split = true;
            }
            if (split)
                return false;
        }
        return true;
    }

    bool dfs(std::size_t pos) {
        if (aborted_)
            return false;
        if (++nodes_ > budget_) {
            aborted_ = true;
            return false;
        }
        if (pos == edges_) {
            ++leaves_;
            if (!searching_ || used_ != target_)
                return false;
            EdgeColoring candidate{n_, target_, colors_};
            const auto report = verify(candidate);
            if (report.is_complete && report.is_connected) {
                witness_ = std::move(candidate);
                return true;
            }
            return false;
        }
        const int limit = std::min(max_label_ + 1, target_ - 1);
        for (int c = 0; c <= limit; ++c) {
            assign(pos, c);
            bool viable = true;
            if (prune_) {
                if (used_ + static_cast<int>(edges_ - pos - 1) < target_)
                    viable = false;
                else if (!pairs_coverable() || !classes_joinable(pos + 1))
                    viable = false;
            }
            if (viable && dfs(pos + 1))
                return true;
            unassign(pos, c);
            if (aborted_)
                return false;
        }
        return false;
    }

    CompleteGraph graph_;
    int n_;
    std::size_t edges_;
    int target_;
    bool prune_;
    std::uint64_t budget_;
    bool searching_ = true;

    std::vector<int> colors_;
    std::vector<int> class_size_;
    std::vector<int> presence_;
    std::vector<int> undecided_at_;
    int used_ = 0;
    int max_label_ = -1;

    DisjointSet base_dsu_;
    DisjointSet class_dsu_;

    std::uint64_t leaves_ = 0;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    EdgeColoring witness_;
};

} // namespace

OracleResult exact_psi_c(int n, const OracleOptions& options) {
    if (n < 2 || n > 6)
        throw std::domain_error("exact_psi_c: supported for 2 <= n <= 6, got " + std::to_string(n));
    if (options.node_budget == 0)
        throw std::domain_error("exact_psi_c: node budget must be positive");

    const std::size_t edges = edge_count(n);
    OracleResult result;
    result.n = n;
    result.psi_c = 1;
    result.witness = EdgeColoring{n, 1, std::vector<int>(edges, 0)};

    int cap = static_cast<int>(edges);
    if (options.use_known_upper_cap)
        if (const auto record = known_bounds(n); record && record->known_upper)
            cap = std::min(cap, *record->known_upper);

    for (int k = cap; k >= 2; --k) {
        const std::uint64_t remaining = options.node_budget - result.nodes;
        if (remaining == 0) {
            result.status = OracleStatus::incomplete;
            break;
        }
        PartitionSearch search(n, k, options.prune, remaining);
        EdgeColoring witness;
        const bool found = search.find(witness);
        result.nodes += search.nodes();
        result.explored += search.leaves();
        if (search.aborted()) {
            result.status = OracleStatus::incomplete;
            break;
        }
        if (found) {
            result.psi_c = k;
            result.witness = std::move(witness);
            break;
        }
    }
    return result;
}

std::uint64_t count_edge_partitions(int n) {
    if (n < 2 || n > 5)
        throw std::domain_error("count_edge_partitions: supported for 2 <= n <= 5, got " +
                                std::to_string(n));
    const int edges = static_cast<int>(edge_count(n));
    PartitionSearch search(n, edges, /*prune=*/false, /*node_budget=*/~std::uint64_t{0});
    return search.count_leaves();
}

} // namespace psic
