#pragma once

#include "psic/coloring.hpp"

#include <cstdint>

namespace psic {

enum class OracleStatus { exact, incomplete };

struct OracleOptions {
    std::uint64_t node_budget = 200'000'000; // search states before giving up
    bool use_known_upper_cap = true; // start the downward scan at the tabulated upper bound
    bool prune = true;               // feasibility pruning; disable only to count enumerations
};

struct OracleResult {
    int n = 0;
    int psi_c = 0;
    EdgeColoring witness;        // verified complete and connected
    std::uint64_t explored = 0;  // complete canonical colorings examined
    std::uint64_t nodes = 0;     // search states visited
    OracleStatus status = OracleStatus::exact;
};

// Exhaustive maximum color count over complete connected edge colorings of
// K_n, for 2 <= n <= 6 (n = 6 only within a generous node budget). Colorings
// are enumerated once per color-relabeling class via restricted-growth
// strings, scanning the target count downward, and each witness is certified
// by verify() rather than by the search's own pruning. On budget exhaustion
// the status turns incomplete and the result carries the best witness found.
OracleResult exact_psi_c(int n, const OracleOptions& options = {});

// Leaves of the enumeration with pruning disabled and no color cap: the
// number of distinct edge partitions of K_n, a Bell number. Supported for
// 2 <= n <= 5.
std::uint64_t count_edge_partitions(int n);

} // namespace psic
