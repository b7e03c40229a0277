#pragma once

#include <iosfwd>
#include <optional>

namespace psic {

// How many color classes an edge coloring of K_n can have when its smallest
// class holds x edges: the partition of the n(n-1)/2 edges caps the count at
// n(n-1)/(2x).
double partition_bound(double x, int n);

// The competing cap from incidences at the smallest class:
// (n(x^2 + 2x + 1) - x^3 - 2x^2 - 2x - 1) / (2x).
double incidence_bound(double x, int n);

// Smallest-class size where the two caps cross: (sqrt(4n - 3) - 1) / 2.
// At this point both bounds equal n(n-1)/(sqrt(4n-3) - 1).
double crossing_point(int n);

// floor(n(n-1)/(sqrt(4n-3) - 1)); the approximate upper bound, valid for
// n >= 8. Kept separate from the rigorous tabulated upper bounds.
long long approx_upper_bound(int n);

// (n-1)^{3/2} / 2: a complete connected coloring with this many colors exists.
double classic_lower_bound(int n);

// (n-1)(sqrt(n/2 + 1/16) + 1/4): no coloring with this many colors or more is
// complete and connected.
double classic_upper_bound(int n);

bool is_odd_prime_power(long long q);

struct ProjectivePlaneBound {
    int n = 0;         // q^2 + q + 1
    long long bound = 0; // ceil(q/2) * n
};

// Lower bound from the projective plane of odd prime-power order q. For such
// q the approximate upper bound at n = q^2+q+1 collapses to the same number.
ProjectivePlaneBound projective_lower_bound(int q);

struct BoundsRecord {
    int n = 0;
    std::optional<int> exact;          // known exactly only for n <= 7
    std::optional<int> known_lower;
    std::optional<int> improved_lower; // best values found by the genetic search
    std::optional<int> known_upper;
    std::optional<long long> approx_upper; // n >= 8 only
};

// Reference bounds for 2 <= n <= 31; nullopt outside that range. Analytic
// bounds remain available through the functions above.
std::optional<BoundsRecord> known_bounds(int n);

// CSV rows n,exact,known_lower,improved_lower,approx_upper,known_upper,
// classic_lower,classic_upper for the requested range.
void write_bounds_csv(std::ostream& out, int n_min, int n_max);

} // namespace psic
