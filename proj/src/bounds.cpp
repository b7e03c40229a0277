#include "psic/bounds.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

namespace psic {

double partition_bound(double x, int n) {
    if (n < 2)
        throw std::domain_error("partition_bound: n must be at least 2, got " + std::to_string(n));
    if (!(x > 0.0))
        throw std::domain_error("partition_bound: class size must be positive");
    return static_cast<double>(n) * (n - 1) / (2.0 * x);
}

double incidence_bound(double x, int n) {
    if (!(x > 0.0))
        throw std::domain_error("incidence_bound: class size must be positive");
    const double nn = static_cast<double>(n);
    return (nn * (x * x + 2.0 * x + 1.0) - x * x * x - 2.0 * x * x - 2.0 * x - 1.0) / (2.0 * x);
}

double crossing_point(int n) {
    if (n < 2)
        throw std::domain_error("crossing_point: n must be at least 2, got " + std::to_string(n));
    return (std::sqrt(4.0 * n - 3.0) - 1.0) / 2.0;
}

long long approx_upper_bound(int n) {
    if (n < 8)
        throw std::domain_error("approx_upper_bound: defined for n >= 8, got " + std::to_string(n));
    const double value = static_cast<double>(n) * (n - 1) / (std::sqrt(4.0 * n - 3.0) - 1.0);
    return static_cast<long long>(std::floor(value));
}

double classic_lower_bound(int n) {
    if (n < 2)
        throw std::domain_error("classic_lower_bound: n must be at least 2, got " + std::to_string(n));
    return std::pow(static_cast<double>(n - 1), 1.5) / 2.0;
}

double classic_upper_bound(int n) {
    if (n < 2)
        throw std::domain_error("classic_upper_bound: n must be at least 2, got " + std::to_string(n));
    return (n - 1) * (std::sqrt(n / 2.0 + 1.0 / 16.0) + 0.25);
}

bool is_odd_prime_power(long long q) {
    if (q < 3 || q % 2 == 0)
        return false;
    long long p = 0;
    for (long long d = 3; d * d <= q; d += 2)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0)
        return true; // q itself is prime
    while (q % p == 0)
        q /= p;
    return q == 1;
}

ProjectivePlaneBound projective_lower_bound(int q) {
    if (!is_odd_prime_power(q))
        throw std::domain_error("projective_lower_bound: q must be an odd prime power >= 3, got " +
                                std::to_string(q));
    ProjectivePlaneBound out;
    out.n = q * q + q + 1;
    out.bound = static_cast<long long>((q + 1) / 2) * out.n; // ceil(q/2), q odd
    return out;
}

namespace {

constexpr int kTableMinN = 2;
constexpr int kTableMaxN = 31;

// Published upper and lower bounds for 2 <= n <= 31; entries for n <= 7 are
// exact. Zeros in the improved row mean the genetic search did not move that
// entry.
constexpr std::array<int, 30> kKnownUpper = {1,  3,  4,  6,  7,  10, 14, 18, 22, 25,
                                             28, 31, 34, 37, 40, 45, 51, 57, 63, 70,
                                             74, 78, 82, 86, 90, 94, 98, 102, 106, 116};
constexpr std::array<int, 30> kKnownLower = {1,  3,  4,  6,  7,  10, 11, 12, 13, 14,
                                             19, 26, 27, 28, 29, 30, 31, 32, 33, 42,
                                             43, 44, 45, 46, 47, 48, 49, 50, 51, 93};
constexpr std::array<int, 30> kImprovedLower = {0,  0,  0,  0,  0,  0,  0,  13, 16, 18,
                                                21, 0,  0,  0,  0,  32, 35, 37, 39, 43,
                                                46, 50, 52, 54, 55, 59, 62, 64, 66, 0};

} // namespace

std::optional<BoundsRecord> known_bounds(int n) {
    if (n < kTableMinN || n > kTableMaxN)
        return std::nullopt;
    const std::size_t i = static_cast<std::size_t>(n - kTableMinN);
    BoundsRecord record;
    record.n = n;
    record.known_upper = kKnownUpper[i];
    record.known_lower = kKnownLower[i];
    if (n <= 7)
        record.exact = kKnownLower[i];
    if (kImprovedLower[i] > 0)
        record.improved_lower = kImprovedLower[i];
    if (n >= 8)
        record.approx_upper = approx_upper_bound(n);
    return record;
}

void write_bounds_csv(std::ostream& out, int n_min, int n_max) {
    if (n_min < 2 || n_min > n_max)
        throw std::domain_error("bounds csv: need 2 <= n_min <= n_max");
    out << "n,exact,known_lower,improved_lower,approx_upper,known_upper,classic_lower,classic_upper\n";
    char buffer[64];
    for (int n = n_min; n <= n_max; ++n) {
        const auto record = known_bounds(n);
        out << n << ',';
        if (record && record->exact)
            out << *record->exact;
        out << ',';
        if (record && record->known_lower)
            out << *record->known_lower;
        out << ',';
        if (record && record->improved_lower)
            out << *record->improved_lower;
        out << ',';
        if (n >= 8)
            out << approx_upper_bound(n);
        out << ',';
        if (record && record->known_upper)
            out << *record->known_upper;
        out << ',';
        std::snprintf(buffer, sizeof(buffer), "%.4f", classic_lower_bound(n));
        out << buffer << ',';
        std::snprintf(buffer, sizeof(buffer), "%.4f", classic_upper_bound(n));
        out << buffer << '\n';
    }
}

} // namespace psic
