#ifndef RIFFLE_MONTECARLO_HPP
#define RIFFLE_MONTECARLO_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "riffle/rational.hpp"

namespace riffle
{

/// Decks up to this size get a total-variation distance to the exact law.
inline constexpr int kDefaultExactThreshold = 512;

struct SimulationReport
{
    int n = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    /// counts[k] = number of games with k correct guesses, k = 0..n.
    std::vector<std::uint64_t> counts;
    double mean = 0;
    double variance = 0;
    double ks_to_limit = 0;
    std::optional<double> tv_to_exact;
};

/// Play N games with the canonical optimal guesses. Sample i draws from the
/// stream keyed by (seed, i), so the report does not depend on `workers`.
SimulationReport simulate(int n, std::uint64_t samples, std::uint64_t seed, int workers = 1,
                          int exact_threshold = kDefaultExactThreshold);

/// Mean and variance of the empirical law; fills the fields of `report`.
void summarize(SimulationReport& report);

/// sup over k of |#{X <= k}/N - cdf(k / sqrt(n))|, i.e. the distance at the
/// jump points of the empirical CDF of X_n/sqrt(n).
double ks_distance(const SimulationReport& report, const std::function<double(double)>& cdf);

/// Same statistic against the limit law.
double ks_distance_to_limit(const SimulationReport& report);

/// sup over k of |F_exact(k) - cdf(k/sqrt(n))| for an exact pmf.
double ks_distance(const ExactPmf& pmf, int n, const std::function<double(double)>& cdf);

/// (1/2) sum |empirical - exact|.
double total_variation(const SimulationReport& report, const ExactPmf& exact);

} // namespace riffle

#endif
