#include "riffle/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "riffle/exactdist.hpp"
#include "riffle/limitlaw.hpp"
#include "riffle/philox.hpp"
#include "riffle/shuffle.hpp"
#include "riffle/strategy.hpp"

namespace riffle
{

namespace
{

void play_range(int n, std::uint64_t seed, std::uint64_t first, std::uint64_t last, const std::vector<int>& guesses,
                std::vector<std::uint64_t>& counts)
{
    std::vector<int> deck(n);
    for (std::uint64_t i = first; i < last; ++i) {
        RandomStream rng(seed, i);
        sample_shuffle_into(rng, deck);
        ++counts[score(guesses, deck)];
    }
}

} // namespace

SimulationReport simulate(int n, std::uint64_t samples, std::uint64_t seed, int workers, int exact_threshold)
{
    if (n < 1)
        throw std::invalid_argument("simulate: n must be at least 1");
    if (samples < 1)
        throw std::invalid_argument("simulate: need at least one sample");
    workers = std::clamp(workers, 1, 256);
    const auto guesses = optimal_guesses(n);

    std::vector<std::vector<std::uint64_t>> parts(workers, std::vector<std::uint64_t>(n + 1, 0));
    const std::uint64_t chunk = (samples + workers - 1) / workers;
    if (workers == 1) {
        play_range(n, seed, 0, samples, guesses, parts[0]);
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < workers; ++t) {
            const std::uint64_t lo = std::min(samples, chunk * t), hi = std::min(samples, lo + chunk);
            pool.emplace_back([&, t, lo, hi] { play_range(n, seed, lo, hi, guesses, parts[t]); });
        }
    }

    SimulationReport report;
    report.n = n;
    report.samples = samples;
    report.seed = seed;
    report.counts.assign(n + 1, 0);
    for (const auto& part : parts)
        for (int k = 0; k <= n; ++k)
            report.counts[k] += part[k];
    summarize(report);
    report.ks_to_limit = ks_distance_to_limit(report);
    if (n <= exact_threshold)
        report.tv_to_exact = total_variation(report, pmf_x(n));
    return report;
}

void summarize(SimulationReport& report)
{
    const double N = static_cast<double>(report.samples);
    double mean = 0;
    for (std::size_t k = 0; k < report.counts.size(); ++k)
        mean += static_cast<double>(k) * static_cast<double>(report.counts[k]);
    mean /= N;
    double var = 0;
    for (std::size_t k = 0; k < report.counts.size(); ++k) {
        const double d = static_cast<double>(k) - mean;
        var += d * d * static_cast<double>(report.counts[k]);
    }
    report.mean = mean;
    report.variance = var / N;
}

double ks_distance(const SimulationReport& report, const std::function<double(double)>& cdf)
{
    if (report.samples == 0)
        throw std::invalid_argument("ks_distance: empty report");
    const double N = static_cast<double>(report.samples);
    const double scale = std::sqrt(static_cast<double>(report.n));
    std::uint64_t cum = 0;
    double sup = 0;
    for (std::size_t k = 0; k < report.counts.size(); ++k) {
        cum += report.counts[k];
        sup = std::max(sup, std::abs(static_cast<double>(cum) / N - cdf(static_cast<double>(k) / scale)));
    }
    return sup;
}

double ks_distance_to_limit(const SimulationReport& report) { return ks_distance(report, LimitLaw::cdf); }

double ks_distance(const ExactPmf& pmf, int n, const std::function<double(double)>& cdf)
{
    const auto p = pmf.to_doubles();
    const double scale = std::sqrt(static_cast<double>(n));
    double cum = 0, sup = 0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        cum += p[k];
        sup = std::max(sup, std::abs(cum - cdf(static_cast<double>(k) / scale)));
    }
    return sup;
}

double total_variation(const SimulationReport& report, const ExactPmf& exact)
{
    const auto p = exact.to_doubles();
    const double N = static_cast<double>(report.samples);
    const std::size_t len = std::max(p.size(), report.counts.size());
    double tv = 0;
    for (std::size_t k = 0; k < len; ++k) {
        const double e = k < p.size() ? p[k] : 0.0;
        const double h = k < report.counts.size() ? static_cast<double>(report.counts[k]) / N : 0.0;
        tv += std::abs(e - h);
    }
    return tv / 2;
}

} // namespace riffle
