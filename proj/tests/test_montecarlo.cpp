#include <doctest.h>

#include <cmath>
#include <numeric>

#include "riffle/exactdist.hpp"
#include "riffle/limitlaw.hpp"
#include "riffle/montecarlo.hpp"

using namespace riffle;

namespace
{
double within_sigma(double hat, double p, double N) { return std::abs(hat - p) / std::sqrt(p * (1 - p) / N); }
} // namespace

TEST_SUITE("montecarlo")
{
    TEST_CASE("small decks reproduce the exact masses")
    {
        const std::uint64_t N = 1000000;
        auto r3 = simulate(3, N, 5, 2);
        CHECK(within_sigma(r3.counts[3] / double(N), 0.5, N) <= 4);
        auto r4 = simulate(4, N, 6, 2);
        CHECK(within_sigma(r4.counts[2] / double(N), 3.0 / 16, N) <= 4);
    }

    TEST_CASE("report invariants")
    {
        auto r = simulate(20, 20000, 9);
        CHECK(std::accumulate(r.counts.begin(), r.counts.end(), std::uint64_t{0}) == 20000);
        CHECK(r.counts.size() == 21);
        REQUIRE(r.tv_to_exact.has_value());
        SimulationReport copy = r;
        copy.mean = copy.variance = -1;
        summarize(copy);
        CHECK(copy.mean == r.mean);
        CHECK(copy.variance == r.variance);
        CHECK(ks_distance_to_limit(copy) == r.ks_to_limit);
        CHECK(simulate(600, 10, 1).tv_to_exact.has_value() == false);
    }

    TEST_CASE("worker count does not change the report")
    {
        auto a = simulate(50, 30001, 42, 1);
        for (int w : {2, 3, 7}) {
            auto b = simulate(50, 30001, 42, w);
            CHECK(b.counts == a.counts);
            CHECK(b.mean == a.mean);
            CHECK(b.ks_to_limit == a.ks_to_limit);
        }
        CHECK(simulate(50, 30001, 43).counts != a.counts);
    }

    TEST_CASE("empirical mean matches the exact mean")
    {
        const std::uint64_t N = 200000;
        for (int n : {8, 16, 64}) {
            auto exact = pmf_x(n);
            const double mean = to_double(exact.mean());
            const double var = to_double(raw_moments(n, 2)[2]) - mean * mean;
            auto r = simulate(n, N, 100 + n, 2);
            INFO("n=" << n);
            CHECK(std::abs(r.mean - mean) <= 4 * std::sqrt(var / N));
        }
    }

    TEST_CASE("total variation to the exact law at n=64")
    {
        auto r = simulate(64, 1000000, 3, 2);
        REQUIRE(r.tv_to_exact.has_value());
        CHECK(*r.tv_to_exact <= 0.01);
    }

    TEST_CASE("distance statistics")
    {
        // Exact law against its own CDF evaluated at the lattice: zero distance.
        auto p = pmf_x(30);
        auto exact = p.to_doubles();
        auto own_cdf = [&](double x) {
            double c = 0;
            for (std::size_t k = 0; k < exact.size() && k <= std::floor(x * std::sqrt(30.0) + 1e-9); ++k)
                c += exact[k];
            return c;
        };
        CHECK(ks_distance(p, 30, own_cdf) <= 1e-12);
        SimulationReport r;
        r.n = 1;
        r.samples = 4;
        r.counts = {1, 3};
        CHECK(total_variation(r, ExactPmf({1, 1}, 2)) == doctest::Approx(0.25));
        CHECK_THROWS(simulate(0, 10, 1));
        CHECK_THROWS(simulate(5, 0, 1));
    }
}
