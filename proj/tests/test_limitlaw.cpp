#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "riffle/limitlaw.hpp"

using namespace riffle;

TEST_SUITE("limitlaw")
{
    TEST_CASE("half-normal moments")
    {
        CHECK(half_normal_moment(0) == doctest::Approx(1));
        CHECK(half_normal_moment(1) == doctest::Approx(1 / std::sqrt(M_PI)));
        CHECK(half_normal_moment(2) == doctest::Approx(0.5));
        CHECK(half_normal_moment(3) == doctest::Approx(1 / std::sqrt(M_PI)));
        for (unsigned k = 1; k <= 30; ++k)
            CHECK(gamma_half(k) == doctest::Approx(std::tgamma(k / 2.0)).epsilon(1e-13));
        CHECK_THROWS(gamma_half(0));
    }

    TEST_CASE("limit moments")
    {
        const double rp = std::sqrt(M_PI);
        CHECK(limit_moment(0) == doctest::Approx(1));
        CHECK(limit_moment(1) == doctest::Approx(2 / rp).epsilon(1e-14));
        CHECK(limit_moment(1) == doctest::Approx(1.1283791670955126));
        CHECK(limit_moment(2) == doctest::Approx(1 + 2 / M_PI).epsilon(1e-14));
        CHECK(limit_moment(3) == doctest::Approx(5 / rp).epsilon(1e-14));
        CHECK(limit_moment(4) == doctest::Approx(8 / M_PI + 3).epsilon(1e-14));
        CHECK(limit_moment(5) == doctest::Approx(43 / (2 * rp)).epsilon(1e-14));
        double fact = 1;
        for (unsigned s = 1; s <= 20; ++s) {
            fact *= (2 * s - 1) * (2 * s);
            CHECK(limit_moment(s) <= fact);
        }
    }

    TEST_CASE("density")
    {
        CHECK(LimitLaw::density(0) == 0);
        CHECK(LimitLaw::density(-1) == 0);
        CHECK(LimitLaw::density(2 / std::sqrt(M_PI)) == doctest::Approx(0.62548).epsilon(5e-5 / 0.62548));
        for (int i = 0; i < 10000; ++i) {
            const double x = i * 8.0 / 9999;
            REQUIRE(std::abs(LimitLaw::density(x) - LimitLaw::density_erf_form(x)) <= 1e-12);
            REQUIRE(LimitLaw::density(x) >= 0);
        }
        CHECK(std::abs(numeric_total_mass() - 1) <= 1e-10);
    }

    TEST_CASE("density is the convolution of two half-normals")
    {
        for (double x : {0.1, 0.5, 1.0, 1.7, 2.5, 4.0, 6.0})
            CHECK(std::abs(oracle::convolved_density(x) - LimitLaw::density(x)) <= 1e-6);
    }

    TEST_CASE("cdf")
    {
        CHECK(LimitLaw::cdf(0) == 0);
        double prev = 0;
        for (int i = 0; i <= 10000; ++i) {
            const double c = LimitLaw::cdf(i * 1e-3);
            REQUIRE(c >= prev);
            prev = c;
        }
        CHECK(prev == doctest::Approx(1).epsilon(1e-12));
        for (double x : {0.2, 1.0, 1.1283791670955126, 2.0, 3.5})
            CHECK(std::abs(LimitLaw::cdf(x) - LimitLaw::cdf_by_quadrature(x)) <= 1e-12);
        for (double p : {0.01, 0.25, 0.5, 0.9, 0.999})
            CHECK(LimitLaw::cdf(LimitLaw::quantile(p)) == doctest::Approx(p).epsilon(1e-12));
    }

    TEST_CASE("numeric moments")
    {
        for (unsigned s = 0; s <= 8; ++s)
            CHECK(std::abs(numeric_limit_moment(s) - limit_moment(s)) <= 1e-6);
    }

    TEST_CASE("linear exponential law")
    {
        CHECK(linexp_cdf(0, 1.3) == 0);
        CHECK(linexp_cdf(2, 0) == doctest::Approx(1 - std::exp(-1.0)).epsilon(1e-15));
        CHECK(linexp_cdf(60, 0.5) == doctest::Approx(1));
        LinExpLaw law{1.0};
        double prev = 0;
        for (int i = 0; i <= 100; ++i) {
            CHECK(law.cdf(i * 0.1) >= prev);
            prev = law.cdf(i * 0.1);
        }
        CHECK_THROWS(linexp_cdf(1, -1));
    }

    TEST_CASE("main terms")
    {
        CHECK(moment_asymptotic_main_term(77, 0) == 1);
        CHECK(moment_asymptotic_main_term(2000, 3) ==
              doctest::Approx(5 / std::sqrt(M_PI) * std::pow(2000, 1.5)).epsilon(1e-13));
        const double gap = moment_leading_term_4L(500, 1) / ((2 / std::sqrt(M_PI)) * std::sqrt(2000.0)) - 1;
        CHECK(std::abs(gap) <= 0.02);
        CHECK(central_binomial_bridge_ratio(500) == doctest::Approx(1).epsilon(1e-3));
        // 4L C(2L,L)/4^L at L=1 is 2.
        CHECK(moment_leading_term_4L(1, 1) == doctest::Approx(2));
        CHECK_THROWS(moment_leading_term_4L(10, 6));
    }
}
