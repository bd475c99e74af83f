#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "riffle/exactdist.hpp"
#include "riffle/strategy.hpp"

using namespace riffle;

namespace
{
QPolynomial from_ll(const std::vector<long long>& c)
{
    std::vector<mpz_class> v;
    for (auto x : c)
        v.emplace_back(static_cast<long>(x));
    return QPolynomial(std::move(v));
}
} // namespace

TEST_SUITE("exactdist")
{
    TEST_CASE("small g polynomials")
    {
        CHECK(g_poly(0, 0) == QPolynomial{1});
        CHECK(g_poly(1, 1) == QPolynomial{1, 1});
        CHECK(g_poly(2, 1) == QPolynomial{0, 1, 2});
        for (int m = 0; m <= 30; ++m)
            CHECK(g_poly(m, 0).at_one() == 1);
    }

    TEST_CASE("g agrees with the two-dimensional recurrence")
    {
        for (int M = 0; M <= 24; ++M) {
            auto diag = g_antidiagonal(M);
            REQUIRE(diag.size() == static_cast<std::size_t>(M + 1));
            for (int a = 0; a <= M; ++a)
                REQUIRE(diag[a] == from_ll(oracle::g_coeffs(a, M - a)));
        }
    }

    TEST_CASE("g evaluates to binomial coefficients")
    {
        for (int M : {50, 123, 400}) {
            auto diag = g_antidiagonal(M);
            for (int a = 0; a <= M; a += 7)
                REQUIRE(diag[a].at_one() == binomial(M, a));
        }
    }

    TEST_CASE("row-sum Taylor coefficients")
    {
        for (int M = 0; M <= 40; ++M)
            REQUIRE(g_row_sum_taylor(M, 5) == g_row_sum(M).taylor_at_one(5));
    }

    TEST_CASE("f_n")
    {
        CHECK(f_poly(4) == QPolynomial{4, 4, 3, 0, 5});
        CHECK(f_poly(5).at_one() == 32);
        CHECK_THROWS_AS(f_poly(3), std::invalid_argument);
        CHECK_THROWS_AS(f_poly(5000), CapacityError);
        for (int n = 4; n <= 200; ++n) {
            auto f = f_poly(n);
            REQUIRE(f.is_nonnegative());
            REQUIRE(f.at_one() == pow2(n));
        }
    }

    TEST_CASE("small deck tables")
    {
        auto p3 = pmf_x(3);
        CHECK(p3.probability(3) == mpq_class(1, 2));
        CHECK(p3.probability(2) == 0);
        CHECK(p3.probability(1) == mpq_class(1, 4));
        CHECK(p3.probability(0) == mpq_class(1, 4));
        auto p4 = pmf_x(4);
        CHECK(p4.denominator() == 16);
        CHECK(p4.numerators() == std::vector<mpz_class>{4, 4, 3, 0, 5});
    }

    TEST_CASE("closed route equals the reference enumeration")
    {
        for (int n = 1; n <= 12; ++n) {
            auto counts = oracle::match_counts(n, optimal_guesses(n));
            std::vector<mpz_class> num;
            for (long c : counts)
                num.emplace_back(c);
            INFO("n=" << n);
            REQUIRE(pmf_x(n) == ExactPmf(num, pow2(n)));
            if (n >= 4)
                REQUIRE(pmf_x_closed_form(n) == pmf_x_enumerated(n));
        }
    }

    TEST_CASE("law of Y")
    {
        auto y11 = pmf_y(1, 1);
        CHECK(y11.probability(0) == mpq_class(1, 2));
        CHECK(y11.probability(1) == mpq_class(1, 2));
        CHECK(pmf_y(0, 5).probability(0) == 1);
        auto y21 = pmf_y(2, 1);
        CHECK(y21.probability(1) == mpq_class(1, 3));
        CHECK(y21.probability(2) == mpq_class(2, 3));
        CHECK_THROWS_AS(pmf_y(0, 0), std::invalid_argument);
        CHECK_THROWS_AS(pmf_y(-1, 2), std::invalid_argument);
        CHECK_THROWS_AS(pmf_y(3000, 3000), CapacityError);
    }

    TEST_CASE("floating law of Y")
    {
        auto f = pmf_y_float(2, 1);
        CHECK(f[1] == doctest::Approx(1.0 / 3).epsilon(1e-15));
        CHECK(f[2] == doctest::Approx(2.0 / 3).epsilon(1e-15));
        for (auto [a, b] : {std::pair{30, 25}, {17, 40}, {60, 0}, {0, 9}}) {
            auto exact = pmf_y(a, b).to_doubles();
            auto fl = pmf_y_float(a, b);
            REQUIRE(fl.size() == static_cast<std::size_t>(a + 1));
            for (std::size_t k = 0; k < fl.size(); ++k)
                CHECK(fl[k] == doctest::Approx(k < exact.size() ? exact[k] : 0.0).epsilon(1e-12));
        }
        auto big = pmf_y_float(900, 858);
        double total = 0, below = 0;
        for (std::size_t k = 0; k < big.size(); ++k) {
            total += big[k];
            if (k <= 30)
                below += big[k];
        }
        CHECK(total == doctest::Approx(1).epsilon(1e-9));
        const double t = 42.0 / 30;
        CHECK(std::abs(below - (1 - std::exp(-(2 * t + 1) / 4))) <= 0.06);
    }

    TEST_CASE("moments")
    {
        auto fm = factorial_moments(4, 6);
        CHECK(fm[0] == 1);
        CHECK(fm[1] == mpq_class(15, 8));
        CHECK(fm[5] == 0);
        auto raw = raw_moments(4, 2);
        CHECK(raw[2] == 6);
        CHECK(stirling2(5, 2) == 15);
        CHECK(stirling2(6, 3) == 90);
        CHECK(stirling2(0, 0) == 1);
        CHECK(stirling2(4, 0) == 0);
        for (int n = 1; n <= 40; ++n) {
            auto p = pmf_x(n);
            auto f = factorial_moments(n, 6);
            auto r = raw_moments(n, 3);
            for (unsigned s = 0; s <= 6; ++s)
                REQUIRE(f[s] == p.falling_moment(s));
            mpq_class direct = 0;
            for (std::size_t k = 0; k < p.size(); ++k)
                direct += p.probability(k) * static_cast<unsigned long>(k * k * k);
            REQUIRE(r[3] == direct);
            REQUIRE(r[1] == p.mean());
        }
    }
}
