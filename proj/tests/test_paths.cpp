#include <doctest.h>

#include "riffle/exactdist.hpp"
#include "riffle/paths.hpp"

using namespace riffle;

TEST_SUITE("paths")
{
    TEST_CASE("path statistics")
    {
        DyckPath dd(0b11, 2);
        CHECK(dd.final_altitude() == -2);
        CHECK(dd.down_visits_low() == 2);
        CHECK(dd.returns_to_zero() == 0);
        DyckPath dudd(0b1101, 4);
        CHECK(dudd.steps() == std::vector<int>{-1, 1, -1, -1});
        CHECK(dudd.down_visits_low() == 3);
        CHECK(dudd.returns_to_zero() == 1);
    }

    TEST_CASE("Y oracle examples")
    {
        CHECK(y_oracle_pmf(2, 0).probability(2) == 1);
        auto y11 = y_oracle_pmf(1, 1);
        CHECK(y11.probability(0) == mpq_class(1, 2));
        CHECK(y11.probability(1) == mpq_class(1, 2));
        CHECK(y_oracle_pmf(0, 6).probability(0) == 1);
    }

    TEST_CASE("W oracle examples")
    {
        CHECK(w_oracle_pmf(1, 1).probability(1) == 1);
        CHECK(w_oracle_pmf(2, 0).probability(0) == 1);
        // UDDD and DUDD return once, DDUD and DDDU never.
        auto w31 = w_oracle_pmf(3, 1);
        CHECK(w31.probability(0) == mpq_class(1, 2));
        CHECK(w31.probability(1) == mpq_class(1, 2));
    }

    TEST_CASE("path totals and support")
    {
        for (int L = 1; L <= 12; ++L)
            for (int m1 = 0; m1 <= L; ++m1) {
                auto p = y_oracle_poly(m1, L - m1);
                REQUIRE(p.at_one() == binomial(L, m1));
                REQUIRE(p.degree() <= L);
            }
    }

    TEST_CASE("oracle matches the recurrence")
    {
        for (int L = 1; L <= 12; ++L)
            for (int m1 = 0; m1 <= L; ++m1)
                REQUIRE(y_oracle_pmf(m1, L - m1) == pmf_y(m1, L - m1));
    }

    TEST_CASE("worker count does not change the result")
    {
        auto one = y_oracle_poly(9, 8, 1);
        CHECK(y_oracle_poly(9, 8, 3) == one);
        CHECK(y_oracle_poly(9, 8, 8) == one);
    }

    TEST_CASE("shift relation diagnostics")
    {
        auto r40 = shift_relation_check(4, 0);
        CHECK(r40.total_variation >= 0);
        auto r62 = shift_relation_check(6, 2);
        CHECK(r62.total_variation >= 0);
        CHECK(r62.total_variation <= 1);
        CHECK_NOTHROW(shift_relation_check(3, 1));
        CHECK_THROWS_AS(shift_relation_check(2, 1), std::invalid_argument);
    }

    TEST_CASE("bounds")
    {
        CHECK_THROWS_AS(y_oracle_pmf(12, 12), CapacityError);
        CHECK_THROWS_AS(y_oracle_pmf(-1, 2), std::invalid_argument);
    }
}
