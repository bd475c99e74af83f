#ifndef RIFFLE_EXACTDIST_HPP
#define RIFFLE_EXACTDIST_HPP

#include <vector>

#include "riffle/qpolynomial.hpp"
#include "riffle/rational.hpp"
#include "riffle/shuffle.hpp"

namespace riffle
{

/// Grid bound (m1 + m2) for the full-polynomial recurrence.
inline constexpr int kDefaultMaxGridSum = 4096;
/// Largest deck for which the full exact pmf of X_n is produced.
inline constexpr int kDefaultMaxExactPmf = 2048;
/// Grid bound for the floating-point pmf of Y.
inline constexpr int kDefaultMaxFloatGridSum = 4000;
/// Below this deck size the closed formula for f_n does not apply.
inline constexpr int kMinClosedFormDeck = 4;

/// g_{m1,m2}(q) from g = q^[c == m1] g_{m1-1,m2} + g_{m1,m2-1},
/// c = floor((m1+m2)/2) + 1, g_{0,0} = 1.
QPolynomial g_poly(int m1, int m2, int max_grid_sum = kDefaultMaxGridSum);

/// g_{a, M-a} for a = 0..M.
std::vector<QPolynomial> g_antidiagonal(int M, int max_grid_sum = kDefaultMaxGridSum);

/// sum_{a=0}^{M} g_{a, M-a}(q).
QPolynomial g_row_sum(int M, int max_grid_sum = kDefaultMaxGridSum);

/// [w^s] sum_a g_{a,M-a}(1+w) for s = 0..s_max, without forming the full
/// polynomials. Cost O(M^2 s_max) big-integer additions.
std::vector<mpz_class> g_row_sum_taylor(int M, unsigned s_max);

/// f_n(q) = 4q^4 - 2(q^2+q^3) + (sum_a g_{a,h-a}) (sum_b g_{b,n-h-b}),
/// h = ceil(n/2). Requires n >= 4; smaller decks go through enumeration.
QPolynomial f_poly(int n, int max_n = kDefaultMaxExactPmf);

/// Exact law of the number X_n of correct guesses under the canonical
/// optimal strategy, over the structural denominator 2^n. Decks below 4
/// are enumerated, larger ones use f_poly.
ExactPmf pmf_x(int n, int max_n = kDefaultMaxExactPmf);
ExactPmf pmf_x_closed_form(int n, int max_n = kDefaultMaxExactPmf);
ExactPmf pmf_x_enumerated(int n, int max_n = kDefaultMaxEnumeration);

/// Law of Y_{m1,m2}: coefficients of g_{m1,m2} over C(m1+m2, m1).
ExactPmf pmf_y(int m1, int m2, int max_grid_sum = kDefaultMaxGridSum);

/// Floating-point law of Y_{m1,m2} (support 0..m1), computed on the grid
/// of conditional probabilities so that no value exceeds 1.
std::vector<double> pmf_y_float(int m1, int m2, int max_grid_sum = kDefaultMaxFloatGridSum);

/// E[(X_n)_s] for s = 0..s_max, exact. Entries above n are zero.
std::vector<mpq_class> factorial_moments(int n, unsigned s_max);

/// E[X_n^s] for s = 0..s_max via Stirling numbers of the second kind.
std::vector<mpq_class> raw_moments(int n, unsigned s_max);

mpz_class stirling2(unsigned s, unsigned k);

} // namespace riffle

#endif
