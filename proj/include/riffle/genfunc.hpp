#ifndef RIFFLE_GENFUNC_HPP
#define RIFFLE_GENFUNC_HPP

#include <vector>

#include "riffle/qpolynomial.hpp"
#include "riffle/series.hpp"

namespace riffle
{

/// u-resolved series is only built up to this order.
inline constexpr int kMaxUResolvedOrder = 40;
/// Order bound for the w-expanded series g~_s(z).
inline constexpr int kMaxTildeOrder = 8192;

/// P(t) = (1 - sqrt(1-4t))/2, truncated after t^order.
struct CatalanSeries
{
    IntSeries p;

    /// P^2 - P + t, which vanishes identically.
    IntSeries defining_residual() const;
};

CatalanSeries catalan_series(int order);

/// sqrt(1-4t) through the binomial series, exact.
IntSeries sqrt_one_minus_4t(int order);

/// P(z^2), truncated after z^order.
IntSeries catalan_in_z_squared(int order);

/// u1(z) = P(z^2)/z, the small root of z u^2 - u + z.
IntSeries kernel_small_root(int order);

/// g~_s(z) for s = 0..s_max, each truncated after z^order. The
/// coefficient [z^M] g~_s equals [w^s] sum_a g_{a,M-a}(1+w).
std::vector<IntSeries> tilde_g_series(int order, unsigned s_max);

/// Coefficients g~_{M,d}(q) of z^M u^d for 0 <= M <= order, |d| <= M + 2.
class UResolvedSeries
{
  public:
    explicit UResolvedSeries(int order);

    int order() const { return order_; }
    int width() const { return order_ + 2; }
    /// Zero outside the stored window.
    const QPolynomial& coefficient(int M, int d) const;
    QPolynomial& at(int M, int d);

  private:
    int order_;
    std::vector<std::vector<QPolynomial>> rows_;
};

/// G~(z,u,q) from the closed form, with the kernel z u^2 - u + z inverted
/// by the recurrence in d. Expected to agree with g_{(M-d)/2,(M+d)/2}(q).
UResolvedSeries tilde_G_series(int order);

/// q^2 (z E)^d / (1 - 2 z^2 q E), E = P(z^2)/z^2, for d >= 2. The
/// coefficient of z^{m1+m2} with m1 - m2 = d is g_{m1,m2}(q).
QSeries fixed_difference_gf(int d, int order);

/// 2^{s/2} Gamma((s+1)/2) n^{s/2} / (s! sqrt(pi)); the main term of
/// [z^n] g~_s(z) divided by 2^n.
double singular_main_term_scaled(unsigned s, long n);

/// Main term of [z^n] g~_s(z) itself; overflows to inf past n ~ 1023.
double singular_coefficient_asymptotics(unsigned s, long n);

/// exact / (2^n * singular_main_term_scaled(s, n)) without overflow.
double singular_ratio(const mpz_class& exact, unsigned s, long n);

} // namespace riffle

#endif
