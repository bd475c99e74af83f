#ifndef RIFFLE_LIMITLAW_HPP
#define RIFFLE_LIMITLAW_HPP

namespace riffle
{

/// Gamma(k/2) for integer k >= 1, exact up to rounding of sqrt(pi).
double gamma_half(unsigned k);

/// E(H^s) = Gamma((s+1)/2)/sqrt(pi) for H with density (2/sqrt(pi)) e^{-x^2}.
double half_normal_moment(unsigned s);

/// mu~_s = E((H1+H2)^s), H1, H2 independent copies of H.
double limit_moment(unsigned s);

/// Limit law of X_n/sqrt(n): density 4 phi(x) (2 Phi(x) - 1) on x >= 0.
struct LimitLaw
{
    static double density(double x);
    /// (2 sqrt 2/sqrt pi) e^{-x^2/2} erf(x/sqrt 2); same function.
    static double density_erf_form(double x);
    /// erf(x/sqrt 2)^2.
    static double cdf(double x);
    /// Integral of the density from 0 to x by adaptive quadrature.
    static double cdf_by_quadrature(double x);
    static double quantile(double p);
    static double moment(unsigned s) { return limit_moment(s); }
};

/// 1 - exp(-z (2t + z)/4).
double linexp_cdf(double z, double t);

struct LinExpLaw
{
    double t;
    double cdf(double z) const { return linexp_cdf(z, t); }
};

/// mu~_s n^{s/2}.
double moment_asymptotic_main_term(long n, unsigned s);

/// Leading terms of E(X_n^s) for n = 4L, in the form with central binomial
/// coefficients, s in 1..5; e.g. s=1 gives 4L C(2L,L)/4^L.
double moment_leading_term_4L(long L, unsigned s);

/// 2L C(2L,L)/4^L divided by sqrt(n/pi), n = 4L. Tends to 1.
double central_binomial_bridge_ratio(long L);

/// Integral of x^s f(x) over [0, 8 + sqrt(2s)] by adaptive quadrature.
double numeric_limit_moment(unsigned s);

/// Integral of f over [0, inf) by adaptive quadrature.
double numeric_total_mass();

} // namespace riffle

#endif
