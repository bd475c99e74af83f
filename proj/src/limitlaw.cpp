#include "riffle/limitlaw.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>

#include "riffle/rational.hpp"

namespace riffle
{

namespace
{

constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kQuadTolerance = 1e-13;

template <class F>
double integrate(F f, double a, double b)
{
    using boost::math::quadrature::gauss_kronrod;
    return gauss_kronrod<double, 31>::integrate(f, a, b, 15, kQuadTolerance);
}

} // namespace

double gamma_half(unsigned k)
{
    if (k == 0)
        throw std::domain_error("gamma_half: pole at 0");
    // Gamma(x+1) = x Gamma(x), from Gamma(1) = 1 or Gamma(1/2) = sqrt(pi).
    double g = (k % 2 == 0) ? 1.0 : kSqrtPi;
    for (unsigned j = (k % 2 == 0) ? 2 : 1; j + 2 <= k; j += 2)
        g *= j / 2.0;
    return g;
}

double half_normal_moment(unsigned s) { return gamma_half(s + 1) / kSqrtPi; }

double limit_moment(unsigned s)
{
    double total = 0, c = 1;
    for (unsigned k = 0; k <= s; ++k) {
        total += c * half_normal_moment(k) * half_normal_moment(s - k);
        c = c * (s - k) / (k + 1);
    }
    return total;
}

double LimitLaw::density(double x)
{
    if (x <= 0)
        return 0.0;
    const double phi = std::exp(-x * x / 2) / std::sqrt(2 * std::numbers::pi);
    const double big_phi = std::erfc(-x / std::numbers::sqrt2) / 2;
    return 4 * phi * (2 * big_phi - 1);
}

double LimitLaw::density_erf_form(double x)
{
    if (x <= 0)
        return 0.0;
    return 2 * std::numbers::sqrt2 / kSqrtPi * std::exp(-x * x / 2) * std::erf(x / std::numbers::sqrt2);
}

double LimitLaw::cdf(double x)
{
    if (x <= 0)
        return 0.0;
    const double e = std::erf(x / std::numbers::sqrt2);
    return e * e;
}

double LimitLaw::cdf_by_quadrature(double x)
{
    if (x <= 0)
        return 0.0;
    return integrate(density, 0.0, x);
}

double LimitLaw::quantile(double p)
{
    if (!(p >= 0 && p < 1))
        throw std::domain_error("LimitLaw::quantile: p must lie in [0, 1)");
    if (p == 0)
        return 0.0;
    // cdf = erf(x/sqrt2)^2 inverts in closed form through erf^{-1}; bracket and
    // polish instead to stay on the same erf implementation.
    auto f = [p](double x) { return cdf(x) - p; };
    double hi = 1;
    while (f(hi) < 0)
        hi *= 2;
    boost::math::tools::eps_tolerance<double> tol(50);
    std::uintmax_t iters = 200;
    auto [a, b] = boost::math::tools::toms748_solve(f, 0.0, hi, tol, iters);
    return (a + b) / 2;
}

double linexp_cdf(double z, double t)
{
    if (t < 0)
        throw std::domain_error("linexp_cdf: t must be non-negative");
    if (z <= 0)
        return 0.0;
    return -std::expm1(-z * (2 * t + z) / 4);
}

double moment_asymptotic_main_term(long n, unsigned s)
{
    if (n < 1)
        throw std::invalid_argument("moment_asymptotic_main_term: n must be positive");
    return limit_moment(s) * std::pow(static_cast<double>(n), s / 2.0);
}

double moment_leading_term_4L(long L, unsigned s)
{
    if (L < 1)
        throw std::invalid_argument("moment_leading_term_4L: L must be positive");
    const double c = ratio_to_double(binomial(2 * L, L), pow2(2 * L));
    const double l = static_cast<double>(L);
    switch (s) {
    case 1:
        return 4 * l * c;
    case 2:
        return 16 * l * l * c * c / 2 + 4 * l;
    case 3:
        return 40 * l * l * c;
    case 4:
        return 256 * l * l * l * c * c / 2 + 48 * l * l;
    case 5:
        return 688 * l * l * l * c;
    default:
        throw std::invalid_argument("moment_leading_term_4L: s must be in 1..5");
    }
}

double central_binomial_bridge_ratio(long L)
{
    if (L < 1)
        throw std::invalid_argument("central_binomial_bridge_ratio: L must be positive");
    const double c = ratio_to_double(binomial(2 * L, L), pow2(2 * L));
    return 2.0 * static_cast<double>(L) * c / std::sqrt(4.0 * static_cast<double>(L) / std::numbers::pi);
}

double numeric_limit_moment(unsigned s)
{
    const double upper = 8 + std::sqrt(2.0 * s);
    return integrate([s](double x) { return std::pow(x, s) * LimitLaw::density(x); }, 0.0, upper);
}

double numeric_total_mass()
{
    return integrate(LimitLaw::density, 0.0, std::numeric_limits<double>::infinity());
}

} // namespace riffle
