#include "riffle/genfunc.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "riffle/limitlaw.hpp"
#include "riffle/rational.hpp"

namespace riffle
{

namespace
{

void check_order(int order, int bound, const char* what)
{
    if (order < 0)
        throw std::invalid_argument(std::string(what) + ": order must be non-negative");
    if (order > bound)
        throw CapacityError(std::string(what) + ": order " + std::to_string(order) + " exceeds bound " +
                            std::to_string(bound));
}

// 1 - c*P(z^2) as a q-series, c = 2q.
QSeries one_minus_2q_p(const IntSeries& pz2)
{
    QSeries r(pz2.order());
    r[0] = QPolynomial{1};
    for (std::size_t k = 1; k <= pz2.order(); ++k)
        if (pz2[k] != 0)
            r[k] = QPolynomial::monomial(1, -2 * pz2[k]);
    return r;
}

} // namespace

IntSeries CatalanSeries::defining_residual() const
{
    IntSeries r = p * p - p;
    if (r.order() >= 1)
        r[1] += 1;
    return r;
}

CatalanSeries catalan_series(int order)
{
    if (order < 1)
        throw std::invalid_argument("catalan_series: order must be at least 1");
    IntSeries p(order);
    for (int n = 1; n <= order; ++n)
        p[n] = binomial(2 * n - 2, n - 1) / n;
    return {p};
}

IntSeries sqrt_one_minus_4t(int order)
{
    check_order(order, kMaxTildeOrder, "sqrt_one_minus_4t");
    IntSeries r(order);
    // [t^n] = binom(1/2, n) (-4)^n
    mpq_class c = 1;
    r[0] = 1;
    for (int n = 1; n <= order; ++n) {
        c *= mpq_class(1 - 2 * (n - 1), 2 * n) * -4;
        c.canonicalize();
        if (c.get_den() != 1)
            throw std::logic_error("sqrt_one_minus_4t: non-integral coefficient");
        r[n] = c.get_num();
    }
    return r;
}

IntSeries catalan_in_z_squared(int order)
{
    check_order(order, kMaxTildeOrder, "catalan_in_z_squared");
    IntSeries root = sqrt_one_minus_4t(order / 2);
    IntSeries p(order / 2);
    for (std::size_t k = 1; k <= p.order(); ++k)
        p[k] = -root[k] / 2;
    return p.of_z_squared(order);
}

IntSeries kernel_small_root(int order) { return catalan_in_z_squared(order + 1).divided_by_z(); }

std::vector<IntSeries> tilde_g_series(int order, unsigned s_max)
{
    check_order(order, kMaxTildeOrder, "tilde_g_series");
    // One extra order is spent on the 1/z factor.
    const int work = order + 1;
    const IntSeries pz2 = catalan_in_z_squared(work);
    IntSeries one_minus_2p = pz2.scaled(mpz_class(-2));
    one_minus_2p[0] += 1;
    const IntSeries s1 = one_minus_2p.reciprocal();

    std::vector<IntSeries> out;
    out.reserve(s_max + 1);
    IntSeries one(order);
    one[0] = 1;
    out.push_back(one.over_one_minus_2z());
    if (s_max == 0)
        return out;

    IntSeries z(work);
    z[1] = 1;
    out.push_back(((pz2 + z) * s1).over_one_minus_2z().truncated(order));
    if (s_max == 1)
        return out;

    // (z+1) P(z^2) - z^2
    IntSeries base = pz2.times_z() + pz2;
    base[2] -= 1;
    const IntSeries two_p = pz2.scaled(mpz_class(2));
    IntSeries two_p_pow(work), s_pow = s1 * s1;
    two_p_pow[0] = 1;
    for (unsigned s = 2; s <= s_max; ++s) {
        IntSeries num = base * two_p_pow * s_pow;
        out.push_back(num.divided_by_z().over_one_minus_2z());
        two_p_pow = two_p_pow * two_p;
        s_pow = s_pow * s1;
    }
    return out;
}

UResolvedSeries::UResolvedSeries(int order) : order_(order), rows_(order + 1)
{
    for (auto& row : rows_)
        row.resize(2 * width() + 1);
}

const QPolynomial& UResolvedSeries::coefficient(int M, int d) const
{
    static const QPolynomial zero;
    if (M < 0 || M > order_ || d < -width() || d > width())
        return zero;
    return rows_[M][d + width()];
}

QPolynomial& UResolvedSeries::at(int M, int d)
{
    if (M < 0 || M > order_ || d < -width() || d > width())
        throw std::out_of_range("UResolvedSeries::at");
    return rows_[M][d + width()];
}

UResolvedSeries tilde_G_series(int order)
{
    check_order(order, kMaxUResolvedOrder, "tilde_G_series");
    const int work = order + 1;
    const IntSeries pz2 = catalan_in_z_squared(work);
    const QSeries p = to_qseries(pz2);
    const QSeries r = one_minus_2q_p(pz2).reciprocal();

    const QPolynomial q{0, 1};
    const QPolynomial q_minus_1{-1, 1};
    IntSeries z_int(work);
    z_int[1] = 1;
    const QSeries z = to_qseries(z_int);

    // Numerator by powers of u: N = N0 + N1 u + N2 u^2.
    std::vector<QSeries> numer;
    numer.push_back(p.times_z().scaled(-(q * q_minus_1)));
    numer.push_back(p.scaled(q_minus_1 * q_minus_1) - z.times_z().scaled(q * q_minus_1));
    numer.push_back(p.times_z().scaled(QPolynomial{0, 2}) - z);

    // T_e = [u^{e+1}] N R / z, the right-hand side after removing 1/(zu).
    std::vector<QSeries> rhs;
    for (const auto& n : numer)
        rhs.push_back((n * r).divided_by_z());

    auto t_at = [&](int m, int e) -> QPolynomial {
        int k = e + 1;
        if (k < 0 || k > 2)
            return {};
        return rhs[k][m];
    };

    // (z u^2 - u + z) F = T gives
    // F_{m,e} = F_{m-1,e-1} + F_{m-1,e+1} - T_{m,e+1}.
    UResolvedSeries out(order);
    for (int m = 0; m <= order; ++m)
        for (int e = -out.width(); e <= out.width(); ++e) {
            QPolynomial v = out.coefficient(m - 1, e - 1) + out.coefficient(m - 1, e + 1) - t_at(m, e + 1);
            out.at(m, e) = std::move(v);
        }
    return out;
}

QSeries fixed_difference_gf(int d, int order)
{
    if (d < 2)
        throw std::invalid_argument("fixed_difference_gf: needs d >= 2");
    check_order(order, kMaxTildeOrder, "fixed_difference_gf");
    const IntSeries pz2 = catalan_in_z_squared(order);
    const IntSeries u1 = kernel_small_root(order);
    const QSeries r = one_minus_2q_p(pz2).reciprocal();
    return (to_qseries(u1.pow(d)) * r).scaled(QPolynomial::monomial(2, 1));
}

double singular_main_term_scaled(unsigned s, long n)
{
    if (n < 1)
        throw std::invalid_argument("singular_main_term_scaled: n must be positive");
    double fact = 1;
    for (unsigned k = 2; k <= s; ++k)
        fact *= k;
    return std::pow(2.0, s / 2.0) * gamma_half(s + 1) * std::pow(static_cast<double>(n), s / 2.0) /
           (fact * std::sqrt(std::numbers::pi));
}

double singular_coefficient_asymptotics(unsigned s, long n)
{
    return std::ldexp(singular_main_term_scaled(s, n), static_cast<int>(std::min<long>(n, 1 << 20)));
}

double singular_ratio(const mpz_class& exact, unsigned s, long n)
{
    long e = 0;
    double mant = mpz_get_d_2exp(&e, exact.get_mpz_t());
    return std::ldexp(mant, static_cast<int>(e - n)) / singular_main_term_scaled(s, n);
}

} // namespace riffle
