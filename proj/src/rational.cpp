#include "riffle/rational.hpp"

#include <cmath>

namespace riffle
{

mpz_class binomial(unsigned long n, unsigned long k)
{
    mpz_class r;
    if (k > n)
        return r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

mpz_class pow2(unsigned long e)
{
    mpz_class r;
    mpz_setbit(r.get_mpz_t(), e);
    return r;
}

mpq_class DyadicProb::value() const
{
    mpq_class q(numerator, pow2(exponent));
    q.canonicalize();
    return q;
}

double DyadicProb::to_double() const { return std::ldexp(numerator.get_d(), -static_cast<int>(exponent)); }

namespace
{
// Both values scaled to the common exponent max(ea, eb).
std::pair<mpz_class, mpz_class> align(const DyadicProb& a, const DyadicProb& b)
{
    mpz_class x = a.numerator, y = b.numerator;
    if (a.exponent < b.exponent)
        x <<= (b.exponent - a.exponent);
    else
        y <<= (a.exponent - b.exponent);
    return {x, y};
}
} // namespace

bool operator==(const DyadicProb& a, const DyadicProb& b)
{
    auto [x, y] = align(a, b);
    return x == y;
}

std::strong_ordering operator<=>(const DyadicProb& a, const DyadicProb& b)
{
    auto [x, y] = align(a, b);
    int c = cmp(x, y);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

DyadicProb operator+(const DyadicProb& a, const DyadicProb& b)
{
    auto [x, y] = align(a, b);
    return {x + y, std::max(a.exponent, b.exponent)};
}

ExactPmf::ExactPmf(std::vector<mpz_class> numerators, mpz_class denominator)
    : numerators_(std::move(numerators)), denominator_(std::move(denominator))
{
    if (denominator_ <= 0)
        throw std::invalid_argument("ExactPmf: denominator must be positive");
    for (const auto& v : numerators_)
        if (v < 0)
            throw std::invalid_argument("ExactPmf: negative mass");
}

mpq_class ExactPmf::probability(std::size_t k) const
{
    if (k >= numerators_.size())
        return 0;
    mpq_class q(numerators_[k], denominator_);
    q.canonicalize();
    return q;
}

double ExactPmf::probability_double(std::size_t k) const
{
    if (k >= numerators_.size())
        return 0.0;
    return ratio_to_double(numerators_[k], denominator_);
}

std::vector<double> ExactPmf::to_doubles() const
{
    std::vector<double> out(numerators_.size());
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = probability_double(k);
    return out;
}

mpq_class ExactPmf::total() const
{
    mpz_class s = 0;
    for (const auto& v : numerators_)
        s += v;
    mpq_class q(s, denominator_);
    q.canonicalize();
    return q;
}

mpq_class ExactPmf::mean() const { return falling_moment(1); }

mpq_class ExactPmf::falling_moment(unsigned s) const
{
    mpz_class acc = 0;
    for (std::size_t k = 0; k < numerators_.size(); ++k) {
        if (numerators_[k] == 0 || k < s)
            continue;
        mpz_class ff = 1;
        for (unsigned i = 0; i < s; ++i)
            ff *= static_cast<unsigned long>(k - i);
        acc += ff * numerators_[k];
    }
    mpq_class q(acc, denominator_);
    q.canonicalize();
    return q;
}

bool operator==(const ExactPmf& a, const ExactPmf& b)
{
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k)
        if (a.probability(k) != b.probability(k))
            return false;
    return true;
}

double ratio_to_double(const mpz_class& num, const mpz_class& den)
{
    if (num == 0)
        return 0.0;
    long en = 0, ed = 0;
    double mn = mpz_get_d_2exp(&en, num.get_mpz_t());
    double md = mpz_get_d_2exp(&ed, den.get_mpz_t());
    return std::ldexp(mn / md, static_cast<int>(en - ed));
}

double to_double(const mpq_class& q) { return ratio_to_double(q.get_num(), q.get_den()); }

} // namespace riffle
