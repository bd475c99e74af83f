#include "riffle/qpolynomial.hpp"

#include <sstream>

#include "riffle/rational.hpp"

namespace riffle
{

QPolynomial::QPolynomial(std::initializer_list<long> coeffs)
{
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs)
        coeffs_.emplace_back(c);
    trim();
}

QPolynomial::QPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPolynomial QPolynomial::constant(const mpz_class& c) { return QPolynomial(std::vector<mpz_class>{c}); }

QPolynomial QPolynomial::monomial(std::size_t power, const mpz_class& c)
{
    std::vector<mpz_class> v(power + 1);
    v[power] = c;
    return QPolynomial(std::move(v));
}

void QPolynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

bool QPolynomial::is_nonnegative() const
{
    for (const auto& c : coeffs_)
        if (c < 0)
            return false;
    return true;
}

mpz_class QPolynomial::evaluate(const mpz_class& q) const
{
    mpz_class r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        r = r * q + *it;
    return r;
}

mpz_class QPolynomial::at_one() const
{
    mpz_class r = 0;
    for (const auto& c : coeffs_)
        r += c;
    return r;
}

std::vector<mpz_class> QPolynomial::taylor_at_one(unsigned s_max) const
{
    std::vector<mpz_class> out(s_max + 1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0)
            continue;
        for (unsigned s = 0; s <= s_max && s <= k; ++s)
            out[s] += binomial(k, s) * coeffs_[k];
    }
    return out;
}

QPolynomial QPolynomial::shifted(std::size_t k) const
{
    if (is_zero())
        return {};
    std::vector<mpz_class> v(coeffs_.size() + k);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        v[i + k] = coeffs_[i];
    return QPolynomial(std::move(v));
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

QPolynomial& QPolynomial::operator*=(const mpz_class& c)
{
    for (auto& v : coeffs_)
        v *= c;
    trim();
    return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<mpz_class> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::operator-() const
{
    QPolynomial r = *this;
    for (auto& v : r.coeffs_)
        v = -v;
    return r;
}

std::string QPolynomial::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const mpz_class& c = coeffs_[k];
        if (c == 0)
            continue;
        mpz_class mag = abs(c);
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << '-';
        first = false;
        if (mag != 1 || k == 0)
            os << mag.get_str();
        if (k >= 1)
            os << 'q';
        if (k >= 2)
            os << '^' << k;
    }
    return os.str();
}

} // namespace riffle
