#ifndef RIFFLE_SERIES_HPP
#define RIFFLE_SERIES_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "riffle/qpolynomial.hpp"

namespace riffle
{

namespace detail
{
inline bool is_zero(const mpz_class& v) { return v == 0; }
inline bool is_zero(const QPolynomial& v) { return v.is_zero(); }

// +1 or -1 when v is a unit of the coefficient ring, 0 otherwise.
inline int unit_sign(const mpz_class& v) { return v == 1 ? 1 : v == -1 ? -1 : 0; }
inline int unit_sign(const QPolynomial& v)
{
    return v.degree() == 0 ? unit_sign(v.coeff(0)) : 0;
}
} // namespace detail

/// Power series in z truncated after z^order, with exact coefficients of
/// type T (mpz_class or QPolynomial). Products are truncated to the
/// smaller order of the operands.
template <class T>
class TruncatedSeries
{
  public:
    explicit TruncatedSeries(std::size_t order = 0) : c_(order + 1) {}
    TruncatedSeries(std::vector<T> coeffs, std::size_t order) : c_(std::move(coeffs)) { c_.resize(order + 1); }

    std::size_t order() const { return c_.size() - 1; }
    const T& operator[](std::size_t k) const { return c_[k]; }
    T& operator[](std::size_t k) { return c_[k]; }
    const std::vector<T>& coeffs() const { return c_; }

    TruncatedSeries truncated(std::size_t order) const
    {
        TruncatedSeries r = *this;
        r.c_.resize(std::min(order, this->order()) + 1);
        return r;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o)
    {
        shrink_to(o.order());
        for (std::size_t k = 0; k < c_.size(); ++k)
            c_[k] += o.c_[k];
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o)
    {
        shrink_to(o.order());
        for (std::size_t k = 0; k < c_.size(); ++k)
            c_[k] -= o.c_[k];
        return *this;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        const std::size_t order = std::min(a.order(), b.order());
        TruncatedSeries r(order);
        for (std::size_t i = 0; i <= order; ++i) {
            if (detail::is_zero(a.c_[i]))
                continue;
            for (std::size_t j = 0; i + j <= order; ++j) {
                if (detail::is_zero(b.c_[j]))
                    continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    template <class S>
    TruncatedSeries scaled(const S& factor) const
    {
        TruncatedSeries r = *this;
        for (auto& v : r.c_)
            v = v * factor;
        return r;
    }

    TruncatedSeries pow(unsigned e) const
    {
        TruncatedSeries r(order());
        r.c_[0] = one();
        for (unsigned i = 0; i < e; ++i)
            r = r * *this;
        return r;
    }

    /// 1/f for a constant term that is a unit (+1 or -1).
    TruncatedSeries reciprocal() const
    {
        const int u = detail::unit_sign(c_[0]);
        if (u == 0)
            throw std::domain_error("reciprocal: constant term is not a unit");
        TruncatedSeries r(order());
        r.c_[0] = c_[0];
        for (std::size_t k = 1; k <= order(); ++k) {
            T acc{};
            for (std::size_t i = 1; i <= k; ++i)
                if (!detail::is_zero(c_[i]) && !detail::is_zero(r.c_[k - i]))
                    acc += c_[i] * r.c_[k - i];
            r.c_[k] = u > 0 ? T(-acc) : acc;
        }
        return r;
    }

    /// f / z^k; the first k coefficients must vanish. The order drops by k.
    TruncatedSeries divided_by_z(std::size_t k = 1) const
    {
        if (k > order())
            throw std::domain_error("divided_by_z: shift exceeds order");
        for (std::size_t i = 0; i < k; ++i)
            if (!detail::is_zero(c_[i]))
                throw std::logic_error("divided_by_z: series is not divisible by z^k");
        return TruncatedSeries(std::vector<T>(c_.begin() + k, c_.end()), order() - k);
    }

    /// z^k f, keeping the order.
    TruncatedSeries times_z(std::size_t k = 1) const
    {
        TruncatedSeries r(order());
        for (std::size_t i = 0; i + k <= order(); ++i)
            r.c_[i + k] = c_[i];
        return r;
    }

    /// f(z^2), truncated at `order`.
    TruncatedSeries of_z_squared(std::size_t order) const
    {
        TruncatedSeries r(order);
        for (std::size_t i = 0; 2 * i <= order && i <= this->order(); ++i)
            r.c_[2 * i] = c_[i];
        return r;
    }

    /// f / (1 - 2z).
    TruncatedSeries over_one_minus_2z() const
    {
        TruncatedSeries r(order());
        T acc{};
        for (std::size_t k = 0; k <= order(); ++k) {
            acc = acc * mpz_class(2) + c_[k];
            r.c_[k] = acc;
        }
        return r;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

  private:
    static T one()
    {
        if constexpr (std::is_same_v<T, QPolynomial>)
            return QPolynomial{1};
        else
            return T(1);
    }
    void shrink_to(std::size_t order)
    {
        if (order < this->order())
            c_.resize(order + 1);
    }

    std::vector<T> c_;
};

using IntSeries = TruncatedSeries<mpz_class>;
using QSeries = TruncatedSeries<QPolynomial>;

inline QSeries to_qseries(const IntSeries& s)
{
    QSeries r(s.order());
    for (std::size_t k = 0; k <= s.order(); ++k)
        r[k] = QPolynomial::constant(s[k]);
    return r;
}

} // namespace riffle

#endif
