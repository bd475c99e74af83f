#ifndef RIFFLE_QPOLYNOMIAL_HPP
#define RIFFLE_QPOLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace riffle
{

/// Polynomial in the counting variable q with arbitrary-precision integer
/// coefficients; coeffs()[k] is the coefficient of q^k.
///
/// Coefficients are signed so that intermediate closed forms with factors
/// like (q-1) can be represented; the path-counting polynomials are checked
/// with is_nonnegative(). The representation is always trimmed (no trailing
/// zero coefficient), so the zero polynomial has no coefficients.
class QPolynomial
{
  public:
    QPolynomial() = default;
    QPolynomial(std::initializer_list<long> coeffs);
    explicit QPolynomial(std::vector<mpz_class> coeffs);
    static QPolynomial constant(const mpz_class& c);
    static QPolynomial monomial(std::size_t power, const mpz_class& c = 1);

    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    mpz_class coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : mpz_class(0); }
    bool is_nonnegative() const;

    mpz_class evaluate(const mpz_class& q) const;
    mpz_class at_one() const;

    /// Coefficients of p(1+w) up to w^s_max: sum_k C(k,s) a_k.
    std::vector<mpz_class> taylor_at_one(unsigned s_max) const;

    /// Multiply by q^k.
    QPolynomial shifted(std::size_t k) const;

    QPolynomial& operator+=(const QPolynomial& o);
    QPolynomial& operator-=(const QPolynomial& o);
    QPolynomial& operator*=(const mpz_class& c);
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend QPolynomial operator*(QPolynomial a, const mpz_class& c) { return a *= c; }
    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
    QPolynomial operator-() const;

    friend bool operator==(const QPolynomial& a, const QPolynomial& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string() const;

  private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

} // namespace riffle

#endif
