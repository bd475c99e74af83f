#ifndef RIFFLE_RATIONAL_HPP
#define RIFFLE_RATIONAL_HPP

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace riffle
{

/// Raised when an input exceeds a configured enumeration or grid bound.
class CapacityError : public std::length_error
{
  public:
    using std::length_error::length_error;
};

mpz_class binomial(unsigned long n, unsigned long k);
mpz_class pow2(unsigned long e);

/// Exact value numerator / 2^exponent. Not kept in lowest terms; equality
/// and ordering compare values.
struct DyadicProb
{
    mpz_class numerator{0};
    unsigned long exponent{0};

    mpq_class value() const;
    double to_double() const;

    friend bool operator==(const DyadicProb& a, const DyadicProb& b);
    friend std::strong_ordering operator<=>(const DyadicProb& a, const DyadicProb& b);
};

DyadicProb operator+(const DyadicProb& a, const DyadicProb& b);

/// Exact probability mass function on the support 0..size()-1.
///
/// All masses share one structural denominator (2^n for X_n, a binomial
/// coefficient for Y). The numerators are never reduced; probability(k)
/// gives the reduced value.
class ExactPmf
{
  public:
    ExactPmf() = default;
    ExactPmf(std::vector<mpz_class> numerators, mpz_class denominator);

    std::size_t size() const { return numerators_.size(); }
    const std::vector<mpz_class>& numerators() const { return numerators_; }
    const mpz_class& denominator() const { return denominator_; }

    mpq_class probability(std::size_t k) const;
    double probability_double(std::size_t k) const;
    std::vector<double> to_doubles() const;

    /// Exact sum of masses; 1 for every well-formed pmf.
    mpq_class total() const;
    mpq_class mean() const;
    /// E[(X)_s] with the falling factorial (X)_s = X(X-1)...(X-s+1).
    mpq_class falling_moment(unsigned s) const;

    friend bool operator==(const ExactPmf& a, const ExactPmf& b);

  private:
    std::vector<mpz_class> numerators_;
    mpz_class denominator_{1};
};

/// Ratio of two big integers as a double without intermediate overflow.
double ratio_to_double(const mpz_class& num, const mpz_class& den);
double to_double(const mpq_class& q);

} // namespace riffle

#endif
