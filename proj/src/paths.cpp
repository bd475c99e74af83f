#include "riffle/paths.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <thread>

namespace riffle
{

namespace
{

void check_path_bounds(int m1, int m2)
{
    if (m1 < 0 || m2 < 0)
        throw std::invalid_argument("path endpoints need m1, m2 >= 0");
    if (m1 + m2 > kMaxPathLength)
        throw CapacityError("path length " + std::to_string(m1 + m2) + " exceeds enumeration bound " +
                            std::to_string(kMaxPathLength));
}

int statistic_of(std::uint64_t word, int length, PathStatistic stat)
{
    int y = 0, count = 0;
    for (int k = 0; k < length; ++k) {
        bool down = (word >> k) & 1ULL;
        y += down ? -1 : 1;
        if (stat == PathStatistic::DownVisitsLow)
            count += down && (y == -1 || y == -2);
        else
            count += y == 0;
    }
    return count;
}

void tally_range(int m1, int length, PathStatistic stat, std::uint64_t first, std::uint64_t last,
                 std::vector<std::uint64_t>& tally)
{
    for (std::uint64_t w = first; w < last; ++w) {
        if (std::popcount(w) != m1)
            continue;
        int s = statistic_of(w, length, stat);
        if (static_cast<std::size_t>(s) >= tally.size())
            tally.resize(s + 1, 0);
        ++tally[s];
    }
}

} // namespace

DyckPath::DyckPath(std::uint64_t word, int length)
{
    if (length < 0 || length > 63)
        throw std::invalid_argument("DyckPath: length out of range");
    steps_.resize(length);
    for (int k = 0; k < length; ++k)
        steps_[k] = ((word >> k) & 1ULL) ? -1 : 1;
}

int DyckPath::final_altitude() const
{
    int y = 0;
    for (int s : steps_)
        y += s;
    return y;
}

int DyckPath::down_visits_low() const
{
    int y = 0, count = 0;
    for (int s : steps_) {
        y += s;
        count += s < 0 && (y == -1 || y == -2);
    }
    return count;
}

int DyckPath::returns_to_zero() const
{
    int y = 0, count = 0;
    for (int s : steps_) {
        y += s;
        count += y == 0;
    }
    return count;
}

QPolynomial path_statistic_poly(int m1, int m2, PathStatistic stat, int workers)
{
    check_path_bounds(m1, m2);
    const int length = m1 + m2;
    const std::uint64_t total = 1ULL << length;
    workers = std::clamp<int>(workers, 1, 64);
    std::vector<std::vector<std::uint64_t>> parts(workers);
    const std::uint64_t chunk = (total + workers - 1) / workers;
    if (workers == 1) {
        tally_range(m1, length, stat, 0, total, parts[0]);
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < workers; ++t) {
            std::uint64_t lo = std::min(total, chunk * t), hi = std::min(total, lo + chunk);
            pool.emplace_back([&, t, lo, hi] { tally_range(m1, length, stat, lo, hi, parts[t]); });
        }
    }
    std::vector<mpz_class> coeffs;
    for (const auto& part : parts) {
        if (part.size() > coeffs.size())
            coeffs.resize(part.size());
        for (std::size_t k = 0; k < part.size(); ++k)
            coeffs[k] += static_cast<unsigned long>(part[k]);
    }
    return QPolynomial(std::move(coeffs));
}

QPolynomial y_oracle_poly(int m1, int m2, int workers)
{
    return path_statistic_poly(m1, m2, PathStatistic::DownVisitsLow, workers);
}

ExactPmf y_oracle_pmf(int m1, int m2, int workers)
{
    auto poly = y_oracle_poly(m1, m2, workers);
    return ExactPmf(poly.coeffs(), binomial(m1 + m2, m1));
}

ExactPmf w_oracle_pmf(int m1, int m2, int workers)
{
    auto poly = path_statistic_poly(m1, m2, PathStatistic::ReturnsToZero, workers);
    return ExactPmf(poly.coeffs(), binomial(m1 + m2, m1));
}

ShiftRelationReport shift_relation_check(int m1, int m2)
{
    if (m2 < 0 || m1 < m2 + 2)
        throw std::invalid_argument("shift_relation_check: need m1 >= m2 + 2 >= 2");
    check_path_bounds(m1, m2);
    ExactPmf y = y_oracle_pmf(m1, m2);
    ExactPmf w = w_oracle_pmf(m1 - 1, m2);
    const std::size_t support = std::max(y.size(), w.size() + 2);
    mpq_class tv = 0;
    for (std::size_t k = 0; k < support; ++k) {
        mpq_class shifted = k >= 2 ? w.probability(k - 2) : mpq_class(0);
        tv += abs(y.probability(k) - shifted);
    }
    tv /= 2;
    return {m1, m2, tv, to_double(tv)};
}

} // namespace riffle
