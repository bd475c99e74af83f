// Independent reference computations used only by the tests. Nothing here
// calls into the library's algorithms; it works from the definitions.
#ifndef RIFFLE_TESTS_ORACLES_HPP
#define RIFFLE_TESTS_ORACLES_HPP

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

namespace oracle
{

// Deck after the riffle described by `word`: bit j set puts a card of the
// lower packet at position j+1. Packet 1 holds labels 1..cut, packet 2 the rest.
inline std::vector<int> riffle(int n, std::uint64_t word)
{
    int cut = 0;
    for (int j = 0; j < n; ++j)
        cut += !((word >> j) & 1);
    std::vector<int> deck(n);
    int a = 1, b = cut + 1;
    for (int j = 0; j < n; ++j)
        deck[j] = ((word >> j) & 1) ? b++ : a++;
    return deck;
}

// count[i-1][j-1] = #{words : card i lands at position j}.
inline std::vector<std::vector<long>> position_counts(int n)
{
    std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
    for (std::uint64_t w = 0; w < (1ULL << n); ++w) {
        auto deck = riffle(n, w);
        for (int j = 0; j < n; ++j)
            ++c[deck[j] - 1][j];
    }
    return c;
}

// Guess that maximizes the column of the position-count matrix, smallest label on ties.
inline std::vector<int> brute_force_argmax_guesses(int n)
{
    auto c = position_counts(n);
    std::vector<int> g(n);
    for (int j = 0; j < n; ++j) {
        int best = 0;
        for (int i = 1; i < n; ++i)
            if (c[i][j] > c[best][j])
                best = i;
        g[j] = best + 1;
    }
    return g;
}

// Law of the number of matches with `guesses`, as counts over 2^n.
inline std::vector<long> match_counts(int n, const std::vector<int>& guesses)
{
    std::vector<long> counts(n + 1, 0);
    for (std::uint64_t w = 0; w < (1ULL << n); ++w) {
        auto deck = riffle(n, w);
        int s = 0;
        for (int j = 0; j < n; ++j)
            s += deck[j] == guesses[j];
        ++counts[s];
    }
    return counts;
}

// g_{m1,m2}(q) as a coefficient vector straight from the two-dimensional
// recurrence, memoized.
inline std::vector<long long> g_coeffs(int m1, int m2)
{
    static std::map<std::pair<int, int>, std::vector<long long>> memo;
    if (m1 < 0 || m2 < 0)
        return {};
    if (m1 == 0 && m2 == 0)
        return {1};
    auto key = std::make_pair(m1, m2);
    if (auto it = memo.find(key); it != memo.end())
        return it->second;
    std::vector<long long> left = g_coeffs(m1 - 1, m2), down = g_coeffs(m1, m2 - 1);
    const bool weighted = m1 == (m1 + m2) / 2 + 1;
    std::vector<long long> r(std::max(left.size() + weighted, down.size()), 0);
    for (std::size_t k = 0; k < left.size(); ++k)
        r[k + weighted] += left[k];
    for (std::size_t k = 0; k < down.size(); ++k)
        r[k] += down[k];
    while (!r.empty() && r.back() == 0)
        r.pop_back();
    memo[key] = r;
    return r;
}

inline std::vector<mpz_class> catalan_numbers(int count)
{
    std::vector<mpz_class> c(count, 0);
    c[0] = 1;
    for (int n = 1; n < count; ++n)
        for (int i = 0; i < n; ++i)
            c[n] += c[i] * c[n - 1 - i];
    return c;
}

// Trapezoid convolution of two half-normal densities (2/sqrt(pi)) e^{-x^2}.
inline double convolved_density(double x, double step = 1e-3)
{
    const double c = 4 / M_PI;
    const int steps = static_cast<int>(std::round(x / step));
    if (steps == 0)
        return 0;
    const double h = x / steps;
    double s = 0;
    for (int i = 0; i <= steps; ++i) {
        const double y = i * h;
        const double v = c * std::exp(-y * y - (x - y) * (x - y));
        s += (i == 0 || i == steps) ? v / 2 : v;
    }
    return s * h;
}

} // namespace oracle

#endif
