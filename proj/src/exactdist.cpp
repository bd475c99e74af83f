#include "riffle/exactdist.hpp"

#include <stdexcept>
#include <string>

#include "riffle/strategy.hpp"

namespace riffle
{

namespace
{

// 4q^4 - 2q^3 - 2q^2
const QPolynomial& correction_term()
{
    static const QPolynomial r{0, 0, -2, -2, 4};
    return r;
}

// Cell (m1, M - m1) takes the weighted left step iff m1 == floor(M/2) + 1.
int weighted_cell(int M) { return M / 2 + 1; }

void check_grid(int m1, int m2, int bound)
{
    if (m1 < 0 || m2 < 0)
        throw std::invalid_argument("packet sizes must be non-negative");
    if (m1 + m2 > bound)
        throw CapacityError("grid size m1+m2=" + std::to_string(m1 + m2) + " exceeds bound " + std::to_string(bound));
}

// Advance the anti-diagonal frontier from M-1 to M in place. frontier[a]
// holds the cell (a, M-1-a) on entry and (a, M-a) on exit.
template <class Cell, class AddWeighted, class Add>
void advance(std::vector<Cell>& frontier, int M, AddWeighted add_weighted, Add add)
{
    frontier.emplace_back();
    const int c = weighted_cell(M);
    for (int a = M; a >= 1; --a) {
        if (a == c)
            add_weighted(frontier[a], frontier[a - 1]);
        else
            add(frontier[a], frontier[a - 1]);
    }
}

void add_poly(QPolynomial& dst, const QPolynomial& src) { dst += src; }
void add_poly_weighted(QPolynomial& dst, const QPolynomial& src) { dst += src.shifted(1); }

QPolynomial sum(const std::vector<QPolynomial>& v)
{
    QPolynomial s;
    for (const auto& p : v)
        s += p;
    return s;
}

} // namespace

std::vector<QPolynomial> g_antidiagonal(int M, int max_grid_sum)
{
    check_grid(M, 0, max_grid_sum);
    std::vector<QPolynomial> frontier{QPolynomial{1}};
    for (int T = 1; T <= M; ++T)
        advance(frontier, T, add_poly_weighted, add_poly);
    return frontier;
}

QPolynomial g_poly(int m1, int m2, int max_grid_sum)
{
    check_grid(m1, m2, max_grid_sum);
    return g_antidiagonal(m1 + m2, max_grid_sum)[m1];
}

QPolynomial g_row_sum(int M, int max_grid_sum) { return sum(g_antidiagonal(M, max_grid_sum)); }

std::vector<mpz_class> g_row_sum_taylor(int M, unsigned s_max)
{
    if (M < 0)
        throw std::invalid_argument("g_row_sum_taylor: M must be non-negative");
    using Cell = std::vector<mpz_class>;
    const std::size_t width = s_max + 1;
    std::vector<Cell> frontier;
    frontier.reserve(M + 1);
    frontier.emplace_back(width);
    frontier[0][0] = 1;
    auto add = [width](Cell& dst, const Cell& src) {
        if (dst.empty())
            dst.resize(width);
        for (std::size_t s = 0; s < width; ++s)
            dst[s] += src[s];
    };
    // q = 1 + w
    auto add_weighted = [width](Cell& dst, const Cell& src) {
        if (dst.empty())
            dst.resize(width);
        for (std::size_t s = 0; s < width; ++s) {
            dst[s] += src[s];
            if (s > 0)
                dst[s] += src[s - 1];
        }
    };
    for (int T = 1; T <= M; ++T)
        advance(frontier, T, add_weighted, add);
    Cell total(width);
    for (const auto& cell : frontier)
        for (std::size_t s = 0; s < width; ++s)
            total[s] += cell[s];
    return total;
}

QPolynomial f_poly(int n, int max_n)
{
    if (n < kMinClosedFormDeck)
        throw std::invalid_argument("f_poly: the closed formula needs n >= 4; use pmf_x_enumerated for n=" +
                                    std::to_string(n));
    if (n > max_n)
        throw CapacityError("f_poly: n=" + std::to_string(n) + " exceeds bound " + std::to_string(max_n));
    const int h = (n + 1) / 2;
    std::vector<QPolynomial> frontier{QPolynomial{1}};
    QPolynomial lower;
    for (int T = 1; T <= h; ++T) {
        advance(frontier, T, add_poly_weighted, add_poly);
        if (T == n - h)
            lower = sum(frontier);
    }
    QPolynomial upper = sum(frontier);
    QPolynomial f = correction_term() + upper * lower;
    if (!f.is_nonnegative())
        throw std::logic_error("f_poly: negative coefficient for n=" + std::to_string(n));
    if (f.at_one() != pow2(n))
        throw std::logic_error("f_poly: total mass differs from 2^n for n=" + std::to_string(n));
    return f;
}

ExactPmf pmf_x_closed_form(int n, int max_n)
{
    QPolynomial f = f_poly(n, max_n);
    std::vector<mpz_class> num = f.coeffs();
    num.resize(n + 1);
    return ExactPmf(std::move(num), pow2(n));
}

ExactPmf pmf_x_enumerated(int n, int max_n)
{
    const auto guesses = optimal_guesses(n);
    std::vector<mpz_class> counts(n + 1);
    std::vector<unsigned long> tally(n + 1, 0);
    for_each_shuffle(
        n, 0, ~0ULL, [&](const ShuffleOutcome& o) { ++tally[score(guesses, o.permutation.labels())]; }, max_n);
    for (int k = 0; k <= n; ++k)
        counts[k] = tally[k];
    return ExactPmf(std::move(counts), pow2(n));
}

ExactPmf pmf_x(int n, int max_n)
{
    if (n < 1)
        throw std::invalid_argument("pmf_x: n must be at least 1");
    if (n < kMinClosedFormDeck)
        return pmf_x_enumerated(n);
    return pmf_x_closed_form(n, max_n);
}

ExactPmf pmf_y(int m1, int m2, int max_grid_sum)
{
    check_grid(m1, m2, max_grid_sum);
    if (m1 + m2 < 1)
        throw std::invalid_argument("pmf_y: need m1 + m2 >= 1");
    QPolynomial g = g_poly(m1, m2, max_grid_sum);
    std::vector<mpz_class> num = g.coeffs();
    num.resize(std::max<std::size_t>(num.size(), 1));
    return ExactPmf(std::move(num), binomial(m1 + m2, m1));
}

std::vector<double> pmf_y_float(int m1, int m2, int max_grid_sum)
{
    check_grid(m1, m2, max_grid_sum);
    if (m1 + m2 < 1)
        throw std::invalid_argument("pmf_y_float: need m1 + m2 >= 1");
    // rows[b] holds the law of Y_{a,b} for the current a, support 0..a.
    const std::size_t width = static_cast<std::size_t>(m1) + 1;
    std::vector<std::vector<double>> prev(m2 + 1), cur(m2 + 1);
    for (int a = 0; a <= m1; ++a) {
        for (int b = 0; b <= m2; ++b) {
            auto& cell = cur[b];
            cell.assign(std::min<std::size_t>(a + 1, width), 0.0);
            if (a == 0) {
                cell[0] = 1.0;
                continue;
            }
            const double total = a + b;
            const double p_left = a / total, p_down = b / total;
            const auto& left = prev[b];
            const std::size_t shift = weighted_cell(a + b) == a ? 1 : 0;
            for (std::size_t k = 0; k < left.size(); ++k)
                cell[k + shift] += p_left * left[k];
            if (b > 0) {
                const auto& down = cur[b - 1];
                for (std::size_t k = 0; k < down.size(); ++k)
                    cell[k] += p_down * down[k];
            }
        }
        std::swap(prev, cur);
    }
    auto out = prev[m2];
    out.resize(width, 0.0);
    return out;
}

std::vector<mpq_class> factorial_moments(int n, unsigned s_max)
{
    if (n < 1)
        throw std::invalid_argument("factorial_moments: n must be at least 1");
    std::vector<mpq_class> out(s_max + 1);
    if (n < kMinClosedFormDeck) {
        ExactPmf p = pmf_x_enumerated(n);
        for (unsigned s = 0; s <= s_max; ++s)
            out[s] = p.falling_moment(s);
        return out;
    }
    const int h = (n + 1) / 2;
    auto upper = g_row_sum_taylor(h, s_max);
    auto lower = (n - h == h) ? upper : g_row_sum_taylor(n - h, s_max);
    auto r = correction_term().taylor_at_one(s_max);
    const mpz_class denom = pow2(n);
    mpz_class fact = 1;
    for (unsigned s = 0; s <= s_max; ++s) {
        if (s > 0)
            fact *= s;
        mpz_class coeff = r[s];
        for (unsigned k = 0; k <= s; ++k)
            coeff += upper[k] * lower[s - k];
        out[s] = mpq_class(fact * coeff, denom);
        out[s].canonicalize();
    }
    return out;
}

mpz_class stirling2(unsigned s, unsigned k)
{
    if (k > s)
        return 0;
    // S(i, j) = j S(i-1, j) + S(i-1, j-1)
    std::vector<mpz_class> row(k + 1);
    row[0] = 1;
    for (unsigned i = 1; i <= s; ++i) {
        for (unsigned j = std::min(i, k); j >= 1; --j)
            row[j] = row[j] * j + row[j - 1];
        row[0] = 0;
    }
    return row[k];
}

std::vector<mpq_class> raw_moments(int n, unsigned s_max)
{
    auto fm = factorial_moments(n, s_max);
    std::vector<mpq_class> out(s_max + 1);
    for (unsigned s = 0; s <= s_max; ++s)
        for (unsigned k = 0; k <= s; ++k)
            out[s] += mpq_class(stirling2(s, k)) * fm[k];
    return out;
}

} // namespace riffle
