#include "riffle/strategy.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace riffle
{

DyadicProb transition_prob(int n, int i, int j)
{
    if (n < 1 || i < 1 || i > n || j < 1 || j > n)
        throw std::invalid_argument("transition_prob: need 1 <= i, j <= n (n=" + std::to_string(n) +
                                    ", i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")");
    if (i == j)
        return {pow2(i - 1) + pow2(n - i), static_cast<unsigned long>(n)};
    if (j > i)
        return transition_prob(n, n - i + 1, n - j + 1);
    return {binomial(n - j, i - j), static_cast<unsigned long>(n - j + 1)};
}

TransitionMatrix::TransitionMatrix(int n) : n_(n)
{
    if (n < 1)
        throw std::invalid_argument("TransitionMatrix: n must be at least 1");
    entries_.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            entries_.push_back(transition_prob(n, i, j));
}

DyadicProb TransitionMatrix::row_sum(int i) const
{
    DyadicProb s;
    for (int j = 1; j <= n_; ++j)
        s = s + at(i, j);
    return s;
}

DyadicProb TransitionMatrix::column_sum(int j) const
{
    DyadicProb s;
    for (int i = 1; i <= n_; ++i)
        s = s + at(i, j);
    return s;
}

std::vector<int> TransitionMatrix::column_argmax(int j) const
{
    std::vector<int> best{1};
    for (int i = 2; i <= n_; ++i) {
        auto c = at(i, j) <=> at(best.front(), j);
        if (c > 0)
            best = {i};
        else if (c == 0)
            best.push_back(i);
    }
    return best;
}

std::vector<int> optimal_guesses(int n)
{
    if (n < 1)
        throw std::invalid_argument("optimal_guesses: n must be at least 1");
    const int h = (n + 1) / 2;
    std::vector<int> g(n);
    for (int j = 1; j <= n; ++j)
        g[j - 1] = j <= h ? j / 2 + 1 : n - (n + 1 - j) / 2;
    return g;
}

GuessSequence optimal_strategy(int n)
{
    GuessSequence out;
    out.guesses = optimal_guesses(n);
    TransitionMatrix m(n);
    out.optimal_sets.reserve(n);
    for (int j = 1; j <= n; ++j) {
        auto set = m.column_argmax(j);
        if (!std::binary_search(set.begin(), set.end(), out.guesses[j - 1]))
            out.argmax_failures.push_back(j);
        out.optimal_sets.push_back(std::move(set));
    }
    return out;
}

int score(std::span<const int> guesses, std::span<const int> deck)
{
    if (guesses.size() != deck.size())
        throw std::invalid_argument("score: guess sequence and deck differ in length");
    int hits = 0;
    for (std::size_t j = 0; j < deck.size(); ++j)
        hits += guesses[j] == deck[j];
    return hits;
}

int score(const GuessSequence& strategy, const Permutation& deck) { return score(strategy.guesses, deck.labels()); }

} // namespace riffle
