#ifndef RIFFLE_STRATEGY_HPP
#define RIFFLE_STRATEGY_HPP

#include <span>
#include <vector>

#include "riffle/rational.hpp"
#include "riffle/shuffle.hpp"

namespace riffle
{

/// Probability that the card labelled i (1-based) lands at position j after
/// one riffle of n cards.
DyadicProb transition_prob(int n, int i, int j);

/// Dense matrix of transition_prob(n, i, j).
class TransitionMatrix
{
  public:
    explicit TransitionMatrix(int n);

    int size() const { return n_; }
    const DyadicProb& at(int i, int j) const { return entries_[(i - 1) * n_ + (j - 1)]; }

    DyadicProb row_sum(int i) const;
    DyadicProb column_sum(int j) const;
    /// Labels i attaining max_i m[i][j], ascending.
    std::vector<int> column_argmax(int j) const;

  private:
    int n_;
    std::vector<DyadicProb> entries_;
};

struct GuessSequence
{
    std::vector<int> guesses;
    /// optimal_sets[j-1]: every label that is an equally optimal guess at position j.
    std::vector<std::vector<int>> optimal_sets;
    /// Positions j where guesses[j-1] is not in optimal_sets[j-1]; empty when
    /// the canonical sequence is optimal everywhere.
    std::vector<int> argmax_failures;
};

/// The canonical optimal guesses: 1,2,2,3,3,... on the top ceil(n/2)
/// positions and the mirror image ...,n-1,n-1,n on the rest.
std::vector<int> optimal_guesses(int n);

/// Canonical guesses together with the exact argmax sets of every column.
/// Costs O(n^2) big-integer comparisons.
GuessSequence optimal_strategy(int n);

int score(std::span<const int> guesses, std::span<const int> deck);
int score(const GuessSequence& strategy, const Permutation& deck);

} // namespace riffle

#endif
