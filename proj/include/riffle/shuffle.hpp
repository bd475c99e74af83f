#ifndef RIFFLE_SHUFFLE_HPP
#define RIFFLE_SHUFFLE_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "riffle/philox.hpp"
#include "riffle/rational.hpp"

namespace riffle
{

inline constexpr int kDefaultMaxEnumeration = 20;

/// Arrangement of a deck of n cards; labels()[j] is the label (1..n) of the
/// card at position j+1, position 1 being the top of the deck.
class Permutation
{
  public:
    Permutation() = default;
    /// Throws std::invalid_argument unless labels is a permutation of 1..n, n >= 1.
    explicit Permutation(std::vector<int> labels);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<int>& labels() const { return labels_; }
    int operator[](int position) const { return labels_[position - 1]; }
    bool is_identity() const;

    /// Minimum number of increasing subsequences of consecutive labels
    /// needed to cover the deck (rising sequences).
    int rising_sequences() const;

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

  private:
    std::vector<int> labels_;
};

/// Equally likely result of one riffle: the interleaving word has bit j set
/// iff position j+1 received a card of the second (bottom) packet.
struct ShuffleOutcome
{
    int cut;
    std::uint64_t word;
    Permutation permutation;
    DyadicProb weight;
};

/// P{Cut = k} = C(n,k) / 2^n for k = 0..n.
ExactPmf cut_pmf(int n);

/// Deck produced by the interleaving word. Cut = number of zero bits.
Permutation apply_interleaving(int n, std::uint64_t word);
void apply_interleaving(std::uint64_t word, std::span<int> deck);

/// Draw one riffle shuffle of n cards.
///
/// The cut is the popcount of n fair bits (ceil(n/64) draws); the packets
/// are then interleaved bottom-up, taking the bottom card of packet 1 with
/// probability m1/(m1+m2), one draw per card (n draws) even once a packet
/// is empty. A sample always consumes ceil(n/64) + n draws.
Permutation sample_shuffle(int n, RandomStream& rng);
void sample_shuffle_into(RandomStream& rng, std::span<int> deck);

inline std::uint64_t draws_per_shuffle(int n) { return static_cast<std::uint64_t>((n + 63) / 64 + n); }

/// Visit the outcomes for interleaving words in [first, last) in order.
void for_each_shuffle(int n, std::uint64_t first, std::uint64_t last,
                      const std::function<void(const ShuffleOutcome&)>& visit, int max_n = kDefaultMaxEnumeration);

/// All 2^n (cut, interleaving) outcomes, ordered by interleaving word.
std::vector<ShuffleOutcome> enumerate_shuffles(int n, int max_n = kDefaultMaxEnumeration);

} // namespace riffle

#endif
