#include "riffle/shuffle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace riffle
{

namespace
{
void check_deck_size(int n)
{
    if (n < 1)
        throw std::invalid_argument("deck size must be at least 1, got " + std::to_string(n));
}

void check_enumerable(int n, int max_n)
{
    check_deck_size(n);
    if (n > max_n || n > 63)
        throw CapacityError("deck size " + std::to_string(n) + " exceeds enumeration bound " +
                            std::to_string(std::min(max_n, 63)));
}
} // namespace

Permutation::Permutation(std::vector<int> labels) : labels_(std::move(labels))
{
    const int n = size();
    check_deck_size(n);
    std::vector<char> seen(n + 1, 0);
    for (int v : labels_) {
        if (v < 1 || v > n || seen[v])
            throw std::invalid_argument("labels are not a permutation of 1..n");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n)
{
    check_deck_size(n);
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i)
        v[i] = i + 1;
    return Permutation(std::move(v));
}

bool Permutation::is_identity() const
{
    for (int i = 0; i < size(); ++i)
        if (labels_[i] != i + 1)
            return false;
    return true;
}

int Permutation::rising_sequences() const
{
    const int n = size();
    std::vector<int> pos(n + 1);
    for (int j = 0; j < n; ++j)
        pos[labels_[j]] = j;
    int runs = 1;
    for (int v = 1; v < n; ++v)
        if (pos[v + 1] < pos[v])
            ++runs;
    return runs;
}

ExactPmf cut_pmf(int n)
{
    check_deck_size(n);
    std::vector<mpz_class> num(n + 1);
    for (int k = 0; k <= n; ++k)
        num[k] = binomial(n, k);
    return ExactPmf(std::move(num), pow2(n));
}

void apply_interleaving(std::uint64_t word, std::span<int> deck)
{
    const int n = static_cast<int>(deck.size());
    const int cut = n - std::popcount(word & (n == 64 ? ~0ULL : ((1ULL << n) - 1)));
    int next1 = 1, next2 = cut + 1;
    for (int j = 0; j < n; ++j)
        deck[j] = ((word >> j) & 1ULL) ? next2++ : next1++;
}

Permutation apply_interleaving(int n, std::uint64_t word)
{
    check_deck_size(n);
    std::vector<int> deck(n);
    apply_interleaving(word, deck);
    return Permutation(std::move(deck));
}

void sample_shuffle_into(RandomStream& rng, std::span<int> deck)
{
    const int n = static_cast<int>(deck.size());
    int cut = 0;
    for (int done = 0; done < n; done += 64) {
        std::uint64_t bits = rng.next_u64();
        int take = std::min(64, n - done);
        if (take < 64)
            bits &= (1ULL << take) - 1;
        cut += std::popcount(bits);
    }
    int m1 = cut, m2 = n - cut;
    for (int pos = n - 1; pos >= 0; --pos) {
        std::uint64_t r = rng.below(static_cast<std::uint64_t>(m1 + m2));
        if (r < static_cast<std::uint64_t>(m1))
            deck[pos] = m1--;
        else
            deck[pos] = cut + m2--;
    }
}

Permutation sample_shuffle(int n, RandomStream& rng)
{
    check_deck_size(n);
    std::vector<int> deck(n);
    sample_shuffle_into(rng, deck);
    return Permutation(std::move(deck));
}

void for_each_shuffle(int n, std::uint64_t first, std::uint64_t last,
                      const std::function<void(const ShuffleOutcome&)>& visit, int max_n)
{
    check_enumerable(n, max_n);
    const std::uint64_t total = 1ULL << n;
    last = std::min(last, total);
    std::vector<int> deck(n);
    for (std::uint64_t w = first; w < last; ++w) {
        apply_interleaving(w, deck);
        int cut = n - std::popcount(w);
        visit(ShuffleOutcome{cut, w, Permutation(deck), DyadicProb{1, static_cast<unsigned long>(n)}});
    }
}

std::vector<ShuffleOutcome> enumerate_shuffles(int n, int max_n)
{
    check_enumerable(n, max_n);
    std::vector<ShuffleOutcome> out;
    out.reserve(std::size_t{1} << n);
    for_each_shuffle(
        n, 0, 1ULL << n, [&](const ShuffleOutcome& o) { out.push_back(o); }, max_n);
    return out;
}

} // namespace riffle
