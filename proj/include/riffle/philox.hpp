#ifndef RIFFLE_PHILOX_HPP
#define RIFFLE_PHILOX_HPP

#include <array>
#include <cstdint>

namespace riffle
{

/// Philox4x32-10 block function (Salmon et al., SC'11).
///
/// Maps a 128-bit counter and a 64-bit key to 128 pseudo-random bits.
/// Stateless, so any block of any stream can be generated independently.
struct Philox4x32
{
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static constexpr std::uint32_t kMul0 = 0xD2511F53;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85;
    static constexpr int kRounds = 10;

    static constexpr Counter generate(Counter ctr, Key key)
    {
        for (int r = 0; r < kRounds; ++r) {
            if (r > 0) {
                key[0] += kWeyl0;
                key[1] += kWeyl1;
            }
            std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
            std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
            ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
                   static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
        }
        return ctr;
    }
};

/// One reproducible random stream identified by (seed, stream id).
///
/// Draw number i of stream (seed, id) is the (i mod 2)-th 64-bit half of
/// Philox block counter (id, i / 2) under key seed. Streams never overlap,
/// so per-sample streams keyed by sample index make results independent of
/// how samples are scheduled across workers.
class RandomStream
{
  public:
    RandomStream(std::uint64_t seed, std::uint64_t stream_id) : seed_(seed), stream_(stream_id) {}

    std::uint64_t next_u64()
    {
        if (have_ == 0) {
            Philox4x32::Counter ctr{static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32),
                                    static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32)};
            Philox4x32::Key key{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32)};
            buf_ = Philox4x32::generate(ctr, key);
            ++block_;
            have_ = 2;
        }
        std::size_t i = 2 - have_--;
        return (std::uint64_t{buf_[2 * i + 1]} << 32) | buf_[2 * i];
    }

    /// Value in [0, bound) from exactly one 64-bit draw (multiply-high map;
    /// bias below bound / 2^64).
    std::uint64_t below(std::uint64_t bound)
    {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
    }

    std::uint64_t draws() const { return 2 * block_ - have_; }

  private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t block_ = 0;
    Philox4x32::Counter buf_{};
    std::size_t have_ = 0;
};

} // namespace riffle

#endif
