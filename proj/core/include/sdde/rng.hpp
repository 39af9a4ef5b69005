#pragma once

#include <array>
#include <cstdint>

namespace sdde {

/// Philox4x32-10 counter-based generator. A stream is identified by
/// (key, stream id); successive blocks are obtained by bumping the
/// 64-bit draw counter. Streams with distinct ids are statistically
/// independent and may be consumed in any order, which is what makes
/// per-trial / per-channel reproducibility cheap.
class Philox4x32 {
  public:
    using Block = std::array<std::uint32_t, 4>;

    Philox4x32(std::uint64_t key, std::uint32_t stream_hi, std::uint32_t stream_lo);

    /// Raw keyed block function (pure; exposed for known-answer tests).
    static Block bijection(const Block& counter, std::uint32_t key0, std::uint32_t key1);

    std::uint32_t next_u32();
    std::uint64_t next_u64();

    /// Uniform draw strictly inside (0, 1).
    double next_double();

    /// Standard normal via Box-Muller on two uniform words; the spare
    /// value is cached, so draws come in deterministic pairs.
    double next_gaussian();

  private:
    Block next_block();

    std::uint32_t key0_, key1_;
    std::uint32_t stream_hi_, stream_lo_;
    std::uint64_t draws_ = 0;
    Block buffer_{};
    int buffered_ = 0;  // unread words left in buffer_
    double spare_gauss_ = 0.0;
    bool has_spare_ = false;
};

/// Stream roles, kept disjoint so that e.g. Wiener increments and
/// stationary initial draws never alias for the same seed/channel.
enum class StreamPurpose : std::uint32_t {
    wiener = 0,
    stationary_init = 1,
    generic = 2,
};

/// Stream keyed by (seed, purpose, channel). Trial identity is folded
/// into the seed by callers (seed = base_seed + trial index).
inline Philox4x32 rng_stream(std::uint64_t seed, StreamPurpose purpose, std::uint32_t channel) {
    return Philox4x32(seed, static_cast<std::uint32_t>(purpose), channel);
}

}  // namespace sdde
