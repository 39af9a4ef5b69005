#include "sdde/rng.hpp"

#include <cmath>

namespace sdde {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
    const std::uint64_t prod = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(prod >> 32);
    lo = static_cast<std::uint32_t>(prod);
}

inline Philox4x32::Block round_once(const Philox4x32::Block& c, std::uint32_t k0, std::uint32_t k1) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, c[0], hi0, lo0);
    mulhilo(kMul1, c[2], hi1, lo1);
    return {hi1 ^ c[1] ^ k0, lo1, hi0 ^ c[3] ^ k1, lo0};
}

}  // namespace

Philox4x32::Block Philox4x32::bijection(const Block& counter, std::uint32_t key0, std::uint32_t key1) {
    Block c = counter;
    std::uint32_t k0 = key0, k1 = key1;
    for (int r = 0; r < 10; ++r) {
        if (r > 0) {
            k0 += kWeyl0;
            k1 += kWeyl1;
        }
        c = round_once(c, k0, k1);
    }
    return c;
}

Philox4x32::Philox4x32(std::uint64_t key, std::uint32_t stream_hi, std::uint32_t stream_lo)
    : key0_(static_cast<std::uint32_t>(key)),
      key1_(static_cast<std::uint32_t>(key >> 32)),
      stream_hi_(stream_hi),
      stream_lo_(stream_lo) {}

Philox4x32::Block Philox4x32::next_block() {
    const Block counter = {static_cast<std::uint32_t>(draws_), static_cast<std::uint32_t>(draws_ >> 32),
                           stream_lo_, stream_hi_};
    ++draws_;
    return bijection(counter, key0_, key1_);
}

std::uint32_t Philox4x32::next_u32() {
    if (buffered_ == 0) {
        buffer_ = next_block();
        buffered_ = 4;
    }
    return buffer_[4 - buffered_--];
}

std::uint64_t Philox4x32::next_u64() {
    const std::uint64_t hi = next_u32();
    return (hi << 32) | next_u32();
}

double Philox4x32::next_double() {
    // (x + 0.5) / 2^32 lies strictly inside (0, 1), so log() below is safe.
    return (static_cast<double>(next_u32()) + 0.5) * 0x1p-32;
}

double Philox4x32::next_gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_gauss_;
    }
    const double u1 = next_double();
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    spare_gauss_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

}  // namespace sdde
