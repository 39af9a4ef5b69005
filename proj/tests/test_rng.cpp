#include <cmath>
#include <vector>

#include <doctest.h>

#include "sdde/rng.hpp"
#include "sdde/stats.hpp"

using namespace sdde;

// Published known-answer vectors for the Philox4x32-10 block function.
TEST_CASE("philox4x32-10 known-answer vectors") {
    using Block = Philox4x32::Block;

    Block out = Philox4x32::bijection({0u, 0u, 0u, 0u}, 0u, 0u);
    CHECK(out[0] == 0x6627e8d5u);
    CHECK(out[1] == 0xe169c58du);
    CHECK(out[2] == 0xbc57ac4cu);
    CHECK(out[3] == 0x9b00dbd8u);

    out = Philox4x32::bijection({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                                0xffffffffu, 0xffffffffu);
    CHECK(out[0] == 0x408f276du);
    CHECK(out[1] == 0x41c83b0eu);
    CHECK(out[2] == 0xa20bc7c6u);
    CHECK(out[3] == 0x6d5451fdu);

    out = Philox4x32::bijection({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                                0xa4093822u, 0x299f31d0u);
    CHECK(out[0] == 0xd16cfe09u);
    CHECK(out[1] == 0x94fdccebu);
    CHECK(out[2] == 0x5001e420u);
    CHECK(out[3] == 0x24126ea1u);
}

TEST_CASE("streams are deterministic and replayable") {
    Philox4x32 a = rng_stream(42, StreamPurpose::wiener, 3);
    Philox4x32 b = rng_stream(42, StreamPurpose::wiener, 3);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u32() == b.next_u32());

    Philox4x32 c = rng_stream(42, StreamPurpose::wiener, 4);
    Philox4x32 d = rng_stream(42, StreamPurpose::stationary_init, 3);
    Philox4x32 e = rng_stream(43, StreamPurpose::wiener, 3);
    Philox4x32 base = rng_stream(42, StreamPurpose::wiener, 3);
    bool all_equal_c = true, all_equal_d = true, all_equal_e = true;
    for (int i = 0; i < 16; ++i) {
        const std::uint32_t r = base.next_u32();
        all_equal_c &= (c.next_u32() == r);
        all_equal_d &= (d.next_u32() == r);
        all_equal_e &= (e.next_u32() == r);
    }
    CHECK_FALSE(all_equal_c);
    CHECK_FALSE(all_equal_d);
    CHECK_FALSE(all_equal_e);
}

TEST_CASE("uniform doubles live strictly inside (0,1) with mean 1/2") {
    Philox4x32 rng = rng_stream(7, StreamPurpose::generic, 0);
    const int n = 100000;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const double u = rng.next_double();
        REQUIRE(u > 0.0);
        REQUIRE(u < 1.0);
        sum += u;
    }
    const double mean = sum / n;
    // SE of the mean of U(0,1) is 1/sqrt(12 n).
    CHECK(std::abs(mean - 0.5) < 3.0 / std::sqrt(12.0 * n));
}

TEST_CASE("gaussian moments match N(0,1)") {
    Philox4x32 rng = rng_stream(11, StreamPurpose::generic, 0);
    const int n = 200000;
    std::vector<double> xs(n);
    for (int i = 0; i < n; ++i) xs[i] = rng.next_gaussian();
    const MeanSE m = mean_se(xs);
    CHECK(std::abs(m.mean) < 3.0 * m.se);
    const double var = sample_variance(xs);
    CHECK(std::abs(var - 1.0) < 3.0 * std::sqrt(2.0 / n));
    double kurt = 0.0;
    for (double x : xs) kurt += x * x * x * x;
    kurt /= n;
    // Fourth moment of N(0,1) is 3; its MC standard error is sqrt(96/n).
    CHECK(std::abs(kurt - 3.0) < 3.0 * std::sqrt(96.0 / n));
}

TEST_CASE("distinct channels are empirically uncorrelated") {
    Philox4x32 a = rng_stream(123, StreamPurpose::wiener, 0);
    Philox4x32 b = rng_stream(123, StreamPurpose::wiener, 1);
    const int n = 100000;
    double sum_ab = 0.0;
    for (int i = 0; i < n; ++i) sum_ab += a.next_gaussian() * b.next_gaussian();
    const double corr = sum_ab / n;
    CHECK(std::abs(corr) < 3.0 / std::sqrt(static_cast<double>(n)));
}
